"""Vietoris-Rips complexes, their filtrations, and coincident-point quotients."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .complex import LabeledComplex, SimplicialComplex
from .errors import EmptyCloud, InvalidPointCloud, NonInjective

DEFAULT_MAX_DIM = 2


def pairwise_distances(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Euclidean distance matrix between the rows of ``P`` and ``Q``.

    Squares are accumulated coordinate by coordinate, left to right; the
    verification oracles rely on reproducing the same values bit for bit.
    """
    P = np.asarray(P, dtype=float)
    Q = np.asarray(Q, dtype=float)
    acc = np.zeros((P.shape[0], Q.shape[0]))
    for j in range(P.shape[1]):
        diff = P[:, j, None] - Q[None, :, j]
        acc += diff * diff
    return np.sqrt(acc)


@dataclass(frozen=True)
class PointCloud:
    """An ordered, nonempty list of points in R^d stored as an (n, d) array."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.size == 0:
            raise EmptyCloud("point cloud is empty")
        if pts.ndim == 1:
            pts = pts[:, None]
        if pts.ndim != 2 or pts.shape[1] < 1:
            raise InvalidPointCloud("points must form an (n, d) array with d >= 1")
        if not np.all(np.isfinite(pts)):
            raise InvalidPointCloud("point coordinates must be finite")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def ambient_dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]

    def __eq__(self, other):
        if not isinstance(other, PointCloud):
            return NotImplemented
        return self.points.shape == other.points.shape and bool(
            np.array_equal(self.points, other.points)
        )

    __hash__ = None

    @cached_property
    def distances(self) -> np.ndarray:
        return pairwise_distances(self.points, self.points)

    def has_duplicates(self) -> bool:
        return len(np.unique(self.points, axis=0)) != len(self)


@dataclass(frozen=True)
class RipsParams:
    scale: float
    max_dim: int = DEFAULT_MAX_DIM

    def __post_init__(self):
        if not np.isfinite(self.scale) or self.scale < 0:
            raise ValueError(f"scale must be a finite nonnegative number, got {self.scale}")
        if int(self.max_dim) != self.max_dim or self.max_dim < 0:
            raise ValueError(f"max_dim must be a nonnegative integer, got {self.max_dim}")


def rips_simplices(dist: np.ndarray, scale: float, max_dim: int) -> SimplicialComplex:
    """Clique complex of the threshold graph ``dist <= scale``, capped at ``max_dim``.

    No injectivity check: coincident points simply become vertices at
    distance zero.
    """
    n = dist.shape[0]
    adj = dist <= scale
    # higher-indexed neighbours only, so each clique is generated once in sorted order
    up = [frozenset(np.flatnonzero(adj[i, i + 1:]) + i + 1) for i in range(n)]
    faces = [[(i,) for i in range(n)]]
    frontier = [((i,), up[i]) for i in range(n)]
    for _ in range(max_dim):
        nxt = []
        for clique, cands in frontier:
            for w in sorted(cands):
                nxt.append((clique + (int(w),), cands & up[w]))
        if not nxt:
            break
        faces.append(sorted(c for c, _ in nxt))
        frontier = nxt
    return SimplicialComplex(tuple(tuple(g) for g in faces))


def build_rips(cloud: PointCloud, params: RipsParams) -> LabeledComplex:
    """Vietoris-Rips complex: a vertex set spans a simplex iff all its pairwise
    distances are at most ``params.scale``. Vertex ``i`` is point ``i``."""
    if cloud.has_duplicates():
        raise NonInjective(
            "point cloud has coincident points; quotient them first (quotient_coincident)"
        )
    K = rips_simplices(cloud.distances, params.scale, params.max_dim)
    return LabeledComplex(
        K, {i: tuple(p) for i, p in enumerate(cloud.points)}, cloud.ambient_dim
    )


def critical_values(cloud: PointCloud, max_dim: int = DEFAULT_MAX_DIM) -> list[float]:
    """Sorted distinct pairwise distances, the scales where the complex can change.

    ``max_dim`` is accepted for interface symmetry; edges appear exactly at
    pairwise distances regardless of the cap.
    """
    n = len(cloud)
    if n < 2:
        return []
    iu = np.triu_indices(n, k=1)
    return [float(x) for x in np.unique(cloud.distances[iu])]


@dataclass(frozen=True)
class Filtration:
    """The Vietoris-Rips filtration of a cloud, capped at ``max_dim``.

    The complex is constant on each ``[c_i, c_{i+1})``; scales below the first
    critical value give the bare vertex set.
    """

    cloud: PointCloud
    max_dim: int = DEFAULT_MAX_DIM
    critical_values: tuple[float, ...] = field(init=False)

    def __post_init__(self):
        if self.max_dim < 0:
            raise ValueError("max_dim must be nonnegative")
        if self.cloud.has_duplicates():
            raise NonInjective("filtrations need pairwise distinct points")
        object.__setattr__(self, "critical_values", tuple(critical_values(self.cloud, self.max_dim)))

    @property
    def ambient_dim(self) -> int:
        return self.cloud.ambient_dim

    def complex_at(self, alpha: float) -> LabeledComplex:
        return build_rips(self.cloud, RipsParams(alpha, self.max_dim))


@dataclass(frozen=True)
class QuotientResult:
    cloud: PointCloud
    multiplicity: dict[int, int]
    class_map: tuple[int, ...]

    def classes(self) -> list[list[int]]:
        """Original indices grouped by class; the first entry is the representative."""
        out: list[list[int]] = [[] for _ in range(len(self.cloud))]
        for i, q in enumerate(self.class_map):
            out[q].append(i)
        return out


def quotient_coincident(cloud: PointCloud) -> QuotientResult:
    """Identify points with exactly equal coordinates, keeping first occurrences."""
    first: dict[tuple, int] = {}
    class_map = []
    reps = []
    for p in cloud.points:
        key = tuple(p.tolist())
        if key not in first:
            first[key] = len(reps)
            reps.append(p)
        class_map.append(first[key])
    multiplicity = {q: 0 for q in range(len(reps))}
    for q in class_map:
        multiplicity[q] += 1
    return QuotientResult(PointCloud(np.array(reps)), multiplicity, tuple(class_map))
