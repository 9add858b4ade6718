"""Abstract simplicial complexes and coordinate-labeled complexes.

A simplex is a strictly increasing tuple of nonnegative vertex ids. A
:class:`SimplicialComplex` stores its faces grouped by dimension, each group
sorted lexicographically, so per-dimension enumeration is a lookup.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    AmbientDimMismatch,
    EmptyComplex,
    InvalidPointCloud,
    InvalidSimplex,
    NonInjective,
    NotDownwardClosed,
    ParseError,
    UnknownVertexInSimplex,
)

Simplex = tuple[int, ...]
Point = tuple[float, ...]


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """Normalise an iterable of vertex ids into a sorted simplex tuple."""
    try:
        items = [int(v) for v in vertices]
    except (TypeError, ValueError) as exc:
        raise InvalidSimplex(f"simplex {vertices!r} has non-integer vertices") from exc
    if not items:
        raise InvalidSimplex("a simplex needs at least one vertex")
    if len(set(items)) != len(items):
        raise InvalidSimplex(f"simplex {items} repeats a vertex")
    if min(items) < 0:
        raise InvalidSimplex(f"simplex {items} has a negative vertex id")
    return tuple(sorted(items))


def _check_simplex(s) -> None:
    if not isinstance(s, tuple) or not s:
        raise InvalidSimplex(f"{s!r} is not a nonempty tuple")
    prev = -1
    for v in s:
        if not isinstance(v, (int, np.integer)) or v <= prev:
            raise InvalidSimplex(f"{s!r} is not a strictly increasing tuple of ids >= 0")
        prev = v


def boundary_faces(s: Simplex) -> list[Simplex]:
    """The codimension-one faces of ``s`` (empty for a vertex)."""
    if len(s) == 1:
        return []
    return [s[:i] + s[i + 1:] for i in range(len(s))]


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite, downward-closed family of simplices.

    ``faces_by_dim[k]`` holds the k-simplices in sorted order. Instances are
    immutable. The empty complex only arises as a link and is flagged by
    :attr:`is_empty`; the public constructors reject it.
    """

    faces_by_dim: tuple[tuple[Simplex, ...], ...]

    def __post_init__(self):
        groups = tuple(tuple(g) for g in self.faces_by_dim)
        object.__setattr__(self, "faces_by_dim", groups)
        if groups and not groups[-1]:
            raise InvalidSimplex("top dimension has no faces")
        members = set()
        for k, group in enumerate(groups):
            for s in group:
                _check_simplex(s)
                if len(s) != k + 1:
                    raise InvalidSimplex(f"{s} listed under dimension {k}")
            if list(group) != sorted(set(group)):
                raise InvalidSimplex(f"dimension {k} faces are not sorted and unique")
            members.update(group)
        for group in groups[1:]:
            for s in group:
                for face in boundary_faces(s):
                    if face not in members:
                        raise NotDownwardClosed(f"face {face} of {s} is missing")

    @classmethod
    def from_simplices(cls, simplices: Iterable[Sequence[int]]) -> "SimplicialComplex":
        """Build from an already downward-closed collection (validated)."""
        by_dim: dict[int, set[Simplex]] = {}
        for s in simplices:
            s = make_simplex(s)
            by_dim.setdefault(len(s) - 1, set()).add(s)
        if not by_dim:
            raise EmptyComplex("no simplices given")
        top = max(by_dim)
        return cls(tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(top + 1)))

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(())

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(itertools.chain.from_iterable(self.faces_by_dim))

    @property
    def is_empty(self) -> bool:
        return not self.faces_by_dim

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 for the empty complex."""
        return len(self.faces_by_dim) - 1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        if self.is_empty:
            return ()
        return tuple(s[0] for s in self.faces_by_dim[0])

    def k_simplices(self, k: int) -> tuple[Simplex, ...]:
        if k < 0:
            raise ValueError("k must be nonnegative")
        if k >= len(self.faces_by_dim):
            return ()
        return self.faces_by_dim[k]

    def simplices(self) -> Iterable[Simplex]:
        return itertools.chain.from_iterable(self.faces_by_dim)

    def __contains__(self, s) -> bool:
        return tuple(s) in self._members

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self):
        return iter(self.simplices())

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.faces_by_dim)

    def maximal_faces(self) -> list[Simplex]:
        """Faces that are not a proper face of any other face."""
        covered = set()
        for group in self.faces_by_dim[1:]:
            for s in group:
                covered.update(boundary_faces(s))
        return [s for s in self.simplices() if s not in covered]

    def skeleton(self, k: int) -> "SimplicialComplex":
        """All faces of dimension at most ``k``."""
        return SimplicialComplex(self.faces_by_dim[: k + 1])

    def relabel(self, mapping: Mapping[int, int]) -> "SimplicialComplex":
        """Apply an injective vertex renaming."""
        images = [mapping[v] for v in self.vertices]
        if len(set(images)) != len(images):
            raise InvalidSimplex("vertex relabeling is not injective")
        return SimplicialComplex.from_simplices(
            [mapping[v] for v in s] for s in self.simplices()
        )


def closure(generators: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Smallest simplicial complex containing every generator."""
    faces: set[Simplex] = set()
    for g in generators:
        g = make_simplex(g)
        if g in faces:
            continue
        for r in range(1, len(g) + 1):
            faces.update(itertools.combinations(g, r))
    if not faces:
        raise EmptyComplex("cannot build a complex from an empty generator list")
    return SimplicialComplex.from_simplices(faces)


def k_simplices(K: SimplicialComplex, k: int) -> set[Simplex]:
    return set(K.k_simplices(k))


@dataclass(frozen=True)
class LabeledComplex:
    """A simplicial complex together with a vertex -> R^d coordinate map.

    Coordinates must be injective unless ``allow_coincident`` is set; that flag
    exists for inputs that are about to be quotiented or collapsed.
    """

    complex: SimplicialComplex
    coords: Mapping[int, Point]
    ambient_dim: int
    allow_coincident: bool = field(default=False, compare=False)

    def __post_init__(self):
        K = self.complex
        if K.is_empty:
            raise EmptyComplex("labeled complexes must be nonempty")
        d = int(self.ambient_dim)
        if d < 1:
            raise InvalidPointCloud("ambient dimension must be at least 1")
        object.__setattr__(self, "ambient_dim", d)
        coords = {}
        for v, p in self.coords.items():
            p = tuple(float(x) for x in p)
            if len(p) != d:
                raise AmbientDimMismatch(f"vertex {v} has {len(p)} coordinates, expected {d}")
            if not all(math.isfinite(x) for x in p):
                raise InvalidPointCloud(f"vertex {v} has non-finite coordinates")
            coords[int(v)] = p
        if set(coords) != set(K.vertices):
            raise UnknownVertexInSimplex("coordinate map must cover exactly the vertex set")
        object.__setattr__(self, "coords", coords)
        if not self.allow_coincident and not self.is_injective:
            raise NonInjective("two vertices share identical coordinates")

    @classmethod
    def from_points(cls, points, simplices=None, **kwargs) -> "LabeledComplex":
        """Label vertex ``i`` with ``points[i]``; default complex is the bare vertex set."""
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 2:
            raise InvalidSimplex("points must be a 2-d array")
        gens = [(i,) for i in range(len(pts))]
        if simplices is not None:
            gens += [tuple(s) for s in simplices]
        K = closure(gens)
        return cls(K, {i: tuple(p) for i, p in enumerate(pts)}, pts.shape[1], **kwargs)

    @property
    def is_injective(self) -> bool:
        return len(set(self.coords.values())) == len(self.coords)

    @property
    def dim(self) -> int:
        return self.complex.dim

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.complex.vertices

    @cached_property
    def points(self) -> np.ndarray:
        """Coordinates as an (n, d) array, rows in sorted vertex order."""
        return np.array([self.coords[v] for v in self.vertices], dtype=float).reshape(
            len(self.vertices), self.ambient_dim
        )

    @cached_property
    def row_of(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _rows_cache(self) -> dict:
        return {}

    def simplex_rows(self, k: int) -> np.ndarray:
        """The k-simplices as an (n_k, k+1) array of rows into :attr:`points`."""
        cache = self._rows_cache
        if k not in cache:
            row = self.row_of
            faces = self.complex.k_simplices(k)
            cache[k] = np.array([[row[v] for v in s] for s in faces], dtype=np.intp).reshape(
                len(faces), k + 1
            )
        return cache[k]

    def relabel(self, mapping: Mapping[int, int]) -> "LabeledComplex":
        """Rename vertices, carrying coordinates along."""
        return LabeledComplex(
            self.complex.relabel(mapping),
            {mapping[v]: p for v, p in self.coords.items()},
            self.ambient_dim,
            allow_coincident=self.allow_coincident,
        )

    def with_coords(self, coords: Mapping[int, Point]) -> "LabeledComplex":
        return LabeledComplex(self.complex, coords, self.ambient_dim,
                              allow_coincident=self.allow_coincident)


def is_isomorphic(A: LabeledComplex, B: LabeledComplex) -> bool:
    """Whether a vertex bijection matching coordinates exactly carries A onto B."""
    if A.ambient_dim != B.ambient_dim:
        raise AmbientDimMismatch(f"ambient dimensions differ: {A.ambient_dim} vs {B.ambient_dim}")
    if not (A.is_injective and B.is_injective):
        raise NonInjective("isomorphism is only defined for injective coordinate maps")
    if len(A.vertices) != len(B.vertices) or len(A.complex) != len(B.complex):
        return False
    by_point = {p: w for w, p in B.coords.items()}
    phi = {}
    for v, p in A.coords.items():
        w = by_point.get(p)
        if w is None:
            return False
        phi[v] = w
    return all(tuple(sorted(phi[v] for v in s)) in B.complex for s in A.complex.simplices())


# -- JSON document format ----------------------------------------------------

def to_document(A: LabeledComplex) -> dict:
    """Serialise to the complex document format, listing maximal faces only."""
    return {
        "ambient_dim": A.ambient_dim,
        "vertices": [{"id": v, "coords": list(A.coords[v])} for v in A.vertices],
        "simplices": [list(s) for s in A.complex.maximal_faces()],
    }


def from_document(doc, *, allow_coincident: bool = False) -> LabeledComplex:
    """Parse a complex document; the listed simplices are closed downward."""
    if not isinstance(doc, dict):
        raise ParseError("complex document must be a JSON object")
    try:
        d = doc["ambient_dim"]
        raw_vertices = doc["vertices"]
        raw_simplices = doc.get("simplices", [])
    except KeyError as exc:
        raise ParseError(f"missing key {exc}") from exc
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ParseError("ambient_dim must be a positive integer")
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise ParseError("vertices must be a nonempty list")
    coords = {}
    for entry in raw_vertices:
        try:
            vid, pt = entry["id"], entry["coords"]
        except (TypeError, KeyError) as exc:
            raise ParseError(f"bad vertex entry {entry!r}") from exc
        if not isinstance(vid, int) or isinstance(vid, bool) or vid < 0:
            raise ParseError(f"vertex id {vid!r} is not a nonnegative integer")
        if vid in coords:
            raise ParseError(f"vertex id {vid} listed twice")
        if not isinstance(pt, list) or not all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in pt
        ):
            raise ParseError(f"coordinates of vertex {vid} must be a list of numbers")
        if len(pt) != d:
            raise ParseError(f"vertex {vid} has {len(pt)} coordinates, expected {d}")
        coords[vid] = tuple(float(x) for x in pt)
    if not isinstance(raw_simplices, list):
        raise ParseError("simplices must be a list")
    gens = [(v,) for v in coords]
    for s in raw_simplices:
        if not isinstance(s, list) or not s:
            raise ParseError(f"bad simplex {s!r}")
        unknown = [v for v in s if v not in coords]
        if unknown:
            raise UnknownVertexInSimplex(f"simplex {s} references unknown vertex {unknown[0]}")
        try:
            gens.append(make_simplex(s))
        except InvalidSimplex as exc:
            raise ParseError(str(exc)) from exc
    try:
        return LabeledComplex(closure(gens), coords, d, allow_coincident=allow_coincident)
    except InvalidSimplex as exc:
        raise ParseError(str(exc)) from exc
