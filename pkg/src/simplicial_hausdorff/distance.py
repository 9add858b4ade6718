"""Simplicial Hausdorff distance and its filtered and classical counterparts.

Distances are plain floats; ``math.inf`` marks the extended value, which arises
when some occupied dimension of one complex has no simplices in the other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .complex import LabeledComplex, Point, Simplex
from .errors import AmbientDimMismatch, MaxDimMismatch
from .rips import Filtration, pairwise_distances

# bound on the (block, k+1, m_k) temporary built per chunk of outer simplices
_CHUNK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class Witness:
    """Where the directed distance is attained: ``d(f(v), g(w)) == value``."""

    k: int
    sigma: Simplex
    tau: Simplex
    v: int
    w: int


@dataclass(frozen=True)
class DirectedResult:
    value: float
    witness: Optional[Witness]


def _check_dims(A: LabeledComplex, B: LabeledComplex) -> None:
    if A.ambient_dim != B.ambient_dim:
        raise AmbientDimMismatch(
            f"complexes live in R^{A.ambient_dim} and R^{B.ambient_dim}"
        )


def _directed_in_dim(D: np.ndarray, S: np.ndarray, T: np.ndarray):
    """max over rows of S, min over rows of T, of max_{v in s} min_{w in t} D[v, w].

    Returns (value, sigma index, tau index); ties go to the lowest index.
    """
    # G[v, t] = min over vertices w of tau_t of D[v, w]
    G = D[:, T].min(axis=2)
    k1 = S.shape[1]
    block = max(1, _CHUNK_ELEMENTS // max(1, k1 * T.shape[0]))
    best, best_s, best_t = -1.0, -1, -1
    for start in range(0, S.shape[0], block):
        H = G[S[start:start + block]].max(axis=1)
        t_idx = H.argmin(axis=1)
        row_min = H[np.arange(H.shape[0]), t_idx]
        s_local = int(row_min.argmax())
        if row_min[s_local] > best:
            best = float(row_min[s_local])
            best_s, best_t = start + s_local, int(t_idx[s_local])
    return best, best_s, best_t


def directed_distance(A: LabeledComplex, B: LabeledComplex) -> DirectedResult:
    """Directed simplicial distance from ``A`` to ``B``.

    The max over dimensions k occupied in ``A``, over k-simplices sigma of
    ``A``, of the min over k-simplices tau of ``B`` of the largest
    nearest-vertex distance from sigma's vertices into tau.
    """
    _check_dims(A, B)
    D = pairwise_distances(A.points, B.points)
    best = -1.0
    found = None
    for k in range(A.dim + 1):
        S = A.simplex_rows(k)
        T = B.simplex_rows(k)
        if T.shape[0] == 0:
            return DirectedResult(math.inf, None)
        value, s, t = _directed_in_dim(D, S, T)
        if value > best:
            best, found = value, (k, s, t)
    k, s, t = found
    srow, trow = A.simplex_rows(k)[s], B.simplex_rows(k)[t]
    sub = D[np.ix_(srow, trow)]
    vi = int(sub.min(axis=1).argmax())
    wi = int(sub[vi].argmin())
    witness = Witness(
        k=k,
        sigma=A.complex.k_simplices(k)[s],
        tau=B.complex.k_simplices(k)[t],
        v=A.vertices[srow[vi]],
        w=B.vertices[trow[wi]],
    )
    return DirectedResult(best, witness)


def simplicial_hausdorff(A: LabeledComplex, B: LabeledComplex) -> float:
    return max(directed_distance(A, B).value, directed_distance(B, A).value)


def witness_value(A: LabeledComplex, B: LabeledComplex, witness: Witness) -> float:
    """Distance between the witness vertices, computed the same way as the engine."""
    p = np.asarray([A.coords[witness.v]])
    q = np.asarray([B.coords[witness.w]])
    return float(pairwise_distances(p, q)[0, 0])


def _as_points(P) -> np.ndarray:
    arr = np.asarray(P, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise ValueError("point sets must be nonempty (n, d) arrays")
    return arr


def classical_directed_hausdorff(P, Q) -> float:
    """max over p in P of the distance from p to its nearest point of Q."""
    P, Q = _as_points(P), _as_points(Q)
    if P.shape[1] != Q.shape[1]:
        raise AmbientDimMismatch(f"point sets live in R^{P.shape[1]} and R^{Q.shape[1]}")
    return float(pairwise_distances(P, Q).min(axis=1).max())


def classical_hausdorff(P, Q) -> float:
    return max(classical_directed_hausdorff(P, Q), classical_directed_hausdorff(Q, P))


def vertex_points(A: LabeledComplex) -> list[Point]:
    return [A.coords[v] for v in A.vertices]


# -- filtered complexes ------------------------------------------------------

def _check_filtrations(FA: Filtration, FB: Filtration) -> None:
    if FA.ambient_dim != FB.ambient_dim:
        raise AmbientDimMismatch(
            f"filtrations live in R^{FA.ambient_dim} and R^{FB.ambient_dim}"
        )
    if FA.max_dim != FB.max_dim:
        raise MaxDimMismatch(f"max_dim differs: {FA.max_dim} vs {FB.max_dim}")


def filtration_levels(FA: Filtration, FB: Filtration) -> list[float]:
    """One scale per constancy interval of both filtrations.

    0 stands for the vertices-only level below the first critical value; each
    merged critical value stands for the interval it opens.
    """
    return sorted({0.0, *FA.critical_values, *FB.critical_values})


def filtered_directed_profile(FA: Filtration, FB: Filtration) -> list[tuple[float, float]]:
    """(alpha, directed distance at alpha) for every representative level."""
    _check_filtrations(FA, FB)
    return [
        (alpha, directed_distance(FA.complex_at(alpha), FB.complex_at(alpha)).value)
        for alpha in filtration_levels(FA, FB)
    ]


def filtered_directed(FA: Filtration, FB: Filtration) -> float:
    _check_filtrations(FA, FB)
    best = 0.0
    for alpha in filtration_levels(FA, FB):
        best = max(best, directed_distance(FA.complex_at(alpha), FB.complex_at(alpha)).value)
        if best == math.inf:
            break
    return best


def filtered_hausdorff(FA: Filtration, FB: Filtration) -> float:
    return max(filtered_directed(FA, FB), filtered_directed(FB, FA))
