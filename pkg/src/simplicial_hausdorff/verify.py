"""Definition-level oracles.

These are deliberately naive: they walk the quantifiers of the closeness
definition literally and compute homology by dense elimination, so they can
catch mistakes in the optimised code paths.
"""
from __future__ import annotations

import math

from .complex import LabeledComplex, SimplicialComplex, boundary_faces
from .errors import AmbientDimMismatch, EmptyComplex, NonPositiveEps, UnsupportedDimension

MAX_BETTI_DIM = 2


def _dist(p, q) -> float:
    # same accumulation order as rips.pairwise_distances
    acc = 0.0
    for a, b in zip(p, q):
        diff = a - b
        acc += diff * diff
    return math.sqrt(acc)


def eps_close_predicate(A: LabeledComplex, B: LabeledComplex, eps: float) -> bool:
    """Is every k-simplex of A matched by some k-simplex of B with all of its
    vertices strictly within ``eps`` of a vertex of that partner?"""
    if A.ambient_dim != B.ambient_dim:
        raise AmbientDimMismatch("ambient dimensions differ")
    if not eps > 0:
        raise NonPositiveEps(f"eps must be positive, got {eps}")
    f, g = A.coords, B.coords
    for k in range(A.dim + 1):
        partners = B.complex.k_simplices(k)
        for sigma in A.complex.k_simplices(k):
            if not any(
                all(any(_dist(f[v], g[w]) < eps for w in tau) for v in sigma)
                for tau in partners
            ):
                return False
    return True


def directed_by_sweep(A: LabeledComplex, B: LabeledComplex) -> float:
    """Infimum of the eps for which A is eps-close to B, found by searching the
    finite set of vertex-to-vertex distances.

    The predicate only changes when eps crosses one of those distances, so the
    infimum is the smallest candidate c for which the predicate holds just
    above c (at the next representable float).
    """
    if A.ambient_dim != B.ambient_dim:
        raise AmbientDimMismatch("ambient dimensions differ")
    candidates = sorted({_dist(p, q) for p in A.coords.values() for q in B.coords.values()})
    if not eps_close_predicate(A, B, math.inf):
        return math.inf
    # the predicate is monotone in eps, so bisect for the first passing candidate
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if eps_close_predicate(A, B, math.nextafter(candidates[mid], math.inf)):
            hi = mid
        else:
            lo = mid + 1
    return candidates[lo]


def _gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix given as a list of row bitmasks."""
    rank = 0
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top in pivots:
                row ^= pivots[top]
            else:
                pivots[top] = row
                rank += 1
                break
    return rank


def boundary_rank(K: SimplicialComplex, k: int) -> int:
    """Rank of the boundary map from k-chains to (k-1)-chains over GF(2)."""
    if k <= 0:
        return 0
    faces = K.k_simplices(k)
    if not faces:
        return 0
    index = {s: i for i, s in enumerate(K.k_simplices(k - 1))}
    rows = []
    for s in faces:
        mask = 0
        for face in boundary_faces(s):
            mask |= 1 << index[face]
        rows.append(mask)
    return _gf2_rank(rows)


def betti_gf2(K: SimplicialComplex, max_k: int) -> tuple[int, ...]:
    """Betti numbers b_0..b_max_k over GF(2).

    ``b_k`` uses the (k+1)-simplices of ``K`` when present, so pass a complex
    that includes the dimension above ``max_k`` for the top number to be the
    homology of the full complex.
    """
    if K.is_empty:
        raise EmptyComplex("Betti numbers of the empty complex are not supported")
    if max_k < 0 or max_k > MAX_BETTI_DIM:
        raise UnsupportedDimension(f"Betti numbers supported for k <= {MAX_BETTI_DIM}")
    ranks = [boundary_rank(K, k) for k in range(max_k + 2)]
    return tuple(
        len(K.k_simplices(k)) - ranks[k] - ranks[k + 1] for k in range(max_k + 1)
    )


def connected_components(K: SimplicialComplex) -> int:
    """Number of components of the 1-skeleton, by union-find."""
    parent = {v: v for v in K.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in K.k_simplices(1):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in K.vertices})
