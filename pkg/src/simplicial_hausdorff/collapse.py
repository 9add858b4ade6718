"""Links, cones, vertex domination and strong collapses.

Also checks that coincident points in a point cloud can be removed one at a
time by elementary strong collapses, leaving the Rips complex of the quotient
cloud.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import LabeledComplex, Simplex, SimplicialComplex, is_isomorphic
from .errors import LastVertex, VertexNotFound
from .rips import PointCloud, RipsParams, build_rips, quotient_coincident, rips_simplices
from .verify import MAX_BETTI_DIM, betti_gf2


def _require_vertex(K: SimplicialComplex, v: int) -> None:
    if (v,) not in K:
        raise VertexNotFound(f"vertex {v} is not in the complex")


def link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces not containing ``v`` whose join with ``v`` is a face of ``K``.

    An isolated vertex has an empty link (``result.is_empty``).
    """
    _require_vertex(K, v)
    faces = set()
    for s in K.simplices():
        if v in s and len(s) > 1:
            faces.add(tuple(u for u in s if u != v))
    if not faces:
        return SimplicialComplex.empty()
    return SimplicialComplex.from_simplices(faces)


def _join(s: Simplex, w: int) -> Simplex:
    return tuple(sorted((*s, w))) if w not in s else s


def cone_apexes(L: SimplicialComplex) -> set[int]:
    """Vertices w of ``L`` such that every face of ``L`` extended by w stays in ``L``."""
    return {w for w in L.vertices if all(_join(s, w) in L for s in L.simplices())}


def dominated_vertices(K: SimplicialComplex) -> list[tuple[int, int]]:
    """All (v, w) with v dominated by w, sorted."""
    pairs = []
    for v in K.vertices:
        pairs.extend((v, w) for w in sorted(cone_apexes(link(K, v))))
    return pairs


def remove_vertex(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Full subcomplex on every vertex except ``v``."""
    _require_vertex(K, v)
    if len(K.vertices) < 2:
        raise LastVertex("cannot remove the only vertex of a complex")
    return SimplicialComplex.from_simplices(s for s in K.simplices() if v not in s)


@dataclass(frozen=True)
class CollapseTrace:
    steps: tuple[tuple[int, int], ...]
    final: SimplicialComplex


def strong_collapse_core(K: SimplicialComplex) -> CollapseTrace:
    """Remove the lowest-id dominated vertex (apex: lowest dominating vertex)
    until none is left."""
    steps = []
    current = K
    while len(current.vertices) > 1:
        for v in current.vertices:
            apexes = cone_apexes(link(current, v))
            if apexes:
                steps.append((v, min(apexes)))
                current = remove_vertex(current, v)
                break
        else:
            break
    return CollapseTrace(tuple(steps), current)


def collapse_onto(
    K: SimplicialComplex, classes: Iterable[Sequence[int]]
) -> tuple[CollapseTrace, list[int]]:
    """Remove every non-first member of each class, provided it is dominated by
    the first member at the moment of removal.

    Returns the trace of performed removals and the members that were not
    dominated (and so were kept).
    """
    steps = []
    stuck = []
    current = K
    for members in classes:
        rep, *rest = members
        for v in rest:
            if rep in cone_apexes(link(current, v)):
                steps.append((v, rep))
                current = remove_vertex(current, v)
            else:
                stuck.append(v)
    return CollapseTrace(tuple(steps), current), stuck


def coincidence_classes(A: LabeledComplex) -> list[list[int]]:
    """Vertices grouped by identical coordinates, in vertex order."""
    groups: dict = {}
    for v in A.vertices:
        groups.setdefault(A.coords[v], []).append(v)
    return list(groups.values())


def collapse_coincident(A: LabeledComplex) -> tuple[LabeledComplex, CollapseTrace, list[int]]:
    """Strongly collapse coincident vertices of a labeled complex onto the
    lowest-id vertex at their position."""
    trace, stuck = collapse_onto(A.complex, coincidence_classes(A))
    final = trace.final
    coords = {v: A.coords[v] for v in final.vertices}
    result = LabeledComplex(final, coords, A.ambient_dim, allow_coincident=bool(stuck))
    return result, trace, stuck


@dataclass(frozen=True)
class QuotientReport:
    """Outcome of collapsing the duplicate points of a Rips complex.

    ``isomorphic``: the collapsed complex, capped at ``max_dim`` and relabeled
    by quotient index, equals the Rips complex of the quotient cloud.
    ``betti_original`` / ``betti_quotient``: GF(2) Betti numbers of the two
    Rips complexes for k up to ``min(max_dim, 2)``.
    """

    trace: CollapseTrace
    not_dominated: tuple[int, ...]
    isomorphic: bool
    betti_original: tuple[int, ...]
    betti_quotient: tuple[int, ...]
    collapsed: LabeledComplex = field(repr=False)

    @property
    def betti_match(self) -> bool:
        return self.betti_original == self.betti_quotient

    @property
    def ok(self) -> bool:
        return not self.not_dominated and self.isomorphic and self.betti_match


def verify_quotient_equivalence(cloud: PointCloud, params: RipsParams) -> QuotientReport:
    """Collapse each duplicate point onto its class representative and compare
    with the Rips complex of the quotient cloud.

    The collapse runs on the uncapped Rips (clique) complex: with a dimension
    cap a duplicate need not be dominated, since its top simplices cannot be
    extended by the representative.
    """
    q = quotient_coincident(cloud)
    n = len(cloud)
    flag = rips_simplices(cloud.distances, params.scale, n - 1)
    trace, stuck = collapse_onto(flag, q.classes())

    capped = trace.final.skeleton(params.max_dim)
    if stuck:
        coords = {v: tuple(cloud.points[v]) for v in capped.vertices}
        collapsed = LabeledComplex(capped, coords, cloud.ambient_dim, allow_coincident=True)
        isomorphic = False
    else:
        capped = capped.relabel({v: q.class_map[v] for v in capped.vertices})
        coords = {v: tuple(q.cloud.points[v]) for v in capped.vertices}
        collapsed = LabeledComplex(capped, coords, cloud.ambient_dim)
        isomorphic = is_isomorphic(collapsed, build_rips(q.cloud, params))

    top = min(params.max_dim, MAX_BETTI_DIM)
    betti_original = betti_gf2(flag.skeleton(top + 1), top)
    quotient_flag = rips_simplices(q.cloud.distances, params.scale, top + 1)
    betti_quotient = betti_gf2(quotient_flag, top)
    return QuotientReport(trace, tuple(stuck), isomorphic, betti_original, betti_quotient, collapsed)
