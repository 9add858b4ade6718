import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from simplicial_hausdorff.errors import EmptyCloud, NonInjective
from simplicial_hausdorff.rips import (
    Filtration,
    PointCloud,
    RipsParams,
    build_rips,
    critical_values,
    quotient_coincident,
    rips_simplices,
)

from helpers import brute_force_rips

CLOUD3 = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.8)]
# sqrt(0.5**2 + 0.8**2), computed by hand
D02 = 0.9433981132056605


def test_hand_distance_matches_oracle():
    assert math.dist(CLOUD3[0], CLOUD3[2]) == D02
    assert math.dist(CLOUD3[1], CLOUD3[2]) == D02


def test_rips_below_long_edge():
    A = build_rips(PointCloud(CLOUD3), RipsParams(0.95, 2))
    assert set(A.complex.simplices()) == brute_force_rips(CLOUD3, 0.95, 2)
    assert A.complex.k_simplices(1) == ((0, 2), (1, 2))
    assert A.dim == 1


def test_rips_closed_threshold_gives_full_triangle():
    A = build_rips(PointCloud(CLOUD3), RipsParams(1.0, 2))
    assert A.complex.k_simplices(2) == ((0, 1, 2),)


def test_rips_scale_zero_is_vertex_set():
    rng = np.random.default_rng(0)
    A = build_rips(PointCloud(rng.random((7, 3))), RipsParams(0.0, 2))
    assert A.complex.f_vector() == (7,)


def test_rips_errors():
    with pytest.raises(NonInjective):
        build_rips(PointCloud([(0, 0), (0, 0)]), RipsParams(1.0))
    with pytest.raises(EmptyCloud):
        PointCloud(np.zeros((0, 2)))
    with pytest.raises(ValueError):
        RipsParams(-1.0)


def test_default_max_dim_is_two():
    assert RipsParams(1.0).max_dim == 2


@settings(max_examples=80)
@given(st.integers(0, 2**32 - 1), st.integers(1, 9), st.integers(1, 3), st.integers(0, 3))
def test_rips_matches_brute_force(seed, n, d, max_dim):
    rng = np.random.default_rng(seed)
    pts = rng.random((n, d))
    scale = float(rng.uniform(0, math.sqrt(d)))
    A = build_rips(PointCloud(pts), RipsParams(scale, max_dim))
    assert set(A.complex.simplices()) == brute_force_rips([tuple(p) for p in pts], scale, max_dim)


def test_critical_values_examples():
    assert critical_values(PointCloud(CLOUD3)) == [D02, 1.0]
    assert critical_values(PointCloud([(1.0, 2.0)])) == []
    assert critical_values(PointCloud([(0, 0), (3, 4)])) == [5.0]


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1))
def test_nesting_and_monotone_counts(seed):
    rng = np.random.default_rng(seed)
    cloud = PointCloud(rng.random((int(rng.integers(1, 9)), 2)))
    a, b = sorted(rng.uniform(0, 1.5, size=2))
    Ka = build_rips(cloud, RipsParams(a, 2)).complex
    Kb = build_rips(cloud, RipsParams(b, 2)).complex
    assert all(s in Kb for s in Ka.simplices())
    assert len(Ka) <= len(Kb)


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1))
def test_constant_between_critical_values(seed):
    rng = np.random.default_rng(seed)
    cloud = PointCloud(rng.random((int(rng.integers(2, 8)), 2)))
    F = Filtration(cloud, 2)
    cs = list(F.critical_values)
    levels = [0.0] + cs + [cs[-1] + 1.0]
    for lo, hi in zip(levels, levels[1:]):
        alpha = float(rng.uniform(lo, hi))
        if alpha >= hi:
            continue
        assert F.complex_at(alpha) == F.complex_at(lo)


def test_quotient_examples():
    q = quotient_coincident(PointCloud([(0, 0), (0, 0), (1, 0)]))
    assert q.cloud == PointCloud([(0, 0), (1, 0)])
    assert q.multiplicity == {0: 2, 1: 1}
    assert q.class_map == (0, 0, 1)

    distinct = PointCloud([(0, 0), (1, 0), (2, 5)])
    q = quotient_coincident(distinct)
    assert q.cloud == distinct and set(q.multiplicity.values()) == {1}

    q = quotient_coincident(PointCloud([(1, 1)] * 3))
    assert len(q.cloud) == 1 and q.multiplicity == {0: 3}


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1))
def test_quotient_matches_any_representative_subcloud(seed):
    rng = np.random.default_rng(seed)
    base = rng.random((int(rng.integers(1, 6)), 2))
    idx = rng.integers(0, len(base), size=len(base) + int(rng.integers(0, 5)))
    idx = np.concatenate([np.arange(len(base)), idx])
    rng.shuffle(idx)
    cloud = PointCloud(base[idx])
    q = quotient_coincident(cloud)
    assert sum(q.multiplicity.values()) == len(cloud)
    assert len(np.unique(q.cloud.points, axis=0)) == len(q.cloud)
    # pick the last member of each class instead of the first
    last = {}
    for i, c in enumerate(q.class_map):
        last[c] = i
    sub = PointCloud(cloud.points[[last[c] for c in range(len(q.cloud))]])
    params = RipsParams(float(rng.uniform(0, 1.5)), 2)
    assert build_rips(sub, params) == build_rips(q.cloud, params)


def test_rips_simplices_accepts_duplicates():
    cloud = PointCloud([(0, 0), (0, 0), (1, 0)])
    K = rips_simplices(cloud.distances, 0.0, 2)
    assert K.k_simplices(1) == ((0, 1),)
