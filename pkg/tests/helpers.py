"""Random instance generators shared by the test modules."""
import itertools
import math

import numpy as np

from simplicial_hausdorff.complex import LabeledComplex, closure
from simplicial_hausdorff.rips import PointCloud, RipsParams, build_rips

ACCEPTANCE_LINES = []


def record(criterion, passed, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")


def random_rips(rng, n=None, d=None, max_dim=None, n_max=8):
    """Rips complex of a uniform cloud in the unit cube at a random scale."""
    n = n if n is not None else int(rng.integers(1, n_max + 1))
    d = d if d is not None else int(rng.integers(1, 4))
    max_dim = max_dim if max_dim is not None else int(rng.integers(0, 3))
    scale = float(rng.uniform(0, math.sqrt(d)))
    return build_rips(PointCloud(rng.random((n, d))), RipsParams(scale, max_dim))


def random_complex(rng, n=None, d=None, max_dim=None, n_max=8):
    """Closure of a few random generators on n vertices, random injective coords."""
    n = n if n is not None else int(rng.integers(1, n_max + 1))
    d = d if d is not None else int(rng.integers(1, 4))
    max_dim = max_dim if max_dim is not None else int(rng.integers(0, 3))
    gens = [(i,) for i in range(n)]
    for _ in range(int(rng.integers(0, 2 * n + 1))):
        size = int(rng.integers(1, min(n, max_dim + 1) + 1))
        gens.append(tuple(sorted(rng.choice(n, size=size, replace=False).tolist())))
    K = closure(gens)
    pts = rng.random((n, d))
    return LabeledComplex(K, {i: tuple(p) for i, p in enumerate(pts)}, d)


def random_instance(rng, d=None, max_dim=None):
    """Either a Rips complex or a random closure, half the time each."""
    if rng.random() < 0.5:
        return random_rips(rng, d=d, max_dim=max_dim)
    return random_complex(rng, d=d, max_dim=max_dim)


def random_permutation_relabel(rng, A):
    """Relabel A's vertices by a random injective map into 0..2n."""
    n = len(A.vertices)
    targets = rng.choice(2 * n + 1, size=n, replace=False).tolist()
    return A.relabel(dict(zip(A.vertices, targets)))


def brute_force_rips(points, scale, max_dim):
    """Every index subset of size <= max_dim + 1 with all pairwise distances <= scale."""
    n = len(points)
    out = set()
    for r in range(1, max_dim + 2):
        for s in itertools.combinations(range(n), r):
            if all(math.dist(points[a], points[b]) <= scale for a, b in itertools.combinations(s, 2)):
                out.add(s)
    return out
