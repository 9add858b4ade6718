"""Runtime scaling of the distance computation on dense Rips complexes."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .distance import simplicial_hausdorff
from .rips import PointCloud, RipsParams, build_rips

DEFAULT_SEED = 20240611


@dataclass(frozen=True)
class BenchRow:
    p: int
    seconds: float
    simplices: int


@dataclass(frozen=True)
class BenchResult:
    rows: list[BenchRow]
    slope: float
    max_dim: int
    ambient_dim: int
    scale: float
    seed: int

    def as_dict(self) -> dict:
        return {
            "max_dim": self.max_dim,
            "ambient_dim": self.ambient_dim,
            "scale": self.scale,
            "seed": self.seed,
            "rows": [{"p": r.p, "seconds": r.seconds, "simplices": r.simplices} for r in self.rows],
            "slope": self.slope,
        }


def parse_sizes(spec: str) -> list[int]:
    """``"10:30:5"`` (inclusive stop) or ``"10,15,20"``."""
    spec = spec.strip()
    try:
        if ":" in spec:
            parts = [int(x) for x in spec.split(":")]
            if len(parts) == 2:
                parts.append(1)
            start, stop, step = parts
            if step <= 0:
                raise ValueError
            sizes = list(range(start, stop + 1, step))
        else:
            sizes = [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"bad size range {spec!r}; use start:stop:step or a comma list") from None
    if len(sizes) < 2 or min(sizes) < 1:
        raise ValueError("need at least two positive sizes to fit a slope")
    return sizes


def loglog_slope(ps, seconds) -> float:
    return float(np.polyfit(np.log(ps), np.log(seconds), 1)[0])


def run_benchmark(
    sizes,
    max_dim: int = 2,
    ambient_dim: int = 2,
    scale: float | None = None,
    seed: int = DEFAULT_SEED,
    repeats: int = 1,
) -> BenchResult:
    """Time the simplicial Hausdorff distance between two uniform random clouds
    in the unit cube, for each size p.

    The default scale is the cube diagonal, so every complex is the full
    ``max_dim``-skeleton of the simplex on p vertices. Complex construction is
    excluded from the timing; the best of ``repeats`` runs is kept.
    """
    if scale is None:
        scale = math.sqrt(ambient_dim)
    rng = np.random.default_rng(seed)
    params = RipsParams(scale, max_dim)
    rows = []
    for p in sizes:
        A = build_rips(PointCloud(rng.random((p, ambient_dim))), params)
        B = build_rips(PointCloud(rng.random((p, ambient_dim))), params)
        best = math.inf
        for _ in range(max(1, repeats)):
            t0 = time.perf_counter()
            simplicial_hausdorff(A, B)
            best = min(best, time.perf_counter() - t0)
        rows.append(BenchRow(p, best, len(A.complex) + len(B.complex)))
    slope = loglog_slope([r.p for r in rows], [r.seconds for r in rows])
    return BenchResult(rows, slope, max_dim, ambient_dim, scale, seed)
