"""Command-line entry point.

Exit codes: 0 success, 2 bad input, 1 internal error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import bench
from .collapse import collapse_coincident, strong_collapse_core, verify_quotient_equivalence
from .complex import LabeledComplex, to_document
from .distance import (
    DirectedResult,
    classical_directed_hausdorff,
    classical_hausdorff,
    directed_distance,
    filtered_directed_profile,
    vertex_points,
)
from .errors import InputError
from .io import load_complex, load_point_cloud
from .rips import DEFAULT_MAX_DIM, Filtration, PointCloud, RipsParams, build_rips, quotient_coincident

COMMANDS = ("rips", "dist", "filtdist", "hausdorff", "collapse", "bench")


class UsageError(InputError):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    scale: Optional[float] = None
    max_dim: int = DEFAULT_MAX_DIM
    header: bool = False
    quotient: bool = False
    output: Optional[str] = None
    format: str = "json"
    directed: bool = False
    core: bool = False
    sizes: str = "10:30:5"
    ambient_dim: int = 2
    seed: int = bench.DEFAULT_SEED
    repeats: int = 1

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.max_dim < 0:
            raise UsageError("--max-dim must be nonnegative")
        if self.scale is not None and not (math.isfinite(self.scale) and self.scale >= 0):
            raise UsageError("--scale must be a finite nonnegative number")
        if self.format not in ("json", "plain"):
            raise UsageError("--format must be json or plain")
        wanted = {"rips": 1, "dist": 2, "filtdist": 2, "hausdorff": 2, "collapse": 1, "bench": 0}
        if len(self.inputs) != wanted[self.command]:
            raise UsageError(f"{self.command} takes {wanted[self.command]} input path(s)")
        needs_scale = self.command == "rips" or (
            self.command in ("dist", "collapse") and any(_is_csv(p) for p in self.inputs)
        )
        if needs_scale and self.scale is None:
            raise UsageError(f"{self.command} on point clouds needs --scale")
        if self.command == "filtdist" and not all(_is_csv(p) for p in self.inputs):
            raise UsageError("filtdist compares point clouds (CSV files)")
        if self.command == "bench":
            try:
                bench.parse_sizes(self.sizes)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            if self.ambient_dim < 1:
                raise UsageError("--dim must be positive")


def _is_csv(path: str) -> bool:
    return not path.lower().endswith(".json")


def encode(value):
    """JSON-safe copy of ``value`` with infinities written as the string "inf"."""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, dict):
        return {k: encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


def _plain_lines(doc, prefix=""):
    if isinstance(doc, dict):
        for k, v in doc.items():
            yield from _plain_lines(v, f"{prefix}{k}." if isinstance(v, (dict, list)) else f"{prefix}{k}")
    elif isinstance(doc, list) and doc and isinstance(doc[0], dict):
        for i, v in enumerate(doc):
            yield from _plain_lines(v, f"{prefix}{i}.")
    else:
        text = json.dumps(doc) if isinstance(doc, list) else str(doc)
        yield f"{prefix.rstrip('.')}\t{text}"


def render(doc, fmt: str) -> str:
    doc = encode(doc)
    if fmt == "plain":
        return "\n".join(_plain_lines(doc)) + "\n"
    return json.dumps(doc) + "\n"


def _cloud(cfg: RunConfig, path: str) -> PointCloud:
    cloud = load_point_cloud(path, header=cfg.header)
    if cfg.quotient:
        cloud = quotient_coincident(cloud).cloud
    return cloud


def _labeled(cfg: RunConfig, path: str) -> LabeledComplex:
    if _is_csv(path):
        return build_rips(_cloud(cfg, path), RipsParams(cfg.scale, cfg.max_dim))
    return load_complex(path)


def _directed_doc(res: DirectedResult):
    w = res.witness
    if w is None:
        return None
    return {"k": w.k, "sigma": list(w.sigma), "tau": list(w.tau), "v": w.v, "w": w.w}


def cmd_rips(cfg):
    return to_document(_labeled(cfg, cfg.inputs[0]))


def cmd_dist(cfg):
    A, B = (_labeled(cfg, p) for p in cfg.inputs)
    ab, ba = directed_distance(A, B), directed_distance(B, A)
    return {
        "distance": max(ab.value, ba.value),
        "directed_ab": ab.value,
        "directed_ba": ba.value,
        "witness": {"ab": _directed_doc(ab), "ba": _directed_doc(ba)},
    }


def cmd_filtdist(cfg):
    FA, FB = (Filtration(_cloud(cfg, p), cfg.max_dim) for p in cfg.inputs)
    ab = filtered_directed_profile(FA, FB)
    ba = filtered_directed_profile(FB, FA)
    dab = max(v for _, v in ab)
    dba = max(v for _, v in ba)
    return {
        "distance": max(dab, dba),
        "directed_ab": dab,
        "directed_ba": dba,
        "alphas": [a for a, _ in ab],
        "levels_ab": [v for _, v in ab],
        "levels_ba": [v for _, v in ba],
    }


def _points(cfg, path):
    if _is_csv(path):
        return load_point_cloud(path, header=cfg.header).points
    return vertex_points(load_complex(path, allow_coincident=True))


def cmd_hausdorff(cfg):
    P, Q = (_points(cfg, p) for p in cfg.inputs)
    if cfg.directed:
        return {"distance": classical_directed_hausdorff(P, Q), "directed": True}
    return {"distance": classical_hausdorff(P, Q), "directed": False}


def cmd_collapse(cfg):
    path = cfg.inputs[0]
    if _is_csv(path):
        cloud = load_point_cloud(path, header=cfg.header)
        report = verify_quotient_equivalence(cloud, RipsParams(cfg.scale, cfg.max_dim))
        q = quotient_coincident(cloud)
        result = report.collapsed
        doc = {
            "trace": [list(s) for s in report.trace.steps],
            "not_dominated": list(report.not_dominated),
            "class_map": list(q.class_map),
            "multiplicity": [q.multiplicity[i] for i in range(len(q.cloud))],
            "isomorphic_to_quotient": report.isomorphic,
            "betti_original": list(report.betti_original),
            "betti_quotient": list(report.betti_quotient),
        }
    else:
        A = load_complex(path, allow_coincident=True)
        result, trace, stuck = collapse_coincident(A)
        doc = {"trace": [list(s) for s in trace.steps], "not_dominated": stuck}
    if cfg.core:
        core = strong_collapse_core(result.complex)
        doc["core_trace"] = [list(s) for s in core.steps]
        result = LabeledComplex(
            core.final, {v: result.coords[v] for v in core.final.vertices},
            result.ambient_dim, allow_coincident=True,
        )
    doc["complex"] = to_document(result)
    return doc


def cmd_bench(cfg):
    res = bench.run_benchmark(
        bench.parse_sizes(cfg.sizes),
        max_dim=cfg.max_dim,
        ambient_dim=cfg.ambient_dim,
        scale=cfg.scale,
        seed=cfg.seed,
        repeats=cfg.repeats,
    )
    return res.as_dict()


HANDLERS = {
    "rips": cmd_rips,
    "dist": cmd_dist,
    "filtdist": cmd_filtdist,
    "hausdorff": cmd_hausdorff,
    "collapse": cmd_collapse,
    "bench": cmd_bench,
}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Execute one command, writing its document to ``cfg.output`` or stdout."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg.validate()
        text = render(HANDLERS[cfg.command](cfg), cfg.format)
        if cfg.output:
            with open(cfg.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            stdout.write(text)
    except (InputError, OSError, UnicodeDecodeError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except Exception as exc:  # noqa: BLE001 - top-level fault barrier
        stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simphaus", description="Simplicial Hausdorff distances between complexes and point clouds."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_inputs):
        if n_inputs:
            p.add_argument("inputs", nargs=n_inputs, metavar="PATH")
        p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
        p.add_argument("--header", action="store_true", help="skip the first CSV row")
        p.add_argument("-o", "--output")
        p.add_argument("--format", choices=("json", "plain"), default="json")

    p = sub.add_parser("rips", help="build a Vietoris-Rips complex from a CSV point cloud")
    common(p, 1)
    p.add_argument("--scale", type=float, required=True)
    p.add_argument("--quotient", action="store_true", help="merge coincident points first")

    p = sub.add_parser("dist", help="simplicial Hausdorff distance between two complexes")
    common(p, 2)
    p.add_argument("--scale", type=float, help="Rips scale for CSV inputs")
    p.add_argument("--quotient", action="store_true")

    p = sub.add_parser("filtdist", help="distance between the Rips filtrations of two clouds")
    common(p, 2)
    p.add_argument("--quotient", action="store_true")

    p = sub.add_parser("hausdorff", help="classical Hausdorff distance between point sets")
    common(p, 2)
    p.add_argument("--directed", action="store_true")

    p = sub.add_parser("collapse", help="collapse coincident points by strong collapses")
    common(p, 1)
    p.add_argument("--scale", type=float, help="Rips scale for CSV inputs")
    p.add_argument("--core", action="store_true", help="continue to the strong collapse core")

    p = sub.add_parser("bench", help="runtime scaling of the distance on dense complexes")
    common(p, 0)
    p.add_argument("--sizes", default="10:30:5", help="start:stop:step (inclusive) or a comma list")
    p.add_argument("--dim", dest="ambient_dim", type=int, default=2)
    p.add_argument("--scale", type=float, help="default: unit cube diagonal")
    p.add_argument("--seed", type=int, default=bench.DEFAULT_SEED)
    p.add_argument("--repeats", type=int, default=1)
    return parser


def parse_args(argv=None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    return RunConfig(**ns)


def main(argv=None) -> int:
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
