"""Command-line frontend: vanishing analysis, the abelian AI atlas, the
truncated non-Hausdorff construction, norm-equation sweeps and witness
extraction.  All reports are JSON with potentially-large integers (the
witness coefficients) serialized as decimal strings.

Exit codes: 0 success, 1 parse/usage error, 2 internal kernel
inconsistency (analyze), 3 norm tolerance exceeded (normcheck).
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import hls as hls_mod
from .atlas import ai_atlas
from .groupoid import build_coset_groupoid, kernel_of_q_dimension
from .groups import (FamilyNotInvariantError, GroupTableError,
                     SizeCapError, make_group, parse_family)
from .ideals import (InternalInconsistencyError, class_I_check, integer_witness)
from .norms import verify_norm_equation
from .sampling import random_groupoid_function

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INCONSISTENT = 2
EXIT_TOLERANCE = 3


class SpecError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    group_spec: Optional[dict] = None
    family_spec: Optional[dict] = None
    depth: int = 3
    max_order: int = 64
    trials: int = 100
    seed: int = 0
    tol: float = 1e-8
    output: Optional[str] = None
    auto_close: bool = True

    def __post_init__(self):
        if self.depth < 1:
            raise SpecError("depth must be >= 1")
        if self.trials < 1:
            raise SpecError("trials must be >= 1")
        if self.tol <= 0:
            raise SpecError("tol must be positive")


def _load_json_arg(arg: str, what: str) -> dict:
    """Accept inline JSON or a path to a JSON file."""
    text = arg
    if not arg.lstrip().startswith("{"):
        if not os.path.exists(arg):
            raise SpecError(f"{what} argument is neither inline JSON nor a file: {arg}")
        with open(arg) as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid {what} JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise SpecError(f"{what} JSON must be an object")
    return obj


def _build_inputs(config: RunConfig):
    try:
        group = make_group(config.group_spec)
    except (GroupTableError, SizeCapError, ValueError, KeyError) as exc:
        raise SpecError(f"bad group spec: {exc}") from exc
    try:
        family = parse_family(group, config.family_spec, auto_close=config.auto_close)
    except FamilyNotInvariantError:
        raise
    except (ValueError, KeyError) as exc:
        raise SpecError(f"bad family spec: {exc}") from exc
    return group, family


def _emit(report: dict, output: Optional[str]) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(config: RunConfig) -> int:
    group, family = _build_inputs(config)
    try:
        report = class_I_check(group, family)
    except InternalInconsistencyError as exc:
        _emit({"error": "internal-inconsistency", "detail": str(exc)}, config.output)
        return EXIT_INCONSISTENT
    data = report.to_json_dict()
    data["cross_checks"]["q_kernel_dim"] = kernel_of_q_dimension(group, family)
    data["cross_checks"]["q_kernel_agrees"] = (
        data["cross_checks"]["q_kernel_dim"] == report.algebraic_kernel_dim)
    data["group"] = {"name": group.name, "order": group.order}
    data["family"] = [list(sub) for sub in family.members]
    if not data["cross_checks"]["q_kernel_agrees"]:
        _emit(data, config.output)
        return EXIT_INCONSISTENT
    _emit(data, config.output)
    return EXIT_OK


def cmd_witness(config: RunConfig) -> int:
    group, family = _build_inputs(config)
    witness = integer_witness(group, family)
    data = {"witness": None}
    if witness is not None:
        data["witness"] = {"coeffs": [str(int(c)) for c in witness.coeffs]}
    _emit(data, config.output)
    return EXIT_OK


def cmd_hls(config: RunConfig) -> int:
    group, family = _build_inputs(config)
    truncation = hls_mod.build_hls(group, family, config.depth)
    witness = integer_witness(group, family)
    report = hls_mod.hls_report(truncation, witness)
    report["group"] = {"name": group.name, "order": group.order}
    _emit(report, config.output)
    return EXIT_OK


def cmd_ai_atlas(config: RunConfig) -> int:
    if config.max_order > 64:
        raise SpecError("--max-order is capped at 64")
    report = ai_atlas(config.max_order)
    _emit(report, config.output)
    return EXIT_OK


def _unit_subsets(num_units: int):
    """The configured subset list: singletons, pairs, and all units."""
    subsets = [[u] for u in range(num_units)]
    subsets.extend([list(c) for c in itertools.combinations(range(num_units), 2)])
    full = list(range(num_units))
    if full not in subsets:
        subsets.append(full)
    return subsets


def cmd_normcheck(config: RunConfig) -> int:
    group, family = _build_inputs(config)
    groupoid = build_coset_groupoid(group, family)
    rng = random.Random(config.seed)
    subsets = _unit_subsets(len(groupoid.units))
    worst = 0.0
    per_subset = {}
    for trial in range(config.trials):
        f = random_groupoid_function(rng, groupoid)
        for subset in subsets:
            residual = verify_norm_equation(groupoid, subset, f)
            key = ",".join(map(str, subset))
            per_subset[key] = max(per_subset.get(key, 0.0), residual)
            worst = max(worst, residual)
    report = {
        "group": {"name": group.name, "order": group.order},
        "trials": config.trials,
        "seed": config.seed,
        "tol": config.tol,
        "unit_subsets": [list(map(int, k.split(","))) for k in sorted(per_subset)],
        "max_residual_per_subset": {k: per_subset[k] for k in sorted(per_subset)},
        "max_residual": worst,
        "within_tol": worst < config.tol,
    }
    _emit(report, config.output)
    return EXIT_OK if worst < config.tol else EXIT_TOLERANCE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singideal",
        description="Vanishing tests, witnesses and norm checks for "
                    "singular-ideal analogues on finite groups and groupoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, group=True, family=True):
        if group:
            p.add_argument("--group", required=True,
                           help="group spec: inline JSON or a path")
        if family:
            p.add_argument("--family", required=True,
                           help="family spec: inline JSON or a path")
            p.add_argument("--no-auto-close", action="store_true",
                           help="reject non-invariant families instead of closing them")
        p.add_argument("--out", default=None, help="write the JSON report here")

    p = sub.add_parser("analyze", help="kernel dimensions, witness, class verdicts")
    add_common(p)
    p = sub.add_parser("witness", help="print the integer witness only")
    add_common(p)
    p = sub.add_parser("hls", help="truncated non-Hausdorff construction report")
    add_common(p)
    p.add_argument("--depth", type=int, default=3)
    p = sub.add_parser("ai-atlas", help="abelian AI sweep with cross-validation")
    p.add_argument("--max-order", type=int, default=64)
    p.add_argument("--out", default=None)
    p = sub.add_parser("normcheck", help="norm-equation residual sweep")
    add_common(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            group_spec=_load_json_arg(args.group, "group") if hasattr(args, "group") else None,
            family_spec=_load_json_arg(args.family, "family") if hasattr(args, "family") else None,
            depth=getattr(args, "depth", 3),
            max_order=getattr(args, "max_order", 64),
            trials=getattr(args, "trials", 100),
            seed=getattr(args, "seed", 0),
            tol=getattr(args, "tol", 1e-8),
            output=getattr(args, "out", None),
            auto_close=not getattr(args, "no_auto_close", False),
        )
        handler = {
            "analyze": cmd_analyze,
            "witness": cmd_witness,
            "hls": cmd_hls,
            "ai-atlas": cmd_ai_atlas,
            "normcheck": cmd_normcheck,
        }[config.command]
        return handler(config)
    except (SpecError, FamilyNotInvariantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
