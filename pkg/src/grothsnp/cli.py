"""Command-line front end: compute, verify, and export.

Subcommands mirror the library surface. All output is deterministic: JSON
objects are assembled in fixed key order, point lists are sorted, and every
verification command takes an explicit seed, so identical invocations produce
byte-identical files. Exit codes: 0 success or verified, 1 verification
failure (the report still goes to the output), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from dataclasses import dataclass
from typing import Sequence

from .grothendieck import (
    check_claim_a,
    check_claim_b,
    check_claim_c,
    check_lemmas_random,
    grothendieck_lenart,
    grothendieck_setvalued,
    mu_chain,
    schur_expansion,
)
from .partitions import Partition
from .polytopes import (
    Permutahedron,
    permutahedron_lattice_points,
    snp_check_bruteforce,
    snp_check_symmetric_fast,
)

COMMANDS = ("expand", "groth", "chain", "newton", "snp", "verify", "figure-data")

VERIFY_BATTERY = (
    "cross-oracle",
    "component-snp",
    "claim-a",
    "claim-b",
    "claim-c",
    "lemmas",
    "brute-snp",
)


@dataclass(frozen=True)
class RunConfig:
    """One fully validated invocation."""

    command: str
    lam: Partition
    n: int
    out: str | None = None
    jobs: int = 1
    brute: bool = False
    checks: tuple[str, ...] = ()
    trials: int = 1000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if len(self.lam) > self.n:
            raise ValueError(f"lambda has {len(self.lam)} rows but n = {self.n}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")


def _parse_partition(text: str) -> Partition:
    if text.strip() == "":
        return Partition(())
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated integer list, got {text!r}"
        )
    try:
        return Partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--lambda",
        dest="lam",
        type=_parse_partition,
        default=Partition(()),
        metavar="PARTS",
        help="partition as a comma-separated weakly decreasing list, e.g. 3,1,0",
    )
    common.add_argument("--n", type=int, required=True, help="number of variables")
    common.add_argument("--out", default=None, metavar="PATH", help="output file")
    common.add_argument(
        "--jobs", type=int, default=1, metavar="K", help="worker processes"
    )

    parser = argparse.ArgumentParser(
        prog="grothsnp",
        description="Symmetric Grothendieck polynomials and their Newton polytopes",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("expand", parents=[common], help="Schur expansion JSON")
    sub.add_parser("groth", parents=[common], help="monomial-level polynomial JSON")
    sub.add_parser("chain", parents=[common], help="greedy box-adding chain JSON")
    sub.add_parser("newton", parents=[common], help="per-degree polytope JSON")
    snp = sub.add_parser("snp", parents=[common], help="saturation verdict JSON")
    snp.add_argument(
        "--brute",
        action="store_true",
        help="force the bounding-box sweep with the hull oracle",
    )
    verify = sub.add_parser("verify", parents=[common], help="run checks, report JSON")
    verify.add_argument("--all", action="store_true", help="run the full battery")
    verify.add_argument(
        "--claim", choices=("a", "b", "c"), default=None, help="run one claim check"
    )
    verify.add_argument(
        "--lemmas", action="store_true", help="run the prefix-sum identities"
    )
    verify.add_argument("--trials", type=int, default=1000, help="seeded trial count")
    verify.add_argument("--seed", type=int, default=0, help="random seed")
    sub.add_parser("figure-data", parents=[common], help="lattice points as CSV")
    return parser


def _config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    checks: tuple[str, ...] = ()
    if args.command == "verify":
        if args.all or (args.claim is None and not args.lemmas):
            checks = VERIFY_BATTERY
        else:
            picked = []
            if args.claim is not None:
                picked.append(f"claim-{args.claim}")
            if args.lemmas:
                picked.append("lemmas")
            checks = tuple(picked)
    try:
        return RunConfig(
            command=args.command,
            lam=args.lam,
            n=args.n,
            out=args.out,
            jobs=args.jobs,
            brute=getattr(args, "brute", False),
            checks=checks,
            trials=getattr(args, "trials", 1000),
            seed=getattr(args, "seed", 0),
        )
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _run_expand(config: RunConfig) -> tuple[int, str]:
    return 0, _dump_json(schur_expansion(config.lam, config.n).to_json_dict())


def _run_groth(config: RunConfig) -> tuple[int, str]:
    return 0, _dump_json(grothendieck_lenart(config.lam, config.n).to_json_dict())


def _run_chain(config: RunConfig) -> tuple[int, str]:
    return 0, _dump_json(mu_chain(config.lam, config.n).to_json_dict())


def _run_newton(config: RunConfig) -> tuple[int, str]:
    chain = mu_chain(config.lam, config.n)
    base = config.lam.size()
    components = []
    for k, mu in enumerate(chain.mus):
        perm = Permutahedron.of_partition(mu, config.n)
        entry = {"degree": base + k}
        entry.update(perm.to_json_dict())
        components.append(entry)
    payload = {
        "lambda": list(config.lam.parts),
        "n": config.n,
        "components": components,
    }
    return 0, _dump_json(payload)


def _run_snp(config: RunConfig) -> tuple[int, str]:
    payload = {
        "lambda": list(config.lam.parts),
        "n": config.n,
        "method": "brute" if config.brute else "fast",
    }
    if config.brute:
        verdict = snp_check_bruteforce(grothendieck_lenart(config.lam, config.n))
        payload["snp"] = verdict.is_snp
        payload["violation"] = list(verdict.violation) if verdict.violation else None
        payload["hull_lattice_points"] = [
            list(pt) for pt in sorted(verdict.hull_lattice_points)
        ]
    else:
        verdict = snp_check_symmetric_fast(config.lam, config.n)
        payload["snp"] = verdict.is_snp
        payload["violation"] = list(verdict.violation) if verdict.violation else None
        payload["components"] = [
            {"degree": config.lam.size() + k, "weight": list(perm.weight)}
            for k, perm in enumerate(verdict.components)
        ]
    payload["detail"] = verdict.detail
    return (0 if verdict.is_snp else 1), _dump_json(payload)


def _run_one_check(task: tuple[str, tuple[int, ...], int, int, int]) -> dict:
    name, parts, n, trials, seed = task
    lam = Partition(parts)
    if name == "cross-oracle":
        same = grothendieck_lenart(lam, n) == grothendieck_setvalued(lam, n)
        return {
            "name": name,
            "ok": same,
            "detail": "" if same else "tableau models disagree",
        }
    if name == "component-snp":
        verdict = snp_check_symmetric_fast(lam, n)
        return {"name": name, "ok": verdict.is_snp, "detail": verdict.detail}
    if name == "claim-a":
        res = check_claim_a(lam, n)
        return {"name": name, "ok": res.ok, "detail": res.detail}
    if name == "claim-b":
        res = check_claim_b(mu_chain(lam, n), trials, seed)
        return {"name": name, "ok": res.ok, "detail": res.detail}
    if name == "claim-c":
        res = check_claim_c(mu_chain(lam, n), trials, seed)
        return {"name": name, "ok": res.ok, "detail": res.detail}
    if name == "lemmas":
        res = check_lemmas_random(mu_chain(lam, n), trials, seed)
        return {"name": name, "ok": res.ok, "detail": res.detail}
    if name == "brute-snp":
        verdict = snp_check_bruteforce(grothendieck_lenart(lam, n))
        expected = set()
        chain = mu_chain(lam, n)
        for mu in chain.mus:
            expected |= permutahedron_lattice_points(Permutahedron.of_partition(mu, n))
        ok = verdict.is_snp and verdict.hull_lattice_points == frozenset(expected)
        detail = verdict.detail
        if verdict.is_snp and not ok:
            detail = "hull lattice points differ from the chain polytopes"
        return {"name": name, "ok": ok, "detail": detail}
    raise ValueError(f"unknown check {name!r}")


def _run_verify(config: RunConfig) -> tuple[int, str]:
    names = [
        name
        for name in config.checks
        if not (name == "brute-snp" and config.n > 3)
    ]
    tasks = [
        (name, config.lam.parts, config.n, config.trials, config.seed)
        for name in names
    ]
    if config.jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(min(config.jobs, len(tasks))) as pool:
            results = pool.map(_run_one_check, tasks)
    else:
        results = [_run_one_check(task) for task in tasks]
    all_ok = all(entry["ok"] for entry in results)
    payload = {
        "lambda": list(config.lam.parts),
        "n": config.n,
        "trials": config.trials,
        "seed": config.seed,
        "checks": results,
        "ok": all_ok,
    }
    return (0 if all_ok else 1), _dump_json(payload)


def _run_figure_data(config: RunConfig) -> tuple[int, str]:
    chain = mu_chain(config.lam, config.n)
    base = config.lam.size()
    lines = []
    for k, mu in enumerate(chain.mus):
        perm = Permutahedron.of_partition(mu, config.n)
        for pt in sorted(permutahedron_lattice_points(perm)):
            coords = [str(pt[i]) if i < config.n else "-" for i in range(3)]
            lines.append(",".join(coords + [str(base + k)]))
    return 0, "\n".join(lines) + "\n"


_HANDLERS = {
    "expand": _run_expand,
    "groth": _run_groth,
    "chain": _run_chain,
    "newton": _run_newton,
    "snp": _run_snp,
    "verify": _run_verify,
    "figure-data": _run_figure_data,
}


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one config; returns (exit status, serialized output)."""
    return _HANDLERS[config.command](config)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "figure-data" and args.n > 3:
        parser.error("figure export limited to n ≤ 3")
    config = _config_from_args(parser, args)
    status, text = run(config)
    if config.out is None:
        sys.stdout.write(text)
    else:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
