"""Command-line interface: every library operation behind one entry point.

Exit status: 0 on success, 1 when a verification or consistency check
fails, 2 on usage errors.  JSON output carries a reproducibility
envelope {tool_version, command, timestamp} and renders all rationals
as lowest-terms "p/q" strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import __version__, bounds, certify, construct, oracle
from .circulant import ApplicabilityError, form_to_json_obj
from .group_ap import build_pn, enumerate_aps_dihedral, enumerate_aps_zn
from .oracle import CeilingExceededError, ResultsCache

DEFAULT_CACHE_PATH = "oracle-cache.jsonl"
THREADS_ENV_VAR = "APCOUNT_THREADS"


@dataclass
class RunConfig:
    subcommand: str
    n: Optional[int] = None
    n_max: Optional[int] = None
    group: str = "cyclic"
    fmt: str = "text"
    threads: int = 1
    shards: Optional[int] = None
    cache_path: Optional[str] = DEFAULT_CACHE_PATH
    oracle_limit: Optional[int] = None
    order_ceiling: Optional[int] = None
    aggressive_parity: bool = False
    exhaustive_limit: int = 1 << 22
    coloring: Optional[str] = None
    perturb: Optional[str] = None


def dump_json(obj) -> str:
    """Canonical JSON rendering; re-serializing a parsed report is byte-identical."""
    return json.dumps(obj, indent=2)


def _envelope(config: RunConfig, payload: dict) -> dict:
    return {
        "tool_version": __version__,
        "command": config.subcommand,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "result": payload,
    }


def _emit(config: RunConfig, payload: dict, text_lines: list[str], out) -> None:
    if config.fmt == "json":
        print(dump_json(_envelope(config, payload)), file=out)
    else:
        for line in text_lines:
            print(line, file=out)


def _cmd_aps(config: RunConfig, out) -> int:
    n = config.n
    triples = enumerate_aps_zn(n) if config.group == "cyclic" else enumerate_aps_dihedral(n)
    payload = {
        "n": n,
        "group": config.group,
        "count": len(triples),
        "triples": [list(t) for t in triples],
    }
    lines = [f"{config.group} n={n}: {len(triples)} arithmetic progressions"]
    lines.extend(f"  {a} {b} {c}" for a, b, c in triples)
    _emit(config, payload, lines, out)
    return 0


def _cmd_count(config: RunConfig, out) -> int:
    coloring = construct.Coloring.from_string(config.coloring)
    count = construct.count_monochromatic(coloring, config.group)
    payload = {
        "group": config.group,
        "n": coloring.n,
        "coloring": coloring.to_string(),
        "monochromatic": count,
    }
    _emit(config, payload, [f"{count} monochromatic progressions"], out)
    return 0


def _cmd_pn(config: RunConfig, out) -> int:
    form = build_pn(config.n)
    payload = {"n": config.n, "objective_form": form_to_json_obj(form)}
    coeffs = ", ".join(str(c) for c in form.coeffs)
    _emit(config, payload, [f"objective form: constant {form.constant}; coeffs {coeffs}"], out)
    return 0


def _cmd_certify(config: RunConfig, out) -> int:
    n = config.n
    case = certify.certificate_for(n)
    if config.perturb is not None:
        mults = list(case.multipliers)
        mults[1] += Fraction(config.perturb)
        case = certify.CertificateCase(case.name, case.odd, case.multiple_of_3, tuple(mults))
    try:
        record = certify.verify_certificate(n, case)
    except certify.CertificateMismatchError as err:
        print(f"verification FAILED: {err}", file=sys.stderr)
        return 1
    payload = record.to_json_obj()
    mult_text = ", ".join(
        f"{name}={m}" for name, m in payload["multipliers"].items() if m != "0"
    )
    lines = [
        f"n={n} case={case.name}: verified",
        f"  multipliers: {mult_text}",
        f"  objective >= {record.bound}",
    ]
    _emit(config, payload, lines, out)
    return 0


def _cmd_bound(config: RunConfig, out) -> int:
    report = certify.lower_bound(config.n, aggressive_parity=config.aggressive_parity)
    payload = report.to_json_obj()
    steps = ", ".join(report.sharpening_steps) or "none"
    lines = [
        f"n={config.n} case={report.case}: lower bound {report.sharpened_bound}",
        f"  raw (#APs - c*n)/4 = {report.raw_bound}; sharpening: {steps}",
    ]
    _emit(config, payload, lines, out)
    return 0


def _cmd_construct(config: RunConfig, out) -> int:
    result = construct.extremal_coloring(config.n)
    count = construct.count_monochromatic(result.coloring)
    payload = {
        "n": config.n,
        "case": result.case,
        "blocks": list(result.block_sizes),
        "coloring": result.coloring.to_string(),
        "count": count,
        "upper_bound": result.expected_count,
    }
    lines = [
        f"n={config.n} case={result.case} blocks={list(result.block_sizes)}",
        f"  {result.coloring.to_string()}",
        f"  monochromatic count {count}, upper bound {result.expected_count}",
    ]
    _emit(config, payload, lines, out)
    return 0 if count == result.expected_count else 1


def _cmd_oracle(config: RunConfig, out) -> int:
    cache = ResultsCache(config.cache_path) if config.cache_path else None
    cached = cache.get(config.group, config.n) if cache else None
    if cached is not None:
        payload = {
            "group": cached.group,
            "n": cached.n,
            "minimum": cached.minimum,
            "witness": cached.witness,
            "colorings_scanned": 0,
            "elapsed": 0.0,
            "from_cache": True,
        }
        lines = [
            f"{config.group} n={config.n}: minimum {cached.minimum} (cached)",
            f"  witness {cached.witness}",
        ]
        _emit(config, payload, lines, out)
        return 0
    result = oracle.exact_minimum(
        config.n,
        config.group,
        order_ceiling=config.order_ceiling,
        shards=config.shards,
        workers=config.threads,
    )
    if cache:
        cache.add(result)
    payload = result.to_json_obj()
    payload["from_cache"] = False
    lines = [
        f"{config.group} n={config.n}: minimum {result.minimum}",
        f"  witness {result.witness.to_string()}",
        f"  scanned {result.colorings_scanned} colorings in {result.elapsed:.2f}s",
    ]
    _emit(config, payload, lines, out)
    return 0


def _cmd_parity(config: RunConfig, out) -> int:
    report = certify.parity_check(config.n, exhaustive_limit=config.exhaustive_limit)
    payload = report.to_json_obj()
    verdict = "all even" if report.all_even else "ODD COUNT FOUND"
    lines = [
        f"n={config.n}: {report.mode} check over {report.colorings_checked} colorings: {verdict}"
    ]
    _emit(config, payload, lines, out)
    return 0 if report.all_even else 1


def _cmd_spectral(config: RunConfig, out) -> int:
    ns = [config.n] if config.n is not None else list(range(3, config.n_max + 1))
    reports = [certify.spectral_report(n) for n in ns]
    payload = {"reports": [r.to_json_obj() for r in reports]}
    lines = [
        f"n={r.n}: min eigenvalue {r.min_eigenvalue:.9f} >= -{r.bound_coefficient} "
        f"({'ok' if r.satisfied else 'VIOLATED'}), gap {r.gap:.3e}"
        for r in reports
    ]
    _emit(config, payload, lines, out)
    return 0 if all(r.satisfied for r in reports) else 1


def _cmd_table(config: RunConfig, out) -> int:
    cache = ResultsCache(config.cache_path) if config.cache_path else None
    oracle_limit = config.oracle_limit
    if oracle_limit is None:
        oracle_limit = min(config.n_max, oracle.DEFAULT_ORDER_CEILING["cyclic"])
    records = bounds.emit_table(
        config.n_max,
        oracle_limit=oracle_limit,
        cache=cache,
        workers=config.threads,
    )
    inconsistencies = sum(1 for r in records if r.flags)
    if config.fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(bounds.CSV_COLUMNS)
        for r in records:
            writer.writerow([
                r.n,
                r.residue_mod_24,
                r.lower,
                r.upper,
                r.certificate_bound,
                "" if r.construction_count is None else r.construction_count,
                "" if r.oracle_min is None else r.oracle_min,
                ";".join(r.flags),
            ])
        print(buffer.getvalue(), end="", file=out)
    elif config.fmt == "json":
        payload = {
            "n_max": config.n_max,
            "inconsistencies": inconsistencies,
            "rows": [r.to_json_obj() for r in records],
        }
        print(dump_json(_envelope(config, payload)), file=out)
    else:
        header = f"{'n':>5} {'mod24':>5} {'lower':>8} {'upper':>8} {'cert':>8} {'built':>8} {'oracle':>8}  flags"
        print(header, file=out)
        for r in records:
            oracle_text = "-" if r.oracle_min is None else str(r.oracle_min)
            built_text = "-" if r.construction_count is None else str(r.construction_count)
            print(
                f"{r.n:>5} {r.residue_mod_24:>5} {r.lower:>8} {r.upper:>8} "
                f"{r.certificate_bound:>8} {built_text:>8} {oracle_text:>8}  "
                f"{';'.join(r.flags)}",
                file=out,
            )
        print(f"{inconsistencies} inconsistent rows", file=out)
    return 0 if inconsistencies == 0 else 1


_HANDLERS = {
    "aps": _cmd_aps,
    "count": _cmd_count,
    "pn": _cmd_pn,
    "certify": _cmd_certify,
    "bound": _cmd_bound,
    "construct": _cmd_construct,
    "oracle": _cmd_oracle,
    "parity": _cmd_parity,
    "spectral": _cmd_spectral,
    "table": _cmd_table,
}


def dispatch(config: RunConfig, out=None) -> int:
    """Run one subcommand; returns the process exit status."""
    out = out if out is not None else sys.stdout
    try:
        return _HANDLERS[config.subcommand](config, out)
    except (ApplicabilityError, CeilingExceededError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def _default_threads() -> int:
    # Environment override applies only when --threads is absent.
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apcount",
        description="Monochromatic 3-term arithmetic progressions in Z_n and D_2n.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, with_group=False, with_format=("text", "json")):
        if with_group:
            p.add_argument("--group", choices=("cyclic", "dihedral"), default="cyclic")
        p.add_argument("--format", choices=with_format, default="text")
        p.add_argument("--json", dest="format", action="store_const", const="json",
                       help="shorthand for --format json")

    p = sub.add_parser("aps", help="enumerate canonical 3-term progressions")
    p.add_argument("--n", type=int, required=True)
    add_common(p, with_group=True)

    p = sub.add_parser("count", help="count monochromatic progressions of a coloring")
    p.add_argument("--coloring", required=True, help="string over R/B (or 0/1), element 0 first")
    add_common(p, with_group=True)

    p = sub.add_parser("pn", help="emit the progression objective as a circulant form")
    p.add_argument("--n", type=int, required=True)
    add_common(p)

    p = sub.add_parser("certify", help="verify the lower-bound certificate identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perturb-multiplier", dest="perturb", default=None, help=argparse.SUPPRESS)
    add_common(p)

    p = sub.add_parser("bound", help="certified integer lower bound with sharpening steps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--aggressive-parity", action="store_true",
                   help="round up to even whenever n = 2 (mod 4), not only where the bound table does")
    add_common(p)

    p = sub.add_parser("construct", help="build the extremal block coloring")
    p.add_argument("--n", type=int, required=True)
    add_common(p)

    p = sub.add_parser("oracle", help="exhaustive minimum over all 2-colorings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--shards", type=int, default=None, help="power-of-two shard count")
    p.add_argument("--ceiling", type=int, default=None, help="override the exhaustive group-order ceiling")
    p.add_argument("--cache", default=DEFAULT_CACHE_PATH)
    p.add_argument("--no-cache", action="store_true")
    add_common(p, with_group=True)

    p = sub.add_parser("parity", help="check that every coloring yields an even count (n = 2 mod 4)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int, default=1 << 22,
                   help="max colorings for the exhaustive mode")
    add_common(p)

    p = sub.add_parser("spectral", help="circulant eigenvalue tightness diagnostic")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--max", dest="n_max", type=int, default=None)
    add_common(p)

    p = sub.add_parser("table", help="cross-check bounds, certificates, constructions and oracle")
    p.add_argument("--max", dest="n_max", type=int, required=True)
    p.add_argument("--oracle-limit", type=int, default=None,
                   help="compute oracle minima up to this n (default: min(max, ceiling))")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--cache", default=DEFAULT_CACHE_PATH)
    p.add_argument("--no-cache", action="store_true")
    add_common(p, with_format=("text", "csv", "json"))
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(subcommand=args.subcommand)
    config.fmt = getattr(args, "format", "text")
    config.n = getattr(args, "n", None)
    config.n_max = getattr(args, "n_max", None)
    config.group = getattr(args, "group", "cyclic")
    config.coloring = getattr(args, "coloring", None)
    config.perturb = getattr(args, "perturb", None)
    config.aggressive_parity = getattr(args, "aggressive_parity", False)
    config.exhaustive_limit = getattr(args, "limit", 1 << 22)
    config.shards = getattr(args, "shards", None)
    config.order_ceiling = getattr(args, "ceiling", None)
    config.oracle_limit = getattr(args, "oracle_limit", None)
    threads = getattr(args, "threads", None)
    config.threads = threads if threads is not None else _default_threads()
    if getattr(args, "no_cache", False):
        config.cache_path = None
    else:
        config.cache_path = getattr(args, "cache", DEFAULT_CACHE_PATH)
    return config


def _validate(config: RunConfig) -> None:
    if config.subcommand in ("pn", "certify", "bound", "construct", "oracle", "parity"):
        if config.n is None or config.n < 3:
            raise ValueError(f"--n must be at least 3 for '{config.subcommand}', got {config.n}")
    if config.subcommand == "aps" and (config.n is None or config.n < 1):
        raise ValueError(f"--n must be positive, got {config.n}")
    if config.subcommand == "spectral":
        if (config.n is None) == (config.n_max is None):
            raise ValueError("spectral needs exactly one of --n or --max")
        if config.n is not None and config.n < 3:
            raise ValueError(f"--n must be at least 3, got {config.n}")
        if config.n_max is not None and config.n_max < 3:
            raise ValueError(f"--max must be at least 3, got {config.n_max}")
    if config.subcommand == "table" and config.n_max < 3:
        raise ValueError(f"--max must be at least 3, got {config.n_max}")
    if config.threads < 1:
        raise ValueError(f"--threads must be >= 1, got {config.threads}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args)
    try:
        _validate(config)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return dispatch(config)


if __name__ == "__main__":
    sys.exit(main())
