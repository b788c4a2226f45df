"""Command-line front end: compose the verification suites, emit JSON.

Consumers are scripts and CI.  Exit status: 0 all checks pass, 1 at least
one check failed, 2 usage error, 3 an oracle precondition was violated.
Flags can be pre-seeded through QSPHERE_* environment variables.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .report import VerificationReport
from .suites import DELTA_SUITES, SUITE_DEPS, SUITE_ORDER, SUITES
from .verma import OracleError

# per-suite defaults for parameters the user left unset
SUITE_DEFAULTS = {
    "factorization": {"n": 2, "max_deg": 4, "sigma": "both"},
    "span": {"n": 2, "max_deg": 4, "sigma": "both"},
    "normalizer": {"n": 2, "max_deg": 4, "sigma": "both"},
    "harish": {"n": 2, "max_deg": 4, "sigma": "both"},
    "serre-radical": {"n": 2, "weight_bound": 5},
    "xyz": {"n": 3},
    "irreducibility": {"n": 2, "max_deg": 4, "sigma": "both", "v0": 2},
    "f-inverse": {"n": 2, "max_deg": 4, "sigma": "both"},
    "module-algebra": {"n": 2},
    "delta-inv": {"n": 2, "kmax": 6},
    "invariant-dims": {"n": 2, "max_deg": 4, "v0": 2},
    "star": {"n": 2, "max_deg": 2},
}

# which suites accept which specialization request
GENERIC_SUITES = {"serre-radical", "xyz"}


@dataclass
class SuiteConfig:
    n: int = None
    max_deg: int = None
    mode: str = None
    v0: Fraction = None
    sigma: str = None
    out: str = None
    threads: int = None  # accepted as a hint; execution is deterministic


def _env_default(name, cast=str):
    val = os.environ.get("QSPHERE_" + name)
    if val is None:
        return None
    return cast(val)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qsphere",
        description="exact verification suites for the quantized even sphere",
    )
    sub = p.add_subparsers(dest="command")
    v = sub.add_parser("verify", help="run one suite (or 'all') and emit a JSON report")
    v.add_argument("suite", help="suite name or 'all'")
    v.add_argument("--n", type=int, default=_env_default("N", int), help="rank")
    v.add_argument(
        "--max-deg", type=int, default=_env_default("MAX_DEG", int), help="degree bound"
    )
    v.add_argument(
        "--mode",
        choices=("generic", "specialized"),
        default=_env_default("MODE"),
        help="weight specialization request",
    )
    v.add_argument(
        "--v",
        dest="v0",
        default=_env_default("V"),
        help="numeric evaluation point as P or P/Q",
    )
    v.add_argument(
        "--sigma",
        choices=("+1", "-1", "both"),
        default=_env_default("SIGMA"),
        help="branch sign of the specialized weight",
    )
    v.add_argument("--out", default=_env_default("OUT"), help="report path (default stdout)")
    v.add_argument(
        "--threads",
        type=int,
        default=_env_default("THREADS", int),
        help="worker hint (checks are pure; current runner is serial)",
    )
    return p


def _suite_kwargs(name, cfg: SuiteConfig):
    kw = dict(SUITE_DEFAULTS[name])
    if cfg.n is not None:
        kw["n"] = cfg.n
    if cfg.max_deg is not None:
        if "max_deg" in kw:
            kw["max_deg"] = cfg.max_deg
        elif "weight_bound" in kw:
            kw["weight_bound"] = cfg.max_deg
        elif "kmax" in kw:
            kw["kmax"] = cfg.max_deg
    if cfg.sigma is not None and "sigma" in kw:
        kw["sigma"] = cfg.sigma
    if cfg.v0 is not None and "v0" in kw:
        kw["v0"] = Fraction(cfg.v0)
    return kw


def _validate(name, cfg: SuiteConfig):
    kw = _suite_kwargs(name, cfg)
    n = kw.get("n", 2)
    if name in DELTA_SUITES and n < 2:
        raise UsageError("suite %r involves the doubled root and needs --n >= 2" % name)
    if name == "xyz" and n < 3:
        raise UsageError("suite 'xyz' instantiates three consecutive columns; needs --n >= 3")
    if cfg.mode == "generic" and name not in GENERIC_SUITES:
        raise UsageError("suite %r runs at the specialized weight, not generic" % name)
    if cfg.mode == "specialized" and name in GENERIC_SUITES:
        raise UsageError("suite %r is inherently generic" % name)
    if cfg.v0 is not None:
        v0 = Fraction(cfg.v0)
        if v0 in (0, 1, -1):
            raise UsageError("--v must avoid 0 and the unit points")
    return kw


class UsageError(ValueError):
    pass


def run_suite(name: str, cfg: SuiteConfig) -> VerificationReport:
    if name not in SUITES:
        raise UsageError("unknown suite %r (choose from %s or 'all')" % (name, ", ".join(SUITE_ORDER)))
    kw = _validate(name, cfg)
    return SUITES[name](**kw)


def run_all(cfg: SuiteConfig) -> VerificationReport:
    agg = VerificationReport(
        "all",
        {
            "n": cfg.n,
            "max_deg": cfg.max_deg,
            "v": str(cfg.v0) if cfg.v0 is not None else None,
            "sigma": cfg.sigma,
        },
        "composite",
    )
    t0 = time.monotonic()
    status = {}
    for name in SUITE_ORDER:
        deps = SUITE_DEPS.get(name, [])
        blocked = [d for d in deps if status.get(d) is False]
        if blocked:
            status[name] = False
            agg.record(
                "suite:" + name,
                False,
                "not run: dependency failed (%s)" % ", ".join(blocked),
            )
            continue
        try:
            sub = run_suite(name, cfg)
        except UsageError:
            # a globally-set rank may undercut a rank-specific suite; fall
            # back to that suite's own default rank
            sub_cfg = SuiteConfig(
                n=None,
                max_deg=cfg.max_deg,
                mode=None,
                v0=cfg.v0,
                sigma=cfg.sigma,
                out=None,
                threads=cfg.threads,
            )
            sub = run_suite(name, sub_cfg)
        status[name] = sub.passed
        agg.record(
            "suite:" + name,
            sub.passed,
            "%d of %d checks failed" % (len(sub.failures), len(sub.checks)),
        )
    agg.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return agg


def _emit(report: VerificationReport, out_path):
    text = report.to_json()
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "verify":
        parser.print_usage(sys.stderr)
        return 2
    cfg = SuiteConfig(
        n=args.n,
        max_deg=args.max_deg,
        mode=args.mode,
        v0=args.v0,
        sigma=args.sigma,
        out=args.out,
        threads=args.threads,
    )
    try:
        if args.suite == "all":
            report = run_all(cfg)
        else:
            report = run_suite(args.suite, cfg)
    except UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 2
    except OracleError as e:
        print("oracle precondition violated: %s" % e, file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 2
    _emit(report, cfg.out)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
