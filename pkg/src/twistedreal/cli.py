"""Command-line front end.

Subcommands::

    twistedreal verify cone      --modulus N [--cutoff C] [--algebra-cutoff A]
    twistedreal verify conformal --fixture F [--k K]
    twistedreal fluctuate        --fixture F --k K --one-form P
    twistedreal retwist          --fixture F --k K --k2 K2
    twistedreal ko-dim           --epsilon E --epsilon-prime E [--epsilon-double-prime E]

Exit codes: 0 all axioms pass, 1 at least one axiom fails (the report is
still emitted), 2 invalid configuration or unreadable/invalid input.  JSON
output is byte-identical for identical configuration and fixtures, whatever
the worker count; the wall-clock timing is shown in text mode only.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import conformal
from .errors import ConfigError, VerifierError
from .graded_triple import verify_cone
from .report import SignSummary, SuiteReport

WORKERS_ENV = "TWISTEDREAL_WORKERS"


@dataclass
class SuiteConfig:
    """Validated invocation parameters for one suite run."""

    target: str
    modulus: Optional[int] = None
    cutoff: Optional[int] = None
    algebra_cutoff: Optional[int] = None
    fixture_path: Optional[str] = None
    k_path: Optional[str] = None
    k2_path: Optional[str] = None
    one_form_path: Optional[str] = None
    epsilon: Optional[int] = None
    epsilon_prime: Optional[int] = None
    epsilon_double_prime: Optional[int] = None
    format: str = "text"
    workers: int = 1

    def validate(self):
        if self.target not in ("cone", "conformal", "fluctuation", "retwist", "ko"):
            raise ConfigError(f"unknown target {self.target!r}", field="target")
        if self.format not in ("text", "json"):
            raise ConfigError("format must be 'text' or 'json'", field="format")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1", field="workers")
        if self.target == "cone":
            if self.modulus is None or self.modulus < 2:
                raise ConfigError("N must be >= 2", field="modulus")
            if self.cutoff is None or self.cutoff < 0:
                raise ConfigError("cutoff must be >= 0", field="cutoff")
            if self.algebra_cutoff is None or self.algebra_cutoff < 0:
                raise ConfigError("algebra-cutoff must be >= 0", field="algebra_cutoff")
        elif self.target in ("conformal", "fluctuation", "retwist"):
            if not self.fixture_path:
                raise ConfigError("a fixture path is required", field="fixture")
            if self.target == "fluctuation" and not (self.k_path and self.one_form_path):
                raise ConfigError(
                    "fluctuation needs --k and --one-form", field="one_form"
                )
            if self.target == "retwist" and not (self.k_path and self.k2_path):
                raise ConfigError("retwist needs --k and --k2", field="k2")
        else:  # ko
            if self.epsilon is None or self.epsilon_prime is None:
                raise ConfigError(
                    "ko-dim needs --epsilon and --epsilon-prime", field="epsilon"
                )

    def echo(self) -> dict:
        out = {"target": self.target}
        for key in (
            "modulus",
            "cutoff",
            "algebra_cutoff",
            "fixture_path",
            "k_path",
            "k2_path",
            "one_form_path",
            "epsilon",
            "epsilon_prime",
            "epsilon_double_prime",
        ):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        out["format"] = self.format
        out["workers"] = self.workers
        return out


def run(config: SuiteConfig):
    """Execute the configured suite; returns (SuiteReport, exit_code)."""
    config.validate()
    t0 = time.monotonic()
    if config.target == "cone":
        res = verify_cone(
            config.modulus, config.cutoff, config.algebra_cutoff, config.workers
        )
        reports, signs = res.reports, res.signs
    elif config.target == "ko":
        dim = conformal.ko_dimension(
            config.epsilon, config.epsilon_prime, config.epsilon_double_prime
        )
        signs = SignSummary(
            config.epsilon, config.epsilon_prime, config.epsilon_double_prime, dim
        )
        reports = []
    else:
        base = conformal.parse_fixture(config.fixture_path)
        if config.k_path:
            k = conformal.parse_conformal_factor(config.k_path, base)
            twisted = conformal.build_twisted(base, k)
        else:
            twisted = conformal.TwistedTriple.trivial(base)
        if config.target == "fluctuation":
            alpha = conformal.parse_one_form(config.one_form_path, twisted)
            central = [
                conformal.check_alpha_prime_central(twisted, alpha, i)
                for i in range(len(twisted.gens))
            ]
            closure = [
                conformal.fluctuation_closure_check(twisted, alpha, i)
                for i in range(len(twisted.gens))
            ]
            twisted = conformal.fluctuate(twisted, alpha)
            res = conformal.verify_twisted(twisted)
            reports = res.reports + _merge(central) + _merge(closure)
            signs = res.signs
        elif config.target == "retwist":
            k2 = conformal.parse_conformal_factor(config.k2_path, base)
            twisted = conformal.retwist(twisted, k2)
            res = conformal.verify_twisted(twisted)
            reports, signs = res.reports, res.signs
        else:
            res = conformal.verify_twisted(twisted)
            reports, signs = res.reports, res.signs
    elapsed = time.monotonic() - t0
    report = SuiteReport(
        config=config.echo(), axioms=reports, signs=signs, elapsed=elapsed
    )
    return report, (0 if report.overall else 1)


def _merge(reports):
    """Collapse same-axiom instance reports into one aggregated report."""
    if not reports:
        return []
    first = reports[0]
    witness = next((r.witness for r in reports if not r.verdict), None)
    merged = type(first)(
        axiom=first.axiom,
        verdict=all(r.verdict for r in reports),
        instances=sum(r.instances for r in reports),
        inputs=first.inputs,
        witness=witness,
    )
    return [merged]


def emit_report(report: SuiteReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    return report.to_text()


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _add_common(parser):
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=_default_workers(),
        help=f"worker processes (or set {WORKERS_ENV})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistedreal",
        description="Exact verifier for twisted reality conditions of Dirac operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    vsub = verify.add_subparsers(dest="target", required=True)

    cone = vsub.add_parser("cone", help="quantum-cone suite")
    cone.add_argument("--modulus", type=int, required=True, help="grading modulus N")
    cone.add_argument("--cutoff", type=int, default=6, help="basis total-degree cutoff")
    cone.add_argument(
        "--algebra-cutoff", type=int, default=6, help="algebra total-degree cutoff"
    )
    _add_common(cone)

    conf = vsub.add_parser("conformal", help="finite-triple suite")
    conf.add_argument("--fixture", required=True, help="finite triple fixture JSON")
    conf.add_argument("--k", help="conformal factor JSON (omit for identity twist)")
    _add_common(conf)

    fluct = sub.add_parser("fluctuate", help="fluctuate a twisted triple and verify")
    fluct.add_argument("--fixture", required=True)
    fluct.add_argument("--k", required=True)
    fluct.add_argument("--one-form", required=True, dest="one_form")
    _add_common(fluct)

    retw = sub.add_parser("retwist", help="iterate the conformal twist and verify")
    retw.add_argument("--fixture", required=True)
    retw.add_argument("--k", required=True)
    retw.add_argument("--k2", required=True)
    _add_common(retw)

    ko = sub.add_parser("ko-dim", help="KO-dimension from the reality signs")
    ko.add_argument("--epsilon", type=int, required=True, choices=(1, -1))
    ko.add_argument("--epsilon-prime", type=int, required=True, choices=(1, -1))
    ko.add_argument("--epsilon-double-prime", type=int, choices=(1, -1))
    _add_common(ko)

    return parser


def config_from_args(args) -> SuiteConfig:
    if args.command == "verify" and args.target == "cone":
        return SuiteConfig(
            target="cone",
            modulus=args.modulus,
            cutoff=args.cutoff,
            algebra_cutoff=args.algebra_cutoff,
            format=args.format,
            workers=args.workers,
        )
    if args.command == "verify":
        return SuiteConfig(
            target="conformal",
            fixture_path=args.fixture,
            k_path=args.k,
            format=args.format,
            workers=args.workers,
        )
    if args.command == "fluctuate":
        return SuiteConfig(
            target="fluctuation",
            fixture_path=args.fixture,
            k_path=args.k,
            one_form_path=args.one_form,
            format=args.format,
            workers=args.workers,
        )
    if args.command == "retwist":
        return SuiteConfig(
            target="retwist",
            fixture_path=args.fixture,
            k_path=args.k,
            k2_path=args.k2,
            format=args.format,
            workers=args.workers,
        )
    return SuiteConfig(
        target="ko",
        epsilon=args.epsilon,
        epsilon_prime=args.epsilon_prime,
        epsilon_double_prime=args.epsilon_double_prime,
        format=args.format,
        workers=args.workers,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args)
    try:
        report, code = run(config)
    except VerifierError as exc:
        print(exc.diagnostic(), file=sys.stderr)
        return 2
    sys.stdout.write(emit_report(report, config.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
