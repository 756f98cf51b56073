"""Command-line harness: identity suites over a parameter grid, and matrix dumps.

    qbr suite [--s 1.5] [--a 3] [--N 6] [--u 3/5 ...] [--mode exact|float]
              [--only name,...] [--report path] [--jobs n] [--timings]
    qbr gen ENTITY [--s ..] [--l ..] [--a ..] [--N ..] [--r ..] [--u p/q]
              [--mode ..] [--format json|csv]
    qbr list

In ``suite`` the values of --s, --a and --N are upper bounds of the grid.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import braidedr, centralizer, qracah_braid, uqsl2rep
from .exactlinalg import QMatrix
from .qnumbers import (EXACT, FLOAT, AdmissibilityError, QContext, check_qseries_identities, half,
                       spin_str)
from .report import VerificationReport

DEFAULT_U = ("3/5", "2/7", "5/9")
QSERIES_NMAX = 8
QSERIES_SEED = 0


@dataclass(frozen=True)
class Identity:
    name: str
    kind: str  # "s", "sl", "aN", "a" or "u": the grid the check runs over
    run: Callable
    criterion: int


IDENTITIES = (
    Identity("representation", "s", uqsl2rep.check_representation, 1),
    Identity("coassociativity", "s", uqsl2rep.check_coassociativity, 1),
    Identity("tensor_spectrum", "s", uqsl2rep.check_tensor_spectrum, 1),
    Identity("omega_plus", "s", uqsl2rep.check_omega_plus, 2),
    Identity("EnFk", "s", uqsl2rep.check_EnFk_all, 2),
    Identity("intertwining", "s", braidedr.check_intertwining, 2),
    Identity("ybe", "s", braidedr.check_ybe, 2),
    Identity("spectral_decomposition", "s", braidedr.check_spectral_decomposition, 2),
    Identity("aw_relations", "s", centralizer.check_aw_relations, 3),
    Identity("centralizer_membership", "s", centralizer.check_centralizer_membership, 3),
    Identity("multiplicity", "s", centralizer.check_multiplicity, 3),
    Identity("restricted_pair", "sl", centralizer.check_restricted_pair, 3),
    Identity("rcheck_vs_S", "sl", centralizer.check_rcheck_vs_S, 3),
    Identity("aw_model", "aN", centralizer.check_aw_model, 4),
    Identity("model_invariants", "aN", qracah_braid.check_model_invariants, 4),
    Identity("diagonalization", "aN", qracah_braid.check_diagonalization, 4),
    Identity("braid_relation", "aN", qracah_braid.check_braid_relation, 4),
    Identity("braid_transition", "aN", qracah_braid.check_braid_transition, 4),
    Identity("s2_entries", "aN", qracah_braid.check_s2_entries, 4),
    Identity("orthogonality", "aN", qracah_braid.check_orthogonality, 4),
    Identity("addition", "aN", qracah_braid.check_addition, 4),
    Identity("recurrence_form", "aN", qracah_braid.check_recurrence_form, 4),
    Identity("q_inversion", "aN", qracah_braid.check_q_inversion, 4),
    Identity("n1_closed_forms", "a", qracah_braid.check_n1_closed_forms, 5),
    Identity("qseries", "u", lambda qc: check_qseries_identities(qc, QSERIES_NMAX, QSERIES_SEED), 6),
    Identity("duality", "aN", qracah_braid.check_duality, 6),
)
BY_NAME = {i.name: i for i in IDENTITIES}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    max_s: Fraction = Fraction(3, 2)
    max_a: int = 3
    max_N: int = 6
    u: tuple = tuple(Fraction(x) for x in DEFAULT_U)
    mode: str = EXACT
    only: tuple | None = None  # None selects everything
    report: str | None = "qbr-report.json"
    jobs: int = 1  # 0 picks the CPU count
    timings: bool = False

    def validate(self) -> None:
        if self.max_s < 0 or (2 * self.max_s).denominator != 1:
            raise ConfigError(f"max spin {self.max_s} is not a nonnegative half-integer")
        if self.max_a < 0 or self.max_N < 0:
            raise ConfigError("grid bounds must be nonnegative")
        if self.jobs < 0:
            raise ConfigError("--jobs must be nonnegative")
        if self.only is not None:
            unknown = [n for n in self.only if n not in BY_NAME]
            if unknown:
                raise ConfigError(f"unknown identities: {', '.join(unknown)}")
        for u in self.u:
            QContext(Fraction(u), self.mode)  # raises AdmissibilityError
            QContext(1 / Fraction(u), self.mode)

    def selected(self) -> list[Identity]:
        if self.only is None:
            return list(IDENTITIES)
        return [i for i in IDENTITIES if i.name in self.only]

    def to_dict(self) -> dict:
        return {
            "max_s": spin_str(self.max_s),
            "max_a": self.max_a,
            "max_N": self.max_N,
            "u": [str(Fraction(u)) for u in self.u],
            "mode": self.mode,
            "only": None if self.only is None else list(self.only),
            "qseries": {"n_max": QSERIES_NMAX, "seed": QSERIES_SEED},
        }


def _spins(max_s: Fraction) -> list[Fraction]:
    return [Fraction(k, 2) for k in range(int(2 * max_s) + 1)]


def _cases(config: SuiteConfig) -> list[tuple]:
    """Work units (u, key, identity names); one unit shares the caches of one spin or (a, N)."""
    chosen = config.selected()
    units = []
    for u in config.u:
        u = str(Fraction(u))
        for kind, keys in (
            ("s", [(s,) for s in _spins(config.max_s)]),
            ("aN", [(a, N) for a in range(config.max_a + 1) for N in range(config.max_N + 1)]),
            ("a", [(a,) for a in range(config.max_a + 1)]),
            ("u", [()]),
        ):
            for key in keys:
                names = [i.name for i in chosen
                         if i.kind == kind or (kind == "s" and i.kind == "sl")]
                if names:
                    units.append((u, key, tuple(names)))
    return units


def _run_one(ident: Identity, args: tuple, qc: QContext) -> VerificationReport:
    try:
        return ident.run(*args, qc) if args else ident.run(qc)
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        names = {"s": ("s",), "sl": ("s", "l"), "aN": ("a", "N"), "a": ("a",), "u": ()}[ident.kind]
        params = {k: spin_str(v) if isinstance(v, Fraction) else v for k, v in zip(names, args)}
        params["u"] = qc.label
        last = traceback.extract_tb(exc.__traceback__)[-1]
        return VerificationReport(ident.name, params, qc.mode, False,
                                  float("inf") if qc.mode == FLOAT else Fraction(-1),
                                  detail=f"{type(exc).__name__}: {exc} ({last.name})")


def _run_unit(unit: tuple, mode: str) -> list[VerificationReport]:
    u, key, names = unit
    qc = QContext(Fraction(u), mode)
    out = []
    for name in names:
        ident = BY_NAME[name]
        if ident.kind == "sl":
            for l in uqsl2rep.decomposition_data(key[0]).spins:
                out.append(_run_one(ident, (key[0], l), qc))
        else:
            out.append(_run_one(ident, key, qc))
    return out


def clear_caches() -> None:
    """Forget every memoized representation and model, so a run starts cold."""
    for mod in (uqsl2rep, braidedr, centralizer, qracah_braid):
        for obj in vars(mod).values():
            if callable(getattr(obj, "cache_clear", None)):
                obj.cache_clear()


def _jobs(config: SuiteConfig) -> int:
    jobs = config.jobs
    if jobs == 0:
        jobs = os.cpu_count() or 1
    return jobs


def collect(config: SuiteConfig) -> dict:
    """Run the suite and return the report as a plain dict."""
    config.validate()
    units = _cases(config)
    jobs = min(_jobs(config), max(len(units), 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_unit, units, [config.mode] * len(units)))
    else:
        batches = [_run_unit(unit, config.mode) for unit in units]
    reports = [r for batch in batches for r in batch]
    # report order follows the identity table, then the grid
    rank = {i.name: k for k, i in enumerate(IDENTITIES)}
    order = sorted(range(len(reports)), key=lambda k: (rank[reports[k].identity], k))
    results = [reports[k].to_dict(timings=config.timings) for k in order]
    npass = sum(1 for r in results if r["pass"])
    return {
        "config": config.to_dict(),
        "results": results,
        "summary": {"pass": npass, "fail": len(results) - npass},
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def run_suite(config: SuiteConfig, out=sys.stdout, verbose: bool = False) -> int:
    """Run, write the JSON report, print failures and a summary. Exit code 0 iff all pass."""
    report = collect(config)
    if config.report:
        with open(config.report, "w", encoding="utf-8") as fh:
            fh.write(dumps_report(report))
    for r in report["results"]:
        if verbose or not r["pass"]:
            ps = ", ".join(f"{k}={v}" for k, v in r["params"].items())
            flag = "PASS" if r["pass"] else "FAIL"
            tail = f"  [{r['detail']}]" if r["detail"] else ""
            print(f"{flag} {r['identity']}({ps}) residual={r['residual']}{tail}", file=out)
    s = report["summary"]
    print(f"{s['pass']} passed, {s['fail']} failed ({config.mode})", file=out)
    return 0 if s["fail"] == 0 else 1


# matrix generation ---------------------------------------------------------

ENTITIES = ("X1", "X2", "P", "S1", "S2", "Rcheck", "projector", "casimirs", "omega")


def generate(entity: str, qc: QContext, s=None, l=None, a=None, N=None, r=None) -> dict:
    """Named matrices for one entity; vectors come back as single columns."""
    if entity in ("X1", "X2", "P", "S1", "S2"):
        if s is not None and l is not None:
            a, N = qracah_braid.model_params(s, l)
        if a is None or N is None:
            raise ConfigError(f"{entity} needs --a and --N (or --s and --l)")
        return {entity: getattr(qracah_braid.build_model(a, N, qc), entity)}
    if s is None:
        raise ConfigError(f"{entity} needs --s")
    s = half(s)
    if entity == "Rcheck":
        return {"Rcheck": braidedr.braided_r(s, qc).Rcheck}
    if entity == "casimirs":
        cb = centralizer.casimir_bundle(s, qc)
        return {"C12": cb.C12, "C23": cb.C23, "C123": cb.C123}
    if r is None or not 0 <= r <= 2 * s:
        raise ConfigError(f"{entity} needs --r between 0 and 2s")
    if entity == "projector":
        return {f"P{r}": braidedr.braided_r(s, qc).projectors[r]}
    if entity == "omega":
        return {f"omega{r}": QMatrix.from_columns([uqsl2rep.omega_plus(s, r, qc)])}
    raise ConfigError(f"unknown entity {entity!r}")


def format_matrices(mats: dict, fmt: str) -> str:
    if fmt == "json":
        if len(mats) == 1:
            return next(iter(mats.values())).to_json() + "\n"
        return json.dumps({k: m.to_dict() for k, m in mats.items()}) + "\n"
    if len(mats) == 1:
        return next(iter(mats.values())).to_csv()
    return "".join(f"# {k}\n{m.to_csv()}" for k, m in mats.items())


# argument parsing ----------------------------------------------------------

def _spin_arg(text: str) -> Fraction:
    try:
        return half(Fraction(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _u_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational p/q") from None


def _jobs_default() -> int:
    env = os.environ.get("QBR_JOBS")
    return int(env) if env else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qbr", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    su = sub.add_parser("suite", help="run identity checks over a grid")
    su.add_argument("--s", type=_spin_arg, default=Fraction(3, 2),
                    help="largest spin (decimal, e.g. 1.5)")
    su.add_argument("--a", type=int, default=3, help="largest a")
    su.add_argument("--N", type=int, default=6, help="largest N")
    su.add_argument("--u", type=_u_arg, action="append", help="sample point p/q (repeatable)")
    su.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    su.add_argument("--only", help="comma-separated identity names")
    su.add_argument("--report", default="qbr-report.json", help="JSON report path")
    su.add_argument("--jobs", type=int, default=None, help="worker processes, 0 = all CPUs")
    su.add_argument("--timings", action="store_true", help="record wall times in the report")
    su.add_argument("-v", "--verbose", action="store_true", help="print passing checks too")

    g = sub.add_parser("gen", help="print a matrix")
    g.add_argument("entity", choices=ENTITIES)
    g.add_argument("--s", type=_spin_arg)
    g.add_argument("--l", type=_spin_arg)
    g.add_argument("--a", type=int)
    g.add_argument("--N", type=int)
    g.add_argument("--r", type=int, help="summand index for projector and omega")
    g.add_argument("--u", type=_u_arg, default=Fraction(DEFAULT_U[0]))
    g.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    g.add_argument("--format", choices=("json", "csv"), default="json")

    sub.add_parser("list", help="list identity names")
    return p


def config_from_args(ns) -> SuiteConfig:
    only = None
    if ns.only is not None:
        only = tuple(x.strip() for x in ns.only.split(",") if x.strip())
    return SuiteConfig(
        max_s=ns.s, max_a=ns.a, max_N=ns.N,
        u=tuple(ns.u) if ns.u else tuple(Fraction(x) for x in DEFAULT_U),
        mode=ns.mode, only=only, report=ns.report,
        jobs=ns.jobs if ns.jobs is not None else _jobs_default(),
        timings=ns.timings,
    )


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        if ns.command == "list":
            for i in IDENTITIES:
                print(f"{i.name:24s} grid={i.kind:3s} criterion={i.criterion}")
            return 0
        if ns.command == "suite":
            return run_suite(config_from_args(ns), verbose=ns.verbose)
        qc = QContext(ns.u, ns.mode)
        mats = generate(ns.entity, qc, s=ns.s, l=ns.l, a=ns.a, N=ns.N, r=ns.r)
        sys.stdout.write(format_matrices(mats, ns.format))
        return 0
    except (ConfigError, AdmissibilityError) as exc:
        print(f"qbr: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
