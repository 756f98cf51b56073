"""Acceptance criteria 1-8, each at its stated tolerance and time limit.

Every criterion prints one PASS/FAIL line (collected in the terminal summary).
Timings are taken single-threaded from cold caches.
"""

import os
import subprocess
import sys
import time

import pytest

from qbr.cli import IDENTITIES, SuiteConfig, clear_caches, collect
from qbr.report import FLOAT_RTOL

from conftest import ACCEPTANCE_LINES

LIMITS = {1: 5.0, 2: 20.0, 3: 30.0, 4: 60.0, 5: None, 6: None}


def names(criterion):
    return tuple(i.name for i in IDENTITIES if i.criterion == criterion)


def run(criterion, mode="exact"):
    clear_caches()
    cfg = SuiteConfig(only=names(criterion), mode=mode, report=None, jobs=1)
    t0 = time.perf_counter()
    rep = collect(cfg)
    return rep, time.perf_counter() - t0


def worst(rep):
    if not rep["results"]:
        return 0
    vals = [r["residual"] for r in rep["results"]]
    if isinstance(vals[0], str):
        from fractions import Fraction

        return max(Fraction(v) for v in vals)
    return max(vals)


def record(criterion, ok, text):
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {text}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def failures(rep, limit=8):
    bad = [r for r in rep["results"] if not r["pass"]]
    lines = [f"{r['identity']}{r['params']} residual={r['residual']} [{r['detail']}]"
             for r in bad[:limit]]
    if len(bad) > limit:
        lines.append(f"... {len(bad) - limit} more")
    return "\n".join(lines)


@pytest.mark.parametrize("criterion", [1, 2, 3, 4, 5, 6])
def test_exact_criterion(criterion):
    rep, secs = run(criterion)
    limit = LIMITS[criterion]
    s = rep["summary"]
    exact_zero = all(r["residual"] == "0" for r in rep["results"])
    in_time = limit is None or secs < limit
    ok = s["fail"] == 0 and exact_zero and in_time and s["pass"] > 0
    bound = f" (limit {limit:.0f} s)" if limit else ""
    record(criterion, ok, f"exact: {s['pass']} passed, {s['fail']} failed, "
                          f"max residual {worst(rep)}, {secs:.1f} s{bound}")
    assert s["fail"] == 0, failures(rep)
    assert exact_zero
    assert in_time, f"took {secs:.1f} s, limit {limit} s"


def test_float_criterion_7():
    """Criteria 1-6 again in binary64; every relative residual must stay below 1e-9."""
    parts, all_ok, report = [], True, []
    for criterion in range(1, 7):
        rep, _ = run(criterion, mode="float")
        w = worst(rep)
        ok = rep["summary"]["fail"] == 0 and w < FLOAT_RTOL
        all_ok &= ok
        parts.append(f"{criterion}:{'ok' if ok else 'FAIL'}({w:.1e})")
        if not ok:
            report.append(f"criterion {criterion} in float mode:\n{failures(rep, 4)}")
    record(7, all_ok, "float: max relative residual per criterion " + " ".join(parts))
    assert all_ok, "\n".join(report)


def test_cli_contract_criterion_8(tmp_path):
    env = {k: v for k, v in os.environ.items() if k != "QBR_JOBS"}
    outs, codes = [], []
    for k in range(2):
        path = tmp_path / f"report{k}.json"
        proc = subprocess.run([sys.executable, "-m", "qbr", "suite", "--report", str(path)],
                              capture_output=True, text=True, env=env, cwd=tmp_path)
        codes.append(proc.returncode)
        outs.append(path.read_bytes())
    same = outs[0] == outs[1]
    ok = codes == [0, 0] and same
    record(8, ok, f"default suite exit codes {codes}, reports byte-identical: {same}")
    assert codes == [0, 0]
    assert same
