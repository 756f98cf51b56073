"""Outcome records for identity checks."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

FLOAT_RTOL = 1e-9


@dataclass
class VerificationReport:
    identity: str
    params: dict
    mode: str
    passed: bool
    residual: Any  # exact: Fraction, float: relative residual
    ms: float = 0.0
    detail: str = ""
    checks: int = 0

    def residual_repr(self):
        if isinstance(self.residual, float):
            return self.residual
        return str(self.residual)

    def to_dict(self, timings: bool = True) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "mode": self.mode,
            "pass": self.passed,
            "residual": self.residual_repr(),
            "ms": round(self.ms, 3) if timings else 0,
            "checks": self.checks,
            "detail": self.detail,
        }

    def __str__(self):
        flag = "PASS" if self.passed else "FAIL"
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        tail = f"  [{self.detail}]" if self.detail else ""
        return f"{flag} {self.identity}({ps}) mode={self.mode} residual={self.residual_repr()}{tail}"


def _entries(x):
    from .exactlinalg import QMatrix

    if isinstance(x, QMatrix):
        return [v for row in x.data for v in row]
    if isinstance(x, (list, tuple)):
        out = []
        for v in x:
            out.extend(_entries(v))
        return out
    return [x]


class Tally:
    """Accumulates comparisons for one identity and turns them into a report.

    In exact mode the residual is the largest |lhs - rhs| and must be 0.
    In float mode it is max|lhs - rhs| / max(|lhs|, |rhs|, scale) and must
    stay below FLOAT_RTOL.
    """

    def __init__(self, identity: str, params: dict, qc=None, mode: str | None = None):
        self.identity = identity
        self.params = dict(params)
        if qc is not None:
            self.params.setdefault("u", qc.label)
            mode = qc.mode
        self.mode = mode or "exact"
        self.exact = self.mode == "exact"
        self.residual = Fraction(0) if self.exact else 0.0
        self.failures: list[str] = []
        self.worst = ""
        self.worst_residual = self.residual
        self.count = 0
        self._t0 = time.perf_counter()

    def compare(self, label: str, lhs, rhs, scale=None) -> bool:
        a, b = _entries(lhs), _entries(rhs)
        if len(a) == 1 and len(b) > 1:
            a = a * len(b)
        if len(b) == 1 and len(a) > 1:
            b = b * len(a)
        if len(a) != len(b):
            return self.fail(f"{label}: shape mismatch")
        self.count += 1
        diff = max((abs(x - y) for x, y in zip(a, b)), default=0)
        if self.exact:
            res = Fraction(diff)
            ok = res == 0
        else:
            size = max((abs(v) for v in a + b), default=0.0)
            if scale is not None:
                size = max(size, float(scale))
            res = float(diff) / size if size else float(diff)
            ok = res < FLOAT_RTOL
        if res > self.residual:
            self.residual = res
        if not ok:
            self._failed(f"{label}: residual {res}", res)
        return ok

    def _failed(self, text: str, res) -> None:
        self.failures.append(text)
        if not self.worst or res > self.worst_residual:
            self.worst, self.worst_residual = text, res

    def require(self, label: str, ok: bool) -> bool:
        self.count += 1
        if not ok:
            self.fail(label)
        return ok

    def fail(self, label: str) -> bool:
        self.failures.append(label)
        if not self.worst:
            self.worst = label
        return False

    def merge(self, rep: "VerificationReport", prefix: str = "") -> None:
        self.count += rep.checks
        if rep.residual > self.residual:
            self.residual = rep.residual
        if not rep.passed:
            self._failed(prefix + (rep.detail or rep.identity), rep.residual)

    def done(self) -> VerificationReport:
        ms = (time.perf_counter() - self._t0) * 1000.0
        return VerificationReport(
            identity=self.identity,
            params=self.params,
            mode=self.mode,
            passed=not self.failures,
            residual=self.residual,
            ms=ms,
            detail=self.worst,
            checks=self.count,
        )
