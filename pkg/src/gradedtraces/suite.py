"""Fixed, versioned list of verification checks run by ``gradedtraces verify``."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import affine, modforms, rootsys, voatrace, zmodes
from .qseries import (
    QSeries,
    bernoulli,
    delta,
    eisenstein,
    eta_pow,
    eval_numeric,
    jfunction,
    frac_str,
)

SUITE_VERSION = 1
SUITES = ("qseries", "zmodes", "modforms", "rootsys", "oracle", "voatrace")


@dataclass
class SuiteResult:
    suite: str
    check: str
    status: str
    expected: str
    actual: str
    elapsed_ms: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "check": self.check,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 1)
        return out


def _s(x) -> str:
    if isinstance(x, Fraction):
        return frac_str(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_s(v) for v in x) + "]"
    return str(x)


Check = Callable[[], tuple]  # returns (expected, actual); pass iff equal


# -- qseries ---------------------------------------------------------------------------


def _numeric_ratio(kind: str, tau: complex) -> float:
    terms = 200
    if kind == "eta":
        f = eta_pow(1, terms)
        a, _ = eval_numeric(f, -1 / tau)
        b, _ = eval_numeric(f, tau)
        return abs(a * a / ((-1j * tau) * b * b) - 1)
    f = delta(terms)
    a, _ = eval_numeric(f, -1 / tau)
    b, _ = eval_numeric(f, tau)
    return abs(a / (tau**12 * b) - 1)


TAUS = (1j, 0.3 + 0.8j, 0.5 + 1j)


def _qseries_checks() -> list[tuple[str, Check]]:
    def brute(prec):
        f = QSeries(0, (1,) + (0,) * (prec - 1))
        for n in range(1, prec):
            fac = QSeries(0, tuple([1] + [0] * (n - 1) + [-1] + [0] * (prec - n - 1)))
            for _ in range(24):
                f = f * fac
        return QSeries(24, f.coeffs)

    return [
        ("bernoulli B4", lambda: (Fraction(-1, 30), bernoulli(4))),
        ("G4 head", lambda: ([Fraction(1, 720), Fraction(1, 3)], list(eisenstein(4, 2).coeffs))),
        ("delta two routes, 100 terms", lambda: (True, delta(100) == eta_pow(24, 100))),
        ("eta^24 brute-force product", lambda: (True, brute(12) == eta_pow(24, 12))),
        ("J head", lambda: ("q^-1 + 0 + 196884q", str(jfunction(3)))),
        ("Z(1) head, dim V1 = 24", lambda: ("q^-1 + 24", str((jfunction(2) + 24)))),
        ("eta(-1/tau) numeric", lambda: (True, all(_numeric_ratio("eta", t) < 1e-9 for t in TAUS))),
        ("Delta(-1/tau) numeric", lambda: (True, all(_numeric_ratio("delta", t) < 1e-9 for t in TAUS))),
    ]


# -- zmodes -----------------------------------------------------------------------------


def _zmodes_checks() -> list[tuple[str, Check]]:
    F = Fraction
    return [
        ("wt-1 table for v[-1]", lambda: (
            [F(1), F(1, 2), F(-1, 12), F(1, 24), F(-19, 720)],
            [zmodes.square_from_round(1, -1, 3)[m] for m in range(-1, 4)],
        )),
        ("L[-2] expansion", lambda: (
            "-1*id + 1*L(-2) + 3/2*L(-1) + 5/12*L(0) + -1/24*L(1) + 11/720*L(2)",
            str(zmodes.virasoro_expansion(24, -2, 5)),
        )),
        ("L[2] head", lambda: ([F(1), F(-1, 2)], [zmodes.virasoro_expansion(24, 2, 2).modes[k] for k in (2, 3)])),
        ("roundtrip wt 1..4, window 8", lambda: (True, all(zmodes.roundtrip(w, 8).identity for w in range(1, 5)))),
    ]


# -- modforms -----------------------------------------------------------------------------


def _modforms_checks() -> list[tuple[str, Check]]:
    def closure_g4():
        r = modforms.delta_module_closure([(eisenstein(4, 60), 4)], 40)
        return all(r.dims.get(k, 0) == modforms.mk_space(k).dim for k in range(4, 41, 2))

    def closure_delta():
        r = modforms.delta_module_closure([(delta(60), 12)], 40)
        return all(r.dims.get(k, 0) == modforms.cusp_space(k).dim for k in range(12, 41, 2))

    return [
        ("delta_4 G4 = 14 G6", lambda: (True, modforms.serre_delta(eisenstein(4, 50), 4) == eisenstein(6, 50) * 14)),
        ("delta_12 Delta = 0", lambda: (True, modforms.serre_delta(delta(50), 12).is_zero())),
        ("Delta in G4/G6 monomials", lambda: (
            {(3, 0): Fraction(216000), (0, 2): Fraction(-529200)},
            modforms.monomial_coordinates(delta(10), 12),
        )),
        ("cusp dims 10, 12, 14, 16", lambda: ([0, 1, 0, 1], [modforms.cusp_space(k).dim for k in (10, 12, 14, 16)])),
        ("closure of G4 to weight 40", lambda: (True, closure_g4())),
        ("closure of Delta to weight 40", lambda: (True, closure_delta())),
        ("P_0 at c = 24 has dim 2", lambda: (2, modforms.p_space(24, 0).dim)),
    ]


# -- rootsys -------------------------------------------------------------------------------

TABLE = {
    "A1": (3, 8), "A2": (8, 12), "D4": (28, 24), "E6": (78, 48),
    "E7": (133, 72), "E8": (248, 120), "F4": (52, 36), "G2": (14, 16),
}


def _rootsys_checks(seed: int) -> list[tuple[str, Check]]:
    out = []
    for t, r in rootsys.AUGMENTED:
        def row(t=t, r=r):
            rs = rootsys.build(t, r)
            k = rootsys.kappa_hh(rs)
            t4 = rootsys.power_trace(rs, rootsys.coroot(rs.long_root()), 4)
            name = rs.name
            return (TABLE[name] + (TABLE[name][1] + 24,), (rs.dim, k, t4))
        out.append((f"table row {t}{'' if t in rootsys.EXCEPTIONAL_RANKS else r}", row))
    for t, (lo, hi) in {"A": (3, 12), "B": (2, 12), "C": (3, 12), "D": (4, 12)}.items():
        out.append((f"sweep {t} {lo}..{hi}", lambda t=t, lo=lo, hi=hi: (
            True, all(row.ok for row in rootsys.classical_sweep(t, lo, hi))
        )))
    out.append(("four-design zeros", lambda: (True, all(
        rootsys.four_design_check(rootsys.build(t, r), 20, seed).ok for t, r in rootsys.AUGMENTED
    ))))
    out.append(("only D4 has integral level", lambda: (["D4"], [
        name for name, *_rest, lev in rootsys.table() if lev.denominator == 1
    ])))
    return out


# -- oracle ---------------------------------------------------------------------------------


def _oracle_checks(seed: int, levels: Sequence[Fraction]) -> list[tuple[str, Check]]:
    out = []
    for kind in ("sl2", "sl3"):
        out.append((f"expansion {kind}", lambda kind=kind: (True, all(
            r.ok for r in affine.verify_expansion(kind, levels, 20, seed)
        ))))
        out.append((f"general traces {kind}", lambda kind=kind: (True, all(
            r.ok for r in affine.verify_general_traces(kind, levels, 20, seed)
        ))))
    return out


# -- voatrace ---------------------------------------------------------------------------------


def _voatrace_checks() -> list[tuple[str, Check]]:
    out = []
    for t, r in rootsys.AUGMENTED:
        def y(t=t, r=r):
            rep = voatrace.y_alpha_report(t, r)
            return (
                (0, True, True, True),
                (rep.tr_v0, rep.tr_v1 != 0, rep.factor1 != 0, rep.consistent),
            )
        out.append((f"y(alpha) {t}{'' if t in rootsys.EXCEPTIONAL_RANKS else r}", y))
    out.append(("sl2 irreducibles 1..4", lambda: (True, all(x["ok"] for x in voatrace.sl2_irrep_identity()))))
    out.append(("abelian traces", lambda: (
        ("-1/120*s", "-11/5*s", "0", "-12*s^2"),
        tuple(str(x) for x in (lambda r: (r.head, r.const) + r.combo_traces)(voatrace.abelian_report())),
    )))
    out.append(("L[-2] shift claim c=16,24", lambda: (True, all(voatrace.l2_shift_claim(c).ok for c in (16, 24)))))
    return out


def checks(suite: str, seed: int = 0, levels: Sequence[Fraction] = affine.DEFAULT_LEVELS):
    if suite == "qseries":
        return _qseries_checks()
    if suite == "zmodes":
        return _zmodes_checks()
    if suite == "modforms":
        return _modforms_checks()
    if suite == "rootsys":
        return _rootsys_checks(seed)
    if suite == "oracle":
        return _oracle_checks(seed, levels)
    if suite == "voatrace":
        return _voatrace_checks()
    raise ValueError(f"unknown suite {suite!r}")


def run(suites: Sequence[str], seed: int = 0, levels: Sequence[Fraction] = affine.DEFAULT_LEVELS) -> list[SuiteResult]:
    results = []
    for name in suites:
        for check, fn in checks(name, seed, levels):
            t0 = time.perf_counter()
            try:
                expected, actual = fn()
                status = "pass" if expected == actual else "fail"
            except Exception as exc:  # a crash is a failed check, not a runner error
                expected, actual, status = "no exception", f"{type(exc).__name__}: {exc}", "fail"
            ms = (time.perf_counter() - t0) * 1000
            results.append(SuiteResult(name, check, status, _s(expected), _s(actual), ms))
    return results


__all__ = ["SUITES", "SUITE_VERSION", "SuiteResult", "checks", "run"]
