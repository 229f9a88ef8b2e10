"""Closed-form traces of zero modes on ``V_0`` and ``V_1``.

The formulas here assume a strongly rational holomorphic VOA of central charge
8, 16 or 24 whose weight-one space ``V_1`` is a reductive Lie algebra carrying
the Killing form ``kappa`` and the normalized invariant form ``<.|.>``.  They
are pure functions of form values and traces; the affine oracle in
:mod:`gradedtraces.affine` checks them against an explicit module.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import _linalg, rootsys
from .errors import DegenerateRatio, HypothesisViolation, UnsupportedCharge
from .modforms import cusp_space, serre_delta
from .qseries import QSeries, eisenstein, eta_pow, frac_str, jfunction

# -- context --------------------------------------------------------------------------


@dataclass(frozen=True)
class TraceContext:
    c: int
    n: int

    def __post_init__(self):
        if self.c not in (8, 16, 24):
            raise UnsupportedCharge(f"central charge must be 8, 16 or 24, got {self.c}")

    @property
    def ratio(self) -> Fraction:
        """``r`` with ``<u|v> = r kappa(u, v)``, from ``kappa = 2<.|.>(n/c - 1)``."""
        if self.n == self.c:
            raise DegenerateRatio(
                f"n = c = {self.c}: the weight-one Lie algebra is abelian and kappa vanishes"
            )
        return Fraction(self.c, 2 * (self.n - self.c))


def lz_from_killing(ctx: TraceContext, kappa_value) -> Fraction:
    return ctx.ratio * Fraction(kappa_value)


# -- small polynomial ring in s = <a|a> -----------------------------------------------


@dataclass(frozen=True)
class SymbolicNorm:
    """Polynomial ``sum coeffs[i] s^i`` with rational coefficients."""

    coeffs: tuple

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def s(cls) -> "SymbolicNorm":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "SymbolicNorm":
        return cls((c,))

    @staticmethod
    def _lift(x) -> "SymbolicNorm":
        return x if isinstance(x, SymbolicNorm) else SymbolicNorm((x,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return SymbolicNorm(tuple(self.coefficient(i) + o.coefficient(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return SymbolicNorm(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return SymbolicNorm(())
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return SymbolicNorm(tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicNorm((other,))
        return isinstance(other, SymbolicNorm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, s) -> Fraction:
        return sum((c * Fraction(s) ** i for i, c in enumerate(self.coeffs)), Fraction(0))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(frac_str(c) + ("*" + mono if mono else ""))
        return " + ".join(parts) or "0"


# -- the general trace formulas ------------------------------------------------------


def _s4(vals, f):
    total = 0
    for p in itertools.permutations(vals):
        total = total + f(*p)
    return total


def general_traces(
    a, b, c, d,
    lz: Callable,
    kappa: Callable,
    bracket: Callable,
    n: int,
    s3_trace,
):
    """Traces of ``o(a[-1]b[-1]c[-1]d)`` on ``V_0`` and ``V_1``.

    ``lz`` and ``kappa`` are the two forms, ``bracket`` the Lie bracket, ``n``
    the dimension of ``V_1`` and ``s3_trace`` the value of
    ``sum_{pi in S3} tr a(0) pi(b(0)) pi(c(0)) pi(d(0))``.  Form values may be
    any ring elements supporting ``+`` and ``*`` with rationals.
    """
    q = 4 * lz(bracket(a, b), bracket(c, d)) + 5 * lz(bracket(a, d), bracket(b, c))
    s_ll = _s4((a, b, c, d), lambda w, x, y, z: lz(w, x) * lz(y, z))
    s_lk = _s4((a, b, c, d), lambda w, x, y, z: lz(w, x) * kappa(y, z))
    tr0 = Fraction(-1, 720) * q + Fraction(1, 1152) * s_ll
    tr1 = (
        Fraction(-(n + 240), 720) * q
        + Fraction(n - 48, 1152) * s_ll
        - Fraction(1, 48) * s_lk
        + Fraction(1, 6) * s3_trace
    )
    return tr0, tr1


def general_traces_kappa(a, b, c, d, kappa: Callable, bracket: Callable, n: int, s3_trace):
    """The same traces at ``c = 24`` with ``<.|.>`` eliminated in favour of ``kappa``."""
    if n == 24:
        raise DegenerateRatio("n = 24")
    m = n - 24
    q = 4 * kappa(bracket(a, b), bracket(c, d)) + 5 * kappa(bracket(a, d), bracket(b, c))
    s_kk = _s4((a, b, c, d), lambda w, x, y, z: kappa(w, x) * kappa(y, z))
    tr0 = Fraction(-1, 60 * m) * q + Fraction(1, 8 * m * m) * s_kk
    tr1 = Fraction(-(n + 240), 60 * m) * q - Fraction(n, 8 * m * m) * s_kk + Fraction(1, 6) * s3_trace
    return tr0, tr1


def s3_trace_from_ad(ad: Callable, a, b, c, d) -> Fraction:
    """``sum_{pi in S3} tr ad(a) ad(pi b) ad(pi c) ad(pi d)`` by explicit matrices."""
    mats = {k: ad(v) for k, v in zip("abcd", (a, b, c, d))}
    total = Fraction(0)
    for p in itertools.permutations("bcd"):
        m = mats["a"]
        for k in p:
            m = _linalg.matmul(m, mats[k])
        total += _linalg.trace(m)
    return total


def bilinear_identity(bracket: Callable, form: Callable, a, b, c, d) -> bool:
    """``([a,c]:[b,d]) = ([a,b]:[c,d]) + ([a,d]:[b,c])`` for an invariant form."""
    lhs = form(bracket(a, c), bracket(b, d))
    rhs = form(bracket(a, b), bracket(c, d)) + form(bracket(a, d), bracket(b, c))
    return lhs == rhs


# -- x(u, v) ----------------------------------------------------------------------------


@dataclass(frozen=True)
class XTraces:
    tr_v0: Fraction
    tr_v1: Fraction
    warnings: tuple = ()

    def to_json(self) -> dict:
        return {
            "trV0": frac_str(self.tr_v0),
            "trV1": frac_str(self.tr_v1),
            "warnings": list(self.warnings),
        }


def x_traces(rs: rootsys.RootSystem, u, v, strict: bool = False) -> XTraces:
    """Traces of ``o(x(u, v))`` for Cartan elements given by root-frame vectors.

    The ``V_0`` trace vanishes identically under the hypotheses; violations of
    the hypotheses are reported as warnings, or raised when ``strict``.
    """
    warnings = tuple(rootsys.pair_violations(u, v))
    if warnings and strict:
        raise HypothesisViolation("; ".join(warnings))
    return XTraces(Fraction(0), rootsys.x_trace(rs, u, v), warnings)


def x_traces_from_ad(ad: Callable, u, v) -> Fraction:
    """``tr (u^4 - 6 u^2 v^2 + v^4)`` on ``V_1`` from adjoint matrices of commuting ``u, v``."""
    au, av = ad(u), ad(v)
    u2 = _linalg.matmul(au, au)
    v2 = _linalg.matmul(av, av)
    return (
        _linalg.trace(_linalg.matmul(u2, u2))
        - 6 * _linalg.trace(_linalg.matmul(u2, v2))
        + _linalg.trace(_linalg.matmul(v2, v2))
    )


# -- y(alpha) ---------------------------------------------------------------------------


def hhh_ef_traces(ctx: TraceContext, kappa_hh, tr_h4) -> dict:
    """Traces of ``h[-1]^3h`` and ``e[-1]f[-1]e[-1]f`` on ``V_0`` and ``V_1`` at ``c = 24``."""
    if ctx.c != 24:
        raise UnsupportedCharge("these traces are stated for central charge 24")
    n = ctx.n
    if n == 24:
        raise DegenerateRatio("n = 24")
    k, t4 = Fraction(kappa_hh), Fraction(tr_h4)
    m = Fraction(n - 24)
    return {
        "hhhh_V0": 3 * k * k / (m * m),
        "hhhh_V1": -3 * n * k * k / (m * m) + t4,
        "efef_V0": k / (60 * m) + k * k / (2 * m * m),
        "efef_V1": k * (n + 240) / (60 * m) - n * k * k / (2 * m * m) + t4 / 6,
    }


@dataclass
class YAlphaReport:
    name: str
    n: int
    kappa: Fraction
    tr_h4: Fraction
    C: Fraction
    tr_v0: Fraction
    tr_v1: Fraction
    tr_v1_direct: Fraction
    factor1: Fraction
    factor2: Fraction

    @property
    def consistent(self) -> bool:
        closed = self.factor1 * self.factor2 / (180 * self.kappa * (self.n - 24))
        return self.tr_v1 == self.tr_v1_direct == closed

    def to_json(self) -> dict:
        return {
            "type": self.name,
            "n": self.n,
            "kappa": frac_str(self.kappa),
            "tr_h4": frac_str(self.tr_h4),
            "C": frac_str(self.C),
            "trV0": frac_str(self.tr_v0),
            "trV1": frac_str(self.tr_v1),
            "factor1": frac_str(self.factor1),
            "factor2": frac_str(self.factor2),
            "consistent": self.consistent,
        }


def y_alpha_report(type_: str, rank: int | None = None) -> YAlphaReport:
    """``y(alpha) = e[-1]f[-1]e[-1]f - C h[-1]^3h`` for a long root, from root data."""
    rs = rootsys.build(type_, rank)
    n = rs.dim
    h = rootsys.coroot(rs.long_root())
    k = rootsys.kappa_hh(rs)
    t4 = rootsys.power_trace(rs, h, 4)
    ctx = TraceContext(24, n)
    tr = hhh_ef_traces(ctx, k, t4)
    C = tr["efef_V0"] / tr["hhhh_V0"]
    if C != Fraction(n - 24, 180) / k + Fraction(1, 6):
        raise AssertionError("ratio of V_0 traces disagrees with the closed form for C")
    tr_v0 = tr["efef_V0"] - C * tr["hhhh_V0"]
    tr_v1 = tr["efef_V1"] - C * tr["hhhh_V1"]
    direct = k * (n + 120) / (30 * (n - 24)) - Fraction(n - 24) / (180 * k) * t4
    f1 = 6 * k - n + 24
    f2 = (n + 120) * k + 24 * (n - 24)
    return YAlphaReport(rs.name, n, k, t4, C, tr_v0, tr_v1, direct, f1, f2)


# -- sl2 representations ------------------------------------------------------------------


def sl2_irrep(dim: int):
    """``(e, f, h)`` on the irreducible module of dimension ``dim``."""
    z = lambda: [[Fraction(0)] * dim for _ in range(dim)]  # noqa: E731
    e, f, h = z(), z(), z()
    for j in range(dim):
        h[j][j] = Fraction(dim - 1 - 2 * j)
        if j + 1 < dim:
            f[j + 1][j] = Fraction(1)
            e[j][j + 1] = Fraction((j + 1) * (dim - 1 - j))
    return e, f, h


def sl2_irrep_identity(dims: Sequence[int] = (1, 2, 3, 4)) -> list[dict]:
    """``tr(2efef + 4eeff) = tr h^4`` on each irreducible module."""
    mm = _linalg.matmul
    out = []
    for d in dims:
        e, f, h = sl2_irrep(d)
        comm = [[x - y for x, y in zip(r, s)] for r, s in zip(mm(e, f), mm(f, e))]
        if comm != h:
            raise AssertionError("representation matrices violate [e, f] = h")
        ef = mm(e, f)
        lhs = 2 * _linalg.trace(mm(ef, ef)) + 4 * _linalg.trace(mm(mm(e, e), mm(f, f)))
        h2 = mm(h, h)
        rhs = _linalg.trace(mm(h2, h2))
        out.append({"dim": d, "lhs": lhs, "rhs": rhs, "ok": lhs == rhs})
    return out


# -- the abelian case -----------------------------------------------------------------------


@dataclass
class AbelianReport:
    z_series: dict  # power of s -> QSeries
    head: SymbolicNorm  # coefficient of q^-1 in Z(a[-2]^2 1)
    const: SymbolicNorm  # coefficient of q^0
    a4_traces: tuple  # traces of a[-1]^4 1 on V_0, V_1
    a22_traces: tuple  # traces of a[-2]^2 1 on V_0, V_1
    combo_traces: tuple

    @property
    def ok(self) -> bool:
        s = SymbolicNorm.s()
        return self.combo_traces[0] == 0 and self.combo_traces[1] == -12 * s * s

    def to_json(self) -> dict:
        return {
            "Z(a[-2]^2 1)": {f"s^{k}": v.to_json() for k, v in self.z_series.items()},
            "q^-1": str(self.head),
            "q^0": str(self.const),
            "a[-1]^4": [str(x) for x in self.a4_traces],
            "a[-2]^2": [str(x) for x in self.a22_traces],
            "2a[-1]^4 + 5s a[-2]^2": [str(x) for x in self.combo_traces],
            "status": "pass" if self.ok else "fail",
        }


def abelian_report(prec: int = 10, dim_v1: int = 24) -> AbelianReport:
    """Traces for ``V_1`` abelian at ``c = 24``, as polynomials in ``s = <a|a>``.

    ``Z(a[-2]^2 1) = -3 G4 Z(a[2]a[-2]1) = -6 s G4 Z(1)`` with ``Z(1) = dim V_1 + J``.
    """
    s = SymbolicNorm.s()
    z1 = jfunction(prec) + dim_v1
    series = eisenstein(4, prec) * z1 * (-6)  # coefficient of s
    head = s * series.coefficient(-24)
    const = s * series.coefficient(0)
    # a[-1]^4 1 from the general formulas: every bracket and the Killing form vanish
    zero = lambda x, y: 0  # noqa: E731
    a4 = general_traces(
        "a", "a", "a", "a",
        lz=lambda x, y: s if (x, y) == ("a", "a") else SymbolicNorm(()),
        kappa=zero,
        bracket=lambda x, y: None,
        n=dim_v1,
        s3_trace=0,
    )
    a22 = (head, const)
    combo = (2 * a4[0] + 5 * s * a22[0], 2 * a4[1] + 5 * s * a22[1])
    return AbelianReport({1: series}, head, const, a4, a22, combo)


# -- the L[-2] shift claim ----------------------------------------------------------------------


def default_z1(c: int, prec: int, dim_v1: int = 24) -> QSeries:
    """Graded dimension ``Z(1)``: ``E4^2/eta^16`` at ``c = 16`` and ``dim V_1 + J`` at ``c = 24``."""
    if c == 16:
        e4 = eisenstein(4, prec) * 720
        return e4 * e4 * eta_pow(-16, prec)
    if c == 24:
        return jfunction(prec) + dim_v1
    raise UnsupportedCharge("the claim concerns central charge 16 or 24")


@dataclass
class ShiftClaimReport:
    c: int
    ell: Fraction
    per_ell: dict  # delta-weight convention -> coefficient of q^{-c/24} per unit ell
    leading: dict  # convention -> coefficient at the given ell
    stated: Fraction  # the value -10 ell c / 11 as printed, for comparison only
    cusp_weights: tuple
    cusp_dims: tuple
    replay_zero: bool
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        nonzero = all(v != 0 for v in self.per_ell.values())
        return nonzero and all(d == 0 for d in self.cusp_dims) and self.replay_zero

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "ell": frac_str(self.ell),
            "coefficient_per_ell": {k: frac_str(v) for k, v in self.per_ell.items()},
            "leading_coefficient": {k: frac_str(v) for k, v in self.leading.items()},
            "stated_value": frac_str(self.stated),
            "cusp_weights": list(self.cusp_weights),
            "cusp_dims": list(self.cusp_dims),
            "replay_zero": self.replay_zero,
            "notes": self.notes,
            "status": "pass" if self.ok else "fail",
        }


def _shift_leading(c: int, ell: Fraction, z1: QSeries, zb_head: QSeries | None, k: int) -> Fraction:
    # Z(L[-2]b) = delta Z(b_2 + b_1) + delta Z(b_0) + (30c/11) G4 Z(b_0), with Z(b_0) = ell Z(1)
    prec = z1.prec
    zb0 = z1 * ell
    total = serre_delta(zb0, k) + eisenstein(4, prec) * zb0 * Fraction(30 * c, 11)
    if zb_head is not None:
        total = total + serre_delta(zb_head, 2)
    return total.coefficient(-c)


def l2_shift_claim(c: int, ell=1, zb_head: QSeries | None = None, prec: int = 8) -> ShiftClaimReport:
    """Leading coefficient of ``Z(L[-2]b)`` when ``L[2]b = (30c/11) b_0`` and ``b_0 = ell 1``.

    The Serre derivative on the inhomogeneous ``Z(b)`` can be taken with weight
    0 (the vacuum component alone) or 2 (the square-bracket weight of ``b``);
    both conventions are reported.  ``zb_head`` is ``Z(b_2 + b_1)``, which must
    have no ``q^{-c/24}`` term.
    """
    if c not in (16, 24):
        raise UnsupportedCharge("the claim concerns central charge 16 or 24")
    ell = Fraction(ell)
    z1 = default_z1(c, prec)
    notes = []
    if zb_head is not None and zb_head.coefficient(-c) != 0:
        raise ValueError("Z(b_2 + b_1) must not have a q^{-c/24} term")
    per_ell, leading = {}, {}
    for k in (0, 2):
        key = f"k={k}"
        per_ell[key] = _shift_leading(c, Fraction(1), z1, None, k)
        leading[key] = _shift_leading(c, ell, z1, zb_head, k)
    # eta^c Z(b) lies in M_{2 + c/2}: weight 10 at c = 16 and 14 at c = 24
    weights = (10, 14)
    dims = tuple(cusp_space(w, prec).dim for w in weights)
    replay = all(_shift_leading(c, Fraction(0), z1, zb_head, k) == 0 for k in (0, 2))
    if zb_head is None:
        notes.append("Z(b_2 + b_1) omitted; it does not affect the leading coefficient")
    return ShiftClaimReport(
        c, ell, per_ell, leading, Fraction(-10 * c, 11) * ell, weights, dims, replay, notes
    )
