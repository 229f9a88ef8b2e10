"""Change of basis between round-bracket modes v(m) and square-bracket modes v[n].

For a state of conformal weight ``wt``::

    v[n] = sum_m [z^m] (log(1+z))^n (1+z)^(wt-1) * v(m)
    v(n) = sum_m [z^m] (e^z-1)^n e^(z(1-wt))   * v[m]

Both kernels are ``z^n`` times a unit power series, so every table is upper
triangular with ones on the diagonal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .qseries import frac_str, parse_frac


class Kind(str, Enum):
    LOG1P = "Log1p"
    EXPM1 = "Expm1"


@dataclass(frozen=True)
class ZSeries:
    """Truncated Laurent series ``sum_i coeffs[i] z^(lead+i)``."""

    lead: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, m: int) -> Fraction:
        i = m - self.lead
        if i < 0:
            return Fraction(0)
        if i >= len(self.coeffs):
            raise IndexError(f"z^{m} is beyond the known precision")
        return self.coeffs[i]

    def __mul__(self, other: "ZSeries") -> "ZSeries":
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n)]
        return ZSeries(self.lead + other.lead, tuple(out))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{frac_str(c)}*z^{self.lead + i}")
        return " + ".join(terms) or "0"


def _unit(kind: Kind, prec: int) -> list[Fraction]:
    """log(1+z)/z or (e^z-1)/z to ``prec`` terms."""
    if kind is Kind.LOG1P:
        return [Fraction((-1) ** i, i + 1) for i in range(prec)]
    return [Fraction(1, math.factorial(i + 1)) for i in range(prec)]


def _power(unit: list[Fraction], k: int) -> list[Fraction]:
    # f^k for f[0] == 1 via the recurrence m g_m = sum ((k+1)j - m) f_j g_{m-j}
    n = len(unit)
    g = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for m in range(1, n):
        g[m] = sum(((k + 1) * j - m) * unit[j] * g[m - j] for j in range(1, m + 1)) / m
    return g


def unit_pow(kind, n: int, prec: int) -> ZSeries:
    """``(log(1+z))^n`` or ``(e^z-1)^n`` as ``z^n`` times a unit series."""
    kind = Kind(kind)
    return ZSeries(n, tuple(_power(_unit(kind, prec), n)))


def _binomial_series(a: Fraction, prec: int) -> ZSeries:
    """(1+z)^a."""
    out, c = [], Fraction(1)
    for i in range(prec):
        out.append(c)
        c = c * (a - i) / (i + 1)
    return ZSeries(0, tuple(out))


def _exp_series(a: Fraction, prec: int) -> ZSeries:
    """e^(a z)."""
    return ZSeries(0, tuple(Fraction(a) ** i / math.factorial(i) for i in range(prec)))


@dataclass(frozen=True)
class ConversionTable:
    wt: int
    n: int
    entries: dict

    def __getitem__(self, m: int) -> Fraction:
        if m < self.n:
            return Fraction(0)
        return self.entries[m]

    def to_json(self) -> dict:
        return {
            "wt": self.wt,
            "n": self.n,
            "entries": {str(m): frac_str(c) for m, c in sorted(self.entries.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "ConversionTable":
        entries = {int(m): parse_frac(c) for m, c in data["entries"].items()}
        return cls(int(data["wt"]), int(data["n"]), entries)


def _table(kernel: ZSeries, wt: int, n: int, mmax: int) -> ConversionTable:
    return ConversionTable(wt, n, {m: kernel[m] for m in range(n, mmax + 1)})


def square_from_round(wt: int, n: int, mmax: int) -> ConversionTable:
    """Coefficients of ``v[n]`` in terms of ``v(m)``, ``n <= m <= mmax``."""
    if mmax < n:
        raise ValueError("mmax must be at least n")
    prec = mmax - n + 1
    kernel = unit_pow(Kind.LOG1P, n, prec) * _binomial_series(Fraction(wt - 1), prec)
    return _table(kernel, wt, n, mmax)


def round_from_square(wt: int, n: int, mmax: int) -> ConversionTable:
    """Coefficients of ``v(n)`` in terms of ``v[m]``, ``n <= m <= mmax``."""
    if mmax < n:
        raise ValueError("mmax must be at least n")
    prec = mmax - n + 1
    kernel = unit_pow(Kind.EXPM1, n, prec) * _exp_series(Fraction(1 - wt), prec)
    return _table(kernel, wt, n, mmax)


@dataclass
class RoundtripReport:
    wt: int
    indices: list
    identity: bool
    product: list

    def to_json(self) -> dict:
        return {
            "wt": self.wt,
            "indices": self.indices,
            "identity": self.identity,
            "product": [[frac_str(x) for x in row] for row in self.product],
        }


def roundtrip(wt: int, window: int) -> RoundtripReport:
    """Compose both tables on ``window`` consecutive indices around zero."""
    if window < 1:
        raise ValueError("window must be positive")
    start = -(window // 2)
    idx = list(range(start, start + window))
    top = idx[-1]
    sq = {n: square_from_round(wt, n, top) for n in idx}
    rd = {m: round_from_square(wt, m, top) for m in idx}
    product = [
        [sum((sq[n][m] * rd[m][p] for m in idx), Fraction(0)) for p in idx] for n in idx
    ]
    ok = all(product[i][j] == (1 if i == j else 0) for i in range(window) for j in range(window))
    return RoundtripReport(wt, idx, ok, product)


@dataclass(frozen=True)
class VirasoroExpansion:
    """``L[n] = identity * id + sum_k modes[k] * L(k)`` over a finite window."""

    c: Fraction
    n: int
    identity: Fraction
    modes: dict

    def to_json(self) -> dict:
        return {
            "c": frac_str(self.c),
            "n": self.n,
            "id": frac_str(self.identity),
            "modes": {str(k): frac_str(v) for k, v in sorted(self.modes.items())},
        }

    def __str__(self) -> str:
        parts = []
        if self.identity:
            parts.append(f"{frac_str(self.identity)}*id")
        for k, v in sorted(self.modes.items()):
            if v:
                parts.append(f"{frac_str(v)}*L({k})")
        return " + ".join(parts) or "0"


def virasoro_expansion(c, n: int, window: int) -> VirasoroExpansion:
    """Expand ``L[n]`` (the mode ``w[n+1]`` of the shifted conformal vector)
    over the identity and ``window`` round modes ``L(n), ..., L(n+window-1)``."""
    if n < -2:
        raise ValueError("only n >= -2 is supported")
    c = Fraction(c)
    top = n + window  # omega(m) = L(m-1), so m runs over n+1 .. n+window
    table = square_from_round(2, n + 1, top)
    modes = {m - 1: table[m] for m in range(n + 1, top + 1)}
    # the vacuum has weight 0 and 1(m) = delta_{m,-1} id
    vac = square_from_round(0, n + 1, max(n + 1, -1))
    shift = -c / 24 * (vac[-1] if n + 1 <= -1 else Fraction(0))
    return VirasoroExpansion(c, n, shift, modes)
