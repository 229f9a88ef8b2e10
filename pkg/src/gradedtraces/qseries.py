"""Exact truncated q-series on the (1/24)Z exponent grid.

A :class:`QSeries` stores ``coeffs[i]`` as the coefficient of
``q^((offset24 + 24*i)/24)``.  The series is known modulo ``q^(top24/24)``
with ``top24 = offset24 + 24*prec``; every operation propagates that bound
pessimistically and never invents coefficients.

Named constructors cover the forms used for graded traces: Eisenstein series
``G_k``, the quasi-modular ``G_2``, powers of Dedekind eta, the discriminant
and the normalized modular invariant ``J``.
"""
from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    ConsistencyFailure,
    GridMismatch,
    InvalidWeight,
    NotInvertible,
    OutsideUpperHalfPlane,
)

__all__ = [
    "QSeries",
    "bernoulli",
    "sigma",
    "eisenstein",
    "g2",
    "eta_pow",
    "delta",
    "jfunction",
    "one",
    "theta",
    "eval_numeric",
    "named_form",
    "frac_str",
    "parse_frac",
]


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s.strip())


@dataclass(frozen=True)
class QSeries:
    offset24: int
    coeffs: tuple

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        if not cs:
            raise ValueError("a QSeries needs at least one known coefficient")
        off = int(self.offset24)
        top = off + 24 * len(cs)
        k = 0
        while k < len(cs) and cs[k] == 0:
            k += 1
        if k == len(cs):
            # zero series: remember only how far it is known
            off, cs = top - 24, (Fraction(0),)
        elif k:
            off, cs = off + 24 * k, cs[k:]
        object.__setattr__(self, "offset24", off)
        object.__setattr__(self, "coeffs", cs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, offset24: int = 0) -> "QSeries":
        return cls(offset24, tuple(coeffs))

    @classmethod
    def zero(cls, top24: int = 24) -> "QSeries":
        """The zero series known modulo ``q^(top24/24)``."""
        return cls(top24 - 24, (0,))

    @classmethod
    def monomial(cls, coeff, offset24: int, prec: int) -> "QSeries":
        return cls(offset24, (coeff,) + (0,) * (prec - 1))

    # -- basic properties ---------------------------------------------------

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    @property
    def top24(self) -> int:
        return self.offset24 + 24 * len(self.coeffs)

    @property
    def residue(self) -> int:
        return self.offset24 % 24

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def exponent(self, i: int) -> Fraction:
        return Fraction(self.offset24 + 24 * i, 24)

    def coefficient(self, e24: int) -> Fraction:
        """Coefficient of ``q^(e24/24)``."""
        if (e24 - self.offset24) % 24:
            return Fraction(0)
        if e24 >= self.top24:
            raise IndexError(f"q^({e24}/24) is beyond the known precision")
        i = (e24 - self.offset24) // 24
        return self.coeffs[i] if i >= 0 else Fraction(0)

    def __getitem__(self, n) -> Fraction:
        """Coefficient of ``q^n`` for a rational exponent ``n``."""
        e24 = Fraction(n) * 24
        if e24.denominator != 1:
            return Fraction(0)
        return self.coefficient(int(e24))

    def items(self):
        """(exponent, coefficient) pairs over the stored window."""
        return [(self.exponent(i), c) for i, c in enumerate(self.coeffs)]

    def window(self, start24: int, stop24: int) -> list[Fraction]:
        """Coefficients on the grid ``start24, start24+24, ... < stop24``."""
        if stop24 > self.top24:
            raise IndexError("window extends beyond the known precision")
        return [self.coefficient(e) for e in range(start24, stop24, 24)]

    def truncate(self, prec: int) -> "QSeries":
        if prec >= self.prec:
            return self
        return QSeries(self.offset24, self.coeffs[:prec])

    def truncate_top(self, top24: int) -> "QSeries":
        """Forget everything at or above ``q^(top24/24)``."""
        if top24 >= self.top24:
            return self
        n = (top24 - self.offset24) // 24
        if n <= 0:
            return QSeries.zero(top24)
        return QSeries(self.offset24, self.coeffs[:n])

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            # constants are exact: known to any precision we need here
            top = max(self.top24, 24)
            return QSeries(0, (other,) + (0,) * ((top - 1) // 24))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.residue != other.residue:
            if other.is_zero():
                return self._truncated_onto_grid(other.top24)
            if self.is_zero():
                return other._truncated_onto_grid(self.top24)
            raise GridMismatch(
                f"cannot add series with offsets {self.offset24}/24 and {other.offset24}/24"
            )
        top = min(self.top24, other.top24)
        start = min(self.offset24, other.offset24)
        if start >= top:
            return QSeries.zero(top)
        out = [a + b for a, b in zip(self._pad(start, top), other._pad(start, top))]
        return QSeries(start, tuple(out))

    __radd__ = __add__

    def _truncated_onto_grid(self, top24: int) -> "QSeries":
        bound = min(self.top24, top24)
        n = -((self.offset24 - bound) // 24)  # ceil((bound - offset)/24)
        if n <= 0:
            return QSeries.zero(self.offset24)
        return QSeries(self.offset24, self.coeffs[:n])

    def _pad(self, start24: int, stop24: int) -> list[Fraction]:
        out = []
        for e in range(start24, stop24, 24):
            i = (e - self.offset24) // 24
            out.append(self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0))
        return out

    def __neg__(self):
        return QSeries(self.offset24, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, r) -> "QSeries":
        r = Fraction(r)
        return QSeries(self.offset24, tuple(r * c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.prec, other.prec)
        out = _convolve(self.coeffs, other.coeffs, n)
        return QSeries(self.offset24 + other.offset24, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return QSeries(0, (1,) + (0,) * (self.prec - 1))
        if self.is_zero():
            if k < 0:
                raise NotInvertible("the zero series has no inverse")
            return QSeries.zero(k * self.offset24 + 24)
        lead = self.coeffs[0]
        unit = [c / lead for c in self.coeffs]
        out = _unit_power(unit, k, self.prec)
        return QSeries(k * self.offset24, tuple(lead**k * c for c in out))

    def inverse(self) -> "QSeries":
        return self ** -1

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, QSeries):
            return self * other.inverse()
        return NotImplemented

    # -- comparison helpers -------------------------------------------------

    def agrees(self, other: "QSeries") -> bool:
        """True when both series agree on every jointly known coefficient."""
        return (self - other).is_zero()

    def first_difference(self, other: "QSeries"):
        d = self - other
        return None if d.is_zero() else d.exponent(0)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "offset24": self.offset24,
            "coeffs": [frac_str(c) for c in self.coeffs],
            "prec": self.prec,
        }

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        coeffs = tuple(parse_frac(c) for c in data["coeffs"])
        if "prec" in data and int(data["prec"]) != len(coeffs):
            raise ValueError("prec does not match the number of coefficients")
        return cls(int(data["offset24"]), coeffs)

    def __str__(self) -> str:
        return format_series(self)


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    # integer fast path: most named forms have integral coefficients after scaling
    da = math.lcm(*(c.denominator for c in a[:n]))
    db = math.lcm(*(c.denominator for c in b[:n]))
    ia = [int(c * da) for c in a[:n]]
    ib = [int(c * db) for c in b[:n]]
    out = []
    for k in range(n):
        s = 0
        for i in range(k + 1):
            x = ia[i]
            if x:
                s += x * ib[k - i]
        out.append(Fraction(s, da * db))
    return out


def _unit_power(f: Sequence[Fraction], k: int, n: int) -> list[Fraction]:
    """``f**k`` for ``f[0] == 1`` and any integer ``k`` (Miller's recurrence)."""
    g = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for m in range(1, n):
        s = Fraction(0)
        for j in range(1, m + 1):
            if f[j]:
                s += ((k + 1) * j - m) * f[j] * g[m - j]
        g[m] = s / m
    return g


def format_series(f: QSeries) -> str:
    parts: list[str] = []
    for i, c in enumerate(f.coeffs):
        e = f.exponent(i)
        if e == 0:
            mono = ""
        elif e == 1:
            mono = "q"
        elif e.denominator == 1:
            mono = f"q^{e.numerator}"
        else:
            mono = f"q^({e.numerator}/{e.denominator})"
        if c == 0:
            term = "0"
        elif mono and abs(c) == 1:
            term = mono
        else:
            term = frac_str(abs(c)) + mono
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


# -- arithmetic functions ---------------------------------------------------


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    # t/(e^t - 1) = 1 / sum_j t^j/(j+1)!
    a = [Fraction(1, math.factorial(j + 1)) for j in range(n + 1)]
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum((a[j] * b[m - j] for j in range(1, m + 1)), Fraction(0)))
    return tuple(math.factorial(m) * b[m] for m in range(n + 1))


def bernoulli(k: int) -> Fraction:
    """Bernoulli number ``B_k`` with ``B_1 = -1/2``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    # round the table size up so repeated calls share one cached computation
    size = max(32, 1 << (k.bit_length()))
    return _bernoulli_table(size)[k]


def sigma(n: int, r: int) -> int:
    """Divisor power sum ``sum_{d | n} d^r``."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**r
            e = n // d
            if e != d:
                total += e**r
        d += 1
    return total


def one(prec: int) -> QSeries:
    return QSeries(0, (1,) + (0,) * (prec - 1))


def eisenstein(k: int, prec: int) -> QSeries:
    """``G_k = -B_k/k! + 2/(k-1)! * sum sigma_{k-1}(n) q^n`` for even ``k >= 4``."""
    if k < 4 or k % 2:
        raise InvalidWeight(f"Eisenstein series need even weight >= 4, got {k}")
    c0 = -bernoulli(k) / math.factorial(k)
    scale = Fraction(2, math.factorial(k - 1))
    return QSeries(0, (c0,) + tuple(scale * sigma(n, k - 1) for n in range(1, prec)))


def g2(prec: int) -> QSeries:
    return QSeries(0, (Fraction(-1, 12),) + tuple(2 * sigma(n, 1) for n in range(1, prec)))


def _euler_product(prec: int) -> list[int]:
    """Coefficients of ``prod_{n>0} (1 - q^n)`` below ``q^prec``."""
    p = [1] + [0] * (prec - 1)
    for n in range(1, prec):
        for i in range(prec - 1, n - 1, -1):
            p[i] -= p[i - n]
    return p


def eta_pow(c: int, prec: int) -> QSeries:
    """``eta^c = q^(c/24) prod (1 - q^n)^c`` to ``prec`` coefficients; any integer ``c``."""
    base = [Fraction(x) for x in _euler_product(prec)]
    return QSeries(c, tuple(_unit_power(base, c, prec)))


def _delta_from_eisenstein(prec: int) -> QSeries:
    g4 = eisenstein(4, prec + 1)
    g6 = eisenstein(6, prec + 1)
    d = (g4**3 * 20 - g6**2 * 49) * 10800
    # the constant term cancels, which costs one coefficient of relative precision
    return d.truncate(prec)


def delta(prec: int) -> QSeries:
    """The discriminant, computed from Eisenstein series and checked against ``eta^24``."""
    by_eisenstein = _delta_from_eisenstein(prec)
    by_eta = eta_pow(24, prec)
    if by_eisenstein != by_eta:
        raise ConsistencyFailure(
            f"discriminant routes disagree at q^{by_eisenstein.first_difference(by_eta)}"
        )
    return by_eta


def jfunction(prec: int) -> QSeries:
    """Modular invariant normalized as ``q^-1 + 0 + 196884 q + ...``."""
    e4 = eisenstein(4, prec) * 720
    j = e4**3 * delta(prec).inverse()
    return j - 744


def theta(f: QSeries) -> QSeries:
    """The operator ``q d/dq``."""
    return QSeries(f.offset24, tuple(c * f.exponent(i) for i, c in enumerate(f.coeffs)))


def eval_numeric(f: QSeries, tau: complex, terms: int | None = None) -> tuple[complex, float]:
    """Partial sum at ``q = exp(2 pi i tau)`` and the magnitude of the last term used."""
    tau = complex(tau)
    if tau.imag <= 0:
        raise OutsideUpperHalfPlane(f"Im(tau) must be positive, got {tau}")
    terms = f.prec if terms is None else terms
    if terms > f.prec:
        raise ValueError(f"only {f.prec} coefficients are known")
    total = 0j
    last = 0.0
    for i in range(terms):
        c = f.coeffs[i]
        if c == 0:
            continue
        term = float(c) * cmath.exp(2j * math.pi * tau * float(f.exponent(i)))
        total += term
        last = abs(term)
    return total, last


_FORM_RE = re.compile(r"^(eta)(?:\^(-?\d+))?$|^G(\d+)$|^(delta|J|one|Z1)$", re.IGNORECASE)


def named_form(name: str, prec: int, dim_v1: int = 24) -> QSeries:
    """Build a catalogued series from its name.

    Names: ``eta``, ``eta^c``, ``delta``, ``G2``, ``G<k>``, ``J``, ``one``,
    ``Z1`` (the vacuum trace ``dim V_1 + J`` at central charge 24).
    """
    m = _FORM_RE.match(name.strip())
    if not m:
        raise ValueError(f"unknown form {name!r}")
    if m.group(1):
        return eta_pow(int(m.group(2) or 1), prec)
    if m.group(3):
        k = int(m.group(3))
        return g2(prec) if k == 2 else eisenstein(k, prec)
    tag = m.group(4).lower()
    if tag == "delta":
        return delta(prec)
    if tag == "j":
        return jfunction(prec)
    if tag == "one":
        return one(prec)
    return jfunction(prec) + dim_v1
