"""Spaces of holomorphic modular forms for SL2(Z) as exact echelonized matrices.

``M_k`` is spanned by the monomials ``G4^a G6^b`` with ``4a + 6b = k``.  Bases
are row-reduced over their q-coefficients, so membership of a candidate series
is decided by its first ``k//12 + 2`` coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import _linalg
from .errors import InsufficientPrecision, InvalidPivot, NotMember, UnsupportedCharge
from .qseries import QSeries, eisenstein, eta_pow, frac_str, g2, jfunction, one, theta


def sturm(k: int) -> int:
    return k // 12 + 2


def monomials(k: int) -> list[tuple[int, int]]:
    """Exponent pairs ``(a, b)`` with ``4a + 6b = k``."""
    if k < 0 or k % 2:
        return []
    return [(a, (k - 4 * a) // 6) for a in range(k // 4, -1, -1) if (k - 4 * a) % 6 == 0]


def classical_dim(k: int) -> int:
    if k < 0 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12
    return k // 12 + 1


def _monomial_series(a: int, b: int, prec: int) -> QSeries:
    f = one(prec)
    if a:
        f = f * eisenstein(4, prec) ** a
    if b:
        f = f * eisenstein(6, prec) ** b
    return f


def _row(f: QSeries, prec: int) -> list[Fraction]:
    return f.window(0, 24 * prec)


@dataclass(frozen=True)
class FormSpace:
    weight: int
    prec: int
    basis: tuple  # echelonized QSeries
    pivots: tuple  # q-exponent of each basis element's pivot
    cusp: bool = False
    # coordinates of each echelon vector in the monomial basis
    monomials: tuple = ()
    transform: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def sturm(self) -> int:
        return sturm(self.weight)

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "dim": self.dim,
            "cusp": self.cusp,
            "sturm": self.sturm,
            "basis": [b.to_json() for b in self.basis],
        }


def _echelon_space(k: int, prec: int, cusp: bool) -> FormSpace:
    mons = monomials(k)
    prec = max(prec, sturm(k))
    rows = [_row(_monomial_series(a, b, prec), prec) for a, b in mons]
    if not rows:
        return FormSpace(k, prec, (), (), cusp, tuple(mons), ())
    n = len(rows)
    # carry the monomial coordinates along as extra columns
    aug = [r + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, piv = _linalg.rref(aug)
    if any(p >= prec for p in piv):
        raise InsufficientPrecision(f"precision {prec} too small to separate weight {k}")
    basis = [QSeries(0, tuple(r[:prec])) for r in red]
    coords = [tuple(r[prec:]) for r in red]
    if cusp:
        if piv and piv[0] == 0:
            basis, piv, coords = basis[1:], piv[1:], coords[1:]
    return FormSpace(k, prec, tuple(basis), tuple(piv), cusp, tuple(mons), tuple(coords))


@lru_cache(maxsize=256)
def mk_space(k: int, prec: int = 60) -> FormSpace:
    """Echelonized basis of ``M_k``; the zero space for odd or negative ``k``."""
    return _echelon_space(k, prec, cusp=False)


@lru_cache(maxsize=256)
def cusp_space(k: int, prec: int = 60) -> FormSpace:
    """Echelonized basis of the cusp forms ``M_k^0``."""
    return _echelon_space(k, prec, cusp=True)


def membership(f: QSeries, k: int, cusp: bool = False) -> list[Fraction]:
    """Coordinates of ``f`` in the echelon basis of ``M_k`` (or ``M_k^0``).

    Raises :class:`NotMember` carrying the first discrepant q-exponent, or
    :class:`InsufficientPrecision` when ``f`` is known to fewer than the
    Sturm number of coefficients.
    """
    if f.top24 < 24 * sturm(k):
        raise InsufficientPrecision(
            f"need {sturm(k)} coefficients for weight {k}, have up to q^{Fraction(f.top24, 24)}"
        )
    if f.residue != 0 and not f.is_zero():
        raise NotMember(f.exponent(0), "series is not on the integral exponent grid")
    if f.offset24 < 0:
        raise NotMember(f.exponent(0), "series has a pole at the cusp")
    n = f.top24 // 24
    space = (cusp_space if cusp else mk_space)(k, max(n, sturm(k)))
    coords = [f.coefficient(24 * p) for p in space.pivots]
    residual = f
    for c, b in zip(coords, space.basis):
        if c:
            residual = residual - b * c
    if not residual.is_zero():
        raise NotMember(residual.exponent(0))
    return coords


def is_member(f: QSeries, k: int, cusp: bool = False) -> bool:
    try:
        membership(f, k, cusp)
    except NotMember:
        return False
    return True


def monomial_coordinates(f: QSeries, k: int) -> dict:
    """Coordinates of ``f`` over the monomials ``G4^a G6^b``."""
    space = mk_space(k, max(f.top24 // 24, sturm(k)))
    coords = membership(f, k)
    out = {m: Fraction(0) for m in space.monomials}
    for c, t in zip(coords, space.transform):
        for m, x in zip(space.monomials, t):
            out[m] += c * x
    return out


def serre_delta(f: QSeries, k: int) -> QSeries:
    """``q d/dq f + k G2 f``; raises weight by two."""
    return theta(f) + g2(f.prec) * f * k


# -- delta-module closure ----------------------------------------------------


@dataclass
class ClosureResult:
    dims: dict = field(default_factory=dict)
    bases: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "dims": {str(k): d for k, d in sorted(self.dims.items())},
            "bases": {
                str(k): [b.to_json() for b in v] for k, v in sorted(self.bases.items())
            },
        }


def _reduce(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    return _linalg.rref(rows)[0] if rows else []


def delta_module_closure(generators: Iterable, wmax: int, prec: int = 60) -> ClosureResult:
    """Smallest family of weight-graded spaces containing ``generators`` and
    stable under multiplication by ``G4``, ``G6`` and under ``serre_delta``,
    truncated above weight ``wmax``.

    ``generators`` are ``(series, weight)`` pairs with integral exponents.
    """
    g4, g6 = eisenstein(4, prec), eisenstein(6, prec)
    spaces: dict[int, list[list[Fraction]]] = {}
    for f, k in generators:
        if k > wmax:
            continue
        spaces.setdefault(k, []).append(_row(f.truncate(prec), prec))
    for k in spaces:
        spaces[k] = _reduce(spaces[k])
    # each weight only receives input from lower weights, so one sweep suffices
    for k in range(min(spaces, default=wmax + 1), wmax + 1):
        rows = spaces.get(k)
        if not rows:
            continue
        rows = _reduce(rows)
        spaces[k] = rows
        for r in rows:
            f = QSeries(0, tuple(r))
            for target, image in (
                (k + 2, serre_delta(f, k)),
                (k + 4, g4 * f),
                (k + 6, g6 * f),
            ):
                if target <= wmax:
                    spaces.setdefault(target, []).append(_row(image, prec))
    result = ClosureResult()
    for k in sorted(spaces):
        rows = [r for r in _reduce(spaces[k]) if any(r)]
        if rows:
            result.dims[k] = len(rows)
            result.bases[k] = [QSeries(0, tuple(r)) for r in rows]
    return result


# -- forms with a pole at the cusp -------------------------------------------


@dataclass(frozen=True)
class PSpace:
    c: int
    weight: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "charge": self.c,
            "weight": self.weight,
            "dim": self.dim,
            "basis": [b.to_json() for b in self.basis],
        }


def p_space(c: int, k: int, prec: int = 60) -> PSpace:
    """``eta^(-c) * M_(k + c/2)``; each basis vector is round-tripped through membership."""
    if c <= 0 or c % 8:
        raise UnsupportedCharge(f"charge must be a positive multiple of 8, got {c}")
    w = k + c // 2
    space = mk_space(w, prec)
    inv = eta_pow(-c, prec)
    basis = tuple(inv * b for b in space.basis)
    fwd = eta_pow(c, prec)
    for b in basis:
        membership(fwd * b, w)
    return PSpace(c, k, basis)


def decompose(f: QSeries, k: int, pivot: QSeries) -> tuple[Fraction, QSeries]:
    """Split ``f = lam * pivot + cusp`` with ``cusp`` a cusp form of weight ``k``."""
    p0 = pivot.coefficient(0) if pivot.offset24 <= 0 else Fraction(0)
    if p0 == 0:
        raise InvalidPivot("pivot must have a nonzero constant term")
    membership(pivot, k)
    f0 = f.coefficient(0) if f.offset24 <= 0 else Fraction(0)
    lam = f0 / p0
    rest = f - pivot * lam
    membership(rest, k, cusp=True)
    return lam, rest


# -- graded trace spaces -----------------------------------------------------


@dataclass(frozen=True)
class TraceSlot:
    """Possible graded traces ``Z(v, tau)`` for states ``v`` of square weight ``w``."""

    weight: int
    basis: tuple

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "dim": len(self.basis),
            "basis": [b.to_json() for b in self.basis],
        }


def graded_trace_space(c: int, kmax: int, prec: int = 60, dim_v1: int | None = None) -> list[TraceSlot]:
    """Spaces ``eta^(-c) M_(w + c/2)`` for even trace weights ``0 <= w <= kmax``.

    At ``c = 24`` the weight-0 slot is the single line spanned by
    ``dim_v1 + J`` rather than all of ``eta^(-24) M_12``.
    """
    if c not in (8, 16, 24):
        raise UnsupportedCharge(f"central charge must be 8, 16 or 24, got {c}")
    if c == 24 and dim_v1 is None:
        raise ValueError("dim_v1 is required at central charge 24")
    inv = eta_pow(-c, prec)
    slots = []
    for w in range(0, kmax + 1, 2):
        if c == 24 and w == 0:
            basis = (jfunction(prec) + dim_v1,)
        else:
            basis = tuple(inv * b for b in mk_space(w + c // 2, prec).basis)
        slots.append(TraceSlot(w, basis))
    return slots


def format_coords(coords: dict) -> dict:
    return {f"G4^{a}*G6^{b}": frac_str(x) for (a, b), x in coords.items()}
