"""Root systems with exact rational coordinates and the root-sum traces built on them.

For a Cartan element ``u`` of a semisimple Lie algebra, ``u(0)`` acts on the
root space of ``alpha`` by ``alpha(u)`` and on the Cartan subalgebra by zero, so
``tr ad(u)^k = sum_alpha alpha(u)^k`` for ``k >= 1``.  All pairings here use the
standard inner product of the ambient frame; every reported quantity is
either scale free or uses explicitly chosen vectors.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AbelianCharge, InvalidRank

Vector = tuple

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
# augmented exceptional list: (type, rank)
AUGMENTED = (("A", 1), ("A", 2), ("D", 4), ("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2))


def dot(x: Sequence, y: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(x, y)), Fraction(0))


def _vec(xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _unit(n: int, i: int, scale=1) -> list:
    v = [0] * n
    v[i] = scale
    return v


@dataclass(frozen=True)
class CartanVector:
    """A Cartan element, represented by the vector ``u*`` with ``alpha(u) = (alpha, u*)``."""

    coords: Vector

    def __post_init__(self):
        object.__setattr__(self, "coords", _vec(self.coords))

    def pair(self, alpha: Sequence) -> Fraction:
        return dot(alpha, self.coords)

    def norm2(self) -> Fraction:
        return dot(self.coords, self.coords)


def _as_vector(u) -> Vector:
    return u.coords if isinstance(u, CartanVector) else _vec(u)


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int
    roots: tuple

    @property
    def dim(self) -> int:
        """Dimension of the Lie algebra: rank plus number of roots."""
        return self.rank + len(self.roots)

    @property
    def ambient(self) -> int:
        return len(self.roots[0])

    @property
    def name(self) -> str:
        return self.type if self.type in EXCEPTIONAL_RANKS else f"{self.type}{self.rank}"

    def long_root(self) -> Vector:
        m = max(dot(r, r) for r in self.roots)
        return max(r for r in self.roots if dot(r, r) == m)

    def scaled(self, factor) -> "RootSystem":
        f = Fraction(factor)
        return RootSystem(self.type, self.rank, tuple(tuple(f * x for x in r) for r in self.roots))


# -- constructions ------------------------------------------------------------


def _pm_pairs(n: int) -> list[list[int]]:
    out = []
    for i, j in itertools.combinations(range(n), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [0] * n
            v[i], v[j] = si, sj
            out.append(v)
    return out


def _type_a(l: int) -> list:
    n = l + 1
    out = []
    for i, j in itertools.permutations(range(n), 2):
        v = [0] * n
        v[i], v[j] = 1, -1
        out.append(v)
    return out


def _type_b(l: int) -> list:
    return _pm_pairs(l) + [_unit(l, i, s) for i in range(l) for s in (1, -1)]


def _type_c(l: int) -> list:
    return _pm_pairs(l) + [_unit(l, i, 2 * s) for i in range(l) for s in (1, -1)]


def _type_d(l: int) -> list:
    return _pm_pairs(l)


def _e8() -> list:
    half = Fraction(1, 2)
    out = [list(map(Fraction, v)) for v in _pm_pairs(8)]
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append([half * s for s in signs])
    return out


def _perp(roots: list, *vs) -> list:
    return [r for r in roots if all(dot(r, v) == 0 for v in vs)]


def _e7() -> list:
    return _perp(_e8(), [0, 0, 0, 0, 0, 0, 1, 1])


def _e6() -> list:
    # orthogonal complement of the A2 spanned by e7+e8 and e6-e7
    return _perp(_e8(), [0, 0, 0, 0, 0, 0, 1, 1], [0, 0, 0, 0, 0, 1, -1, 0])


def _f4() -> list:
    half = Fraction(1, 2)
    out = _type_b(4)
    out += [[half * s for s in signs] for signs in itertools.product((1, -1), repeat=4)]
    return out


def _g2() -> list:
    out = []
    for i, j in itertools.permutations(range(3), 2):
        v = [0] * 3
        v[i], v[j] = 1, -1
        out.append(v)
    for i in range(3):
        for s in (1, -1):
            v = [-s] * 3
            v[i] = 2 * s
            out.append(v)
    return out


_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


def build(type_: str, rank: int | None = None) -> RootSystem:
    """Root system of the given type and rank."""
    t = type_.upper()
    if t in EXCEPTIONAL_RANKS:
        fixed = EXCEPTIONAL_RANKS[t]
        if rank is not None and rank != fixed:
            raise InvalidRank(f"{t} has rank {fixed}, not {rank}")
        roots = {"E6": _e6, "E7": _e7, "E8": _e8, "F4": _f4, "G2": _g2}[t]()
        rank = fixed
    elif t in _MIN_RANK:
        if rank is None or rank < _MIN_RANK[t]:
            raise InvalidRank(f"type {t} needs rank >= {_MIN_RANK[t]}, got {rank}")
        roots = {"A": _type_a, "B": _type_b, "C": _type_c, "D": _type_d}[t](rank)
    else:
        raise ValueError(f"unknown root system type {type_!r}")
    return RootSystem(t, rank, tuple(sorted(_vec(r) for r in roots)))


def parse_type(text: str) -> tuple[str, int | None]:
    """``"D4"`` -> ``("D", 4)``, ``"E8"`` -> ``("E8", 8)``."""
    s = text.strip().upper()
    if s in EXCEPTIONAL_RANKS:
        return s, EXCEPTIONAL_RANKS[s]
    if s[:1] in _MIN_RANK and s[1:].isdigit():
        return s[0], int(s[1:])
    if s in _MIN_RANK:
        return s, None
    raise ValueError(f"cannot parse root system {text!r}")


# -- traces -------------------------------------------------------------------


def coroot(theta: Sequence) -> Vector:
    t = _vec(theta)
    n = dot(t, t)
    return tuple(2 * x / n for x in t)


def coroot_values(rs: RootSystem, theta: Sequence) -> dict:
    """``alpha -> alpha(h_theta) = 2(alpha, theta)/(theta, theta)``."""
    t = _vec(theta)
    if t not in rs.roots:
        raise ValueError("theta must be a root")
    h = coroot(t)
    out = {}
    for a in rs.roots:
        v = dot(a, h)
        if v.denominator != 1:
            raise ArithmeticError(f"non-integral coroot value {v}")
        out[a] = int(v)
    return out


def power_trace(rs: RootSystem, h, k: int) -> Fraction:
    """``tr ad(h)^k`` on the Lie algebra for a Cartan element ``h`` and ``k >= 1``."""
    if k < 1:
        raise ValueError("k must be positive")
    hv = _as_vector(h)
    return sum((dot(a, hv) ** k for a in rs.roots), Fraction(0))


def kappa_hh(rs: RootSystem, theta: Sequence | None = None) -> Fraction:
    """Killing form ``kappa(h_theta, h_theta)`` for a root ``theta`` (default: a long root)."""
    t = rs.long_root() if theta is None else _vec(theta)
    return power_trace(rs, coroot(t), 2)


def x_trace(rs: RootSystem, u, v) -> Fraction:
    """``tr (u(0)^4 - 6 u(0)^2 v(0)^2 + v(0)^4)`` on the Lie algebra."""
    uv, vv = _as_vector(u), _as_vector(v)
    total = Fraction(0)
    for a in rs.roots:
        x, y = dot(a, uv), dot(a, vv)
        total += x**4 - 6 * x * x * y * y + y**4
    return total


def x_trace_scaled(rs: RootSystem, u, w, s2) -> Fraction:
    """``x_trace(u, s*w)`` for ``s = sqrt(s2)``; only even powers of ``s`` occur."""
    uv, wv = _as_vector(u), _as_vector(w)
    s2 = Fraction(s2)
    a4 = b22 = c4 = Fraction(0)
    for a in rs.roots:
        x, y = dot(a, uv), dot(a, wv)
        a4 += x**4
        b22 += x * x * y * y
        c4 += y**4
    return a4 - 6 * s2 * b22 + s2 * s2 * c4


def pair_violations(u, v) -> list[str]:
    """Advisory check of the hypotheses on ``(u, v)``: orthogonal and of equal length."""
    uv, vv = _as_vector(u), _as_vector(v)
    out = []
    if dot(uv, vv) != 0:
        out.append("u and v are not orthogonal")
    if dot(uv, uv) != dot(vv, vv):
        out.append("u and v have different lengths")
    return out


# -- classical sweeps -----------------------------------------------------------

CLOSED_FORMS = {
    "A": (lambda l: 8 * l + 8, 3),
    "B": (lambda l: 8 * l - 28, 2),
    "C": (lambda l: 8 * l + 32, 3),
    "D": (lambda l: 8 * l - 32, 4),
}


def standard_pair(rs: RootSystem) -> tuple[CartanVector, CartanVector]:
    """The orthogonal equal-length pair used for the classical sweeps."""
    n = rs.ambient
    if rs.type == "A":
        if rs.rank < 3:
            raise InvalidRank("the A-type pair needs rank >= 3")
        return (
            CartanVector([1, -1] + [0] * (n - 2)),
            CartanVector([0, 0, 1, -1] + [0] * (n - 4)),
        )
    if rs.type in ("B", "C", "D"):
        return CartanVector(_unit(n, 0)), CartanVector(_unit(n, n - 1))
    raise ValueError("standard pairs are defined for classical types only")


@dataclass(frozen=True)
class SweepRow:
    type: str
    rank: int
    dim: int
    kappa: Fraction
    trace: Fraction
    closed_form: int

    @property
    def ok(self) -> bool:
        return self.trace == self.closed_form


def classical_sweep(type_: str, lmin: int, lmax: int) -> list[SweepRow]:
    t = type_.upper()
    form, low = CLOSED_FORMS[t]
    if lmin < low:
        raise InvalidRank(f"sweep for type {t} starts at rank {low}")
    rows = []
    for l in range(lmin, lmax + 1):
        rs = build(t, l)
        u, v = standard_pair(rs)
        rows.append(SweepRow(t, l, rs.dim, kappa_hh(rs), x_trace(rs, u, v), form(l)))
    return rows


# -- 4-design check ----------------------------------------------------------------


@dataclass
class DesignReport:
    name: str
    trials: int
    seed: int
    zeros: int
    vacuous: int
    counterexamples: list
    quartic_identity: bool

    @property
    def ok(self) -> bool:
        return not self.counterexamples and self.quartic_identity

    def to_json(self) -> dict:
        return {
            "system": self.name,
            "trials": self.trials,
            "seed": self.seed,
            "zeros": self.zeros,
            "vacuous": self.vacuous,
            "counterexamples": self.counterexamples,
            "quartic_identity": self.quartic_identity,
            "status": "pass" if self.ok else "fail",
        }


def _random_root_combo(rs: RootSystem, rng: random.Random) -> Vector:
    v = [Fraction(0)] * rs.ambient
    for _ in range(rs.rank + 2):
        r = rng.choice(rs.roots)
        c = rng.randint(-3, 3)
        v = [a + c * b for a, b in zip(v, r)]
    return tuple(v)


def four_design_check(rs: RootSystem, trials: int = 20, seed: int = 0) -> DesignReport:
    """Evaluate ``x_trace`` on seeded orthogonal equal-length pairs in the span of the roots.

    Pairs are ``u`` and ``v = s w`` with ``w`` an integer root combination
    projected orthogonally to ``u`` and ``s^2 = |u|^2/|w|^2``; the trace is a
    polynomial in ``s^2``, so everything stays rational.  In rank one the only
    such pair is zero and the draw is recorded as vacuous.  The report also
    checks the quartic design identity ``sum (alpha, x)^4 = c |x|^4`` on
    random ``x``.
    """
    rng = random.Random(seed)
    zeros = vacuous = 0
    bad = []
    for _ in range(trials):
        u = _random_root_combo(rs, rng)
        while dot(u, u) == 0:
            u = _random_root_combo(rs, rng)
        for _attempt in range(100 if rs.rank > 1 else 1):
            w = _random_root_combo(rs, rng)
            w = tuple(b - dot(w, u) / dot(u, u) * a for a, b in zip(u, w))
            if dot(w, w):
                break
        if dot(w, w) == 0:
            # rank one: orthogonality forces w = 0, hence |u| = |v| = 0
            vacuous += 1
            val = x_trace(rs, [0] * rs.ambient, [0] * rs.ambient)
        else:
            val = x_trace_scaled(rs, u, w, dot(u, u) / dot(w, w))
        if val == 0:
            zeros += 1
        else:
            bad.append({"u": [str(x) for x in u], "w": [str(x) for x in w], "trace": str(val)})
    ratios = set()
    for _ in range(max(trials, 3)):
        x = _random_root_combo(rs, rng)
        if dot(x, x):
            ratios.add(power_trace(rs, x, 4) / dot(x, x) ** 2)
    return DesignReport(rs.name, trials, seed, zeros, vacuous, bad, len(ratios) == 1)


# -- levels --------------------------------------------------------------------


def level(type_: str, rank: int | None = None) -> Fraction:
    """``6 kappa(h_theta, h_theta)/(n - 24)`` with ``n`` the dimension."""
    rs = build(type_, rank)
    n = rs.dim
    if n == 24:
        raise AbelianCharge("dimension 24 forces an abelian weight-one space")
    return 6 * kappa_hh(rs) / (n - 24)


def table() -> list[tuple[str, int, Fraction, Fraction, Fraction]]:
    """``(name, dim, kappa, tr h^4, level)`` over the augmented exceptional list."""
    out = []
    for t, r in AUGMENTED:
        rs = build(t, r)
        h = coroot(rs.long_root())
        out.append((rs.name, rs.dim, kappa_hh(rs), power_trace(rs, h, 4), level(t, r)))
    return out
