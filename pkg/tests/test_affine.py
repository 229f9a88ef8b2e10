import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gradedtraces import affine, rootsys, voatrace
from gradedtraces.affine import (
    DEFAULT_LEVELS,
    VacuumModule,
    build_algebra,
    normalize_word,
    oracle_traces,
    verify_expansion,
    verify_general_traces,
)
from gradedtraces.errors import DegreeOverflow

SL2 = build_algebra("sl2")
SL3 = build_algebra("sl3")
PAIR = build_algebra("sl2+sl2")


@pytest.mark.parametrize("alg, n", [(SL2, 3), (SL3, 8), (PAIR, 6)])
def test_dimensions(alg, n):
    assert alg.n == n


@pytest.mark.parametrize("alg, dims", [
    (SL2, [1, 3, 9, 22, 51]),
    (SL3, [1, 8, 44, 192, 726]),
])
def test_pbw_dimensions_are_coloured_partitions(alg, dims):
    mod = VacuumModule(alg, 1)
    assert [len(mod.basis(d)) for d in range(5)] == dims


def test_pairing_mode():
    mod = VacuumModule(SL2, F(7, 3))
    h = SL2.vec("h")
    out = mod.apply_mode(h, 1, mod.element(h))
    assert out == {(): 2 * F(7, 3)}


def test_degree_overflow():
    mod = VacuumModule(SL2, 1, max_degree=2)
    s = mod.element(SL2.vec("e"))
    with pytest.raises(DegreeOverflow):
        mod.apply_mode(SL2.vec("f"), -2, s)
    assert mod.apply_mode(SL2.vec("f"), -2, s, truncate=True) == {}


modes = st.tuples(st.integers(-2, 2), st.integers(0, 2))


@given(st.lists(modes, min_size=1, max_size=4), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_rewriting_is_confluent(word, seed):
    word = tuple(word)
    # keep every intermediate state inside the truncation
    assume(all(-sum(m for m, _ in word[p:]) <= 4 for p in range(len(word))))
    mod = VacuumModule(SL2, F(5, 2))
    a = normalize_word(mod, word, random.Random(seed))
    b = normalize_word(mod, word, random.Random(seed + 1))
    state = mod.vacuum()
    for m, i in reversed(word):
        state = mod.apply_mode(SL2.vec_basis(i), m, state)
    assert a == b == state


@given(st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2), st.integers(-2, 2),
       st.sampled_from(DEFAULT_LEVELS))
@settings(max_examples=40, deadline=None)
def test_commutator_relation(i, j, m, n, k):
    mod = VacuumModule(SL2, k)
    x, y = SL2.vec_basis(i), SL2.vec_basis(j)
    state = mod.element(SL2.vec("f"))
    assume(1 - m - n <= 4 and 1 - n <= 4 and 1 - m <= 4)
    lhs = dict(mod.apply_mode(x, m, mod.apply_mode(y, n, state)))
    affine._add_into(lhs, mod.apply_mode(y, n, mod.apply_mode(x, m, state)), -1)
    rhs = dict(mod.apply_mode(SL2.bracket(x, y), m + n, state))
    if m + n == 0:
        affine._add_into(rhs, state, m * k * SL2.pair(x, y))
    assert lhs == rhs


@pytest.mark.parametrize("alg", [SL2, SL3])
def test_weight_one_zero_mode_is_adjoint(alg):
    mod = VacuumModule(alg, 2)
    for j in range(alg.n):
        x = alg.vec_basis(j)
        assert mod.zero_mode_matrix(mod.element(x), 1) == alg.ad(x)


def test_vacuum_zero_mode_is_identity():
    mod = VacuumModule(SL2, 3)
    for d in range(4):
        assert mod.trace(mod.vacuum(), d) == len(mod.basis(d))


def test_square_mode_pairing():
    # h[2] h[-2] 1 = 2 <h|h> 1 with <h|h> = level (h, h)
    mod = VacuumModule(SL2, 3)
    h = SL2.vec("h")
    s = mod.square_mode(h, -2, mod.vacuum())
    assert mod.square_mode(h, 2, s) == {(): 12}


def test_expansion_sl2():
    assert all(r.ok for r in verify_expansion("sl2", DEFAULT_LEVELS, 20, seed=0))


def test_expansion_sl3_small():
    reps = verify_expansion("sl3", DEFAULT_LEVELS[:2], 4, seed=3)
    assert all(r.ok for r in reps)


def test_general_traces_sl2():
    reps = verify_general_traces("sl2", DEFAULT_LEVELS, 20, seed=0)
    assert all(r.ok for r in reps)
    assert {r.level for r in reps} == set(DEFAULT_LEVELS)


def test_general_traces_pair():
    assert all(r.ok for r in verify_general_traces("sl2+sl2", DEFAULT_LEVELS[:2], 6, seed=1))


def test_opposite_sign_of_five_term_fails():
    reps = verify_general_traces("sl2", DEFAULT_LEVELS[:1], 5, seed=0, five_sign=-1)
    assert not all(r.ok for r in reps)
    assert any(r.witness for r in reps)


def test_report_json_is_deterministic():
    a = [r.to_json() for r in verify_expansion("sl2", DEFAULT_LEVELS[:1], 3, seed=9)]
    b = [r.to_json() for r in verify_expansion("sl2", DEFAULT_LEVELS[:1], 3, seed=9)]
    assert a == b and a[0]["level"] == "1"


# -- x(u, v) against root data ---------------------------------------------------------


def _x_traces(mod, u, v, s2=1, traces=oracle_traces):
    a = traces(mod, u, u, u, u)
    b = traces(mod, u, u, v, v)
    c = traces(mod, v, v, v, v)
    return tuple(a[i] - 6 * s2 * b[i] + s2 * s2 * c[i] for i in (0, 1))


@pytest.mark.parametrize("level", DEFAULT_LEVELS)
def test_x_traces_sl2_pair(level):
    mod = VacuumModule(PAIR, level)
    u, v = PAIR.vec("h1"), PAIR.vec("h2")
    expected = voatrace.x_traces_from_ad(PAIR.ad, u, v)
    assert expected == 64
    assert _x_traces(mod, u, v) == (0, expected)
    assert _x_traces(mod, u, v, traces=affine.formula_traces) == (0, expected)


@pytest.mark.parametrize("level", DEFAULT_LEVELS)
def test_x_traces_sl3_scaled(level):
    # u = diag(1,-1,0) and v = s diag(1,1,-2) with s^2 = 1/3
    mod = VacuumModule(SL3, level)
    u, w = SL3.vec("H1"), tuple(a + 2 * b for a, b in zip(SL3.vec("H1"), SL3.vec("H2")))
    s2 = F(1, 3)
    assert SL3.pair(u, u) == s2 * SL3.pair(w, w) and SL3.pair(u, w) == 0
    rs = rootsys.build("A", 2)
    root_side = rootsys.x_trace_scaled(rs, (1, -1, 0), (1, 1, -2), s2)
    assert _x_traces(mod, u, w, s2) == (0, root_side) == (0, 0)
    assert _x_traces(mod, u, w, s2, traces=affine.formula_traces) == (0, root_side)


# -- y(alpha) at the level forced by c = 24 ------------------------------------------------


@pytest.mark.parametrize("kind, name, e, f", [("sl2", "A1", "e", "f"), ("sl3", "A2", "E13", "E31")])
def test_y_alpha_oracle(kind, name, e, f):
    alg = build_algebra(kind)
    t, r = rootsys.parse_type(name)
    rep = voatrace.y_alpha_report(t, r)
    mod = VacuumModule(alg, rootsys.level(t, r))
    E, Fv = alg.vec(e), alg.vec(f)
    H = alg.bracket(E, Fv)
    efef = oracle_traces(mod, E, Fv, E, Fv)
    hhhh = oracle_traces(mod, H, H, H, H)
    assert efef[0] / hhhh[0] == rep.C
    assert efef[0] - rep.C * hhhh[0] == 0
    assert efef[1] - rep.C * hhhh[1] == rep.tr_v1
