from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedtraces.errors import GridMismatch, InvalidWeight, NotInvertible, OutsideUpperHalfPlane
from gradedtraces.qseries import (
    QSeries,
    bernoulli,
    delta,
    eisenstein,
    eta_pow,
    eval_numeric,
    g2,
    jfunction,
    named_form,
    one,
    sigma,
    theta,
)

coeff = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def series(draw, min_len=1, max_len=8, unit=False):
    cs = draw(st.lists(coeff, min_size=min_len, max_size=max_len))
    if unit:
        cs = [Fraction(1)] + cs
    off = 24 * draw(st.integers(-2, 2))
    return QSeries(off, tuple(cs))


# -- ring laws ----------------------------------------------------------------


@given(series(), series())
def test_add_commutes(a, b):
    assert a + b == b + a


@given(series(), series(), series())
def test_add_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(series(), series())
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(series(unit=True), series(unit=True), series(unit=True))
def test_mul_associates(a, b, c):
    assert ((a * b) * c).agrees(a * (b * c))


@given(series(unit=True), series(), series())
def test_distributes(a, b, c):
    assert (a * (b + c)).agrees(a * b + a * c)


@given(series())
def test_sub_self_is_zero(a):
    assert (a - a).is_zero()


@given(series(unit=True), st.integers(-4, 4), st.integers(-4, 4))
@settings(max_examples=50)
def test_power_law(f, a, b):
    assert (f**a * f**b).agrees(f ** (a + b))


@given(series(unit=True))
def test_inverse(f):
    assert (f * f.inverse()).agrees(one(f.prec))


@given(series(), series())
def test_theta_leibniz(f, g):
    assert theta(f * g).agrees(theta(f) * g + f * theta(g))


@given(series())
def test_json_roundtrip(f):
    assert QSeries.from_json(f.to_json()) == f


# -- canonical form and precision ----------------------------------------------


def test_leading_zeros_are_stripped():
    f = QSeries(0, (0, 0, 3, 1))
    assert f.offset24 == 48 and f.coeffs == (3, 1)
    assert f.top24 == 96


def test_zero_series_remembers_precision():
    z = QSeries(0, (0, 0, 0))
    assert z.is_zero() and z.top24 == 72


def test_precision_is_minimum_of_operands():
    a = QSeries(0, (1, 1, 1, 1))
    b = QSeries(0, (1, 1))
    assert (a + b).prec == 2
    assert (a * b).prec == 2


def test_grid_mismatch():
    with pytest.raises(GridMismatch):
        eta_pow(1, 5) + one(5)


def test_zero_series_not_invertible():
    with pytest.raises(NotInvertible):
        QSeries.zero(48).inverse()


def test_beyond_precision():
    with pytest.raises(IndexError):
        delta(3)[5]


def test_fractional_exponent_lookup():
    f = eta_pow(1, 4)
    assert f[Fraction(1, 24)] == 1
    assert f[Fraction(25, 24)] == -1
    assert f[1] == 0


# -- arithmetic functions --------------------------------------------------------


@pytest.mark.parametrize("k, b", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (4, Fraction(-1, 30)),
                                  (12, Fraction(-691, 2730)), (13, 0)])
def test_bernoulli(k, b):
    assert bernoulli(k) == b


def test_sigma():
    assert [sigma(n, 1) for n in range(1, 7)] == [1, 3, 4, 7, 6, 12]
    assert sigma(6, 3) == 1 + 8 + 27 + 216


# -- named forms -------------------------------------------------------------------


def test_e4_e6_normalized():
    assert list((eisenstein(4, 4) * 720).coeffs) == [1, 240, 2160, 6720]
    assert list((eisenstein(6, 3) * -30240).coeffs) == [1, -504, -16632]


def test_g2_head():
    assert list(g2(3).coeffs) == [Fraction(-1, 12), 2, 6]


def test_ramanujan_tau():
    assert list(delta(7).coeffs) == [1, -24, 252, -1472, 4830, -6048, -16744]


def test_j_coefficients():
    j = jfunction(4)
    assert j[-1] == 1 and j[0] == 0 and j[1] == 196884 and j[2] == 21493760


def test_eta_inverse_counts_partitions():
    p = eta_pow(-1, 10)
    assert p.offset24 == -1
    assert list(p.coeffs) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_invalid_weight():
    with pytest.raises(InvalidWeight):
        eisenstein(3, 5)


@pytest.mark.parametrize("name, text", [
    ("J", "q^-1 + 0 + 196884q"),
    ("delta", "q - 24q^2"),
    ("G2", "-1/12"),
])
def test_named_form_display(name, text):
    terms = {"J": 3, "delta": 2, "G2": 1}[name]
    assert str(named_form(name, terms)) == text


def test_named_form_rejects_unknown():
    with pytest.raises(ValueError):
        named_form("theta", 5)


def test_z1_uses_dim_v1():
    assert str(named_form("Z1", 2, dim_v1=48)) == "q^-1 + 48"


# -- numerics ----------------------------------------------------------------------


def test_eval_rejects_lower_half_plane():
    with pytest.raises(OutsideUpperHalfPlane):
        eval_numeric(delta(5), -1j)


def test_eval_reports_tail():
    _, tail = eval_numeric(delta(60), 1j)
    assert tail < 1e-100


def test_delta_at_i_is_fixed_by_s():
    d = delta(80)
    a, _ = eval_numeric(d, 1j)
    assert abs(a.imag) < 1e-15 and a.real > 0
