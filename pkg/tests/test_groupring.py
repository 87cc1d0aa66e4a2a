import pytest

from fiberface import presets
from fiberface.groupring import (DimensionError, GroupPoly, NotDivisibleError, PolySyntaxError,
                                 add, exact_div, mul, normalize_unit, parse_poly,
                                 reversal_symmetric, strip_binomial_factors, substitute_inverse)

UT = ("u", "t")
T = ("t",)


def P(text, names=UT):
    return parse_poly(text, names)


QUARTIC1 = "u^2-(5*t+19+5*t^-1)*u+(14*t+48+14*t^-1)-(5*t+19+5*t^-1)*u^-1+u^-2"


def test_zero_has_empty_support():
    z = GroupPoly.zero(UT)
    assert z.is_zero() and z.support() == [] and z.terms == {}


def test_no_stored_zero_coefficients():
    p = GroupPoly(UT, {(1, 0): 0, (0, 1): 3})
    assert p.support() == [(0, 1)]


def test_add_inverse():
    assert add(P("t"), P("-t")).is_zero()


def test_add_disjoint_supports():
    assert add(P("u^2+t"), P("t^-1")) == P("u^2+t+t^-1")


def test_add_coefficients():
    assert add(P("5*t+19+5*t^-1"), P("14*t+48+14*t^-1")) == P("19*t+67+19*t^-1")


def test_add_dimension_mismatch():
    with pytest.raises(DimensionError):
        add(P("t", T), P("u+t"))


def test_mul_difference_of_squares():
    assert mul(P("u-1"), P("u+1")) == P("u^2-1")


def test_mul_units():
    assert mul(P("t"), P("t^-1")) == GroupPoly.constant(UT, 1)


def test_mul_builds_example_theta():
    full = mul(P("u-1"), P(QUARTIC1))
    assert full == presets.theta_example1()
    assert full.coeff((3, 0)) == 1 and full.coeff((2, 1)) == -5 and full.coeff((2, 0)) == -20


def test_mul_dimension_mismatch():
    with pytest.raises(DimensionError):
        mul(P("t", T), P("u"))


def test_exact_div_simple():
    assert exact_div(P("u^2-1"), P("u-1")) == P("u+1")


def test_exact_div_recovers_quartic():
    assert exact_div(presets.theta_example1(), P("u-1")) == P(QUARTIC1)


def test_exact_div_not_divisible():
    with pytest.raises(NotDivisibleError, match="not divisible"):
        exact_div(P("u^2+1"), P("u-1"))


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(P("u"), GroupPoly.zero(UT))


def test_substitute_inverse_palindrome_fixed():
    assert substitute_inverse(P("t+2+t^-1", T), 0) == P("t+2+t^-1", T)


def test_substitute_inverse_monomial():
    assert substitute_inverse(P("u*t^2"), 1) == P("u*t^-2")


def test_substitute_inverse_changes_penner_quartic():
    q = P(presets.QUARTIC_62)
    inv = substitute_inverse(q, 1)
    assert inv != q
    assert q.coeff((3, 2)) == -78 and inv.coeff((3, 2)) == -77


def test_substitute_inverse_index_out_of_range():
    with pytest.raises(IndexError):
        substitute_inverse(P("u"), 2)


def test_normalize_unit_of_unit_is_one():
    assert normalize_unit(P("-u^3*t^2")) == GroupPoly.constant(UT, 1)


def test_normalize_unit_shift():
    assert normalize_unit(P("u^-1*(u^2-1)")) == P("u^2-1")


def test_normalize_unit_monomial_invariance():
    theta = presets.theta_example1()
    assert normalize_unit(theta) == normalize_unit(mul(P("-t^3"), theta))


def test_normalize_unit_idempotent():
    n = normalize_unit(presets.theta_example1())
    assert normalize_unit(n) == n
    assert min(e[0] for e in n.support()) == 0 and min(e[1] for e in n.support()) == 0
    assert n.leading_term()[1] > 0


def test_normalize_unit_zero():
    with pytest.raises(ValueError):
        normalize_unit(GroupPoly.zero(UT))


def test_reversal_symmetric_example_theta():
    assert reversal_symmetric(presets.theta_example1())


def test_reversal_asymmetric():
    assert not reversal_symmetric(P("u-2", ("u",)))


def test_reversal_symmetric_penner_quartic():
    assert reversal_symmetric(P(presets.QUARTIC_62))


def test_reversal_symmetric_zero():
    with pytest.raises(ValueError):
        reversal_symmetric(GroupPoly.zero(UT))


def test_strip_binomial_factors():
    core, powers = strip_binomial_factors(P("(u-1)^3*(u^2-3*u+1)"))
    assert core == P("u^2-3*u+1") and powers == {0: 3}


def test_evaluate_and_specialize():
    p = P("u^2*t-3*t^-1")
    assert p.evaluate((2, 3)) == 12 - 1
    assert p.specialize(1, 1) == P("u^2-3", ("u",))


def test_parse_reports_position():
    with pytest.raises(PolySyntaxError) as info:
        parse_poly("u + * t", UT)
    assert info.value.column == 5


def test_parse_unknown_variable():
    with pytest.raises(PolySyntaxError):
        parse_poly("x + 1", UT)


def test_to_string_round_trip():
    p = presets.theta_example1()
    assert parse_poly(p.to_string(), UT) == p
