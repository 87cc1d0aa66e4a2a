from fractions import Fraction

import mpmath
import sympy
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from fiberface import io, presets
from fiberface.certify import IntPoly, resultant, squarefree_part
from fiberface.certify.elimination import XY
from fiberface.certify.intpoly import poly_gcd
from fiberface.conenorm import fibered_cone, pair, teich_norm
from fiberface.dilatation import Segment, directional_derivative, eval_lambda
from fiberface.groupring import GroupPoly
from fiberface.orbits import census
from fiberface.penner import PennerSpec, TwistStep, phi, symmetry_check, twist_blocks
from fiberface.polymat import PolyMatrix, char_det, det, mat_mul

settings.register_profile("props", max_examples=100, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("props")

UT = ("u", "t")
T = ("t",)
THETA = presets.theta_example1()
CONE1 = fibered_cone(THETA, (1, 0))
MAGIC = presets.magic_poly()
MAGIC_CONE = fibered_cone(MAGIC, presets.MAGIC_REF)


def polys(names=UT, lo=-2, hi=2, max_terms=5, min_terms=0, coeff=5):
    exp = st.tuples(*[st.integers(lo, hi)] * len(names))
    terms = st.dictionaries(exp, st.integers(-coeff, coeff), min_size=min_terms, max_size=max_terms)
    return terms.map(lambda d: GroupPoly(names, d))


nonzero_polys = polys(min_terms=1).filter(lambda p: not p.is_zero())
nonneg_entries = polys(T, -1, 1, 3, coeff=3).map(lambda p: GroupPoly(T, {e: abs(c) for e, c in p.terms.items()}))


def matrices(n, entries=polys(T, -1, 1, 3)):
    return st.lists(entries, min_size=n * n, max_size=n * n).map(
        lambda es: PolyMatrix.from_rows([es[i * n:(i + 1) * n] for i in range(n)], T))


fracs = st.fractions(min_value=-1, max_value=1, max_denominator=50)


# -- group ring -------------------------------------------------------

@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p + q) + r == p + (q + r)
    assert p - p == GroupPoly.zero(UT)


@given(polys(), nonzero_polys)
def test_exact_div_inverts_mul(p, q):
    assert (p * q).exact_div(q) == p


@given(nonzero_polys, st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.sampled_from([1, -1]))
def test_normalize_unit_monomial_invariance(p, e, sign):
    unit = GroupPoly.monomial(UT, e, sign)
    assert (unit * p).normalize_unit() == p.normalize_unit()
    assert p.normalize_unit().normalize_unit() == p.normalize_unit()


@given(polys(), st.integers(0, 1))
def test_substitute_inverse_involution(p, i):
    assert p.substitute_inverse(i).substitute_inverse(i) == p


@given(polys())
def test_poly_round_trip(p):
    assert io.parse_poly_file(io.serialize_poly(p)) == p


# -- matrices ---------------------------------------------------------

@given(matrices(3), matrices(3), matrices(3))
def test_mat_mul_associative(a, b, c):
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@given(matrices(3))
def test_char_det_at_one(m):
    u = sympy.symbols("u")
    m1 = sympy.Matrix(3, 3, lambda i, j: int(m[i, j].evaluate((1,))))
    want = sympy.Poly((u * sympy.eye(3) - m1).det(), u).all_coeffs()
    got = char_det(m).specialize(1, 1)
    assert [got.coeff((k,)) for k in range(3, -1, -1)] == [int(c) for c in want]


@given(matrices(2), matrices(2), matrices(2))
def test_char_det_block_triangular(a, b, c):
    zero = GroupPoly.zero(T)
    rows = [list(a.row(i)) + list(c.row(i)) for i in range(2)]
    rows += [[zero, zero] + list(b.row(i)) for i in range(2)]
    assert char_det(PolyMatrix.from_rows(rows, T)) == char_det(a) * char_det(b)


@given(matrices(2))
def test_matrix_round_trip(m):
    assert io.parse_matrix(io.serialize_matrix(m)) == m


# -- Penner words -----------------------------------------------------

vec3 = st.tuples(*[st.integers(1, 3)] * 3)
vec2 = st.tuples(*[st.integers(1, 3)] * 2)


@given(st.tuples(*[st.integers(0, 4)] * 3), st.tuples(*[st.integers(0, 4)] * 2))
def test_twist_blocks_unipotent(v, w):
    spec = presets.penner_spec_62()
    one = GroupPoly.constant(T, 1)
    assert det(twist_blocks(spec, TwistStep("a", v))) == one
    assert det(twist_blocks(spec, TwistStep("b", w))) == one


@settings(max_examples=100)
@given(vec3, vec2, st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3)), min_size=1, max_size=2))
def test_proportional_words_symmetric(v, w, mults):
    word = []
    for x, y in mults:
        word += [("a", tuple(x * c for c in v)), ("b", tuple(y * c for c in w))]
    assert symmetry_check(presets.penner_spec_62(tuple(word)))


@given(st.lists(st.tuples(st.integers(1, 2), st.integers(1, 2)), min_size=1, max_size=2),
       st.integers(1, 3), st.integers(1, 3))
def test_phi_at_one_matches_integer_product(mults, p, q):
    inter = PolyMatrix.from_rows([[GroupPoly(T, {(1,): p, (0,): 1})], [GroupPoly(T, {(-1,): q})]], T)
    word = []
    for x, y in mults:
        word += [TwistStep("a", (x, y)), TwistStep("b", (x + y,))]
    spec = PennerSpec(inter, tuple(word), p + 1 + q)
    u = sympy.symbols("u")
    prod = sympy.eye(3)
    for step in word:
        blk = sympy.eye(3)
        if step.kind == "a":
            blk[0, 2], blk[1, 2] = step.mult[0] * (p + 1), step.mult[1] * q
        else:
            blk[2, 0], blk[2, 1] = step.mult[0] * (p + 1), step.mult[0] * q
        prod = blk * prod
    want = sympy.Poly((u - 1) ** (spec.r - 3) * (u * sympy.eye(3) - prod).det(), u)
    got = phi(spec).specialize(1, 1)
    top = got.degree_range(0)[1]
    assert [got.coeff((k,)) for k in range(top, -1, -1)] == [int(c) for c in want.all_coeffs()]


# -- cones and norms --------------------------------------------------

@given(fracs.filter(lambda r: abs(r) < 1), st.fractions(1, 10, max_denominator=20))
def test_cone_interior_dominance(r, k):
    alpha = (k, k * r)
    assert CONE1.contains(alpha)
    top = pair(alpha, CONE1.dominant)
    assert all(pair(alpha, g) < top for g in THETA.support() if g != CONE1.dominant)


@given(fracs, fracs)
def test_norm_homogeneous(a, b):
    assert teich_norm(THETA, (2 * a, 2 * b)) == 2 * teich_norm(THETA, (a, b))


# -- dilatation -------------------------------------------------------

interior_ex1 = st.fractions(Fraction(-9, 10), Fraction(9, 10), max_denominator=40)


@given(interior_ex1)
def test_lambda_homogeneity(r):
    alpha = (Fraction(1), r)
    one = eval_lambda(THETA, alpha, CONE1, 50)
    two = eval_lambda(THETA, (2, 2 * r), CONE1, 50)
    with mpmath.workdps(60):
        assert abs(two.log_value - one.log_value / 2) <= mpmath.mpf(10) ** -40


@given(st.integers(1, 12).flatmap(lambda a: st.tuples(st.just(a), st.integers(-a + 1, a - 1))))
def test_perron_bound_example(alpha):
    assert eval_lambda(THETA, alpha, CONE1, 30).value <= THETA.coeff_abs_sum()


@given(st.integers(1, 6), st.integers(1, 6))
def test_perron_bound_magic(i, j):
    alpha = tuple(i * a + j * b for a, b in zip((5, 2, 2), (2, 0, -2)))
    assert eval_lambda(MAGIC, alpha, MAGIC_CONE, 30).value <= MAGIC.coeff_abs_sum()


@given(interior_ex1, st.tuples(fracs, fracs).filter(lambda v: v != (0, 0)))
def test_derivative_matches_finite_difference(r, v):
    alpha = (Fraction(1), r)
    d = directional_derivative(THETA, alpha, v, CONE1, 30)
    lam = eval_lambda(THETA, alpha, CONE1, 30).value
    assume(abs(d) > mpmath.mpf("1e-4") * lam)
    h = Fraction(1, 10 ** 8)
    up = eval_lambda(THETA, tuple(a + h * b for a, b in zip(alpha, v)), CONE1, 30).value
    dn = eval_lambda(THETA, tuple(a - h * b for a, b in zip(alpha, v)), CONE1, 30).value
    fd = (up - dn) * 10 ** 8 / 2
    assert abs(fd - d) <= mpmath.mpf("1e-6") * abs(d)


# -- orbits -----------------------------------------------------------

@given(matrices(3, nonneg_entries), st.integers(1, 3))
def test_census_specialization(m, k):
    m1 = sympy.Matrix(3, 3, lambda i, j: int(m[i, j].evaluate((1,))))
    classes = census(m, k)
    for power in range(1, k + 1):
        mp = m1 ** power
        for i in range(3):
            total = sum(c.multiplicity for c in classes if c.u_degree == power and c.through_cell == i)
            assert total == mp[i, i]
    assert all(c.multiplicity > 0 for c in classes)


# -- certify ----------------------------------------------------------

small = st.integers(-6, 6)


@given(small, small, small, small)
def test_resultant_vanishes_iff_shared_root(a, b, c, d):
    x = GroupPoly.gens(XY)[0]
    p = (x - a) * (x - b)
    q = (x - c) * (x - d)
    assert resultant(p, q).is_zero() == bool({a, b} & {c, d})


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.lists(st.integers(1, 2), min_size=4, max_size=4))
def test_squarefree_part_coprime_to_derivative(roots, powers):
    p = IntPoly([1])
    for r, k in zip(roots, powers):
        for _ in range(k):
            p = p * IntPoly([-r, 1])
    sq = squarefree_part(p)
    assert poly_gcd(sq, sq.derivative()).degree == 0
    assert sq.degree == len(set(roots))


@given(st.tuples(fracs, fracs), st.tuples(fracs, fracs), st.none() | st.tuples(small, small))
def test_slice_round_trip(a, b, w):
    assume(a != b)
    seg = Segment(a, b, w)
    assert io.parse_slice(io.serialize_slice(seg)) == seg
