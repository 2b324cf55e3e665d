import pytest

from hopfcheck.algebra import AssocAlgebra, is_semisimple_trace
from hopfcheck.cyclotomic import make_field
from hopfcheck.families import a_tau_mu, group_algebra, sweedler, taft, taft_tensor_group
from hopfcheck.hopf import (
    HopfAlgebra,
    NoAntipode,
    NotGroupLike,
    antipode_order,
    check_radford_s4,
    coradical,
    dual,
    fingerprint,
    group_likes,
    group_likes_bruteforce,
    integrals,
    is_pointed,
    is_semisimple_lr,
    skew_primitives,
    solve_antipode,
    structure_equal,
    tensor_hopf,
    trace_s2,
    verify_hopf,
)
from hopfcheck.linalg import Matrix, Tensor3, unit_vector, vec_scale

Q = make_field(1)


def perturbed_sweedler_antipode():
    h = sweedler()
    data = [list(row) for row in h.antipode.data]
    # S(x) = -xg lives in column 2 (basis 1, x, g, gx ordering is (i,j) lex:
    # 1=(0,0), x=(0,1), g=(1,0), gx=(1,1)); flip its sign
    col = 1
    for r in range(4):
        data[r][col] = -data[r][col]
    return HopfAlgebra(h.algebra, h.comult, h.counit, Matrix(h.field, data))


class TestVerifyHopf:
    def test_sweedler_passes(self):
        assert verify_hopf(sweedler()).ok

    def test_group_algebras_pass(self):
        for n in (1, 2, 5):
            assert verify_hopf(group_algebra(n)).ok

    def test_a_tau_mu_passes(self):
        assert verify_hopf(a_tau_mu(3, 2, -1, 1)).ok

    def test_wrong_antipode_sign_fails_on_x(self):
        report = verify_hopf(perturbed_sweedler_antipode())
        assert not report.ok
        laws = {v.law for v in report.violations}
        assert laws <= {"antipode-left", "antipode-right"}
        locations = {v.location for v in report.violations}
        assert (1,) in locations  # basis element x

    def test_report_lines_deterministic(self):
        lines = verify_hopf(sweedler()).lines()
        assert lines == verify_hopf(sweedler()).lines()
        assert lines[0] == "associativity: ok"


class TestSolveAntipode:
    def test_sweedler_antipode_values(self):
        h = sweedler()
        s = solve_antipode(h)
        # basis 1, x, g, gx; S(g) = g, S(x) = -xg = gx
        assert s.column(2) == unit_vector(Q, 4, 2)
        assert s.column(1) == vec_scale(Q.from_rational(1), unit_vector(Q, 4, 3))

    def test_group_algebra_antipode_is_inversion(self):
        h = group_algebra(6)
        s = solve_antipode(h)
        for i in range(6):
            assert s.column(i) == unit_vector(h.field, 6, (-i) % 6)

    def test_idempotent_monoid_has_no_antipode(self):
        # monoid algebra of {1, z} with z^2 = z, Delta(z) = z (x) z
        mult = Tensor3(
            Q, (2, 2, 2), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 1): 1}
        )
        comult = Tensor3(Q, (2, 2, 2), {(0, 0, 0): 1, (1, 1, 1): 1})
        alg = AssocAlgebra(Q, 2, mult, unit_vector(Q, 2, 0))
        h = HopfAlgebra(alg, comult, (Q.one(), Q.one()))
        with pytest.raises(NoAntipode):
            solve_antipode(h)


class TestDual:
    def test_double_dual_identity(self):
        for h in (sweedler(), group_algebra(4), a_tau_mu(3, 2, -1, 0)):
            assert structure_equal(dual(dual(h)), h)

    def test_dual_group_algebra_group_count(self):
        h = group_algebra(5)  # default field Q(zeta_5)
        d = dual(h)
        assert verify_hopf(d).ok
        assert len(group_likes(d)) == 5

    def test_sweedler_self_dual_fingerprint(self):
        assert fingerprint(dual(sweedler())) == fingerprint(sweedler())


class TestTensor:
    def test_tensor_with_trivial_is_identity(self):
        h = sweedler()
        t = tensor_hopf(h, group_algebra(1, h.field))
        assert structure_equal(t, h)

    def test_tensor_dim(self):
        f = make_field(12)
        t = tensor_hopf(taft(2, -1, f), group_algebra(3, f))
        assert t.dim == 12
        assert verify_hopf(t).ok

    def test_taft_tensor_group_group_likes(self):
        t = taft_tensor_group(2, -1, 5)
        likes = group_likes(t)
        assert len(likes) == 10
        assert likes.is_cyclic()


class TestIntegrals:
    def test_group_algebra_unimodular(self):
        h = group_algebra(4)
        data = integrals(h)
        # Lambda proportional to sum of all group elements
        lam = data.left_integral
        assert all(c == lam[0] for c in lam)
        assert data.distinguished_a == h.unit
        assert data.distinguished_alpha == tuple(h.counit)

    def test_sweedler_integral_data(self):
        h = sweedler()
        data = integrals(h)
        lam = data.left_integral
        # Lambda = x + gx up to scalar: zero on 1, g; equal coords on x, gx
        assert lam[0].is_zero() and lam[2].is_zero()
        assert not lam[1].is_zero() and lam[1] == lam[3]
        # Lambda g = -Lambda
        prod = h.algebra.multiply(lam, unit_vector(Q, 4, 2))
        assert prod == vec_scale(Q.from_rational(-1), lam)
        # a = g and alpha(g) = -1
        assert data.distinguished_a == unit_vector(Q, 4, 2)
        assert data.distinguished_alpha[2] == Q.from_rational(-1)

    def test_integral_defining_equations(self):
        for h in (sweedler(), group_algebra(3), a_tau_mu(3, 2, -1, 1)):
            data = integrals(h)
            lam = data.left_integral
            for i in range(h.dim):
                e = unit_vector(h.field, h.dim, i)
                assert h.algebra.multiply(e, lam) == vec_scale(h.counit[i], lam)


class TestRadford:
    def test_group_algebra(self):
        h = group_algebra(5)
        assert check_radford_s4(h, integrals(h))
        assert h.antipode.power(2).is_identity()

    def test_sweedler(self):
        h = sweedler()
        assert check_radford_s4(h, integrals(h))
        assert h.antipode.power(4).is_identity()

    def test_a_tau_mu_s4_identity(self):
        h = a_tau_mu(3, 2, -1, 1)
        assert check_radford_s4(h, integrals(h))
        assert h.antipode.power(4).is_identity()


class TestSemisimplicity:
    def test_group_algebra_trace(self):
        for n in (2, 3, 6):
            h = group_algebra(n)
            assert trace_s2(h) == h.field.from_rational(n)
            assert is_semisimple_lr(h)
            assert is_semisimple_trace(h.algebra)

    def test_sweedler_trace_zero(self):
        h = sweedler()
        assert trace_s2(h).is_zero()
        assert not is_semisimple_lr(h)
        assert not is_semisimple_trace(h.algebra)

    def test_larson_radford_agrees_with_trace_form(self):
        for h in (sweedler(), group_algebra(4), a_tau_mu(3, 2, -1, 0)):
            assert is_semisimple_lr(h) == is_semisimple_trace(h.algebra)


class TestGroupLikes:
    def test_cyclic(self):
        h = group_algebra(6)
        likes = group_likes(h)
        assert len(likes) == 6 and likes.is_cyclic()
        assert sorted(likes.orders) == [1, 2, 3, 3, 6, 6]
        assert likes.complete

    def test_sweedler(self):
        likes = group_likes(sweedler())
        assert len(likes) == 2
        assert sorted(likes.orders) == [1, 2]

    def test_linear_independence(self):
        for h in (sweedler(), group_algebra(5), a_tau_mu(3, 2, -1, 0)):
            likes = group_likes(h)
            assert (
                Matrix(h.field, [list(v) for v in likes.elements]).rref()[1]
                == len(likes)
            )

    def test_brute_force_oracle_agrees(self):
        key = lambda g: tuple(tuple(c.coeffs) for c in g)
        for h in (sweedler(), group_algebra(3), group_algebra(4), group_algebra(6)):
            expected = sorted(group_likes(h).elements, key=key)
            assert sorted(group_likes_bruteforce(h), key=key) == expected

    def test_a_tau_mu_group(self):
        likes = group_likes(a_tau_mu(3, 2, -1, 0))
        assert len(likes) == 6 and likes.is_cyclic()


class TestSkewPrimitives:
    def test_sweedler_g_1(self):
        h = sweedler()
        g = unit_vector(Q, 4, 2)
        basis = skew_primitives(h, g, h.unit)
        assert len(basis) == 1
        v = basis[0]
        assert not v[1].is_zero()  # contains x
        assert v[0].is_zero() and v[2].is_zero()

    def test_group_algebra_has_none(self):
        h = group_algebra(5)
        likes = group_likes(h)
        for g in likes.elements:
            for k in likes.elements:
                assert skew_primitives(h, g, k) == []

    def test_a_tau_mu_contains_y(self):
        h = a_tau_mu(3, 2, -1, 1)
        a = unit_vector(h.field, 12, 2)  # basis a^i y^j at i*2+j; a = (1,0)
        basis = skew_primitives(h, h.unit, a)
        assert len(basis) == 1
        assert not basis[0][1].is_zero()  # y = index (0,1) -> 1

    def test_not_group_like(self):
        h = sweedler()
        with pytest.raises(NotGroupLike):
            skew_primitives(h, unit_vector(Q, 4, 1), h.unit)


class TestCoradicalAndPointed:
    def test_group_algebra_everything(self):
        h = group_algebra(4)
        assert len(coradical(h)) == 4
        assert is_pointed(h)

    def test_sweedler(self):
        h = sweedler()
        assert len(coradical(h)) == 2
        assert is_pointed(h)

    def test_dual_a_tau_1_not_pointed(self):
        h = dual(a_tau_mu(3, 2, -1, 1))
        assert not is_pointed(h)


class TestFingerprint:
    def test_sweedler(self):
        fp = fingerprint(sweedler())
        assert fp.dim == 4
        assert fp.group_order == 2
        assert fp.trace_s2_key == ("rat", "0/1")
        assert fp.pointed and fp.dual_pointed
        assert fp.antipode_order == 4

    def test_group_algebra_6(self):
        fp = fingerprint(group_algebra(6))
        assert fp.dim == 6 and fp.group_order == 6
        assert fp.antipode_order == 2
        assert fp.trace_s2_key == ("rat", "6/1")

    def test_a_tau_mu_12(self):
        fp = fingerprint(a_tau_mu(3, 2, -1, 1))
        assert fp.dim == 12 and fp.group_order == 6
        assert fp.pointed and not fp.dual_pointed

    def test_antipode_order_cap(self):
        assert antipode_order(group_algebra(3)) == 2
        assert antipode_order(taft(3, make_field(3).zeta())) == 6

    def test_double_dual_fingerprint(self):
        h = a_tau_mu(3, 2, -1, 1)
        assert fingerprint(dual(dual(h))) == fingerprint(h)

    def test_group_algebra_self_dual_fingerprint(self):
        h = group_algebra(5)
        assert fingerprint(dual(h)) == fingerprint(h)


class TestAntipodeStructure:
    @pytest.mark.parametrize(
        "build",
        [sweedler, lambda: group_algebra(4), lambda: a_tau_mu(3, 2, -1, 0),
         lambda: taft(3, make_field(3).zeta())],
    )
    def test_antihomomorphism_and_counit(self, build):
        h = build()
        s = h.antipode
        assert s.apply(h.unit) == h.unit
        for i in range(h.dim):
            col = s.column(i)
            assert h.counit_of(col) == h.counit[i]
        for i in range(h.dim):
            for j in range(h.dim):
                ei = unit_vector(h.field, h.dim, i)
                ej = unit_vector(h.field, h.dim, j)
                lhs = s.apply(h.algebra.multiply(ei, ej))
                rhs = h.algebra.multiply(s.apply(ej), s.apply(ei))
                assert lhs == rhs, (i, j)

    def test_taft_traces_vanish(self):
        assert trace_s2(taft(2, -1)).is_zero()
        assert trace_s2(taft(3, make_field(3).zeta())).is_zero()

    def test_left_mult_by_x_is_rank_two_nilpotent(self):
        h = sweedler()
        x = unit_vector(Q, 4, 1)  # basis order (1, x, g, gx)
        lx = h.algebra.mult.contract("left-mult", x)
        assert lx.rref()[1] == 2
        assert (lx * lx) == Matrix.zero(Q, 4, 4)
