from fractions import Fraction

from hopfcheck.cyclotomic import make_field
from hopfcheck.algebra import (
    AssocAlgebra,
    center,
    characters,
    ideal_closure,
    is_semisimple_trace,
    radical,
    verify_algebra,
)
from hopfcheck.linalg import Tensor3, unit_vector

Q = make_field(1)


def group_algebra_assoc(n, field=None):
    field = field or Q
    entries = {(i, j, (i + j) % n): 1 for i in range(n) for j in range(n)}
    return AssocAlgebra(
        field, n, Tensor3(field, (n, n, n), entries), unit_vector(field, n, 0)
    )


def sweedler_assoc(field=None, break_x_square=False):
    # basis 1, g, x, xg with g^2 = 1, x^2 = 0, gx = -xg
    field = field or Q
    entries = {
        (0, 0, 0): 1, (0, 1, 1): 1, (0, 2, 2): 1, (0, 3, 3): 1,
        (1, 0, 1): 1, (2, 0, 2): 1, (3, 0, 3): 1,
        (1, 1, 0): 1,
        (1, 2, 3): -1,
        (1, 3, 2): -1,
        (2, 1, 3): 1,
        (3, 1, 2): 1,
    }
    if break_x_square:
        entries[(2, 2, 0)] = 1
    return AssocAlgebra(
        field, 4, Tensor3(field, (4, 4, 4), entries), unit_vector(field, 4, 0)
    )


def matrix_algebra_2x2(field=None):
    # basis E11, E12, E21, E22
    field = field or Q
    entries = {}
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    if b == c:
                        i = 2 * a + b
                        j = 2 * c + d
                        k = 2 * a + d
                        entries[(i, j, k)] = 1
    unit = [field.one(), field.zero(), field.zero(), field.one()]
    return AssocAlgebra(field, 4, Tensor3(field, (4, 4, 4), entries), unit)


def dual_numbers(field=None):
    # k[X]/(X^2), basis 1, X
    field = field or Q
    entries = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}
    return AssocAlgebra(
        field, 2, Tensor3(field, (2, 2, 2), entries), unit_vector(field, 2, 0)
    )


class TestVerifyAlgebra:
    def test_group_algebra_passes(self):
        assert verify_algebra(group_algebra_assoc(3)).ok

    def test_sweedler_passes(self):
        assert verify_algebra(sweedler_assoc()).ok

    def test_broken_sweedler_fails_on_xxg(self):
        report = verify_algebra(sweedler_assoc(break_x_square=True))
        assert not report.ok
        locations = {v.location for v in report.violations if v.law == "associativity"}
        assert (2, 2, 1) in locations  # (x, x, g)

    def test_matrix_algebra_passes(self):
        assert verify_algebra(matrix_algebra_2x2()).ok


class TestRadical:
    def test_group_algebras_semisimple(self):
        for n in (1, 2, 3, 5, 6):
            assert radical(group_algebra_assoc(n)) == []
            assert is_semisimple_trace(group_algebra_assoc(n))

    def test_sweedler_radical_is_x_xg(self):
        rad = radical(sweedler_assoc())
        assert len(rad) == 2
        for v in rad:
            assert v[0].is_zero() and v[1].is_zero()
        assert not is_semisimple_trace(sweedler_assoc())

    def test_dual_numbers(self):
        rad = radical(dual_numbers())
        assert len(rad) == 1
        assert rad[0][0].is_zero() and not rad[0][1].is_zero()

    def test_radical_is_two_sided_ideal(self):
        alg = sweedler_assoc()
        rad = radical(alg)
        closed = ideal_closure(alg, rad)
        assert len(closed) == len(rad)

    def test_matrix_algebra_semisimple(self):
        assert is_semisimple_trace(matrix_algebra_2x2())


class TestCharacters:
    def test_cyclic_group_over_its_field(self):
        f = make_field(3)
        res = characters(group_algebra_assoc(3, f))
        assert len(res.characters) == 3
        values = sorted(tuple(c.coeffs) for c in (chi[1] for chi in res.characters))
        assert values == sorted(
            tuple(f.zeta(j).coeffs) for j in range(3)
        )

    def test_cyclic_group_over_q_reports_obstruction(self):
        res = characters(group_algebra_assoc(3, Q))
        assert len(res.characters) == 1
        assert any(f.degree == 2 for f in res.unresolved_factors)

    def test_sweedler_has_two_characters(self):
        res = characters(sweedler_assoc())
        assert len(res.characters) == 2
        gvals = sorted(chi[1].rational for chi in res.characters)
        assert gvals == [Fraction(-1), Fraction(1)]
        for chi in res.characters:
            assert chi[2].is_zero() and chi[3].is_zero()

    def test_matrix_algebra_has_none(self):
        assert characters(matrix_algebra_2x2()).characters == []

    def test_characters_vanish_on_radical(self):
        alg = sweedler_assoc()
        rad = radical(alg)
        for chi in characters(alg).characters:
            for v in rad:
                acc = Q.zero()
                for c, x in zip(chi, v):
                    acc = acc + c * x
                assert acc.is_zero()

    def test_split_commutative_count_equals_dim(self):
        f = make_field(6)
        res = characters(group_algebra_assoc(6, f))
        assert len(res.characters) == 6
        assert res.unresolved_factors == []


class TestCenter:
    def test_commutative_full(self):
        assert len(center(group_algebra_assoc(4))) == 4

    def test_matrix_algebra_center_is_scalars(self):
        c = center(matrix_algebra_2x2())
        assert len(c) == 1

    def test_sweedler_center_is_scalars(self):
        # xg anticommutes with g (xg*g = x, g*xg = -x), so only 1 is central
        c = center(sweedler_assoc())
        assert len(c) == 1
        v = c[0]
        assert not v[0].is_zero()
        assert all(v[i].is_zero() for i in (1, 2, 3))

    def test_center_elements_commute(self):
        alg = sweedler_assoc()
        for z in center(alg):
            for i in range(alg.dim):
                e = unit_vector(Q, alg.dim, i)
                assert alg.multiply(z, e) == alg.multiply(e, z)
