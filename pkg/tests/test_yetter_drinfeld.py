import random
from fractions import Fraction

import pytest

from hopfcheck.cyclotomic import make_field
from hopfcheck.families import group_algebra, sweedler, taft_tensor_group
from hopfcheck.hopf import (
    coradical,
    fingerprint,
    group_likes,
    structure_equal,
    verify_hopf,
)
from hopfcheck.linalg import Matrix, Tensor3, unit_vector, vec_scale
from hopfcheck.yetter_drinfeld import (
    BraidedHopf,
    YDModule,
    bosonize,
    braided_integrals,
    braiding,
    check_dual_biproduct,
    dual_braided,
    ordinary_to_braided,
    tensor_yd,
    trivial_yd,
    verify_braided_hopf,
    verify_yd,
)

Q = make_field(1)

# Sweedler basis order is (1, x, g, gx); indices:
ONE, X, G, GX = 0, 1, 2, 3


def h4(field=None):
    return sweedler(field)


def line_module(base, g_sign, coaction_index):
    """1-dimensional module with g acting by g_sign, x by 0, rho(v) = b (x) v."""
    field = base.field
    action = []
    for i in range(base.dim):
        if i == ONE:
            action.append(Matrix(field, [[field.one()]]))
        elif i == G:
            action.append(Matrix(field, [[field.from_rational(g_sign)]]))
        else:
            action.append(Matrix(field, [[field.zero()]]))
    coaction = Tensor3(field, (1, base.dim, 1), {(0, coaction_index, 0): 1})
    return YDModule(base, 1, action, coaction)


def nilpotent_line_over_z2(field=None):
    """R = k[x]/(x^2) in the YD category over k[Z_2]: bosonizes to Sweedler."""
    base = group_algebra(2, field or Q)
    f = base.field
    # action: g.x = -x; coaction rho(x) = g (x) x; basis (1, x)
    action = [
        Matrix.identity(f, 2),
        Matrix(f, [[f.one(), f.zero()], [f.zero(), f.from_rational(-1)]]),
    ]
    coaction = Tensor3(f, (2, 2, 2), {(0, 0, 0): 1, (1, 1, 1): 1})
    yd = YDModule(base, 2, action, coaction)
    mult = Tensor3(f, (2, 2, 2), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1})
    comult = Tensor3(f, (2, 2, 2), {(0, 0, 0): 1, (1, 0, 1): 1, (1, 1, 0): 1})
    counit = (f.one(), f.zero())
    antipode = Matrix(f, [[f.one(), f.zero()], [f.zero(), f.from_rational(-1)]])
    return BraidedHopf(yd, mult, (f.one(), f.zero()), comult, counit, antipode)


class TestVerifyYD:
    def test_trivial_yd_passes(self):
        for base in (h4(), group_algebra(3)):
            assert verify_yd(trivial_yd(base, 3)).ok

    def test_sign_line_with_g_coaction_passes(self):
        assert verify_yd(line_module(h4(), -1, G)).ok

    def test_sign_line_with_trivial_coaction_fails_at_x(self):
        report = verify_yd(line_module(h4(), -1, ONE))
        assert not report.ok
        bad = {v.location[0] for v in report.violations if v.law == "yd-compatibility"}
        # fails exactly on the nilpotent part (x, and with it gx = g*x)
        assert X in bad and G not in bad and ONE not in bad

    def test_trivial_line_with_g_coaction_fails(self):
        assert not verify_yd(line_module(h4(), 1, G)).ok


class TestBraiding:
    def test_trivial_yd_braiding_is_flip(self):
        base = h4()
        v = trivial_yd(base, 2)
        w = trivial_yd(base, 3)
        c = braiding(v, w)
        # flip: (i, j) -> (j, i)
        for i in range(2):
            for j in range(3):
                col = c.column(i * 3 + j)
                assert col == unit_vector(base.field, 6, j * 2 + i)

    def test_sign_line_squares_to_minus_flip(self):
        base = h4()
        v = line_module(base, -1, G)
        c = braiding(v, v)
        assert c.data[0][0] == base.field.from_rational(-1)

    def test_random_valid_yd_braidings_invertible(self):
        rng = random.Random(424242)
        base = h4()
        lines = [line_module(base, 1, ONE), line_module(base, -1, G)]
        for _ in range(50):
            pieces_v = [rng.choice(lines) for _ in range(rng.randint(1, 2))]
            pieces_w = [rng.choice(lines) for _ in range(rng.randint(1, 2))]
            v = pieces_v[0]
            for p in pieces_v[1:]:
                v = tensor_yd(v, p)
            w = pieces_w[0]
            for p in pieces_w[1:]:
                w = tensor_yd(w, p)
            c = braiding(v, w)
            _, rank, _ = c.rref()
            assert rank == v.dim * w.dim

    def test_hexagon_instance(self):
        base = h4()
        v = line_module(base, -1, G)
        w = line_module(base, 1, ONE)
        for x in (line_module(base, -1, G), tensor_yd(v, w)):
            wx = tensor_yd(w, x)
            lhs = braiding(v, wx)
            c_vw = braiding(v, w)
            c_vx = braiding(v, x)
            dv, dw, dx = v.dim, w.dim, x.dim
            for i in range(dv):
                for j in range(dw):
                    for k in range(dx):
                        start = unit_vector(base.field, dv * dw * dx, (i * dw + j) * dx + k)
                        # c_{V,W} (x) id_X
                requires = None
            # apply as functions on basis vectors
            for i in range(dv):
                for j in range(dw):
                    for k in range(dx):
                        # lhs on v_i (x) (w_j (x) x_k)
                        out_lhs = lhs.column(i * (dw * dx) + j * dx + k)
                        # rhs: first c_vw on (i, j) -> sum over (j', i')
                        acc = {}
                        col1 = c_vw.column(i * dw + j)
                        for t, coeff in enumerate(col1):
                            if coeff.is_zero():
                                continue
                            jp, ip = divmod(t, dv)
                            col2 = c_vx.column(ip * dx + k)
                            for u, coeff2 in enumerate(col2):
                                if coeff2.is_zero():
                                    continue
                                kp, ipp = divmod(u, dv)
                                key = (jp * dx + kp) * dv + ipp
                                acc[key] = acc.get(key, base.field.zero()) + coeff * coeff2
                        for t, val in enumerate(out_lhs):
                            assert acc.get(t, base.field.zero()) == val


class TestVerifyBraidedHopf:
    def test_trivial_group_algebra_passes(self):
        base = h4(make_field(3))
        r = ordinary_to_braided(group_algebra(3, make_field(3)), base)
        assert verify_braided_hopf(r).ok

    def test_one_dimensional_passes(self):
        base = h4()
        r = ordinary_to_braided(group_algebra(1, Q), base)
        assert verify_braided_hopf(r).ok

    def test_nilpotent_line_passes(self):
        assert verify_braided_hopf(nilpotent_line_over_z2()).ok

    def test_identity_antipode_fails(self):
        base = h4(make_field(3))
        r = ordinary_to_braided(group_algebra(3, make_field(3)), base)
        broken = BraidedHopf(
            r.yd,
            r.mult,
            r.unit,
            r.comult,
            r.counit,
            Matrix.identity(r.field, r.dim),
        )
        report = verify_braided_hopf(broken)
        assert not report.ok
        assert any(v.law == "antipode-law" for v in report.violations)


class TestBosonize:
    def test_trivial_line_gives_sweedler(self):
        base = sweedler()
        r = ordinary_to_braided(group_algebra(1, Q), base)
        h = bosonize(r, base)
        assert structure_equal(h, base)

    def test_z5_biproduct(self):
        f = make_field(20)
        base = sweedler(f)
        r = ordinary_to_braided(group_algebra(5, f), base)
        h = bosonize(r, base)
        assert h.dim == 20
        assert verify_hopf(h).ok
        likes = group_likes(h)
        assert len(likes) == 10
        assert len(coradical(h)) == 10

    def test_z3_biproduct_matches_taft_tensor(self):
        f = make_field(12)
        base = sweedler(f)
        r = ordinary_to_braided(group_algebra(3, f), base)
        h = bosonize(r, base)
        assert fingerprint(h) == fingerprint(taft_tensor_group(2, -1, 3))

    def test_nilpotent_line_bosonizes_to_sweedler_class(self):
        r = nilpotent_line_over_z2()
        h = bosonize(r, r.base)
        assert h.dim == 4
        assert verify_hopf(h).ok
        assert fingerprint(h) == fingerprint(sweedler())


class TestDualBiproduct:
    def test_trivial_line(self):
        base = sweedler()
        r = ordinary_to_braided(group_algebra(1, Q), base)
        assert check_dual_biproduct(r, base)

    @pytest.mark.parametrize("n,field_order", [(3, 12), (5, 20)])
    def test_group_lines(self, n, field_order):
        f = make_field(field_order)
        base = sweedler(f)
        r = ordinary_to_braided(group_algebra(n, f), base)
        assert check_dual_biproduct(r, base)

    def test_nontrivial_braiding_case(self):
        r = nilpotent_line_over_z2()
        assert verify_braided_hopf(dual_braided(r)).ok
        assert check_dual_biproduct(r, r.base)


class TestBraidedIntegrals:
    def test_group_algebra_integral(self):
        f = make_field(12)
        base = sweedler(f)
        r = ordinary_to_braided(group_algebra(3, f), base)
        data = braided_integrals(r)
        lam = data.right_integral
        assert all(c == lam[0] for c in lam) and not lam[0].is_zero()
        assert data.chi == tuple(base.counit)

    def test_one_dimensional(self):
        base = sweedler()
        r = ordinary_to_braided(group_algebra(1, Q), base)
        data = braided_integrals(r)
        assert data.right_integral == (Q.one(),)
        assert data.dual_right_integral == (Q.one(),)

    def test_semisimple_integral_counit_nonzero(self):
        f = make_field(20)
        base = sweedler(f)
        r = ordinary_to_braided(group_algebra(5, f), base)
        data = braided_integrals(r)
        acc = f.zero()
        for e, c in zip(r.counit, data.right_integral):
            acc = acc + e * c
        assert not acc.is_zero()


class TestModuleAlgebraIdempotents:
    def test_g_fixes_and_x_kills_central_idempotents(self):
        # semisimple trivial-YD module algebras: every central idempotent e
        # spans a g-stable ideal, g.e = e and x.e = 0
        f = make_field(3)
        base = sweedler(f)
        r = ordinary_to_braided(group_algebra(3, f), base)
        z3 = f.zeta()
        third = f.from_rational(Fraction(1, 3))
        for j in range(3):
            e = tuple(third * z3 ** ((-j * k) % 3) for k in range(3))
            assert r.algebra.multiply(e, e) == e
            assert r.yd.act(unit_vector(f, 4, G), e) == e
            assert all(c.is_zero() for c in r.yd.act(unit_vector(f, 4, X), e))

    def test_biproduct_central_idempotent_relations(self):
        # decompose central idempotents E = r1 e0 + r2 e1 + r3 xe0 + r4 xe1
        # of R x H4 and check the forced action relations
        f = make_field(3)
        base = sweedler(f)
        r = ordinary_to_braided(group_algebra(3, f), base)
        h = bosonize(r, base)
        half = f.from_rational(Fraction(1, 2))
        # H4-leg basis (1, x, g, gx); e0 = (1+g)/2, e1 = (1-g)/2,
        # xe0 = (x + xg)/2 = (x - gx)/2, xe1 = (x + gx)/2
        leg = {
            "e0": {ONE: half, G: half},
            "e1": {ONE: half, G: -half},
            "xe0": {X: half, GX: -half},
            "xe1": {X: half, GX: half},
        }
        basis_mat = Matrix(
            f,
            [
                [leg[name].get(row, f.zero()) for name in ("e0", "e1", "xe0", "xe1")]
                for row in range(4)
            ],
        ).inverse()
        z3 = f.zeta()
        third = f.from_rational(Fraction(1, 3))
        for j in range(3):
            fj = tuple(third * z3 ** ((-j * k) % 3) for k in range(3))
            # E = f_j (x) 1 in R-major coordinates
            e_vec = [f.zero()] * 12
            for i, c in enumerate(fj):
                e_vec[i * 4 + ONE] = c
            e_vec = tuple(e_vec)
            assert h.algebra.multiply(e_vec, e_vec) == e_vec
            for i in range(12):
                b = unit_vector(f, 12, i)
                assert h.algebra.multiply(e_vec, b) == h.algebra.multiply(b, e_vec)
            # r-components in the (e0, e1, xe0, xe1) frame
            comps = {name: [f.zero()] * 3 for name in ("e0", "e1", "xe0", "xe1")}
            for i in range(3):
                coords = tuple(e_vec[i * 4 + t] for t in range(4))
                sol = basis_mat.apply(coords)
                for t, name in enumerate(("e0", "e1", "xe0", "xe1")):
                    comps[name][i] = sol[t]
            r1, r2 = tuple(comps["e0"]), tuple(comps["e1"])
            r3, r4 = tuple(comps["xe0"]), tuple(comps["xe1"])
            g_act = lambda v: r.yd.act(unit_vector(f, 4, G), v)
            x_act = lambda v: r.yd.act(unit_vector(f, 4, X), v)
            assert g_act(r1) == r1 and g_act(r2) == r2
            assert g_act(r3) == vec_scale(f.from_rational(-1), r3)
            assert g_act(r4) == vec_scale(f.from_rational(-1), r4)
            diff = tuple(a - b for a, b in zip(r1, r2))
            assert x_act(r3) == diff and x_act(r4) == diff
