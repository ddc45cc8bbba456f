import random
from fractions import Fraction

import pytest

from braidpi.curves import (HomogPoly, ProjPoint, QuadScalar, RadicalMismatchError,
                            conic, cubic_discriminant, divide_univariate, evaluate,
                            family_cubic, gradient, hessian, is_tangent_at, line,
                            nodal_cubic, poly3, sylvester_resultant, unipoly,
                            verify_persson_configuration)

Q = QuadScalar.of
root = QuadScalar.root


def test_scalar_examples():
    assert QuadScalar(1, 1, 10) * QuadScalar(1, -1, 10) == Q(-9)
    assert root(10) * root(10) == Q(10)
    assert QuadScalar(3, 1, 5).inverse() == QuadScalar(Fraction(3, 4), Fraction(-1, 4), 5)


def test_scalar_field_axioms_random():
    rng = random.Random(51)
    for d in (1, 2, 5, 6, 10):
        for _ in range(200):
            def r():
                b = Fraction(rng.randint(-9, 9), rng.randint(1, 5)) if d != 1 else Fraction(0)
                return QuadScalar(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), b, d)
            x, y, z = r(), r(), r()
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + y == y + x and x * y == y * x
            if not x.is_zero():
                assert x * x.inverse() == Q(1)


def test_scalar_radical_rules():
    assert (root(10) + Q(1)) - root(10) == Q(1)       # b = 0 collapses to rational
    with pytest.raises(RadicalMismatchError):
        root(2) * root(5)
    with pytest.raises(ValueError):
        QuadScalar(0, 1, 4)                           # 4 is not squarefree
    with pytest.raises(ZeroDivisionError):
        Q(0).inverse()


def test_poly_evaluate_and_partial():
    x2 = poly3({(2, 0, 0): 1})
    assert x2.partial(0) == poly3({(1, 0, 0): 2})
    assert evaluate(conic(), ProjPoint.of(0, 1, 0)).is_zero()
    c = nodal_cubic()
    node = ProjPoint.of(0, 9, -16)
    assert evaluate(c, node).is_zero()
    assert all(g.is_zero() for g in gradient(c, node))


def test_euler_relation():
    for f in (conic(), nodal_cubic(), family_cubic(7)):
        lhs = HomogPoly(3, {})
        for v in range(3):
            lhs = lhs + HomogPoly.variable(v) * f.partial(v)
        assert lhs == f * f.degree


def test_cubic_discriminant_examples():
    # depressed cubic x^3 + p x + q: discriminant -4p^3 - 27q^2
    p, q = Q(3), Q(-2)
    assert cubic_discriminant(Q(1), Q(0), p, q) == Q(-4) * p * p * p - Q(27) * q * q
    assert cubic_discriminant(Q(1), Q(0), Q(0), Q(0)).is_zero()
    assert cubic_discriminant(Q(1), Q(-3), Q(3), Q(-1)).is_zero()   # (x-1)^3


def _unigcd(f, g):
    while not g.is_zero():
        _, r = divide_univariate(f, g)
        f, g = g, r
    return f


def test_discriminant_iff_repeated_root():
    rng = random.Random(52)
    for _ in range(60):
        if rng.random() < 0.5:
            coeffs = [Q(rng.randint(-6, 6)) for _ in range(4)]
            coeffs[3] = Q(rng.randint(1, 6))
            f = unipoly(coeffs)
        else:
            # forced repeated root: (x - r)^2 (x - s)
            r, s = Q(rng.randint(-4, 4)), Q(rng.randint(-4, 4))
            f = (unipoly([-r, Q(1)]) * unipoly([-r, Q(1)])) * unipoly([-s, Q(1)])
        cs = [f.terms.get((i,), Q(0)) for i in range(4)]
        disc = cubic_discriminant(cs[3], cs[2], cs[1], cs[0])
        fp = f.partial(0)
        gcd = _unigcd(f, fp)
        repeated = gcd.degree >= 1
        assert disc.is_zero() == repeated


def test_family_cubic():
    assert family_cubic(4) == nodal_cubic()
    c1 = family_cubic(1)
    p = ProjPoint.of(0, 0, 1)
    assert evaluate(c1, p).is_zero()
    assert all(g.is_zero() for g in gradient(c1, p))
    for lam in (2, 3, 5):
        c = family_cubic(lam)
        tangency = ProjPoint.of(1 - lam, 1 - lam, lam)
        assert is_tangent_at(c, line(1, -1, 0), tangency)


def test_tangency_examples():
    q = conic()
    assert is_tangent_at(q, line(1, -1, 0), ProjPoint.of(1, 1, -1))
    assert is_tangent_at(q, line(1, 1, 0), ProjPoint.of(1, -1, 1))
    assert is_tangent_at(q, line(0, 0, 1), ProjPoint.of(0, 1, 0))
    c = nodal_cubic()
    assert is_tangent_at(c, line(1, -1, 0), ProjPoint.of(-3, -3, 4))
    assert is_tangent_at(c, line(1, 1, 0), ProjPoint.of(3, -3, 4))
    lp = line(25, root(10, -8), 0)
    assert is_tangent_at(c, lp, ProjPoint.of(root(10, -24), -75, 80))
    with pytest.raises(ValueError):
        is_tangent_at(q, line(1, 0, 0), ProjPoint.of(1, 1, -1))  # point not on line


def test_not_tangent_at_transverse_point():
    # x - z = 0 meets the conic at (1 : -1 : 1) transversally
    q = conic()
    l = line(1, 0, -1)
    pt = ProjPoint.of(1, -1, 1)
    assert evaluate(q, pt).is_zero() and evaluate(l, pt).is_zero()
    assert not is_tangent_at(q, l, pt)


def test_sylvester_resultant_examples():
    x = poly3({(1, 0, 0): 1})
    one = poly3({(0, 0, 0): 1})
    # Res_x(x - 1, x + 1) = 2 up to the documented sign convention
    f = x - one
    g = x + one
    res = sylvester_resultant(f, g, 0)
    assert res == poly3({(0, 0, 0): 2})
    res_cq = sylvester_resultant(nodal_cubic(), conic(), 2)
    assert set(res_cq.terms) == {(6, 0, 0)}


def test_resultant_symmetry_and_multiplicativity():
    rng = random.Random(53)
    z = 2

    def rand_poly(deg):
        # homogeneous binary form in (x, z) with nonzero leading z coefficient
        terms = {(deg - k, 0, k): Q(rng.randint(-4, 4)) for k in range(deg)}
        terms[(0, 0, deg)] = Q(rng.randint(1, 4))
        return HomogPoly(3, terms)

    for _ in range(25):
        f = rand_poly(rng.randrange(1, 3))
        g = rand_poly(rng.randrange(1, 3))
        h = rand_poly(rng.randrange(1, 3))
        df = max(e[z] for e in f.terms)
        dg = max(e[z] for e in g.terms)
        rfg = sylvester_resultant(f, g, z)
        rgf = sylvester_resultant(g, f, z)
        sign = Q(-1 if (df * dg) % 2 else 1)
        assert rfg == sign * rgf
        gh = g * h
        lhs = sylvester_resultant(f, gh, z)
        rhs = sylvester_resultant(f, g, z) * sylvester_resultant(f, h, z)
        assert lhs == rhs


def test_hessian():
    smooth = poly3({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    h = hessian(smooth)
    assert h.degree == 0 and not h.is_zero()
    c = nodal_cubic()
    hc = hessian(c)
    flex = ProjPoint.of(1, 0, 0)
    assert evaluate(c, flex).is_zero() and evaluate(hc, flex).is_zero()
    irrational_flex = ProjPoint.of(root(6, 16), 39, -48)
    assert evaluate(c, irrational_flex).is_zero()
    assert evaluate(hc, irrational_flex).is_zero()


def test_divide_univariate():
    constraint = unipoly([-4, 9, -6, 1])
    quot, rem = divide_univariate(constraint, unipoly([1, -2, 1]))
    assert rem.is_zero() and quot == unipoly([-4, 1])


def test_proj_point_equality():
    assert ProjPoint.of(root(10, -33 * 8), -25 * 33, 880) == ProjPoint.of(root(10, -24), -75, 80)
    assert ProjPoint.of(1, 2, 3) != ProjPoint.of(1, 2, 4)
    with pytest.raises(ValueError):
        ProjPoint.of(0, 0, 0)


def test_verify_persson_configuration():
    report = verify_persson_configuration()
    assert len(report.checks) == 10
    assert report.all_passed, str(report)
    assert [c.item for c in report.checks] == list(range(1, 11))
