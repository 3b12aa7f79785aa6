import random
from fractions import Fraction

import pytest

from a2fold.numfield import I, OMEGA, OMEGA2, Cyclo12
from a2fold.poly import MultiPoly, poly_from_text, poly_to_text

X = MultiPoly.variable(2, 0)
Y = MultiPoly.variable(2, 1)


def rand_poly(rng, arity=2, max_exp=4, n_terms=6, span=4):
    terms = {}
    for _ in range(n_terms):
        exps = tuple(rng.randint(0, max_exp) for _ in range(arity))
        coeff = Cyclo12(*(rng.randint(-span, span) for _ in range(4)))
        terms[exps] = terms.get(exps, Cyclo12()) + coeff
    return MultiPoly(arity, terms)


def rand_point(rng, arity):
    return tuple(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(arity))


def test_ring_examples():
    assert (X + Y) * (X - Y) == X * X - Y * Y
    p = 3 * X * Y + 7
    assert p + MultiPoly.zero(2) == p
    assert (OMEGA * X) * (OMEGA2 * X) == X * X


def test_arity_mismatch():
    w = MultiPoly.variable(1, 0)
    with pytest.raises(ValueError):
        X + w
    with pytest.raises(ValueError):
        X * w


def test_partial_derivative_examples():
    p = X ** 3 - 3 * X * Y + 3
    assert p.partial(0) == 3 * X * X - 3 * Y
    assert p.partial(1) == -3 * X
    assert MultiPoly.constant(3, 5).partial(2) == MultiPoly.zero(3)
    with pytest.raises(ValueError):
        p.partial(2)


def test_partials_commute():
    rng = random.Random(11)
    for _ in range(30):
        p = rand_poly(rng, arity=3)
        assert p.partial(0).partial(1) == p.partial(1).partial(0)
        assert p.partial(1).partial(2) == p.partial(2).partial(1)


def test_eval_examples():
    assert (X * X - 2 * Y).eval((3, 3)) == 3
    t3 = MultiPoly(1, {(3,): 2, (1,): Fraction(-3, 2), (0,): Fraction(5, 2)})
    assert abs(t3.eval((1,)) - 3) < 1e-12


def mp_eval(p, point, dps=50):
    # independent high-precision evaluation of the exact polynomial
    import mpmath as mp

    with mp.workdps(dps):
        zeta = mp.exp(1j * mp.pi / 6)
        total = mp.mpc(0)
        for exps, coeff in p.terms.items():
            c = mp.mpc(0)
            for k, a in enumerate(coeff.c):
                if a:
                    c += mp.mpf(a.numerator) / mp.mpf(a.denominator) * zeta**k
            term = c
            for z, e in zip(point, exps):
                if e:
                    term *= mp.mpc(z) ** e
            total += term
        return complex(total)


def test_eval_high_degree_accuracy():
    # term-wise evaluation keeps 1e-10 relative accuracy up to degree 40 at
    # well-conditioned points with |coords| <= 4 (no compensated summation,
    # so adversarial cancellation is out of contract)
    from a2fold.folding import folding_Q

    rng = random.Random(77)
    q12 = folding_Q(12)
    p40 = (X + Y) ** 40
    for _ in range(10):
        z = tuple(complex(rng.uniform(-4, 4), rng.uniform(-4, 4)) for _ in range(2))
        got, want = q12.eval(z), mp_eval(q12, z)
        assert abs(got - want) <= 1e-10 * max(1.0, abs(want))
        zpos = tuple(complex(rng.uniform(1, 4), rng.uniform(0, 2)) for _ in range(2))
        got, want = p40.eval(zpos), mp_eval(p40, zpos)
        assert abs(got - want) <= 1e-10 * abs(want)


def test_eval_is_multiplicative():
    rng = random.Random(22)
    for _ in range(10):
        p, q = rand_poly(rng), rand_poly(rng)
        pq = p * q
        for _ in range(20):
            z = rand_point(rng, 2)
            a, b, ab = p.eval(z), q.eval(z), pq.eval(z)
            assert abs(ab - a * b) <= 1e-9 * max(1.0, abs(a) * abs(b))


def test_eval_gradient_matches_finite_differences():
    rng = random.Random(33)
    step = 1e-5
    for _ in range(5):
        p = rand_poly(rng)
        px, py = p.partial(0), p.partial(1)
        for _ in range(10):
            z = rand_point(rng, 2)
            fdx = (p.eval((z[0] + step, z[1])) - p.eval((z[0] - step, z[1]))) / (2 * step)
            fdy = (p.eval((z[0], z[1] + step)) - p.eval((z[0], z[1] - step))) / (2 * step)
            assert abs(px.eval(z) - fdx) < 1e-6 * max(1.0, abs(px.eval(z)))
            assert abs(py.eval(z) - fdy) < 1e-6 * max(1.0, abs(py.eval(z)))


def test_substitute_examples():
    XX = MultiPoly.variable(2, 0)
    YY = MultiPoly.variable(2, 1)
    # xy with x -> X+iY, y -> X-iY gives X^2 + Y^2
    assert (X * Y).substitute([XX + I * YY, XX - I * YY]) == XX * XX + YY * YY
    # variable swap
    assert X.substitute([Y, X]) == Y
    # binomial expansion of (X+iY)^3
    cube = (X ** 3).substitute([XX + I * YY, XX - I * YY])
    expected = (
        XX ** 3
        + 3 * I * (XX * XX * YY)
        - 3 * (XX * YY * YY)
        - I * (YY ** 3)
    )
    assert cube == expected


def test_substitute_respects_composition():
    rng = random.Random(44)
    for _ in range(10):
        p = rand_poly(rng, max_exp=2, n_terms=4, span=3)
        a = [rand_poly(rng, max_exp=2, n_terms=3, span=2) for _ in range(2)]
        b = [rand_poly(rng, max_exp=1, n_terms=3, span=2) for _ in range(2)]
        assert p.substitute(a).substitute(b) == p.substitute([img.substitute(b) for img in a])


def test_substitute_arity_errors():
    with pytest.raises(ValueError):
        X.substitute([MultiPoly.variable(1, 0), MultiPoly.variable(2, 0)])
    with pytest.raises(ValueError):
        X.substitute([MultiPoly.variable(1, 0)] * 3)


def test_degree_and_degree_form():
    assert MultiPoly.zero(2).degree() == -1
    assert (X * X + X).degree_form() == X * X
    assert MultiPoly.constant(2, 5).degree_form() == MultiPoly.constant(2, 5)
    with pytest.raises(ValueError):
        MultiPoly.zero(2).degree_form()


def test_conj_coeffs():
    assert (OMEGA * X ** 3).conj_coeffs() == OMEGA2 * X ** 3
    p = 3 * X * Y
    assert p.conj_coeffs() == p
    rng = random.Random(55)
    for _ in range(20):
        q = rand_poly(rng)
        assert q.conj_coeffs().conj_coeffs() == q


def test_permute_and_embed_vars():
    p = X * X - 2 * Y
    assert p.permute_vars((1, 0)) == Y * Y - 2 * X
    q = p.embed_vars(3, (0, 1))
    assert q.arity == 3
    assert q.eval((3, 3, 99)) == 3
    with pytest.raises(ValueError):
        p.embed_vars(3, (0, 0))


def test_text_format_golden():
    q3 = OMEGA * X ** 3 + OMEGA2 * Y ** 3 + 3 * X * Y - 3
    text = poly_to_text(q3)
    assert text == (
        "arity 2 vars x y\n"
        "3 0 : -1 0 1 0\n"
        "0 3 : 0 0 -1 0\n"
        "1 1 : 3 0 0 0\n"
        "0 0 : -3 0 0 0\n"
    )


def test_text_roundtrip():
    rng = random.Random(66)
    for arity in (1, 2, 3, 4):
        for _ in range(5):
            p = rand_poly(rng, arity=arity)
            q, names = poly_from_text(poly_to_text(p))
            assert q == p
            assert len(names) == arity
    with pytest.raises(ValueError):
        poly_from_text("")
    with pytest.raises(ValueError):
        poly_from_text("arity 2 names x y\n")


def test_grlex_order_stable():
    p = X + Y + X * X + X * Y + 1
    exps = [e for e, _ in p.items_grlex()]
    assert exps == [(2, 0), (1, 1), (1, 0), (0, 1), (0, 0)]
