import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from demoivre.numeric import ComplexVal
from demoivre.polys import RatPoly
from demoivre.quadratic import QuadElem

CUBIC = RatPoly(-4, -3, 0, 1)  # Z^3 - 3Z - 4
SEXTIC = RatPoly(13, -12, 9, 4, -6, 0, 1)  # Z^6 - 6Z^4 + 4Z^3 + 9Z^2 - 12Z + 13
DEGREE9 = RatPoly(-52, 9, 0, -30, 0, 27, 0, -9, 0, 1)

rat = st.fractions(min_value=-30, max_value=30, max_denominator=12)
polys = st.lists(rat, min_size=0, max_size=7).map(lambda cs: RatPoly(*cs))


def test_product_matches_degree9_factorization():
    assert CUBIC * SEXTIC == DEGREE9


def test_mul_identity_and_compose():
    p = RatPoly(1, 2, 3)
    assert p * RatPoly(1) == p
    assert RatPoly(0, 0, 1).compose(RatPoly(1, 1)) == RatPoly(1, 2, 1)


def test_divmod_examples():
    q, r = divmod(DEGREE9, CUBIC)
    assert q == SEXTIC and r.is_zero
    p = RatPoly(Fraction(1, 2), 0, 3)
    q, r = divmod(p, p)
    assert q == RatPoly(1) and r.is_zero
    q, r = divmod(RatPoly(1, 0, 1), RatPoly(0, 1))
    assert q == RatPoly(0, 1) and r == RatPoly(1)


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(RatPoly(1), RatPoly())


def test_eval_exact():
    assert CUBIC.eval_exact(2) == -2
    assert CUBIC.eval_exact(Fraction(1, 2)) == Fraction(-43, 8)


def test_eval_complex_at_root():
    # real root of the cubic from an independent general-purpose solver
    with mp.workprec(192):
        roots = mp.polyroots([mpf(1), mpf(0), mpf(-3), mpf(-4)], maxsteps=100, extraprec=64)
        u = next(w for w in roots if abs(w.imag) < mpf(2) ** -90)
    val = CUBIC.eval_complex(ComplexVal.from_mpc(u, 192))
    assert val.abs() < mpf(2) ** -150
    assert float(u.real) == pytest.approx(2.1958233, abs=1e-6)


def test_eval_quad():
    p = RatPoly(-2, -2, 1)  # Z^2 - 2Z - 2, minimal polynomial of 1 + sqrt(3)
    assert p.eval_quad(QuadElem(1, 1, 3)).is_zero


def test_rational_roots_examples():
    assert CUBIC.rational_roots() == set()
    assert RatPoly(-2, -3, 0, 1).rational_roots() == {2, -1}
    assert RatPoly(0, 1).rational_roots() == {0}


def test_rational_roots_with_denominators():
    # roots 2/3 and -1/2: (3Z - 2)(2Z + 1) = 6Z^2 - Z - 2
    p = RatPoly(-2, -1, 6)
    assert p.rational_roots() == {Fraction(2, 3), Fraction(-1, 2)}


def test_rational_roots_brute_cross_check():
    rng = random.Random(55)
    for _ in range(40):
        made = sorted(
            Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 3))
        )
        p = RatPoly(1)
        for root in made:
            p = p * RatPoly(-root, 1)
        p = p * RatPoly(rng.randint(1, 5), 0, rng.randint(1, 3))  # rootless even factor
        found = p.rational_roots()
        assert found == set(made)
        assert all(p.eval_exact(x) == 0 for x in found)


@given(polys, polys.filter(lambda p: not p.is_zero))
@settings(deadline=None, max_examples=80)
def test_divmod_recombines(num, den):
    q, r = divmod(num, den)
    assert q * den + r == num
    assert r.is_zero or r.degree < den.degree


@given(polys, polys, rat)
@settings(deadline=None, max_examples=80)
def test_eval_is_ring_homomorphism(p, q, x):
    assert (p * q).eval_exact(x) == p.eval_exact(x) * q.eval_exact(x)
    assert (p + q).eval_exact(x) == p.eval_exact(x) + q.eval_exact(x)


def test_normalization_and_degree():
    assert RatPoly(1, 2, 0, 0).coeffs == (1, 2)
    assert RatPoly().degree == -1
    assert RatPoly(0).is_zero
    assert RatPoly(3).degree == 0


def test_json_roundtrip():
    p = RatPoly(Fraction(-1, 3), 0, Fraction(7, 2))
    assert RatPoly.from_json(p.to_json()) == p
    assert p.to_json() == ["-1/3", "0", "7/2"]


def test_str():
    assert str(DEGREE9) == "Z^9 - 9*Z^7 + 27*Z^5 - 30*Z^3 + 9*Z - 52"
    assert str(RatPoly()) == "0"
