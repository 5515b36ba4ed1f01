import random
from fractions import Fraction

import pytest

from demoivre.config import Settings
from demoivre.construct import (
    de_moivre_poly,
    family_bruen,
    family_filaseta,
    make_instance,
)
from demoivre.galois import (
    GaloisTag,
    Verdict,
    brute_factor_oracle,
    classify_galois_group,
    irreducible_by_power_test,
    irreducible_by_rational_root,
    irreducible_by_valuation,
    is_pth_power,
    radicand_ratio,
    totient,
)
from demoivre.polys import RatPoly
from demoivre.quadratic import QuadElem

from conftest import random_instance

EX = make_instance(9, 26, 675)


def _integer_root(m: int, p: int):
    """Exact integer p-th root (p odd) or None."""
    if m < 0:
        r = _integer_root(-m, p)
        return -r if r is not None else None
    lo, hi = 0, 1 << (m.bit_length() // p + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**p < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**p == m else None


def _rational_pth_power(q: Fraction, p: int) -> bool:
    return (
        _integer_root(q.numerator, p) is not None
        and _integer_root(q.denominator, p) is not None
    )


def test_radicand_ratio_examples():
    assert radicand_ratio(EX) == QuadElem(1351, 780, 3)
    assert radicand_ratio(make_instance(3, 2, 3)) == QuadElem(7, 4, 3)


def test_radicand_ratio_norm_one(rng):
    for _ in range(20):
        assert radicand_ratio(random_instance(rng)).norm() == 1


def test_cube_root_of_reference_case():
    res = is_pth_power(QuadElem(1351, 780, 3), 3)
    assert res.is_power
    assert res.root == QuadElem(7, 4, 3)
    assert res.root**3 == QuadElem(1351, 780, 3)
    assert res.method == "exact-verified-reconstruction"


def test_unit_is_not_a_cube():
    res = is_pth_power(QuadElem(7, 4, 3), 3)
    assert not res.is_power and res.root is None
    assert res.method == "exhausted-candidates"


def test_one_is_always_a_power():
    res = is_pth_power(QuadElem(1, 0, 5), 5)
    assert res.is_power and res.root is not None
    assert res.root**5 == QuadElem(1, 0, 5)


def test_pth_power_input_validation():
    with pytest.raises(ValueError):
        is_pth_power(QuadElem(0, 0, 3), 3)
    with pytest.raises(ValueError):
        is_pth_power(QuadElem(1, 1, 3), 2)
    with pytest.raises(ValueError):
        is_pth_power(QuadElem(1, 1, 3), 9)


def test_pth_power_imaginary_field_cube_of_rational():
    # 8 has the cube root -1 + sqrt(-3) besides 2 once cube roots of unity
    # live in the field; any exactly verified root is acceptable
    res = is_pth_power(QuadElem(8, 0, -3), 3)
    assert res.is_power
    assert res.root**3 == QuadElem(8, 0, -3)


def test_pth_power_soundness_sample(rng):
    radicands = [2, 3, 5, -1, -2, -3, -7]
    hits = 0
    for _ in range(40):
        p = rng.choice([3, 5, 7])
        rp = rng.choice(radicands)
        beta = QuadElem(
            Fraction(rng.randint(-15, 15), rng.randint(1, 8)),
            Fraction(rng.randint(-15, 15), rng.randint(1, 8)),
            rp,
        )
        if beta.is_zero:
            continue
        x = beta**p
        res = is_pth_power(x, p)
        assert res.is_power, (beta, p)
        assert res.root**p == x
        hits += 1
    assert hits >= 35

    misses = 0
    while misses < 40:
        p = rng.choice([3, 5, 7])
        rp = rng.choice(radicands)
        x = QuadElem(
            Fraction(rng.randint(-40, 40), rng.randint(1, 10)),
            Fraction(rng.randint(-40, 40), rng.randint(1, 10)),
            rp,
        )
        if x.is_zero or _rational_pth_power(x.norm(), p):
            continue  # keep only certified non-powers
        assert not is_pth_power(x, p).is_power, (x, p)
        misses += 1


def test_power_test_reference_cases():
    assert irreducible_by_power_test(EX).verdict is Verdict.REDUCIBLE
    assert irreducible_by_power_test(make_instance(3, 2, 3)).verdict is Verdict.IRREDUCIBLE
    assert irreducible_by_power_test(family_filaseta(5, 2)).verdict is Verdict.IRREDUCIBLE


def test_power_test_witness_is_exact_and_norm_one():
    verdict = irreducible_by_power_test(EX)
    wit = verdict.witnesses[3]
    assert wit.is_power
    assert wit.root**3 == radicand_ratio(EX)
    assert wit.root.norm() == 1


def test_valuation_criterion_examples():
    v = irreducible_by_valuation(make_instance(5, 1, -2))
    assert v.status == "irreducible"
    assert v.witnesses[5] == (3, 1)
    assert irreducible_by_valuation(EX).status == "inconclusive"  # D = 1
    assert irreducible_by_valuation(make_instance(5, 1, -7)).status == "inconclusive"  # D = 8


def test_valuation_criterion_preconditions():
    v = irreducible_by_valuation(make_instance(5, Fraction(1, 2), 3))
    assert v.status == "inconclusive" and "integers" in v.reason
    v = irreducible_by_valuation(make_instance(5, 3, -6))
    assert v.status == "inconclusive" and "coprime" in v.reason


def test_valuation_criterion_partial_factorization():
    # D = 1 - (-1009*1013) = huge prime pair beyond a tiny trial bound
    inst = make_instance(5, 1, -(1009 * 1013 - 1))
    v = irreducible_by_valuation(inst, trial_bound=100)
    assert v.status == "inconclusive"
    assert not v.factorization_complete


def test_valuation_criterion_sound_against_power_test(rng):
    checked = 0
    import math

    while checked < 15:
        inst = random_instance(rng, n_max=9)
        if inst.d.denominator != 1 or inst.r.denominator != 1:
            continue
        if math.gcd(int(inst.d), int(inst.r)) != 1:
            continue
        v = irreducible_by_valuation(inst)
        if v.status != "irreducible":
            continue
        assert irreducible_by_power_test(inst).verdict is Verdict.IRREDUCIBLE, inst
        checked += 1


def test_rational_root_dichotomy_examples():
    assert irreducible_by_rational_root(make_instance(3, 2, 3)).status == "irreducible"
    fil = family_filaseta(5, 2)
    f = de_moivre_poly(fil)
    assert f.eval_exact(1) == 12 and f.eval_exact(-1) == -10
    assert irreducible_by_rational_root(fil).status == "irreducible"
    v = irreducible_by_rational_root(make_instance(5, -1, -1))
    assert v.status == "reducible" and v.rational_zero == 2


def test_rational_root_needs_prime_degree():
    with pytest.raises(ValueError):
        irreducible_by_rational_root(EX)


def test_classify_filaseta_full():
    cls, verdict = classify_galois_group(family_filaseta(5, 2))
    assert cls.tag is GaloisTag.FULL_SEMIDIRECT
    assert cls.group_order == 20
    assert verdict.verdict is Verdict.IRREDUCIBLE


def test_classify_bruen_half():
    cls, verdict = classify_galois_group(family_bruen(7, 1, 1))
    assert verdict.verdict is Verdict.IRREDUCIBLE
    assert cls.tag is GaloisTag.HALF_SEMIDIRECT
    assert cls.group_order == 21


def test_classify_reducible():
    cls, _ = classify_galois_group(EX)
    assert cls.tag is GaloisTag.NOT_IRREDUCIBLE
    assert cls.group_order is None


def test_classify_exceptional_family():
    inst = make_instance(21, Fraction(7, 2), Fraction(-3 * 21**2, 4))
    assert inst.r_prime == -3
    cls, verdict = classify_galois_group(inst)
    assert verdict.verdict is Verdict.IRREDUCIBLE
    assert cls.tag is GaloisTag.EXCEPTIONAL_3_UNDETERMINED


def test_classify_three_power_refinement():
    # degree 9 with R' = -3: decided through the cube-twist criterion
    cls, verdict = classify_galois_group(make_instance(9, 1, -3))
    assert verdict.verdict is Verdict.IRREDUCIBLE
    assert cls.tag in (GaloisTag.HALF_SEMIDIRECT, GaloisTag.EXCEPTIONAL_3_UNDETERMINED)
    if cls.tag is GaloisTag.HALF_SEMIDIRECT:
        assert cls.group_order == 27
        assert "cube" in cls.notes


def test_classify_three_times_five_refinement():
    cls, verdict = classify_galois_group(make_instance(15, 1, -75))
    assert verdict.verdict is Verdict.IRREDUCIBLE
    assert cls.tag is GaloisTag.HALF_SEMIDIRECT
    assert cls.group_order == totient(15) * 15 // 2


def test_classify_invariants(rng):
    for _ in range(10):
        inst = random_instance(rng, n_max=9)
        cls, _ = classify_galois_group(inst)
        if cls.tag is GaloisTag.HALF_SEMIDIRECT:
            assert inst.r_prime < 0
        if cls.group_order is not None:
            assert (inst.n * totient(inst.n)) % cls.group_order == 0


def test_oracle_reference_cases():
    facs = brute_factor_oracle(EX)
    assert facs == [
        RatPoly(-4, -3, 0, 1),
        RatPoly(13, -12, 9, 4, -6, 0, 1),
    ]
    assert brute_factor_oracle(make_instance(3, 2, 3)) == [RatPoly(-4, -3, 0, 1)]
    fil = family_filaseta(5, 2)
    assert brute_factor_oracle(fil) == [de_moivre_poly(fil)]


def test_oracle_degree_cap():
    with pytest.raises(ValueError):
        brute_factor_oracle(make_instance(17, 2, 3))


def test_oracle_rational_coefficients():
    inst = make_instance(5, Fraction(1, 2), Fraction(3, 4))
    facs = brute_factor_oracle(inst)
    prod = RatPoly(1)
    for f in facs:
        assert f.is_monic
        prod = prod * f
    assert prod == de_moivre_poly(inst)


def test_oracle_prime_reducible_has_linear_factor():
    facs = brute_factor_oracle(make_instance(5, -1, -1))
    assert len(facs) > 1
    assert min(f.degree for f in facs) == 1
    assert RatPoly(-2, 1) in facs  # the zero 2


def test_oracle_agrees_with_power_test_sample(rng):
    for _ in range(10):
        inst = random_instance(rng, n_max=9, coef_bound=6)
        verdict = irreducible_by_power_test(inst)
        facs = brute_factor_oracle(inst)
        assert (verdict.verdict is Verdict.IRREDUCIBLE) == (len(facs) == 1), inst


def test_settings_are_respected():
    weak = Settings(precision_bits=96, max_den=10**6)
    res = is_pth_power(QuadElem(1351, 780, 3), 3, weak)
    assert res.is_power and res.root == QuadElem(7, 4, 3)
