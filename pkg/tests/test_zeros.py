import pytest
from mpmath import mp, mpf

from demoivre.construct import de_moivre_poly, make_instance, radical_split_poly
from demoivre.numeric import ComplexVal
from demoivre.zeros import (
    radical_data,
    reconstruct_zero,
    splitting_field_data,
    zeros_all,
)

from conftest import random_instance

EX = make_instance(9, 26, 675)


def test_radical_data_reference_case():
    rd = radical_data(EX)
    assert rd.u.is_real()
    assert float(rd.u.re) == pytest.approx(2.1958233, abs=1e-6)
    with mp.workprec(rd.precision_bits):
        # y is the real ninth root of 26 + 15*sqrt(3)
        want = mp.root(26 + 15 * mp.sqrt(3), 9)
        assert abs(rd.y.to_mpc() - want) < mpf(2) ** -150
        assert abs(rd.z.to_mpc() - 1) < mpf(2) ** -150


def test_radical_data_deterministic():
    a = radical_data(EX, 128)
    b = radical_data(EX, 128)
    assert a.orientation == b.orientation
    assert a.u.re == b.u.re and a.u.im == b.u.im
    assert a.y.re == b.y.re


def test_radical_data_rejects_low_precision():
    with pytest.raises(ValueError):
        radical_data(EX, 32)


def test_zeros_reference_case():
    zs = zeros_all(EX)
    u1 = complex(zs.zeros[1])
    assert u1.real == pytest.approx(1.682098, abs=1e-5)
    assert u1.imag == pytest.approx(-0.582651, abs=1e-5)
    u8 = complex(zs.zeros[8])
    assert u8.real == pytest.approx(u1.real, abs=1e-12)
    assert u8.imag == pytest.approx(-u1.imag, abs=1e-12)


def test_reality_pattern_positive_radicand(rng):
    for _ in range(10):
        inst = random_instance(rng)
        if inst.r < 0:
            continue
        zs = zeros_all(inst)
        assert zs.real_count() == 1


def test_reality_pattern_negative_radicand():
    zs = zeros_all(make_instance(5, 1, -7))
    assert zs.real_count() == 5


def test_zero_sum_vanishes(rng):
    # no degree n-1 term, so the zeros sum to 0
    for _ in range(5):
        inst = random_instance(rng)
        zs = zeros_all(inst)
        with mp.workprec(zs.precision_bits):
            total = sum((z.to_mpc() for z in zs.zeros))
            scale = max(abs(z.to_mpc()) for z in zs.zeros)
            assert abs(total) < mpf(2) ** (-(zs.precision_bits // 2)) * scale * inst.n


def test_formula_agreement_and_residuals(rng):
    for _ in range(15):
        inst = random_instance(rng)
        zs = zeros_all(inst)
        f = de_moivre_poly(inst)
        max_coeff = max(abs(c) for c in f.coeffs)
        with mp.workprec(zs.precision_bits):
            limit = mpf(2) ** (-(zs.precision_bits // 2))
            scale = max(mpf(1), max(abs(z.to_mpc()) for z in zs.zeros))
            assert zs.max_formula_gap < limit * scale
            assert zs.max_residual < limit * mpf(max_coeff.numerator) / max_coeff.denominator * scale


def test_zeros_distinct(rng):
    for _ in range(5):
        inst = random_instance(rng, n_max=15)
        zs = zeros_all(inst)
        with mp.workprec(zs.precision_bits):
            vals = [z.to_mpc() for z in zs.zeros]
            scale = max(mpf(1), max(abs(v) for v in vals))
            sep = min(
                abs(vals[i] - vals[j])
                for i in range(len(vals))
                for j in range(i + 1, len(vals))
            )
            assert sep > mpf(2) ** (-(zs.precision_bits // 2)) * scale


def test_shift_consistency():
    # restarting the enumeration from u_j relabels u_k -> u_{k+j}
    inst = make_instance(7, 3, 2)
    rd = radical_data(inst)
    zs = zeros_all(inst)
    n, j = inst.n, 2
    with mp.workprec(rd.precision_bits):
        y, yp, z = rd.y.to_mpc(), rd.y_prime.to_mpc(), rd.z.to_mpc()
        zeta_eff = rd.zeta.to_mpc() ** rd.orientation
        y_j, yp_j = y * zeta_eff**j, yp * zeta_eff**-j
        tol = mpf(2) ** (-(rd.precision_bits // 2))
        for k in range(n):
            shifted = z ** ((n - 1) // 2) * (y_j * zeta_eff**k + yp_j * zeta_eff**-k)
            want = zs.zeros[(k + j) % n].to_mpc()
            assert abs(shifted - want) < tol * max(mpf(1), abs(want))


def test_reconstruct_reference_case():
    zs = zeros_all(EX)
    u7 = reconstruct_zero(zs.zeros[0], zs.zeros[1], zs.zeros[8], EX, 7)
    val = complex(u7)
    assert val.real == pytest.approx(0.381301, abs=1e-5)
    assert val.imag == pytest.approx(0.892673, abs=1e-5)


def test_reconstruct_k1_is_identity():
    zs = zeros_all(EX)
    rec = reconstruct_zero(zs.zeros[0], zs.zeros[1], zs.zeros[8], EX, 1)
    with mp.workprec(zs.precision_bits):
        assert abs(rec.to_mpc() - zs.zeros[1].to_mpc()) < mpf(2) ** -150


def test_reconstruct_all_indices(rng):
    for _ in range(6):
        inst = random_instance(rng, n_max=15)
        zs = zeros_all(inst)
        u, u1, un1 = zs.zeros[0], zs.zeros[1], zs.zeros[-1]
        with mp.workprec(zs.precision_bits):
            for k in range(1, inst.n):
                rec = reconstruct_zero(u, u1, un1, inst, k)
                want = zs.zeros[k].to_mpc()
                assert abs(rec.to_mpc() - want) <= mpf(1e-9) * max(mpf(1), abs(want))


def test_reconstruct_bad_index():
    zs = zeros_all(EX)
    with pytest.raises(ValueError):
        reconstruct_zero(zs.zeros[0], zs.zeros[1], zs.zeros[8], EX, 9)


def test_splitting_field_reference_case():
    sf = splitting_field_data(EX)
    gen = complex(sf.generator)
    # sqrt(675) * (zeta_9 - zeta_9^-1) = i * 2 * sqrt(675) * sin(2*pi/9)
    import math

    assert gen.real == pytest.approx(0.0, abs=1e-12)
    assert gen.imag == pytest.approx(2 * math.sqrt(675) * math.sin(2 * math.pi / 9), abs=1e-9)
    assert sf.matches_zero_difference
    assert sf.generator_squared_real
    assert sf.rational_zero is None and not sf.collapses_to_cyclotomic_part


def test_splitting_field_rational_zero_collapse():
    # constructed instance with the rational zero 2
    inst = make_instance(5, -1, -1)
    assert de_moivre_poly(inst).eval_exact(2) == 0
    sf = splitting_field_data(inst)
    assert sf.rational_zero == 2
    assert sf.collapses_to_cyclotomic_part


def test_split_poly_nonzero_at_zeros(rng):
    # the split coefficient never vanishes at a genuine zero
    for _ in range(8):
        inst = random_instance(rng, n_max=15)
        zs = zeros_all(inst)
        a = radical_split_poly(inst)
        with mp.workprec(zs.precision_bits):
            for z in zs.zeros:
                assert abs(a.eval_mpc(z.to_mpc())) > mpf(2) ** (-(zs.precision_bits // 2))


def test_complexval_precision_mixing_rejected():
    a = ComplexVal.make(1, 0, 128)
    b = ComplexVal.make(1, 0, 192)
    with pytest.raises(ValueError):
        _ = a + b


def test_complexval_json_roundtrip():
    zs = zeros_all(EX, 128)
    z = zs.zeros[3]
    back = ComplexVal.from_json(z.to_json())
    with mp.workprec(130):
        assert abs(back.to_mpc() - z.to_mpc()) < mpf(2) ** -120
