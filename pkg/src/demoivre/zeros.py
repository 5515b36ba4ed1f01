"""Numeric radicals, zero enumeration and three-zero reconstruction.

Branch conventions: sqrt(R) is the positive real root for R > 0 and
i*sqrt(|R|) otherwise; y and y' are the real n-th roots of d +- sqrt(R)
when those radicands are real (n odd guarantees one) and principal-branch
roots otherwise.  With these choices z = y*y' is always the real n-th root
of D and u = z^((n-1)/2) * (y + y') is always a real zero.

The k-th zero can be written two ways: directly from the radicals,
    u_k = z^((n-1)/2) * (y*w^k + y'*w^-k),
or from u alone through the split polynomial A,
    u_k = (u/2)*(w^k + w^-k) + D*A(u)*sqrt(R)*(w^k - w^-k),
with w a primitive n-th root of unity.  The second form presumes a fixed
pairing between the radical pair and the unit root; the resolved choice is
the orientation flag (+1 keeps w, -1 swaps w and 1/w in the direct form).
Every public routine computes both ways and cross-checks, retrying once at
doubled precision before giving up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf

from .chebyshev import cheb_f
from .construct import (
    DeMoivreInstance,
    de_moivre_poly,
    radical_split_poly,
    sine_transfer_poly,
)
from .errors import PrecisionError
from .numeric import ComplexVal, DEFAULT_PRECISION_BITS

_GUARD_BITS = 32


class _ToleranceFailure(Exception):
    pass


@dataclass(frozen=True)
class RadicalData:
    y: ComplexVal
    y_prime: ComplexVal
    z: ComplexVal
    u: ComplexVal
    sqrt_r: ComplexVal
    zeta: ComplexVal
    orientation: int
    precision_bits: int


@dataclass(frozen=True)
class ZeroSet:
    zeros: tuple[ComplexVal, ...]
    max_residual: object  # mpf
    max_formula_gap: object  # mpf, direct vs reconstructed form
    orientation: int
    precision_bits: int

    @property
    def n(self) -> int:
        return len(self.zeros)

    def real_count(self) -> int:
        return sum(1 for z in self.zeros if z.is_real())


def _with_retry(compute, bits: int, what: str):
    try:
        return compute(bits)
    except _ToleranceFailure:
        pass
    try:
        return compute(2 * bits)
    except _ToleranceFailure as exc:
        raise PrecisionError(
            f"{what} did not stabilize at {2 * bits} bits: {exc}"
        ) from exc


def _raw_radicals(inst: DeMoivreInstance, bits: int):
    """sqrt(R), y, y', z, u, A(u), orientation at working precision."""
    n, d, r, dd = inst.n, inst.d, inst.r, inst.dd
    tol = mpf(2) ** (-(bits // 2))
    d_num = mpf(d.numerator) / d.denominator
    r_num = mpf(r.numerator) / r.denominator
    dd_num = mpf(dd.numerator) / dd.denominator

    sqrt_r = mp.sqrt(r_num) if r > 0 else mpc(0, mp.sqrt(-r_num))
    w_plus = d_num + sqrt_r
    w_minus = d_num - sqrt_r
    y = _nth_root(w_plus, n)
    y_prime = _nth_root(w_minus, n)
    z = y * y_prime
    u = z ** ((n - 1) // 2) * (y + y_prime)

    for val, target in ((y, w_plus), (y_prime, w_minus), (z, dd_num)):
        err = abs(val**n - target) / max(mpf(1), abs(target))
        if err > tol:
            raise _ToleranceFailure(f"radical residual {mp.nstr(err, 5)}")

    a_of_u = radical_split_poly(inst).eval_mpc(u)
    z_half = z ** ((n + 1) // 2)
    plus = z_half * (u / (2 * dd_num) + a_of_u * sqrt_r)
    minus = z_half * (u / (2 * dd_num) - a_of_u * sqrt_r)
    scale = max(mpf(1), abs(y))
    match_plus = abs(plus - y) <= tol * scale
    match_minus = abs(minus - y) <= tol * scale
    if match_plus == match_minus:
        raise _ToleranceFailure("could not resolve the radical pairing sign")
    orientation = 1 if match_plus else -1
    return sqrt_r, y, y_prime, z, u, a_of_u, orientation


def _nth_root(w, n: int):
    """Real n-th root for real w (n odd), principal branch otherwise."""
    if isinstance(w, mpf) or (isinstance(w, mpc) and w.imag == 0):
        x = w.real if isinstance(w, mpc) else w
        if x >= 0:
            return mp.root(x, n)
        return -mp.root(-x, n)
    return mp.root(w, n)


def radical_data(
    inst: DeMoivreInstance, precision_bits: int = DEFAULT_PRECISION_BITS
) -> RadicalData:
    if precision_bits < 64:
        raise ValueError("precision_bits must be >= 64")

    def compute(bits: int) -> RadicalData:
        with mp.workprec(bits + _GUARD_BITS):
            sqrt_r, y, y_prime, z, u, _, orientation = _raw_radicals(inst, bits)
            zeta = mp.expjpi(mpf(2) / inst.n)
            box = lambda v: ComplexVal.from_mpc(v, bits)
            return RadicalData(
                y=box(y),
                y_prime=box(y_prime),
                z=box(z),
                u=box(u),
                sqrt_r=box(sqrt_r),
                zeta=box(zeta),
                orientation=orientation,
                precision_bits=bits,
            )

    return _with_retry(compute, precision_bits, "radical construction")


def zeros_all(
    inst: DeMoivreInstance, precision_bits: int = DEFAULT_PRECISION_BITS
) -> ZeroSet:
    """All n zeros, indexed mod n, computed by both formulas and cross-checked."""
    f = de_moivre_poly(inst)
    max_coeff = max(abs(c) for c in f.coeffs)

    def compute(bits: int) -> ZeroSet:
        with mp.workprec(bits + _GUARD_BITS):
            n, dd = inst.n, inst.dd
            tol = mpf(2) ** (-(bits // 2))
            sqrt_r, y, y_prime, z, u, a_of_u, orientation = _raw_radicals(inst, bits)
            dd_num = mpf(dd.numerator) / dd.denominator
            zeta = mp.expjpi(mpf(2) / n)
            zk = [zeta**k for k in range(n)]
            z_pow = z ** ((n - 1) // 2)

            direct = []
            mixed = []
            for k in range(n):
                wk = zk[k * orientation % n]
                direct.append(z_pow * (y * wk + y_prime / wk))
                mixed.append(
                    u / 2 * (zk[k] + zk[-k % n])
                    + dd_num * a_of_u * sqrt_r * (zk[k] - zk[-k % n])
                )

            scale = max(mpf(1), max(abs(v) for v in direct))
            gap = max(abs(a - b) for a, b in zip(direct, mixed))
            if gap > tol * scale:
                raise _ToleranceFailure(f"formula disagreement {mp.nstr(gap, 5)}")

            min_sep = min(
                abs(direct[i] - direct[j])
                for i in range(n)
                for j in range(i + 1, n)
            )
            if min_sep <= tol * scale:
                raise _ToleranceFailure("zeros not numerically distinct")

            residual = max(abs(f.eval_mpc(v)) for v in direct)
            coeff_scale = mpf(max_coeff.numerator) / max_coeff.denominator
            if residual > tol * coeff_scale * max(mpf(1), scale):
                raise _ToleranceFailure(f"zero residual {mp.nstr(residual, 5)}")

            return ZeroSet(
                zeros=tuple(ComplexVal.from_mpc(v, bits) for v in direct),
                max_residual=residual,
                max_formula_gap=gap,
                orientation=orientation,
                precision_bits=bits,
            )

    return _with_retry(compute, precision_bits, "zero enumeration")


def reconstruct_zero(
    u: ComplexVal,
    u1: ComplexVal,
    un1: ComplexVal,
    inst: DeMoivreInstance,
    k: int,
) -> ComplexVal:
    """Zero u_k as a rational function of u, u_1 and u_{n-1}.

    For odd k this is
        u_k = (u/2) * F_k((u_1 + u_{n-1})/u) + D*A(u) * P_k((u_1 - u_{n-1})/(2*D*A(u)));
    flipping the middle plus sign yields u_{n-k}, which is how even indices
    are reached (n - k is then odd).
    """
    n = inst.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"index must lie in 1..{n - 1}")
    bits = u.precision_bits
    j, sign = (k, 1) if k % 2 == 1 else (n - k, -1)
    with mp.workprec(bits + _GUARD_BITS):
        u_c, u1_c, un1_c = u.to_mpc(), u1.to_mpc(), un1.to_mpc()
        if abs(u_c) == 0:
            raise ValueError("u must be nonzero")
        dd = mpf(inst.dd.numerator) / inst.dd.denominator
        a_of_u = radical_split_poly(inst).eval_mpc(u_c)
        if abs(a_of_u) <= mpf(2) ** (-(bits // 2)):
            raise PrecisionError("split coefficient A(u) is numerically zero")
        even_part = u_c / 2 * cheb_f(j).eval_mpc((u1_c + un1_c) / u_c)
        odd_arg = (u1_c - un1_c) / (2 * dd * a_of_u)
        odd_part = dd * a_of_u * sine_transfer_poly(j, inst.r).eval_mpc(odd_arg)
        return ComplexVal.from_mpc(even_part + sign * odd_part, bits)


@dataclass(frozen=True)
class SplittingFieldReport:
    """Numeric profile of the splitting field generator sqrt(R)*(w - 1/w)."""

    generator: ComplexVal
    generator_squared_real: bool
    matches_zero_difference: bool
    transfer_max_error: object  # mpf over odd k
    rational_zero: Fraction | None
    collapses_to_cyclotomic_part: bool  # splitting field equals Q(generator)
    precision_bits: int


def splitting_field_data(
    inst: DeMoivreInstance, precision_bits: int = DEFAULT_PRECISION_BITS
) -> SplittingFieldReport:
    def compute(bits: int) -> SplittingFieldReport:
        with mp.workprec(bits + _GUARD_BITS):
            n, dd = inst.n, inst.dd
            tol = mpf(2) ** (-(bits // 2))
            sqrt_r, y, y_prime, z, u, a_of_u, orientation = _raw_radicals(inst, bits)
            dd_num = mpf(dd.numerator) / dd.denominator
            zeta = mp.expjpi(mpf(2) / n)
            gen = sqrt_r * (zeta - 1 / zeta)

            # the same difference extracted from radical-form zeros
            w1 = zeta**orientation
            z_pow = z ** ((n - 1) // 2)
            u1 = z_pow * (y * w1 + y_prime / w1)
            un1 = z_pow * (y / w1 + y_prime * w1)
            diff = (u1 - un1) / (2 * dd_num * a_of_u)
            scale = max(mpf(1), abs(gen))
            matches = abs(diff - gen) <= tol * scale

            gsq = gen * gen
            gsq_target = (mpf(inst.r.numerator) / inst.r.denominator) * (
                zeta**2 + zeta**-2 - 2
            )
            if abs(gsq - gsq_target) > tol * max(mpf(1), abs(gsq_target)):
                raise _ToleranceFailure("generator square mismatch")

            worst = mpf(0)
            for k in range(1, n, 2):
                lhs = sqrt_r * (zeta**k - zeta**-k)
                rhs = sine_transfer_poly(k, inst.r).eval_mpc(gen)
                worst = max(worst, abs(lhs - rhs))
            if worst > tol * scale:
                raise _ToleranceFailure("transfer identity failed")

            roots = de_moivre_poly(inst).rational_roots()
            rational_zero = min(roots) if roots else None
            return SplittingFieldReport(
                generator=ComplexVal.from_mpc(gen, bits),
                generator_squared_real=bool(abs(gsq.imag) <= tol * max(mpf(1), abs(gsq))),
                matches_zero_difference=bool(matches),
                transfer_max_error=worst,
                rational_zero=rational_zero,
                collapses_to_cyclotomic_part=rational_zero is not None,
                precision_bits=bits,
            )

    return _with_retry(compute, precision_bits, "splitting field profile")
