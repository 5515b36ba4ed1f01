"""Irreducibility tests and Galois-group classification.

The degree-n polynomial of an instance is irreducible over Q exactly when
(d + sqrt(R)) / (d - sqrt(R)) is not a p-th power in Q(sqrt(R)) for any prime
p dividing n.  The p-th power test itself is numeric-candidate plus
exact-verification: embed the element, take all complex p-th roots, try to
reconstruct the two rational coordinates of each root, and accept only roots
that power back exactly.  A positive answer therefore carries an exact
certificate; a negative answer is backed by a denominator/precision budget
large enough to have found any root whose size is plausible for the input.

For irreducible instances the Galois group of the splitting field is the
semidirect product (Z/n) x| (Z/n)^* of order n*phi(n), cut in half when
sqrt(R') is real-embeddable into the n-th cyclotomic field (R' < 0 with
sqrt(R') in Q(zeta_n)).  The classification is exact apart from one family
the underlying theory leaves open (3 | n with R' = -3 outside the known
refinements); those instances are reported as undetermined, never guessed.

An independent brute-force oracle factors small instances by enumerating
root subsets at high precision and verifying candidate factors exactly.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp, mpc, mpf

from .config import Settings
from .construct import DeMoivreInstance, de_moivre_poly
from .cyclotomic import sqrt_in_cyclotomic
from .errors import PrecisionError
from .exact import (
    factor_completely,
    factor_integer,
    format_rational,
    is_prime,
    rational_reconstruct,
)
from .polys import RatPoly
from .quadratic import QuadElem

_DEFAULT = Settings()


def totient(n: int) -> int:
    out = n
    for p in factor_completely(n):
        out = out // p * (p - 1)
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factor_completely(n))


def radicand_ratio(inst: DeMoivreInstance) -> QuadElem:
    """(d + sqrt(R)) / (d - sqrt(R)) over sqrt(R'); always has norm 1."""
    num = QuadElem(inst.d, inst.s, inst.r_prime)
    alpha = num * num * (1 / inst.dd)
    assert alpha.norm() == 1
    return alpha


@dataclass(frozen=True)
class PthPowerResult:
    is_power: bool
    root: QuadElem | None
    method: str  # "exact-verified-reconstruction" or "exhausted-candidates"
    precision_used: int

    def to_json(self) -> dict:
        return {
            "is_power": self.is_power,
            "root": self.root.to_json() if self.root else None,
            "method": self.method,
            "precision_used": self.precision_used,
        }


def _integer_root_ceil(n: int, k: int) -> int:
    """Upper bound for n**(1/k) on nonnegative big ints."""
    if n <= 1:
        return 1
    return 1 << ((n.bit_length() + k - 1) // k)


def is_pth_power(
    x: QuadElem, p: int, settings: Settings = _DEFAULT
) -> PthPowerResult:
    """Decide whether x is a p-th power in its own quadratic field.

    True answers are exact (the returned root is re-verified in rational
    arithmetic).  False answers are sound under the height heuristic: any
    p-th root of x has height about height(x)^(1/p), and the search budget
    covers that with a wide margin, escalating twice before settling.
    """
    if x.is_zero:
        raise ValueError("x must be nonzero")
    if p < 3 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    bound = max(settings.max_den, 1000 * _integer_root_ceil(x.height(), p))
    bits = max(settings.precision_bits, 3 * bound.bit_length() + 128)
    for attempt in range(3):
        root = _search_pth_root(x, p, bits, bound)
        if root is not None:
            return PthPowerResult(True, root, "exact-verified-reconstruction", bits)
        if attempt < 2:
            bits, bound = 2 * bits, 2 * bound
    return PthPowerResult(False, None, "exhausted-candidates", bits)


def _search_pth_root(x: QuadElem, p: int, bits: int, bound: int) -> QuadElem | None:
    rp = x.r_prime
    tol = Fraction(1, 2 * bound * bound)
    with mp.workprec(bits):
        a = mpf(x.a.numerator) / x.a.denominator
        b = mpf(x.b.numerator) / x.b.denominator
        candidates = []
        if rp > 0:
            sr = mp.sqrt(rp)
            w1 = _real_root(a + b * sr, p)
            w2 = _real_root(a - b * sr, p)
            candidates.append(((w1 + w2) / 2, (w1 - w2) / (2 * sr)))
        else:
            sr = mp.sqrt(-rp)
            w0 = mp.root(mpc(a, b * sr), p)
            for j in range(p):
                w = w0 * mp.expjpi(mpf(2 * j) / p)
                candidates.append((w.real, w.imag / sr))
        for a_num, b_num in candidates:
            a_rat = rational_reconstruct(a_num, bound, tol)
            if a_rat is None:
                continue
            b_rat = rational_reconstruct(b_num, bound, tol)
            if b_rat is None:
                continue
            cand = QuadElem(a_rat, b_rat, rp)
            if cand**p == x:
                return cand
    return None


def _real_root(v, p: int):
    if v >= 0:
        return mp.root(v, p)
    return -mp.root(-v, p)


class Verdict(str, enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    verdict: Verdict
    witnesses: dict[int, PthPowerResult] = field(default_factory=dict)
    methods: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "witnesses": {str(p): w.to_json() for p, w in self.witnesses.items()},
            "methods": list(self.methods),
        }


def irreducible_by_power_test(
    inst: DeMoivreInstance, settings: Settings = _DEFAULT
) -> IrreducibilityVerdict:
    """Necessary-and-sufficient test over every prime dividing the degree."""
    alpha = radicand_ratio(inst)
    witnesses: dict[int, PthPowerResult] = {}
    try:
        for p in prime_divisors(inst.n):
            res = is_pth_power(alpha, p, settings)
            witnesses[p] = res
            if res.is_power:
                return IrreducibilityVerdict(
                    Verdict.REDUCIBLE, witnesses, ("pth-power-test",)
                )
    except PrecisionError:
        return IrreducibilityVerdict(Verdict.UNKNOWN, witnesses, ("pth-power-test",))
    return IrreducibilityVerdict(Verdict.IRREDUCIBLE, witnesses, ("pth-power-test",))


@dataclass(frozen=True)
class ValuationVerdict:
    """Outcome of the sufficient valuation criterion.

    Irreducible when for every prime p | n some odd prime q has v_q(D) odd
    and not divisible by p.  Inconclusive is always a safe answer; partial
    factorizations only ever degrade to it.
    """

    status: str  # "irreducible" or "inconclusive"
    witnesses: dict[int, tuple[int, int]] = field(default_factory=dict)
    factorization_complete: bool = True
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witnesses": {
                str(p): {"q": q, "v_q(D)": v} for p, (q, v) in self.witnesses.items()
            },
            "factorization_complete": self.factorization_complete,
            "reason": self.reason,
        }


def irreducible_by_valuation(
    inst: DeMoivreInstance, trial_bound: int = _DEFAULT.trial_bound
) -> ValuationVerdict:
    d, r = inst.d, inst.r
    if d.denominator != 1 or r.denominator != 1:
        return ValuationVerdict("inconclusive", reason="d and R must be integers")
    if math.gcd(int(d), int(r)) != 1:
        return ValuationVerdict("inconclusive", reason="d and R must be coprime")
    dd = int(inst.dd)
    if abs(dd) == 1:
        return ValuationVerdict("inconclusive", reason="D is a unit")
    fm = factor_integer(dd, trial_bound)
    witnesses: dict[int, tuple[int, int]] = {}
    for p in prime_divisors(inst.n):
        hit = next(
            (
                (q, v)
                for q, v in sorted(fm.factors.items())
                if q >= 3 and v % 2 == 1 and v % p != 0
            ),
            None,
        )
        if hit is None:
            reason = (
                f"no qualifying odd prime in D for p={p}"
                if fm.complete
                else f"factorization of D incomplete (cofactor {fm.cofactor})"
            )
            return ValuationVerdict("inconclusive", witnesses, fm.complete, reason)
        witnesses[p] = hit
    return ValuationVerdict("irreducible", witnesses, fm.complete)


@dataclass(frozen=True)
class RationalRootVerdict:
    """Prime-degree dichotomy: reducible exactly when a rational zero exists."""

    status: str  # "irreducible" or "reducible"
    rational_zero: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "rational_zero": (
                format_rational(self.rational_zero)
                if self.rational_zero is not None
                else None
            ),
        }


def irreducible_by_rational_root(inst: DeMoivreInstance) -> RationalRootVerdict:
    if not is_prime(inst.n):
        raise ValueError("the rational-zero dichotomy needs a prime degree")
    roots = de_moivre_poly(inst).rational_roots()
    if roots:
        return RationalRootVerdict("reducible", min(roots))
    return RationalRootVerdict("irreducible")


class GaloisTag(str, enum.Enum):
    FULL_SEMIDIRECT = "FullSemidirect"
    HALF_SEMIDIRECT = "HalfSemidirect"
    EXCEPTIONAL_3_UNDETERMINED = "Exceptional3Undetermined"
    NOT_IRREDUCIBLE = "NotIrreducible"


@dataclass(frozen=True)
class GaloisClass:
    tag: GaloisTag
    group_order: int | None
    notes: str = ""

    def to_json(self) -> dict:
        return {
            "tag": self.tag.value,
            "group_order": self.group_order,
            "notes": self.notes,
        }


def classify_galois_group(
    inst: DeMoivreInstance, settings: Settings = _DEFAULT
) -> tuple[GaloisClass, IrreducibilityVerdict]:
    """Classify the Galois group of the splitting field of an instance.

    Returns the class together with the irreducibility verdict that fed it.
    Instances in the open 3 | n, R' = -3 family are tagged undetermined
    unless one of the known refinements applies.
    """
    verdict = irreducible_by_power_test(inst, settings)
    if verdict.verdict is Verdict.UNKNOWN:
        raise PrecisionError("irreducibility could not be decided")
    if verdict.verdict is Verdict.REDUCIBLE:
        wit = next(w for w in verdict.witnesses.values() if w.is_power)
        return (
            GaloisClass(
                GaloisTag.NOT_IRREDUCIBLE,
                None,
                f"reducible: radicand ratio is a p-th power, root {wit.root}",
            ),
            verdict,
        )

    n, rp = inst.n, inst.r_prime
    notes: list[str] = []
    if n % 3 == 0 and rp == -3:
        refined = False
        if is_prime(n):
            refined = True
            notes.append("prime degree: classification holds unconditionally")
        elif n % 9 != 0 and all(q % 3 != 1 for q in prime_divisors(n)):
            refined = True
            notes.append("3 || n with no prime divisor = 1 mod 3")
        elif _is_power_of_three(n):
            twisted = _cube_twist_is_power(inst, settings)
            if twisted:
                refined = True
                notes.append("3-power degree: unit-twisted radicand is a cube")
            else:
                return (
                    GaloisClass(
                        GaloisTag.EXCEPTIONAL_3_UNDETERMINED,
                        None,
                        "3-power degree with R' = -3 and no cube twist; "
                        "classification not determined",
                    ),
                    verdict,
                )
        if not refined:
            return (
                GaloisClass(
                    GaloisTag.EXCEPTIONAL_3_UNDETERMINED,
                    None,
                    "3 | n with R' = -3 outside the known refinements; "
                    "classification not determined",
                ),
                verdict,
            )

    half = rp < 0 and sqrt_in_cyclotomic(rp, n)
    order = n * totient(n)
    if half:
        return (
            GaloisClass(
                GaloisTag.HALF_SEMIDIRECT,
                order // 2,
                "; ".join(notes + ["sqrt(R') real-embeds in the cyclotomic field"]),
            ),
            verdict,
        )
    return (GaloisClass(GaloisTag.FULL_SEMIDIRECT, order, "; ".join(notes)), verdict)


def _is_power_of_three(n: int) -> bool:
    while n % 3 == 0:
        n //= 3
    return n == 1


def _cube_twist_is_power(inst: DeMoivreInstance, settings: Settings) -> bool:
    """Whether D^((n-1)/2) * (d + sqrt(R)) times a primitive cube root of
    unity (either one) is a cube in Q(sqrt(-3))."""
    scale = inst.dd ** ((inst.n - 1) // 2)
    base = QuadElem(inst.d * scale, inst.s * scale, -3)
    zeta3 = QuadElem(Fraction(-1, 2), Fraction(1, 2), -3)
    for twist in (zeta3 * zeta3, zeta3):  # zeta3^-1 and zeta3^-2
        if is_pth_power(base * twist, 3, settings).is_power:
            return True
    return False


# ----------------------------------------------------------------------
# Brute-force factorization oracle


def brute_factor_oracle(
    inst: DeMoivreInstance,
    precision_bits: int = _DEFAULT.precision_bits,
    max_n: int = 15,
) -> list[RatPoly]:
    """Complete factorization into monic irreducibles over Q, by exhaustive
    root-subset search with exact verification.

    Deliberately independent of the radical machinery: roots come from a
    general-purpose polynomial root finder.  Only sensible at desk scale,
    hence the degree cap.
    """
    if inst.n > max_n:
        raise ValueError(f"degree {inst.n} above oracle cap {max_n}")
    f = de_moivre_poly(inst)
    g, scale = _monic_integer_form(f)
    bits = _oracle_bits(g, precision_bits)
    with mp.workprec(bits):
        coeffs_desc = [mpf(int(c)) for c in reversed(g.coeffs)]
        roots = mp.polyroots(coeffs_desc, maxsteps=200, extraprec=64)
        atoms = _conjugate_atoms(roots, pair=inst.r > 0)
        int_factors = _factor_with_atoms(g, atoms, bits)
    out = []
    for h in int_factors:
        # undo Z -> scale*Z, keeping each factor monic
        k = h.degree
        out.append(RatPoly(*(c / Fraction(scale) ** (k - i) for i, c in enumerate(h.coeffs))))
    out.sort(key=lambda q: (q.degree, q.coeffs))
    prod = RatPoly(1)
    for q in out:
        prod = prod * q
    assert prod == f, "oracle factors must multiply back exactly"
    return out


def _monic_integer_form(f: RatPoly) -> tuple[RatPoly, int]:
    """Substitute Z -> W/c so the monic rational f becomes monic integral."""
    c = 1
    for coef in f.coeffs:
        c = math.lcm(c, coef.denominator)
    n = f.degree
    g = RatPoly(*(f[i] * Fraction(c) ** (n - i) for i in range(n + 1)))
    assert all(x.denominator == 1 for x in g.coeffs)
    return g, c


def _oracle_bits(g: RatPoly, precision_bits: int) -> int:
    n = g.degree
    # Fujiwara-style root bound, worked in log2 to survive huge coefficients
    log_b = 1.0
    for i in range(1, n + 1):
        c = abs(g[n - i])
        if c != 0:
            log_b = max(log_b, (c.numerator.bit_length() + 2) / i)
    return max(precision_bits, int((n // 2 + 1) * (log_b + 2)) + 8 * n + 96)


def _conjugate_atoms(roots, pair: bool) -> list[tuple[list, list]]:
    """Group roots into real-coefficient atoms: (mpf coeff list, roots used).

    With pair=True the roots are matched into conjugate pairs around a single
    real root, which shrinks the subset search space; any matching hiccup
    falls back to per-root atoms.
    """
    singles = [([-w, mpf(1)], [w]) for w in roots]
    if not pair:
        return singles
    tol = mpf(2) ** (-mp.prec // 2)
    scale = max(mpf(1), max(abs(w) for w in roots))
    used = [False] * len(roots)
    atoms = []
    reals = [i for i, w in enumerate(roots) if abs(w.imag) <= tol * scale]
    if len(reals) != 1:
        return singles
    used[reals[0]] = True
    atoms.append(([-roots[reals[0]].real, mpf(1)], [roots[reals[0]]]))
    for i, w in enumerate(roots):
        if used[i]:
            continue
        partner = None
        for j in range(i + 1, len(roots)):
            if not used[j] and abs(roots[j] - mp.conj(w)) <= tol * scale:
                partner = j
                break
        if partner is None:
            return singles
        used[i] = used[partner] = True
        atoms.append(
            ([abs(w) ** 2, -2 * w.real, mpf(1)], [w, roots[partner]])
        )
    return atoms


def _factor_with_atoms(g: RatPoly, atoms, bits: int) -> list[RatPoly]:
    """Peel verified divisors off g, smallest candidate degree first."""
    if g.degree <= 1:
        return [g] if g.degree == 1 else []
    half = g.degree // 2
    subsets = []
    for r in range(1, len(atoms) + 1):
        for combo in itertools.combinations(range(len(atoms)), r):
            deg = sum(len(atoms[i][0]) - 1 for i in combo)
            if deg <= half:
                subsets.append((deg, combo))
    subsets.sort(key=lambda t: (t[0], t[1]))
    # cheap prefilter: a monic integer divisor's constant term divides g(0)
    g0 = abs(int(g[0]))
    consts = [a[0][0] for a in atoms]
    quarter = mpf(1) / 4
    for _, combo in subsets:
        c = mpf(1)
        for i in combo:
            c = c * consts[i]
        r = mp.nint(c.real if hasattr(c, "real") else c)
        if abs(c - r) > quarter:
            continue
        c_int = abs(int(r))
        if g0 and (c_int == 0 or g0 % c_int != 0):
            continue
        cand = _round_product([atoms[i][0] for i in combo])
        if cand is None:
            continue
        quo, rem = divmod(g, cand)
        if rem.is_zero:
            rest = [a for i, a in enumerate(atoms) if i not in combo]
            return [cand] + _factor_with_atoms(quo, rest, bits)
    return [g]


def _round_product(coeff_lists) -> RatPoly | None:
    """Multiply mpf-coefficient atoms and round to a nearby integer poly."""
    prod = [mpf(1)]
    for cl in coeff_lists:
        nxt = [mpf(0)] * (len(prod) + len(cl) - 1)
        for i, a in enumerate(prod):
            for j, b in enumerate(cl):
                nxt[i + j] += a * b
        prod = nxt
    ints = []
    for c in prod:
        if abs(c.imag) > mpf("0.25"):
            return None
        r = mp.nint(c.real)
        if abs(c.real - r) > mpf("0.25"):
            return None
        ints.append(int(r))
    return RatPoly(*ints)
