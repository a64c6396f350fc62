"""Predicted splitting densities of qualifying primes and empirical checks.

The predicted proportion of qualifying primes (among all primes) is the
exact rational

    prod_i (l_i - 1)^(e_i) / (phi(N*d) * prod_i l_i^(e_i)),

where l_i runs over the prime divisors of N and e_i is 3 when a, b are
multiplicatively independent modulo l_i-th powers in Q, else 2.  Empirical
counts against ratio * li(x) stand in for any analytic error term.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from .arith import FactoredInt, euler_phi, factorize, li, primes_in_range, sieve_primes
from .errors import HypothesisError, VerificationError
from .parallel import pmap, split_range


def _exponent_vectors(a: FactoredInt, b: FactoredInt, l: int):
    support = sorted(set(a.factors) | set(b.factors))
    va = [a.factors.get(p, 0) % l for p in support]
    vb = [b.factors.get(p, 0) % l for p in support]
    return va, vb


def dependence_exponent(a, b, l: int) -> int:
    """2 if a, b are multiplicatively dependent mod l-th powers in Q, else 3.

    Dependence means the prime-exponent vectors of a and b are linearly
    dependent over the field with l elements.  Accepts ints or FactoredInt.
    """
    fa = a if isinstance(a, FactoredInt) else factorize(a)
    fb = b if isinstance(b, FactoredInt) else factorize(b)
    va, vb = _exponent_vectors(fa, fb, l)
    for name, v, orig in (("a", va, fa), ("b", vb, fb)):
        if not any(v):
            raise HypothesisError(
                f"{name} = {orig.value} is an l-th power in Q for l = {l}; the "
                f"dependence exponent requires bases that are not l-th powers"
            )
    # Both vectors nonzero: dependence over F_l <=> every 2x2 minor vanishes.
    k = len(va)
    dependent = all(
        (va[i] * vb[j] - va[j] * vb[i]) % l == 0 for i in range(k) for j in range(i + 1, k)
    )
    return 2 if dependent else 3


@dataclass(frozen=True)
class DensityPrediction:
    modulus: int
    d: int
    exponents: tuple[tuple[int, int], ...]  # (l, e) pairs, l ascending
    ratio: Fraction

    @property
    def ratio_float(self) -> float:
        return float(self.ratio)


def predicted_density(modulus: int, d: int, a, b) -> DensityPrediction:
    """Exact density of qualifying primes with the extra filter d | (p-1)/N."""
    fa = a if isinstance(a, FactoredInt) else factorize(a)
    fb = b if isinstance(b, FactoredInt) else factorize(b)
    if modulus < 1 or d < 1:
        raise ValueError("modulus and d must be positive")
    dfac = factorize(d)
    if any(e > 1 for e in dfac.factors.values()):
        raise HypothesisError(f"d = {d} must be squarefree")
    if math.gcd(d, modulus) != 1:
        raise HypothesisError(f"d = {d} must be coprime to the modulus {modulus}")
    exponents = []
    num = Fraction(1)
    for l in factorize(modulus).primes():
        e = dependence_exponent(fa, fb, l)
        exponents.append((l, e))
        num *= Fraction((l - 1) ** e, l**e)
    ratio = num / euler_phi(modulus * d)
    if not 0 < ratio <= 1:
        raise VerificationError(f"density ratio {ratio} left (0, 1]")
    return DensityPrediction(modulus, d, tuple(exponents), ratio)


@dataclass(frozen=True)
class DensityCheck:
    count: int
    expected: float
    relative_error: float
    prediction: DensityPrediction
    x: int


def _count_block(params, block) -> int:
    modulus, d, a, b, ells, base_primes = params
    lo, hi = block
    md = modulus * d
    count = 0
    for p in primes_in_range(lo, hi, base_primes):
        if (p - 1) % md != 0:
            continue
        ok = True
        for l in ells:
            if (p - 1) % (modulus * l) == 0:
                ok = False
                break
            # p | a counts as "a is a power" (0 is every power), excluding p.
            if a % p == 0 or pow(a, (p - 1) // l, p) == 1:
                ok = False
                break
            if b % p == 0 or pow(b, (p - 1) // l, p) == 1:
                ok = False
                break
        if ok:
            count += 1
    return count


def empirical_density(x: int, modulus: int, d: int, a: int, b: int, jobs: int = 1) -> DensityCheck:
    """Count qualifying primes up to x and compare with ratio * li(x)."""
    if x < 100:
        raise ValueError("x must be at least 100")
    prediction = predicted_density(modulus, d, a, b)
    ells = tuple(l for l, _ in prediction.exponents)
    base_primes = sieve_primes(math.isqrt(x))
    params = (modulus, d, a, b, ells, base_primes)
    blocks = split_range(2, x + 1, max(jobs * 4, 1))
    count = sum(pmap(partial(_count_block, params), blocks, jobs))
    expected = prediction.ratio_float * li(x)
    relative_error = abs(count / expected - 1.0) if expected else math.inf
    return DensityCheck(count, expected, relative_error, prediction, x)


def empirical_tolerance(count: int) -> float:
    """Statistical tolerance used by the checks: max(0.15, 3/sqrt(count))."""
    if count <= 0:
        return math.inf
    return max(0.15, 3.0 / math.sqrt(count))


def group_complement_count(l: int, factors: int) -> int:
    """Size of the complement of the coordinate-subgroup union in (Z/l)^factors.

    Enumerates the subgroups H_i = {tuples with coordinate i trivial}, takes
    the complement of their union by brute force, and checks the closed form
    (l - 1)^factors before returning it.
    """
    if factors not in (2, 3):
        raise ValueError("factors must be 2 or 3")
    import itertools

    everything = set(itertools.product(range(l), repeat=factors))
    union = set()
    for i in range(factors):
        union |= {t for t in everything if t[i] == 0}
    count = len(everything - union)
    if count != (l - 1) ** factors:
        raise VerificationError(
            f"complement count {count} != ({l}-1)^{factors}"
        )
    return count
