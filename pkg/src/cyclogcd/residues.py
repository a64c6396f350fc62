"""Power-residue tests and the qualifying-prime predicate.

A prime p qualifies for (N, a, b) when p = 1 mod N, p != 1 mod N*l for every
prime l | N, and neither a nor b is an l-th power mod p.  For such p and any
n coprime to N divisible by (p-1)/N, p divides both Phi_N(a^n) and
Phi_N(b^n); `lemma_divides` re-verifies that divisibility numerically rather
than trusting it.
"""

import math
from dataclasses import dataclass
from functools import partial

from .arith import factorize, is_prime, mult_order, primes_in_range
from .cyclotomic import build_cyclotomic, eval_mod_prime
from .errors import HypothesisError, VerificationError
from .parallel import pmap, split_range


def is_lth_power_mod(a: int, l: int, p: int) -> bool:
    """True iff a is an l-th power mod p, via a**((p-1)/l) == 1.

    Valid only when l divides p - 1 and p does not divide a.
    """
    if (p - 1) % l != 0:
        raise ValueError(f"{l} does not divide {p} - 1")
    if a % p == 0:
        raise ValueError(f"{p} divides {a}")
    return pow(a, (p - 1) // l, p) == 1


@dataclass(frozen=True)
class ResidueFlags:
    """Conditions attached to one prime divisor l of the modulus."""

    l: int
    not_one_mod_nl: bool       # p != 1 (mod N*l)
    a_not_lth_power: bool
    b_not_lth_power: bool

    @property
    def ok(self) -> bool:
        return self.not_one_mod_nl and self.a_not_lth_power and self.b_not_lth_power


@dataclass(frozen=True)
class QualifiedPrime:
    """Result of evaluating all qualifying conditions of p for (N, a, b).

    `congruent` records p = 1 (mod N); the per-l flags are only evaluated
    when it holds (the power tests need l | p - 1).
    """

    p: int
    modulus: int
    a: int
    b: int
    congruent: bool
    flags: tuple[ResidueFlags, ...]

    @property
    def qualified(self) -> bool:
        return self.congruent and all(f.ok for f in self.flags)


def check_not_lth_powers(a: int, b: int, moduli_primes) -> None:
    """Reject bases that are l-th powers in Q for any l in moduli_primes."""
    for l in moduli_primes:
        for name, v in (("a", a), ("b", b)):
            if factorize(v).is_lth_power(l):
                raise HypothesisError(
                    f"{name} = {v} is an l-th power in Q for l = {l}; the bases must "
                    f"not be l-th powers in Q for any prime l dividing the modulus"
                )


def qualifies_prime(p: int, modulus: int, a: int, b: int) -> QualifiedPrime:
    """Evaluate every qualifying condition of p for (modulus, a, b)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a % p == 0 or b % p == 0:
        raise ValueError(f"{p} divides a base; qualifying conditions are undefined")
    ells = factorize(modulus).primes()
    congruent = (p - 1) % modulus == 0
    flags = []
    if congruent:
        for l in ells:
            flags.append(
                ResidueFlags(
                    l,
                    (p - 1) % (modulus * l) != 0,
                    not is_lth_power_mod(a, l, p),
                    not is_lth_power_mod(b, l, p),
                )
            )
    return QualifiedPrime(p, modulus, a, b, congruent, tuple(flags))


def lemma_divides(qp: QualifiedPrime, n: int) -> bool:
    """Verify p | gcd(Phi_N(a^n), Phi_N(b^n)) for a qualified prime.

    Preconditions are reported distinctly; the divisibility itself is
    recomputed, and a failure raises VerificationError because it would
    falsify the divisibility lemma (or reveal a bug).
    """
    if not qp.qualified:
        raise ValueError(f"p = {qp.p} is not qualified for modulus {qp.modulus}")
    w = (qp.p - 1) // qp.modulus
    if n <= 0 or n % w != 0:
        raise ValueError(f"(p-1)/N = {w} does not divide n = {n}")
    if math.gcd(n, qp.modulus) != 1:
        raise ValueError(f"n = {n} is not coprime to the modulus {qp.modulus}")
    for base in (qp.a, qp.b):
        if eval_mod_prime(qp.modulus, base, n, qp.p) != 0:
            raise VerificationError(
                f"divisibility failed: {qp.p} does not divide "
                f"Phi_{qp.modulus}({base}^{n}) despite qualification"
            )
    return True


def order_exact(a: int, n: int, p: int, target: int) -> bool:
    """True iff the multiplicative order of a**n mod p equals target.

    Runs on powmod tests at divisor exponents of target; target must divide
    p - 1, and p must not divide a.
    """
    if (p - 1) % target != 0:
        raise ValueError(f"target order {target} does not divide {p} - 1")
    if a % p == 0:
        raise ValueError(f"{p} divides {a}")
    t = pow(a, n, p)
    if pow(t, target, p) != 1:
        return False
    for q in factorize(target).primes():
        if pow(t, target // q, p) == 1:
            return False
    return True


def order_of_power(a: int, n: int, p: int) -> int:
    """Multiplicative order of a**n mod p (helper for scans and tests)."""
    return mult_order(pow(a, n, p), p)


@dataclass(frozen=True)
class LemmaScanResult:
    modulus: int
    a: int
    b: int
    p_max: int
    m_max: int
    qualified_primes: int
    cases_checked: int
    failures: int


def _lemma_scan_block(cfg, block) -> tuple[int, int]:
    a, b, modulus, m_max, ells, coeffs = cfg
    lo, hi = block
    qualified = checked = 0
    for p in primes_in_range(lo, hi):
        if a % p == 0 or b % p == 0 or (p - 1) % modulus != 0:
            continue
        ok = True
        for l in ells:
            if (p - 1) % (modulus * l) == 0:
                ok = False
                break
            if pow(a, (p - 1) // l, p) == 1 or pow(b, (p - 1) // l, p) == 1:
                ok = False
                break
        if not ok:
            continue
        qualified += 1
        w = (p - 1) // modulus
        reduced = [c % p for c in coeffs]
        for base in (a, b):
            u = pow(base, w, p)
            for m in range(1, m_max + 1):
                if math.gcd(m, modulus) != 1:
                    continue
                t = pow(u, m, p)
                acc = 0
                for c in reversed(reduced):
                    acc = (acc * t + c) % p
                checked += 1
                if acc != 0:
                    raise VerificationError(
                        f"divisibility lemma failed at p = {p}, base = {base}, "
                        f"n = {m}*{w} for modulus {modulus}"
                    )
    return qualified, checked


def lemma_scan(modulus: int, a: int, b: int, p_max: int, m_max: int, jobs: int = 1) -> LemmaScanResult:
    """Exhaustively verify the divisibility lemma for every qualified prime
    p <= p_max and every admissible n = m(p-1)/modulus with m <= m_max.

    Any counterexample raises VerificationError; the result records how much
    ground was covered.
    """
    ells = factorize(modulus).primes()
    check_not_lth_powers(a, b, ells)
    cfg = (a, b, modulus, m_max, ells, build_cyclotomic(modulus).coeffs)
    blocks = split_range(2, p_max + 1, max(jobs * 4, 1))
    qualified = checked = 0
    for q, c in pmap(partial(_lemma_scan_block, cfg), blocks, jobs):
        qualified += q
        checked += c
    return LemmaScanResult(modulus, a, b, p_max, m_max, qualified, checked, 0)
