"""Exact integer primitives shared by every other module.

Sieving, deterministic primality, factorization (trial division then Pollard
rho), the classical multiplicative functions, multiplicative orders and the
offset logarithmic integral.  Everything here is pure and deterministic, so
the functions are safe to call from any number of workers.
"""

import bisect
import math
from dataclasses import dataclass

# Trial division handles everything up to this bound; Pollard rho takes the
# (rare) larger cofactors.  Inputs in this project stay far below 64 bits.
_TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending (empty list for limit < 2)."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    if limit < 2:
        return []
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * len(flags[start :: p])
    return [i for i in range(2, limit + 1) if flags[i]]


# Growing prime cache backing factorize / delta scans; extended geometrically.
_prime_cache: list[int] = sieve_primes(1 << 12)
_prime_cache_limit = 1 << 12


def primes_up_to(limit: int) -> list[int]:
    """Cached prime list; the cache only grows."""
    global _prime_cache, _prime_cache_limit
    if limit > _prime_cache_limit:
        new_limit = max(limit, 2 * _prime_cache_limit)
        _prime_cache = sieve_primes(new_limit)
        _prime_cache_limit = new_limit
    if limit >= _prime_cache_limit:
        return list(_prime_cache)
    return _prime_cache[: bisect.bisect_right(_prime_cache, limit)]


def primes_in_range(lo: int, hi: int, base_primes: list[int] | None = None) -> list[int]:
    """Primes in [lo, hi) by segmented sieve; workers use this on their block."""
    lo = max(lo, 2)
    if hi <= lo:
        return []
    if base_primes is None:
        base_primes = sieve_primes(math.isqrt(hi - 1))
    flags = bytearray(b"\x01") * (hi - lo)
    for p in base_primes:
        if p * p >= hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        flags[start - lo :: p] = b"\x00" * len(flags[start - lo :: p])
    return [n for n in range(lo, hi) if flags[n - lo]]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its full prime factorization."""

    value: int
    factors: dict[int, int]

    def __post_init__(self):
        prod = 1
        for p, e in self.factors.items():
            if e < 1 or not is_prime(p):
                raise ValueError(f"bad factor entry {p}^{e}")
            prod *= p**e
        if prod != self.value or self.value < 1:
            raise ValueError(f"factorization does not multiply back to {self.value}")

    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(self.factors))

    def radical(self) -> int:
        """Product of the distinct prime divisors (1 for value 1)."""
        return math.prod(self.primes())

    def divisors(self) -> list[int]:
        """All positive divisors, ascending."""
        divs = [1]
        for p, e in sorted(self.factors.items()):
            divs = [d * p**i for d in divs for i in range(e + 1)]
        return sorted(divs)

    def is_lth_power(self, l: int) -> bool:
        """True iff value is an l-th power in Q (all exponents divisible by l)."""
        return all(e % l == 0 for e in self.factors.values())


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of odd composite n (Brent's cycle finding).

    The parameter sequence is fixed, so results are deterministic.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")  # unreachable for our input sizes


def factorize(n: int) -> FactoredInt:
    """Full prime factorization of n >= 1 (n = 1 gives the empty map)."""
    if n < 1:
        raise ValueError("factorize requires a positive integer")
    value = n
    factors: dict[int, int] = {}
    bound = min(math.isqrt(n), _TRIAL_LIMIT)
    for p in primes_up_to(max(bound, 2)):
        if p > bound:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
            bound = min(math.isqrt(n), _TRIAL_LIMIT)
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                factors[m] = factors.get(m, 0) + 1
                continue
            d = _pollard_rho(m)
            stack.append(d)
            stack.append(m // d)
    return FactoredInt(value, factors)


def moebius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    fac = factorize(n)
    if any(e > 1 for e in fac.factors.values()):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def euler_phi(n: int) -> int:
    """Euler's totient."""
    fac = factorize(n)
    result = 1
    for p, e in fac.factors.items():
        result *= (p - 1) * p ** (e - 1)
    return result


def powmod(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus for arbitrary-precision exponents."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exponent, modulus)


def mult_order(a: int, p: int) -> int:
    """Smallest e >= 1 with a**e = 1 mod p, for prime p not dividing a.

    Starts from p - 1 and strips prime factors that keep the power at 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a % p == 0:
        raise ValueError(f"{p} divides {a}; the order is undefined")
    e = p - 1
    for q in factorize(p - 1).primes():
        while e % q == 0 and pow(a, e // q, p) == 1:
            e //= q
    return e


def _adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, depth):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    if depth <= 0 or abs(left + right - whole) <= 15.0 * eps:
        return left + right + (left + right - whole) / 15.0
    return _adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) + _adaptive_simpson(
        f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1
    )


def li(x) -> float:
    """Offset logarithmic integral: the integral of dt/log t from 2 to x.

    Adaptive Simpson with relative target 1e-7 and absolute floor 1e-9; the
    integrand is smooth on [2, x] (the singularity at t = 1 is outside).
    """
    x = float(x)
    if x < 2.0:
        raise ValueError("li is defined for x >= 2")
    if x == 2.0:
        return 0.0

    def f(t):
        return 1.0 / math.log(t)

    a, b = 2.0, x
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    eps = max(1e-7 * abs(whole), 1e-9)
    return _adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, 60)
