"""Finite fields F_{p^e}, dense polynomials over them, and the linear
degree-growth construction over F_q[T].

Field contexts are built over the prime field with a deterministic modulus
(the lexicographically least monic irreducible by ascending coefficient
sequence), so every run and every implementation of this convention agrees
on element encodings.  Elements are encoded as integers in [0, p^e) via
base-p digits, constant digit first.

The construction machinery picks (r, t, Q) from (q, k, n_0, m) so that
n = (Q^N - 1)/(mr) is forced into the congruence class n_0 mod q^k, scans
monic irreducible pi of degree N over F_Q with the power-residue criterion,
and certifies deg gcd(Phi_m(a^n), Phi_m(b^n)) >= N * (number of qualifying
pi) by exact polynomial arithmetic.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache, partial

from .arith import factorize, is_prime, moebius
from .cyclotomic import eval_poly_fq
from .errors import HypothesisError, VerificationError
from .parallel import pmap, split_range

_TABLE_CAP = 256  # build full multiplication/inverse tables up to this field size


class FieldContext:
    """An explicit finite field F_{p^e} with deterministic modulus."""

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be at least 1")
        self.p = p
        self.e = e
        self.q = p**e
        if e == 1:
            self.modulus: tuple[int, ...] = (0, 1)
        else:
            self.modulus = _least_irreducible_modulus(p, e)
        self._mul_table = None
        self._inv_table = None
        if self.q <= _TABLE_CAP:
            self._build_tables()

    # Contexts are cached singletons (see fq_context); pickle resolves to the
    # worker's singleton so identity-based equality keeps working.
    def __reduce__(self):
        return (fq_context, (self.p, self.e))

    def __repr__(self):
        return f"FieldContext(GF({self.q}))"

    def decode(self, v: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.e):
            v, d = divmod(v, self.p)
            digits.append(d)
        return tuple(digits)

    def encode(self, digits) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def add(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x + y) % self.p
        dx, dy = self.decode(x), self.decode(y)
        return self.encode([(u + v) % self.p for u, v in zip(dx, dy)])

    def sub(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x - y) % self.p
        dx, dy = self.decode(x), self.decode(y)
        return self.encode([(u - v) % self.p for u, v in zip(dx, dy)])

    def neg(self, x: int) -> int:
        return self.sub(0, x)

    def _mul_raw(self, x: int, y: int) -> int:
        if self.e == 1:
            return x * y % self.p
        dx, dy = self.decode(x), self.decode(y)
        conv = [0] * (2 * self.e - 1)
        for i, u in enumerate(dx):
            if u:
                for j, v in enumerate(dy):
                    conv[i + j] = (conv[i + j] + u * v) % self.p
        # reduce by the monic modulus
        for i in range(len(conv) - 1, self.e - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                for j in range(self.e):
                    conv[i - self.e + j] = (conv[i - self.e + j] - c * self.modulus[j]) % self.p
        return self.encode(conv[: self.e])

    def mul(self, x: int, y: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[x][y]
        return self._mul_raw(x, y)

    def pow_elem(self, x: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self._inv_table is not None:
            return self._inv_table[x]
        return self.pow_elem(x, self.q - 2)

    def _build_tables(self):
        q = self.q
        self._mul_table = [[self._mul_raw(x, y) for y in range(q)] for x in range(q)]
        inv = [0] * q
        for x in range(1, q):
            inv[x] = self.pow_elem(x, q - 2)
        self._inv_table = inv

    def elements(self):
        return range(self.q)


@lru_cache(maxsize=None)
def fq_context(p: int, e: int) -> FieldContext:
    """The canonical context for F_{p^e} (cached singleton)."""
    return FieldContext(p, e)


def _least_irreducible_modulus(p: int, e: int) -> tuple[int, ...]:
    base = fq_context(p, 1)
    for low in itertools.product(range(p), repeat=e):
        # `low` is (c0, ..., c_{e-1}); product varies the first slot slowest,
        # which is exactly ascending lexicographic order on the sequence.
        f = FqPolynomial.of(base, low + (1,))
        if irreducible_test(f):
            return low + (1,)
    raise ArithmeticError(f"no irreducible of degree {e} over GF({p})")  # impossible


@dataclass(frozen=True)
class FqPolynomial:
    """Dense polynomial over a FieldContext; coeffs ascending, trimmed.

    The zero polynomial has empty coeffs and degree -1, distinct from the
    nonzero constants of degree 0.
    """

    ctx: FieldContext
    coeffs: tuple[int, ...]

    @classmethod
    def of(cls, ctx: FieldContext, coeffs) -> "FqPolynomial":
        coeffs = list(coeffs)
        if any(not 0 <= c < ctx.q for c in coeffs):
            raise ValueError("coefficient out of field range")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(ctx, tuple(coeffs))

    @classmethod
    def constant(cls, ctx: FieldContext, c: int) -> "FqPolynomial":
        # integer constants land in the prime subfield, whose elements encode
        # as themselves
        return cls.of(ctx, (c % ctx.p,))

    @classmethod
    def zero(cls, ctx: FieldContext) -> "FqPolynomial":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx: FieldContext) -> "FqPolynomial":
        return cls(ctx, (1,))

    @classmethod
    def variable(cls, ctx: FieldContext) -> "FqPolynomial":
        return cls(ctx, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _require_same_ctx(self, other):
        if self.ctx is not other.ctx:
            raise ValueError("polynomials live over different field contexts")

    def __add__(self, other: "FqPolynomial") -> "FqPolynomial":
        self._require_same_ctx(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return FqPolynomial.of(ctx, out)

    def __neg__(self) -> "FqPolynomial":
        ctx = self.ctx
        return FqPolynomial(ctx, tuple(ctx.neg(c) for c in self.coeffs))

    def __sub__(self, other: "FqPolynomial") -> "FqPolynomial":
        return self + (-other)

    def __mul__(self, other: "FqPolynomial") -> "FqPolynomial":
        self._require_same_ctx(other)
        ctx = self.ctx
        if self.is_zero or other.is_zero:
            return FqPolynomial.zero(ctx)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            if u:
                for j, v in enumerate(other.coeffs):
                    if v:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(u, v))
        return FqPolynomial.of(ctx, out)

    def __divmod__(self, other: "FqPolynomial"):
        self._require_same_ctx(other)
        ctx = self.ctx
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return FqPolynomial.zero(ctx), self
        quot = [0] * (dq + 1)
        lead_inv = ctx.inv(other.coeffs[-1])
        for i in range(len(rem) - 1, len(other.coeffs) - 2, -1):
            c = rem[i]
            if c == 0:
                continue
            factor = ctx.mul(c, lead_inv)
            shift = i - (len(other.coeffs) - 1)
            quot[shift] = factor
            for j, v in enumerate(other.coeffs):
                rem[shift + j] = ctx.sub(rem[shift + j], ctx.mul(factor, v))
        return FqPolynomial.of(ctx, quot), FqPolynomial.of(ctx, rem)

    def __mod__(self, other: "FqPolynomial") -> "FqPolynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "FqPolynomial") -> "FqPolynomial":
        return divmod(self, other)[0]

    def monic(self) -> "FqPolynomial":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic associate")
        if self.is_monic:
            return self
        ctx = self.ctx
        inv = ctx.inv(self.coeffs[-1])
        return FqPolynomial(ctx, tuple(ctx.mul(c, inv) for c in self.coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "1" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if i > 0 and c != 1:
                term = f"{c}*{term}"
            elif i == 0:
                term = str(c)
            parts.append(term)
        return " + ".join(parts)


def poly_pow(f: FqPolynomial, n: int) -> FqPolynomial:
    """Exact n-th power (no reduction)."""
    result = FqPolynomial.one(f.ctx)
    while n:
        if n & 1:
            result = result * f
        f = f * f
        n >>= 1
    return result


def poly_powmod(base: FqPolynomial, exponent: int, modulus: FqPolynomial) -> FqPolynomial:
    """base**exponent mod modulus; exponent may be Q^N sized."""
    if modulus.degree < 1:
        raise ValueError("modulus must have degree at least 1")
    result = FqPolynomial.one(base.ctx)
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def poly_gcd(f: FqPolynomial, g: FqPolynomial) -> FqPolynomial:
    """Monic gcd by Euclid's algorithm."""
    f._require_same_ctx(g)
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def irreducible_test(f: FqPolynomial) -> bool:
    """Rabin irreducibility test for a monic polynomial of degree >= 1."""
    if f.degree < 1:
        raise ValueError("irreducibility is tested on degree >= 1")
    if not f.is_monic:
        raise ValueError("irreducibility test expects a monic polynomial")
    ctx = f.ctx
    n = f.degree
    x = FqPolynomial.variable(ctx)
    frob = [x % f]  # frob[j] = T^(q^j) mod f
    for _ in range(n):
        frob.append(poly_powmod(frob[-1], ctx.q, f))
    if frob[n] != x % f:
        return False
    for l in factorize(n).primes():
        if poly_gcd(frob[n // l] - x, f).degree != 0:
            return False
    return True


def irreducible_count(q: int, n: int) -> int:
    """Number of monic irreducible polynomials of degree n over F_q."""
    total = sum(moebius(d) * q ** (n // d) for d in factorize(n).divisors())
    assert total % n == 0
    return total // n


def _series_mul_trunc(ctx, a, b, trunc):
    out = [0] * trunc
    for i, u in enumerate(a[:trunc]):
        if u:
            for j, v in enumerate(b[: trunc - i]):
                if v:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(u, v))
    return out


def is_lth_power_poly(f: FqPolynomial, l: int) -> bool:
    """True iff monic f equals g**l for some g in the same polynomial ring.

    Solves for the candidate root coefficient by coefficient (possible since
    l is invertible in the field) and then checks g**l == f exactly.
    """
    ctx = f.ctx
    if not f.is_monic:
        raise ValueError("the l-th power test expects a monic polynomial")
    if l % ctx.p == 0:
        raise ValueError("l must be invertible in the coefficient field")
    if f.degree % l != 0:
        return False
    d = f.degree // l
    rev_f = list(reversed(f.coeffs))  # rev_f[0] == 1
    g_rev = [1] + [0] * d
    l_inv = ctx.inv(l % ctx.p)
    for j in range(1, d + 1):
        power = g_rev[: j + 1]
        acc = [1] + [0] * j
        for _ in range(l):
            acc = _series_mul_trunc(ctx, acc, power, j + 1)
        have = acc[j]
        want = rev_f[j] if j < len(rev_f) else 0
        g_rev[j] = ctx.mul(ctx.sub(want, have), l_inv)
    g = FqPolynomial.of(ctx, tuple(reversed(g_rev)))
    return poly_pow(g, l) == f


def embed_subfield(small: FieldContext, big: FieldContext) -> tuple[int, ...]:
    """Element map F_{p^e} -> F_{p^E} for e | E, found by root-finding.

    The modulus of the small field is rooted in the big field; the least
    encoded root is chosen, which makes the embedding deterministic.
    """
    if small.p != big.p or big.e % small.e != 0:
        raise ValueError("no subfield embedding exists")
    if small.e == 1:
        return tuple(range(small.p))

    def eval_mod(z):
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, z), c)  # prime-field c encodes as itself
        return acc

    roots = [z for z in big.elements() if eval_mod(z) == 0]
    if not roots:
        raise ArithmeticError("subfield modulus has no root in the big field")
    rho = min(roots)
    table = []
    for v in small.elements():
        acc, pw = 0, 1
        for digit in small.decode(v):
            acc = big.add(acc, big.mul(digit, pw))
            pw = big.mul(pw, rho)
        table.append(acc)
    return tuple(table)


def choose_params(q: int, k: int, n0: int, m: int) -> tuple[int, int, int]:
    """Pick (r, t, Q): r minimal with gcd(r, m) = 1 and r*m*n0 = -1 mod q^k;
    t minimal with t >= k and q^t = 1 mod mr; Q = q^t."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if math.gcd(n0, q) != 1:
        raise HypothesisError(
            f"n_0 = {n0} shares a factor with q = {q}; only congruence classes "
            f"prime to q are handled"
        )
    if math.gcd(m, q) != 1:
        raise HypothesisError(f"m = {m} must be prime to q = {q}")
    qk = q**k
    r = None
    for cand in range(1, qk * m + 2):
        if math.gcd(cand, m) == 1 and (cand * m * n0 + 1) % qk == 0:
            r = cand
            break
    if r is None:
        raise ArithmeticError("no admissible r found")  # cannot happen
    mr = m * r
    t = k
    while pow(q, t, mr) != 1 % mr:
        t += 1
    return r, t, q**t


@dataclass(frozen=True)
class FFConstruction:
    """Parameter bundle (q, k, n_0, m) -> (r, t, Q) with the field tower."""

    base: FieldContext
    big: FieldContext
    k: int
    n0: int
    m: int
    r: int
    t: int
    Q: int
    embedding: tuple[int, ...]

    def n_for(self, N: int) -> int:
        """n = (Q^N - 1)/(mr); lands in the class n_0 mod q^k by construction."""
        total = self.Q**N - 1
        if total % (self.m * self.r) != 0:
            raise VerificationError(f"mr does not divide Q^{N} - 1")
        n = total // (self.m * self.r)
        qk = self.base.q**self.k
        if n % qk != self.n0 % qk:
            raise VerificationError(f"n = {n} escaped the class {self.n0} mod {qk}")
        return n

    def lift(self, f: FqPolynomial) -> FqPolynomial:
        """Reinterpret a base-field polynomial over the big field."""
        if f.ctx is not self.base:
            raise ValueError("polynomial is not over the base field")
        return FqPolynomial.of(self.big, tuple(self.embedding[c] for c in f.coeffs))


def ff_construction(base: FieldContext, k: int, n0: int, m: int) -> FFConstruction:
    r, t, Q = choose_params(base.q, k, n0, m)
    big = fq_context(base.p, base.e * t)
    assert big.q == Q
    assert math.gcd(r, m) == 1 and (r * m * n0 + 1) % base.q**k == 0
    assert (Q - 1) % (m * r) == 0 and t >= k
    return FFConstruction(base, big, k, n0, m, r, t, Q, embed_subfield(base, big))


def _monic_from_index(ctx: FieldContext, degree: int, idx: int) -> FqPolynomial:
    coeffs = []
    for _ in range(degree):
        idx, digit = divmod(idx, ctx.q)
        coeffs.append(digit)
    coeffs.append(1)
    return FqPolynomial(ctx, tuple(coeffs))


def monic_polys(ctx: FieldContext, degree: int):
    """All monic polynomials of the given degree, in a fixed enumeration order."""
    for idx in range(ctx.q**degree):
        yield _monic_from_index(ctx, degree, idx)


def pi_criterion(pi: FqPolynomial, f: FqPolynomial, m: int, r: int) -> bool:
    """True iff f is an r-th power mod pi and not an l-th power for any l | m.

    Realized through the power tests f^((Q^N - 1)/r) = 1 and
    f^((Q^N - 1)/l) != 1 in the residue field of pi.
    """
    if (f % pi).is_zero:
        raise ValueError("pi divides the tested polynomial")
    total = pi.ctx.q**pi.degree - 1
    one = FqPolynomial.one(pi.ctx)
    if poly_powmod(f, total // r, pi) != one:
        return False
    for l in factorize(m).primes():
        if poly_powmod(f, total // l, pi) == one:
            return False
    return True


@dataclass(frozen=True)
class FFScanResult:
    N: int
    n: int
    count: int
    predicted: float
    predicted_alt: float
    total_irreducible: int
    qualifying: tuple[tuple[int, ...], ...]  # coefficient tuples over F_Q


def _scan_block(cfg, block) -> tuple[int, list[tuple[int, ...]]]:
    p, e, a_coeffs, b_coeffs, N, m, r = cfg
    ctx = fq_context(p, e)
    a = FqPolynomial(ctx, a_coeffs)
    b = FqPolynomial(ctx, b_coeffs)
    lo, hi = block
    total = 0
    qualifying = []
    for idx in range(lo, hi):
        pi = _monic_from_index(ctx, N, idx)
        if not irreducible_test(pi):
            continue
        total += 1
        if (a % pi).is_zero or (b % pi).is_zero:
            continue
        if pi_criterion(pi, a, m, r) and pi_criterion(pi, b, m, r):
            qualifying.append(pi.coeffs)
    return total, qualifying


def check_ff_bases(base: FieldContext, m: int, a: FqPolynomial, b: FqPolynomial) -> None:
    """Hypothesis gate for the construction's base polynomials."""
    for name, f in (("a", a), ("b", b)):
        if f.ctx is not base:
            raise ValueError(f"{name} is not over the base field")
        if f.degree < 1 or not f.is_monic:
            raise HypothesisError(f"{name} must be a nonconstant monic polynomial")
        for l in factorize(m).primes():
            if is_lth_power_poly(f, l):
                raise HypothesisError(
                    f"{name} = {f} is an l-th power in the polynomial ring for l = {l}; the "
                    f"bases must not be l-th powers for any prime l dividing m"
                )


def ff_scan(constr: FFConstruction, N: int, a: FqPolynomial, b: FqPolynomial, jobs: int = 1) -> FFScanResult:
    """Count the monic irreducible pi of degree N over F_Q passing the
    criterion for both bases; report the density predictions next to it.

    `predicted` assumes the r-th/l-th power conditions for a and b are
    jointly independent: Q^N/(N r^2) * prod_{l | m} (1 - 1/l)^2.
    `predicted_alt` weights each l by its multiplicity e in m instead:
    Q^N/(N r^2) * prod (l-1)^e / l^e.  The empirical count is authoritative.
    """
    check_ff_bases(constr.base, constr.m, a, b)
    n = constr.n_for(N)
    big = constr.big
    a_big, b_big = constr.lift(a), constr.lift(b)
    cfg = (big.p, big.e, a_big.coeffs, b_big.coeffs, N, constr.m, constr.r)
    blocks = split_range(0, big.q**N, max(jobs * 4, 1))
    total = 0
    qualifying: list[tuple[int, ...]] = []
    for block_total, block_qual in pmap(partial(_scan_block, cfg), blocks, jobs):
        total += block_total
        qualifying.extend(block_qual)
    qualifying.sort()
    density = 1.0 / constr.r**2
    density_alt = 1.0 / constr.r**2
    for l, e in sorted(factorize(constr.m).factors.items()):
        density *= (1.0 - 1.0 / l) ** 2
        density_alt *= (l - 1.0) ** e / l**e
    scale = constr.Q**N / N
    return FFScanResult(
        N=N,
        n=n,
        count=len(qualifying),
        predicted=density * scale,
        predicted_alt=density_alt * scale,
        total_irreducible=total,
        qualifying=tuple(qualifying),
    )


@dataclass(frozen=True)
class FFVerifyResult:
    N: int
    n: int
    deg_gcd: int
    certified_bound: int
    ratio_to_n: float
    count: int


def ff_direct_verify(
    constr: FFConstruction,
    N: int,
    a: FqPolynomial,
    b: FqPolynomial,
    n_cap: int = 5000,
    scan: FFScanResult | None = None,
) -> FFVerifyResult:
    """Compute gcd(Phi_m(a^n), Phi_m(b^n)) exactly over the base field and
    certify deg gcd >= N * (qualifying pi count)."""
    check_ff_bases(constr.base, constr.m, a, b)
    n = constr.n_for(N)
    if n > n_cap:
        raise ValueError(f"n = {n} exceeds the exact-computation cap {n_cap}")
    if scan is None:
        scan = ff_scan(constr, N, a, b)
    value_a = eval_poly_fq(constr.m, poly_pow(a, n))
    value_b = eval_poly_fq(constr.m, poly_pow(b, n))
    g = poly_gcd(value_a, value_b)
    # every qualifying pi must divide the lifted gcd: the per-pi certificate
    g_big = constr.lift(g)
    for coeffs in scan.qualifying:
        pi = FqPolynomial(constr.big, coeffs)
        if not (g_big % pi).is_zero:
            raise VerificationError(f"qualifying pi = {pi} does not divide the gcd")
    certified = N * scan.count
    if g.degree < certified:
        raise VerificationError(
            f"deg gcd = {g.degree} is below the certified bound {certified}"
        )
    return FFVerifyResult(
        N=N, n=n, deg_gcd=g.degree, certified_bound=certified, ratio_to_n=g.degree / n, count=scan.count
    )


def ff_equivalence_check(
    constr: FFConstruction, N: int, a: FqPolynomial, b: FqPolynomial
) -> tuple[int, list[tuple[int, ...]]]:
    """Exhaustively compare the power criterion with exact divisibility.

    For every monic irreducible pi of degree N not dividing ab, the criterion
    (for both bases) must agree with pi | gcd(Phi_m(a^n), Phi_m(b^n)).
    Returns (number of pi checked, list of mismatching pi coefficients).
    """
    check_ff_bases(constr.base, constr.m, a, b)
    n = constr.n_for(N)
    value_a = constr.lift(eval_poly_fq(constr.m, poly_pow(a, n)))
    value_b = constr.lift(eval_poly_fq(constr.m, poly_pow(b, n)))
    a_big, b_big = constr.lift(a), constr.lift(b)
    checked = 0
    mismatches = []
    for pi in monic_polys(constr.big, N):
        if not irreducible_test(pi):
            continue
        if (a_big % pi).is_zero or (b_big % pi).is_zero:
            # pi | base implies Phi_m(base^n) = Phi_m(0) = +-1 mod pi, never 0
            if (value_a % pi).is_zero and (value_b % pi).is_zero:
                raise VerificationError(f"pi = {pi} divides despite dividing a base")
            continue
        checked += 1
        crit = pi_criterion(pi, a_big, constr.m, constr.r) and pi_criterion(
            pi, b_big, constr.m, constr.r
        )
        divides = (value_a % pi).is_zero and (value_b % pi).is_zero
        if crit != divides:
            mismatches.append(pi.coeffs)
    return checked, mismatches


@dataclass(frozen=True)
class FFPairResult:
    u: int
    v: int
    N: int
    n: int
    deg_gcd: int
    count: int
    certified_bound: int
    ratio_to_n: float


def ff_pair_verify(
    base: FieldContext,
    k: int,
    n0: int,
    u: int,
    v: int,
    a: FqPolynomial,
    b: FqPolynomial,
    N: int,
    n_cap: int = 5000,
) -> FFPairResult:
    """Mixed-index variant: certify deg gcd(Phi_u(a^n), Phi_v(b^n)) >= N * count.

    No derived criterion exists here, so divisibility by each pi is checked
    directly by exact remainders.  Parameters come from the construction with
    m = lcm(u, v).
    """
    d = math.gcd(u, v)
    if math.gcd(u // d, d) != 1 or math.gcd(v // d, d) != 1:
        raise HypothesisError(
            f"indices u = {u}, v = {v} need gcd(u/d, d) = gcd(v/d, d) = 1 for d = gcd(u, v)"
        )
    lcm_idx = math.lcm(u, v)
    if math.gcd(lcm_idx, base.q) != 1:
        raise HypothesisError(f"lcm(u, v) = {lcm_idx} must be prime to q = {base.q}")
    for name, f, idx in (("a", a, u), ("b", b, v)):
        if f.degree < 1 or not f.is_monic:
            raise HypothesisError(f"{name} must be a nonconstant monic polynomial")
        for l in factorize(idx).primes():
            if is_lth_power_poly(f, l):
                raise HypothesisError(f"{name} = {f} is an l-th power in the polynomial ring for l = {l}")
    constr = ff_construction(base, k, n0, lcm_idx)
    n = constr.n_for(N)
    if n > n_cap:
        raise ValueError(f"n = {n} exceeds the exact-computation cap {n_cap}")
    value_a = eval_poly_fq(u, poly_pow(a, n))
    value_b = eval_poly_fq(v, poly_pow(b, n))
    g = poly_gcd(value_a, value_b)
    lifted_a, lifted_b = constr.lift(value_a), constr.lift(value_b)
    count = 0
    for pi in monic_polys(constr.big, N):
        if not irreducible_test(pi):
            continue
        if (lifted_a % pi).is_zero and (lifted_b % pi).is_zero:
            count += 1
    certified = N * count
    if g.degree < certified:
        raise VerificationError(f"deg gcd = {g.degree} below certified bound {certified}")
    return FFPairResult(
        u=u, v=v, N=N, n=n, deg_gcd=g.degree, count=count, certified_bound=certified, ratio_to_n=g.degree / n
    )
