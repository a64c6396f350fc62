"""Champion-number construction over Z.

Scan pairs (m, p) with m <= x, p <= x prime and p qualifying, all chosen so
that every n = m(p-1)/N is at most x^2 and divisible by the kernel K (the
product of the primes up to delta*log x prime to N).  Since at most x^2/K
such n exist, some n collects many representations, and each representation
certifies a distinct prime divisor of gcd(Phi_N(a^n), Phi_N(b^n)).  The
mixed-index variant gcd(Phi_M(a^n), Phi_N(b^n)) admits a pair only after a
direct order verification, never on the strength of a derived criterion.
"""

import math
from dataclasses import dataclass, replace
from functools import partial

from .arith import factorize, primes_in_range, sieve_primes
from .cyclotomic import eval_mod_prime
from .errors import HypothesisError, VerificationError
from .parallel import pmap, split_range


@dataclass(frozen=True)
class ChampionParams:
    """Inputs of a champion run; hypothesis checks happen at construction."""

    a: int
    b: int
    N: int
    x: int
    delta: float = 0.9
    M: int | None = None  # None: single index N; set: mixed (M, N) run
    curve_c: float = 1.0

    def __post_init__(self):
        from .residues import check_not_lth_powers

        if self.a < 2 or self.b < 2:
            raise ValueError("bases a, b must be integers >= 2")
        if self.N < 1 or (self.M is not None and self.M < 1):
            raise ValueError("indices must be positive")
        if not 0.0 < self.delta < 1.0:
            raise ValueError("delta must lie strictly between 0 and 1")
        if self.x < 8:
            raise ValueError("scan bound x must be at least 8 (x >= e^2)")
        if self.M is not None and self.M != self.N:
            m_idx, n_idx = self.M, self.N
            d = math.gcd(m_idx, n_idx)
            if math.gcd(m_idx // d, d) != 1 or math.gcd(n_idx // d, d) != 1:
                raise HypothesisError(
                    f"indices M = {m_idx}, N = {n_idx} need gcd(M/D, D) = gcd(N/D, D) = 1 "
                    f"for D = gcd(M, N) = {d}"
                )
        check_not_lth_powers(self.a, self.b, factorize(self.lcm_index).primes())

    @property
    def index_a(self) -> int:
        """Cyclotomic index applied to base a (M, falling back to N)."""
        return self.N if self.M is None else self.M

    @property
    def lcm_index(self) -> int:
        return math.lcm(self.index_a, self.N)


def build_kernel(x, delta: float, modulus: int) -> tuple[int, int]:
    """Product of the primes q <= delta*log(x) with q not dividing modulus.

    Returns (K, omega) where omega is the number of primes multiplied in.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie strictly between 0 and 1")
    if x < math.e**2:
        raise ValueError("x must be at least e^2")
    bound = delta * math.log(x)
    kernel, omega = 1, 0
    for q in sieve_primes(int(bound) + 1):
        if q <= bound and modulus % q != 0:
            kernel *= q
            omega += 1
    return kernel, omega


def _order_dividing(u: int, p: int, divisors: tuple[int, ...]) -> int:
    # Order of u mod p given that it divides the largest entry of `divisors`
    # (sorted ascending divisor list of that bound).
    for d in divisors:
        if pow(u, d, p) == 1:
            return d
    raise ArithmeticError("order not found among divisors")  # unreachable


def _scan_block_single(cfg, block) -> list[tuple[int, int]]:
    # Qualification-based scan for the single-index run.
    a, b, modulus, x, kernel, ells = cfg
    lo, hi = block
    out = []
    for p in primes_in_range(lo, hi):
        if a % p == 0 or b % p == 0:
            continue
        if (p - 1) % modulus != 0:
            continue
        w = (p - 1) // modulus
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
        step = kernel // math.gcd(kernel, w)
        for m in range(step, x + 1, step):
            if math.gcd(m, modulus) == 1:
                out.append((m, p))
    return out


def _scan_block_mixed(cfg, block) -> list[tuple[int, int]]:
    # Mixed-index scan: congruence and power filters at L = lcm(M, N), then
    # direct verification that a^n has order M and b^n has order N mod p.
    a, b, idx_a, idx_b, lcm_idx, x, kernel, ells, primes_a, primes_b, lcm_divs = cfg
    lo, hi = block
    out = []
    for p in primes_in_range(lo, hi):
        if a % p == 0 or b % p == 0:
            continue
        if (p - 1) % lcm_idx != 0:
            continue
        ok = True
        for l in ells:
            if (p - 1) % (lcm_idx * l) == 0:
                ok = False
                break
        if ok:
            for l in primes_a:
                if pow(a, (p - 1) // l, p) == 1:
                    ok = False
                    break
        if ok:
            for l in primes_b:
                if pow(b, (p - 1) // l, p) == 1:
                    ok = False
                    break
        if not ok:
            continue
        w = (p - 1) // lcm_idx
        ord_a = _order_dividing(pow(a, w, p), p, lcm_divs)
        ord_b = _order_dividing(pow(b, w, p), p, lcm_divs)
        step = kernel // math.gcd(kernel, w)
        for m in range(step, x + 1, step):
            if math.gcd(m, lcm_idx) != 1:
                continue
            # order of (a^w)^m is ord_a / gcd(ord_a, m); admit only exact hits
            if ord_a // math.gcd(ord_a, m) == idx_a and ord_b // math.gcd(ord_b, m) == idx_b:
                out.append((m, p))
    return out


def enumerate_pairs(params: ChampionParams, jobs: int = 1) -> list[tuple[int, int]]:
    """The admissible pair set, ordered by p ascending then m ascending."""
    lcm_idx = params.lcm_index
    kernel, _ = build_kernel(params.x, params.delta, lcm_idx)
    ells = factorize(lcm_idx).primes()
    if params.M is None:
        cfg = (params.a, params.b, params.N, params.x, kernel, ells)
        worker = partial(_scan_block_single, cfg)
    else:
        cfg = (
            params.a,
            params.b,
            params.index_a,
            params.N,
            lcm_idx,
            params.x,
            kernel,
            ells,
            factorize(params.index_a).primes(),
            factorize(params.N).primes(),
            tuple(factorize(lcm_idx).divisors()),
        )
        worker = partial(_scan_block_mixed, cfg)
    blocks = split_range(2, params.x + 1, max(jobs * 4, 1))
    pairs: list[tuple[int, int]] = []
    for chunk in pmap(worker, blocks, jobs):
        pairs.extend(chunk)
    return pairs


@dataclass(frozen=True)
class ChampionReport:
    """A champion n, its representations and the certified gcd lower bound."""

    n: int
    representations: tuple[tuple[int, int], ...]  # (m, p), p ascending
    distinct_primes: tuple[int, ...]
    log_gcd_lower_bound: float
    pigeonhole_floor: int
    pair_count: int
    kernel: int
    kernel_omega: int
    curve_value: float | None
    curve_ratio: float | None
    verified: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "representation_count": len(self.representations),
            "representations": [list(mp) for mp in self.representations],
            "distinct_primes": list(self.distinct_primes),
            "log_gcd_lower_bound": self.log_gcd_lower_bound,
            "pigeonhole_floor": self.pigeonhole_floor,
            "pair_count": self.pair_count,
            "kernel": self.kernel,
            "kernel_omega": self.kernel_omega,
            "curve_value": self.curve_value,
            "curve_ratio": self.curve_ratio,
            "verified": self.verified,
        }


def pigeonhole_champion(
    pairs, kernel: int, modulus: int, x: int, curve_c: float = 1.0, kernel_omega: int = 0
) -> ChampionReport:
    """Group pairs by n = m(p-1)/modulus and pick the most-represented n.

    Ties break to the smallest n.  All report invariants are re-checked here
    (kernel divides every n, every n <= x^2 and is coprime to the modulus,
    multiplicity of the champion meets the pigeonhole floor).
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("cannot pigeonhole an empty pair set")
    groups: dict[int, list[tuple[int, int]]] = {}
    for m, p in pairs:
        if (p - 1) % modulus != 0:
            raise VerificationError(f"pair ({m}, {p}): modulus does not divide p - 1")
        n = m * ((p - 1) // modulus)
        groups.setdefault(n, []).append((m, p))
    for n in groups:
        if n % kernel != 0 or n > x * x or math.gcd(n, modulus) != 1:
            raise VerificationError(f"grouped n = {n} violates the kernel/bound/coprimality invariants")
    slots = (x * x) // kernel
    if slots == 0:
        raise VerificationError("kernel exceeds x^2 yet pairs exist")
    floor = -(-len(pairs) // slots)  # ceil
    champ_n, reps = max(groups.items(), key=lambda kv: (len(kv[1]), -kv[0]))
    reps = sorted(reps, key=lambda mp: mp[1])
    primes = tuple(p for _, p in reps)
    if len(set(primes)) != len(reps):
        raise VerificationError("a prime repeated within one representation group")
    if len(reps) < floor:
        raise VerificationError(
            f"champion multiplicity {len(reps)} is below the pigeonhole floor {floor}"
        )
    log_bound = sum(math.log(p) for p in primes)
    curve_value = curve_ratio = None
    if champ_n >= 3:
        growth = math.log(champ_n) / math.log(math.log(champ_n))
        curve_value = math.exp(curve_c * growth)
        curve_ratio = math.log(log_bound) / growth
    return ChampionReport(
        n=champ_n,
        representations=tuple(reps),
        distinct_primes=primes,
        log_gcd_lower_bound=log_bound,
        pigeonhole_floor=floor,
        pair_count=len(pairs),
        kernel=kernel,
        kernel_omega=kernel_omega,
        curve_value=curve_value,
        curve_ratio=curve_ratio,
    )


def verify_champion(report: ChampionReport, params: ChampionParams) -> ChampionReport:
    """Certify the report: every distinct prime must divide both cyclotomic values.

    A failed check raises VerificationError; it would mean the pigeonhole
    certificate is unsound, so it is never downgraded.
    """
    for p in report.distinct_primes:
        if eval_mod_prime(params.index_a, params.a, report.n, p) != 0:
            raise VerificationError(
                f"{p} does not divide Phi_{params.index_a}({params.a}^{report.n})"
            )
        if eval_mod_prime(params.N, params.b, report.n, p) != 0:
            raise VerificationError(
                f"{p} does not divide Phi_{params.N}({params.b}^{report.n})"
            )
    return replace(report, verified=True)


def run_champion(params: ChampionParams, jobs: int = 1) -> ChampionReport:
    """Full pipeline: enumerate pairs, pigeonhole, certify."""
    lcm_idx = params.lcm_index
    kernel, omega = build_kernel(params.x, params.delta, lcm_idx)
    pairs = enumerate_pairs(params, jobs=jobs)
    report = pigeonhole_champion(
        pairs, kernel, lcm_idx, params.x, curve_c=params.curve_c, kernel_omega=omega
    )
    return verify_champion(report, params)


def champion_generalized(params: ChampionParams, jobs: int = 1) -> ChampionReport:
    """Mixed-index pipeline; with M == N it reproduces the single-index run."""
    if params.M is None:
        params = replace(params, M=params.N)
    return run_champion(params, jobs=jobs)
