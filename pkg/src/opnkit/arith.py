"""Exact divisor-sum arithmetic over arbitrary-precision integers.

Everything here is integer-exact: no floating point enters any code path.
The three divisor quantities are the sum of divisors sigma(n), the
deficiency D(n) = 2n - sigma(n), and the aliquot sum s(n) = sigma(n) - n,
tied together by D(n) + s(n) = n.

sigma is computed multiplicatively from a prime factorization, so the
module carries its own factorization engine: lookup against a cached
smallest-prime-factor table for small inputs, trial division by a small
prime table next, then Pollard rho (Brent variant) with an iteration
budget.  When a composite cofactor survives the budget the engine raises
EffortExceededError instead of ever returning a wrong factorization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache
from math import gcd, isqrt, prod

import numpy as np

__all__ = [
    "EffortExceededError",
    "FactorConfig",
    "DEFAULT_CONFIG",
    "PrimalityResult",
    "Factorization",
    "SpoofFactor",
    "SpoofFactorization",
    "SigmaTriple",
    "primes_below",
    "is_prime",
    "classify_prime",
    "factorize",
    "divisor_sum_geometric",
    "sigma",
    "sigma_prime_power",
    "deficiency",
    "aliquot",
    "sigma_triple",
    "spoof_sigma",
]


class EffortExceededError(Exception):
    """Factorization gave up within the configured effort budget."""


@dataclass(frozen=True)
class FactorConfig:
    """Effort knobs for the factorization and primality engines."""

    rho_iterations: int = 200_000   # Pollard rho budget per attempt
    rho_restarts: int = 24          # attempts with fresh parameters before giving up
    mr_rounds: int = 24             # extra probabilistic rounds above 64 bits


DEFAULT_CONFIG = FactorConfig()

# Complete witness set: Miller-Rabin with these bases is deterministic for
# every n below 2^64 (and in fact below 3.3 * 10^24).
_MR_WITNESSES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64

_TRIAL_TIER_BOUND = 1_000_000       # below this, primality is pure trial division
_SMALL_PRIME_LIMIT = 10_000         # trial-division table for the factorizer
_BIG_TRIAL_LIMIT = 1_000_000        # mandatory trial division above 64 bits
_SPF_LIMIT = 1 << 20                # smallest-prime-factor lookup covers n <= this


def primes_below(limit: int) -> np.ndarray:
    """All primes p < limit, ascending, as an int64 array."""
    if limit <= 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(limit - 1) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


@cache
def _small_primes() -> tuple[int, ...]:
    return tuple(int(p) for p in primes_below(_SMALL_PRIME_LIMIT))


@cache
def _big_trial_primes() -> tuple[int, ...]:
    return tuple(int(p) for p in primes_below(_BIG_TRIAL_LIMIT))


@cache
def _spf_table() -> np.ndarray:
    """Smallest prime factor of every n <= _SPF_LIMIT (spf[0] and spf[1] unused)."""
    limit = _SPF_LIMIT
    spf = np.arange(limit + 1, dtype=np.int32)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            seg = spf[p * p :: p]
            seg[seg == np.arange(p * p, limit + 1, p, dtype=np.int32)] = p
    spf.setflags(write=False)
    return spf


@dataclass(frozen=True)
class PrimalityResult:
    """Verdict plus whether it is proven or merely probable."""

    is_prime: bool
    proven: bool


def _miller_rabin(n: int, bases) -> bool:
    # n odd, n > 2; strong-probable-prime test to each base
    d = n - 1
    r = 0
    while d % 2 == 0:
        r += 1
        d //= 2
    for a in bases:
        a %= n
        if a == 0:
            continue
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


def classify_prime(n: int, *, rounds: int = DEFAULT_CONFIG.mr_rounds) -> PrimalityResult:
    """Primality verdict for n >= 0.

    Deterministic and exact below 2^64 (trial division for small n, then
    Miller-Rabin with a complete witness set).  Above 2^64 a "prime"
    verdict is probable only: trial division by every prime below 10^6,
    then the configured number of probabilistic rounds.
    """
    if n < 0:
        raise ValueError("primality is defined for non-negative integers")
    if n < 2:
        return PrimalityResult(False, True)
    if n < _TRIAL_TIER_BOUND:
        for p in _small_primes():
            if p * p > n:
                break
            if n % p == 0:
                return PrimalityResult(n == p, True)
        return PrimalityResult(True, True)
    if n % 2 == 0:
        return PrimalityResult(False, True)
    if n < _DETERMINISTIC_LIMIT:
        return PrimalityResult(_miller_rabin(n, _MR_WITNESSES_64), True)
    for p in _big_trial_primes():
        if n % p == 0:
            return PrimalityResult(False, True)
    rng = random.Random(n % (1 << 61))
    bases = list(_MR_WITNESSES_64) + [rng.randrange(2, n - 1) for _ in range(rounds)]
    if not _miller_rabin(n, bases):
        return PrimalityResult(False, True)
    return PrimalityResult(True, False)


def is_prime(n: int, *, rounds: int = DEFAULT_CONFIG.mr_rounds) -> bool:
    return classify_prime(n, rounds=rounds).is_prime


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: ((p1, e1), (p2, e2), ...) with p1 < p2 < ...

    The empty factorization is the value 1.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("prime bases must be strictly ascending and >= 2")
            if e < 1:
                raise ValueError("exponents must be positive")
            prev = p

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.factors)


def _pollard_brent(n: int, iterations: int, rng: random.Random) -> int | None:
    """One Brent-cycle attempt at a nontrivial factor of odd composite n."""
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    spent = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        spent += r
        r *= 2
        if spent > iterations:
            return None
    if g == n:
        # batched gcd overshot; replay one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _split_composite(n: int, out: dict[int, int], config: FactorConfig) -> None:
    """Accumulate the prime factorization of n (no factor below 10^4) into out."""
    if n == 1:
        return
    if is_prime(n, rounds=config.mr_rounds):
        out[n] = out.get(n, 0) + 1
        return
    root = isqrt(n)
    if root * root == n:
        _split_composite(root, out, config)
        _split_composite(root, out, config)
        return
    rng = random.Random(n % (1 << 61) ^ 0x9E3779B9)
    for _ in range(config.rho_restarts):
        d = _pollard_brent(n, config.rho_iterations, rng)
        if d is not None and 1 < d < n:
            _split_composite(d, out, config)
            _split_composite(n // d, out, config)
            return
    raise EffortExceededError(
        f"composite cofactor {n} ({n.bit_length()} bits) survived "
        f"{config.rho_restarts} Pollard-rho attempts of {config.rho_iterations} iterations"
    )


def factorize(n: int, config: FactorConfig = DEFAULT_CONFIG) -> Factorization:
    """Canonical factorization of n >= 1.

    Raises EffortExceededError when a composite cofactor survives the
    configured Pollard-rho budget; never returns a partial answer.
    """
    if n < 1:
        raise ValueError("factorize is defined for n >= 1")
    if n == 1:
        return Factorization(())
    if n <= _SPF_LIMIT:
        spf = _spf_table()
        out: dict[int, int] = {}
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
        return Factorization(tuple(sorted(out.items())))
    out = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n < _SMALL_PRIME_LIMIT * _SMALL_PRIME_LIMIT:
            out[n] = out.get(n, 0) + 1  # cofactor below table^2 is prime
        else:
            _split_composite(n, out, config)
    return Factorization(tuple(sorted(out.items())))


def divisor_sum_geometric(base: int, exponent: int) -> int:
    """1 + base + base^2 + ... + base^exponent, exactly."""
    if base < 2:
        raise ValueError("base must be at least 2")
    if exponent < 1:
        raise ValueError("exponent must be positive")
    return (base ** (exponent + 1) - 1) // (base - 1)


def sigma(n: int, config: FactorConfig = DEFAULT_CONFIG) -> int:
    """Sum of all positive divisors of n >= 1."""
    if n < 1:
        raise ValueError("sigma is defined for n >= 1")
    if n == 1:
        return 1
    return prod(divisor_sum_geometric(p, e) for p, e in factorize(n, config))


def sigma_range(limit: int) -> np.ndarray:
    """sigma(n) for every n in 1..limit as int64, sig[n] = sigma(n).

    Harmonic divisor sieve, O(limit log limit): the bulk companion to
    sigma() for exhaustive sweeps.  Index 0 is unused and holds 0.
    Exact in int64 for any limit that fits in memory.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    sig = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        sig[d::d] += d
    return sig


def sigma_prime_power(p: int, k: int) -> int:
    """sigma(p^k) for prime p, evaluated as the geometric sum."""
    if k < 1:
        raise ValueError("exponent must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return divisor_sum_geometric(p, k)


def deficiency(n: int, config: FactorConfig = DEFAULT_CONFIG) -> int:
    """2n - sigma(n); negative exactly when n is abundant."""
    return 2 * n - sigma(n, config)


def aliquot(n: int, config: FactorConfig = DEFAULT_CONFIG) -> int:
    """Sum of the proper divisors of n, sigma(n) - n."""
    return sigma(n, config) - n


@dataclass(frozen=True)
class SigmaTriple:
    """sigma(n), deficiency 2n - sigma(n), and aliquot sum sigma(n) - n."""

    sigma: int
    deficiency: int
    aliquot: int


def sigma_triple(n: int, config: FactorConfig = DEFAULT_CONFIG) -> SigmaTriple:
    """All three divisor quantities of n from a single factorization."""
    s = sigma(n, config)
    return SigmaTriple(sigma=s, deficiency=2 * n - s, aliquot=s - n)


@dataclass(frozen=True)
class SpoofFactor:
    """One base^exponent term; pseudo bases are treated as prime regardless."""

    base: int
    exponent: int
    pseudo: bool = False


@dataclass(frozen=True)
class SpoofFactorization:
    """Pairwise-coprime factor list where flagged bases pose as primes.

    Bases not flagged pseudo must actually be prime, so on flag-free input
    the spoof divisor sum agrees with the honest sigma of the product.
    """

    factors: tuple[SpoofFactor, ...]

    def validate(self) -> None:
        for f in self.factors:
            if f.base < 2:
                raise ValueError(f"base {f.base} must be at least 2")
            if f.exponent < 1:
                raise ValueError(f"exponent of base {f.base} must be positive")
            if not f.pseudo and not is_prime(f.base):
                raise ValueError(f"base {f.base} is not prime and not flagged pseudo")
        for i, a in enumerate(self.factors):
            for b in self.factors[i + 1 :]:
                if gcd(a.base, b.base) != 1:
                    raise ValueError(f"bases {a.base} and {b.base} are not coprime")

    @property
    def value(self) -> int:
        return prod(f.base**f.exponent for f in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self):
        return ",".join(
            f"{f.base}^{f.exponent}{'!' if f.pseudo else ''}" for f in self.factors
        )


def spoof_sigma(f: SpoofFactorization) -> int:
    """Divisor sum of a spoof factorization, every base treated as prime."""
    f.validate()
    return prod(divisor_sum_geometric(t.base, t.exponent) for t in f.factors)
