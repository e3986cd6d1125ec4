"""Exact identity chain linking the two halves of an Euler decomposition.

A candidate is written n = p^k * m^2 with p == k == 1 (mod 4) and
gcd(p, m) = 1.  When sigma(n) = 2n, five quotients built from sigma, the
deficiency D and the aliquot sum s all collapse to one integer
g = gcd(m^2, sigma(m^2)):

    q1 = sigma(m^2) / p^k
    q2 = 2 m^2 / sigma(p^k)
    q3 = D(m^2) / s(p^k)
    q4 = s(m^2) / (D(p^k) / 2)
    q5 = g

with the cross ratio D(p^k) D(m^2) / (s(p^k) s(m^2)) = 2 and the product
form 2 D(m^2) s(m^2) / (D(p^k) s(p^k)) = g^2.  Everything is evaluated in
exact rational arithmetic (reduced Fractions, equality by
cross-multiplication), so the chain doubles as a perfection test: it
holds as stated if and only if the decomposition is perfect.

No odd perfect number is known, so the only nontrivial end-to-end
fixture is the Descartes number 3^2 7^2 11^2 13^2 22021, perfect once
the composite 22021 = 19^2 * 61 is treated as prime.  Spoof mode exists
for exactly that: sigma(p^k) is evaluated as the geometric sum whether
or not p is prime, while the m^2 half keeps its honest divisor sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import (
    DEFAULT_CONFIG,
    FactorConfig,
    SpoofFactorization,
    divisor_sum_geometric,
    is_prime,
    sigma,
)

__all__ = [
    "TRUE_SIGMA",
    "SPOOF",
    "EulerTriple",
    "IdentityReport",
    "validate_euler_form",
    "is_perfect_decomposition",
    "compute_identity_report",
    "report_from_spoof",
]

TRUE_SIGMA = "true-sigma"
SPOOF = "spoof"


def _check_mode(sigma_mode: str) -> None:
    if sigma_mode not in (TRUE_SIGMA, SPOOF):
        raise ValueError(f"sigma_mode must be {TRUE_SIGMA!r} or {SPOOF!r}, got {sigma_mode!r}")


@dataclass(frozen=True)
class EulerTriple:
    """Candidate decomposition n = p^k * m^2.

    In true-sigma contexts p must be genuinely prime; in spoof contexts
    it only has to satisfy the congruence and coprimality constraints.
    """

    p: int
    k: int
    m: int

    @property
    def value(self) -> int:
        return self.p**self.k * self.m**2


def validate_euler_form(t: EulerTriple, sigma_mode: str = TRUE_SIGMA) -> tuple[bool, list[str]]:
    """Check the structural constraints on (p, k, m).

    Returns (ok, reasons) where reasons lists every violated constraint
    rather than stopping at the first.  Primality of p is required only
    in true-sigma mode.
    """
    _check_mode(sigma_mode)
    reasons = []
    if t.p < 2:
        reasons.append(f"special base {t.p} must be at least 2")
    if t.k < 1:
        reasons.append(f"special exponent {t.k} must be positive")
    if t.m < 1:
        reasons.append(f"square root part {t.m} must be positive")
    if t.p % 4 != 1:
        reasons.append(f"special base {t.p} is {t.p % 4} mod 4, needs 1")
    if t.k % 4 != 1:
        reasons.append(f"special exponent {t.k} is {t.k % 4} mod 4, needs 1")
    if t.m % 2 == 0:
        reasons.append(f"square root part {t.m} must be odd")
    if t.m > 0 and t.p > 1 and gcd(t.p, t.m) != 1:
        reasons.append(f"{t.p} divides {t.m}, parts are not coprime")
    if sigma_mode == TRUE_SIGMA and t.p >= 2 and not is_prime(t.p):
        reasons.append(f"special base {t.p} is not prime")
    return (not reasons, reasons)


def _require_valid(t: EulerTriple, sigma_mode: str) -> None:
    ok, reasons = validate_euler_form(t, sigma_mode)
    if not ok:
        raise ValueError("; ".join(reasons))


def is_perfect_decomposition(
    t: EulerTriple, sigma_mode: str = TRUE_SIGMA, config: FactorConfig = DEFAULT_CONFIG
) -> bool:
    """sigma(p^k) * sigma(m^2) == 2 p^k m^2 under the chosen evaluation.

    Spoof mode takes sigma(p^k) as the geometric sum regardless of p's
    primality; the m^2 half is always the honest divisor sum.
    """
    _require_valid(t, sigma_mode)
    sigma_pk = divisor_sum_geometric(t.p, t.k)
    return sigma_pk * sigma(t.m**2, config) == 2 * t.value


@dataclass(frozen=True)
class IdentityReport:
    """All chain quantities for one decomposition, exactly.

    g is gcd(m^2, sigma(m^2)); the quotients q1..q4 are reduced
    Fractions and q5 is g itself.  ratio is
    D(p^k) D(m^2) / (s(p^k) s(m^2)), or None when m = 1 makes the
    denominator vanish.  star_lhs is 2 D(m^2) s(m^2) / (D(p^k) s(p^k)).
    all_identities_hold records whether the chain collapsed completely:
    q1 = q2 = q3 = q4 = q5, ratio = 2 and star_lhs = g^2.
    """

    triple: EulerTriple
    sigma_mode: str
    sigma_pk: int
    sigma_m2: int
    d_pk: int
    d_m2: int
    s_pk: int
    s_m2: int
    g: int
    q1: Fraction
    q2: Fraction
    q3: Fraction
    q4: Fraction
    ratio: Fraction | None
    star_lhs: Fraction
    all_identities_hold: bool

    @property
    def q5(self) -> Fraction:
        return Fraction(self.g)

    @property
    def perfect(self) -> bool:
        """Perfection of the decomposed value, as witnessed by the chain."""
        return self.all_identities_hold


def _build_report(t: EulerTriple, sigma_mode: str, sigma_pk: int, sigma_m2: int) -> IdentityReport:
    pk = t.p**t.k
    m2 = t.m**2
    if sigma_pk % 2 != 0:
        raise ValueError(
            f"sigma({t.p}^{t.k}) = {sigma_pk} is odd, so D(p^k)/2 is not an "
            "integer; p == k == 1 (mod 4) rules this out"
        )
    d_pk = 2 * pk - sigma_pk
    s_pk = sigma_pk - pk
    d_m2 = 2 * m2 - sigma_m2
    s_m2 = sigma_m2 - m2

    g = gcd(m2, sigma_m2)
    q1 = Fraction(sigma_m2, pk)
    q2 = Fraction(2 * m2, sigma_pk)
    q3 = Fraction(d_m2, s_pk)            # s_pk = 1 + p + ... + p^(k-1) >= 1
    q4 = Fraction(2 * s_m2, d_pk)        # prime powers are deficient, d_pk >= 1
    ratio = Fraction(d_pk * d_m2, s_pk * s_m2) if s_m2 != 0 else None
    star_lhs = Fraction(2 * d_m2 * s_m2, d_pk * s_pk)

    holds = (
        q1 == q2 == q3 == q4 == g
        and ratio == 2
        and star_lhs == g * g
    )
    return IdentityReport(
        triple=t,
        sigma_mode=sigma_mode,
        sigma_pk=sigma_pk,
        sigma_m2=sigma_m2,
        d_pk=d_pk,
        d_m2=d_m2,
        s_pk=s_pk,
        s_m2=s_m2,
        g=g,
        q1=q1,
        q2=q2,
        q3=q3,
        q4=q4,
        ratio=ratio,
        star_lhs=star_lhs,
        all_identities_hold=holds,
    )


def compute_identity_report(
    t: EulerTriple, sigma_mode: str = TRUE_SIGMA, config: FactorConfig = DEFAULT_CONFIG
) -> IdentityReport:
    """Evaluate the whole chain for a decomposition.

    The report is produced even when the decomposition is not perfect
    (all_identities_hold then comes out false, the negative control);
    structural violations of the Euler form are rejected instead.
    """
    _require_valid(t, sigma_mode)
    sigma_pk = divisor_sum_geometric(t.p, t.k)
    sigma_m2 = sigma(t.m**2, config)
    return _build_report(t, sigma_mode, sigma_pk, sigma_m2)


def report_from_spoof(f: SpoofFactorization, config: FactorConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Evaluate the chain for a whole spoof factorization.

    The factor list must contain exactly one term of odd exponent; that
    term plays p^k and the remaining terms form m^2.  Both halves honor
    the spoof: flagged bases count as prime inside every divisor sum.
    """
    f.validate()
    odd = [t for t in f.factors if t.exponent % 2 == 1]
    if len(odd) != 1:
        raise ValueError(
            f"need exactly one odd-exponent factor to play p^k, found {len(odd)}"
        )
    special = odd[0]
    m = 1
    sigma_m2 = 1
    for t in f.factors:
        if t is special:
            continue
        m *= t.base ** (t.exponent // 2)
        sigma_m2 *= divisor_sum_geometric(t.base, t.exponent)
    triple = EulerTriple(p=special.base, k=special.exponent, m=m)
    _require_valid(triple, SPOOF)
    sigma_pk = divisor_sum_geometric(special.base, special.exponent)
    report = _build_report(triple, SPOOF, sigma_pk, sigma_m2)
    if all(not t.pseudo for t in f.factors):
        # flag-free input must agree with the honest evaluation
        assert report.sigma_m2 == sigma(triple.m**2, config)
    return report
