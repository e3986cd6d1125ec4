"""Residue-class analysis for the two halves of an Euler decomposition.

With p == k == 1 (mod 4), the divisor quantities of the prime-power half
sit in residue classes mod 8 fixed by (p mod 8, k mod 8) alone, and the
square half's quantities mod 4 are fixed by sigma(m^2) mod 4.  Five
lookup tables carry that content; lemma_oracle re-derives every entry by
a brute-force modular sweep so the tables never have to be trusted.

Feeding the tables into the product identity
2 D(m^2) s(m^2) = g^2 D(p^k) s(p^k) with g odd leaves four parameter
combinations where the two sides cannot match.  certify_case proves each
impossibility by exhausting all variable residues modulo 16 and showing
the attained residue sets are disjoint.  The class that survives is what
forced_sigma_m2_mod4 reports: sigma(m^2) == 1 (mod 4) iff p == k (mod 8).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arith import primes_below

__all__ = [
    "ResidueClass",
    "SIGMA_PK_MOD8",
    "DEFICIENCY_PK_MOD8",
    "ALIQUOT_PK_MOD8",
    "DEFICIENCY_M2_MOD4",
    "ALIQUOT_M2_MOD4",
    "sigma_pk_mod8",
    "deficiency_pk_mod8",
    "aliquot_pk_mod8",
    "deficiency_m2_mod4",
    "aliquot_m2_mod4",
    "forced_sigma_m2_mod4",
    "TheoremCase",
    "THEOREM_CASES",
    "InfeasibilityCertificate",
    "certify_case",
    "Mismatch",
    "OracleReport",
    "lemma_oracle",
]


@dataclass(frozen=True)
class ResidueClass:
    """value mod modulus, normalized to 0 <= value < modulus."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus}")

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


# The tables are the content; every entry is re-derivable from
# sigma(p^k) = 1 + p + ... + p^k with p^2 == 1 (mod 8) for odd p,
# and lemma_oracle checks them against primes directly.
SIGMA_PK_MOD8 = {(1, 1): 2, (1, 5): 6, (5, 1): 6, (5, 5): 2}
DEFICIENCY_PK_MOD8 = {(1, 1): 0, (1, 5): 4, (5, 1): 4, (5, 5): 0}
ALIQUOT_PK_MOD8 = {(1, 1): 1, (1, 5): 5, (5, 1): 1, (5, 5): 5}
DEFICIENCY_M2_MOD4 = {1: 1, 3: 3}
ALIQUOT_M2_MOD4 = {1: 0, 3: 2}


def _check_pk_classes(p_mod8: int, k_mod8: int) -> None:
    if p_mod8 not in (1, 5):
        raise ValueError(f"p mod 8 must be 1 or 5, got {p_mod8}")
    if k_mod8 not in (1, 5):
        raise ValueError(f"k mod 8 must be 1 or 5, got {k_mod8}")


def _check_sigma_class(sigma_m2_mod4: int) -> None:
    if sigma_m2_mod4 not in (1, 3):
        raise ValueError(
            f"sigma(m^2) mod 4 must be 1 or 3 (it is odd for odd m), got {sigma_m2_mod4}"
        )


def sigma_pk_mod8(p_mod8: int, k_mod8: int) -> ResidueClass:
    """sigma(p^k) mod 8 for p == k == 1 (mod 4), keyed by the classes mod 8."""
    _check_pk_classes(p_mod8, k_mod8)
    return ResidueClass(SIGMA_PK_MOD8[(p_mod8, k_mod8)], 8)


def deficiency_pk_mod8(p_mod8: int, k_mod8: int) -> ResidueClass:
    """D(p^k) = 2p^k - sigma(p^k) mod 8."""
    _check_pk_classes(p_mod8, k_mod8)
    return ResidueClass(DEFICIENCY_PK_MOD8[(p_mod8, k_mod8)], 8)


def aliquot_pk_mod8(p_mod8: int, k_mod8: int) -> ResidueClass:
    """s(p^k) = sigma(p^k) - p^k mod 8."""
    _check_pk_classes(p_mod8, k_mod8)
    return ResidueClass(ALIQUOT_PK_MOD8[(p_mod8, k_mod8)], 8)


def deficiency_m2_mod4(sigma_m2_mod4: int) -> ResidueClass:
    """D(m^2) mod 4 from sigma(m^2) mod 4, using m^2 == 1 (mod 4)."""
    _check_sigma_class(sigma_m2_mod4)
    return ResidueClass(DEFICIENCY_M2_MOD4[sigma_m2_mod4], 4)


def aliquot_m2_mod4(sigma_m2_mod4: int) -> ResidueClass:
    """s(m^2) mod 4 from sigma(m^2) mod 4."""
    _check_sigma_class(sigma_m2_mod4)
    return ResidueClass(ALIQUOT_M2_MOD4[sigma_m2_mod4], 4)


def forced_sigma_m2_mod4(p_mod8: int, k_mod8: int) -> ResidueClass:
    """The one class of sigma(m^2) mod 4 the four impossibilities leave open.

    1 when p == k (mod 8), else 3: the biconditional form of the theorem.
    """
    _check_pk_classes(p_mod8, k_mod8)
    return ResidueClass(1 if p_mod8 == k_mod8 else 3, 4)


@dataclass(frozen=True)
class TheoremCase:
    """One of the four impossible parameter combinations.

    Each case assumes a class for sigma(m^2) mod 4 on top of the
    (p mod 8, k mod 8) classes; the lookup tables then pin every factor
    of 2 D(m^2) s(m^2) = g^2 D(p^k) s(p^k) to a residue class, and the
    resulting symbolic equation has no integer solutions.
    """

    case_id: int
    p_mod8: int
    k_mod8: int
    assumed_sigma_m2_mod4: int

    def __post_init__(self):
        if not 1 <= self.case_id <= 4:
            raise ValueError("case_id must be 1..4")
        _check_pk_classes(self.p_mod8, self.k_mod8)
        _check_sigma_class(self.assumed_sigma_m2_mod4)

    @property
    def d_m2_mod4(self) -> int:
        return DEFICIENCY_M2_MOD4[self.assumed_sigma_m2_mod4]

    @property
    def s_m2_mod4(self) -> int:
        return ALIQUOT_M2_MOD4[self.assumed_sigma_m2_mod4]

    @property
    def d_pk_mod8(self) -> int:
        return DEFICIENCY_PK_MOD8[(self.p_mod8, self.k_mod8)]

    @property
    def s_pk_mod8(self) -> int:
        return ALIQUOT_PK_MOD8[(self.p_mod8, self.k_mod8)]

    @property
    def equation(self) -> str:
        """The case's symbolic equation, free variables a, b, x, c, d."""
        return (
            f"2(4a + {self.d_m2_mod4})(4b + {self.s_m2_mod4})"
            f" = (8x + 1)(8c + {self.d_pk_mod8})(8d + {self.s_pk_mod8})"
        )


# Ordered so that the assumed class is exactly the one forced_sigma_m2_mod4 excludes.
THEOREM_CASES = (
    TheoremCase(1, 1, 1, 3),
    TheoremCase(2, 1, 5, 1),
    TheoremCase(3, 5, 1, 1),
    TheoremCase(4, 5, 5, 3),
)


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """Attained residue sets of both sides of a case equation.

    Disjoint sets prove the equation has no integer solutions: any
    solution would make both sides equal, hence equal mod the modulus.
    """

    case_id: int
    modulus: int
    lhs_residues: frozenset[int]
    rhs_residues: frozenset[int]
    disjoint: bool

    def __post_init__(self):
        if self.disjoint != (not self.lhs_residues & self.rhs_residues):
            raise ValueError("disjoint flag contradicts the residue sets")

    def as_text(self) -> str:
        verdict = "disjoint" if self.disjoint else "OVERLAP"
        return (
            f"case {self.case_id} mod {self.modulus}: "
            f"lhs {sorted(self.lhs_residues)} vs rhs {sorted(self.rhs_residues)} -> {verdict}"
        )


def certify_case(c: TheoremCase, enumeration_modulus: int = 16) -> InfeasibilityCertificate:
    """Enumerate both sides of the case equation over all variable residues.

    Every integer assignment of the free variables lands, mod the
    enumeration modulus, in one of the collected residues, so disjoint
    sets certify that no assignment satisfies the equation.  Modulus 16
    separates all four cases.
    """
    m = enumeration_modulus
    if m < 8 or m % 8 != 0:
        raise ValueError(f"enumeration modulus must be a positive multiple of 8, got {m}")
    lhs = {
        2 * (4 * a + c.d_m2_mod4) * (4 * b + c.s_m2_mod4) % m
        for a in range(m)
        for b in range(m)
    }
    rhs = {
        (8 * x + 1) * (8 * cc + c.d_pk_mod8) * (8 * d + c.s_pk_mod8) % m
        for x in range(m)
        for cc in range(m)
        for d in range(m)
    }
    return InfeasibilityCertificate(
        case_id=c.case_id,
        modulus=m,
        lhs_residues=frozenset(lhs),
        rhs_residues=frozenset(rhs),
        disjoint=not lhs & rhs,
    )


@dataclass(frozen=True)
class Mismatch:
    """A (p, k) pair where a sweep disagreed with a lookup table."""

    p: int
    k: int
    quantity: str
    observed: int
    expected: int


@dataclass(frozen=True)
class OracleReport:
    """Outcome of a brute-force sweep against the mod-8 tables.

    checks counts (p, k) pairs (each pair compares all three quantities).
    observed_residues maps (p mod 8, k mod 8) to the residue sets the
    sweep actually attained, keyed by quantity name: the raw material for
    any finer-modulus investigation.
    """

    prime_bound: int
    k_values: tuple[int, ...]
    checks: int
    mismatches: tuple[Mismatch, ...]
    observed_residues: dict = field(repr=False)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _sweep_chunk(primes: np.ndarray, k_values: tuple[int, ...]):
    """Compare sigma/D/s of p^k mod 8 against the tables for one prime block.

    Works purely mod 8 via iterated multiplication; p^k itself is never
    built.  Returns (checks, mismatches, observed) for merging.
    """
    checks = 0
    mismatches: list[Mismatch] = []
    observed: dict[tuple[int, int], dict[str, set[int]]] = {}
    pm8 = primes % 8
    for k in k_values:
        power = np.ones_like(pm8)
        acc = np.ones_like(pm8)
        for _ in range(k):
            power = power * pm8 % 8
            acc = (acc + power) % 8
        sig = acc
        dfc = (2 * power - sig) % 8
        alq = (sig - power) % 8
        km8 = k % 8
        exp_sig = np.where(pm8 == 1, SIGMA_PK_MOD8[(1, km8)], SIGMA_PK_MOD8[(5, km8)])
        exp_dfc = np.where(pm8 == 1, DEFICIENCY_PK_MOD8[(1, km8)], DEFICIENCY_PK_MOD8[(5, km8)])
        exp_alq = np.where(pm8 == 1, ALIQUOT_PK_MOD8[(1, km8)], ALIQUOT_PK_MOD8[(5, km8)])
        checks += len(primes)
        for cls in (1, 5):
            sel = pm8 == cls
            if not sel.any():
                continue
            bucket = observed.setdefault((cls, km8), {"sigma": set(), "deficiency": set(), "aliquot": set()})
            bucket["sigma"].update(np.unique(sig[sel]).tolist())
            bucket["deficiency"].update(np.unique(dfc[sel]).tolist())
            bucket["aliquot"].update(np.unique(alq[sel]).tolist())
        bad = (sig != exp_sig) | (dfc != exp_dfc) | (alq != exp_alq)
        for i in np.nonzero(bad)[0]:
            p = int(primes[i])
            for name, got, exp in (
                ("sigma", sig[i], exp_sig[i]),
                ("deficiency", dfc[i], exp_dfc[i]),
                ("aliquot", alq[i], exp_alq[i]),
            ):
                if got != exp:
                    mismatches.append(Mismatch(p, k, name, int(got), int(exp)))
    return checks, mismatches, observed


def _merge_observed(into: dict, part: dict) -> None:
    for key, quantities in part.items():
        bucket = into.setdefault(key, {"sigma": set(), "deficiency": set(), "aliquot": set()})
        for name, values in quantities.items():
            bucket[name].update(values)


def lemma_oracle(
    prime_bound: int,
    k_values,
    *,
    workers: int = 1,
) -> OracleReport:
    """Brute-force every table entry over all primes p <= prime_bound, p == 1 (mod 4).

    Each k must be == 1 (mod 4).  workers > 1 splits the prime range
    across threads; results merge by summation, so the report is
    identical either way.
    """
    if prime_bound < 5:
        raise ValueError("prime bound must be at least 5")
    ks = tuple(k_values)
    if not ks:
        raise ValueError("need at least one exponent")
    for k in ks:
        if k < 1 or k % 4 != 1:
            raise ValueError(f"exponent {k} is not 1 mod 4")
    primes = primes_below(prime_bound + 1)
    primes = primes[primes % 4 == 1]
    checks = 0
    mismatches: list[Mismatch] = []
    observed: dict = {}
    if workers <= 1 or len(primes) < 2 * workers:
        checks, mismatches, observed = _sweep_chunk(primes, ks)
    else:
        chunks = np.array_split(primes, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for c, mm, obs in pool.map(lambda ch: _sweep_chunk(ch, ks), chunks):
                checks += c
                mismatches.extend(mm)
                _merge_observed(observed, obs)
    return OracleReport(
        prime_bound=prime_bound,
        k_values=ks,
        checks=checks,
        mismatches=tuple(mismatches),
        observed_residues=observed,
    )
