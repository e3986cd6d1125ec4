"""Command-line front end for the verification suites.

One executable, six subcommands:

    sigma N                        divisor quantities of one integer
    verify-identities --spoof S    the exact identity chain on a factor spec
    verify-lemmas ...              brute-force sweep of the mod-8 tables
    certify-theorem [--modulus M]  the four residue-disjointness certificates
    sieve --bound N                special-prime survivors below N
    forced-class --p-mod8 X --k-mod8 Y

Every subcommand accepts --json (machine output), --quiet (drop per-item
detail lines in text mode) and --threads (worker count for the sweeps).
Exit codes: 0 all checks passed, 1 a verification check failed, 2 usage
or input error.  Verification suites emit a JSON object with the fields
"suite", "checks" and "failures"; sieve --json emits a bare array of hits.

Factor specs are comma-separated base^exp terms where a trailing "!"
marks a base to be treated as prime even if composite, e.g. the
Descartes number 3^2,7^2,11^2,13^2,22021^1!.  Exponent lists accept an
arithmetic-progression shorthand: 1,5,9,...,97.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .arith import EffortExceededError, SpoofFactor, SpoofFactorization, sigma_triple
from .congruences import THEOREM_CASES, certify_case, forced_sigma_m2_mod4, lemma_oracle
from .identities import report_from_spoof
from .sieve import sieve_special_primes

__all__ = ["CommandResult", "run", "main", "parse_factor_spec", "parse_k_list"]


@dataclass(frozen=True)
class CommandResult:
    """Exit code plus the stdout payload main() will print."""

    exit_code: int
    payload: str


def parse_factor_spec(text: str) -> SpoofFactorization:
    """Parse comma-separated base^exp terms, "!" suffix marking pseudo bases."""
    factors = []
    for term in text.split(","):
        term = term.strip()
        if not term:
            raise ValueError("empty term in factor spec")
        pseudo = term.endswith("!")
        if pseudo:
            term = term[:-1]
        base_text, sep, exp_text = term.partition("^")
        try:
            base = int(base_text)
            exponent = int(exp_text) if sep else 1
        except ValueError:
            raise ValueError(f"malformed factor term {term!r}") from None
        factors.append(SpoofFactor(base=base, exponent=exponent, pseudo=pseudo))
    f = SpoofFactorization(tuple(factors))
    f.validate()
    return f


def parse_k_list(text: str) -> list[int]:
    """Parse a comma-separated integer list; "..." continues the progression.

    "1,5,9,...,97" expands to 1, 5, 9, 13, ..., 97 (step taken from the
    last two explicit values; the terminal value must lie on the grid).
    """
    items = [t.strip() for t in text.split(",")]
    out: list[int] = []
    i = 0
    while i < len(items):
        tok = items[i]
        if tok == "...":
            if len(out) < 2 or i + 1 != len(items) - 1:
                raise ValueError('"..." needs two values before it and exactly one after')
            step = out[-1] - out[-2]
            if step <= 0:
                raise ValueError("ellipsis step must be positive")
            stop = int(items[i + 1])
            if stop < out[-1] or (stop - out[-1]) % step != 0:
                raise ValueError(f"{stop} is not reachable from {out[-1]} in steps of {step}")
            out.extend(range(out[-1] + step, stop + 1, step))
            i += 2
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise ValueError(f"malformed list entry {tok!r}") from None
            i += 1
    if not out:
        raise ValueError("empty exponent list")
    return out


def _json_dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _envelope(suite: str, checks: int, failures: list, **extra) -> dict:
    return {"suite": suite, "checks": checks, "failures": failures, **extra}


def _cmd_sigma(ns) -> CommandResult:
    t = sigma_triple(ns.n)
    if ns.json:
        payload = _json_dump(
            _envelope(
                "sigma", 1, [],
                n=ns.n, sigma=t.sigma, deficiency=t.deficiency, aliquot=t.aliquot,
            )
        )
    else:
        payload = f"σ={t.sigma} D={t.deficiency} s={t.aliquot}"
    return CommandResult(0, payload)


def _cmd_verify_identities(ns) -> CommandResult:
    spoof = parse_factor_spec(ns.spoof)
    r = report_from_spoof(spoof)
    checks = [
        ("q1 = g", r.q1 == r.g, f"q1 = {r.q1}"),
        ("q2 = g", r.q2 == r.g, f"q2 = {r.q2}"),
        ("q3 = g", r.q3 == r.g, f"q3 = {r.q3}"),
        ("q4 = g", r.q4 == r.g, f"q4 = {r.q4}"),
        ("ratio = 2", r.ratio == 2, f"ratio = {r.ratio if r.ratio is not None else 'undefined'}"),
        ("star_lhs = g^2", r.star_lhs == r.g * r.g, f"star_lhs = {r.star_lhs}"),
    ]
    failures = [{"check": name, "detail": detail} for name, ok, detail in checks if not ok]
    code = 0 if not failures else 1
    if ns.json:
        payload = _json_dump(
            _envelope(
                "verify-identities", len(checks), failures,
                p=r.triple.p, k=r.triple.k, m=r.triple.m, g=r.g,
                q1=str(r.q1), q2=str(r.q2), q3=str(r.q3), q4=str(r.q4),
                ratio=str(r.ratio) if r.ratio is not None else None,
                star_lhs=str(r.star_lhs),
                all_identities_hold=r.all_identities_hold,
            )
        )
        return CommandResult(code, payload)
    lines = []
    if not ns.quiet:
        lines.append(f"decomposition: p^k = {r.triple.p}^{r.triple.k}, m = {r.triple.m}")
        lines.append(f"g = gcd(m², σ(m²)) = {r.g}")
        for name, ok, detail in checks:
            lines.append(f"{detail}  [{name}: {'ok' if ok else 'FAIL'}]")
    lines.append(
        "all identities hold" if r.all_identities_hold
        else f"{len(failures)} of {len(checks)} identities failed"
    )
    return CommandResult(code, "\n".join(lines))


def _cmd_verify_lemmas(ns) -> CommandResult:
    ks = parse_k_list(ns.k_list)
    report = lemma_oracle(ns.prime_bound, ks, workers=ns.threads)
    failures = [
        {"p": m.p, "k": m.k, "quantity": m.quantity, "observed": m.observed, "expected": m.expected}
        for m in report.mismatches
    ]
    code = 0 if report.ok else 1
    if ns.json:
        observed = [
            {"p_mod8": pk[0], "k_mod8": pk[1]}
            | {name: sorted(vals) for name, vals in buckets.items()}
            for pk, buckets in sorted(report.observed_residues.items())
        ]
        payload = _json_dump(
            _envelope(
                "verify-lemmas", report.checks, failures,
                prime_bound=report.prime_bound, k_values=list(report.k_values),
                observed_residues=observed,
            )
        )
        return CommandResult(code, payload)
    lines = []
    if not ns.quiet:
        lines.append(
            f"swept primes p ≤ {report.prime_bound}, p ≡ 1 (mod 4), "
            f"exponents {ns.k_list}"
        )
    lines.append(f"{report.checks} (p, k) pairs checked, {len(report.mismatches)} mismatches")
    for m in report.mismatches[:20]:
        lines.append(f"  p={m.p} k={m.k} {m.quantity}: observed {m.observed}, table {m.expected}")
    return CommandResult(code, "\n".join(lines))


def _cmd_certify_theorem(ns) -> CommandResult:
    certs = [certify_case(c, ns.modulus) for c in THEOREM_CASES]
    failures = [
        {"case_id": cert.case_id, "overlap": sorted(cert.lhs_residues & cert.rhs_residues)}
        for cert in certs
        if not cert.disjoint
    ]
    code = 0 if not failures else 1
    if ns.json:
        payload = _json_dump(
            _envelope(
                "certify-theorem", len(certs), failures,
                modulus=ns.modulus,
                certificates=[
                    {
                        "case_id": cert.case_id,
                        "equation": case.equation,
                        "lhs_residues": sorted(cert.lhs_residues),
                        "rhs_residues": sorted(cert.rhs_residues),
                        "disjoint": cert.disjoint,
                    }
                    for case, cert in zip(THEOREM_CASES, certs)
                ],
            )
        )
        return CommandResult(code, payload)
    lines = []
    for case, cert in zip(THEOREM_CASES, certs):
        if not ns.quiet:
            lines.append(f"case {case.case_id}: {case.equation}")
        lines.append(cert.as_text())
    lines.append(
        "all four cases disjoint" if not failures
        else f"{len(failures)} case(s) failed to separate"
    )
    return CommandResult(code, "\n".join(lines))


def _cmd_sieve(ns) -> CommandResult:
    hits = sieve_special_primes(ns.bound, workers=ns.threads)
    if ns.json:
        payload = _json_dump([{"p": h.p, "root": h.root, "p_mod16": h.p_mod16} for h in hits])
        return CommandResult(0, payload)
    lines = [f"{h.p} {h.root} {h.p_mod16}" for h in hits]
    if not ns.quiet:
        lines.append(f"{len(hits)} special-prime survivor(s) below {ns.bound}")
    return CommandResult(0, "\n".join(lines))


def _cmd_forced_class(ns) -> CommandResult:
    r = forced_sigma_m2_mod4(ns.p_mod8, ns.k_mod8)
    if ns.json:
        payload = _json_dump(
            _envelope(
                "forced-class", 1, [],
                p_mod8=ns.p_mod8, k_mod8=ns.k_mod8, value=r.value, modulus=r.modulus,
            )
        )
    else:
        payload = f"σ(m²) ≡ {r.value} (mod {r.modulus})"
    return CommandResult(0, payload)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    common.add_argument("--quiet", action="store_true", help="suppress per-item detail lines")
    common.add_argument("--threads", type=int, default=1, metavar="T",
                        help="worker count for partitionable sweeps (default 1)")

    parser = argparse.ArgumentParser(
        prog="opnkit",
        description="verification suites for odd-perfect-number arithmetic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", parents=[common],
                       help="print σ, deficiency and aliquot sum of N")
    p.add_argument("n", type=int, help="integer to evaluate (arbitrary precision)")
    p.set_defaults(handler=_cmd_sigma)

    p = sub.add_parser("verify-identities", parents=[common],
                       help="check the exact identity chain on a factor spec")
    p.add_argument("--spoof", required=True, metavar="SPEC",
                   help="comma-separated base^exp terms, '!' marks pseudo-prime bases")
    p.set_defaults(handler=_cmd_verify_identities)

    p = sub.add_parser("verify-lemmas", parents=[common],
                       help="sweep the mod-8 residue tables against brute force")
    p.add_argument("--prime-bound", type=int, required=True, metavar="B",
                   help="check all primes p ≤ B with p ≡ 1 (mod 4)")
    p.add_argument("--k-list", required=True, metavar="L",
                   help="exponents ≡ 1 (mod 4), e.g. 1,5,9,...,97")
    p.set_defaults(handler=_cmd_verify_lemmas)

    p = sub.add_parser("certify-theorem", parents=[common],
                       help="prove the four impossibility cases by residue enumeration")
    p.add_argument("--modulus", type=int, default=16, metavar="M",
                   help="enumeration modulus, a multiple of 8 (default 16)")
    p.set_defaults(handler=_cmd_certify_theorem)

    p = sub.add_parser("sieve", parents=[common],
                       help="list special primes p < N with (p+1)/2 an odd square")
    p.add_argument("--bound", type=int, required=True, metavar="N")
    p.set_defaults(handler=_cmd_sieve)

    p = sub.add_parser("forced-class", parents=[common],
                       help="the one class of σ(m²) mod 4 left open for given p, k classes")
    p.add_argument("--p-mod8", type=int, required=True, choices=(1, 5))
    p.add_argument("--k-mod8", type=int, required=True, choices=(1, 5))
    p.set_defaults(handler=_cmd_forced_class)

    return parser


def run(argv) -> CommandResult:
    """Parse argv and execute; never raises for user-caused errors."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage/help; normalize its exit code
        code = exc.code if isinstance(exc.code, int) else 2
        return CommandResult(0 if code == 0 else 2, "")
    try:
        return ns.handler(ns)
    except (ValueError, EffortExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CommandResult(2, "")


def main() -> int:
    result = run(sys.argv[1:])
    if result.payload:
        print(result.payload)
    return result.exit_code
