import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opnkit.arith import (
    EffortExceededError,
    FactorConfig,
    Factorization,
    SpoofFactor,
    SpoofFactorization,
    aliquot,
    classify_prime,
    deficiency,
    divisor_sum_geometric,
    factorize,
    is_prime,
    primes_below,
    sigma,
    sigma_prime_power,
    sigma_range,
    sigma_triple,
    spoof_sigma,
)


@pytest.mark.parametrize(
    "n,expected",
    [
        (1, 1),
        (2, 3),
        (6, 12),
        (28, 56),
        (9, 13),
        (225, 403),
        (496, 992),
        (9018009, 18035199),
    ],
)
def test_sigma_known_values(n, expected):
    assert sigma(n) == expected


@pytest.mark.parametrize(
    "n,expected",
    [(6, 0), (28, 0), (9, 5), (12, -4), (1, 1), (9018009, 819)],
)
def test_deficiency_known_values(n, expected):
    assert deficiency(n) == expected


@pytest.mark.parametrize(
    "n,expected",
    [(1, 0), (6, 6), (225, 178), (9018009, 9017190)],
)
def test_aliquot_known_values(n, expected):
    assert aliquot(n) == expected


def test_sigma_rejects_nonpositive():
    with pytest.raises(ValueError):
        sigma(0)
    with pytest.raises(ValueError):
        deficiency(-3)


def test_sigma_triple_bundles_all_three():
    t = sigma_triple(9018009)
    assert (t.sigma, t.deficiency, t.aliquot) == (18035199, 819, 9017190)


@given(st.integers(min_value=1, max_value=10**6))
def test_deficiency_plus_aliquot_is_n(n):
    assert deficiency(n) + aliquot(n) == n


@given(st.integers(min_value=1, max_value=3000), st.integers(min_value=1, max_value=3000))
def test_sigma_multiplicative_on_coprime_parts(a, b):
    from math import gcd

    if gcd(a, b) == 1:
        assert sigma(a * b) == sigma(a) * sigma(b)


@pytest.mark.parametrize(
    "p,k,expected",
    [(2, 5, 63), (13, 5, 402234), (17, 1, 18), (22021, 1, 22022)],
)
def test_divisor_sum_geometric(p, k, expected):
    assert divisor_sum_geometric(p, k) == expected


def test_sigma_prime_power_requires_prime_base():
    assert sigma_prime_power(13, 5) == 402234
    with pytest.raises(ValueError):
        sigma_prime_power(22021, 1)
    with pytest.raises(ValueError):
        sigma_prime_power(13, 0)


def test_primes_below_counts():
    assert len(primes_below(100)) == 25
    assert len(primes_below(10**6)) == 78498
    assert primes_below(2).size == 0
    assert primes_below(3).tolist() == [2]


class TestPrimality:
    @pytest.mark.parametrize("n", [2, 3, 5, 17, 97, 7919, 999983, 2305843009213693951])
    def test_primes(self, n):
        assert is_prime(n)

    @pytest.mark.parametrize("n", [0, 1, 4, 561, 2047, 22021, 10**12 + 1])
    def test_composites(self, n):
        # 561 is Carmichael, 2047 is a strong pseudoprime to base 2
        assert not is_prime(n)

    def test_verdicts_below_64_bits_are_proven(self):
        r = classify_prime(2305843009213693951)
        assert r.is_prime and r.proven
        assert classify_prime(999983).proven

    def test_verdict_above_64_bits_is_probable_only(self):
        r = classify_prime(2**89 - 1)  # Mersenne prime, 89 bits
        assert r.is_prime and not r.proven

    def test_composite_above_64_bits_with_small_factor_is_proven(self):
        r = classify_prime(2**70)
        assert not r.is_prime and r.proven


class TestFactorize:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (1, ()),
            (2, ((2, 1),)),
            (22021, ((19, 2), (61, 1))),
            (9018009, ((3, 2), (7, 2), (11, 2), (13, 2))),
            (2**20, ((2, 20),)),
            (2**20 + 1, ((17, 1), (61681, 1))),
        ],
    )
    def test_known_factorizations(self, n, expected):
        assert factorize(n).factors == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)

    @given(st.integers(min_value=1, max_value=2**40))
    @settings(max_examples=200)
    def test_value_round_trip(self, n):
        f = factorize(n)
        assert f.value == n
        bases = [p for p, _ in f.factors]
        assert bases == sorted(bases)
        assert all(is_prime(p) for p in bases)

    def test_lookup_and_trial_paths_agree_at_boundary(self):
        for n in range(2**20 - 3, 2**20 + 4):
            assert factorize(n).value == n

    def test_large_semiprime(self):
        p, q = 1000003, 1000033
        assert factorize(p * q).factors == ((p, 1), (q, 1))

    def test_effort_budget_is_honored(self):
        tiny = FactorConfig(rho_iterations=2, rho_restarts=1)
        with pytest.raises(EffortExceededError):
            factorize(1000000007 * 1000000009, tiny)

    def test_str_rendering(self):
        assert str(factorize(22021)) == "19^2 * 61"
        assert str(factorize(1)) == "1"


def test_factorization_rejects_malformed_tuples():
    with pytest.raises(ValueError):
        Factorization(((4, 1), (3, 1)))  # not ascending
    with pytest.raises(ValueError):
        Factorization(((3, 0),))


def test_sigma_range_matches_pointwise_sigma():
    sig = sigma_range(2000)
    for n in range(1, 2001):
        assert sig[n] == sigma(n)


def test_sigma_range_rejects_nonpositive():
    with pytest.raises(ValueError):
        sigma_range(0)


DESCARTES = SpoofFactorization(
    (
        SpoofFactor(3, 2),
        SpoofFactor(7, 2),
        SpoofFactor(11, 2),
        SpoofFactor(13, 2),
        SpoofFactor(22021, 1, pseudo=True),
    )
)


class TestSpoofSigma:
    def test_descartes_value_is_perfect_under_spoof(self):
        n = DESCARTES.value
        assert n == 198585576189
        assert spoof_sigma(DESCARTES) == 2 * n

    def test_flag_free_spoof_agrees_with_honest_sigma(self):
        f = SpoofFactorization((SpoofFactor(3, 2), SpoofFactor(7, 1)))
        assert spoof_sigma(f) == sigma(63)

    def test_unflagged_composite_base_rejected(self):
        f = SpoofFactorization((SpoofFactor(22021, 1),))
        with pytest.raises(ValueError, match="not prime"):
            spoof_sigma(f)

    def test_non_coprime_bases_rejected(self):
        f = SpoofFactorization((SpoofFactor(15, 1, pseudo=True), SpoofFactor(21, 1, pseudo=True)))
        with pytest.raises(ValueError, match="coprime"):
            f.validate()

    def test_str_uses_factor_spec_grammar(self):
        assert str(DESCARTES) == "3^2,7^2,11^2,13^2,22021^1!"
