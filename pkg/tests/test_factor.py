import pytest
from hypothesis import given, settings, strategies as st

from divwalk import (
    DomainError,
    FactorPair,
    Side,
    init_anchor,
    is_divisor_at_x,
    is_divisor_at_y,
    scan_divisor_pairs,
    smallest_nontrivial_divisor,
)


def test_scan_21():
    assert scan_divisor_pairs(init_anchor(21)) == [
        FactorPair(3, 7, 1, Side.X),
        FactorPair(1, 21, 3, Side.X),
    ]


def test_scan_12():
    assert scan_divisor_pairs(init_anchor(12)) == [
        FactorPair(3, 4, 0, Side.X),
        FactorPair(2, 6, 1, Side.X),
        FactorPair(1, 12, 2, Side.X),
    ]


def test_scan_prime_and_square():
    assert scan_divisor_pairs(init_anchor(7)) == [FactorPair(1, 7, 1, Side.X)]
    assert scan_divisor_pairs(init_anchor(9)) == [
        FactorPair(3, 3, 0, Side.X),
        FactorPair(1, 9, 2, Side.X),
    ]


def test_scan_degenerate():
    assert scan_divisor_pairs(init_anchor(1)) == [FactorPair(1, 1, 0, Side.X)]
    assert scan_divisor_pairs(init_anchor(2)) == [FactorPair(1, 2, 0, Side.X)]


@pytest.mark.parametrize(
    "fn, n, k, want",
    [
        (is_divisor_at_x, 21, 1, True),
        (is_divisor_at_x, 21, 0, False),
        (is_divisor_at_x, 12, 1, True),
        (is_divisor_at_y, 21, 2, True),
        (is_divisor_at_y, 21, 1, False),
        (is_divisor_at_y, 21, 16, True),
    ],
)
def test_divisor_predicates(fn, n, k, want):
    assert fn(init_anchor(n), k) is want


def test_predicate_domain_errors():
    anchor = init_anchor(21)
    with pytest.raises(DomainError):
        is_divisor_at_x(anchor, 4)  # divisor would be 0
    with pytest.raises(DomainError):
        is_divisor_at_x(anchor, -1)
    with pytest.raises(DomainError):
        is_divisor_at_y(anchor, 17)  # past the walk end
    with pytest.raises(DomainError):
        is_divisor_at_y(anchor, -1)


@pytest.mark.parametrize("n, want", [(21, 3), (97, None), (8, 2), (2, None), (3, None)])
def test_smallest_nontrivial(n, want):
    assert smallest_nontrivial_divisor(n) == want


def test_smallest_rejects_tiny():
    with pytest.raises(DomainError):
        smallest_nontrivial_divisor(1)
    with pytest.raises(DomainError):
        smallest_nontrivial_divisor(0)


def test_scan_against_trial_division(divisors_of):
    for n in range(1, 601):
        pairs = scan_divisor_pairs(init_anchor(n))
        seen = {p.small for p in pairs} | {p.large for p in pairs}
        assert seen == set(divisors_of(n))
        for p in pairs:
            assert p.small * p.large == n
            assert p.small <= p.large
            assert p.side is Side.X
        ks = [p.k_found for p in pairs]
        assert ks == sorted(ks) and len(set(ks)) == len(ks)
        assert pairs[-1].small == 1 and pairs[-1].large == n


def test_smallest_against_trial_division(divisors_of):
    for n in range(2, 2001):
        divs = [d for d in divisors_of(n) if 1 < d < n]
        want = min(divs) if divs else None
        assert smallest_nontrivial_divisor(n) == want


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=2, max_value=10**8))
def test_smallest_is_prime_factor(n):
    d = smallest_nontrivial_divisor(n)
    if d is None:
        # no divisor in [2, sqrt(n)] means n is prime
        assert all(n % p for p in range(2, int(n**0.5) + 1))
    else:
        assert n % d == 0
        assert all(d % p for p in range(2, int(d**0.5) + 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=10**6))
def test_scan_products_and_order(n):
    pairs = scan_divisor_pairs(init_anchor(n))
    smalls = [p.small for p in pairs]
    assert smalls == sorted(smalls, reverse=True)
    assert all(p.small * p.large == n for p in pairs)
