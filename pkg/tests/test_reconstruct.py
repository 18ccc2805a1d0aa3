import pytest

from orderlattice.errors import NotRealizable, Reason
from orderlattice.group.model import (
    AbelianGroup,
    PrimaryComponent,
    from_cyclic_factors,
)
from orderlattice.group.reconstruct import (
    SpectrumCandidate,
    candidate_primes,
    conjugate,
    log_exact,
    reconstruct,
    reconstruct_p_component,
)
from orderlattice.group.spectra import spectrum


def candidate_of(group: AbelianGroup) -> SpectrumCandidate:
    return SpectrumCandidate(spectrum(group).entries)


def test_log_exact():
    assert log_exact(1, 2) == 0
    assert log_exact(64, 2) == 6
    assert log_exact(243, 3) == 5
    assert log_exact(33, 2) == -1
    assert log_exact(12, 2) == -1
    assert log_exact(0, 2) == -1


def test_conjugate():
    assert conjugate([]) == []
    assert conjugate([2, 2, 1, 1]) == [2, 4]
    assert conjugate([3]) == [1, 1, 1]
    assert conjugate([1, 1, 1]) == [3]
    assert conjugate([3, 2]) == [1, 2, 2]


def test_reconstruct_examples():
    z4_z16 = SpectrumCandidate({1: 1, 2: 3, 4: 12, 8: 16, 16: 32})

    assert reconstruct(z4_z16) == from_cyclic_factors([4, 16])
    assert reconstruct(SpectrumCandidate({1: 1})) == AbelianGroup()
    assert reconstruct(candidate_of(from_cyclic_factors([12, 720]))).spec == (
        "Z12 x Z720"
    )


def test_reconstruct_p_component():
    assert reconstruct_p_component(2, {0: 1, 1: 3, 2: 12, 3: 16, 4: 32}) == (
        PrimaryComponent(2, (2, 4))
    )
    assert reconstruct_p_component(3, {0: 1, 1: 26}) == PrimaryComponent(3, (1, 1, 1))


@pytest.mark.parametrize(
    "entries, reason",
    [
        ({1: 1, 2: 32}, Reason.NON_PRIME_POWER_CUMULATIVE),
        ({1: 1, 2: 5}, Reason.NON_PRIME_POWER_CUMULATIVE),
        ({1: 1, 4: 3}, Reason.TRAILING_COUNTS),
        ({1: 1, 2: 1, 4: 6}, Reason.NON_MONOTONE_CONJUGATE),
        ({1: 1, 2: 1, 3: 2, 6: 3}, Reason.COUNT_MISMATCH),
        ({1: 1, 2: 3, 4: 12, 8: 16, 16: 32, 3: 2}, Reason.KEY_SET_MISMATCH),
        ({1: 1, 6: 1}, Reason.KEY_SET_MISMATCH),
        ({1: 1, 2: 0}, Reason.MALFORMED),
        ({1: 1, 2: -1}, Reason.MALFORMED),
        ({2: 1}, Reason.MALFORMED),
        ({1: 2, 2: 2}, Reason.MALFORMED),
        ({0: 1, 1: 1}, Reason.MALFORMED),
        ({}, Reason.MALFORMED),
    ],
)
def test_not_realizable(entries, reason):
    with pytest.raises(NotRealizable) as e:
        reconstruct(SpectrumCandidate(entries))

    assert e.value.reason is reason


def test_failing_prime_is_reported():
    with pytest.raises(NotRealizable) as e:
        reconstruct(SpectrumCandidate({1: 1, 2: 1, 3: 3}))

    assert e.value.reason is Reason.NON_PRIME_POWER_CUMULATIVE
    assert e.value.prime == 3


@pytest.mark.slow
def test_round_trip(groups_up_to):
    for g in groups_up_to(10**4):
        assert reconstruct(candidate_of(g)) == g


def test_spectra_are_distinct(groups_up_to):
    seen = {}

    for g in groups_up_to(2000):
        key = tuple(spectrum(g))
        assert key not in seen, (g, seen.get(key))
        seen[key] = g


def perturbations(entries):
    """Spectra one step away from `entries` with the same total."""
    orders = sorted(entries)

    for i, source in enumerate(orders[1:], start=1):
        for target in orders[i + 1 :] + orders[1:i]:
            moved = dict(entries)
            moved[source] -= 1
            moved[target] += 1

            if moved[source] == 0:
                del moved[source]

            yield moved


def test_every_rejection_is_genuine(groups_up_to):
    realizable = {}

    for g in groups_up_to(500):
        realizable[tuple(spectrum(g))] = g

    for g in groups_up_to(100):
        for entries in perturbations(spectrum(g).entries):
            candidate = SpectrumCandidate(entries)
            key = tuple(sorted(entries.items()))

            try:
                group = reconstruct(candidate)
            except NotRealizable:
                assert key not in realizable
            else:
                assert realizable[key] == group


def test_large_composite_order_is_rejected_without_factoring():
    semiprime = 4294967291 * 4294967279

    with pytest.raises(NotRealizable) as e:
        reconstruct(SpectrumCandidate({1: 1, 2: 1, semiprime: 1}))

    assert e.value.reason is Reason.KEY_SET_MISMATCH
    assert str(semiprime) in str(e.value)


def test_candidate_primes():
    assert candidate_primes([1, 2, 3, 4, 6, 12]) == [2, 3]
    assert candidate_primes([1, 4, 8]) == [2]
    assert candidate_primes([1, 3, 12]) == [2, 3]
    assert candidate_primes([1]) == []

    with pytest.raises(NotRealizable) as e:
        candidate_primes([1, 2, 2 * 15])

    assert e.value.reason is Reason.KEY_SET_MISMATCH
