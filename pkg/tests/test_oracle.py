from math import gcd

import pytest

from quasicount import _pykernels
from quasicount.actions import qc_sum, r_cyclic, t_value
from quasicount.oracle import (
    DEFAULT_ORACLE_MAX,
    GeneratingTriple,
    OracleBoundError,
    burnside_count,
    count_classes,
    dessin_pairs_oracle,
    enumerate_triples,
    oracle_max,
    orbit_classes,
    qc_oracle,
    units,
)
from quasicount.signatures import enumerate_signatures


def test_enumerate_triples_7():
    triples = {t.entries for t in enumerate_triples(7, (7, 7, 7))}
    assert (3, 3, 1) in triples and (4, 2, 1) in triples
    scan = sum(1 for a in range(1, 7) for b in range(1, 7) if (a + b) % 7)
    assert len(triples) == scan == 30


def test_enumerate_triples_5():
    scan = sum(1 for a in range(1, 5) for b in range(1, 5) if (a + b) % 5)
    assert len(enumerate_triples(5, (5, 5, 5))) == scan == 12


def test_triples_are_valid_and_unique():
    for n in (8, 12, 30):
        for s in enumerate_signatures(n):
            ts = enumerate_triples(n, s)
            assert len({t.entries for t in ts}) == len(ts)
            assert all(t.is_valid_for(s) for t in ts)


def test_enumerate_rejects_inadmissible():
    with pytest.raises(ValueError):
        enumerate_triples(8, (8, 8, 8))


@pytest.mark.parametrize("n, sig, expected", [
    (7, (7, 7, 7), 2),
    (8, (2, 8, 8), 1),
    (8, (4, 8, 8), 2),
    (6, (3, 6, 6), 1),
])
def test_count_classes_examples(n, sig, expected):
    assert count_classes(n, sig) == expected


def test_c7_classes_separate_the_two_vectors():
    classes = orbit_classes(7, (7, 7, 7))
    reps = [c.canonical.entries for c in classes]
    # (3, 3, 1) and (4, 2, 1) lie in different classes
    def owner(t):
        for c in classes:
            orbit = {tuple(sorted(x * u % 7 for x in t)) for u in range(1, 7)}
            if tuple(sorted(c.canonical.entries)) in orbit:
                return c
    assert owner((3, 3, 1)) is not owner((4, 2, 1))
    assert reps == sorted(reps)


def test_c8_rows_collapse_per_signature():
    # the three rows of listed C_8 vectors give one class each
    rows = [[(1, 6, 1), (1, 1, 6), (6, 1, 1)],
            [(2, 5, 1), (1, 2, 5), (5, 1, 2)],
            [(3, 4, 1), (1, 3, 4), (4, 1, 3)]]
    canon = {}
    for s in enumerate_signatures(8):
        for c in orbit_classes(8, s):
            for u in units(8):
                from itertools import permutations
                for p in permutations(c.canonical.entries):
                    canon[tuple(x * u % 8 for x in p)] = c.canonical.entries
    found = [{canon[v] for v in row} for row in rows]
    assert all(len(f) == 1 for f in found)
    assert len(set().union(*found)) == 3


@pytest.mark.parametrize("n, expected", [(7, 2), (12, 5), (1, 0), (2, 0)])
def test_qc_oracle_examples(n, expected):
    assert qc_oracle(n) == expected


def test_orbit_sizes_sum_to_triple_count():
    for n in range(2, 80):
        for s in enumerate_signatures(n):
            classes = orbit_classes(n, s)
            assert sum(c.size for c in classes) == len(enumerate_triples(n, s))
            assert all(c.canonical.is_valid_for(s) for c in classes)


def test_canonical_is_orbit_minimum():
    from itertools import permutations

    for n in (7, 8, 9, 12, 20):
        for s in enumerate_signatures(n):
            for c in orbit_classes(n, s):
                orbit = {tuple(x * u % n for x in p)
                         for u in units(n) for p in permutations(c.canonical.entries)}
                assert c.canonical.entries == min(orbit)
                assert len(orbit) == c.size


def test_identity_fixes_every_triple():
    for t in enumerate_triples(12, (3, 12, 12)):
        assert tuple(x * 1 % 12 for x in t.entries) == t.entries


def test_burnside_matches_orbit_dedup():
    for n in range(2, 51):
        for s in enumerate_signatures(n):
            assert burnside_count(n, s) == count_classes(n, s), (n, s)


def test_oracle_matches_t_values_per_signature():
    for n in range(2, 101):
        for s in enumerate_signatures(n):
            assert count_classes(n, s) == t_value(n, s).value, (n, s)


def test_qc_oracle_matches_sum_to_120():
    assert [qc_oracle(n) for n in range(1, 121)] == [qc_sum(n) for n in range(1, 121)]


@pytest.mark.parametrize("n, expected", [(7, 8), (8, 12), (1, 1)])
def test_dessin_pairs_examples(n, expected):
    assert dessin_pairs_oracle(n) == expected


def test_dessin_pairs_match_r_cyclic_to_500():
    for n in range(1, 501):
        assert dessin_pairs_oracle(n) == r_cyclic(n), n


def test_generating_triple_validation():
    assert GeneratingTriple((3, 3, 1), 7).is_valid_for((7, 7, 7))
    assert not GeneratingTriple((3, 3, 2), 7).is_valid_for((7, 7, 7))
    assert not GeneratingTriple((4, 4, 0), 8).is_valid_for((2, 2, 1))


def test_oracle_bound(monkeypatch):
    assert oracle_max() == DEFAULT_ORACLE_MAX
    monkeypatch.setenv("QUASICOUNT_ORACLE_MAX", "10")
    assert oracle_max() == 10
    with pytest.raises(OracleBoundError):
        qc_oracle(11)
    with pytest.raises(OracleBoundError):
        dessin_pairs_oracle(11)
    assert qc_oracle(10) == 3
    monkeypatch.setenv("QUASICOUNT_ORACLE_MAX", "abc")
    with pytest.raises(OracleBoundError):
        oracle_max()


# both kernel backends must agree with each other and with the brute definitions


def test_kernel_triples_parity(kernels):
    for n in range(2, 61):
        for s in enumerate_signatures(n):
            assert kernels.triples(n, tuple(s)) == _pykernels.triples(n, tuple(s))
            assert kernels.triple_orbits(n, tuple(s), units(n)) == \
                _pykernels.triple_orbits(n, tuple(s), units(n))


def test_kernel_pairs_and_tau(kernels):
    for n in range(1, 150):
        assert kernels.pair_orbit_count(n, units(n)) == r_cyclic(n)
        assert kernels.count_tau2(n) == sum(1 for x in range(1, n) if (x * x + x + 1) % n == 0)
        assert kernels.roots_x2_plus_2x(n) == [x for x in range(1, n) if x * (x + 2) % n == 0]


def test_units():
    assert units(8) == [1, 3, 5, 7]
    assert all(gcd(u, 30) == 1 for u in units(30)) and len(units(30)) == 8
