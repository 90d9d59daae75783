import pytest

from nilsemi.bruteforce import SearchConfig, compositions, count_nilpotent, enumerate_nilpotent
from nilsemi.canon import CountMode, canonical_key
from nilsemi.errors import OrderTooLarge
from nilsemi.tables import analyze, is_commutative, zero_semigroup

from _oracles import all_nilpotent_tables, brute_canonical, rows
from conftest import brute_reps

ISO, ANTI, COMM = CountMode.ISO, CountMode.ANTI_ISO, CountMode.COMMUTATIVE


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 3)) == [(1, 1, 1)]
    assert list(compositions(2, 3)) == []


def test_guard():
    with pytest.raises(OrderTooLarge):
        SearchConfig(8)


@pytest.mark.parametrize("cfg,expected", [
    (SearchConfig(3, 1, mode=ANTI), 1),
    (SearchConfig(5, 2, mode=ISO), 118),
    (SearchConfig(4, 2, 3), 1),
    (SearchConfig(5, 2, commutative_only=True, mode=ISO), 23),
    (SearchConfig(6, 2, 2, mode=ISO), 62),
])
def test_table1_examples(cfg, expected):
    assert count_nilpotent(cfg) == expected


def test_zero_semigroup_found():
    (t,) = enumerate_nilpotent(SearchConfig(4, 2, 3))
    assert canonical_key(t) == canonical_key(zero_semigroup(4))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matches_unrestricted_sweep(n):
    # the sweep makes no layer assumptions and uses n! relabelings for classes
    tabs = all_nilpotent_tables(n)
    for mode, anti in ((ISO, False), (ANTI, True)):
        expected = {brute_canonical(m, anti) for m in tabs}
        got = {brute_canonical(rows(t), anti) for t in brute_reps(n, mode)}
        assert got == expected
    comm = {brute_canonical(m) for m in tabs if all(m[i][j] == m[j][i] for i in range(n) for j in range(n))}
    assert {brute_canonical(rows(t)) for t in brute_reps(n, COMM)} == comm


def test_output_sorted_and_filtered():
    tables = enumerate_nilpotent(SearchConfig(5, 1, mode=ISO))
    keys = [canonical_key(t) for t in tables]
    assert keys == sorted(keys)
    for t in tables:
        info = analyze(t)
        assert info.coclass_r == 1


def test_commutative_mode_only_commutative():
    tables = enumerate_nilpotent(SearchConfig(5, mode=COMM))
    assert tables and all(is_commutative(t) for t in tables)


def test_parallel_output_identical():
    cfg = SearchConfig(5, 2, mode=ISO)
    assert enumerate_nilpotent(cfg, workers=2) == enumerate_nilpotent(cfg)


def test_mode_counts_nest():
    for n in range(3, 6):
        iso, anti, comm = (len(brute_reps(n, m)) for m in (ISO, ANTI, COMM))
        assert iso >= anti >= comm


def test_coclass0_equivalences():
    # coclass 0 <=> monogenic <=> one generator with u^n = u^{n+1}
    for n in range(1, 6):
        for t in brute_reps(n):
            info = analyze(t)
            gens = info.min_gen_set
            monogenic = n == 1 or len(gens) == 1
            if len(gens) == 1:
                g = gens[0]
                powers = [g]
                while len(powers) <= n:
                    powers.append(t.mul(powers[-1], g))
                # u^n equals u^{n+1} and the first n powers are distinct
                period_one = powers[n - 1] == powers[n] and len(set(powers[:n])) == n
            else:
                period_one = n == 1
            assert (info.coclass_r == 0) == monogenic == period_one
