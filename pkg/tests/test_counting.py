import pytest
from hypothesis import given, strategies as st

from nilsemi.canon import CountMode
from nilsemi.counting import (
    KINDS, MIN_ORDER, ORDERS, TABLE1, CountQuery, _div8, formula_count, table1_reference,
)
from nilsemi.errors import NotTabulated, OutOfDomain

ISO, ANTI, COMM = CountMode.ISO, CountMode.ANTI_ISO, CountMode.COMMUTATIVE
MODES = (ANTI, ISO, COMM)


def query(kind, n, mode):
    coclass, gen_size = {"coclass1": (1, None), "coclass2": (2, None),
                         "gen2": (2, 2), "gen3": (2, 3)}[kind]
    return CountQuery(coclass, n, mode, gen_size)


def test_examples():
    assert formula_count(CountQuery(1, 8, ANTI)) == 12
    assert formula_count(CountQuery(2, 13, ISO)) == 813
    assert formula_count(CountQuery(2, 12, COMM, 3)) == 186
    assert table1_reference("coclass2", ANTI, 9) == 288
    assert table1_reference("coclass1", COMM, 4) == 5
    assert table1_reference("gen2", ANTI, 6) == 43


def test_table_shape():
    assert len(TABLE1) == 12
    assert all(len(row) == len(ORDERS) for row in TABLE1.values())


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("mode", MODES)
def test_formula_matches_table(kind, mode):
    for n in range(MIN_ORDER[kind], 14):
        assert formula_count(query(kind, n, mode)) == table1_reference(kind, mode, n)


def test_table_rows_add_up():
    for mode in MODES:
        for n in ORDERS:
            total = table1_reference("coclass2", mode, n)
            parts = table1_reference("gen2", mode, n) + table1_reference("gen3", mode, n)
            assert total == parts


@given(st.integers(7, 200), st.sampled_from(MODES))
def test_additivity(n, mode):
    total = formula_count(CountQuery(2, n, mode))
    assert total == formula_count(CountQuery(2, n, mode, 2)) + formula_count(CountQuery(2, n, mode, 3))


@given(st.integers(7, 200))
def test_mode_ordering(n):
    for kind in KINDS:
        iso, anti, comm = (formula_count(query(kind, n, m)) for m in (ISO, ANTI, COMM))
        assert iso >= anti >= comm > 0


def test_domain_errors():
    with pytest.raises(OutOfDomain, match="n >= 5"):
        formula_count(CountQuery(1, 4))
    with pytest.raises(OutOfDomain, match="n >= 7"):
        formula_count(CountQuery(2, 6, ANTI, 2))
    with pytest.raises(OutOfDomain):
        formula_count(CountQuery(2, 5, ANTI, 3))
    with pytest.raises(OutOfDomain):
        formula_count(CountQuery(3, 9))
    with pytest.raises(OutOfDomain):
        formula_count(CountQuery(1, 9, ANTI, 2))
    with pytest.raises(NotTabulated):
        table1_reference("coclass1", ANTI, 14)
    with pytest.raises(NotTabulated):
        table1_reference("coclass3", ANTI, 7)


def test_div8_refuses_remainder():
    assert _div8(16) == 2
    with pytest.raises(ArithmeticError):
        _div8(12)
