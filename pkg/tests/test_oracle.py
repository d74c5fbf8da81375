import pytest

from hilbert_resources import counts
from hilbert_resources.errors import CapExceeded, InvalidSpec
from hilbert_resources.oracle import (
    ALL_FAMILIES,
    Budget,
    Occupation,
    enumerate_bose,
    enumerate_bose_variable,
    enumerate_distinguishable,
    enumerate_fermi,
    stream_for,
    verify_formulas,
)


def test_bose_hand_enumeration():
    got = [o.counts for o in enumerate_bose(2, 2)]
    assert got == [(2, 0), (1, 1), (0, 2)]
    assert [o.counts for o in enumerate_bose(1, 0)] == [(0,)]
    assert len(list(enumerate_bose(3, 2))) == 6


def test_fermi_hand_enumeration():
    got = [o.counts for o in enumerate_fermi(3, 1)]
    assert got == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert [o.counts for o in enumerate_fermi(3, 3)] == [(1, 1, 1)]
    assert len(list(enumerate_fermi(4, 2))) == 6


def test_distinguishable_examples():
    assert len(list(enumerate_distinguishable(2, 2, 1))) == 4
    assert len(list(enumerate_distinguishable(2, 2, 2))) == 4
    assert len(list(enumerate_distinguishable(3, 1, 2))) == 3


def test_bose_variable_sectors():
    occs = list(enumerate_bose_variable(2, 2))
    assert len(occs) == 6
    assert [o.total for o in occs] == [0, 1, 1, 2, 2, 2]


@pytest.mark.parametrize("family", ALL_FAMILIES)
def test_streams_have_no_duplicates_and_increase(family):
    enum = stream_for(family)
    for M in range(1, 6):
        for L in range(0, 5):
            if family == "distinguishable":
                if L > M:
                    continue
                args = (M, 3, L)
            elif family == "fermi" and L > M:
                continue
            else:
                args = (M, L)
            keys = [o.key() for o in enum(*args)]
            assert len(set(keys)) == len(keys)
            if family != "bose-variable":
                assert all(a < b for a, b in zip(keys, keys[1:]))


def test_configuration_invariants():
    for o in enumerate_fermi(5, 3):
        assert o.total == 3
        assert set(o.counts) <= {0, 1}
    for o in enumerate_distinguishable(4, 3, 2):
        assert o.total == 2
        assert max(o.counts) <= 1
        assert len(o.labels) == 2
        assert all(0 <= lab < 3 for lab in o.labels)
    for o in enumerate_bose(3, 4):
        assert o.total == 4


def test_streams_are_lazy():
    stream = enumerate_bose(30, 6, budget=Budget(max_configs=10**7))
    first = next(stream)
    assert first.counts[0] == 6


def test_budget_guard():
    with pytest.raises(CapExceeded):
        next(enumerate_bose(40, 10))
    with pytest.raises(CapExceeded):
        next(enumerate_bose(3, 3, budget=Budget(max_configs=5)))
    with pytest.raises(CapExceeded):
        next(enumerate_fermi(50, 1, budget=Budget(max_size=40)))


def test_invalid_enumeration_specs():
    with pytest.raises(InvalidSpec):
        next(enumerate_fermi(2, 3))
    with pytest.raises(InvalidSpec):
        next(enumerate_distinguishable(2, 2, 3))
    with pytest.raises(InvalidSpec):
        next(enumerate_bose(0, 1))


def test_verify_small_grids():
    report = verify_formulas(1, 0)
    assert report.passed
    assert report.specs_checked == 3
    report = verify_formulas(6, 6, families=ALL_FAMILIES)
    assert report.passed
    assert report.configurations == sum(row[2] for row in report.rows)


def test_verify_detects_injected_fault():
    def off_by_one(p):
        value = counts.fermi_dimension(p["M"], p["L"]).value
        return value + 1 if (p["M"], p["L"]) == (4, 2) else value

    report = verify_formulas(5, 5, formulas={"fermi": off_by_one})
    assert not report.passed
    assert report.mismatch.family == "fermi"
    assert report.mismatch.params == {"M": 4, "L": 2}
    assert "fermi(M=4, L=2)" in report.mismatch.describe()


def test_occupation_key():
    occ = Occupation((0, 2, 1))
    assert occ.key() == (1, 1, 2)
    occ = Occupation((1, 0, 1), labels=(0, 1))
    assert occ.key() == ((0, 2), (0, 1))
