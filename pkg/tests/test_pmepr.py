import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from truncgolay.construct import PRESETS, ConstructionSpec, TEN, ccc, mocs_family, offset_family, construct_pair
from truncgolay.corr import CodeSet
from truncgolay.pmepr import BOUND_SLACK, column_pmepr, envelope, row_pmepr

# oracle values (direct carrier sums on the L = 16 grid)
EXAMPLE2_S0_ROWS = [6.1341528612, 5.5793956487, 6.1341528612, 5.5793956487,
                    5.1343142343, 5.7415619753, 5.1343142343, 5.7415619753]
EXAMPLE3_OFFSET_S0_COLUMN_MAX = 3.3475126258


def test_single_entry():
    prof = envelope([1])
    assert prof.pmepr == pytest.approx(1.0)
    np.testing.assert_allclose(prof.power, 1.0)


def test_all_ones_peak():
    assert envelope(np.ones(4)).pmepr == pytest.approx(4.0)


def test_golay4_bound():
    assert envelope([1, 1, 1, -1], 16).pmepr <= 2 + 1e-9


def test_errors():
    with pytest.raises(ValueError):
        envelope([])
    with pytest.raises(ValueError):
        envelope([0, 0])
    with pytest.raises(ValueError):
        envelope([1], 0)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=12), st.integers(1, 6))
def test_matches_direct_sum(exps, L):
    seq = np.exp(2j * np.pi * np.array(exps) / 4)
    assert envelope(seq, L).pmepr == pytest.approx(oracle.pmepr(seq.tolist(), L), rel=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from([-1, 1]), min_size=1, max_size=16))
def test_pmepr_at_least_one(seq):
    assert envelope(seq).pmepr >= 1 - 1e-12


def test_gcp_rows_within_two():
    pair = CodeSet.from_sequences(construct_pair(PRESETS["example1"]))
    rep = row_pmepr(pair)
    assert rep.max <= 2 + BOUND_SLACK
    assert rep.bound == 2 and rep.stated_bound is None


def test_example2_rows_frozen():
    s0 = mocs_family(PRESETS["example2"]).codes[0]
    rep = row_pmepr(s0)
    np.testing.assert_allclose(rep.values, EXAMPLE2_S0_ROWS, atol=1e-9)
    assert rep.within_bound and rep.bound == 8
    # every row is above the tighter figure of 2^k = 4
    assert rep.stated_bound == 4 and rep.exceeding_stated == list(range(8))


def test_single_sequence_set():
    cs = CodeSet(np.array([[1, 1, 1, -1]]))
    assert row_pmepr(cs).values[0] == pytest.approx(envelope([1, 1, 1, -1]).pmepr)


def test_two_row_columns_bounded():
    fam = ccc(ConstructionSpec(TEN, 6, quadratic=((0, 1, 1),)))
    for cs in fam:
        assert column_pmepr(cs).max <= 2 + BOUND_SLACK


def test_structural_zero_columns_are_nan():
    cs = CodeSet.from_sequences(construct_pair(PRESETS["example1"]))
    rep = column_pmepr(cs)
    assert np.isnan(rep.values).sum() == 120
    assert rep.max <= 2 + BOUND_SLACK
    assert rep.to_dict()["values"][1] is None


def test_offset_columns_frozen():
    off = offset_family(ccc(PRESETS["example3"]), (0, 1))
    rep = column_pmepr(off.codes[0])
    assert rep.max == pytest.approx(EXAMPLE3_OFFSET_S0_COLUMN_MAX, abs=1e-9)
    assert not rep.within_bound


def test_offset_through_flock_bit_columns():
    fam = ccc(PRESETS["example3"])
    for perm in ((0, 1), (1, 0)):
        for cs in offset_family(fam, perm, through_flock_bit=True):
            assert column_pmepr(cs).max <= 2 + BOUND_SLACK


def test_report_dict():
    d = row_pmepr(CodeSet(np.array([[1, 1, 1, -1], [1, 1, -1, 1]]))).to_dict()
    assert d["axis"] == "row" and d["exceeding"] == [] and "lower bound" in d["note"]
