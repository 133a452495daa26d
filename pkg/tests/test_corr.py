import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from truncgolay.construct import PRESETS, ccc
from truncgolay.corr import (
    CodeFamily,
    CodeSet,
    aacf,
    aacs,
    aacs_profile,
    accf,
    accs,
    full_accf,
    naive_full_accf,
    verify_ccc,
    verify_cs,
    verify_gcp,
    verify_mocs,
)

GOLAY4 = CodeSet.from_sequences([[1, 1, 1, -1], [1, 1, -1, 1]])


@pytest.fixture(scope="module")
def example3():
    return ccc(PRESETS["example3"])


def test_accf_out_of_range_shift():
    e = [1, -1, 1]
    assert accf(e, e, 3) == 0 and accf(e, e, -7) == 0


def test_aacf_small():
    assert aacf([1, 1], 1) == 1
    assert aacf([1, 1, 1, -1], 0) == 4
    assert aacf([1, 1, 1, -1], 1) == 1
    assert aacf([1, 1, 1, -1], 3) == -1


def test_accf_length_mismatch():
    with pytest.raises(ValueError):
        accf([1, 1], [1], 0)
    with pytest.raises(ValueError):
        full_accf([1, 1], [1])


def test_golay4():
    assert [aacs(GOLAY4, s) for s in (1, 2, 3)] == [0, 0, 0]
    assert aacs(GOLAY4, 0) == 8
    assert aacs(GOLAY4, 4) == 0
    assert verify_gcp(GOLAY4).passed


def test_accs_self_at_zero():
    assert accs(GOLAY4, GOLAY4, 0) == 8


def test_full_accf_trivial():
    np.testing.assert_allclose(full_accf([1], [1]), [1])
    n = 7
    tri = full_accf(np.ones(n), np.ones(n))
    np.testing.assert_allclose(tri, n - np.abs(np.arange(-(n - 1), n)), atol=1e-12)


def test_naive_profile_is_integer():
    p = naive_full_accf(np.array([1, -1, 1]), np.array([1, 1, -1]))
    assert np.issubdtype(p.dtype, np.integer)
    assert p.tolist() == [oracle.corr([1, -1, 1], [1, 1, -1], s) for s in range(-2, 3)]


def test_conj_symmetry_brute_force():
    rng = np.random.default_rng(7)
    d, e = rng.choice([-1, 1], 8), rng.choice([-1, 1], 8)
    for s in range(-8, 9):
        assert accf(d, e, -s) == np.conj(accf(e, d, s))


def test_oracle_agreement_fixed_sizes():
    rng = np.random.default_rng(11)
    for n in (20, 160, 208):
        for _ in range(10):
            d = np.exp(2j * np.pi * rng.integers(0, 4, n) / 4)
            e = np.exp(2j * np.pi * rng.integers(0, 4, n) / 4)
            np.testing.assert_allclose(full_accf(d, e), naive_full_accf(d, e), atol=1e-9, rtol=0)


vec = st.integers(1, 40).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(0, 7), min_size=n, max_size=n),
        st.lists(st.integers(0, 7), min_size=n, max_size=n),
    )
)


@settings(max_examples=80, deadline=None)
@given(vec)
def test_fft_matches_naive(pair):
    d, e = (np.exp(2j * np.pi * np.array(x) / 8) for x in pair)
    np.testing.assert_allclose(full_accf(d, e), naive_full_accf(d, e), atol=1e-9, rtol=0)


@settings(max_examples=60, deadline=None)
@given(vec)
def test_conj_symmetry(pair):
    d, e = (np.exp(2j * np.pi * np.array(x) / 8) for x in pair)
    n = len(d)
    for s in (0, 1, n // 2, n - 1):
        assert abs(accf(d, e, -s) - np.conj(accf(e, d, s))) < 1e-9


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([-1, 1]), min_size=1, max_size=24))
def test_profile_matches_literal_definition(seq):
    n = len(seq)
    prof = naive_full_accf(np.array(seq), np.array(seq))
    assert prof.tolist() == [oracle.corr(seq, seq, s) for s in range(-(n - 1), n)]


def test_codeset_validation():
    with pytest.raises(ValueError):
        CodeSet.from_sequences([[1, 1], [1]])
    with pytest.raises(ValueError):
        CodeSet(np.ones(3))
    with pytest.raises(ValueError):
        CodeFamily((GOLAY4, CodeSet.from_sequences([[1, 1, 1]] * 2)))


def test_perturbed_set_fails():
    v = GOLAY4.values.copy()
    v[0, 2] *= -1
    rep = verify_cs(CodeSet(v))
    assert not rep.passed and rep.worst_magnitude > 0 and rep.worst_shift != 0
    assert rep.exact and rep.tolerance == 0


def test_non_binary_tolerance():
    cs = CodeSet(GOLAY4.values.astype(complex))
    rep = verify_gcp(cs)
    assert rep.passed and not rep.exact and rep.tolerance == pytest.approx(8e-9)


def test_example3_ccc(example3):
    rep = verify_ccc(example3)
    assert rep.passed and rep.exact and rep.params == {"K": 8, "M": 8, "N": 160}
    assert rep.worst_magnitude == 0


def test_ccc_implies_mocs_implies_cs(example3):
    assert verify_mocs(example3).passed
    assert all(verify_cs(cs).passed for cs in example3)


def test_ccc_needs_square_family(example3):
    half = CodeFamily(example3.codes[:4])
    assert verify_mocs(half).passed
    rep = verify_ccc(half)
    assert not rep.passed and "set size" in rep.note


def test_rotated_flock_breaks_orthogonality(example3):
    # oracle values for S_0 against S_1 with its rows rotated by one
    a, b = example3.codes[0], example3.codes[1]
    rotated = CodeSet(np.roll(b.values, 1, axis=0))
    assert all(accs(a, b, s) == 0 for s in (-151, -150, 0, 40))
    assert accs(a, rotated, 0) == 0
    assert [accs(a, rotated, s) for s in (-151, -150, -149, -147)] == [-4, 8, -4, 4]
    rep = verify_mocs(CodeFamily((a, rotated)))
    assert not rep.passed and len(rep.failing_shifts) == 220 and rep.worst_magnitude == 80


def test_profile_agrees_with_scalar_sum(example3):
    cs = example3.codes[5]
    prof = aacs_profile(cs)
    n = cs.length
    for s in (-159, -3, 0, 1, 77):
        assert prof[s + n - 1] == aacs(cs, s)


def test_report_roundtrip_fields():
    rep = verify_gcp(GOLAY4)
    d = rep.to_dict()
    assert d["passed"] and d["failing_shifts"] == [] and d["worst_pair"] is None
    assert rep.summary().startswith("PASS GCP")
