import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ajl3 import entanglement
from ajl3.ajl_sim import build_rho_B
from ajl3.braid import ALPHABET, BraidWord, IDENTITY, power, separable_family, word
from ajl3.entanglement import (
    CANONICAL_CUTS,
    Classification,
    classify_bipartitions,
    is_ppt,
    product_check_qubit1,
    rank_profile,
    u_coefficients,
)
from ajl3.errors import ConsistencyError
from ajl3.linalg import DensityMatrix, partial_transpose
from ajl3.pathmodel import make_params, path_distribution

words = st.lists(st.sampled_from(ALPHABET), max_size=7).map(lambda xs: BraidWord(tuple(xs)))
ks = st.integers(5, 9)


def test_bell_state_is_npt():
    v = np.array([1, 0, 0, 1]) / np.sqrt(2)
    bell = DensityMatrix(np.outer(v, v), ("a", "b"))
    ok, lo = is_ppt(bell, ["a"])
    assert not ok and lo == pytest.approx(-0.5, abs=1e-12)
    mixed = DensityMatrix(np.eye(4) / 4, ("a", "b"))
    assert is_ppt(mixed, ["b"]) == (True, pytest.approx(0.25))


def test_identity_braid_all_separable():
    r = classify_bipartitions(IDENTITY, 5)
    assert r.is_all_separable()
    assert r.per_bipartition["1"].classification is Classification.PRODUCT
    assert r.per_bipartition["c"].classification is Classification.SEPARABLE
    assert u_coefficients(IDENTITY, 5) == (0, 0)


def test_sigma2_entangled_on_middle_cuts():
    r = classify_bipartitions(word(2), 5)
    assert not r.is_all_separable()
    for cut in ("2", "3"):
        rep = r.per_bipartition[cut]
        assert rep.classification is Classification.ENTANGLED and not rep.ppt
        assert rep.ppt_min_eigenvalue < -1e-3
    assert r.per_bipartition["1"].classification is Classification.PRODUCT


def test_report_keys_and_classification_values():
    r = classify_bipartitions(word(1, 2), 6)
    assert tuple(r.per_bipartition) == CANONICAL_CUTS
    assert {c.value for c in Classification} == {"Product", "Separable", "Entangled"}
    assert r.k == 6 and r.word == word(1, 2)


@settings(max_examples=60, deadline=None)
@given(words, ks)
def test_verdicts_follow_coefficient(w, k):
    r = classify_bipartitions(w, k)
    zero = abs(r.u_coefficients[0]) <= 1e-9
    assert zero == (abs(r.u_coefficients[1]) <= 1e-9)
    for cut in ("2", "3"):
        rep = r.per_bipartition[cut]
        assert rep.ppt == zero
        assert (rep.classification is Classification.SEPARABLE) == zero
    assert r.is_all_separable() == zero


@settings(max_examples=60, deadline=None)
@given(words, ks)
def test_witness_entries(w, k):
    p = make_params(k)
    rho = build_rho_B(w, p)
    u = u_coefficients(w, k)[0]
    pt = partial_transpose(rho, ["2"])
    # <0100| PT |1111> and the vanishing diagonal <0100| PT |0100>
    assert abs(pt[0b0100, 0b1111] - 0.5 * path_distribution(p)["110"] * np.conj(u)) <= 1e-12
    assert abs(pt[0b0100, 0b0100]) <= 1e-15
    minor = pt[np.ix_([0b0100, 0b1111], [0b0100, 0b1111])]
    if abs(u) > 1e-6:
        assert np.linalg.det(minor).real < 0


@settings(max_examples=40, deadline=None)
@given(words, st.integers(-3, 3), ks)
def test_sigma1_conjugation_keeps_coefficient_modulus(w, a, k):
    # U(s1) is diagonal, so conjugating by s1^a only rephases u
    conj = power(word(1), a) * w * power(word(1), -a)
    assert abs(abs(u_coefficients(conj, k)[0]) - abs(u_coefficients(w, k)[0])) <= 1e-12
    lhs = classify_bipartitions(conj, k).per_bipartition
    rhs = classify_bipartitions(w, k).per_bipartition
    assert {c: r.classification for c, r in lhs.items()} == {c: r.classification for c, r in rhs.items()}


@settings(max_examples=40, deadline=None)
@given(words, ks)
def test_qubit1_product(w, k):
    assert product_check_qubit1(build_rho_B(w, make_params(k)))


def test_qubit1_product_check_detects_non_product():
    v = np.zeros(16)
    v[0b0100] = v[0b1000] = 1 / np.sqrt(2)
    rho = DensityMatrix(np.outer(v, v), ("c", "1", "2", "3"))
    assert not product_check_qubit1(rho)


@pytest.mark.parametrize("j", [0, 2, 4, 6, 8])
@pytest.mark.parametrize("k", [5, 6, 7, 8])
def test_separable_family(j, k):
    r = classify_bipartitions(separable_family(j), k)
    assert r.is_all_separable()
    assert max(abs(u) for u in r.u_coefficients) <= 1e-10


def test_sigma2_power_vanishing_period_is_separable():
    # (-1)^s exp(-2 pi i s / 5) = 1 first at s = 10
    assert classify_bipartitions(power(word(2), 10), 5).is_all_separable()
    assert not classify_bipartitions(power(word(2), 5), 5).is_all_separable()


def test_rank_profile():
    prof = rank_profile(build_rho_B(IDENTITY, make_params(5)))
    assert prof.total == 3
    assert prof.of("c") == 1
    assert prof.of("1") == 1
    assert prof.of("1", "2", "3") == 3
    prof = rank_profile(build_rho_B(word(2), make_params(5)))
    assert prof.total == 3 and prof.of("1") == 1 and prof.of("c") == 2


def test_inconsistent_product_verdict_raises(monkeypatch):
    monkeypatch.setattr(entanglement, "product_check_qubit1", lambda rho: False)
    with pytest.raises(ConsistencyError):
        classify_bipartitions(word(1), 5)


def test_inconsistent_coefficient_threshold_raises(monkeypatch):
    monkeypatch.setattr(entanglement, "U_ZERO_TOL", 10.0)
    with pytest.raises(ConsistencyError):
        classify_bipartitions(word(2), 5)
