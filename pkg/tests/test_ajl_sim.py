import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ajl3.ajl_sim import (
    LABELS,
    build_phi,
    build_rho_B,
    controlled,
    expectation_X,
    expectation_Y,
    initial_states,
    run_mixed_algorithm,
    run_pure_algorithm,
)
from ajl3.braid import ALPHABET, BraidWord, IDENTITY, random_word, word
from ajl3.errors import KTooSmall
from ajl3.linalg import is_unitary, rank
from ajl3.pathmodel import PATH_INDEX, PATHS, build_braid_unitary, make_params, markov_trace, path_distribution

words = st.lists(st.sampled_from(ALPHABET), max_size=8).map(lambda xs: BraidWord(tuple(xs)))


def rho_by_mixture(w, params):
    """Sum of Pr(p)|psi_p><psi_p| with psi_p = (|0>|p> + |1>U|p>)/sqrt(2)."""
    U = build_braid_unitary(w, params)
    dist = path_distribution(params)
    rho = np.zeros((16, 16), dtype=complex)
    for p in PATHS:
        e = np.zeros(8, dtype=complex)
        e[PATH_INDEX[p]] = 1
        psi = np.concatenate([e, U @ e]) / np.sqrt(2)
        rho += dist[p] * np.outer(psi, psi.conj())
    return rho


def test_phi_is_diagonal_path_distribution():
    p = make_params(5)
    phi = build_phi(p).matrix
    assert np.allclose(np.diag(phi)[[5, 6, 7]], [1 / p.d**2, 1 / p.d**2, 1 - 2 / p.d**2])
    assert np.count_nonzero(phi) == 3


def test_initial_states():
    p = make_params(6)
    rho0, rho1 = initial_states(p)
    assert rho0.labels == LABELS
    assert rho0.matrix[5, 5] == pytest.approx(1 / p.d**2)
    assert np.allclose(rho0.matrix[8:, 8:], 0)
    assert np.allclose(rho1.matrix[:8, 8:], rho1.matrix[:8, :8])


def test_controlled_unitary():
    U = build_braid_unitary(word(1, 2), make_params(5))
    CU = controlled(U)
    assert is_unitary(CU)
    assert np.allclose(CU[:8, :8], np.eye(8)) and np.allclose(CU[8:, 8:], U)


@settings(max_examples=50, deadline=None)
@given(words, st.integers(5, 10))
def test_rho_B_matches_mixture(w, k):
    p = make_params(k)
    rho = build_rho_B(w, p)
    assert np.max(np.abs(rho.matrix - rho_by_mixture(w, p))) <= 1e-12
    assert rank(rho.matrix) == 3


@settings(max_examples=50, deadline=None)
@given(words, st.integers(5, 10))
def test_expectations_give_trace(w, k):
    p = make_params(k)
    rho = build_rho_B(w, p)
    tr = markov_trace(w, p)
    assert abs(expectation_X(rho) - tr.real) <= 1e-12
    assert abs(expectation_Y(rho) - tr.imag) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(words, st.integers(5, 10))
def test_phi_is_invariant(w, k):
    p = make_params(k)
    U = build_braid_unitary(w, p)
    phi = build_phi(p).matrix
    assert np.max(np.abs(U @ phi @ U.conj().T - phi)) <= 1e-12


def test_identity_braid_state():
    p = make_params(5)
    rho = build_rho_B(IDENTITY, p)
    assert expectation_X(rho) == pytest.approx(1.0, abs=1e-14)
    assert expectation_Y(rho) == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("run", [run_pure_algorithm, run_mixed_algorithm])
def test_deterministic_given_seed(run):
    w = word(2, 1, 1, 2)
    a = run(w, 5, 5000, 123)
    b = run(w, 5, 5000, 123)
    c = run(w, 5, 5000, 124)
    assert a == b
    assert a.estimate.r != c.estimate.r


@pytest.mark.parametrize("run", [run_pure_algorithm, run_mixed_algorithm])
def test_result_fields(run):
    w = word(2)
    p = make_params(5)
    res = run(w, 5, 1000, 0)
    assert res.exact_trace == pytest.approx(markov_trace(w, p), abs=1e-14)
    assert res.estimate.samples == 1000
    assert res.estimate.stderr_bound == pytest.approx(2 / np.sqrt(1000))
    assert complex(res.expected_x, res.expected_y) == pytest.approx(res.exact_trace, abs=1e-12)
    norm = (-p.A) ** 3 * p.d**2  # writhe of the closure of s2 is -1
    assert res.exact_output == pytest.approx(norm * res.exact_trace, abs=1e-12)
    assert res.exact_output == pytest.approx(p.d, abs=1e-12)
    assert res.error == pytest.approx(abs(res.estimate.r - res.exact_trace))
    r = res.estimate.r
    assert abs(r.real) <= 1 and abs(r.imag) <= 1


@pytest.mark.parametrize("run", [run_pure_algorithm, run_mixed_algorithm])
def test_invalid_arguments(run):
    with pytest.raises(ValueError):
        run(word(1), 5, 0, 0)
    with pytest.raises(KTooSmall):
        run(word(1), 4, 10, 0)


@pytest.mark.parametrize("run", [run_pure_algorithm, run_mixed_algorithm])
def test_estimator_concentration(run):
    n = 10_000
    rng = np.random.default_rng(2024)
    inside = 0
    runs = 200
    for seed in range(runs):
        w = random_word(rng, 6)
        res = run(w, int(rng.integers(5, 11)), n, seed)
        inside += res.error <= 4 / np.sqrt(n)
    assert inside >= 0.99 * runs


def test_pure_and_mixed_means_match_trace():
    w = word(2, 1, 1, 2)
    pure = [run_pure_algorithm(w, 5, 2000, s).estimate.r for s in range(100)]
    mixed = [run_mixed_algorithm(w, 5, 2000, s).estimate.r for s in range(100)]
    exact = markov_trace(w, make_params(5))
    for xs in (pure, mixed):
        assert abs(np.mean(xs) - exact) < 4 * 2 / np.sqrt(2000 * 100)
