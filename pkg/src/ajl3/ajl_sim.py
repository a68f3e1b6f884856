"""Simulation of the Hadamard-test Jones algorithm, pure and mixed variants.

The pure variant samples a path ``p`` with probability ``Pr(p)`` and then a
Hadamard-test outcome with mean ``Re/Im <p|U_B|p>``.  The mixed variant runs
the same test once on ``|0><0| (x) phi`` with ``phi`` the path distribution
as a diagonal density matrix.  Both versions sample from the exact outcome
distributions instead of simulating collapse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import braid as _braid
from .braid import BraidWord
from .errors import ConsistencyError
from .linalg import PAULI_X, PAULI_Y, DensityMatrix, adjoint, standard_trace, tensor
from .pathmodel import (
    PATH_INDEX,
    PATHS,
    ModelParams,
    build_braid_unitary,
    make_params,
    path_distribution,
    trace_of_unitary,
)

WORK_LABELS = ("1", "2", "3")
LABELS = ("c",) + WORK_LABELS
FORM_TOL = 1e-12

KET0 = np.array([[1, 0], [0, 0]], dtype=complex)
KET1 = np.array([[0, 0], [0, 1]], dtype=complex)
PLUS = np.full((2, 2), 0.5, dtype=complex)


def build_phi(params: ModelParams) -> DensityMatrix:
    dist = path_distribution(params)
    phi = np.zeros((8, 8), dtype=complex)
    for p in PATHS:
        phi[PATH_INDEX[p], PATH_INDEX[p]] = dist[p]
    return DensityMatrix(phi, WORK_LABELS)


def initial_states(params: ModelParams) -> tuple[DensityMatrix, DensityMatrix]:
    """``rho_0 = |0><0| (x) phi`` and ``rho_1 = |+><+| (x) phi``."""
    phi = build_phi(params).matrix
    return (
        DensityMatrix(tensor(KET0, phi), LABELS),
        DensityMatrix(tensor(PLUS, phi), LABELS),
    )


def controlled(U: np.ndarray) -> np.ndarray:
    return tensor(KET0, np.eye(len(U))) + tensor(KET1, U)


def build_rho_B(w: BraidWord, params: ModelParams) -> DensityMatrix:
    """State after the controlled braid unitary, before measurement.

    Built from the four control blocks and checked against two other
    routes: ``CU rho_1 CU^dagger``, and the block form with the lower-right
    block replaced by ``phi`` (valid because ``U phi U^dagger = phi``).
    """
    U = build_braid_unitary(w, params)
    phi = build_phi(params).matrix
    Ud = adjoint(U)
    blocks = 0.5 * np.block([[phi, phi @ Ud], [U @ phi, U @ phi @ Ud]])
    simplified = 0.5 * np.block([[phi, phi @ Ud], [U @ phi, phi]])
    CU = controlled(U)
    circuit = CU @ tensor(PLUS, phi) @ adjoint(CU)
    if np.max(np.abs(blocks - simplified)) > FORM_TOL:
        raise ConsistencyError("U phi U^dagger != phi")
    if np.max(np.abs(blocks - circuit)) > FORM_TOL:
        raise ConsistencyError("block form and circuit form of rho_B disagree")
    return DensityMatrix(blocks, LABELS)


def _control_expectation(rho: DensityMatrix, pauli: np.ndarray) -> float:
    op = tensor(pauli, np.eye(rho.dim // 2))
    return standard_trace(op @ rho.matrix).real


def expectation_X(rho: DensityMatrix) -> float:
    return _control_expectation(rho, PAULI_X)


def expectation_Y(rho: DensityMatrix) -> float:
    return _control_expectation(rho, PAULI_Y)


@dataclass(frozen=True)
class EstimatorResult:
    r: complex
    samples: int
    stderr_bound: float  # per quadrature, outcomes are +-1


@dataclass(frozen=True)
class SimulationResult:
    algorithm: str
    estimate: EstimatorResult
    output: complex
    exact_trace: complex
    exact_output: complex
    expected_x: float
    expected_y: float

    @property
    def error(self) -> float:
        return abs(self.estimate.r - self.exact_trace)


def _streams(seed: int) -> tuple[np.random.Generator, np.random.Generator]:
    sx, sy = np.random.SeedSequence(seed).spawn(2)
    return np.random.default_rng(sx), np.random.default_rng(sy)


def _draw_pm1(rng: np.random.Generator, p_plus: np.ndarray | float, n: int) -> int:
    """Sum of ``n`` outcomes in {+1, -1} with ``P(+1) = p_plus``."""
    plus = int(np.count_nonzero(rng.random(n) < p_plus))
    return 2 * plus - n


def _normalization(w: BraidWord, params: ModelParams) -> complex:
    return (-params.A) ** (-3 * _braid.writhe_of_closure(w)) * params.d**2


def _finish(algorithm, w, params, n, sx, sy, exact, ex, ey) -> SimulationResult:
    r = complex(sx / n, sy / n)
    norm = _normalization(w, params)
    return SimulationResult(
        algorithm=algorithm,
        estimate=EstimatorResult(r=r, samples=n, stderr_bound=2.0 / np.sqrt(n)),
        output=complex(norm * r),
        exact_trace=exact,
        exact_output=complex(norm * exact),
        expected_x=ex,
        expected_y=ey,
    )


def run_pure_algorithm(w: BraidWord, k: int, samples: int, seed: int) -> SimulationResult:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    params = make_params(k)
    U = build_braid_unitary(w, params)
    probs = path_distribution(params).as_array()
    diag = np.array([U[PATH_INDEX[p], PATH_INDEX[p]] for p in PATHS])
    rng_x, rng_y = _streams(seed)
    # x and y rounds draw their own paths
    px = rng_x.choice(3, size=samples, p=probs)
    py = rng_y.choice(3, size=samples, p=probs)
    sx = _draw_pm1(rng_x, (1 + diag.real[px]) / 2, samples)
    sy = _draw_pm1(rng_y, (1 + diag.imag[py]) / 2, samples)
    exact = trace_of_unitary(U, params)
    return _finish("pure", w, params, samples, sx, sy, exact, exact.real, exact.imag)


def run_mixed_algorithm(w: BraidWord, k: int, samples: int, seed: int) -> SimulationResult:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    params = make_params(k)
    rho = build_rho_B(w, params)
    ex, ey = expectation_X(rho), expectation_Y(rho)
    rng_x, rng_y = _streams(seed)
    sx = _draw_pm1(rng_x, (1 + ex) / 2, samples)
    sy = _draw_pm1(rng_y, (1 + ey) / 2, samples)
    exact = trace_of_unitary(build_braid_unitary(w, params), params)
    return _finish("mixed", w, params, samples, sx, sy, exact, ex, ey)
