"""Path-model representation of TL_3(d) on three qubits.

Only the three admissible paths ``101``, ``110`` and ``111`` carry weight;
Phi(E_1) and Phi(E_2) vanish on the other five basis states, so every braid
image acts there as a scalar power of ``A``.

Entries of Phi(E_j) and the path probabilities are computed twice, once from
``lambda_j = sin(pi j / k)`` and once from ``d``, and must agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .braid import BraidWord, Generator
from .errors import ConsistencyError, KTooSmall, StructureViolation

PATHS = ("101", "110", "111")
PATH_INDEX = {p: int(p, 2) for p in PATHS}
# vertex of G_k each path ends on (walk starts at vertex 1)
PATH_END = {"101": 2, "110": 2, "111": 4}
# positions of the 8x8 braid image allowed to be nonzero inside the path block
ALLOWED = frozenset(
    [("101", "101"), ("110", "110"), ("111", "111"), ("101", "110"), ("110", "101")]
)
DUAL_FORM_TOL = 1e-12
STRUCTURE_TOL = 1e-10


@dataclass(frozen=True)
class ModelParams:
    k: int
    d: float
    A: complex
    lam: tuple[float, ...]  # lam[j] = sin(pi j / k), lam[0] = 0

    def lambda_(self, j: int) -> float:
        if not 1 <= j <= self.k - 1:
            raise ValueError(f"lambda_j defined for 1 <= j <= {self.k - 1}, got {j}")
        return self.lam[j]

    @property
    def t(self) -> complex:
        """Jones variable ``A^-4 = exp(2 pi i / k)``."""
        return self.A**-4


@lru_cache(maxsize=None)
def make_params(k: int) -> ModelParams:
    if int(k) != k or k < 5:
        raise KTooSmall(f"k must be an integer >= 5, got {k}")
    k = int(k)
    d = 2.0 * math.cos(math.pi / k)
    A = 1j * np.exp(-1j * math.pi / (2 * k))
    lam = tuple(math.sin(math.pi * j / k) for j in range(k))
    params = ModelParams(k=k, d=d, A=complex(A), lam=lam)
    if abs(-(A**-2) - A**2 - d) > 1e-12:
        raise ConsistencyError(f"d != -A^-2 - A^2 at k={k}")
    if abs(lam[2] / lam[1] - d) > 1e-12:
        raise ConsistencyError(f"lambda_2 / lambda_1 != d at k={k}")
    return params


@dataclass(frozen=True)
class PathDistribution:
    probs: dict[str, float]

    def __getitem__(self, p: str) -> float:
        return self.probs[p]

    def as_array(self) -> np.ndarray:
        return np.array([self.probs[p] for p in PATHS])


def path_distribution(params: ModelParams) -> PathDistribution:
    total = sum(params.lam[PATH_END[q]] for q in PATHS)
    from_lambda = {p: params.lam[PATH_END[p]] / total for p in PATHS}
    d2 = params.d**2
    closed = {"101": 1 / d2, "110": 1 / d2, "111": 1 - 2 / d2}
    for p in PATHS:
        if abs(from_lambda[p] - closed[p]) > DUAL_FORM_TOL:
            raise ConsistencyError(f"Pr({p}) disagrees between forms at k={params.k}")
    return PathDistribution(closed)


def _check_forms(a: np.ndarray, b: np.ndarray, what: str, k: int) -> None:
    if np.max(np.abs(a - b)) > DUAL_FORM_TOL:
        raise ConsistencyError(f"{what}: lambda-form and d-form disagree at k={k}")


def build_E1(params: ModelParams) -> np.ndarray:
    i = PATH_INDEX["101"]
    lam_form = np.zeros((8, 8), dtype=complex)
    lam_form[i, i] = params.lam[2] / params.lam[1]
    d_form = np.zeros((8, 8), dtype=complex)
    d_form[i, i] = params.d
    _check_forms(lam_form, d_form, "Phi(E1)", params.k)
    return d_form


def build_E2(params: ModelParams) -> np.ndarray:
    a, b = PATH_INDEX["101"], PATH_INDEX["110"]
    l1, l2, l3 = params.lam[1], params.lam[2], params.lam[3]
    lam_form = np.zeros((8, 8), dtype=complex)
    lam_form[a, a] = l1 / l2
    lam_form[a, b] = lam_form[b, a] = math.sqrt(l1 * l3) / l2
    lam_form[b, b] = l3 / l2
    d = params.d
    d_form = np.zeros((8, 8), dtype=complex)
    d_form[a, a] = 1 / d
    d_form[a, b] = d_form[b, a] = math.sqrt(d * d - 1) / d
    d_form[b, b] = (d * d - 1) / d
    _check_forms(lam_form, d_form, "Phi(E2)", params.k)
    return d_form


def build_E(j: int, params: ModelParams) -> np.ndarray:
    return build_E1(params) if j == 1 else build_E2(params)


def build_generator_unitary(g: Generator, params: ModelParams) -> np.ndarray:
    E = build_E(g.index, params)
    A = params.A
    eye = np.eye(8, dtype=complex)
    if g.sign > 0:
        return A * E + (1 / A) * eye
    return (1 / A) * E + A * eye


def build_braid_unitary(w: BraidWord, params: ModelParams) -> np.ndarray:
    gens = {g: build_generator_unitary(g, params) for g in set(w)}
    U = np.eye(8, dtype=complex)
    for g in w:
        U = U @ gens[g]
    return U


def trace_of_unitary(U: np.ndarray, params: ModelParams) -> complex:
    """Weighted diagonal sum ``sum_p Pr(p) <p|U|p>``."""
    dist = path_distribution(params)
    return complex(sum(dist[p] * U[PATH_INDEX[p], PATH_INDEX[p]] for p in PATHS))


def markov_trace(w: BraidWord, params: ModelParams) -> complex:
    return trace_of_unitary(build_braid_unitary(w, params), params)


def check_structure(U: np.ndarray, tol: float = STRUCTURE_TOL) -> None:
    """Raise :class:`StructureViolation` unless ``U`` has the braid-image pattern.

    Inside the path block only the three diagonal entries and the
    ``101 <-> 110`` pair may be nonzero; outside it ``U`` must be a
    unit-modulus scalar multiple of the identity.
    """
    U = np.asarray(U)
    path_idx = [PATH_INDEX[p] for p in PATHS]
    for p in PATHS:
        for q in PATHS:
            if (p, q) not in ALLOWED and abs(U[PATH_INDEX[p], PATH_INDEX[q]]) > tol:
                raise StructureViolation(f"nonzero entry <{p}|U|{q}>")
    rest = [i for i in range(8) if i not in path_idx]
    for i in range(8):
        for j in range(8):
            if (i in path_idx) != (j in path_idx) and abs(U[i, j]) > tol:
                raise StructureViolation(f"entry ({i}, {j}) couples the path block to the rest")
    block = U[np.ix_(rest, rest)]
    scalar = block[0, 0]
    if abs(abs(scalar) - 1) > tol or np.max(np.abs(block - scalar * np.eye(len(rest)))) > tol:
        raise StructureViolation("off the path block U is not a unit scalar")


def extract_coefficient(U: np.ndarray, p: str, q: str) -> complex:
    """``<p|U|q>`` for admissible paths, after validating the block pattern."""
    if p not in PATH_INDEX or q not in PATH_INDEX:
        raise ValueError(f"paths must be among {PATHS}, got {p!r}, {q!r}")
    check_structure(U)
    return complex(U[PATH_INDEX[p], PATH_INDEX[q]])
