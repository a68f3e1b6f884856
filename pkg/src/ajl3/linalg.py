"""Small dense complex linear algebra on labelled qubit registers.

Matrices are plain ``numpy`` arrays.  Qubit ordering is big-endian: the first
label is the most significant bit, so on labels ``("c", "1", "2", "3")`` the
basis state ``|c q1 q2 q3>`` sits at index ``8c + 4q1 + 2q2 + q3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BadSubset, DimMismatch, InvalidState, NotHermitian

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
EIG_HERMITIAN_TOL = 1e-10
RANK_TOL = 1e-9

I2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def _square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def tensor(*ms: np.ndarray) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for m in ms:
        m = _square(m)
        a, b = len(out), len(m)
        out = (out[:, None, :, None] * m[None, :, None, :]).reshape(a * b, a * b)
    return out


def multiply(*ms: np.ndarray) -> np.ndarray:
    out = _square(ms[0])
    for m in ms[1:]:
        m = _square(m)
        if m.shape != out.shape:
            raise DimMismatch(f"cannot multiply {out.shape} by {m.shape}")
        out = out @ m
    return out


def adjoint(m: np.ndarray) -> np.ndarray:
    return _square(m).conj().T


def standard_trace(m: np.ndarray) -> complex:
    return complex(np.trace(_square(m)))


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)


def is_unitary(m: np.ndarray, tol: float = 1e-12) -> bool:
    m = _square(m)
    return bool(np.max(np.abs(m @ m.conj().T - np.eye(len(m)))) <= tol)


def ket(bits: str) -> np.ndarray:
    """Column basis vector for a bitstring, e.g. ``ket("101")``."""
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def projector(bits: str) -> np.ndarray:
    v = ket(bits)
    return np.outer(v, v.conj())


# --- eigenvalues -----------------------------------------------------------


def jacobi_eigenvalues(m: np.ndarray, tol: float = 1e-14, max_sweeps: int = 100) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix by cyclic complex Jacobi.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the real symmetric Jacobi rotation.  Stops once the off-diagonal
    Frobenius mass drops below ``tol`` (scaled by the matrix norm when that
    exceeds one).
    """
    a = np.array(_square(m), dtype=complex)
    n = len(a)
    scale = max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        off = np.sqrt(max(0.0, np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2)))
        if off < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < 1e-300:
                    continue
                phase = apq / r
                app, aqq = a[p, p].real, a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # J = diag(1, conj(phase)) @ [[c, s], [-s, c]] on the (p, q) plane
                j = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                cols = a[:, [p, q]] @ j
                a[:, p], a[:, q] = cols[:, 0], cols[:, 1]
                rows = j.conj().T @ a[[p, q], :]
                a[p, :], a[q, :] = rows[0], rows[1]
                a[p, q] = a[q, p] = 0.0
    return np.sort(np.diag(a).real)


def hermitian_eigenvalues(m: np.ndarray, method: str = "lapack") -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending.

    ``method="lapack"`` uses ``numpy.linalg.eigvalsh``; ``method="jacobi"``
    uses :func:`jacobi_eigenvalues`.  The two are cross-checked in the tests.
    """
    m = _square(m)
    if not is_hermitian(m, EIG_HERMITIAN_TOL):
        raise NotHermitian("matrix is not Hermitian to 1e-10")
    if method == "jacobi":
        return jacobi_eigenvalues(m)
    if method == "lapack":
        return np.linalg.eigvalsh((m + m.conj().T) / 2)
    raise ValueError(f"unknown eigenvalue method {method!r}")


def rank(m: np.ndarray, tol: float = RANK_TOL) -> int:
    return int(np.sum(np.abs(hermitian_eigenvalues(m)) > tol))


# --- labelled states -------------------------------------------------------


@dataclass(frozen=True)
class DensityMatrix:
    """A validated density matrix over an ordered tuple of qubit labels."""

    matrix: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        m = np.array(_square(self.matrix))
        if len(set(labels)) != len(labels):
            raise BadSubset(f"duplicate qubit labels {labels}")
        if m.shape[0] != 2 ** len(labels):
            raise DimMismatch(f"{len(labels)} qubit labels but matrix is {m.shape}")
        if not is_hermitian(m, HERMITIAN_TOL):
            raise InvalidState("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > TRACE_TOL:
            raise InvalidState(f"density matrix trace is {np.trace(m)}")
        if np.linalg.eigvalsh((m + m.conj().T) / 2)[0] < -PSD_TOL:
            raise InvalidState("density matrix has a negative eigenvalue")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def n_qubits(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return 2 ** len(self.labels)


@dataclass(frozen=True)
class Bipartition:
    part_m: frozenset[str]
    part_n: frozenset[str]

    @classmethod
    def of(cls, labels: Sequence[str], part_m: Iterable[str]) -> Bipartition:
        m = frozenset(str(x) for x in part_m)
        _check_subset(tuple(labels), m)
        return cls(m, frozenset(labels) - m)

    def __str__(self) -> str:
        def fmt(s):
            return "{" + ",".join(sorted(s, key=_label_key)) + "}"

        return f"{fmt(self.part_m)};{fmt(self.part_n)}"


def _label_key(label: str):
    return (label != "c", label)


def _check_subset(labels: tuple[str, ...], over: frozenset[str]) -> None:
    if not over:
        raise BadSubset("subset is empty")
    unknown = over - set(labels)
    if unknown:
        raise BadSubset(f"labels {sorted(unknown)} not in {labels}")
    if len(over) == len(labels):
        raise BadSubset("subset must be a proper subset of the labels")


def _as_subset(labels: tuple[str, ...], over) -> frozenset[str]:
    if isinstance(over, str):
        over = [over]
    sub = frozenset(str(x) for x in over)
    _check_subset(labels, sub)
    return sub


def partial_trace(rho: DensityMatrix, over) -> DensityMatrix:
    """Trace out the qubits in ``over``; the rest keep their relative order."""
    labels = rho.labels
    sub = _as_subset(labels, over)
    n = len(labels)
    t = rho.matrix.reshape((2,) * (2 * n))
    # einsum: row index letters a.., column index letters; repeat for traced axes
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    rows = list(letters[:n])
    cols = list(letters[n : 2 * n])
    for i, lab in enumerate(labels):
        if lab in sub:
            cols[i] = rows[i]
    keep = [i for i, lab in enumerate(labels) if lab not in sub]
    out_spec = "".join(rows[i] for i in keep) + "".join(cols[i] for i in keep)
    reduced = np.einsum("".join(rows) + "".join(cols) + "->" + out_spec, t)
    dk = 2 ** len(keep)
    return DensityMatrix(reduced.reshape(dk, dk), tuple(labels[i] for i in keep))


def partial_transpose_matrix(m: np.ndarray, labels: Sequence[str], over) -> np.ndarray:
    """Partial transpose of a raw matrix; ``<i_M j_N|out|k_M l_N> = <k_M j_N|m|i_M l_N>``."""
    labels = tuple(str(x) for x in labels)
    sub = _as_subset(labels, over)
    n = len(labels)
    m = _square(m)
    if m.shape[0] != 2**n:
        raise DimMismatch(f"{n} labels but matrix is {m.shape}")
    axes = list(range(2 * n))
    for i, lab in enumerate(labels):
        if lab in sub:
            axes[i], axes[n + i] = n + i, i
    return m.reshape((2,) * (2 * n)).transpose(axes).reshape(2**n, 2**n)


def partial_transpose(rho: DensityMatrix, over) -> np.ndarray:
    return partial_transpose_matrix(rho.matrix, rho.labels, over)


def reorder(m: np.ndarray, labels: Sequence[str], new_labels: Sequence[str]) -> np.ndarray:
    """Permute tensor factors of ``m`` from ``labels`` order into ``new_labels`` order."""
    labels = tuple(str(x) for x in labels)
    new_labels = tuple(str(x) for x in new_labels)
    if sorted(labels) != sorted(new_labels):
        raise BadSubset(f"{new_labels} is not a permutation of {labels}")
    n = len(labels)
    perm = [labels.index(lab) for lab in new_labels]
    axes = perm + [n + p for p in perm]
    return _square(m).reshape((2,) * (2 * n)).transpose(axes).reshape(2**n, 2**n)
