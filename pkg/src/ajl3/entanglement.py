"""Bipartite entanglement of the pre-measurement state rho_B.

Up to the symmetries of rho_B there are four bipartitions, named by their
single-qubit side: ``{c}``, ``{1}``, ``{2}`` and ``{3}``.  The verdicts come
from closed-form criteria:

* ``{1}`` is always a product cut: qubit 1 sits in ``|1>``.
* ``{c}`` is always separable.
* ``{2}`` and ``{3}`` are separable exactly when the off-diagonal
  coefficient ``<101|U_B|110>`` vanishes.

Every verdict is cross-checked against a numerical partial-transpose
spectrum, and any disagreement raises :class:`ConsistencyError`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .ajl_sim import KET1, build_rho_B
from .braid import BraidWord
from .errors import ConsistencyError
from .linalg import (
    DensityMatrix,
    hermitian_eigenvalues,
    partial_trace,
    partial_transpose,
    rank,
    reorder,
    tensor,
)
from .pathmodel import build_braid_unitary, extract_coefficient, make_params

PPT_TOL = 1e-9
PRODUCT_TOL = 1e-9
U_ZERO_TOL = 1e-9
CANONICAL_CUTS = ("c", "1", "2", "3")


class Classification(str, enum.Enum):
    PRODUCT = "Product"
    SEPARABLE = "Separable"
    ENTANGLED = "Entangled"


def is_ppt(rho: DensityMatrix, over, tol: float = PPT_TOL) -> tuple[bool, float]:
    lo = float(hermitian_eigenvalues(partial_transpose(rho, over))[0])
    return lo >= -tol, lo


def product_check_qubit1(rho_B: DensityMatrix, tol: float = PRODUCT_TOL) -> bool:
    """Whether rho_B equals ``|1><1|`` on qubit 1 times its reduction on the rest."""
    rest = partial_trace(rho_B, ["1"])
    rebuilt = tensor(KET1, rest.matrix)
    rebuilt = reorder(rebuilt, ("1",) + rest.labels, rho_B.labels)
    return float(np.linalg.norm(rho_B.matrix - rebuilt)) <= tol


@dataclass(frozen=True)
class CutReport:
    classification: Classification
    ppt_min_eigenvalue: float
    ppt: bool


@dataclass(frozen=True)
class EntanglementReport:
    word: BraidWord
    k: int
    u_coefficients: tuple[complex, complex]  # (<101|U|110>, <110|U|101>)
    per_bipartition: dict[str, CutReport] = field(default_factory=dict)

    def is_all_separable(self) -> bool:
        return all(r.classification != Classification.ENTANGLED for r in self.per_bipartition.values())


def u_coefficients(w: BraidWord, k: int) -> tuple[complex, complex]:
    U = build_braid_unitary(w, make_params(k))
    return extract_coefficient(U, "101", "110"), extract_coefficient(U, "110", "101")


def classify_bipartitions(w: BraidWord, k: int) -> EntanglementReport:
    params = make_params(k)
    U = build_braid_unitary(w, params)
    u12 = extract_coefficient(U, "101", "110")
    u21 = extract_coefficient(U, "110", "101")
    rho = build_rho_B(w, params)
    zero = abs(u12) <= U_ZERO_TOL
    if zero != (abs(u21) <= U_ZERO_TOL):
        raise ConsistencyError(f"u(101,110)={u12} and u(110,101)={u21} disagree on vanishing")

    cuts: dict[str, CutReport] = {}
    for cut in CANONICAL_CUTS:
        ppt, lo = is_ppt(rho, [cut])
        if cut == "1":
            if not product_check_qubit1(rho):
                raise ConsistencyError(f"rho_B is not a product across {{1}} for {w}")
            verdict = Classification.PRODUCT
        elif cut == "c":
            verdict = Classification.SEPARABLE
        else:
            verdict = Classification.SEPARABLE if zero else Classification.ENTANGLED
        if ppt != (verdict != Classification.ENTANGLED):
            raise ConsistencyError(
                f"cut {{{cut}}}: verdict {verdict.value} but PPT min eigenvalue {lo:.3e}"
            )
        cuts[cut] = CutReport(verdict, lo, ppt)
    return EntanglementReport(w, params.k, (u12, u21), cuts)


@dataclass(frozen=True)
class RankProfile:
    total: int
    reduced: dict[frozenset, int]  # kept labels -> rank of the reduced state

    def of(self, *kept: str) -> int:
        return self.reduced[frozenset(kept)]


def rank_profile(rho_B: DensityMatrix) -> RankProfile:
    """Rank of rho_B and of its reduction onto each side of the four cuts."""
    reduced = {}
    for cut in CANONICAL_CUTS:
        for kept in ({cut}, set(rho_B.labels) - {cut}):
            traced = [lab for lab in rho_B.labels if lab not in kept]
            reduced[frozenset(kept)] = rank(partial_trace(rho_B, traced).matrix)
    return RankProfile(rank(rho_B.matrix), reduced)

