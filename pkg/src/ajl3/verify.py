"""Property suites run by ``ajl3 verify``.

Each suite enumerates its cases, evaluates one boolean check per case and
counts failures.  Errors raised by the library while evaluating a case
count as failures of that case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .ajl_sim import build_phi, build_rho_B, expectation_X, expectation_Y
from .braid import (
    ALPHABET,
    IDENTITY,
    BraidWord,
    all_words,
    separable_family,
    substitute_braid_relation,
    word,
)
from .entanglement import classify_bipartitions, is_ppt, product_check_qubit1
from .errors import JonesToolError
from .jones import jones_at_root, jones_both_methods
from .kauffman import bracket_scaled
from .linalg import adjoint, hermitian_eigenvalues, is_unitary, partial_transpose
from .pathmodel import (
    build_braid_unitary,
    build_E1,
    build_E2,
    build_generator_unitary,
    extract_coefficient,
    make_params,
    markov_trace,
)

DEFAULT_MAX_LEN = 4
DEFAULT_KS = (5, 6)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checked: int
    failed: int
    first_failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failed == 0


Case = tuple[str, Callable[[], bool]]


def _run(name: str, cases: Iterable[Case]) -> SuiteResult:
    checked = failed = 0
    first = None
    for label, check in cases:
        checked += 1
        try:
            ok = bool(check())
        except JonesToolError as exc:
            ok = False
            label = f"{label}: {type(exc).__name__}: {exc}"
        if not ok:
            failed += 1
            first = first or label
    return SuiteResult(name, checked, failed, first)


def _unlink_values(k: int) -> list[tuple[BraidWord, complex]]:
    # closures with known topology: 3-unlink, 2-unlink, unknot
    d = make_params(k).d
    return [
        (IDENTITY, d**2),
        (word(1), d),
        (word(-1), d),
        (word(2), d),
        (word(-2), d),
        (word(1, 2), 1.0),
        (word(1, -2), 1.0),
        (word(-1, -2), 1.0),
    ]


def oracle_cases(words: Sequence[BraidWord], ks: Sequence[int]) -> Iterator[Case]:
    for k in ks:
        params = make_params(k)
        for w in words:
            yield (
                f"bracket vs path, {w.pretty()}, k={k}",
                lambda w=w, p=params: abs(bracket_scaled(w, p) - p.d**2 * markov_trace(w, p)) <= 1e-9,
            )
            yield (
                f"jones path vs oracle, {w.pretty()}, k={k}",
                lambda w=w, k=k: jones_both_methods(w, k)[2] <= 1e-9,
            )
        for w, expected in _unlink_values(k):
            yield (
                f"calibration {w.pretty()}, k={k}",
                lambda w=w, k=k, e=expected: abs(jones_at_root(w, k).value - e) <= 1e-9,
            )


def tl_cases(ks: Sequence[int]) -> Iterator[Case]:
    for k in ks:
        p = make_params(k)
        e1, e2 = build_E1(p), build_E2(p)
        tol = 1e-12
        yield f"E1E2E1=E1, k={k}", lambda a=e1, b=e2: np.max(np.abs(a @ b @ a - a)) <= tol
        yield f"E2E1E2=E2, k={k}", lambda a=e1, b=e2: np.max(np.abs(b @ a @ b - b)) <= tol
        yield f"E1^2=dE1, k={k}", lambda a=e1, d=p.d: np.max(np.abs(a @ a - d * a)) <= tol
        yield f"E2^2=dE2, k={k}", lambda b=e2, d=p.d: np.max(np.abs(b @ b - d * b)) <= tol
        for g in ALPHABET:
            yield f"unitary U_{g}, k={k}", lambda g=g, p=p: is_unitary(build_generator_unitary(g, p))


def braid_relation_cases(words: Sequence[BraidWord], ks: Sequence[int]) -> Iterator[Case]:
    for k in ks:
        p = make_params(k)
        yield (
            f"s1s2s1 = s2s1s2, k={k}",
            lambda p=p: np.max(np.abs(build_braid_unitary(word(1, 2, 1), p) - build_braid_unitary(word(2, 1, 2), p))) <= 1e-12,
        )
        for w in words:
            for v in substitute_braid_relation(w):
                yield (
                    f"jones {w.pretty()} vs {v.pretty()}, k={k}",
                    lambda w=w, v=v, k=k: abs(jones_at_root(w, k).value - jones_at_root(v, k).value) <= 1e-9,
                )


def mixed_equivalence_cases(words: Sequence[BraidWord], ks: Sequence[int]) -> Iterator[Case]:
    for k in ks:
        p = make_params(k)
        phi = build_phi(p).matrix
        for w in words:

            def check(w=w, p=p):
                U = build_braid_unitary(w, p)
                rho = build_rho_B(w, p)
                tr = markov_trace(w, p)
                z = complex(expectation_X(rho), expectation_Y(rho))
                return abs(z - tr) <= 1e-12 and np.max(np.abs(U @ phi @ adjoint(U) - phi)) <= 1e-12

            yield f"mixed == pure expectation, {w.pretty()}, k={k}", check


def control_cut_cases(words: Sequence[BraidWord], ks: Sequence[int]) -> Iterator[Case]:
    for k in ks:
        p = make_params(k)
        d2 = p.d**2
        expected = np.sort([0.0] * 13 + [1 - 2 / d2, 1 / d2, 1 / d2])
        for w in words:

            def check(w=w, p=p, expected=expected):
                rho = build_rho_B(w, p)
                ev = hermitian_eigenvalues(rho.matrix)
                ev_pt = hermitian_eigenvalues(partial_transpose(rho, ["c"]))
                return np.max(np.abs(ev - ev_pt)) <= 1e-9 and np.max(np.abs(ev - expected)) <= 1e-9

            yield f"control-cut spectrum, {w.pretty()}, k={k}", check


def middle_cut_cases(words: Sequence[BraidWord], ks: Sequence[int]) -> Iterator[Case]:
    for k in ks:
        p = make_params(k)
        for w in words:

            def check(w=w, p=p, k=k):
                U = build_braid_unitary(w, p)
                rho = build_rho_B(w, p)
                z12 = abs(extract_coefficient(U, "101", "110")) <= 1e-9
                z21 = abs(extract_coefficient(U, "110", "101")) <= 1e-9
                ppt2 = is_ppt(rho, ["2"])[0]
                ppt3 = is_ppt(rho, ["3"])[0]
                classify_bipartitions(w, k)  # raises ConsistencyError on disagreement
                return ppt2 == ppt3 == z12 == z21

            yield f"middle-cut PPT vs coefficient, {w.pretty()}, k={k}", check


def qubit1_product_cases(words: Sequence[BraidWord], ks: Sequence[int]) -> Iterator[Case]:
    for k in ks:
        p = make_params(k)
        for w in words:
            yield f"qubit 1 product, {w.pretty()}, k={k}", lambda w=w, p=p: product_check_qubit1(build_rho_B(w, p))


def separable_family_cases(ks: Sequence[int], js: Sequence[int] = (0, 2, 4, 6)) -> Iterator[Case]:
    for k in ks:
        for j in js:

            def check(j=j, k=k):
                r = classify_bipartitions(separable_family(j), k)
                return r.is_all_separable() and abs(r.u_coefficients[0]) <= 1e-10

            yield f"s2 s1 s2^j s1 s2 separable, j={j}, k={k}", check


def run_all(max_len: int = DEFAULT_MAX_LEN, ks: Sequence[int] = DEFAULT_KS) -> list[SuiteResult]:
    ks = [make_params(k).k for k in ks]
    words = list(all_words(max_len))
    return [
        _run("oracle", oracle_cases(words, ks)),
        _run("tl_relations", tl_cases(ks)),
        _run("braid_relation", braid_relation_cases(words, ks)),
        _run("mixed_equivalence", mixed_equivalence_cases(words, ks)),
        _run("control_cut_ppt", control_cut_cases(words, ks)),
        _run("middle_cut_criterion", middle_cut_cases(words, ks)),
        _run("qubit1_product", qubit1_product_cases(words, ks)),
        _run("separable_family", separable_family_cases(ks)),
    ]
