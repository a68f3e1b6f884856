"""Jones values of trace closures at ``t = A^-4 = exp(2 pi i / k)``.

Values use the normalization under which the 3-component unlink is ``d^2``
(so the unknot is 1 and the 2-component unlink is ``d``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import braid as _braid
from .braid import BraidWord
from .kauffman import jones_oracle
from .pathmodel import make_params, markov_trace


class Method(enum.Enum):
    PATH_MODEL = "path"
    BRACKET_ORACLE = "bracket"


@dataclass(frozen=True)
class JonesValue:
    value: complex
    k: int
    t: complex
    method: Method


def jones_at_root(w: BraidWord, k: int) -> JonesValue:
    params = make_params(k)
    writhe = _braid.writhe_of_closure(w)
    value = (-params.A) ** (-3 * writhe) * params.d**2 * markov_trace(w, params)
    return JonesValue(complex(value), params.k, params.t, Method.PATH_MODEL)


def jones_by_oracle(w: BraidWord, k: int) -> JonesValue:
    params = make_params(k)
    return JonesValue(jones_oracle(w, params), params.k, params.t, Method.BRACKET_ORACLE)


def jones_both_methods(w: BraidWord, k: int) -> tuple[JonesValue, JonesValue, float]:
    oracle = jones_by_oracle(w, k)  # raises WordTooLong first
    path = jones_at_root(w, k)
    return path, oracle, abs(path.value - oracle.value)
