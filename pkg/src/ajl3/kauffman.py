"""Brute-force Kauffman bracket of three-strand trace closures.

This module shares nothing with the path model except the constants ``A``
and ``d``: each crossing is smoothed into the identity or the cap-cup
diagram, the resulting Temperley-Lieb diagrams are stacked, and loops are
counted with union-find.  Summing over all ``2^m`` smoothings gives the
bracket scaled so the 3-component unlink evaluates to ``d^2``.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from . import braid as _braid
from .braid import BraidWord
from .errors import WordTooLong
from .pathmodel import ModelParams

MAX_WORD_LEN = 20
N_STRANDS = 3

# Boundary points: 0, 1, 2 along the top (left to right), 3, 4, 5 along the
# bottom.  A matching is a tuple ``partner`` with partner[partner[i]] == i.
Matching = tuple[int, ...]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def n_components(self, points) -> int:
        return len({self.find(p) for p in points})


@dataclass(frozen=True)
class TLDiagram:
    matching: Matching
    closed_loops: int = 0

    def __post_init__(self):
        m = self.matching
        if len(m) != 2 * N_STRANDS or sorted(m) != list(range(2 * N_STRANDS)):
            raise ValueError(f"not a matching on six points: {m}")
        if any(m[m[i]] != i or m[i] == i for i in range(len(m))):
            raise ValueError(f"not a perfect matching: {m}")

    def __matmul__(self, other: TLDiagram) -> TLDiagram:
        return compose_diagrams(self, other)


def _from_pairs(*pairs: tuple[int, int]) -> Matching:
    out = [0] * (2 * N_STRANDS)
    for a, b in pairs:
        out[a], out[b] = b, a
    return tuple(out)


IDENTITY_DIAGRAM = TLDiagram(_from_pairs((0, 3), (1, 4), (2, 5)))
E1_DIAGRAM = TLDiagram(_from_pairs((0, 1), (3, 4), (2, 5)))
E2_DIAGRAM = TLDiagram(_from_pairs((1, 2), (4, 5), (0, 3)))


def cap_cup(j: int) -> TLDiagram:
    return E1_DIAGRAM if j == 1 else E2_DIAGRAM


@lru_cache(maxsize=None)
def _compose_matchings(top: Matching, bottom: Matching) -> tuple[Matching, int]:
    # points 0..5 belong to ``top``, 6..11 to ``bottom``
    n = 2 * N_STRANDS
    uf = _UnionFind(2 * n)
    for i in range(n):
        uf.union(i, top[i])
        uf.union(n + i, n + bottom[i])
    for i in range(N_STRANDS):
        uf.union(N_STRANDS + i, n + i)  # top's bottom edge meets bottom's top edge
    boundary = list(range(N_STRANDS)) + [n + N_STRANDS + i for i in range(N_STRANDS)]
    # output point numbering: top's top 0..2, bottom's bottom 3..5
    out_label = {p: i for i, p in enumerate(boundary)}
    groups: dict[int, list[int]] = {}
    for p in boundary:
        groups.setdefault(uf.find(p), []).append(out_label[p])
    matching = _from_pairs(*(tuple(g) for g in groups.values()))
    all_roots = {uf.find(p) for p in range(2 * n)}
    new_loops = len(all_roots) - len(groups)
    return matching, new_loops


def compose_diagrams(a: TLDiagram, b: TLDiagram) -> TLDiagram:
    """Stack ``a`` on top of ``b``; new closed loops are added to the count."""
    matching, new_loops = _compose_matchings(a.matching, b.matching)
    return TLDiagram(matching, a.closed_loops + b.closed_loops + new_loops)


def closure_loop_count(diagram: TLDiagram) -> int:
    """Loops in the trace closure (top i joined to bottom i), plus closed loops."""
    uf = _UnionFind(2 * N_STRANDS)
    for i, j in enumerate(diagram.matching):
        uf.union(i, j)
    for i in range(N_STRANDS):
        uf.union(i, N_STRANDS + i)
    return uf.n_components(range(2 * N_STRANDS)) + diagram.closed_loops


class Smoothing(enum.Enum):
    IDENTITY = "identity"
    CAPCUP = "capcup"


def smoothing_state(w: BraidWord, index: int) -> tuple[Smoothing, ...]:
    """The ``index``-th of the ``2^m`` states; bit i (MSB first) set means cap-cup."""
    m = len(w)
    return tuple(
        Smoothing.CAPCUP if (index >> (m - 1 - i)) & 1 else Smoothing.IDENTITY
        for i in range(m)
    )


def _check_length(w: BraidWord) -> None:
    if len(w) > MAX_WORD_LEN:
        raise WordTooLong(f"state sum limited to {MAX_WORD_LEN} crossings, got {len(w)}")


def state_tally(w: BraidWord, start: int = 0, stop: int | None = None) -> Counter:
    """Count states in ``[start, stop)`` by ``(A exponent, closure loops)``.

    A cap-cup smoothing of ``s_j`` weighs ``A`` and the identity smoothing
    ``A^-1``; for ``s_j^-1`` the weights swap.  The tally is independent of
    ``k``, and disjoint index ranges can be tallied separately and added.
    """
    _check_length(w)
    m = len(w)
    stop = 2**m if stop is None else stop
    tally: Counter = Counter()
    letters = w.letters
    for index in range(start, stop):
        diagram = IDENTITY_DIAGRAM
        exponent = 0
        for i, g in enumerate(letters):
            capcup = (index >> (m - 1 - i)) & 1
            if capcup:
                diagram = compose_diagrams(diagram, cap_cup(g.index))
                exponent += g.sign
            else:
                exponent -= g.sign
        tally[(exponent, closure_loop_count(diagram))] += 1
    return tally


def evaluate_tally(tally: Counter, params: ModelParams) -> complex:
    A, d = params.A, params.d
    return complex(sum(n * A**e * d ** (loops - 1) for (e, loops), n in tally.items()))


def bracket_scaled(w: BraidWord, params: ModelParams) -> complex:
    return evaluate_tally(state_tally(w), params)


def jones_oracle(w: BraidWord, params: ModelParams) -> complex:
    writhe = _braid.writhe_of_closure(w)
    return complex((-params.A) ** (-3 * writhe) * bracket_scaled(w, params))


def reachable_matchings() -> set[Matching]:
    """Closure of {1, E1, E2} under composition (the five planar TL_3 diagrams)."""
    seen = {IDENTITY_DIAGRAM.matching}
    frontier = list(seen)
    gens = [E1_DIAGRAM.matching, E2_DIAGRAM.matching]
    while frontier:
        nxt = []
        for m, g in itertools.product(frontier, gens):
            out, _ = _compose_matchings(m, g)
            if out not in seen:
                seen.add(out)
                nxt.append(out)
        frontier = nxt
    return seen
