"""Amalgamated moments and cumulants over the vertex diagonal.

Moments are diagonal expectations of interleaved products
``E(d1 a1 d2 a2 ... dn an)``.  Partition moments evaluate a noncrossing
partition by repeatedly eliminating an interval block: its bracket is
evaluated under E and the resulting diagonal value is spliced in as a left
multiplier of the next surviving position; values of blocks with nothing to
their right multiply into the final answer.  Cumulants invert moments
through the Mobius function of the noncrossing partition lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import DomainError
from .graph import Graph, PathWord, diagram_distinct_sets
from .ncpart import NoncrossingPartition, enumerate_nc, mobius
from .opcalc import (
    CK,
    DiagonalElement,
    Element,
    GeneralElement,
    GeneratorLetter,
    Monomial,
    RandomVariable,
    Zero,
    expectation,
    multiply,
    reduce_monomial,
    star_axis_property,
    to_general,
)

__all__ = [
    "moment",
    "partition_moment",
    "CumulantReport",
    "cumulant",
    "trivial_cumulant",
    "is_partition_connected",
    "connectivity_multiplier",
    "cumulant_via_multiplier",
    "FreenessWitness",
    "mixed_cumulants_vanish",
    "freeness_certificate",
    "ClassifyReport",
    "classify",
]


def _check_slots(
    variables: Sequence[Element],
    diagonals: Sequence[DiagonalElement | None] | None,
) -> list[DiagonalElement | None]:
    if len(variables) == 0:
        raise DomainError("need at least one variable slot")
    if diagonals is None:
        return [None] * len(variables)
    if len(diagonals) != len(variables):
        raise DomainError("one diagonal multiplier per variable slot")
    return list(diagonals)


def _graph_of(x: Element) -> Graph:
    g = x.graph if not isinstance(x, (GeneratorLetter, Monomial)) else (
        x.word.graph if isinstance(x, GeneratorLetter) else x.graph
    )
    if g is None:
        raise DomainError("cannot infer the graph of a unit monomial")
    return g


def _chain(
    variables: Sequence[Element],
    diagonals: Sequence[DiagonalElement | None],
) -> GeneralElement:
    out: GeneralElement | None = None
    for d, a in zip(diagonals, variables):
        for factor in (d, a):
            if factor is None:
                continue
            out = to_general(factor) if out is None else multiply(out, factor)
    assert out is not None
    return out


def moment(
    variables: Sequence[Element],
    diagonals: Sequence[DiagonalElement | None] | None = None,
) -> DiagonalElement:
    """E(d1 a1 d2 a2 ... dn an); a ``None`` diagonal slot is the unit."""
    ds = _check_slots(variables, diagonals)
    return expectation(_chain(variables, ds))


def partition_moment(
    partition: NoncrossingPartition,
    items: Sequence[tuple[DiagonalElement | None, Element]],
) -> DiagonalElement:
    """Evaluate E along a noncrossing partition of the slot positions."""
    n = len(items)
    if partition.n != n:
        raise DomainError(f"partition of {partition.n} against {n} slots")
    graph = _graph_of(items[0][1])
    pending: dict[int, DiagonalElement | None] = {
        i + 1: d for i, (d, _a) in enumerate(items)
    }
    elems: dict[int, Element] = {i + 1: a for i, (_d, a) in enumerate(items)}
    remaining = list(range(1, n + 1))
    blocks = list(partition.blocks)
    closed: DiagonalElement | None = None
    while blocks:
        block = None
        for b in blocks:
            inside = [x for x in remaining if b[0] <= x <= b[-1]]
            if inside == list(b):
                block = b
                break
        assert block is not None  # noncrossing partitions always have one
        blocks.remove(block)
        value = expectation(
            _chain([elems[j] for j in block], [pending[j] for j in block])
        )
        if value.is_zero():
            # A zero block value annihilates its enclosing bracket.
            return DiagonalElement.zero(graph)
        remaining = [x for x in remaining if x not in block]
        later = [x for x in remaining if x > block[-1]]
        if later:
            nxt = later[0]
            cur = pending[nxt]
            pending[nxt] = value if cur is None else value * cur
        else:
            closed = value if closed is None else closed * value
    assert closed is not None
    return DiagonalElement(graph, dict(closed.entries))


@dataclass
class CumulantReport:
    """Cumulant value plus its per-partition decomposition."""

    order: int
    value: DiagonalElement
    contributions: dict[NoncrossingPartition, DiagonalElement]
    weights: dict[NoncrossingPartition, int]


def cumulant(
    variables: Sequence[Element],
    diagonals: Sequence[DiagonalElement | None] | None = None,
) -> CumulantReport:
    """n-th amalgamated cumulant by Mobius inversion over all of NC(n)."""
    ds = _check_slots(variables, diagonals)
    n = len(variables)
    graph = _graph_of(variables[0])
    top = NoncrossingPartition.top(n)
    items = list(zip(ds, variables))
    value = DiagonalElement.zero(graph)
    contributions: dict[NoncrossingPartition, DiagonalElement] = {}
    weights: dict[NoncrossingPartition, int] = {}
    for p in enumerate_nc(n):
        contrib = partition_moment(p, items)
        weight = mobius(p, top)
        contributions[p] = contrib
        weights[p] = weight
        value = value + contrib.scale(weight)
    return CumulantReport(n, value, contributions, weights)


def trivial_cumulant(variable: Element, n: int) -> DiagonalElement:
    """k_n(a, ..., a) with unit diagonal slots."""
    return cumulant([variable] * n).value


def is_partition_connected(
    partition: NoncrossingPartition, letters: Sequence[GeneratorLetter]
) -> bool:
    """True when the partition moment of the letter tuple is nonzero."""
    return not partition_moment(
        partition, [(None, letter) for letter in letters]
    ).is_zero()


def connectivity_multiplier(
    letters: Sequence[GeneratorLetter],
) -> tuple[int, list[NoncrossingPartition]]:
    """Sum of Mobius weights over the partitions that connect the letters."""
    if not letters:
        raise DomainError("need at least one letter")
    n = len(letters)
    top = NoncrossingPartition.top(n)
    connected = [p for p in enumerate_nc(n) if is_partition_connected(p, letters)]
    return sum(mobius(p, top) for p in connected), connected


def cumulant_via_multiplier(letters: Sequence[GeneratorLetter]) -> DiagonalElement:
    """Shortcut cumulant: connectivity weight times the full-word expectation.

    Requires the letter monomial to have the star-axis property; on that
    hypothesis every connecting partition evaluates to the full expectation,
    so the Mobius sum factors.
    """
    m = Monomial(tuple(letters))
    if not star_axis_property(m):
        raise DomainError("shortcut cumulant needs the star-axis property")
    weight, _connected = connectivity_multiplier(letters)
    graph = letters[0].word.graph
    return expectation(reduce_monomial(m, CK), graph).scale(weight)


@dataclass
class FreenessWitness:
    """A nonvanishing mixed cumulant: its order, slot pattern, and value."""

    order: int
    pattern: tuple[str, ...]
    value: DiagonalElement


def mixed_cumulants_vanish(
    a: RandomVariable, b: RandomVariable, max_order: int = 4
) -> tuple[bool, FreenessWitness | None]:
    """Brute-force freeness check over the diagonal.

    Scans every tuple over {a, a*, b, b*} of orders 2..max_order that uses
    both letters and returns the first nonvanishing cumulant as a witness.
    Identical variables with nonempty path support are reported not free
    immediately (a variable inside the diagonal is free from everything).
    """
    if a.graph != b.graph:
        raise DomainError("variables live over different graphs")
    if max_order < 2:
        raise DomainError("max_order must be >= 2")
    if a == b and a.path_support():
        # k2(a, a*) has only nonnegative diagonal weights off the square
        # terms, so it cannot vanish when a has path support.
        witness = FreenessWitness(2, ("a", "b*"), cumulant([a, a.adjoint()]).value)
        return False, witness
    slots = {"a": a, "a*": a.adjoint(), "b": b, "b*": b.adjoint()}
    for n in range(2, max_order + 1):
        for pattern in product(("a", "a*", "b", "b*"), repeat=n):
            kinds = {label[0] for label in pattern}
            if kinds != {"a", "b"}:
                continue
            value = cumulant([slots[label] for label in pattern]).value
            if not value.is_zero():
                return False, FreenessWitness(n, pattern, value)
    return True, None


def freeness_certificate(a: RandomVariable, b: RandomVariable) -> bool:
    """Sufficient condition: certified free when the path supports are
    diagram-distinct across the pair.  False means unknown, not not-free."""
    if a.graph != b.graph:
        raise DomainError("variables live over different graphs")
    return diagram_distinct_sets(a.path_support(), b.path_support())


def _support_hint(a: RandomVariable) -> str:
    paths = a.path_support()
    if not paths:
        return "diagonal"
    loops = {w for w in paths if w.is_loop}
    if loops == paths:
        return "loops"
    if not loops:
        return "non-loop paths"
    return "mixed paths"


@dataclass
class ClassifyReport:
    self_adjoint: bool
    semicircular: bool
    even: bool
    r_diagonal: bool
    max_order: int
    support_hint: str


def classify(a: RandomVariable, max_order: int = 6) -> ClassifyReport:
    """Distributional shape report from trivial and mixed cumulants.

    semicircular: self-adjoint, k2 nonzero, k_n = 0 for all other n up to
    max_order.  even: self-adjoint with vanishing odd cumulants.  r_diagonal:
    every cumulant in (a, a*) vanishes except the even strictly alternating
    ones.  All checks are exact and exhaustive up to max_order.
    """
    if max_order < 2:
        raise DomainError("max_order must be >= 2")
    if max_order % 2:
        raise DomainError("max_order must be even")
    self_adjoint = a.is_self_adjoint()
    trivial = {n: trivial_cumulant(a, n) for n in range(1, max_order + 1)}
    semicircular = (
        self_adjoint
        and not trivial[2].is_zero()
        and all(trivial[n].is_zero() for n in range(1, max_order + 1) if n != 2)
    )
    even = self_adjoint and all(
        trivial[n].is_zero() for n in range(1, max_order + 1, 2)
    )
    adj = a.adjoint()
    r_diagonal = True
    for n in range(1, max_order + 1):
        for pattern in product((False, True), repeat=n):
            alternating = n % 2 == 0 and all(
                pattern[i] != pattern[i + 1] for i in range(n - 1)
            )
            if alternating:
                continue
            value = cumulant([adj if star else a for star in pattern]).value
            if not value.is_zero():
                r_diagonal = False
                break
        if not r_diagonal:
            break
    return ClassifyReport(
        self_adjoint, semicircular, even, r_diagonal, max_order, _support_hint(a)
    )
