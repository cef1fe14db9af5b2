"""Shared test helpers: independent oracles and a seeded variable generator.

Everything here is deliberately naive.  The point is to cross-check the
engine against implementations that share no code with it.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product
from typing import Sequence

from graphfp import (
    DiagonalElement,
    ExactComplex,
    Graph,
    NoncrossingPartition,
    RandomVariable,
    cumulant,
    enumerate_nc,
    enumerate_paths,
)

# Verdict lines collected by the acceptance suite; the conftest terminal
# summary hook prints them once the run is over.
ACCEPTANCE_LINES: list[str] = []


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def catalan_by_recurrence(n: int) -> int:
    # C_0 = 1, C_{k+1} = sum_i C_i C_{k-i}; no closed form used.
    cs = [1]
    for k in range(n):
        cs.append(sum(cs[i] * cs[k - i] for i in range(k + 1)))
    return cs[n]


def has_crossing(blocks: Sequence[Sequence[int]]) -> bool:
    """Quadruple-scan crossing test, independent of the stack method."""
    owner = {}
    for bi, b in enumerate(blocks):
        for x in b:
            owner[x] = bi
    points = sorted(owner)
    for a in points:
        for b in points:
            for c in points:
                for d in points:
                    if not a < b < c < d:
                        continue
                    if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
                        return True
    return False


def set_partitions(items: list[int]):
    """All set partitions of ``items`` (crossing or not), for small n."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1 :]
        yield [[first]] + sub


def balanced_sign_count(n: int) -> int:
    """Number of +/-1 strings of length n summing to zero, by brute force."""
    return sum(1 for signs in product((1, -1), repeat=n) if sum(signs) == 0)


def scalar_cumulants_from_moments(moments: Sequence[Fraction]) -> list[Fraction]:
    """Free cumulants from scalar moments by the moment-cumulant recursion.

    moments[i] is m_{i+1}.  Solves m_n = sum over NC(n) of the product of
    k_{|B|} over blocks, order by order.
    """
    ks: list[Fraction] = []
    for n in range(1, len(moments) + 1):
        rest = Fraction(0)
        for p in enumerate_nc(n):
            if len(p.blocks) == 1:
                continue
            term = Fraction(1)
            for b in p.blocks:
                term *= ks[len(b) - 1]
            rest += term
        ks.append(Fraction(moments[n - 1]) - rest)
    return ks


def nested_cumulant(
    partition: NoncrossingPartition, variables: Sequence[RandomVariable]
) -> DiagonalElement:
    """k_pi with splice semantics: eliminate interval blocks innermost-first,
    valuing each bracket with the engine cumulant and feeding the diagonal
    result into the next surviving slot."""
    n = len(variables)
    assert partition.n == n
    graph = variables[0].graph
    pending: dict[int, DiagonalElement | None] = {i: None for i in range(1, n + 1)}
    remaining = list(range(1, n + 1))
    blocks = list(partition.blocks)
    closed: DiagonalElement | None = None
    while blocks:
        block = next(
            b
            for b in blocks
            if [x for x in remaining if b[0] <= x <= b[-1]] == list(b)
        )
        blocks.remove(block)
        value = cumulant(
            [variables[j - 1] for j in block], [pending[j] for j in block]
        ).value
        remaining = [x for x in remaining if x not in block]
        later = [x for x in remaining if x > block[-1]]
        if later:
            cur = pending[later[0]]
            pending[later[0]] = value if cur is None else value * cur
        else:
            closed = value if closed is None else closed * value
    assert closed is not None
    return closed


def random_variable(
    graph: Graph,
    rng: random.Random,
    max_len: int = 2,
    max_terms: int = 4,
    words=None,
) -> RandomVariable:
    """A small variable with random words, stars and rational coefficients."""
    pool = words if words is not None else enumerate_paths(graph, max_len)
    items = []
    for _ in range(rng.randint(1, max_terms)):
        w = rng.choice(pool)
        star = rng.random() < 0.5
        c = ExactComplex(
            Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
            Fraction(rng.randint(-2, 2), rng.randint(1, 2)),
        )
        items.append(((w, star), c))
    return RandomVariable(graph, items)
