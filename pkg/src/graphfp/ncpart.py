"""Noncrossing partitions of {1, ..., n}: enumeration, refinement order,
and the Mobius function of the lattice.

The Mobius function is computed by the memoized poset recursion
``mu(p, p) = 1`` and ``mu(p, q) = -sum(mu(p, t) for p <= t < q)``; the
closed form ``mu(bottom, top) = (-1)^(n-1) * catalan(n-1)`` is used only as
a cross-check in the tests, never as the implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import DomainError

__all__ = [
    "MAX_N",
    "NoncrossingPartition",
    "enumerate_nc",
    "leq",
    "mobius",
]

# Enumeration bound; catalan(11) = 58786 keeps desk-scale work honest.
MAX_N = 11


@dataclass(frozen=True)
class NoncrossingPartition:
    """A noncrossing partition in canonical form: blocks sorted internally
    and ordered by their minima; elements are 1-based."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"partition size must be >= 1, got {self.n}")
        canonical = tuple(sorted((tuple(sorted(b)) for b in self.blocks)))
        object.__setattr__(self, "blocks", canonical)
        seen: list[int] = []
        for b in canonical:
            if not b:
                raise DomainError("empty block")
            seen.extend(b)
        if sorted(seen) != list(range(1, self.n + 1)):
            raise DomainError(f"blocks do not partition 1..{self.n}")
        if self._has_crossing():
            raise DomainError(f"crossing partition: {canonical}")

    def _has_crossing(self) -> bool:
        # Left-to-right scan with a stack of open blocks: every element must
        # continue the innermost open block or open a new one inside it.
        owner = self.block_index()
        maxima = {max(b): i for i, b in enumerate(self.blocks)}
        stack: list[int] = []
        for x in range(1, self.n + 1):
            b = owner[x]
            if not stack or stack[-1] != b:
                if b in stack:
                    return True
                stack.append(b)
            if maxima.get(x) == b:
                stack.pop()
        return False

    def block_index(self) -> dict[int, int]:
        return _block_index(self)

    def block_of(self, element: int) -> tuple[int, ...]:
        return self.blocks[self.block_index()[element]]

    @classmethod
    def bottom(cls, n: int) -> "NoncrossingPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def top(cls, n: int) -> "NoncrossingPartition":
        return cls(n, (tuple(range(1, n + 1)),))

    def __str__(self) -> str:
        return "/".join("".join(f"{x}," for x in b).rstrip(",") for b in self.blocks)


@lru_cache(maxsize=None)
def _block_index(p: NoncrossingPartition) -> dict[int, int]:
    owner: dict[int, int] = {}
    for i, b in enumerate(p.blocks):
        for x in b:
            owner[x] = i
    return owner


def leq(p: NoncrossingPartition, q: NoncrossingPartition) -> bool:
    """Refinement order: every block of p lies inside a block of q."""
    if p.n != q.n:
        raise DomainError("cannot compare partitions of different sizes")
    owner = q.block_index()
    return all(len({owner[x] for x in b}) == 1 for b in p.blocks)


def _nc_blocks(elements: tuple[int, ...]):
    """Yield noncrossing partitions of an increasing element tuple.

    The block of the least element is chosen first; the runs of elements
    falling strictly between its consecutive members (and after its last
    member) must then be partitioned independently, since any block joining
    two different runs would cross the chosen block.
    """
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for k in range(len(rest) + 1):
        for chosen in combinations(rest, k):
            block = (first,) + chosen
            bounds = list(block[1:]) + [None]
            runs: list[tuple[int, ...]] = []
            lo = first
            for hi in bounds:
                runs.append(
                    tuple(e for e in rest if e > lo and (hi is None or e < hi) and e not in chosen)
                )
                lo = hi if hi is not None else lo
            combos: list[tuple[tuple[int, ...], ...]] = [(block,)]
            for run in runs:
                subs = list(_nc_blocks(run))
                combos = [acc + sub for acc in combos for sub in subs]
            yield from combos


@lru_cache(maxsize=None)
def enumerate_nc(n: int) -> tuple[NoncrossingPartition, ...]:
    """All noncrossing partitions of {1..n}, in a fixed canonical order."""
    if not 1 <= n <= MAX_N:
        raise DomainError(f"partition size must be in 1..{MAX_N}, got {n}")
    parts = [
        NoncrossingPartition(n, blocks)
        for blocks in _nc_blocks(tuple(range(1, n + 1)))
    ]
    parts.sort(key=lambda p: p.blocks)
    return tuple(parts)


_MOBIUS_CACHE: dict[tuple[NoncrossingPartition, NoncrossingPartition], int] = {}


def mobius(p: NoncrossingPartition, q: NoncrossingPartition) -> int:
    """Mobius function of the noncrossing partition lattice; needs p <= q."""
    if not leq(p, q):
        raise DomainError("mobius needs p <= q in refinement order")
    return _mobius(p, q)


def _mobius(p: NoncrossingPartition, q: NoncrossingPartition) -> int:
    if p == q:
        return 1
    key = (p, q)
    cached = _MOBIUS_CACHE.get(key)
    if cached is not None:
        return cached
    total = 0
    for t in enumerate_nc(p.n):
        if t != q and leq(p, t) and leq(t, q):
            total += _mobius(p, t)
    _MOBIUS_CACHE[key] = -total
    return -total
