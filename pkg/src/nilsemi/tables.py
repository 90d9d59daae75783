"""Finite semigroups given by complete multiplication tables.

Elements are the indices ``0..n-1``; no position is reserved for the zero,
it is found by :func:`analyze`.  Element sets are returned as sorted tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import IndexOutOfRange, NotAssociative, ParseError, PremiseNotSatisfied

ElementSet = tuple


@dataclass(frozen=True)
class MulTable:
    """Validated multiplication table; ``entries[i*n + j]`` is the product ``i*j``.

    Build instances through :func:`validate_table` unless the table is known
    to be associative already (e.g. a relabeling of a validated table).
    """

    n: int
    entries: tuple

    def mul(self, i: int, j: int) -> int:
        return self.entries[i * self.n + j]

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def relabel(self, perm: Sequence[int]) -> "MulTable":
        """Return the table transported along ``i -> perm[i]``."""
        n = self.n
        out = [0] * (n * n)
        e = self.entries
        for i in range(n):
            pi = perm[i] * n
            for j in range(n):
                out[pi + perm[j]] = perm[e[i * n + j]]
        return MulTable(n, tuple(out))

    def array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=np.int64).reshape(self.n, self.n)


@dataclass(frozen=True)
class ClassInfo:
    is_nilpotent: bool
    class_c: int | None = None
    coclass_r: int | None = None
    # layers[k-1] = S^k \ S^{k+1} for k = 1..c, followed by the zero singleton
    layers: tuple = field(default=())
    min_gen_set: ElementSet = ()
    zero: int | None = None

    @property
    def layer_sizes(self) -> tuple:
        return tuple(len(layer) for layer in self.layers[:-1])


def _first_nonassociative(arr: np.ndarray):
    n = arr.shape[0]
    lhs = arr[arr]                                   # (i*j)*k
    rhs = arr[np.arange(n)[:, None, None], arr[None, :, :]]  # i*(j*k)
    bad = np.argwhere(lhs != rhs)
    if len(bad) == 0:
        return None
    i, j, k = (int(x) for x in bad[0])
    return i, j, k, int(lhs[i, j, k]), int(rhs[i, j, k])


def validate_table(n: int, entries: Iterable[int]) -> MulTable:
    """Check ranges and full associativity, returning a :class:`MulTable`.

    Raises :class:`IndexOutOfRange` for the first bad entry in row-major order
    and :class:`NotAssociative` for the lexicographically first bad triple.
    """
    entries = tuple(int(x) for x in entries)
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if len(entries) != n * n:
        raise ValueError(f"expected {n * n} entries, got {len(entries)}")
    for idx, x in enumerate(entries):
        if not 0 <= x < n:
            raise IndexOutOfRange(idx // n, idx % n, x, n)
    bad = _first_nonassociative(np.asarray(entries, dtype=np.int64).reshape(n, n))
    if bad is not None:
        raise NotAssociative(*bad)
    return MulTable(n, entries)


def is_associative(t: MulTable) -> bool:
    return _first_nonassociative(t.array()) is None


def product_set(t: MulTable, a: Iterable[int], b: Iterable[int]) -> ElementSet:
    e, n = t.entries, t.n
    b = tuple(b)
    return tuple(sorted({e[i * n + j] for i in a for j in b}))


def power_ideal(t: MulTable, k: int) -> ElementSet:
    """S^k, the set of all products of k elements."""
    if k < 1:
        raise ValueError("k must be at least 1")
    whole = tuple(range(t.n))
    current = whole
    for _ in range(k - 1):
        nxt = product_set(t, whole, current)
        if nxt == current:
            break
        current = nxt
    return current


def analyze(t: MulTable) -> ClassInfo:
    """Layers, class, coclass and minimal generating set of ``t``.

    A non-nilpotent table gives ``ClassInfo(is_nilpotent=False)``.
    """
    whole = tuple(range(t.n))
    chain = [whole]
    while len(chain[-1]) > 1:
        nxt = product_set(t, whole, chain[-1])
        if nxt == chain[-1]:
            return ClassInfo(is_nilpotent=False)
        chain.append(nxt)
    # chain[k-1] = S^k; S^{c+1} is the last entry
    c = len(chain) - 1
    zero = chain[-1][0]
    layers = []
    for k in range(c):
        upper = set(chain[k + 1])
        layers.append(tuple(x for x in chain[k] if x not in upper))
    layers.append((zero,))
    gens = layers[0] if c >= 1 else ()
    return ClassInfo(
        is_nilpotent=True,
        class_c=c,
        coclass_r=t.n - 1 - c,
        layers=tuple(layers),
        min_gen_set=gens,
        zero=zero,
    )


def dual(t: MulTable) -> MulTable:
    n, e = t.n, t.entries
    return MulTable(n, tuple(e[j * n + i] for i in range(n) for j in range(n)))


def is_commutative(t: MulTable) -> bool:
    n, e = t.n, t.entries
    return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i))


def subsemigroup_generated(t: MulTable, gens: Iterable[int]) -> ElementSet:
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    e, n = t.entries, t.n
    seen = set(gens)
    frontier = list(seen)
    # right multiplication by generators reaches every product of generators
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                p = e[x * n + g]
                if p not in seen:
                    seen.add(p)
                    new.append(p)
        frontier = new
    return tuple(sorted(seen))


def monogenic_power_class(t: MulTable, s: int) -> int:
    """Class of the monogenic subsemigroup generated by ``s``.

    Only meaningful inside a nilpotent table, where every power chain ends
    in the zero.
    """
    e, n = t.entries, t.n
    powers = [s]
    while True:
        p = e[powers[-1] * n + s]
        if p == powers[-1]:
            return len(powers) - 1
        if p in powers:
            raise ValueError(f"element {s} generates a non-nilpotent subsemigroup")
        powers.append(p)


def monogenic_witness(t: MulTable, info: ClassInfo | None = None) -> int:
    """Smallest element generating a subsemigroup of the full class c.

    Requires class c >= 2 and a single element in S^{c-1} \\ S^c.
    """
    info = info or analyze(t)
    if not info.is_nilpotent:
        raise PremiseNotSatisfied("table is not nilpotent")
    c = info.class_c
    if c < 2:
        raise PremiseNotSatisfied(f"class {c} < 2")
    if len(info.layers[c - 2]) != 1:
        raise PremiseNotSatisfied(
            f"|S^{c - 1} \\ S^{c}| = {len(info.layers[c - 2])}, expected 1"
        )
    for s in range(t.n):
        if monogenic_power_class(t, s) == c:
            return s
    # unreachable for valid nilpotent input
    raise PremiseNotSatisfied("no element generates a subsemigroup of full class")


def zero_semigroup(n: int) -> MulTable:
    """Order-n zero semigroup with the zero at index n-1."""
    return MulTable(n, (n - 1,) * (n * n))


def format_table(t: MulTable) -> str:
    lines = [str(t.n)]
    lines.extend(" ".join(str(x) for x in row) for row in t.rows())
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> MulTable:
    """Read the table text format and validate the result."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the order, got {lines[0]!r}") from None
    if n < 1:
        raise ParseError(f"order must be positive, got {n}")
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} rows, got {len(lines) - 1}")
    entries = []
    for r, line in enumerate(lines[1:], start=1):
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError(f"row {r} is not a list of integers") from None
        if len(row) != n:
            raise ParseError(f"row {r} has {len(row)} entries, expected {n}")
        entries.extend(row)
    return validate_table(n, entries)
