"""Canonical keys for nilpotent tables.

An isomorphism between nilpotent semigroups maps the unique minimal
generating set S \\ S^2 onto itself and is fixed by what it does there, so
trying every ordering of those g generators is enough.  Each ordering
labels the generators 0..g-1 and extends the labeling by a fixed
traversal; the key is the smallest relabeled table.
"""

from __future__ import annotations

import enum
from itertools import permutations
from math import factorial
from typing import Iterable

from .errors import GeneratorBound, NotNilpotent
from .tables import MulTable, analyze, dual

GENERATOR_GUARD = 10**6


class CountMode(enum.Enum):
    ISO = "iso"
    ANTI_ISO = "anti-iso"
    # counting convention only; keys for this mode are the ISO keys
    COMMUTATIVE = "commutative"


def _traversal_order(t: MulTable, first: tuple) -> list | None:
    """Elements in label order, starting from the given generator order.

    Labeled elements are scanned as pairs (i, j) with i ascending and
    j = 0..i; the product i*j is examined before j*i and every product not
    yet labeled receives the next label.
    """
    e, n = t.entries, t.n
    order = list(first)
    labeled = [False] * n
    for x in order:
        labeled[x] = True
    i = 0
    while i < len(order):
        a = order[i]
        an = a * n
        for j in range(i + 1):
            b = order[j]
            p = e[an + b]
            if not labeled[p]:
                labeled[p] = True
                order.append(p)
            p = e[b * n + a]
            if not labeled[p]:
                labeled[p] = True
                order.append(p)
        i += 1
    return order if len(order) == n else None


def _relabeled_bytes(t: MulTable, order: list) -> bytes:
    e, n = t.entries, t.n
    label = [0] * n
    for lab, x in enumerate(order):
        label[x] = lab
    out = bytearray([n])
    for a in order:
        an = a * n
        out.extend(label[e[an + b]] for b in order)
    return bytes(out)


def _iso_key(t: MulTable, gens: tuple) -> bytes:
    if factorial(len(gens)) > GENERATOR_GUARD:
        raise GeneratorBound(
            f"{len(gens)} generators give {factorial(len(gens))} orderings, above {GENERATOR_GUARD}"
        )
    best = None
    for perm in permutations(gens):
        order = _traversal_order(t, perm)
        if order is None:
            raise NotNilpotent("minimal generating set does not generate the table")
        cand = _relabeled_bytes(t, order)
        if best is None or cand < best:
            best = cand
    return best


def _generators(t: MulTable) -> tuple:
    info = analyze(t)
    if not info.is_nilpotent:
        raise NotNilpotent("canonical keys are defined for nilpotent tables only")
    if t.n == 1:
        return (0,)
    return info.min_gen_set


def canonical_key(t: MulTable, mode: CountMode = CountMode.ISO) -> bytes:
    """``bytes([n] + relabeled entries)``, equal exactly for equivalent tables."""
    gens = _generators(t)
    key = _iso_key(t, gens)
    if mode is CountMode.ANTI_ISO:
        # the dual has the same minimal generating set
        key = min(key, _iso_key(dual(t), gens))
    return key


def table_from_key(key: bytes) -> MulTable:
    n = key[0]
    return MulTable(n, tuple(key[1:]))


def are_equivalent(a: MulTable, b: MulTable, mode: CountMode = CountMode.ISO) -> bool:
    if a.n != b.n:
        return False
    return canonical_key(a, mode) == canonical_key(b, mode)


def is_self_dual(t: MulTable) -> bool:
    gens = _generators(t)
    return _iso_key(t, gens) == _iso_key(dual(t), gens)


def dedup(tables: Iterable[MulTable], mode: CountMode = CountMode.ISO) -> list:
    """First occurrence of each class, sorted by canonical key."""
    seen = {}
    for t in tables:
        key = canonical_key(t, mode)
        if key not in seen:
            seen[key] = t
    return [seen[k] for k in sorted(seen)]
