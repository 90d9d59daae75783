"""Exhaustive search for nilpotent semigroups of small order.

This module does not use the classification; its counts are checked
against the families.  Element ``n-1`` is the zero.  The remaining
elements are labeled layer by layer for a chosen sequence of layer sizes,
and a product of elements from layers i and j may only land in layers
>= i+j.  Every nilpotent semigroup has such a labeling (sort by layer),
so no class is lost.  Cells are filled in row-major order with
incremental associativity checks.  Isomorph rejection is post hoc through
canonical keys.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .canon import CountMode, canonical_key, table_from_key
from .errors import OrderTooLarge
from .tables import MulTable, analyze, is_commutative

MAX_ORDER = 7


@dataclass(frozen=True)
class SearchConfig:
    n: int
    coclass_filter: int | None = None
    gen_size_filter: int | None = None
    commutative_only: bool = False
    mode: CountMode = CountMode.ANTI_ISO

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        if self.n > MAX_ORDER:
            raise OrderTooLarge(f"exhaustive search is capped at order {MAX_ORDER}, got {self.n}")


def compositions(total: int, parts: int):
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _consistent(t: list, n: int, i: int, j: int) -> bool:
    """Check every triple completed by setting cell (i, j); -1 marks unknown."""
    x = t[i * n + j]
    jn = j * n
    xn = x * n
    in_ = i * n
    for k in range(n):
        # (i j) k = i (j k)
        lhs = t[xn + k]
        jk = t[jn + k]
        if lhs >= 0 and jk >= 0:
            rhs = t[in_ + jk]
            if rhs >= 0 and rhs != lhs:
                return False
        # (k i) j = k (i j)
        ki = t[k * n + i]
        if ki >= 0:
            lhs = t[ki * n + j]
            rhs = t[k * n + x]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    for a in range(n):
        an = a * n
        for b in range(n):
            ab = t[an + b]
            if ab == i:
                # (a b) j with a b = i
                bj = t[b * n + j]
                if bj >= 0:
                    rhs = t[an + bj]
                    if rhs >= 0 and rhs != x:
                        return False
            if ab == j:
                # i (a b) with a b = j
                ia = t[in_ + a]
                if ia >= 0:
                    lhs = t[ia * n + b]
                    if lhs >= 0 and lhs != x:
                        return False
    return True


def _search_layers(n: int, sizes: tuple, commutative_only: bool) -> list:
    """All labeled tables whose layer k holds the next ``sizes[k-1]`` labels."""
    zero = n - 1
    c = len(sizes)
    layer = []
    for k, size in enumerate(sizes, start=1):
        layer += [k] * size
    layer.append(c + 1)
    t = [-1] * (n * n)
    for a in range(n):
        t[a * n + zero] = zero
        t[zero * n + a] = zero
    options = {}
    for a in range(n - 1):
        for b in range(n - 1):
            floor = min(layer[a] + layer[b], c + 1)
            opts = [x for x in range(n) if layer[x] >= floor]
            if len(opts) == 1:
                t[a * n + b] = zero
            else:
                options[a, b] = opts
    cells = sorted(options)
    found = []

    def fill(pos):
        if pos == len(cells):
            found.append(tuple(t))
            return
        a, b = cells[pos]
        idx = a * n + b
        if commutative_only and b < a:
            choices = (t[b * n + a],)
        else:
            choices = options[a, b]
        for x in choices:
            t[idx] = x
            if _consistent(t, n, a, b):
                fill(pos + 1)
        t[idx] = -1

    fill(0)
    out = []
    for entries in found:
        table = MulTable(n, entries)
        info = analyze(table)
        if info.is_nilpotent and info.layer_sizes == sizes:
            out.append(table)
    return out


def _keys_for(args):
    n, sizes, commutative_only, mode = args
    return {canonical_key(t, mode) for t in _search_layers(n, sizes, commutative_only)}


def _layer_profiles(cfg: SearchConfig):
    n = cfg.n
    classes = range(1, n) if cfg.coclass_filter is None else [n - 1 - cfg.coclass_filter]
    for c in classes:
        if c < 1:
            continue
        for sizes in compositions(n - 1, c):
            if cfg.gen_size_filter is None or sizes[0] == cfg.gen_size_filter:
                yield sizes


def enumerate_nilpotent(cfg: SearchConfig, workers: int = 1) -> list:
    """One canonical table per class (``cfg.mode``), sorted by canonical key."""
    n = cfg.n
    mode = CountMode.ISO if cfg.mode is CountMode.COMMUTATIVE else cfg.mode
    commutative_only = cfg.commutative_only or cfg.mode is CountMode.COMMUTATIVE
    if n == 1:
        trivial = MulTable(1, (0,))
        ok = cfg.coclass_filter in (None, 0) and cfg.gen_size_filter in (None, 0)
        return [trivial] if ok else []
    jobs = [(n, sizes, commutative_only, mode) for sizes in _layer_profiles(cfg)]
    keys = set()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_keys_for, jobs):
                keys |= part
    else:
        for job in jobs:
            keys |= _keys_for(job)
    tables = [table_from_key(k) for k in sorted(keys)]
    if commutative_only:
        assert all(is_commutative(t) for t in tables)
    return tables


def count_nilpotent(cfg: SearchConfig, workers: int = 1) -> int:
    return len(enumerate_nilpotent(cfg, workers))
