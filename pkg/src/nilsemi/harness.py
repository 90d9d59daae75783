"""Counts from realized family lists and the end-to-end verification run."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import families
from .bruteforce import SearchConfig, enumerate_nilpotent
from .canon import CountMode, canonical_key, dedup, is_self_dual
from .counting import MIN_ORDER, CountQuery, formula_count, table1_reference
from .errors import NilsemiError, UnsupportedOrder
from .presentations import check_claims, realize
from .tables import dual, is_commutative

ISO, ANTI, COMM = CountMode.ISO, CountMode.ANTI_ISO, CountMode.COMMUTATIVE
MODES = (ANTI, ISO, COMM)

# first order each family list covers
LIST_MIN_ORDER = {"coclass1": 4, "coclass2": 7, "gen2": 7, "gen3": 6}

TYPE_NAMES = {
    "coclass1": "coclass1",
    "coclass2": "coclass2",
    "gen2": "coclass2-gen2",
    "gen3": "coclass2-gen3",
}


def kind_params(kind: str) -> tuple:
    """``(coclass, gen_size)`` for a row kind."""
    return {"coclass1": (1, None), "coclass2": (2, None), "gen2": (2, 2), "gen3": (2, 3)}[kind]


def family_list(kind: str, n: int) -> list:
    coclass, gen_size = kind_params(kind)
    if n < LIST_MIN_ORDER[kind]:
        raise UnsupportedOrder(f"no {TYPE_NAMES[kind]} list at order {n}")
    return families.classified_list(n, coclass, gen_size)


def count_tables(tables: list, mode: CountMode) -> int:
    """Classes in ``mode`` among tables pairwise inequivalent up to (anti-)isomorphism."""
    if mode is ANTI:
        return len(dedup(tables, ANTI))
    if mode is ISO:
        return len(dedup(tables + [dual(t) for t in tables if not is_self_dual(t)], ISO))
    return sum(1 for t in dedup(tables, ANTI) if is_commutative(t))


def family_count(kind: str, mode: CountMode, n: int) -> int:
    return count_tables([realize(p) for p in family_list(kind, n)], mode)


def bruteforce_tables(kind: str, mode: CountMode, n: int, workers: int = 1) -> list:
    coclass, gen_size = kind_params(kind)
    return enumerate_nilpotent(SearchConfig(n, coclass, gen_size, mode=mode), workers)


def formula_or_none(kind: str, mode: CountMode, n: int):
    if n < MIN_ORDER[kind]:
        return None
    coclass, gen_size = kind_params(kind)
    return formula_count(CountQuery(coclass, n, mode, gen_size))


def table1_or_none(kind: str, mode: CountMode, n: int):
    if not 3 <= n <= 13:
        return None
    return table1_reference(kind, mode, n)


def oracle_keys(kind: str, mode: CountMode, n: int) -> tuple:
    """Sorted canonical keys from the families and from exhaustive search."""
    key_mode = ISO if mode is COMM else mode
    tables = [realize(p) for p in family_list(kind, n)]
    if mode is ISO:
        tables = tables + [dual(t) for t in tables]
    elif mode is COMM:
        tables = [t for t in tables if is_commutative(t)]
    fam = sorted({canonical_key(t, key_mode) for t in tables})
    brute = sorted(canonical_key(t, key_mode) for t in bruteforce_tables(kind, mode, n))
    return fam, brute


@dataclass
class CheckResult:
    check: str
    order: int
    family: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.check} order={self.order} family={self.family}"
        return text + (f" {self.detail}" if self.detail else "")


def run_verification(max_order: int, emit: Callable[[str], None] = print,
                     oracle_max: int = 6) -> list:
    """Run checks (a)-(e) up to ``max_order``; returns every CheckResult."""
    results = []

    def record(res: CheckResult):
        results.append(res)
        emit(res.line())

    lists = {}
    for n in range(1, max_order + 1):
        lists[("coclass0", n)] = [families.coclass0(n)]
        for kind in ("coclass1", "gen2", "gen3"):
            if n >= LIST_MIN_ORDER[kind]:
                lists[(kind, n)] = family_list(kind, n)

    # (a) realization and certification
    realized = {}
    for (kind, n), plist in lists.items():
        failed = None
        tables = []
        for p in plist:
            try:
                tables.append(realize(p))
            except NilsemiError as exc:
                failed = f"{p}: {exc}"
                break
        realized[kind, n] = tables if failed is None else None
        record(CheckResult("a:certify", n, kind, failed is None,
                           failed or f"{len(plist)} presentations"))

    # (b) pairwise inequivalence within each list
    for (kind, n), tables in realized.items():
        if tables is None:
            continue
        keys = [canonical_key(t, ANTI) for t in tables]
        distinct = len(set(keys))
        record(CheckResult("b:distinct", n, kind, distinct == len(keys),
                           f"{distinct}/{len(keys)} distinct up to anti-iso"))

    # (c) list-derived counts against formulas and the published table
    for kind in ("coclass1", "gen2", "gen3", "coclass2"):
        for n in range(LIST_MIN_ORDER[kind], max_order + 1):
            if kind == "coclass2":
                parts = [realized.get(("gen2", n)), realized.get(("gen3", n))]
                tables = None if None in parts else parts[0] + parts[1]
            else:
                tables = realized.get((kind, n))
            if tables is None:
                continue
            for mode in MODES:
                got = count_tables(tables, mode)
                expected = {
                    "formula": formula_or_none(kind, mode, n),
                    "table1": table1_or_none(kind, mode, n),
                }
                bad = {k: v for k, v in expected.items() if v is not None and v != got}
                shown = " ".join(f"{k}={v}" for k, v in expected.items() if v is not None)
                record(CheckResult("c:counts", n, f"{TYPE_NAMES[kind]}/{mode.value}", not bad,
                                   f"families={got} {shown}"))

    # (d) exhaustive-search oracle
    for n in range(3, min(max_order, oracle_max) + 1):
        for kind in ("coclass1", "gen2", "gen3", "coclass2"):
            for mode in MODES:
                brute = bruteforce_tables(kind, mode, n)
                ref = table1_or_none(kind, mode, n)
                ok = len(brute) == ref
                detail = f"bruteforce={len(brute)} table1={ref}"
                if kind != "coclass2" and n >= LIST_MIN_ORDER[kind]:
                    fam, br = oracle_keys(kind, mode, n)
                    ok = ok and fam == br
                    detail += f" keys {'agree' if fam == br else 'differ'} with families"
                record(CheckResult("d:oracle", n, f"{TYPE_NAMES[kind]}/{mode.value}", ok, detail))

    # (e) commutativity and self-duality claims
    for (kind, n), plist in lists.items():
        if realized.get((kind, n)) is None:
            continue
        bad = []
        for p, t in zip(plist, realized[kind, n]):
            problems = check_claims(p, t)
            if problems:
                bad.append(f"{p}: {'; '.join(problems)}")
        record(CheckResult("e:claims", n, kind, not bad, bad[0] if bad else ""))

    return results
