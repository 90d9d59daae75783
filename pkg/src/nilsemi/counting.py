"""Closed-form counts of coclass 1 and coclass 2 semigroups, and the published table."""

from __future__ import annotations

from dataclasses import dataclass

from .canon import CountMode
from .errors import NotTabulated, OutOfDomain

ISO, ANTI, COMM = CountMode.ISO, CountMode.ANTI_ISO, CountMode.COMMUTATIVE

# row kinds: "coclass1", "coclass2" (total), "gen2", "gen3"
KINDS = ("coclass1", "coclass2", "gen2", "gen3")
ORDERS = tuple(range(3, 14))

TABLE1 = {
    ("coclass1", ANTI): (1, 8, 7, 9, 10, 12, 13, 15, 16, 18, 19),
    ("coclass2", ANTI): (0, 1, 84, 142, 184, 218, 288, 328, 412, 460, 557),
    ("gen2", ANTI): (0, 0, 11, 43, 34, 40, 45, 50, 55, 61, 65),
    ("gen3", ANTI): (0, 1, 73, 99, 150, 178, 243, 278, 357, 399, 492),
    ("coclass1", ISO): (1, 9, 9, 11, 12, 14, 15, 17, 18, 20, 21),
    ("coclass2", ISO): (0, 1, 118, 219, 284, 333, 434, 491, 610, 677, 813),
    ("gen2", ISO): (0, 0, 15, 62, 51, 58, 65, 71, 78, 85, 91),
    ("gen3", ISO): (0, 1, 103, 157, 233, 275, 369, 420, 532, 592, 722),
    ("coclass1", COMM): (1, 5, 5, 7, 8, 10, 11, 13, 14, 16, 17),
    ("coclass2", COMM): (0, 1, 23, 42, 67, 86, 123, 146, 193, 222, 278),
    ("gen2", COMM): (0, 0, 4, 15, 16, 21, 24, 28, 31, 36, 38),
    ("gen3", COMM): (0, 1, 19, 27, 51, 65, 99, 118, 162, 186, 240),
}

MIN_ORDER = {"coclass1": 5, "coclass2": 7, "gen2": 7, "gen3": 6}


@dataclass(frozen=True)
class CountQuery:
    coclass: int
    n: int
    mode: CountMode = ANTI
    gen_size: int | None = None

    @property
    def kind(self) -> str:
        if self.coclass == 1:
            return "coclass1"
        return {None: "coclass2", 2: "gen2", 3: "gen3"}[self.gen_size]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _div8(numerator: int) -> int:
    if numerator % 8:
        raise ArithmeticError(f"{numerator} is not divisible by 8")
    return numerator // 8


# (even, odd) quadratic coefficients (a, b, c) of (a n^2 + b n + c) / 8
_GEN3 = {
    ANTI: ((21, 22, -96), (21, 36, -81)),
    ISO: ((27, 94, -280), (27, 112, -243)),
    COMM: ((15, -58, 24), (15, -48, 9)),
}
_TOTAL = {
    ANTI: ((21, 66, -104), (21, 80, -93)),
    ISO: ((27, 150, -240), (27, 168, -203)),
    COMM: ((15, -26, -40), (15, -16, -63)),
}


def _quadratic(coeffs, n: int) -> int:
    a, b, c = coeffs[n % 2]
    return _div8(a * n * n + b * n + c)


def formula_count(q: CountQuery) -> int:
    """Number of semigroups of order ``q.n`` in the queried class and convention."""
    if q.coclass not in (1, 2):
        raise OutOfDomain(f"coclass must be 1 or 2, got {q.coclass}")
    if q.coclass == 1 and q.gen_size is not None:
        raise OutOfDomain("gen_size applies to coclass 2 only")
    if q.gen_size not in (None, 2, 3):
        raise OutOfDomain(f"gen_size must be 2 or 3, got {q.gen_size}")
    kind = q.kind
    n = q.n
    if n < MIN_ORDER[kind]:
        raise OutOfDomain(f"{kind} formulas need n >= {MIN_ORDER[kind]}, got n={n}")
    mode = q.mode
    if kind == "coclass1":
        return n + n // 2 + {ANTI: 0, ISO: 2, COMM: -2}[mode]
    if kind == "gen2":
        c3 = _ceil_div(n, 3)
        if mode is ANTI:
            return 5 * n + n // 2 - c3 - 1
        if mode is ISO:
            return 7 * n - c3 + 5
        return 3 * n + 2 * (n // 2) - c3 - 8
    if kind == "gen3":
        return _quadratic(_GEN3[mode], n)
    return _quadratic(_TOTAL[mode], n) - _ceil_div(n, 3)


def table1_reference(kind: str, mode: CountMode, n: int) -> int:
    """Published count for row ``(kind, mode)`` at order ``n`` (3..13)."""
    try:
        row = TABLE1[kind, mode]
    except KeyError:
        raise NotTabulated(f"no row {kind}/{mode.value}") from None
    if n not in ORDERS:
        raise NotTabulated(f"order {n} is outside 3..13")
    return row[n - 3]
