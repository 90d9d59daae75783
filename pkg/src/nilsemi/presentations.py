"""Semigroup presentations and their realization as multiplication tables.

Words are tuples of generator indices.  Every relation is stored oriented
for rewriting (lhs -> rhs).  A presentation may also carry ``derived``
relations: consequences of the defining relations that rewriting alone
cannot discover.  They steer the construction only.  Certification checks
the defining relations.

Realization never trusts the rules: the resulting table must be
associative, satisfy every defining relation, be generated by the
generators and have the expected order, class and coclass.  Each family
presentation has at most ``expected_order`` elements, so a certified
model of that order is the presented semigroup.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import CertificationFailed, ParseError, RewriteDiverged
from .tables import MulTable, analyze, is_associative, is_commutative

Word = tuple


def power(gen: int, k: int) -> Word:
    return (gen,) * k


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if not self.lhs or not self.rhs:
            raise ValueError("relation words must be non-empty")
        if self.lhs == self.rhs:
            raise ValueError(f"trivial relation {self.lhs} = {self.rhs}")

    def reversed(self) -> "Relation":
        return Relation(self.lhs[::-1], self.rhs[::-1])


def rel(lhs: Sequence[int], rhs: Sequence[int]) -> Relation:
    return Relation(tuple(lhs), tuple(rhs))


@dataclass(frozen=True)
class Presentation:
    num_generators: int
    relations: tuple
    family: str
    params: tuple  # (name, value) pairs in display order
    expected_order: int
    expected_coclass: int
    claimed_self_dual: bool
    claimed_commutative: bool
    zero: Word
    names: tuple
    derived: tuple = ()
    label: str = field(default="", compare=False)

    @property
    def expected_class(self) -> int:
        return self.expected_order - 1 - self.expected_coclass

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def __str__(self) -> str:
        return self.label or format_presentation(self)


# ---------------------------------------------------------------- rewriting

def _to_str(word: Word) -> str:
    return "".join(chr(97 + g) for g in word)


def _from_str(s: str) -> Word:
    return tuple(ord(ch) - 97 for ch in s)


class Rewriter:
    """Normalizes words with oriented rules plus the class bound.

    Any word longer than the class c is a product of c+1 elements and
    therefore equals the zero.  Rules with longer left sides are tried
    first; each step rewrites the leftmost occurrence.
    """

    def __init__(self, rules, class_c: int, zero: Word, cap: int):
        self.rules = sorted(
            ((_to_str(r.lhs), _to_str(r.rhs)) for r in rules),
            key=lambda lr: -len(lr[0]),
        )
        self.class_c = class_c
        self.zero = _to_str(zero)
        self.cap = cap

    def normalize(self, word: str) -> str:
        steps = 0
        while True:
            if len(word) > self.class_c:
                return self.zero
            for lhs, rhs in self.rules:
                idx = word.find(lhs)
                if idx >= 0:
                    word = word[:idx] + rhs + word[idx + len(lhs):]
                    break
            else:
                return word
            steps += 1
            if steps > self.cap:
                raise RewriteDiverged(f"more than {self.cap} rewrites on {word!r}")


def _build_table(p: Presentation):
    """Normal forms reachable from the generators and their product table."""
    g = p.num_generators
    rw = Rewriter(p.relations + p.derived, p.expected_class, p.zero, 4 * p.expected_order)
    letters = [chr(97 + i) for i in range(g)]
    start = [rw.normalize(ch) for ch in letters]
    seen = set(start)
    frontier = list(dict.fromkeys(start))
    right = {}
    bound = p.expected_order
    while frontier:
        new = []
        for x in frontier:
            for ch in letters:
                y = rw.normalize(x + ch)
                right[x, ch] = y
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        if len(seen) > bound:
            raise CertificationFailed(
                p, f"rewriting produced more than {bound} normal forms"
            )
        frontier = new
    forms = sorted(seen, key=lambda s: (len(s), s))
    index = {s: i for i, s in enumerate(forms)}
    n = len(forms)
    entries = []
    for x in forms:
        for y in forms:
            z = x
            # x*y = (..((x*y1)*y2)..)*yk; certification re-checks associativity
            for ch in y:
                z = right[z, ch]
            entries.append(index[z])
    return forms, MulTable(n, tuple(entries))


def evaluate(t: MulTable, word: Word, assignment: Sequence[int]) -> int:
    e, n = t.entries, t.n
    acc = assignment[word[0]]
    for gen in word[1:]:
        acc = e[acc * n + assignment[gen]]
    return acc


def _generated_size(t: MulTable, gens) -> int:
    e, n = t.entries, t.n
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                z = e[x * n + g]
                if z not in seen:
                    seen.add(z)
                    new.append(z)
        frontier = new
    return len(seen)


def satisfies(t: MulTable, p: Presentation, gen_assignment: Sequence[int]) -> bool:
    """True iff the defining relations hold and the assigned elements generate ``t``."""
    if len(gen_assignment) != p.num_generators:
        raise ValueError("one element per generator is required")
    for r in p.relations:
        if evaluate(t, r.lhs, gen_assignment) != evaluate(t, r.rhs, gen_assignment):
            return False
    return _generated_size(t, gen_assignment) == t.n


@lru_cache(maxsize=None)
def realize(p: Presentation) -> MulTable:
    """Certified multiplication table of ``p``; generators are elements 0..g-1."""
    forms, t = _build_table(p)
    gens = [forms.index(chr(97 + i)) if chr(97 + i) in forms else -1
            for i in range(p.num_generators)]
    if gens != list(range(p.num_generators)):
        raise CertificationFailed(p, "a generator rewrites to another normal form")
    if t.n != p.expected_order:
        raise CertificationFailed(p, f"order {t.n}, expected {p.expected_order}")
    if not is_associative(t):
        raise CertificationFailed(p, "multiplication is not associative")
    if not satisfies(t, p, gens):
        raise CertificationFailed(p, "defining relations fail in the constructed table")
    info = analyze(t)
    if not info.is_nilpotent:
        raise CertificationFailed(p, "table is not nilpotent")
    if (info.class_c, info.coclass_r) != (p.expected_class, p.expected_coclass):
        raise CertificationFailed(
            p, f"class/coclass {info.class_c}/{info.coclass_r}, "
               f"expected {p.expected_class}/{p.expected_coclass}"
        )
    if p.expected_order > 1 and info.min_gen_set != tuple(gens):
        raise CertificationFailed(p, "generators are not the minimal generating set")
    return t


def dual_presentation(p: Presentation) -> Presentation:
    """Presentation of the dual semigroup: every word reversed."""
    from dataclasses import replace
    return replace(
        p,
        relations=tuple(r.reversed() for r in p.relations),
        derived=tuple(r.reversed() for r in p.derived),
        family=p.family + "_dual",
        label=(p.label + "^dual") if p.label else "",
    )


def check_claims(p: Presentation, t: MulTable | None = None) -> list:
    """Mismatches between the claimed and the computed commutativity/self-duality."""
    from .canon import is_self_dual
    t = t if t is not None else realize(p)
    problems = []
    if is_commutative(t) != p.claimed_commutative:
        problems.append(f"commutative={not p.claimed_commutative}, claimed {p.claimed_commutative}")
    if is_self_dual(t) != p.claimed_self_dual:
        problems.append(f"self-dual={not p.claimed_self_dual}, claimed {p.claimed_self_dual}")
    return problems


# -------------------------------------------------------------- text format

def format_word(word: Word, names: Sequence[str]) -> str:
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        out.append(names[word[i]] + (f"^{run}" if run > 1 else ""))
        i = j
    return "".join(out)


def format_presentation(p: Presentation) -> str:
    rels = ", ".join(
        f"{format_word(r.lhs, p.names)}={format_word(r.rhs, p.names)}" for r in p.relations
    )
    return f"<{','.join(p.names)} | {rels}>"


def format_metadata(p: Presentation) -> str:
    parts = [f"family={p.family}"]
    parts += [f"{k}={v}" for k, v in p.params]
    parts.append(f"selfdual={str(p.claimed_self_dual).lower()}")
    parts.append(f"commutative={str(p.claimed_commutative).lower()}")
    return " ".join(parts)


def parse_word(text: str, names: Sequence[str]) -> Word:
    alternatives = "|".join(re.escape(x) for x in sorted(names, key=len, reverse=True))
    token = re.compile(rf"({alternatives})(?:\^(\d+))?")
    word = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = token.match(text, pos)
        if not m:
            raise ParseError(f"cannot read word {text!r} at position {pos}")
        word.extend([list(names).index(m.group(1))] * int(m.group(2) or 1))
        pos = m.end()
    if not word:
        raise ParseError("empty word")
    return tuple(word)


def parse_presentation(text: str) -> tuple:
    """Split ``<gens | rels>`` into generator names and (lhs, rhs) word pairs."""
    m = re.fullmatch(r"\s*<([^|]*)\|([^>]*)>\s*", text)
    if not m:
        raise ParseError(f"not a presentation: {text!r}")
    names = tuple(x.strip() for x in m.group(1).split(",") if x.strip())
    rels = []
    for part in m.group(2).split(","):
        if not part.strip():
            continue
        if part.count("=") != 1:
            raise ParseError(f"bad relation {part!r}")
        lhs, rhs = part.split("=")
        rels.append(Relation(parse_word(lhs, names), parse_word(rhs, names)))
    return names, tuple(rels)


def parse_metadata(text: str) -> dict:
    meta = {}
    for token in text.split():
        if "=" not in token:
            raise ParseError(f"bad metadata token {token!r}")
        key, value = token.split("=", 1)
        if value in ("true", "false"):
            meta[key] = value == "true"
        elif re.fullmatch(r"-?\d+", value):
            meta[key] = int(value)
        else:
            meta[key] = value
    if "family" not in meta:
        raise ParseError("metadata lacks family=")
    return meta
