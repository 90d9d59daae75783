"""Presentations of every classified family of coclass 0, 1 and 2.

Generator indices: ``u = 0``, ``v = 1``, ``w = 2``.  The multi-generator
families on ``u_1..u_r, v`` use indices ``0..r-1`` for the ``u_i`` and
``r`` for ``v``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidParams, UnsupportedOrder
from .presentations import Presentation, Relation, power, rel

U, V, W = 0, 1, 2


def _p(n, family, params, names, rels, coclass, comm, sd, zero, label, derived=()):
    return Presentation(
        num_generators=len(names),
        relations=tuple(rels),
        family=family,
        params=tuple(params),
        expected_order=n,
        expected_coclass=coclass,
        claimed_self_dual=sd,
        claimed_commutative=comm,
        zero=zero,
        names=tuple(names),
        derived=tuple(derived),
        label=label,
    )


def _absorb(c: int, gen: int = U) -> Relation:
    """u^{c+1} = u^{c+2}, oriented towards the shorter power."""
    return rel(power(gen, c + 2), power(gen, c + 1))


def _u(k: int) -> tuple:
    return power(U, k)


# ------------------------------------------------------------------ coclass 0

def coclass0(n: int) -> Presentation:
    """<u | u^n = u^{n+1}>, the monogenic semigroup of order n and period 1."""
    if n < 1:
        raise InvalidParams(f"order must be positive, got {n}")
    return _p(n, "Coclass0", [("n", n)], "u", [_absorb(n - 1)], 0, True, True,
              _u(n), f"C_{n}")


# ------------------------------------------------------------------ coclass 1

def _cc1(n, family, params, uv, vu, vv, comm, sd, label):
    rels = [_absorb(n - 2), rel((U, V), _u(uv)), rel((V, U), _u(vu)), rel((V, V), _u(vv))]
    return _p(n, family, list(params) + [("n", n)], "uv", rels, 1, comm, sd,
              _u(n - 1), label)


def cc1_H(n: int, k: int) -> Presentation:
    if not 2 <= k <= n - 1:
        raise InvalidParams(f"H_k needs 2 <= k <= n-1, got k={k}, n={n}")
    return _cc1(n, "H", [("k", k)], k, k, 2 * k - 2, True, True, f"H_{k}")


def cc1_J(n: int, k: int) -> Presentation:
    if not (n < 2 * k and k <= n - 1):
        raise InvalidParams(f"J_k needs n/2 < k <= n-1, got k={k}, n={n}")
    return _cc1(n, "J", [("k", k)], k, k, n - 2, True, True, f"J_{k}")


def cc1_X(n: int) -> Presentation:
    if n % 2:
        raise InvalidParams(f"X needs even order, got {n}")
    return _cc1(n, "X", [], n // 2, n // 2, n - 1, True, True, "X")


def cc1_N1(n: int) -> Presentation:
    # self-dual only at order 4
    return _cc1(n, "N1", [], n - 1, n - 2, n - 2, False, n == 4, "N_1")


def cc1_N2(n: int) -> Presentation:
    return _cc1(n, "N2", [], n - 1, n - 2, n - 1, False, False, "N_2")


def cc1_N4a(n: int = 4) -> Presentation:
    """<u,v | u^2=u^3, u^2=v^2, uv=vu, u^2=v^3>."""
    if n != 4:
        raise InvalidParams("N4a exists at order 4 only")
    rels = [rel(_u(3), _u(2)), rel((V, V), _u(2)), rel((V, U), (U, V)), rel((V, V, V), _u(2))]
    return _p(4, "N4a", [("n", 4)], "uv", rels, 1, True, True, _u(2), "N4a")


def cc1_N4b(n: int = 4) -> Presentation:
    """<u,v | u^2=u^3, u^2=v^2, u^2=uv, u^2=v^3>."""
    if n != 4:
        raise InvalidParams("N4b exists at order 4 only")
    rels = [rel(_u(3), _u(2)), rel((V, V), _u(2)), rel((U, V), _u(2)), rel((V, V, V), _u(2))]
    return _p(4, "N4b", [("n", 4)], "uv", rels, 1, False, True, _u(2), "N4b")


def coclass1_list(n: int) -> list:
    """Representatives up to (anti-)isomorphism of coclass 1 and order n >= 4.

    Ordered as in the classification: H_k, J_k, X, N_1, N_2; this is also
    the total order used to pair components in the 3-generated list.
    """
    return list(_coclass1_tuple(n))


@lru_cache(maxsize=64)
def _coclass1_tuple(n: int) -> tuple:
    if n < 4:
        raise UnsupportedOrder(
            f"coclass 1 lists start at order 4 (order 3 has only the zero semigroup), got {n}"
        )
    out = [cc1_H(n, k) for k in range(2, n)]
    out += [cc1_J(n, k) for k in range(n // 2 + 1, n)]
    if n % 2 == 0:
        out.append(cc1_X(n))
    out += [cc1_N1(n), cc1_N2(n)]
    if n == 4:
        out += [cc1_N4a(), cc1_N4b()]
    return tuple(out)


# -------------------------------------------------- r+1 generators, coclass r

def _lemma_names(r: int) -> tuple:
    if r == 1:
        return ("u", "v")
    return tuple(f"u{i}" for i in range(1, r + 1)) + ("v",)


def _lemma(c, r, family, params, uv_of, vu_of, vv, comm, sd, label):
    """Common relations; ``uv_of(i)``/``vu_of(i)`` give exponents for u_i (1-based)."""
    v = r
    rels = [_absorb(c)]
    for a in range(r):
        for b in range(r):
            if (a, b) != (0, 0):
                rels.append(rel((a, b), _u(2)))
    for i in range(1, r + 1):
        rels.append(rel((v, i - 1), _u(vu_of(i))))
        rels.append(rel((i - 1, v), _u(uv_of(i))))
    rels.append(rel((v, v), _u(vv)))
    n = c + r + 1
    return _p(n, family, list(params) + [("c", c), ("r", r), ("n", n)], _lemma_names(r),
              rels, r, comm, sd, _u(c + 1), label)


def _check_cr(c, r):
    if c < 3 or r < 1:
        raise InvalidParams(f"need c >= 3 and r >= 1, got c={c}, r={r}")


def lemma_H(c: int, r: int, k: int) -> Presentation:
    _check_cr(c, r)
    if not 2 <= k <= c - 1:
        raise InvalidParams(f"LemH needs 2 <= k <= c-1, got k={k}")
    return _lemma(c, r, "LemH", [("k", k)], lambda i: k, lambda i: k, 2 * k - 2,
                  True, True, f"LemH_{k}")


def lemma_J(c: int, r: int, k: int) -> Presentation:
    _check_cr(c, r)
    if not c // 2 + 2 <= k <= c - 1:
        raise InvalidParams(f"LemJ needs floor(c/2)+2 <= k <= c-1, got k={k}")
    return _lemma(c, r, "LemJ", [("k", k)], lambda i: k, lambda i: k, c,
                  True, True, f"LemJ_{k}")


def lemma_X(c: int, r: int) -> Presentation:
    _check_cr(c, r)
    if c % 2:
        raise InvalidParams(f"LemX needs even c, got {c}")
    h = (c + 2) // 2
    return _lemma(c, r, "LemX", [], lambda i: h, lambda i: h, c + 1, True, True, "LemX")


def lemma_N(c: int, r: int, k: int, l: int, m: int, e: int) -> Presentation:
    _check_cr(c, r)
    if not (0 <= k <= m <= r and k <= l <= (k + m) // 2 and e in (0, 1)):
        raise InvalidParams(f"LemN parameters out of range: k={k} l={l} m={m} e={e}")

    def uv_of(i):
        return c + 1 if i <= k or l < i <= m else c

    def vu_of(i):
        return c + 1 if i <= l else c

    return _lemma(c, r, "LemN", [("k", k), ("l", l), ("m", m), ("e", e)], uv_of, vu_of,
                  c + e, k == l == m, 2 * l == k + m, f"LemN^{e}_{{{k},{l},{m}}}")


def lemma_family_list(c: int, r: int) -> list:
    """All semigroups of class c, coclass r with r+1 generators, r of them of class c."""
    _check_cr(c, r)
    out = [lemma_H(c, r, k) for k in range(2, c)]
    out += [lemma_J(c, r, k) for k in range(c // 2 + 2, c)]
    if c % 2 == 0:
        out.append(lemma_X(c, r))
    for k in range(r + 1):
        for m in range(k, r + 1):
            for l in range(k, (k + m) // 2 + 1):
                for e in (0, 1):
                    out.append(lemma_N(c, r, k, l, m, e))
    return out


# ---------------------------------------------------- coclass 2, 2 generators

def _t(n, family, params, rels, comm, sd, label, derived=()):
    rels = [_absorb(n - 3)] + list(rels)
    return _p(n, family, list(params) + [("n", n)], "uv", rels, 2, comm, sd,
              _u(n - 2), label, derived)


def _need(cond, what):
    if not cond:
        raise InvalidParams(what)


def T1(n, i):
    _need(i in (2, 3), f"T1 needs i in {{2,3}}, got {i}")
    # u*y = u*uv = v^3 is forced but not reachable by rewriting the relations
    return _t(n, "T1", [("i", i)],
              [rel((V, U), (U, V)), rel((V, V), (U, V)), rel((V, V, V), _u(n - i))],
              True, True, f"T_{{1,{i}}}", derived=[rel((U, U, V), _u(n - i))])


def T2(n, k):
    _need(3 <= k and 2 * k < n, f"T2 needs 3 <= k < n/2, got {k}")
    return _t(n, "T2", [("k", k)],
              [rel((V, U), (U, V)), rel((V, V), _u(2 * k - 4)), rel((U, U, V), _u(k))],
              True, True, f"T_{{2,{k}}}")


def T2_ik(n, i, k):
    _need(i in (2, 3, 4) and n <= 2 * k and k <= n - 2, f"T2_ik out of range: i={i} k={k}")
    return _t(n, "T2_ik", [("i", i), ("k", k)],
              [rel((V, U), (U, V)), rel((V, V), _u(n - i)), rel((U, U, V), _u(k))],
              True, True, f"T_{{2,{i},{k}}}")


def T3(n):
    return _t(n, "T3", [],
              [rel((V, V), (U, V)), rel((V, U), _u(2)), rel((U, V, V), _u(3))],
              False, False, "T_3", derived=[rel((U, U, V), _u(3))])


def T3_i(n, i):
    _need(i in (2, 3), f"T3_i needs i in {{2,3}}, got {i}")
    return _t(n, "T3_i", [("i", i)],
              [rel((V, V), (U, V)), rel((V, U), _u(n - i)), rel((U, V, V), _u(n - 2))],
              False, False, f"T_{{3,{i}}}", derived=[rel((U, U, V), _u(n - 2))])


def T4(n, k):
    _need(2 <= k and 3 * k < n, f"T4 needs 2 <= k < n/3, got {k}")
    return _t(n, "T4", [("k", k)],
              [rel((V, U), (U, V)), rel((U, V), _u(k)), rel((V, V, V), _u(3 * k - 3))],
              True, True, f"T_{{4,{k}}}")


def T4_ik(n, i, k):
    _need(i in (2, 3) and n <= 3 * k and k <= n - 4, f"T4_ik out of range: i={i} k={k}")
    return _t(n, "T4_ik", [("i", i), ("k", k)],
              [rel((V, U), (U, V)), rel((U, V), _u(k)), rel((V, V, V), _u(n - i))],
              True, True, f"T_{{4,{i},{k}}}")


def T4_ijk(n, i, j, k):
    _need({i, j, k} <= {2, 3} and i <= j, f"T4_ijk out of range: i={i} j={j} k={k}")
    return _t(n, "T4_ijk", [("i", i), ("j", j), ("k", k)],
              [rel((U, V), _u(n - i)), rel((V, U), _u(n - j)), rel((V, V, V), _u(n - k))],
              i == j, i == j, f"T_{{4,{i},{j},{k}}}")


def T5(n, k):
    # 2 <= k < (n-1)/2
    _need(2 <= k and 2 * k < n - 1, f"T5 needs 2 <= k < (n-1)/2, got {k}")
    return _t(n, "T5", [("k", k)],
              [rel((U, V), _u(k)), rel((V, V), _u(2 * k - 2)), rel((V, U, U), _u(k + 1))],
              False, k == 2, f"T_{{5,{k}}}")


def T5_ik(n, i, k):
    # (n-1)/2 <= k <= n-5
    _need(i in (2, 3) and n - 1 <= 2 * k and k <= n - 5, f"T5_ik out of range: i={i} k={k}")
    return _t(n, "T5_ik", [("i", i), ("k", k)],
              [rel((U, V), _u(k)), rel((V, V), _u(n - i)), rel((V, U, U), _u(k + 1))],
              False, False, f"T_{{5,{i},{k}}}")


def T5_ijk(n, i, j, k):
    _need(i in (2, 3, 4) and {j, k} <= {2, 3}, f"T5_ijk out of range: i={i} j={j} k={k}")
    return _t(n, "T5_ijk", [("i", i), ("j", j), ("k", k)],
              [rel((U, V), _u(n - i)), rel((V, V), _u(n - j)), rel((V, U, U), _u(n - k))],
              False, False, f"T_{{5,{i},{j},{k}}}")


def coclass2_gen2_list(n: int) -> list:
    """Coclass 2, two generators, order n >= 7, up to (anti-)isomorphism."""
    if n < 7:
        raise UnsupportedOrder(f"2-generated coclass 2 lists start at order 7, got {n}")
    out = [T1(n, i) for i in (2, 3)]
    out += [T2(n, k) for k in range(3, (n + 1) // 2)]
    out += [T2_ik(n, i, k) for i in (2, 3, 4) for k in range((n + 1) // 2, n - 1)]
    out += [T3(n)] + [T3_i(n, i) for i in (2, 3)]
    out += [T4(n, k) for k in range(2, (n + 2) // 3)]
    out += [T4_ik(n, i, k) for i in (2, 3) for k in range((n + 2) // 3, n - 3)]
    out += [T4_ijk(n, i, j, k) for i in (2, 3) for j in (2, 3) if i <= j for k in (2, 3)]
    out += [T5(n, k) for k in range(2, n // 2)]
    out += [T5_ik(n, i, k) for i in (2, 3) for k in range(n // 2, n - 4)]
    out += [T5_ijk(n, i, j, k) for i in (2, 3, 4) for j in (2, 3) for k in (2, 3)]
    return out


# ---------------------------------------------------- coclass 2, 3 generators

def _uv_exponent(p: Presentation) -> int:
    for r in p.relations:
        if r.lhs == (U, V):
            return len(r.rhs)
    raise InvalidParams(f"{p} has no relation uv = u^k")


def composition(n: int, case: str, a: int, b: int, i: int = 0, j: int = 0) -> Presentation:
    """Three-generator presentation from components V = list[a-1], W = list[b-1].

    ``a``, ``b`` are 1-based positions in ``coclass1_list(n - 1)``.  Case
    ``"iv"`` uses the dual relations of W.  Range conditions between the
    cases are enforced by :func:`coclass2_gen3_list`, not here.
    """
    if n < 6:
        raise UnsupportedOrder(f"compositions need order >= 6, got {n}")
    comps = _coclass1_tuple(n - 1)
    pv, pw = comps[a - 1], comps[b - 1]
    k, l = _uv_exponent(pv), _uv_exponent(pw)
    q = list(pv.relations)
    r_w = [rr.reversed() for rr in pw.relations] if case == "iv" else list(pw.relations)

    def to_w(word):
        return tuple(W if g == V else g for g in word)

    rels = list(q)
    for rr in r_w:
        mapped = rel(to_w(rr.lhs), to_w(rr.rhs))
        if mapped not in rels:
            rels.append(mapped)
    if case == "i":
        rels += [rel((W, V), (V, W)), rel((V, W), _u(k + l - 2))]
        comm = True
        params = [("V", a), ("W", b)]
    else:
        if not {i, j} <= {2, 3}:
            raise InvalidParams(f"composition needs i, j in {{2,3}}, got {i}, {j}")
        rels += [rel((V, W), _u(n - i)), rel((W, V), _u(n - j))]
        comm = case == "ii" and i == j and pv.claimed_commutative and pw.claimed_commutative
        params = [("V", a), ("W", b), ("i", i), ("j", j)]
    same = a == b
    # with V = W commutative, (ii) with i != j is isomorphic to its dual under v <-> w
    sd = comm or (case == "iv" and same) or (case == "ii" and same and pv.claimed_commutative)
    label = f"Comp_{case}({pv.label},{pw.label}" + (f";{i},{j})" if case != "i" else ")")
    return _p(n, f"Comp_{case}", params + [("n", n)], "uvw", rels, 2, comm, sd,
              _u(n - 2), label)


def coclass2_gen3_list(n: int) -> list:
    """Coclass 2, three generators, order n >= 6, up to (anti-)isomorphism."""
    if n < 6:
        raise UnsupportedOrder(f"3-generated coclass 2 lists start at order 6, got {n}")
    out = lemma_family_list(n - 3, 2)
    comps = coclass1_list(n - 1)
    # positions exclude H_2, which is first in the list
    idx = list(range(2, len(comps) + 1))
    sd = {a: comps[a - 1].claimed_self_dual for a in idx}
    k = {a: _uv_exponent(comps[a - 1]) for a in idx}
    case_i, case_ii, case_iii, case_iv = [], [], [], []
    for x, a in enumerate(idx):
        for b in idx[x:]:
            if k[a] + k[b] <= n - 2:
                case_i.append(composition(n, "i", a, b))
            elif sd[b] or a == b:
                case_ii += [composition(n, "ii", a, b, i, j) for i, j in ((2, 2), (2, 3), (3, 3))]
            else:
                case_iii += [composition(n, "iii", a, b, i, j) for i in (2, 3) for j in (2, 3)]
            if not sd[a] and not sd[b]:
                case_iv += [composition(n, "iv", a, b, i, j) for i in (2, 3) for j in (2, 3)]
    return out + case_i + case_ii + case_iii + case_iv


def coclass2_list(n: int) -> list:
    return coclass2_gen2_list(n) + coclass2_gen3_list(n)


def classified_list(n: int, coclass: int, gen_size: int | None = None) -> list:
    """Dispatch used by the CLI and the verification harness."""
    if coclass == 0:
        if gen_size not in (None, 1):
            raise UnsupportedOrder("coclass 0 semigroups are 1-generated")
        return [coclass0(n)]
    if coclass == 1:
        if gen_size not in (None, 2):
            raise UnsupportedOrder("coclass 1 semigroups are 2-generated")
        return coclass1_list(n)
    if coclass == 2:
        if gen_size == 2:
            return coclass2_gen2_list(n)
        if gen_size == 3:
            return coclass2_gen3_list(n)
        if gen_size is None:
            return coclass2_list(n)
        raise UnsupportedOrder("coclass 2 semigroups have 2 or 3 generators")
    raise UnsupportedOrder(f"coclass {coclass} is not classified")


_BUILDERS = {
    "Coclass0": lambda m: coclass0(m["n"]),
    "H": lambda m: cc1_H(m["n"], m["k"]),
    "J": lambda m: cc1_J(m["n"], m["k"]),
    "X": lambda m: cc1_X(m["n"]),
    "N1": lambda m: cc1_N1(m["n"]),
    "N2": lambda m: cc1_N2(m["n"]),
    "N4a": lambda m: cc1_N4a(m["n"]),
    "N4b": lambda m: cc1_N4b(m["n"]),
    "LemH": lambda m: lemma_H(m["c"], m["r"], m["k"]),
    "LemJ": lambda m: lemma_J(m["c"], m["r"], m["k"]),
    "LemX": lambda m: lemma_X(m["c"], m["r"]),
    "LemN": lambda m: lemma_N(m["c"], m["r"], m["k"], m["l"], m["m"], m["e"]),
    "T1": lambda m: T1(m["n"], m["i"]),
    "T2": lambda m: T2(m["n"], m["k"]),
    "T2_ik": lambda m: T2_ik(m["n"], m["i"], m["k"]),
    "T3": lambda m: T3(m["n"]),
    "T3_i": lambda m: T3_i(m["n"], m["i"]),
    "T4": lambda m: T4(m["n"], m["k"]),
    "T4_ik": lambda m: T4_ik(m["n"], m["i"], m["k"]),
    "T4_ijk": lambda m: T4_ijk(m["n"], m["i"], m["j"], m["k"]),
    "T5": lambda m: T5(m["n"], m["k"]),
    "T5_ik": lambda m: T5_ik(m["n"], m["i"], m["k"]),
    "T5_ijk": lambda m: T5_ijk(m["n"], m["i"], m["j"], m["k"]),
    "Comp_i": lambda m: composition(m["n"], "i", m["V"], m["W"]),
    "Comp_ii": lambda m: composition(m["n"], "ii", m["V"], m["W"], m["i"], m["j"]),
    "Comp_iii": lambda m: composition(m["n"], "iii", m["V"], m["W"], m["i"], m["j"]),
    "Comp_iv": lambda m: composition(m["n"], "iv", m["V"], m["W"], m["i"], m["j"]),
}


def presentation_from_metadata(meta: dict) -> Presentation:
    """Rebuild a presentation from its metadata (``family=... n=... ``)."""
    family = meta.get("family")
    if family not in _BUILDERS:
        raise InvalidParams(f"unknown family {family!r}")
    try:
        return _BUILDERS[family](meta)
    except KeyError as exc:
        raise InvalidParams(f"family {family} needs parameter {exc.args[0]}") from None
