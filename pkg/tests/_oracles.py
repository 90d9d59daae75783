"""Independent reference implementations used only by the tests.

Nothing here imports the canonical-form or search code of the package;
tables are plain tuples of tuples or MulTable values read through ``mul``.
"""

from itertools import permutations, product

import numpy as np


def rows(t):
    return [[t.mul(i, j) for j in range(t.n)] for i in range(t.n)]


def power_sets(m):
    """[S, S^2, S^3, ...] until the chain stabilizes, from a list-of-rows table."""
    n = len(m)
    cur = set(range(n))
    chain = [cur]
    while True:
        nxt = {m[x][y] for x in cur for y in range(n)}
        if nxt == cur:
            return chain
        chain.append(nxt)
        cur = nxt


def nilpotent_class(m):
    """Class c or None when the chain stalls above a singleton."""
    chain = power_sets(m)
    if len(chain[-1]) != 1:
        return None
    return len(chain) - 1


def min_generators(m):
    n = len(m)
    square = {m[x][y] for x in range(n) for y in range(n)}
    return [x for x in range(n) if x not in square]


def find_isomorphism(a, b, anti=False):
    """Search bijections of minimal generating sets and extend them to full maps.

    Returns a list f with f[x] the image of x, or None.  With ``anti`` the map
    must satisfy f(xy) = f(y) f(x).
    """
    ma, mb = rows(a), rows(b)
    n = len(ma)
    if len(mb) != n:
        return None
    ga, gb = min_generators(ma), min_generators(mb)
    if len(ga) != len(gb):
        return None
    if n == 1:
        return [0]
    for images in permutations(gb):
        f = {x: y for x, y in zip(ga, images)}
        done = list(ga)
        ok = True
        i = 0
        while ok and i < len(done):
            for j in range(i + 1):
                for x, y in ((done[i], done[j]), (done[j], done[i])):
                    img = mb[f[y]][f[x]] if anti else mb[f[x]][f[y]]
                    p = ma[x][y]
                    if p in f:
                        if f[p] != img:
                            ok = False
                    else:
                        f[p] = img
                        done.append(p)
            i += 1
        if not ok or len(f) != n or len(set(f.values())) != n:
            continue
        fl = [f[x] for x in range(n)]
        hom = all(
            fl[ma[x][y]] == (mb[fl[y]][fl[x]] if anti else mb[fl[x]][fl[y]])
            for x in range(n) for y in range(n)
        )
        if hom:
            return fl
    return None


def brute_canonical(m, anti=False):
    """Minimum row-major tuple over all n! relabelings (and the transpose with ``anti``)."""
    n = len(m)
    cands = [m]
    if anti:
        cands.append([[m[j][i] for j in range(n)] for i in range(n)])
    best = None
    for mm in cands:
        for perm in permutations(range(n)):
            out = [0] * (n * n)
            for i in range(n):
                for j in range(n):
                    out[perm[i] * n + perm[j]] = perm[mm[i][j]]
            out = tuple(out)
            if best is None or out < best:
                best = out
    return best


def all_nilpotent_tables(n):
    """Every associative nilpotent table on 0..n-1 with zero n-1 (numpy sweep, n <= 4)."""
    assert n <= 4
    z = n - 1
    free = (n - 1) ** 2
    vals = np.array(list(product(range(n), repeat=free)), dtype=np.int8)
    count = len(vals)
    tabs = np.full((count, n, n), z, dtype=np.int8)
    tabs[:, : n - 1, : n - 1] = vals.reshape(count, n - 1, n - 1)
    idx = np.arange(count)[:, None, None, None]
    x = np.arange(n)[None, :, None, None]
    y = np.arange(n)[None, None, :, None]
    w = np.arange(n)[None, None, None, :]
    xy = tabs[idx, x, y]
    lhs = tabs[idx, xy, w]
    yw = tabs[idx, y, w]
    rhs = tabs[idx, x, yw]
    assoc = (lhs == rhs).reshape(count, -1).all(axis=1)
    out = []
    for t in tabs[assoc]:
        m = t.tolist()
        if nilpotent_class(m) is not None:
            out.append(m)
    return out


def t3_completion(n):
    """Products of the 2-generated family T_3, completed by hand from its defining values.

    Elements: ('u', a) for 1 <= a <= n-2 (u^{n-2} is the zero), 'v', 'y' = v^2 = uv.
    Given: vu = u^2, u y = u^3, v u^2 = u^3, v y = u^3.
    """
    zero = n - 2

    def up(a):
        return ("u", min(a, zero))

    def mul(x, w):
        if x[0] == "u" and w[0] == "u":
            return up(x[1] + w[1])
        if x[0] == "u" and w == "v":
            # u^k v = u^{k-1} (uv) = u^{k-1} y, and u y = u^3
            return "y" if x[1] == 1 else up(x[1] + 1)
        if x[0] == "u" and w == "y":
            return up(x[1] + 2)
        if x == "v" and w[0] == "u":
            # v u^k = (v u^2) u^{k-2} = u^{k+1}; v u = u^2
            return up(w[1] + 1)
        if x == "v" and w == "v":
            return "y"
        if x == "v" and w == "y":
            return up(3)
        if x == "y" and w[0] == "u":
            # y u^k = v (v u^k) = v u^{k+1} = u^{k+2}
            return up(w[1] + 2)
        if x == "y" and w == "v":
            # v^2 v = v v^2
            return up(3)
        if x == "y" and w == "y":
            return up(4)
        raise AssertionError((x, w))

    elements = [("u", a) for a in range(1, zero + 1)] + ["v", "y"]
    return elements, mul
