"""Independent reference computations for the test-suite.

Nothing here imports the package's exterior-algebra or complex builders.
Cochains are stored as dense alternating tensors over *all* ordered index
tuples, differentials are evaluated straight from the CE formula, and
ranks come from sympy.  Slow, but structurally unrelated to the
multi-index code under test.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

import sympy as sp


def _perm_sign(p):
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def alternating_basis(n, r):
    """Dense alternating tensors ``{tuple: coeff}`` over all ordered tuples,
    one per r-subset of range(n)."""
    out = []
    for subset in combinations(range(n), r):
        t = {}
        for p in permutations(range(r)):
            t[tuple(subset[i] for i in p)] = _perm_sign(p)
        out.append(t)
    return out


def _bracket(c, x, y):
    """``[x, y]`` for coordinate vectors under structure constants c[i][j][k]."""
    n = len(c)
    out = [0] * n
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * c[i][j][k]
    return out


def _eval(tensor, m, args):
    """Evaluate an alternating V-valued tensor (tuple -> list of m values)
    on coordinate vectors by multilinear expansion."""
    out = [0] * m
    n = len(args[0]) if args else 0
    supports = [[i for i in range(n) if a[i] != 0] for a in args]
    for idx in product(*supports):
        val = tensor.get(idx)
        if val is None:
            continue
        coef = 1
        for a, i in zip(args, idx):
            coef *= a[i]
        for s in range(m):
            out[s] += coef * val[s]
    return out


def _unit(n, i):
    return [1 if j == i else 0 for j in range(n)]


def _ce_image(c, rho, m, tensor, r):
    """``d(omega)`` as a dict over increasing (r+1)-tuples."""
    n = len(c)
    out = {}
    for J in combinations(range(n), r + 1):
        xs = [_unit(n, j) for j in J]
        total = [0] * m
        for i in range(r + 1):
            rest = xs[:i] + xs[i + 1:]
            w = _eval(tensor, m, rest)
            act = rho[J[i]]
            for s in range(m):
                total[s] += (-1) ** i * sum(act[s][t] * w[t] for t in range(m))
        for i in range(r + 1):
            for l in range(i + 1, r + 1):
                br = _bracket(c, xs[i], xs[l])
                rest = [br] + xs[:i] + xs[i + 1:l] + xs[l + 1:]
                w = _eval(tensor, m, rest)
                for s in range(m):
                    total[s] += (-1) ** (i + l) * w[s]
        out[J] = total
    return out


def _vvalued_basis(n, r, m):
    """Basis of alternating r-forms with values in Q^m, as (tensor, flat coords)."""
    out = []
    for t in alternating_basis(n, r):
        for a in range(m):
            vt = {k: [v if s == a else 0 for s in range(m)] for k, v in t.items()}
            out.append(vt)
    return out


def _flat(d, n, r, m):
    return [d[J][s] for J in combinations(range(n), r) for s in range(m)]


def differential_matrix(c, rho, m, r):
    """sympy Matrix of d on r-cochains in increasing-tuple coordinates."""
    n = len(c)
    cols = []
    for t in _vvalued_basis(n, r, m):
        cols.append(_flat(_ce_image(c, rho, m, t, r), n, r + 1, m))
    return sp.Matrix(cols).T if cols else sp.zeros(0, 0)


def ce_betti(c, rho=None, m=1):
    """Betti numbers of H(g; V) by sympy ranks of tensor-built differentials."""
    n = len(c)
    rho = rho or [[[0]] for _ in range(n)]
    from math import comb

    ranks = []
    for r in range(n):
        d = differential_matrix(c, rho, m, r)
        ranks.append(d.rank() if d.shape[0] and d.shape[1] else 0)
    out = []
    for r in range(n + 1):
        out.append(comb(n, r) * m - (ranks[r] if r < n else 0) - (ranks[r - 1] if r else 0))
    return tuple(out)


def relative_betti(c_p, k_ops, rho_k, rho_p, m, gens=(), alphas=()):
    """Relative Betti numbers on p with projected structure ``c_p``.

    ``k_ops[y]`` is the matrix of ad_y on p (column j = image of p_j),
    ``rho_k[y]`` / ``rho_p[i]`` the module actions, ``gens``/``alphas`` the
    component generators on p and on V.  Invariant cochains are the joint
    kernel of ``omega -> Y.omega`` computed tensor-wise, and of
    ``omega -> alpha omega(g^-1 .) - omega``.
    """
    q = len(c_p)
    inv = []
    for r in range(q + 1):
        basis = _vvalued_basis(q, r, m)
        rows = []
        for y, (ad, ry) in enumerate(zip(k_ops, rho_k)):
            cols = []
            for t in basis:
                img = {}
                for J in combinations(range(q), r):
                    xs = [_unit(q, j) for j in J]
                    w = _eval(t, m, xs)
                    val = [sum(ry[s][u] * w[u] for u in range(m)) for s in range(m)]
                    for i in range(r):
                        moved = [ad[a][J[i]] for a in range(q)]
                        w2 = _eval(t, m, xs[:i] + [moved] + xs[i + 1:])
                        val = [val[s] - w2[s] for s in range(m)]
                    img[J] = val
                cols.append(_flat(img, q, r, m))
            rows.append(sp.Matrix(cols).T)
        for g, a in zip(gens, alphas):
            g_inv = sp.Matrix(g).inv()
            cols = []
            for t in basis:
                img = {}
                for J in combinations(range(q), r):
                    xs = [list(g_inv[:, j]) for j in J]
                    w = _eval(t, m, xs)
                    val = [sum(a[s][u] * w[u] for u in range(m)) for s in range(m)]
                    orig = _eval(t, m, [_unit(q, j) for j in J])
                    img[J] = [val[s] - orig[s] for s in range(m)]
                cols.append(_flat(img, q, r, m))
            rows.append(sp.Matrix(cols).T)
        size = len(basis)
        if rows and size:
            stacked = sp.Matrix.vstack(*rows)
            kernel = stacked.nullspace()
        else:
            kernel = [sp.eye(size)[:, i] for i in range(size)]
        inv.append(kernel)
    # differential restricted to invariant cochains
    betti = []
    d_ranks = []
    for r in range(q):
        if not inv[r]:
            d_ranks.append(0)
            continue
        d = differential_matrix(c_p, rho_p, m, r)
        images = d * sp.Matrix.hstack(*inv[r])
        d_ranks.append(images.rank())
    for r in range(q + 1):
        dim = len(inv[r])
        betti.append(dim - (d_ranks[r] if r < q else 0) - (d_ranks[r - 1] if r else 0))
    return tuple(betti)
