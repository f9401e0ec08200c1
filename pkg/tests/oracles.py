"""Slow, independent reference computations used only by the tests."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import prod

import numpy as np
import sympy
from scipy.optimize import linprog


def standard_tableaux_chains(rows):
    """All standard tableaux as chains of shapes ``(), ..., rows`` (entries added one by one)."""
    rows = tuple(rows)
    if not rows:
        return [[()]]
    out = []
    for r in range(len(rows)):
        if r == len(rows) - 1 or rows[r] > rows[r + 1]:
            child = list(rows)
            child[r] -= 1
            if child[-1] == 0:
                child.pop()
            for chain in standard_tableaux_chains(tuple(child)):
                out.append(chain + [rows])
    return out


def tableau_count(rows) -> int:
    return len(standard_tableaux_chains(rows))


def frobenius_character(lam, mu) -> int:
    """Coefficient of ``x^(lam + delta)`` in ``a_delta * p_mu`` (Frobenius formula)."""
    lam = tuple(lam)
    n = sum(lam)
    ell = max(len(lam), 1)
    xs = sympy.symbols(f"x0:{ell}")
    vandermonde = prod(xs[i] - xs[j] for i in range(ell) for j in range(i + 1, ell))
    power_sum = prod(sum(x**m for x in xs) for m in mu) if mu else sympy.Integer(1)
    poly = sympy.Poly(sympy.expand(vandermonde * power_sum), *xs)
    padded = lam + (0,) * (ell - len(lam))
    exponent = tuple(padded[i] + ell - 1 - i for i in range(ell))
    assert sum(exponent) == n + ell * (ell - 1) // 2
    return int(poly.coeff_monomial(exponent))


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def is_noncrossing(blocks) -> bool:
    label = {x: i for i, b in enumerate(blocks) for x in b}
    pts = sorted(label)
    for a, b, c, d in product(pts, repeat=4):
        if a < b < c < d and label[a] == label[c] != label[b] == label[d]:
            return False
    return True


def noncrossing_moments(cumulants, k_max):
    """``M_k = sum over non-crossing partitions of prod R_|block|``."""
    out = []
    for k in range(1, k_max + 1):
        total = Fraction(0)
        for p in set_partitions(range(k)):
            if is_noncrossing(p):
                total += prod((Fraction(cumulants[len(b) - 1]) for b in p), start=Fraction(1))
        out.append(total)
    return tuple(out)


def brute_embedding_count(m, rows) -> int:
    """Enumerate every (white -> column, black -> row) assignment and test each edge's box."""
    rows = tuple(rows)
    if not rows:
        return 0
    nw, nb = len(m.white_vertices), len(m.black_vertices)
    count = 0
    for cols in product(range(1, rows[0] + 1), repeat=nw):
        for rws in product(range(len(rows)), repeat=nb):
            if all(cols[w] <= rows[rws[b]] for w, b in m.edges):
                count += 1
    return count


def lp_strictly_positive(supplies, demands, arcs) -> bool:
    """Maximise ``t`` subject to conservation and ``f_e >= t``; strict feasibility iff ``t > 0``."""
    if sum(supplies) != sum(demands):
        return False
    ne = len(arcs)
    c = np.zeros(ne + 1)
    c[-1] = -1.0
    a_eq, b_eq = [], []
    for w, s in enumerate(supplies):
        a_eq.append([1.0 if aw == w else 0.0 for aw, _ in arcs] + [0.0])
        b_eq.append(float(s))
    for b, d in enumerate(demands):
        a_eq.append([1.0 if ab == b else 0.0 for _, ab in arcs] + [0.0])
        b_eq.append(float(d))
    a_ub = [[(-1.0 if j == e else 0.0) for j in range(ne)] + [1.0] for e in range(ne)]
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(ne), A_eq=a_eq, b_eq=b_eq,
                  bounds=[(0, None)] * ne + [(None, 1.0)], method="highs")
    return res.status == 0 and -res.fun > 1e-9


def first_entries_distribution(rows, m) -> dict:
    """Exact law of the shape formed by entries ``1..m`` of a uniform standard tableau."""
    chains = standard_tableaux_chains(rows)
    counts = Counter(chain[m] for chain in chains)
    return {shape: Fraction(c, len(chains)) for shape, c in counts.items()}
