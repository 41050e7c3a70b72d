"""Symbolic resultant oracle for the frozen characteristic polynomials in
test_charpoly.cpp and the acceptance suite.

Builds Sylvester / Macaulay matrices with the eigenvalue kept as a symbol and
takes symbolic determinants, so it shares no code path with the library's
evaluation-interpolation route. Run with: python3 charpoly_oracle.py
"""
from itertools import product
import sympy as sp

lam, x = sp.symbols("lam x")


def forms(entries, n, r):
    """entries: dict tuple(1-based)->value. Returns G_k = lam x_k^(r-1) - F_k."""
    xs = sp.symbols(f"x1:{n + 1}")
    gs = []
    for k in range(1, n + 1):
        f = 0
        for idx, v in entries.items():
            if idx[0] == k:
                term = sp.Integer(v)
                for j in idx[1:]:
                    term *= xs[j - 1]
                f += term
        gs.append(sp.expand(lam * xs[k - 1] ** (r - 1) - f))
    return xs, gs


def sylvester(entries, r):
    xs, (g1, g2) = forms(entries, 2, r)
    m = r - 1
    c1 = [sp.Poly(g1, *xs).coeff_monomial(xs[0] ** (m - j) * xs[1] ** j) for j in range(m + 1)]
    c2 = [sp.Poly(g2, *xs).coeff_monomial(xs[0] ** (m - j) * xs[1] ** j) for j in range(m + 1)]
    M = sp.zeros(2 * m, 2 * m)
    for s in range(m):
        for j in range(m + 1):
            M[s, s + j] = c1[j]
            M[m + s, s + j] = c2[j]
    return sp.Poly(sp.expand(M.det(method="berkowitz")), lam)


def macaulay(entries, r):
    xs, gs = forms(entries, 3, r)
    m = r - 1
    D = 3 * m - 2
    mons = [e for e in product(range(D + 1), repeat=3) if sum(e) == D]
    pos = {e: i for i, e in enumerate(mons)}
    N = len(mons)
    M = sp.zeros(N, N)
    for row, mu in enumerate(mons):
        i = next(t for t in range(3) if mu[t] >= m)
        shift = list(mu)
        shift[i] -= m
        p = sp.Poly(gs[i], *xs)
        for mon, c in zip(p.monoms(), p.coeffs()):
            col = pos[tuple(shift[t] + mon[t] for t in range(3))]
            M[row, col] += c
    nonreduced = [i for i, mu in enumerate(mons) if sum(1 for t in mu if t >= m) >= 2]
    Mp = M.extract(nonreduced, nonreduced) if nonreduced else sp.eye(1)
    num = sp.expand(M.det(method="berkowitz"))
    den = sp.expand(Mp.det(method="berkowitz"))
    q, rem = sp.div(num, den, lam)
    assert rem == 0
    return sp.Poly(q, lam)


def show(name, p):
    p = sp.Poly(p.as_expr().subs(lam, x), x)
    print(name, "ascending:", list(reversed(p.all_coeffs())), " factored:", sp.factor(p.as_expr()))


def sym_entries(pattern_values, r):
    """Expand sorted-multiset -> value into all permutations."""
    from sympy.utilities.iterables import multiset_permutations
    out = {}
    for pat, v in pattern_values.items():
        for perm in multiset_permutations(list(pat)):
            out[tuple(perm)] = v
    return out


if __name__ == "__main__":
    # n=2, r=3: all mixed-index entries 1, diagonal 0.
    mixed = sym_entries({(1, 1, 2): 1, (1, 2, 2): 1}, 3)
    q = sylvester(mixed, 3)
    show("mixed n=2 r=3", q)
    # n=3, r=3 block: a_111 = 2 plus the mixed component on {2,3}.
    block = {(1, 1, 1): 2}
    for idx, v in mixed.items():
        block[tuple(i + 1 for i in idx)] = v
    show("block n=3 r=3", macaulay(block, 3))
    # K3 as a 2-graph through the n=3 Macaulay route (m = 1 -> plain det).
    k3 = sym_entries({(1, 2): 1, (1, 3): 1, (2, 3): 1}, 2)
    show("K3", macaulay(k3, 2))
    # single 3-edge on n=3
    edge3 = sym_entries({(1, 2, 3): 1}, 3)
    show("edge r=3 n=3", macaulay(edge3, 3))
    # single 2-edge via Sylvester, r=2
    show("K2", sylvester(sym_entries({(1, 2): 1}, 2), 2))
    # n=2, r=4 mixed symmetric: patterns (1,1,2,2) only
    show("n=2 r=4 (1,1,2,2)", sylvester(sym_entries({(1, 1, 2, 2): 1}, 4), 4))
    # loop a_111 = 1 plus isolated vertex, r=3
    show("loop+isolated", sylvester({(1, 1, 1): 1}, 3))
    # n=3 r=3 non-symmetric cycle a_123 = a_231 = a_312 = 1
    show("cycle n=3 r=3", macaulay({(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1}, 3))
