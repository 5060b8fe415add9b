"""Root systems in simple-root coordinates, for height computations.

Positive roots are built in the usual ambient coordinates and re-expressed
in the simple-root basis, so heights and projections onto subsets of simple
roots are plain coordinate sums.  Covers the classical types and E6, E7, F4.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .labels import GroupDescriptor, UnsupportedGroupError


def _solve(matrix, target):
    """Solve the square linear system over the rationals (Gaussian elimination)."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(target[i])]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [x / f for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                g = aug[r][col]
                aug[r] = [a - g * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def _ambient(series, n):
    """(simple roots, all roots) in ambient coordinates."""
    def e(i, dim):
        v = [Fraction(0)] * dim
        v[i] = Fraction(1)
        return v

    def add(u, v, s=1):
        return [a + s * b for a, b in zip(u, v)]

    if series == "A":
        dim = n + 1
        simples = [add(e(i, dim), e(i + 1, dim), -1) for i in range(n)]
        roots = [add(e(i, dim), e(j, dim), -1) for i in range(dim) for j in range(dim) if i != j]
    elif series in ("B", "2D") and False:
        pass
    elif series == "B":
        dim = n
        simples = [add(e(i, dim), e(i + 1, dim), -1) for i in range(n - 1)] + [e(n - 1, dim)]
        roots = []
        for i in range(n):
            roots += [e(i, dim), [-x for x in e(i, dim)]]
            for j in range(i + 1, n):
                for s1, s2 in product((1, -1), repeat=2):
                    roots.append([s1 * a + s2 * b for a, b in zip(e(i, dim), e(j, dim))])
    elif series == "C":
        dim = n
        simples = [add(e(i, dim), e(i + 1, dim), -1) for i in range(n - 1)] + \
            [[2 * x for x in e(n - 1, dim)]]
        roots = []
        for i in range(n):
            roots += [[2 * x for x in e(i, dim)], [-2 * x for x in e(i, dim)]]
            for j in range(i + 1, n):
                for s1, s2 in product((1, -1), repeat=2):
                    roots.append([s1 * a + s2 * b for a, b in zip(e(i, dim), e(j, dim))])
    elif series == "D":
        dim = n
        simples = [add(e(i, dim), e(i + 1, dim), -1) for i in range(n - 1)] + \
            [add(e(n - 2, dim), e(n - 1, dim))]
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                for s1, s2 in product((1, -1), repeat=2):
                    roots.append([s1 * a + s2 * b for a, b in zip(e(i, dim), e(j, dim))])
    elif series == "F4":
        dim = 4
        simples = [add(e(1, dim), e(2, dim), -1), add(e(2, dim), e(3, dim), -1),
                   e(3, dim), [Fraction(1, 2) * (1 if i == 0 else -1) for i in range(4)]]
        roots = []
        for i in range(4):
            roots += [e(i, dim), [-x for x in e(i, dim)]]
            for j in range(i + 1, 4):
                for s1, s2 in product((1, -1), repeat=2):
                    roots.append([s1 * a + s2 * b for a, b in zip(e(i, dim), e(j, dim))])
        for signs in product((1, -1), repeat=4):
            roots.append([Fraction(s, 2) for s in signs])
    elif series in ("E6", "E7"):
        dim = 8
        a1 = [Fraction(1, 2), *([Fraction(-1, 2)] * 6), Fraction(1, 2)]
        simples = [a1, add(e(0, dim), e(1, dim))] + \
            [add(e(i + 1, dim), e(i, dim), -1) for i in range(0, {"E6": 4, "E7": 5}[series])]
        roots = []
        for i in range(8):
            for j in range(i + 1, 8):
                for s1, s2 in product((1, -1), repeat=2):
                    roots.append([s1 * a + s2 * b for a, b in zip(e(i, dim), e(j, dim))])
        for signs in product((1, -1), repeat=8):
            if signs.count(-1) % 2 == 0:
                roots.append([Fraction(s, 2) for s in signs])
    else:
        raise UnsupportedGroupError(f"no root system for series {series}")
    return simples, roots


@lru_cache(maxsize=None)
def positive_roots(group):
    """Positive roots as integer coefficient vectors in the simple-root basis."""
    series, n = group.series, group.rank
    if series == "2D":
        series = "D"  # heights live in the underlying root system
    if series == "2A":
        series = "A"
    if series == "2E6":
        series = "E6"
    if series == "E8":
        raise UnsupportedGroupError("E8 root system not built")
    simples, roots = _ambient(series, n)
    rank = len(simples)
    dim = len(simples[0])
    # express each root in the simple basis: least squares via normal equations
    out = []
    gram = [[sum(simples[i][k] * simples[j][k] for k in range(dim)) for j in range(rank)]
            for i in range(rank)]
    seen = set()
    for r in roots:
        rhs = [sum(simples[i][k] * r[k] for k in range(dim)) for i in range(rank)]
        coeffs = _solve(gram, rhs)
        # verify exactness and positivity
        recon = [sum(coeffs[i] * simples[i][k] for i in range(rank)) for k in range(dim)]
        if recon != [Fraction(x) for x in r]:
            continue
        if all(c >= 0 for c in coeffs) and any(c > 0 for c in coeffs):
            key = tuple(coeffs)
            if key not in seen and all(c.denominator == 1 for c in coeffs):
                seen.add(key)
                out.append(tuple(int(c) for c in coeffs))
    return tuple(sorted(out))


def height(root):
    return sum(root)


def coxeter_number(group):
    return 1 + max(height(r) for r in positive_roots(group))


def regular_height_bound(group, removed):
    """1 + max height of the projection killing the simple roots in `removed`.

    `removed` holds 0-based indices of the simple roots spanning the Levi;
    the projection keeps the coordinates of the complementary simple roots.
    """
    roots = positive_roots(group)
    rank = len(roots[0])
    keep = [i for i in range(rank) if i not in set(removed)]
    best = 0
    for r in roots:
        best = max(best, sum(r[i] for i in keep))
    return 1 + best
