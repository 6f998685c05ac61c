"""Independent reference implementations used only by the tests.

Everything here is deliberately naive: dense Gaussian elimination over
Fraction, textbook recurrences, brute-force enumeration.  The library must
agree with these on small inputs; none of this code is imported by the
package itself.
"""

from fractions import Fraction
from itertools import combinations_with_replacement, combinations


def dense_rank_qq(rows):
    """Rank of a dense matrix (list of rows) by fraction-free Gauss."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def dense_rank_mod(rows, p):
    """Rank of a dense integer matrix mod a prime p."""
    m = [[int(x) % p for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def dense_kernel_dim_qq(rows, ncols):
    return ncols - dense_rank_qq(rows) if ncols else 0


def sympy_smith(rows):
    """Elementary divisors > 0 of an integer matrix, via sympy."""
    import sympy
    from sympy.matrices.normalforms import smith_normal_form

    if not rows or not rows[0]:
        return []
    m = smith_normal_form(sympy.Matrix(rows))
    out = []
    for i in range(min(m.rows, m.cols)):
        v = int(m[i, i])
        if v:
            out.append(abs(v))
    return sorted(out)


def stirling_cycles(k, j):
    """Unsigned Stirling numbers of the first kind c(k, j)."""
    if k == 0:
        return 1 if j == 0 else 0
    if j < 1 or j > k:
        return 0
    return stirling_cycles(k - 1, j - 1) + (k - 1) * stirling_cycles(k - 1, j)


def stirling_sets(k, j):
    """Stirling numbers of the second kind S(k, j)."""
    if k == 0:
        return 1 if j == 0 else 0
    if j < 1 or j > k:
        return 0
    return stirling_sets(k - 1, j - 1) + j * stirling_sets(k - 1, j)


def sym_monomial_count(gens, degree, weight):
    """Brute-force dimension of the free graded-commutative algebra.

    gens: list of (degree, weight, parity) with parity 0 even, 1 odd.
    Counts monomials of the exact (degree, weight): even generators repeat,
    odd generators are square-zero.
    """
    evens = [(d, w) for d, w, par in gens if par == 0]
    odds = [(d, w) for d, w, par in gens if par == 1]
    total = 0
    # weight is bounded, so enumerate multisets of evens and subsets of odds
    for r_odd in range(len(odds) + 1):
        for chosen_odd in combinations(range(len(odds)), r_odd):
            d0 = sum(odds[i][0] for i in chosen_odd)
            w0 = sum(odds[i][1] for i in chosen_odd)
            if d0 > degree or w0 > weight:
                continue
            rem_w = weight - w0
            count = 0
            min_even_w = min((w for _, w in evens), default=0)
            max_r = rem_w // min_even_w if min_even_w else 0
            if rem_w == 0:
                count += 1 if d0 == degree else 0
            for r_even in range(1, max_r + 1):
                for multi in combinations_with_replacement(range(len(evens)), r_even):
                    d = d0 + sum(evens[i][0] for i in multi)
                    w = w0 + sum(evens[i][1] for i in multi)
                    if d == degree and w == weight:
                        count += 1
            total += count
    return total


def perm_compose(p, q):
    """(p then q) in one-line notation on 1..k."""
    return tuple(q[p[i] - 1] for i in range(len(p)))


def perm_sign(p):
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
