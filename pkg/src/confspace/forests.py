"""Homology of ordered configuration spaces of R^n in the tree/forest model.

A labeled tree is a binary parenthesization of a sequence of distinct
positive leaf labels: a leaf is an int, an internal vertex a pair
(left, right).  A forest is an ordered tuple of trees whose label sets
partition [1, k].  A tree with m leaves sits in homological degree
(m-1)(n-1); Koszul signs for bracket identities use the shifted degree
||x|| = |x| + n - 1 = m(n-1).

Tall trees (left combs ((...((i1 i2) i3)...) im) whose first leaf is the
minimum) with components ordered by minimal leaf form a basis.  Arbitrary
forests rewrite into it via shifted antisymmetry

    [x, y] = -(-1)^(||x|| ||y||) [y, x]

and the Jacobi regrafting

    [x, [y, z]] = [[x, y], z] - (-1)^(||y|| ||z||) [[x, z], y],

applied recursively; reordering forest components uses the unshifted
Koszul rule (-1)^(|T_i| |T_j|).

The pairing with the cohomology basis of arnold is computed blockwise per
partition: path monomials a_{s1 s2} a_{s2 s3} ... pair delta-wise with
tall trees, so each block is the inverse transpose of the path-to-
admissible change of basis.
"""

from __future__ import annotations

from itertools import permutations, product

from . import arnold
from .graded import GradedDims
from .linalg import QQ, ZZ, SparseMatrix, invert, rank


class ForestError(Exception):
    """Malformed tree or forest input."""


# ---------------------------------------------------------------------------
# trees


def is_leaf(t):
    return isinstance(t, int)


def _validate_tree(t):
    if is_leaf(t):
        if t < 1:
            raise ForestError("leaf labels must be positive, got %r" % (t,))
        return
    if not (isinstance(t, tuple) and len(t) == 2):
        raise ForestError("internal vertex must be a pair, got %r" % (t,))
    _validate_tree(t[0])
    _validate_tree(t[1])


def tree_leaves(t):
    """Leaf labels in left-to-right order."""
    if is_leaf(t):
        return (t,)
    return tree_leaves(t[0]) + tree_leaves(t[1])


def tree_min(t):
    return min(tree_leaves(t))


def tree_degree(t, n):
    return (len(tree_leaves(t)) - 1) * (n - 1)


def shifted_degree(t, n):
    return len(tree_leaves(t)) * (n - 1)


def is_tall(t):
    """Left comb whose first leaf is the minimal label."""
    seq = tree_leaves(t)
    if seq[0] != min(seq):
        return False
    node = t
    while not is_leaf(node):
        if not is_leaf(node[1]):
            return False
        node = node[0]
    return True


def tall_from_seq(seq):
    t = seq[0]
    for s in seq[1:]:
        t = (t, s)
    return t


def tree_str(t):
    """Parenthesized string; labels over 9 are space-separated."""
    seq = tree_leaves(t)
    wide = any(x > 9 for x in seq)

    def go(node):
        if is_leaf(node):
            return str(node)
        left, right = go(node[0]), go(node[1])
        sep = " " if wide else ""
        return "(%s%s%s)" % (left, sep, right)

    return go(t)


def forest_str(f):
    return ",".join(tree_str(t) for t in f)


def parse_tree(text):
    """Inverse of tree_str.

    Without whitespace every digit is a leaf ("((12)3)"); with whitespace,
    leaves are whitespace-separated digit runs ("((1 2) 3)", "((10 2) 3)").
    """
    text = text.strip()
    per_digit = not any(ch.isspace() for ch in text)
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def node():
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            raise ForestError("unexpected end of tree string %r" % text)
        ch = text[pos]
        if ch == "(":
            pos += 1
            left = node()
            right = node()
            skip_ws()
            if pos >= len(text) or text[pos] != ")":
                raise ForestError("missing ')' in %r" % text)
            pos += 1
            return (left, right)
        if ch.isdigit():
            if per_digit:
                pos += 1
                return int(ch)
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            return int(text[start:pos])
        raise ForestError("unexpected character %r in %r" % (ch, text))

    t = node()
    skip_ws()
    if pos != len(text):
        raise ForestError("trailing junk in tree string %r" % text)
    _validate_tree(t)
    return t


def parse_forest(text):
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return tuple(parse_tree(p) for p in parts if p.strip())


# ---------------------------------------------------------------------------
# classes


def _forest_key(f):
    return tuple(tree_leaves(t) for t in f)


class HomologyClass:
    """Finitely supported map tall forest -> coefficient, in context (k, n)."""

    def __init__(self, k, n, terms=None):
        self.k = k
        self.n = n
        self.terms = {}
        if terms:
            for f, c in terms.items():
                if c != 0:
                    self.terms[tuple(f)] = c

    def _check(self, other):
        if (self.k, self.n) != (other.k, other.n):
            raise ForestError("context mismatch: (%d,%d) vs (%d,%d)"
                              % (self.k, self.n, other.k, other.n))

    def add(self, other):
        self._check(other)
        acc = dict(self.terms)
        for f, c in other.terms.items():
            v = acc.get(f, 0) + c
            if v == 0:
                acc.pop(f, None)
            else:
                acc[f] = v
        out = HomologyClass(self.k, self.n)
        out.terms = acc
        return out

    def sub(self, other):
        return self.add(other.scale(-1))

    def scale(self, c):
        return HomologyClass(self.k, self.n, {f: c * v for f, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _forest_key(kv[0]))

    def __eq__(self, other):
        return (isinstance(other, HomologyClass)
                and (self.k, self.n) == (other.k, other.n)
                and self.terms == other.terms)

    def to_json_obj(self):
        return {forest_str(f): c for f, c in self.items()}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for f, c in self.items():
            if c == 1:
                parts.append(forest_str(f))
            elif c == -1:
                parts.append("-%s" % forest_str(f))
            else:
                parts.append("%d*%s" % (c, forest_str(f)))
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# basis enumeration


def _set_partitions(items, r):
    """Partitions of items into exactly r blocks, each block ascending,
    blocks ordered by minimum.  items must be sorted ascending."""
    n = len(items)
    if r < 1 or r > n:
        return
    blocks = []

    def rec(i):
        if i == n:
            if len(blocks) == r:
                yield tuple(tuple(b) for b in blocks)
            return
        # remaining items must suffice to open the missing blocks
        if len(blocks) + (n - i) < r:
            return
        x = items[i]
        for b in blocks:
            b.append(x)
            yield from rec(i + 1)
            b.pop()
        if len(blocks) < r:
            blocks.append([x])
            yield from rec(i + 1)
            blocks.pop()

    yield from rec(0)


def tall_basis(k, n, degree):
    """All tall forests of the given degree, sorted by leaf-sequence key."""
    if k < 1 or n < 2:
        raise ValueError("need k >= 1 and n >= 2")
    if degree < 0 or degree % (n - 1) != 0:
        return []
    j = degree // (n - 1)
    if j > k - 1:
        return []
    out = []
    for part in _set_partitions(list(range(1, k + 1)), k - j):
        per_block = []
        for block in part:
            per_block.append([tall_from_seq((block[0],) + p)
                              for p in permutations(block[1:])])
        for combo in product(*per_block):
            out.append(tuple(combo))
    out.sort(key=_forest_key)
    return out


# ---------------------------------------------------------------------------
# rewriting


_GRAFT_CACHE = {}


def _graft(T, U, par):
    """Expand the bracket [T, U] of tall trees in the tall basis.

    par = n mod 2 (only the parity of n enters signs).  Returns a tuple of
    (tall tree, coeff) pairs.
    """
    key = (T, U, par)
    hit = _GRAFT_CACHE.get(key)
    if hit is not None:
        return hit
    step = 1 - par  # (n-1) mod 2
    mT = len(tree_leaves(T))
    mU = len(tree_leaves(U))
    if tree_min(T) > tree_min(U):
        s = -((-1) ** (mT * mU * step))
        out = tuple((V, s * c) for V, c in _graft(U, T, par))
    elif is_leaf(U):
        out = (((T, U), 1),)
    else:
        U1, u = U
        acc = {}
        for V, c in _graft(T, U1, par):
            for W, c2 in _graft(V, u, par):
                acc[W] = acc.get(W, 0) + c * c2
        m1 = len(tree_leaves(U1))
        s = (-1) ** (m1 * 1 * step)
        for V, c in _graft(T, u, par):
            for W, c2 in _graft(V, U1, par):
                acc[W] = acc.get(W, 0) - s * c * c2
        out = tuple((W, c) for W, c in acc.items() if c != 0)
    _GRAFT_CACHE[key] = out
    return out


def _tree_to_tall(t, par):
    """Expand one tree in the tall basis; returns tuple of (tree, coeff)."""
    if is_leaf(t):
        return ((t, 1),)
    if is_tall(t):
        return ((t, 1),)
    acc = {}
    for L, cl in _tree_to_tall(t[0], par):
        for R, cr in _tree_to_tall(t[1], par):
            for W, c in _graft(L, R, par):
                v = acc.get(W, 0) + cl * cr * c
                if v == 0:
                    acc.pop(W, None)
                else:
                    acc[W] = v
    return tuple(acc.items())


def rewrite_to_tall(f, n):
    """Expand a forest in the tall basis.

    The forest's labels must partition [1, k] for k = total leaf count; the
    given component order is part of the input and contributes the Koszul
    reordering sign.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    f = tuple(f)
    for t in f:
        _validate_tree(t)
    labels = [x for t in f for x in tree_leaves(t)]
    k = len(labels)
    if sorted(labels) != list(range(1, k + 1)):
        raise ForestError("leaf labels must partition 1..%d, got %r" % (k, sorted(labels)))
    par = n % 2
    degs = [tree_degree(t, n) for t in f]
    mins = [tree_min(t) for t in f]
    sign = 1
    for i in range(len(f)):
        for j in range(i + 1, len(f)):
            if mins[i] > mins[j] and (degs[i] * degs[j]) % 2:
                sign = -sign
    order = sorted(range(len(f)), key=lambda i: mins[i])
    expansions = [_tree_to_tall(f[i], par) for i in order]
    acc = {}
    for combo in product(*expansions):
        forest = tuple(tc[0] for tc in combo)
        c = sign
        for tc in combo:
            c *= tc[1]
        v = acc.get(forest, 0) + c
        if v == 0:
            acc.pop(forest, None)
        else:
            acc[forest] = v
    return HomologyClass(k, n, acc)


def sigma_act(perm, x):
    """Relabel leaves by a permutation of [1, k], then rewrite to the tall basis."""
    table = arnold._perm_table(perm, x.k)
    acc = HomologyClass(x.k, x.n)

    def relabel(t):
        if is_leaf(t):
            return table[t]
        return (relabel(t[0]), relabel(t[1]))

    for f, c in x.terms.items():
        moved = tuple(relabel(t) for t in f)
        acc = acc.add(rewrite_to_tall(moved, x.n).scale(c))
    return acc


# ---------------------------------------------------------------------------
# pairing with the cohomology basis


def _forest_partition(f):
    return tuple(sorted((tuple(sorted(tree_leaves(t))) for t in f)))


def _monomial_partition(mono, k):
    parent = list(range(k + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in mono:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    blocks = {}
    for v in range(1, k + 1):
        blocks.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def _path_word(f):
    word = []
    for t in f:
        seq = tree_leaves(t)
        for i in range(len(seq) - 1):
            word.append((seq[i], seq[i + 1]))
    return word


def pairing_matrix(k, n, degree):
    """Matrix of the pairing between tall_basis and admissible_basis.

    Block-diagonal over the common partition of [1, k]; each block is the
    inverse transpose of the path-monomial-to-admissible change of basis,
    so the whole matrix is invertible over the integers.
    """
    forests = tall_basis(k, n, degree)
    monos = arnold.admissible_basis(k, n, degree)
    if len(forests) != len(monos):
        raise AssertionError("basis size mismatch: %d forests vs %d monomials"
                             % (len(forests), len(monos)))
    row_blocks = {}
    for i, f in enumerate(forests):
        row_blocks.setdefault(_forest_partition(f), []).append(i)
    col_blocks = {}
    for j, m in enumerate(monos):
        col_blocks.setdefault(_monomial_partition(m, k), []).append(j)
    if sorted(row_blocks) != sorted(col_blocks):
        raise AssertionError("partition supports of the two bases differ")
    entries = {}
    for part, rows in row_blocks.items():
        cols = col_blocks[part]
        if len(rows) != len(cols):
            raise AssertionError("block size mismatch at partition %r" % (part,))
        col_pos = {monos[j]: a for a, j in enumerate(cols)}
        m = len(rows)
        d_entries = {}
        for a, i in enumerate(rows):
            expansion = arnold.normal_form(_path_word(forests[i]), k, n)
            for mono, c in expansion.terms.items():
                d_entries[(a, col_pos[mono])] = c
        d = SparseMatrix(m, m, QQ, d_entries)
        p = invert(d.transpose())
        for (a, b), v in p.entries.items():
            if v.denominator != 1:
                raise AssertionError("pairing block not integral at partition %r" % (part,))
            entries[(rows[a], cols[b])] = int(v)
    return SparseMatrix(len(forests), len(monos), ZZ, entries)


# ---------------------------------------------------------------------------
# symmetric-group action matrices and coinvariants


def action_matrix(perm, k, n, degree, basis=None, domain=ZZ):
    """Matrix of sigma_act on the tall basis: column j is the image of basis[j]."""
    if basis is None:
        basis = tall_basis(k, n, degree)
    pos = {f: i for i, f in enumerate(basis)}
    entries = {}
    for j, f in enumerate(basis):
        image = sigma_act(perm, HomologyClass(k, n, {f: 1}))
        for g, c in image.terms.items():
            entries[(pos[g], j)] = c
    return SparseMatrix(len(basis), len(basis), domain, entries)


def _adjacent_transposition(i, k):
    table = {v: v for v in range(1, k + 1)}
    table[i] = i + 1
    table[i + 1] = i
    return table


def coinvariants_dims(k, n, field):
    """Per degree, dim of the coinvariants of the symmetric-group action.

    field must have characteristic 0 or > k (the transfer hypothesis); this
    computes H_*(B_k(R^n)) with those coefficients.
    """
    if not getattr(field, "is_field", False):
        raise ValueError("coefficients must form a field")
    if 0 < field.characteristic <= k:
        raise ValueError("field characteristic %d <= k = %d: transfer fails"
                         % (field.characteristic, k))
    out = {}
    for j in range(0, k):
        degree = j * (n - 1)
        basis = tall_basis(k, n, degree)
        dim = len(basis)
        if dim == 0:
            continue
        stack = []
        ident = SparseMatrix.identity(dim, field)
        for i in range(1, k):
            a = action_matrix(_adjacent_transposition(i, k), k, n, degree,
                              basis=basis, domain=field)
            stack.append(a.sub(ident))
        stacked = SparseMatrix.vstack(stack) if stack else SparseMatrix.zero(0, dim, field)
        d = dim - rank(stacked)
        if d:
            out[degree] = out.get(degree, 0) + d
    return GradedDims(out)


def unordered_betti_rational(k, n):
    """Closed form for H_*(B_k(R^n); Q): degree 0, plus degree n-1 when n-1 is odd."""
    if k < 2 or n < 1:
        raise ValueError("need k >= 2 and n >= 1")
    dims = {0: 1}
    if (n - 1) % 2 == 1:
        dims[n - 1] = 1
    return GradedDims(dims)
