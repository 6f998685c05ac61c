"""Rational Betti numbers of unordered configuration spaces of an open
oriented n-manifold M, computed by Lie algebra homology.

Input is the compactly supported cohomology ring H_c(M) as a finite
graded-commutative algebra A (degrees in [0, n]).  From it we build a
bigraded Lie algebra g with

  * a weight-1 slot for each basis class a, in homological degree n-1-|a|,
  * for n even, a weight-2 slot a~ in degree 2n-2-|a|,
  * bracket [a(x)v, b(x)v] = (-1)^((n-1)|b|) (ab)~ when n is even,
    everything else zero; n odd makes g abelian.

The Chevalley-Eilenberg complex Sym(g[1]) carries the differential

  d(x_1...x_m) = sum_{i<j} (-1)^(|x_i|) eps(i,j) [x_i, x_j] x_1...^i...^j...x_m

with all Koszul signs computed from shifted degrees (|x|+1 on g); its
weight-k homology gives the Betti numbers of the space of k unordered
points in M.  Shifted slots of even degree are polynomial, odd exterior.

The stabilization map (adding a point near infinity) is the formal
derivative by the slot dual to the point class; it is a surjective chain
map whose kernel is spanned by the monomials not divisible by that slot.
"""

from __future__ import annotations

from fractions import Fraction

from .graded import BigradedDims, GradedDims, PoincareSeries, series_equal, sym_series
from .linalg import QQ, SparseMatrix, kernel_basis, rank


class AlgebraError(Exception):
    """Invalid algebra document or failed structure-constant validation."""


class StabilityError(Exception):
    """Stabilization hypotheses not met."""


# ---------------------------------------------------------------------------
# coefficient algebras


class CAlgebra:
    """Finite graded-commutative associative algebra (possibly nonunital).

    Products are stored as a total table (name, name) -> {name: coeff};
    omitted pairs are zero.
    """

    def __init__(self, name, n, degrees, prod):
        self.name = name
        self.n = n
        self.names = list(degrees)
        self.degree = dict(degrees)
        self.prod = prod

    def product(self, x, y):
        return self.prod.get((x, y), {})


def _validate_algebra(a):
    for x, d in a.degree.items():
        if not (0 <= d <= a.n):
            raise AlgebraError("basis element %r has degree %d outside [0, %d]"
                               % (x, d, a.n))
    for (x, y), res in a.prod.items():
        dxy = a.degree[x] + a.degree[y]
        for z, c in res.items():
            if c and a.degree[z] != dxy:
                raise AlgebraError(
                    "product %s*%s hits %r of degree %d, expected %d"
                    % (x, y, z, a.degree[z], dxy))
    for x in a.names:
        for y in a.names:
            sign = (-1) ** (a.degree[x] * a.degree[y])
            left = a.product(x, y)
            right = a.product(y, x)
            flipped = {z: sign * c for z, c in right.items() if c}
            if {z: c for z, c in left.items() if c} != flipped:
                raise AlgebraError(
                    "graded commutativity fails on (%s, %s)" % (x, y))
    for x in a.names:
        for y in a.names:
            for z in a.names:
                lhs = {}
                for w, c in a.product(x, y).items():
                    for u, c2 in a.product(w, z).items():
                        lhs[u] = lhs.get(u, 0) + c * c2
                rhs = {}
                for w, c in a.product(y, z).items():
                    for u, c2 in a.product(x, w).items():
                        rhs[u] = rhs.get(u, 0) + c * c2
                if ({u: c for u, c in lhs.items() if c}
                        != {u: c for u, c in rhs.items() if c}):
                    raise AlgebraError(
                        "associativity fails on (%s, %s, %s)" % (x, y, z))


def load_algebra(document):
    """Validate and load an algebra document (the JSON schema of README).

    {"name": str, "ambient_dim": int,
     "basis": [{"name": str, "degree": int}],
     "products": [{"left": str, "right": str,
                   "result": [{"basis": str, "coeff": int}]}]}
    """
    try:
        name = document["name"]
        n = int(document["ambient_dim"])
        basis = document["basis"]
    except (KeyError, TypeError) as exc:
        raise AlgebraError("malformed algebra document: %s" % exc)
    if n < 1:
        raise AlgebraError("ambient_dim must be positive")
    degrees = {}
    for item in basis:
        bname = item["name"]
        if bname in degrees:
            raise AlgebraError("duplicate basis name %r" % bname)
        degrees[bname] = int(item["degree"])
    prod = {}
    for item in document.get("products", []):
        left, right = item["left"], item["right"]
        if left not in degrees or right not in degrees:
            raise AlgebraError("product names unknown basis element (%r, %r)"
                               % (left, right))
        res = {}
        for term in item.get("result", []):
            z = term["basis"]
            if z not in degrees:
                raise AlgebraError("product result names unknown basis %r" % z)
            c = int(term["coeff"])
            if c:
                res[z] = res.get(z, 0) + c
        if (left, right) in prod:
            raise AlgebraError("duplicate product entry (%r, %r)" % (left, right))
        if res:
            prod[(left, right)] = res
    a = CAlgebra(name, n, degrees, prod)
    _validate_algebra(a)
    return a


# ---------------------------------------------------------------------------
# the Lie algebra


class Slot:
    __slots__ = ("name", "gdeg", "weight", "source")

    def __init__(self, name, gdeg, weight, source):
        self.name = name
        self.gdeg = gdeg      # homological degree in g
        self.weight = weight  # 1 or 2
        self.source = source  # underlying algebra basis name

    @property
    def sdeg(self):
        return self.gdeg + 1  # degree in g[1]

    def __repr__(self):
        return "Slot(%r, deg=%d, w=%d)" % (self.name, self.gdeg, self.weight)


class GMLie:
    """Bigraded Lie algebra built from a compactly-supported cohomology ring."""

    def __init__(self, algebra, slots, bracket):
        self.algebra = algebra
        self.n = algebra.n
        self.slots = slots
        self.index = {s.name: i for i, s in enumerate(slots)}
        self.bracket = bracket  # (name, name) -> {name: coeff}
        self._blocks = {}
        self._check_lie()

    def bracket_of(self, x, y):
        return self.bracket.get((x, y), {})

    def point_slot(self):
        """The weight-1 slot of the top-degree class (dual to a point)."""
        found = [s for s in self.slots
                 if s.weight == 1 and self.algebra.degree[s.source] == self.n]
        if len(found) != 1:
            raise StabilityError(
                "expected exactly one top-degree class, found %d" % len(found))
        return found[0].name

    def _check_lie(self):
        deg = {s.name: s.gdeg for s in self.slots}
        wt = {s.name: s.weight for s in self.slots}
        for (x, y), res in self.bracket.items():
            for z, c in res.items():
                if not c:
                    continue
                if deg[z] != deg[x] + deg[y]:
                    raise AlgebraError("bracket [%s,%s] not degree-0" % (x, y))
                if wt[z] != wt[x] + wt[y]:
                    raise AlgebraError("bracket [%s,%s] not weight-additive" % (x, y))
        names = [s.name for s in self.slots]
        for x in names:
            for y in names:
                sign = (-1) ** (deg[x] * deg[y])
                lhs = self.bracket_of(x, y)
                rhs = self.bracket_of(y, x)
                flipped = {z: -sign * c for z, c in rhs.items() if c}
                if {z: c for z, c in lhs.items() if c} != flipped:
                    raise AlgebraError("antisymmetry fails on [%s, %s]" % (x, y))
        # graded Jacobi; brackets landing in weight > 2 vanish identically,
        # so each double bracket must be zero
        for x in names:
            for y in names:
                for z, c in self.bracket_of(x, y).items():
                    if not c:
                        continue
                    for w in names:
                        if any(self.bracket_of(z, w).values()):
                            raise AlgebraError(
                                "Jacobi fails: [[%s,%s],%s] nonzero" % (x, y, w))

    def with_bracket_sign(self, sign):
        """Copy with every bracket scaled; Betti numbers must not change."""
        flipped = {key: {z: sign * c for z, c in res.items()}
                   for key, res in self.bracket.items()}
        return GMLie(self.algebra, self.slots, flipped)

    def block(self, k):
        if k not in self._blocks:
            self._blocks[k] = ce_block(self, k)
        return self._blocks[k]


def build_gm(a):
    """The Lie algebra of the configuration-space homology theorem."""
    n = a.n
    slots = []
    for x in a.names:
        slots.append(Slot(x, n - 1 - a.degree[x], 1, x))
    if n % 2 == 0:
        for x in a.names:
            slots.append(Slot(x + "~", 2 * n - 2 - a.degree[x], 2, x))
    slots.sort(key=lambda s: (s.weight, s.gdeg, s.name))
    bracket = {}
    if n % 2 == 0:
        for x in a.names:
            for y in a.names:
                res = {}
                sign = (-1) ** ((n - 1) * a.degree[y])
                for z, c in a.product(x, y).items():
                    if c:
                        res[z + "~"] = sign * c
                if res:
                    bracket[(x, y)] = res
    return GMLie(a, slots, bracket)


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg blocks


class CEComplexBlock:
    """Weight-k piece of the complex: bases per degree plus differentials."""

    def __init__(self, weight, bases, diffs, slots):
        self.weight = weight
        self.bases = bases    # degree -> list of exponent tuples
        self.index = {i: {m: a for a, m in enumerate(ms)}
                      for i, ms in bases.items()}
        self.diffs = diffs    # degree i -> SparseMatrix C_i -> C_{i-1}
        self.slots = slots

    def dim(self, i):
        return len(self.bases.get(i, ()))

    def degrees(self):
        return sorted(self.bases)

    def monomial_str(self, mono):
        parts = []
        for e, s in zip(mono, self.slots):
            if e == 1:
                parts.append(s.name)
            elif e > 1:
                parts.append("%s^%d" % (s.name, e))
        return "*".join(parts) if parts else "1"


def _enumerate_monomials(slots, k):
    """Exponent vectors of total weight k; exterior (odd shifted degree)
    slots capped at exponent 1."""
    out = []
    exps = [0] * len(slots)

    def rec(i, rem):
        if rem == 0:
            out.append(tuple(exps))
            return
        if i == len(slots):
            return
        s = slots[i]
        cap = rem // s.weight
        if s.sdeg % 2 == 1:
            cap = min(cap, 1)
        for e in range(cap + 1):
            exps[i] = e
            rec(i + 1, rem - e * s.weight)
        exps[i] = 0

    rec(0, k)
    return out


def _d_monomial(g, mono):
    """Image of one monomial under the CE differential, as {monomial: coeff}."""
    slots = g.slots
    factors = []
    for idx, e in enumerate(mono):
        factors.extend([idx] * e)
    m = len(factors)
    sdeg = [slots[idx].sdeg for idx in factors]
    prefix = [0]
    for d in sdeg:
        prefix.append(prefix[-1] + d)
    out = {}
    for i in range(m):
        for j in range(i + 1, m):
            res = g.bracket_of(slots[factors[i]].name, slots[factors[j]].name)
            if not res:
                continue
            # Koszul sign of the shuffle moving x_i, x_j to the front
            eps = (sdeg[i] * prefix[i]) + (sdeg[j] * (prefix[j] - sdeg[i]))
            sign = (-1) ** (sdeg[i] + eps)
            rest = list(mono)
            rest[factors[i]] -= 1
            rest[factors[j]] -= 1
            for zname, c in res.items():
                z = g.index[zname]
                zs = slots[z]
                if zs.sdeg % 2 == 1 and rest[z] >= 1:
                    continue
                # insert z into the sorted monomial: pass the slots before it
                passed = sum(rest[u] * slots[u].sdeg for u in range(z))
                s2 = sign * c * ((-1) ** (zs.sdeg * passed))
                new = list(rest)
                new[z] += 1
                key = tuple(new)
                v = out.get(key, 0) + s2
                if v == 0:
                    out.pop(key, None)
                else:
                    out[key] = v
    return out


def ce_block(g, k):
    """Build the weight-k complex; verifies d has square zero."""
    if k < 0:
        raise ValueError("weight must be nonnegative")
    monos = _enumerate_monomials(g.slots, k)
    bases = {}
    for m in monos:
        deg = sum(e * s.sdeg for e, s in zip(m, g.slots))
        bases.setdefault(deg, []).append(m)
    for deg in bases:
        bases[deg].sort()
    index = {deg: {m: a for a, m in enumerate(ms)} for deg, ms in bases.items()}
    diffs = {}
    for deg, ms in bases.items():
        target = index.get(deg - 1, {})
        entries = {}
        for col, mono in enumerate(ms):
            for im, c in _d_monomial(g, mono).items():
                entries[(target[im], col)] = Fraction(c)
        diffs[deg] = SparseMatrix(len(target), len(ms), QQ, entries)
    block = CEComplexBlock(k, bases, diffs, g.slots)
    for deg in sorted(bases):
        d_here = diffs[deg]
        d_up = diffs.get(deg + 1)
        if d_up is not None and d_here.nrows and not d_here.matmul(d_up).is_zero():
            raise AssertionError("d^2 != 0 in weight %d at degree %d" % (k, deg + 1))
    return block


def betti(g, k):
    """Homology dimensions of the weight-k block over Q."""
    block = g.block(k)
    out = {}
    for i in block.degrees():
        dim = block.dim(i)
        r_in = rank(block.diffs[i])
        d_up = block.diffs.get(i + 1)
        r_out = rank(d_up) if d_up is not None else 0
        h = dim - r_in - r_out
        if h:
            out[i] = h
    return GradedDims(out)


class BettiTable:
    """Map (weight k, degree i) -> dimension over Q."""

    def __init__(self, dims=None):
        self.dims = {}
        if dims:
            for (k, i), v in dims.items():
                if v:
                    self.dims[(k, i)] = v

    @classmethod
    def compute(cls, g, k_max):
        dims = {}
        for k in range(k_max + 1):
            for i, v in betti(g, k).items():
                dims[(k, i)] = v
        return cls(dims)

    def rows(self):
        return [(k, i, v) for (k, i), v in sorted(self.dims.items())]

    def weight_slice(self, k):
        return GradedDims({i: v for (kk, i), v in self.dims.items() if kk == k})

    def to_json_obj(self):
        return {"entries": [[k, i, v] for k, i, v in self.rows()]}

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.dims == other.dims


# ---------------------------------------------------------------------------
# stabilization


class StabilizationMap:
    """Per-degree matrices of the derivative by the point slot,
    from weight k+1 to weight k."""

    def __init__(self, g, maps, source, target):
        self.g = g
        self.maps = maps
        self.source = source
        self.target = target

    def induced_iso_degrees(self):
        """Map degree -> whether the induced map on homology is an isomorphism."""
        out = {}
        src, tgt = self.source, self.target
        for i in src.degrees():
            phi = self.maps[i]
            cycles = kernel_basis(src.diffs[i])
            h_s = src.dim(i) - rank(src.diffs[i]) - (
                rank(src.diffs[i + 1]) if (i + 1) in src.diffs else 0)
            h_t = tgt.dim(i) - (rank(tgt.diffs[i]) if i in tgt.diffs else 0) - (
                rank(tgt.diffs[i + 1]) if (i + 1) in tgt.diffs else 0)
            b_t = tgt.diffs.get(i + 1)
            if b_t is None:
                b_t = SparseMatrix.zero(tgt.dim(i), 0, QQ)
            img_entries = {}
            for c, vec in enumerate(cycles):
                image = phi.mul_vec(vec)
                for r, v in image.items():
                    img_entries[(r, c)] = v
            img = SparseMatrix(tgt.dim(i), len(cycles), QQ, img_entries)
            r_b = rank(b_t)
            r_ind = rank(SparseMatrix.hstack([img, b_t])) - r_b
            out[i] = (r_ind == h_s == h_t)
        return out


def stabilization_map(g, x_name, k):
    """The chain map d/dx: weight k+1 -> weight k, with built-in checks:
    commutes with differentials, surjective, kernel spanned by the
    monomials without x."""
    if x_name not in g.index:
        raise StabilityError("unknown slot %r" % x_name)
    xs = g.slots[g.index[x_name]]
    if xs.weight != 1 or xs.sdeg != 0:
        raise StabilityError(
            "slot %r is not the point-dual slot (weight 1, shifted degree 0)" % x_name)
    xi = g.index[x_name]
    src = g.block(k + 1)
    tgt = g.block(k)
    maps = {}
    for i in src.degrees():
        tgt_index = tgt.index.get(i, {})
        entries = {}
        kernel_count = 0
        for col, mono in enumerate(src.bases[i]):
            e = mono[xi]
            if e == 0:
                kernel_count += 1
                continue
            new = list(mono)
            new[xi] -= 1
            entries[(tgt_index[tuple(new)], col)] = Fraction(e)
        m = SparseMatrix(len(tgt_index), src.dim(i), QQ, entries)
        if rank(m) != len(tgt_index):
            raise AssertionError("derivative not surjective in degree %d" % i)
        if src.dim(i) - rank(m) != kernel_count:
            raise AssertionError("kernel is not spanned by x-free monomials")
        maps[i] = m
    for i in src.degrees():
        d_src = src.diffs[i]
        if i - 1 in maps:
            lhs = maps[i - 1].matmul(d_src)
        else:
            lhs = SparseMatrix.zero(tgt.dim(i - 1), src.dim(i), QQ)
        d_tgt = tgt.diffs.get(i)
        if d_tgt is None:
            d_tgt = SparseMatrix.zero(tgt.dim(i - 1), tgt.dim(i), QQ)
        rhs = d_tgt.matmul(maps[i])
        if not lhs.sub(rhs).is_zero():
            raise AssertionError("derivative is not a chain map in degree %d" % i)
    return StabilizationMap(g, maps, src, tgt)


def stability_report(g, k_max):
    """Rows (k, i, iso?) for the maps weight k+1 -> k, k < k_max.

    Requires ambient dimension > 2; the stable range is i <= k there."""
    if g.n <= 2:
        raise StabilityError(
            "stability range is only guaranteed for ambient dimension > 2; "
            "got n = %d" % g.n)
    x = g.point_slot()
    rows = []
    for k in range(k_max):
        phi = stabilization_map(g, x, k)
        for i, ok in sorted(phi.induced_iso_degrees().items()):
            rows.append((k, i, ok))
    return rows


# ---------------------------------------------------------------------------
# series cross-checks


def euler_series(g, weight_bound):
    """sum_k chi(weight-k block) s^k, computed from chain dimensions and,
    independently, from the symmetric-algebra series at t -> -1; the two
    must agree."""
    max_sd = max((s.sdeg for s in g.slots), default=0)
    deg_bound = weight_bound * max_sd
    gens = {}
    for s in g.slots:
        key = (s.sdeg, s.weight)
        gens[key] = gens.get(key, 0) + 1
    sym = sym_series(BigradedDims(gens), deg_bound, weight_bound)
    by_weight = sym.euler_by_weight()
    coeffs = {}
    for k in range(weight_bound + 1):
        block = g.block(k)
        chi = sum(((-1) ** i) * block.dim(i) for i in block.degrees())
        if chi != by_weight.get(k, 0):
            raise AssertionError(
                "Euler mismatch at weight %d: chain sum %d vs series %d"
                % (k, chi, by_weight.get(k, 0)))
        if chi:
            coeffs[(0, k)] = chi
    return PoincareSeries(coeffs, None, weight_bound)


def sym_homology_odd(h, k):
    """Weight-k piece of the free graded-commutative algebra on h.

    For an odd-dimensional manifold with finite homology h this equals the
    homology of its k-point unordered configuration space."""
    dims = dict(h.items()) if hasattr(h, "items") else dict(h)
    gens = {}
    max_d = 0
    for d, c in dims.items():
        if d < 0:
            raise ValueError("homology degrees must be nonnegative")
        if c:
            gens[(d, 1)] = c
            max_d = max(max_d, d)
    sym = sym_series(BigradedDims(gens), max_d * k if gens else 0, k)
    return sym.weight_slice(k)


def loopspace_homology(loops, sphere, degree_bound=None):
    """H of the iterated loop space of an odd sphere: Sym on one class of
    degree sphere - loops (rational coefficients)."""
    if sphere % 2 == 0:
        raise ValueError("only odd spheres are supported")
    if not (0 <= loops < sphere):
        raise ValueError("need 0 <= loops < sphere")
    d = sphere - loops
    if d % 2 == 1:
        return GradedDims({0: 1, d: 1})
    if degree_bound is None:
        raise ValueError("a degree bound is required when the generator is even")
    return GradedDims({j: 1 for j in range(0, degree_bound + 1, d)})


def labeled_series_check(a, r, degree_bound=20):
    """Bigraded series identity for labeled configuration spaces.

    LHS: sum_k P(H_*(B_k(M))) s^k t^(rk) from the Lie algebra homology.
    RHS: the symmetric algebra on one weight-1 slot of degree r+i for each
    dimension of H_i(M).  Requires n odd and r > 1 even."""
    n = a.n
    if n % 2 == 0:
        raise ValueError("the identity requires odd ambient dimension (r+n odd)")
    if r <= 1 or r % 2 == 1:
        raise ValueError("need r > 1 even")
    g = build_gm(a)
    h_dims = {}
    for x in a.names:
        i = n - a.degree[x]
        h_dims[i] = h_dims.get(i, 0) + 1
    weight_bound = degree_bound // r
    coeffs = {}
    for k in range(weight_bound + 1):
        for i, v in betti(g, k).items():
            if i + r * k <= degree_bound:
                coeffs[(i + r * k, k)] = v
    lhs = PoincareSeries(coeffs, degree_bound, weight_bound)
    gens = BigradedDims({(r + i, 1): c for i, c in h_dims.items() if c})
    rhs = sym_series(gens, degree_bound, weight_bound)
    return series_equal(lhs, rhs)
