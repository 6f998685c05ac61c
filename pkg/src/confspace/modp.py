"""Mod-p cohomology of C_p and Sigma_p with configuration-space coefficients.

The p-cycle sigma = (1 2 ... p) acts on the degree-t piece of
H_*(Conf_p(R^n); F_p) through the tall-forest basis, and the adjacent
transpositions extend the action to all of Sigma_p.  Everything downstream
of the module data is small homological algebra over F_p:

  * C_p-(co)homology comes from the 2-periodic resolution
    ... -> F_p[C_p] --N--> F_p[C_p] --(sigma-1)--> F_p[C_p] -> F_p
    with N = 1 + sigma + ... + sigma^(p-1), so every dimension is a
    difference of the three numbers dim V, rank(sigma-1), rank(N).
  * Tate groups splice cohomology (s > 0) with homology (s < -1) through
    coker N and ker N in the middle, and are 2-periodic on the nose.
  * Sigma_p-cohomology is computed by restriction to C_p: the image of the
    restriction is the subspace fixed by the normalizer N(C_p)/C_p, a
    cyclic group of order p-1 generated by sigma -> sigma^r for a
    primitive root r.  Its action on periodic-resolution cohomology is an
    explicit comparison chain map (multiplication by r^j in stage 2j,
    r^j times the partial norm 1 + sigma + ... + sigma^(r-1) in stage
    2j+1, both composed with the permutation realizing the conjugation).
  * A normalized bar-resolution computation over the full symmetric group
    is kept as a brute-force oracle for tiny groups.

Freeness of F_p[C_p]-modules is decidable from one rank: sigma is unipotent
of order p, so all Jordan blocks of sigma - 1 have size <= p, N acts as
(sigma-1)^(p-1), and the module is free exactly when the number of blocks,
nullity(sigma - 1), equals dim/p.

Module validation is exhaustive below _FULL_CHECK_LIMIT and sampled on
strided basis columns above it (the sigma^p identity is still verified as
a full matrix equation whenever the power list gets built).
"""

from __future__ import annotations

from itertools import permutations, product
from math import factorial

from . import forests
from .graded import GradedDims, PoincareSeries
from .linalg import GF, SparseMatrix, kernel_basis, rank


class ModpError(Exception):
    pass


# full matrix-equation validation and explicit norm ranks below this size;
# larger modules get strided column checks and the nullity-based freeness test
_FULL_CHECK_LIMIT = 2000

_SAMPLE_COLUMNS = 48


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _cols_dict(m):
    cols = {}
    for (i, j), v in m.entries.items():
        cols.setdefault(j, {})[i] = v
    return cols


def _apply_cols(cols, vec, p):
    """Sparse matrix (as column dicts) times sparse vector, mod p."""
    out = {}
    for j, x in vec.items():
        col = cols.get(j)
        if not col:
            continue
        for i, v in col.items():
            out[i] = (out.get(i, 0) + v * x) % p
    return {i: v for i, v in out.items() if v}


class GModule:
    """F_p vector space with an action of C_p = <sigma>, and optionally of
    Sigma_p through Coxeter generators tau_1 .. tau_{p-1}.

    twist = 1 multiplies every tau_i by -1 (the sign character); sigma then
    picks up the sign of the p-cycle, (-1)^(p-1).

    Validated on construction: sigma^p = 1, and with taus present also
    tau_i^2 = 1, (tau_i tau_{i+1})^3 = 1, (tau_i tau_j)^2 = 1 for j > i+1,
    and sigma = tau_1 tau_2 ... tau_{p-1}.  All checks are full matrix
    equations up to dimension _FULL_CHECK_LIMIT and strided column checks
    beyond it.
    """

    def __init__(self, p, sigma, taus=None, twist=0, check=True, basis=None):
        if not _is_prime(p):
            raise ModpError("p = %d is not prime" % p)
        if sigma.nrows != sigma.ncols:
            raise ModpError("sigma must be square, got %dx%d" % (sigma.nrows, sigma.ncols))
        field = GF(p)
        if sigma.domain != field:
            raise ModpError("sigma must have GF(%d) coefficients" % p)
        self.p = p
        self.field = field
        self.dim = sigma.nrows
        self.twist = twist % 2
        if taus is not None:
            taus = list(taus)
            if len(taus) != p - 1:
                raise ModpError("expected %d Coxeter generators, got %d" % (p - 1, len(taus)))
            for m in taus:
                if (m.nrows, m.ncols) != (self.dim, self.dim) or m.domain != field:
                    raise ModpError("Coxeter generator shape or domain mismatch")
        if self.twist:
            sigma = sigma.scale((-1) ** (p - 1))
            if taus is not None:
                taus = [m.scale(-1) for m in taus]
        self.sigma = sigma
        self.taus = taus
        self.basis = basis
        self._powers = None
        self._aug = None
        self._norm = None
        self._rank_aug = None
        self._rank_norm = None
        if check:
            self._validate()

    # -- lazy matrix data ---------------------------------------------------

    def powers(self):
        """[1, sigma, ..., sigma^(p-1)]; verifies sigma^p = 1 exactly."""
        if self._powers is None:
            mats = [SparseMatrix.identity(self.dim, self.field)]
            for _ in range(self.p - 1):
                mats.append(self.sigma.matmul(mats[-1]))
            if self.sigma.matmul(mats[self.p - 1]) != mats[0]:
                raise ModpError("sigma^%d is not the identity" % self.p)
            self._powers = mats
        return self._powers

    def power(self, i):
        return self.powers()[i % self.p]

    def aug(self):
        """sigma - 1, the augmentation-stage differential."""
        if self._aug is None:
            ident = SparseMatrix.identity(self.dim, self.field)
            self._aug = self.sigma.sub(ident)
        return self._aug

    def norm(self):
        """N = 1 + sigma + ... + sigma^(p-1)."""
        if self._norm is None:
            acc = self.powers()[0]
            for m in self.powers()[1:]:
                acc = acc.add(m)
            self._norm = acc
        return self._norm

    def partial_norm(self, r):
        """1 + sigma + ... + sigma^(r-1)."""
        if not 1 <= r <= self.p:
            raise ModpError("partial norm length %d out of range" % r)
        acc = self.powers()[0]
        for m in self.powers()[1:r]:
            acc = acc.add(m)
        return acc

    def rank_aug(self):
        if self._rank_aug is None:
            self._rank_aug = rank(self.aug())
        return self._rank_aug

    def rank_norm(self):
        if self._rank_norm is None:
            self._rank_norm = rank(self.norm())
        return self._rank_norm

    # -- construction-time checks -------------------------------------------

    def _sample_columns(self):
        stride = max(1, self.dim // _SAMPLE_COLUMNS)
        return range(0, self.dim, stride)

    def _validate(self):
        p = self.p
        if self.dim == 0:
            return
        if self.dim <= _FULL_CHECK_LIMIT:
            self.powers()  # full sigma^p = 1 check happens in there
            if self.taus is not None:
                ident = SparseMatrix.identity(self.dim, self.field)
                ts = self.taus
                for i, t in enumerate(ts, start=1):
                    if t.matmul(t) != ident:
                        raise ModpError("tau_%d^2 is not the identity" % i)
                for i in range(1, p - 1):
                    m = ts[i - 1].matmul(ts[i])
                    if m.matmul(m).matmul(m) != ident:
                        raise ModpError("braid relator fails at (tau_%d, tau_%d)" % (i, i + 1))
                for i in range(1, p):
                    for j in range(i + 2, p):
                        m = ts[i - 1].matmul(ts[j - 1])
                        if m.matmul(m) != ident:
                            raise ModpError("tau_%d and tau_%d do not commute" % (i, j))
                prod = ident
                for t in ts:
                    prod = prod.matmul(t)
                if prod != self.sigma:
                    raise ModpError("sigma is not tau_1 tau_2 ... tau_%d" % (p - 1))
            return
        # strided column checks for large modules
        sig = _cols_dict(self.sigma)
        for j in self._sample_columns():
            v = {j: 1}
            for _ in range(p):
                v = _apply_cols(sig, v, p)
            if v != {j: 1}:
                raise ModpError("sigma^%d fails on basis column %d" % (p, j))
        if self.taus is None:
            return
        tcols = [_cols_dict(t) for t in self.taus]
        for j in self._sample_columns():
            e = {j: 1}
            for i, tc in enumerate(tcols, start=1):
                if _apply_cols(tc, _apply_cols(tc, e, p), p) != e:
                    raise ModpError("tau_%d^2 fails on basis column %d" % (i, j))
            for i in range(p - 2):
                v = dict(e)
                for _ in range(3):
                    v = _apply_cols(tcols[i], _apply_cols(tcols[i + 1], v, p), p)
                if v != e:
                    raise ModpError("braid relator fails at (tau_%d, tau_%d) on column %d" % (i + 1, i + 2, j))
            for i in range(p - 1):
                for k in range(i + 2, p - 1):
                    v = dict(e)
                    for _ in range(2):
                        v = _apply_cols(tcols[i], _apply_cols(tcols[k], v, p), p)
                    if v != e:
                        raise ModpError("tau_%d and tau_%d do not commute on column %d" % (i + 1, k + 1, j))
            v = dict(e)
            for tc in reversed(tcols):
                v = _apply_cols(tc, v, p)
            if v != _apply_cols(sig, e, p):
                raise ModpError("sigma is not tau_1 ... tau_%d on column %d" % (p - 1, j))


def trivial_module(p, twist=0):
    """F_p with trivial sigma; twist = 1 gives the sign module F_p(1)."""
    if not _is_prime(p):
        raise ModpError("p = %d is not prime" % p)
    one = SparseMatrix.identity(1, GF(p))
    return GModule(p, one, taus=[one] * (p - 1), twist=twist)


def regular_module(p):
    """The free module F_p[C_p] (no Sigma_p structure)."""
    field = GF(p)
    sigma = SparseMatrix(p, p, field, {((i + 1) % p, i): 1 for i in range(p)})
    return GModule(p, sigma)


_conf_cache = {}


def conf_module(p, n, t, twist=0):
    """Degree-t piece of H_*(Conf_p(R^n); F_p) on the tall-forest basis.

    sigma acts by the p-cycle i -> i+1 and tau_i by the transposition
    (i, i+1), both through leaf relabeling followed by rewriting to the
    tall basis.  t must be a multiple of n-1 inside [0, (n-1)(p-1)].
    Results are memoized: the matrices are never mutated downstream.
    """
    key = (p, n, t, twist % 2)
    if key in _conf_cache:
        return _conf_cache[key]
    if not _is_prime(p):
        raise ModpError("p = %d is not prime" % p)
    if n < 2:
        raise ModpError("need n >= 2")
    top = (n - 1) * (p - 1)
    if t < 0 or t > top or t % (n - 1) != 0:
        raise ModpError("degree %d is not a multiple of %d inside [0, %d]" % (t, n - 1, top))
    field = GF(p)
    basis = forests.tall_basis(p, n, t)
    cycle = {i: i % p + 1 for i in range(1, p + 1)}
    sigma = forests.action_matrix(cycle, p, n, t, basis=basis, domain=field)
    taus = []
    for i in range(1, p):
        swap = {x: x for x in range(1, p + 1)}
        swap[i], swap[i + 1] = i + 1, i
        taus.append(forests.action_matrix(swap, p, n, t, basis=basis, domain=field))
    v = GModule(p, sigma, taus=taus, twist=twist, basis=basis)
    _conf_cache[key] = v
    return v


# -- C_p (co)homology from the periodic resolution ---------------------------


def cyclic_cohomology(v, s_max):
    """H^s(C_p; V) for s = 0..s_max.

    From the periodic resolution: H^0 = ker(sigma-1), H^odd = ker N / im(sigma-1),
    H^even>0 = ker(sigma-1) / im N.
    """
    if s_max < 0:
        raise ModpError("negative cohomological window")
    d, ra = v.dim, v.rank_aug()
    dims = {0: d - ra}
    if s_max >= 1:
        rn = v.rank_norm()
        for s in range(1, s_max + 1):
            dims[s] = (d - rn) - ra if s % 2 else (d - ra) - rn
    return GradedDims(dims)


def cyclic_homology(v, s_max):
    """H_s(C_p; V) for s = 0..s_max; dual pattern to cyclic_cohomology."""
    if s_max < 0:
        raise ModpError("negative homological window")
    d, ra = v.dim, v.rank_aug()
    dims = {0: d - ra}
    if s_max >= 1:
        rn = v.rank_norm()
        for s in range(1, s_max + 1):
            dims[s] = (d - ra) - rn if s % 2 else (d - rn) - ra
    return GradedDims(dims)


class TateDims:
    """Tate cohomology dimensions on an explicit finite window of s."""

    def __init__(self, dims, window):
        lo, hi = int(window[0]), int(window[1])
        if lo > hi:
            raise ModpError("empty Tate window [%d, %d]" % (lo, hi))
        self.window = (lo, hi)
        self.dims = {}
        for s, v in dims.items():
            s = int(s)
            if not lo <= s <= hi:
                raise ModpError("dimension at s = %d outside window" % s)
            if v:
                self.dims[s] = int(v)

    def get(self, s):
        lo, hi = self.window
        if not lo <= s <= hi:
            raise ModpError("s = %d outside window [%d, %d]" % (s, lo, hi))
        return self.dims.get(s, 0)

    def items(self):
        return [(s, self.get(s)) for s in range(self.window[0], self.window[1] + 1)]

    def is_two_periodic(self):
        lo, hi = self.window
        return all(self.get(s) == self.get(s + 2) for s in range(lo, hi - 1))

    def __eq__(self, other):
        return (isinstance(other, TateDims) and self.window == other.window
                and self.dims == other.dims)

    def __repr__(self):
        return "TateDims(%r, window=%r)" % (dict(self.items()), self.window)


def tate(v, window):
    """Tate cohomology dims of C_p on the window (s_min, s_max), inclusive.

    s > 0 is cyclic_cohomology, s < -1 is cyclic_homology at -s-1, and the
    middle is coker(N) on invariants at s = 0, ker(N)/im(sigma-1) at s = -1.
    """
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ModpError("empty Tate window [%d, %d]" % (lo, hi))
    dims = {}
    if hi > 0:
        co = cyclic_cohomology(v, hi)
        for s in range(max(lo, 1), hi + 1):
            dims[s] = co.get(s)
    if lo < -1:
        ho = cyclic_homology(v, -lo - 1)
        for s in range(lo, min(hi, -2) + 1):
            dims[s] = ho.get(-s - 1)
    d = v.dim
    if lo <= 0 <= hi:
        dims[0] = (d - v.rank_aug()) - v.rank_norm()
    if lo <= -1 <= hi:
        dims[-1] = (d - v.rank_norm()) - v.rank_aug()
    return TateDims(dims, (lo, hi))


# -- vanishing of the interior degrees ----------------------------------------


def _freeness_certificate(v):
    """True iff the sigma-orbit block decomposition certifies freeness.

    Two facts are checked on the tall-forest basis: no basis forest's leaf
    partition is fixed by the p-cycle (orbits of partition blocks then have
    size exactly p), and every sigma-image of a basis vector is supported in
    the block of the rotated partition.  Together these exhibit V as a sum
    of modules induced from the trivial subgroup, i.e. free ones.
    """
    if v.basis is None:
        raise ModpError("block certificate needs the forest basis")
    p = v.p
    parts = [forests._forest_partition(f) for f in v.basis]
    shifted = []
    for pi in parts:
        moved = tuple(sorted(tuple(sorted(x % p + 1 for x in comp)) for comp in pi))
        if moved == pi:
            return False
        shifted.append(moved)
    for (r, c) in v.sigma.entries:
        if parts[r] != shifted[c]:
            return False
    return True


def _vanishing_linear(v):
    """Linear-algebra route: the homology window [1, 2p] vanishes.

    Small modules get the explicit norm rank; large ones the equivalent
    freeness criterion nullity(sigma - 1) = dim/p (all Jordan blocks of the
    unipotent sigma have size <= p, and N kills every block of size < p).
    """
    d = v.dim
    if d > _FULL_CHECK_LIMIT:
        return d % v.p == 0 and v.rank_aug() == d - d // v.p
    h = cyclic_homology(v, 2 * v.p)
    return all(h.get(s) == 0 for s in range(1, 2 * v.p + 1))


def verify_vanishing(p, n):
    """True iff H_s(C_p; H_t) = 0 for 0 < s <= 2p and all interior t.

    Interior means 0 < t < (n-1)(p-1), i.e. t = j(n-1) for 0 < j < p-1;
    an empty interior (p = 2) is vacuously true.  Every degree is decided
    by two independent routes, the block certificate and linear algebra,
    and a disagreement raises AssertionError.
    """
    if not _is_prime(p):
        raise ModpError("p = %d is not prime" % p)
    if n < 2:
        raise ModpError("need n >= 2")
    ok_all = True
    for j in range(1, p - 1):
        t = j * (n - 1)
        v = conf_module(p, n, t)
        cert = _freeness_certificate(v)
        lin = _vanishing_linear(v)
        if cert != lin:
            raise AssertionError(
                "certificate (%r) and linear algebra (%r) disagree at t = %d" % (cert, lin, t))
        ok_all = ok_all and cert
    return ok_all


# -- Sigma_p fixed spaces and the stable-class route --------------------------


def invariants_sigma_p(p, n):
    """Dimension of the simultaneous Coxeter fixed space on cohomology, per t.

    Computed as the coinvariants dimension of the homology module, which is
    its dual: dim V - rank [tau_1 - 1 | ... | tau_{p-1} - 1].
    """
    if not _is_prime(p):
        raise ModpError("p = %d is not prime" % p)
    if n < 2:
        raise ModpError("need n >= 2")
    out = {}
    for j in range(p):
        t = j * (n - 1)
        v = conf_module(p, n, t)
        ident = SparseMatrix.identity(v.dim, v.field)
        stacked = SparseMatrix.hstack([m.sub(ident) for m in v.taus])
        out[t] = v.dim - rank(stacked)
    return GradedDims(out)


def _primitive_root(p):
    for r in range(2, p):
        x, seen = 1, set()
        for _ in range(p - 1):
            x = x * r % p
            seen.add(x)
        if len(seen) == p - 1:
            return r
    raise ModpError("no primitive root mod %d" % p)


def _transposition_word(q):
    """Adjacent-transposition word for the one-line permutation q, leftmost
    factor outermost: q = tau_{w[0]} o tau_{w[1]} o ... (reduced)."""
    line = list(q)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(line) - 1):
            if line[i] > line[i + 1]:
                line[i], line[i + 1] = line[i + 1], line[i]
                swaps.append(i + 1)
                changed = True
    return tuple(reversed(swaps))


def _word_permutation(word, p):
    out = []
    for x in range(1, p + 1):
        for i in reversed(word):
            if x == i:
                x = i + 1
            elif x == i + 1:
                x = i
        out.append(x)
    return tuple(out)


def _element_matrix(v, q):
    """Action matrix of the permutation q (one-line tuple) via its
    transposition word; well-defined because the Coxeter relators hold."""
    word = _transposition_word(q)
    if _word_permutation(word, v.p) != tuple(q):
        raise ModpError("internal: transposition word does not recompose")
    m = SparseMatrix.identity(v.dim, v.field)
    for i in word:
        m = m.matmul(v.taus[i - 1])
    return m


def sigma_p_cohomology_stable(v, s_max):
    """dim H^s(Sigma_p; V) via stable classes, s = 0..s_max.

    Restriction to C_p is injective with image the classes fixed by
    N(C_p)/C_p = <sigma -> sigma^r>, r a primitive root.  The normalizer
    generator acts on periodic-resolution cochains by phi_2j = r^j g and
    phi_{2j+1} = r^j g (1 + sigma + ... + sigma^(r-1)) where g realizes a
    permutation conjugating sigma to sigma^r; the chain-map identity
    delta phi_s = phi_{s+1} delta is asserted at every stage.
    """
    if v.taus is None:
        raise ModpError("full Sigma_p action required")
    if s_max < 0:
        raise ModpError("negative cohomological window")
    p = v.p
    if p == 2:
        return cyclic_cohomology(v, s_max)
    d, field = v.dim, v.field
    r = _primitive_root(p)
    rinv = pow(r, -1, p)
    # g realizes q: i -> (i-1) r^{-1} + 1, which conjugates sigma to sigma^r
    q = tuple((i - 1) * rinv % p + 1 for i in range(1, p + 1))
    g = _element_matrix(v, q)
    if v.sigma.matmul(g) != g.matmul(v.power(r)):
        raise ModpError("normalizer conjugation identity fails")
    a = v.aug()
    nn = v.norm()
    pi_r = v.partial_norm(r)

    def phi(s):
        m = g.scale(pow(r, s // 2, p))
        if s % 2:
            m = m.matmul(pi_r)
        return m

    dims = {}
    for s in range(s_max + 1):
        ds = a if s % 2 == 0 else nn
        phi_s = phi(s)
        if ds.matmul(phi_s) != phi(s + 1).matmul(ds):
            raise ModpError("comparison map is not a chain map at s = %d" % s)
        cycles = kernel_basis(ds)
        z = len(cycles)
        zmat = SparseMatrix(d, z, field,
                            {(i, c): val for c, vec in enumerate(cycles)
                             for i, val in vec.items()})
        moved = phi_s.matmul(zmat).sub(zmat)
        if s >= 1:
            prev = a if s % 2 else nn
            stacked = SparseMatrix.hstack([moved, prev])
        else:
            stacked = moved
        dims[s] = z - rank(stacked)
    return GradedDims(dims)


def bar_cohomology(v, s_max):
    """H^s(G; V) for the full symmetric group by the normalized bar complex.

    Brute-force oracle: refuses groups of order above 6 and s_max above 4.
    Element matrices come from reduced transposition words, multiplicativity
    is asserted on every pair.
    """
    if v.taus is None:
        raise ModpError("full Sigma_p action required")
    p = v.p
    order = factorial(p)
    if order > 6:
        raise ModpError("group of order %d is too large for the bar oracle (limit 6)" % order)
    if s_max > 4:
        raise ModpError("bar oracle is limited to s <= 4, got %d" % s_max)
    if s_max < 0:
        raise ModpError("negative cohomological window")
    ident_el = tuple(range(1, p + 1))
    elements = sorted(permutations(range(1, p + 1)))
    mats = {el: _element_matrix(v, el) for el in elements}

    def compose(f, g):
        return tuple(f[g[x - 1] - 1] for x in range(1, p + 1))

    for f in elements:
        for g in elements:
            if mats[compose(f, g)] != mats[f].matmul(mats[g]):
                raise ModpError("element matrices are not multiplicative")
    nonid = [el for el in elements if el != ident_el]
    dm = v.dim

    def delta_matrix(s):
        rows_t = list(product(nonid, repeat=s + 1))
        cols_t = list(product(nonid, repeat=s))
        col_pos = {t: i for i, t in enumerate(cols_t)}
        entries = {}
        for ri, tup in enumerate(rows_t):
            base = ri * dm
            c0 = col_pos[tup[1:]] * dm
            for (i, j), val in mats[tup[0]].entries.items():
                key = (base + i, c0 + j)
                entries[key] = entries.get(key, 0) + val
            for i in range(1, s + 1):
                merged = compose(tup[i - 1], tup[i])
                if merged == ident_el:
                    continue
                cj = col_pos[tup[:i - 1] + (merged,) + tup[i + 1:]] * dm
                sgn = -1 if i % 2 else 1
                for m in range(dm):
                    key = (base + m, cj + m)
                    entries[key] = entries.get(key, 0) + sgn
            ct = col_pos[tup[:s]] * dm
            sgn = -1 if (s + 1) % 2 else 1
            for m in range(dm):
                key = (base + m, ct + m)
                entries[key] = entries.get(key, 0) + sgn
        return SparseMatrix(len(rows_t) * dm, len(cols_t) * dm, v.field, entries)

    dims = {}
    prev_rank = 0
    for s in range(s_max + 1):
        size = len(nonid) ** s * dm
        r_s = rank(delta_matrix(s))
        dims[s] = size - r_s - prev_rank
        prev_rank = r_s
    return GradedDims(dims)


# -- closed-form series --------------------------------------------------------


def nakaoka_series(p, degree_bound):
    """Series of Lambda(v_{2p-3}) tensor F_p[beta v_{2p-2}], truncated."""
    if not _is_prime(p) or p == 2:
        raise ModpError("p = %d is not an odd prime" % p)
    if degree_bound < 0:
        raise ModpError("negative degree bound")
    coeffs = {}
    for base in (0, 2 * p - 3):
        d = base
        while d <= degree_bound:
            coeffs[(d, 0)] = coeffs.get((d, 0), 0) + 1
            d += 2 * p - 2
    return PoincareSeries(coeffs, degree_bound, 0)


def cohen_series(p, n, degree_bound):
    """Poincare series of H^*(B_p(R^n); F_p) for p > 3.

    Fiber product over F_p in degree 0: the fixed-space series from
    invariants_sigma_p plus nakaoka_series truncated at (n-1)(p-1), minus
    the doubled constant term.
    """
    if not _is_prime(p):
        raise ModpError("p = %d is not prime" % p)
    if p <= 3:
        raise ModpError(
            "p = %d is outside the p > 3 hypothesis of the fixed-space closed form; "
            "combine invariants_sigma_p and nakaoka_series by hand instead" % p)
    if n < 2:
        raise ModpError("need n >= 2")
    if degree_bound < 0:
        raise ModpError("negative degree bound")
    inv = invariants_sigma_p(p, n)
    nak = nakaoka_series(p, min(degree_bound, (n - 1) * (p - 1)))
    coeffs = {(d, 0): c for d, c in inv.items() if d <= degree_bound}
    for (d, _w), c in nak.coeffs.items():
        coeffs[(d, 0)] = coeffs.get((d, 0), 0) + c
    coeffs[(0, 0)] = coeffs.get((0, 0), 0) - 1
    return PoincareSeries(coeffs, degree_bound, 0)


def swan_period(p):
    """Least period of the Tate cohomology of Sigma_p at p: 2(p-1).

    For p <= 7 the normalizer and centralizer of <sigma> are found by brute
    force over Sigma_p and the period is 2 |N| / |C|; beyond that the closed
    form is returned directly.
    """
    if not _is_prime(p) or p == 2:
        raise ModpError("p = %d is not an odd prime" % p)
    if p > 7:
        return 2 * (p - 1)
    cycle = tuple(list(range(2, p + 1)) + [1])
    power_set = set()
    cur = tuple(range(1, p + 1))
    for _ in range(p):
        power_set.add(cur)
        cur = tuple(cycle[x - 1] for x in cur)
    n_count = 0
    c_count = 0
    for g in permutations(range(1, p + 1)):
        ginv = [0] * p
        for x in range(1, p + 1):
            ginv[g[x - 1] - 1] = x
        conj = tuple(g[cycle[ginv[x - 1] - 1] - 1] for x in range(1, p + 1))
        if conj in power_set:
            n_count += 1
            if conj == cycle:
                c_count += 1
    if c_count != p:
        raise ModpError("centralizer of the p-cycle should have order p")
    if n_count % c_count:
        raise ModpError("centralizer order does not divide normalizer order")
    return 2 * (n_count // c_count)
