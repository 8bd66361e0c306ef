"""Groebner bases, syzygies and ideal arithmetic over F_p.

The Buchberger loop runs on kernel vectors (see ``_kernel``) with normal
pair selection and the Gebauer-Moeller pair criteria; the product criterion
is only applied for ideals, where it is valid.  All returned bases are
reduced, monic and sorted, hence canonical for the term order.

Submodule kernels (syzygies) are computed by a graph construction: columns
(M e_j, e_j) of F ⊕ S^src are completed to a Groebner basis for an order in
which the F-block dominates; basis elements with lead in the marker block
have zero F-part and form a basis of ker M.
"""

import heapq

import numpy as np

from .arith import SeededRng
from .linalg import RowSpan, nullspace, rref
from .ring import GradedFreeModule, GradedMatrix, Polynomial, Ring


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Buchberger


def buchberger(kr, vecs, wdeg=None, rank1=False):
    """Reduced Groebner basis of the span of `vecs` (kernel vectors).

    wdeg: optional (comp, exps) -> weighted degree used for pair selection.
    rank1: enables the product criterion (single-component input only).
    """
    if wdeg is None:
        wdeg = lambda comp, exps: sum(exps)

    basis = []
    leads = []  # (comp, exps) per basis element
    pairs = []  # heap of (seldeg, lcm key, i, j)
    red = kr.reducer()

    def push_pair(i, j):
        ci, ei = leads[i]
        cj, ej = leads[j]
        l = _lcm(ei, ej)
        heapq.heappush(pairs, (wdeg(ci, l), kr.key(ci, l), i, j))

    def add_element(v):
        v = kr.monic(v)
        t = len(basis)
        _, ct, et = kr.lead(v)

        # drop old pairs strictly dominated by the new lead (chain criterion)
        survivors = []
        for entry in pairs:
            _, _, i, j = entry
            ci, ei = leads[i]
            _, ej = leads[j]
            if ci == ct:
                l = _lcm(ei, ej)
                if (
                    _divides(et, l)
                    and _lcm(ei, et) != l
                    and _lcm(ej, et) != l
                ):
                    continue
            survivors.append(entry)
        if len(survivors) != len(pairs):
            pairs[:] = survivors
            heapq.heapify(pairs)

        # new pairs, pruned among themselves by the Gebauer-Moeller rules
        fresh = {}
        coprime = set()
        for i in range(t):
            ci, ei = leads[i]
            if ci != ct:
                continue
            l = _lcm(ei, et)
            if rank1 and all(min(a, b) == 0 for a, b in zip(ei, et)):
                coprime.add(l)
                continue
            fresh.setdefault(l, i)
        for l in coprime:
            if l in fresh:
                del fresh[l]
        items = sorted(fresh.items(), key=lambda kv: sum(kv[0]))
        kept = []
        for l, i in items:
            if any(_divides(lk, l) and lk != l for lk, _ in kept):
                continue
            kept.append((l, i))
        for l, i in kept:
            heapq.heappush(pairs, (wdeg(ct, l), kr.key(ct, l), i, t))

        basis.append(v)
        leads.append((ct, et))
        red.add(v)

    for v in vecs:
        if kr.is_zero(v):
            continue
        v = kr.normal_form(v, red)
        if not kr.is_zero(v):
            add_element(v)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        s = kr.spoly(basis[i], basis[j])
        s = kr.normal_form(s, red)
        if not kr.is_zero(s):
            add_element(s)

    return _interreduce(kr, basis, leads)


def _interreduce(kr, basis, leads):
    """Keep minimal leads, fully tail-reduce, sort ascending by lead key."""
    order = sorted(range(len(basis)), key=lambda i: kr.key(*leads[i]))
    kept = []
    for i in order:
        ci, ei = leads[i]
        if any(c == ci and _divides(e, ei) for c, e in (leads[j] for j in kept)):
            continue
        kept.append(i)
    out = []
    for i in kept:
        red = kr.reducer()
        empty = True
        for j in kept:
            if j != i:
                red.add(basis[j])
                empty = False
        v = basis[i] if empty else kr.normal_form(basis[i], red)
        out.append(kr.monic(v))
    out.sort(key=kr.lead_key)
    return out


# ---------------------------------------------------------------------------
# High-level wrappers


def _to_kvec(kr, f, comp=0):
    return kr.vec((c, comp, e) for c, e in f.terms)


def _to_poly(ring, kr, v):
    terms = [(c, e) for c, _, e in kr.terms(v)]
    terms.sort(key=lambda t: ring.key_of(t[1]), reverse=True)
    return Polynomial(ring, tuple(terms))


class GroebnerBasis:
    """Reduced Groebner basis of an ideal, with a reusable reducer."""

    __slots__ = ("ring", "kring", "kvecs", "_reducer", "_polys")

    def __init__(self, ring, kvecs):
        self.ring = ring
        self.kring = ring.kring()
        self.kvecs = kvecs
        self._reducer = None
        self._polys = None

    def __len__(self):
        return len(self.kvecs)

    @property
    def polys(self):
        if self._polys is None:
            self._polys = [_to_poly(self.ring, self.kring, v) for v in self.kvecs]
        return self._polys

    @property
    def reducer(self):
        if self._reducer is None:
            r = self.kring.reducer()
            for v in self.kvecs:
                r.add(v)
            self._reducer = r
        return self._reducer

    def lead_exps(self):
        return [self.kring.lead(v)[2] for v in self.kvecs]

    def normal_form(self, f):
        v = _to_kvec(self.kring, f)
        return _to_poly(self.ring, self.kring, self.kring.normal_form(v, self.reducer))

    def contains(self, f):
        return self.normal_form(f).is_zero

    @property
    def is_unit(self):
        return len(self.kvecs) == 1 and self.kring.lead(self.kvecs[0])[2] == (
            (0,) * self.ring.nvars
        )


class Ideal:
    """Homogeneous ideal given by generators, with cached Groebner data."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero)
        self._gb = None

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens over {self.ring!r})"

    def gb(self):
        if self._gb is None:
            kr = self.ring.kring()
            vecs = [_to_kvec(kr, g) for g in self.gens]
            wd = lambda comp, exps: self.ring.wdeg(exps)
            self._gb = GroebnerBasis(self.ring, buchberger(kr, vecs, wd, rank1=True))
        return self._gb

    def groebner_polys(self):
        return self.gb().polys

    def normal_form(self, f):
        return self.gb().normal_form(f)

    def contains(self, f):
        return self.gb().contains(f)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or self.ring != other.ring:
            return False
        return self.gb().kvecs == other.gb().kvecs

    def __hash__(self):
        return hash((self.ring.p, len(self.gens)))

    def canonical(self):
        """The same ideal, regenerated by its reduced Groebner basis."""
        out = Ideal(self.ring, tuple(self.gb().polys))
        out._gb = self._gb
        return out

    def __add__(self, other):
        return Ideal(self.ring, self.gens + other.gens)

    def multiply(self, other):
        gens = [a * b for a in self.gens for b in other.gens]
        return Ideal(self.ring, gens)

    def square(self):
        gens = []
        for i, a in enumerate(self.gens):
            for b in self.gens[i:]:
                gens.append(a * b)
        return Ideal(self.ring, gens)

    @property
    def is_unit(self):
        return self.gb().is_unit

    @property
    def is_zero(self):
        return not self.gens

    # -- graded pieces -----------------------------------------------------

    def graded_piece_dim(self, d):
        """dim_k I_d, counted from the lead term ideal."""
        leads = self.gb().lead_exps()
        count = 0
        for m in self.ring.monomials(d):
            if any(_divides(l, m) for l in leads):
                count += 1
        return count

    def quotient_piece_dim(self, d):
        return self.ring.dim_of_degree(d) - self.graded_piece_dim(d)

    def standard_monomials(self, d):
        leads = self.gb().lead_exps()
        return [
            m
            for m in self.ring.monomials(d)
            if not any(_divides(l, m) for l in leads)
        ]

    def graded_piece(self, d):
        """Canonical (echelonized) basis of I_d as polynomials."""
        ring = self.ring
        ms = ring.monomials(d)
        index = {m: i for i, m in enumerate(ms)}
        span = RowSpan(len(ms), ring.p)
        batch = []
        for g in self.gb().polys:
            dg = g.degree
            if dg > d:
                continue
            for mu in ring.monomials(d - dg):
                vec = [0] * len(ms)
                for c, e in g.terms:
                    key = tuple(a + b for a, b in zip(e, mu))
                    vec[index[key]] = c
                batch.append(vec)
        span.add_batch(batch)
        out = []
        for row in span.rows:
            terms = [(int(c), ms[i]) for i, c in enumerate(row) if c]
            out.append(ring.from_terms(terms))
        return out

    def mingens(self):
        """Minimal homogeneous generators (canonical choice from the input)."""
        ring = self.ring
        by_deg = {}
        for g in self.gens:
            by_deg.setdefault(g.degree, []).append(g)
        kept = []
        lower = Ideal(ring, ())
        for d in sorted(by_deg):
            ms = ring.monomials(d)
            index = {m: i for i, m in enumerate(ms)}
            span = RowSpan(len(ms), ring.p)
            batch = []
            for g in kept:
                dg = g.degree
                for mu in ring.monomials(d - dg):
                    vec = [0] * len(ms)
                    for c, e in g.terms:
                        vec[index[tuple(a + b for a, b in zip(e, mu))]] = c
                    batch.append(vec)
            span.add_batch(batch)
            for g in by_deg[d]:
                vec = [0] * len(ms)
                for c, e in g.terms:
                    vec[index[e]] = c
                if span.add(vec):
                    kept.append(g)
        return kept


# ---------------------------------------------------------------------------
# Syzygies


def _column_to_kvec(kr, column, base):
    items = []
    for i, f in enumerate(column):
        for c, e in f.terms:
            items.append((c, base + i, e))
    return kr.vec(items)


def syzygy_matrix(m, minimalize=False):
    """Generators of ker(m) as a graded matrix into m's source module."""
    ring = m.ring
    t = m.nrows
    s = m.ncols
    kr = ring.kring(boundary=t)
    graph_twists = m.target.twists + m.source.twists

    def wd(comp, exps):
        return ring.wdeg(exps) + graph_twists[comp]

    vecs = []
    for j in range(s):
        items = []
        for i, f in enumerate(m.column(j)):
            for c, e in f.terms:
                items.append((c, i, e))
        items.append((1, t + j, (0,) * ring.nvars))
        vecs.append(kr.vec(items))

    gb = buchberger(kr, vecs, wd)

    columns = []
    for v in gb:
        _, comp, _ = kr.lead(v)
        if comp < t:
            continue
        col = [[] for _ in range(s)]
        for c, cc, e in kr.terms(v):
            if cc < t:
                raise AssertionError("kernel element has nonzero image part")
            col[cc - t].append((c, e))
        columns.append([ring.from_terms(ts) for ts in col])

    if not columns:
        src = GradedFreeModule(ring, ())
        return GradedMatrix(m.source, src, [[] for _ in range(s)], check=False)

    def column_twist(col):
        for j, f in enumerate(col):
            if not f.is_zero:
                return m.source.twists[j] + f.degree
        return 0

    columns.sort(key=lambda col: (column_twist(col), _column_sort_key(ring, col)))
    src = GradedFreeModule(ring, [column_twist(c) for c in columns])
    entries = [[columns[j][i] for j in range(len(columns))] for i in range(s)]
    out = GradedMatrix(m.source, src, entries, check=False)
    if minimalize:
        out = module_mingens(out)
    return out


def _column_sort_key(ring, col):
    key = []
    for j, f in enumerate(col):
        if not f.is_zero:
            key.append((j,) + f.lead_exps())
    return tuple(key)


def module_groebner(m):
    """Groebner basis (kernel vectors) of the column span of a graded matrix."""
    ring = m.ring
    kr = ring.kring()

    def wd(comp, exps):
        return ring.wdeg(exps) + m.target.twists[comp]

    vecs = []
    for j in range(m.ncols):
        items = []
        for i, f in enumerate(m.column(j)):
            for c, e in f.terms:
                items.append((c, i, e))
        vecs.append(kr.vec(items))
    return kr, buchberger(kr, vecs, wd)


def module_graded_span(m, d, kept=None):
    """RowSpan of the degree-d piece of the column span of m."""
    ring = m.ring
    tgt = m.target.twists
    bases = [ring.monomials(d - t) for t in tgt]
    offsets = [0]
    for b in bases:
        offsets.append(offsets[-1] + len(b))
    width = offsets[-1]
    index = [
        {mono: offsets[i] + k for k, mono in enumerate(bases[i])}
        for i in range(len(tgt))
    ]
    span = RowSpan(width, ring.p)
    cols = range(m.ncols) if kept is None else kept
    batch = []
    for j in cols:
        tw = m.source.twists[j]
        if d < tw:
            continue
        col = m.column(j)
        for mu in ring.monomials(d - tw):
            vec = [0] * width
            for i, f in enumerate(col):
                idx = index[i]
                for c, e in f.terms:
                    vec[idx[tuple(a + b for a, b in zip(e, mu))]] = c
            batch.append(vec)
    span.add_batch(batch)
    return span, index, width


def module_mingens(m):
    """Drop columns lying in the span of the others (degree by degree)."""
    ring = m.ring
    order = sorted(range(m.ncols), key=lambda j: m.source.twists[j])
    kept = []
    by_deg = {}
    for j in order:
        by_deg.setdefault(m.source.twists[j], []).append(j)
    for d in sorted(by_deg):
        span, index, width = module_graded_span(m, d, kept=kept)
        for j in by_deg[d]:
            col = m.column(j)
            vec = [0] * width
            for i, f in enumerate(col):
                idx = index[i]
                for c, e in f.terms:
                    vec[idx[e]] = c
            if span.add(vec):
                kept.append(j)
    kept.sort()
    src = GradedFreeModule(ring, [m.source.twists[j] for j in kept])
    entries = [[m.entries[i][j] for j in kept] for i in range(m.nrows)]
    return GradedMatrix(m.target, src, entries, check=False)


# ---------------------------------------------------------------------------
# Ideal operations


def ideal_quotient(i, j):
    """(i : j); j may be a polynomial or an ideal."""
    ring = i.ring
    if isinstance(j, Polynomial):
        fs = [j]
    else:
        fs = [f for f in j.gens if not f.is_zero]
    if not fs:
        raise ValueError("colon by the zero ideal")
    if not i.gens:
        return Ideal(ring, ())
    m = len(fs)
    tgt = GradedFreeModule(ring, [-f.degree for f in fs])
    cols = [list(fs)]
    for idx in range(m):
        for g in i.gens:
            col = [ring.zero] * m
            col[idx] = g
            cols.append(col)
    src_twists = [0]
    for idx in range(m):
        for g in i.gens:
            src_twists.append(g.degree - fs[idx].degree)
    src = GradedFreeModule(ring, src_twists)
    entries = [[cols[c][r] for c in range(len(cols))] for r in range(m)]
    mat = GradedMatrix(tgt, src, entries, check=False)
    syz = syzygy_matrix(mat)
    out = [syz.entry(0, c) for c in range(syz.ncols)]
    out = [f for f in out if not f.is_zero]
    return Ideal(ring, tuple(out)).canonical()


def intersect(i, j):
    """i ∩ j via an auxiliary variable: eliminate t from t*i + (1-t)*j."""
    ring = i.ring
    n = ring.nvars
    tname = "t_"
    while tname in ring.names:
        tname += "_"
    big = Ring(
        ring.field,
        n + 1,
        names=(tname,) + ring.names,
        weights=(0,) + ring.weights,
        elim=1,
    )
    t = big.variable(0)
    xs = [big.variable(k + 1) for k in range(n)]
    gens = []
    for f in i.gens:
        gens.append(t * f.substitute(big, xs))
    one_minus_t = big.one - t
    for f in j.gens:
        gens.append(one_minus_t * f.substitute(big, xs))
    elim = Ideal(big, gens)
    kept = [g for g in elim.groebner_polys() if all(e[0] == 0 for _, e in g.terms)]
    back = [ring.zero] + ring.variables
    return Ideal(ring, tuple(g.substitute(ring, back) for g in kept)).canonical()


def eliminate(i, k):
    """Remove the first k variables; result lives in the smaller ring."""
    ring = i.ring
    if ring.elim == k:
        elim_ring = ring
        gens = i.gens
    else:
        elim_ring = Ring(ring.field, ring.nvars, ring.names, ring.weights, elim=k)
        gens = [elim_ring.from_terms(g.terms) for g in i.gens]
    ideal = Ideal(elim_ring, gens)
    small = Ring(
        ring.field, ring.nvars - k, ring.names[k:], ring.weights[k:], elim=0
    )
    kept = []
    for g in ideal.groebner_polys():
        if all(all(x == 0 for x in e[:k]) for _, e in g.terms):
            kept.append(small.from_terms([(c, e[k:]) for c, e in g.terms]))
    return Ideal(small, tuple(kept)).canonical()


def random_linear_change(ring, rng):
    """Invertible linear substitution; returns (images, inverse images)."""
    n = ring.nvars
    p = ring.p
    while True:
        a = np.array(
            [[rng.field_element(p) for _ in range(n)] for _ in range(n)],
            dtype=np.int64,
        )
        r, piv = rref(a, p)
        if len(piv) == n:
            break
    # invert by reducing [a | id]
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    r, piv = rref(aug, p)
    inv = r[:, n:]
    xs = ring.variables
    images = [
        sum((int(a[i][j]) * xs[j] for j in range(n)), ring.zero) for i in range(n)
    ]
    inverses = [
        sum((int(inv[i][j]) * xs[j] for j in range(n)), ring.zero) for i in range(n)
    ]
    return images, inverses


def _divide_out_last_variable(ideal):
    """(I : x_last^inf) read off a grevlex basis by cancelling x_last powers."""
    ring = ideal.ring
    n = ring.nvars
    out = []
    for g in ideal.groebner_polys():
        k = min(e[n - 1] for _, e in g.terms)
        if k == 0:
            out.append(g)
        else:
            out.append(
                ring.from_terms(
                    [(c, e[: n - 1] + (e[n - 1] - k,)) for c, e in g.terms]
                )
            )
    return Ideal(ring, tuple(out)).canonical()


def saturate(ideal, j=None, rng=None):
    """Saturation of a homogeneous ideal.

    With j=None saturates by the irrelevant maximal ideal: a random linear
    change puts the last coordinate in general position, a grevlex basis
    divides out its powers, and a verifying colon certifies the result.
    Otherwise iterates (I : j) until stable.
    """
    ring = ideal.ring
    if j is None:
        if any(w != 1 for w in ring.weights) or ring.elim:
            raise ValueError("saturation needs a standard graded ring")
        if rng is None:
            rng = SeededRng(0).substream("saturate")
        m = Ideal(ring, tuple(ring.variables))
        current = ideal.canonical()
        for attempt in range(4):
            images, inverses = random_linear_change(ring, rng.substream(attempt))
            moved = Ideal(ring, tuple(g.substitute(ring, images) for g in current.gens))
            divided = _divide_out_last_variable(moved)
            check = ideal_quotient(divided, m)
            if check == divided:
                back = Ideal(
                    ring, tuple(g.substitute(ring, inverses) for g in divided.gens)
                )
                return back.canonical()
        j = m  # fall through to the always-correct iteration
    current = ideal.canonical()
    while True:
        nxt = ideal_quotient(current, j)
        if nxt == current:
            return current
        current = nxt


def ring_map_kernel(images, source_ring):
    """Kernel of source_ring -> R, y_j -> images[j], by elimination."""
    ring = images[0].ring
    n = ring.nvars
    m = len(images)
    if source_ring.nvars != m:
        raise ValueError("need one source variable per image")
    degs = [f.degree for f in images]
    big = Ring(
        ring.field,
        n + m,
        names=ring.names + source_ring.names,
        weights=ring.weights + tuple(degs),
        elim=n,
    )
    xs = [big.variable(i) for i in range(n)]
    gens = []
    for j, f in enumerate(images):
        gens.append(big.variable(n + j) - f.substitute(big, xs))
    graph = Ideal(big, gens)
    kept = []
    for g in graph.groebner_polys():
        if all(all(x == 0 for x in e[:n]) for _, e in g.terms):
            kept.append(source_ring.from_terms([(c, e[n:]) for c, e in g.terms]))
    return Ideal(source_ring, tuple(kept)).canonical()


def ring_map_kernel_linear(images, source_ring, modulo, bound):
    """Kernel of source_ring -> R/modulo, y_j -> images[j], by linear algebra.

    All images must share one degree.  The kernel's graded piece in each
    degree d <= bound is obtained as a nullspace of the evaluation map on
    degree-d source monomials; the caller must supply a `bound` at least the
    largest generating degree of the kernel (for curve ideals a regularity
    bound does it), and the minimal generators found are returned.
    """
    ring = images[0].ring
    gbm = modulo.gb()
    kr = ring.kring()
    p = ring.p
    w = images[0].degree
    if any(f.degree != w for f in images):
        raise ValueError("images must share one degree")

    # iterated spans: reduced images of the degree-d monomials of the source
    red = gbm.reducer
    img = {0: {(0,) * source_ring.nvars: _to_kvec(kr, ring.one)}}
    kimages = [_to_kvec(kr, f) for f in images]

    def image_vectors(d):
        if d in img:
            return img[d]
        prev = img[d - 1]
        out = {}
        for mono in source_ring.monomials(d):
            i = next(k for k, e in enumerate(mono) if e)
            lower = tuple(e - 1 if k == i else e for k, e in enumerate(mono))
            v = kr.mul(kimages[i], prev[lower])
            out[mono] = kr.normal_form(v, red)
        img[d] = out
        if d - 2 in img:
            del img[d - 2]
        return out

    candidates = []
    for d in range(1, bound + 1):
        vecs = image_vectors(d)
        monos = source_ring.monomials(d)
        std = modulo.standard_monomials(w * d)
        index = {m: i for i, m in enumerate(std)}
        rows = []
        for mono in monos:
            vec = [0] * len(std)
            for c, _, e in kr.terms(vecs[mono]):
                vec[index[e]] = c
            rows.append(vec)
        a = np.array(rows, dtype=np.int64).T
        for row in nullspace(a, p):
            terms = [(int(c), monos[i]) for i, c in enumerate(row) if c]
            candidates.append(source_ring.from_terms(terms))

    out = Ideal(source_ring, tuple(candidates))
    return Ideal(source_ring, tuple(out.mingens()))
