"""Graded polynomial rings over prime fields, polynomials, and graded matrices.

Conventions used throughout:

* A ring carries a tuple of integer variable weights (default all 1); degrees
  of polynomials are weighted degrees, while the term order always compares
  raw exponent sums (graded reverse lexicographic, optionally with an
  elimination block of leading variables).
* A graded free module F with twists (a_0, ..., a_{r-1}) stands for
  ⊕_j S(-a_j); a graded matrix with target T and source F has homogeneous
  entries of degree source.twists[j] - target.twists[i] in position (i, j).
"""

import itertools
import re

from . import _kernel
from .arith import PrimeField


class Ring:
    """F_p[x_0..x_{n-1}] with weights and an optional elimination block."""

    __slots__ = ("field", "nvars", "names", "weights", "elim", "_kring", "_mono_cache")

    def __init__(self, field, nvars, names=None, weights=None, elim=0):
        if isinstance(field, int):
            field = PrimeField(field)
        self.field = field
        self.nvars = nvars
        if names is None:
            names = tuple(f"x{i}" for i in range(nvars))
        else:
            names = tuple(names)
        if len(names) != nvars or len(set(names)) != nvars:
            raise ValueError("need distinct names, one per variable")
        self.names = names
        if weights is None:
            weights = (1,) * nvars
        else:
            weights = tuple(int(w) for w in weights)
        if len(weights) != nvars:
            raise ValueError("need one weight per variable")
        self.weights = weights
        self.elim = elim
        self._kring = _kernel.KRing(field.p, nvars, elim=elim)
        self._mono_cache = {}

    @property
    def p(self):
        return self.field.p

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.p == other.p
            and self.nvars == other.nvars
            and self.names == other.names
            and self.weights == other.weights
            and self.elim == other.elim
        )

    def __hash__(self):
        return hash((self.p, self.names, self.weights, self.elim))

    def __repr__(self):
        return f"Ring(p={self.p}, vars={','.join(self.names)})"

    def kring(self, boundary=None):
        if boundary is None:
            return self._kring
        return _kernel.KRing(self.p, self.nvars, elim=self.elim, boundary=boundary)

    def key_of(self, exps):
        return self._kring.key(0, exps)

    def wdeg(self, exps):
        return sum(w * e for w, e in zip(self.weights, exps))

    # -- element construction -------------------------------------------------

    @property
    def zero(self):
        return Polynomial(self, ())

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.reduce(c)
        if c == 0:
            return Polynomial(self, ())
        return Polynomial(self, ((c, (0,) * self.nvars),))

    def variable(self, i):
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((1, exps),))

    @property
    def variables(self):
        return [self.variable(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1):
        c = self.field.reduce(coeff)
        if c == 0:
            return self.zero
        return Polynomial(self, ((c, tuple(exps)),))

    def from_terms(self, pairs):
        """Polynomial from (coeff, exps) pairs: deduplicates, sorts, reduces."""
        acc = {}
        for c, e in pairs:
            e = tuple(e)
            acc[e] = (acc.get(e, 0) + c) % self.p
        terms = [(c, e) for e, c in acc.items() if c]
        terms.sort(key=lambda t: self.key_of(t[1]), reverse=True)
        return Polynomial(self, tuple(terms))

    # -- monomial enumeration --------------------------------------------------

    def monomials(self, d):
        """Exponent tuples of weighted degree d, descending in the term order."""
        if d in self._mono_cache:
            return self._mono_cache[d]
        if any(w <= 0 for w in self.weights):
            raise ValueError("monomial enumeration needs positive weights")
        out = []
        exps = [0] * self.nvars

        def rec(i, rem):
            if i == self.nvars - 1:
                w = self.weights[i]
                if rem % w == 0:
                    exps[i] = rem // w
                    out.append(tuple(exps))
                    exps[i] = 0
                return
            w = self.weights[i]
            for e in range(rem // w, -1, -1):
                exps[i] = e
                rec(i + 1, rem - w * e)
            exps[i] = 0

        if d >= 0:
            rec(0, d)
        out.sort(key=self.key_of, reverse=True)
        out = tuple(out)
        self._mono_cache[d] = out
        return out

    def dim_of_degree(self, d):
        return len(self.monomials(d))

    def random_form(self, d, rng):
        """Homogeneous form of degree d with uniformly random coefficients."""
        ms = self.monomials(d)
        coeffs = rng.field_elements(len(ms), self.p)
        terms = tuple((c, e) for c, e in zip(coeffs, ms) if c)
        return Polynomial(self, terms)

    # -- parsing ---------------------------------------------------------------

    def parse(self, text):
        return _parse(self, text)


class Polynomial:
    """Immutable polynomial: terms sorted descending in the ring's term order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic structure -------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self):
        """Weighted degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.wdeg(e) for _, e in self.terms)

    @property
    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {self.ring.wdeg(e) for _, e in self.terms}
        return len(degs) == 1

    def lead_term(self):
        return self.terms[0]

    def lead_coeff(self):
        return self.terms[0][0]

    def lead_exps(self):
        return self.terms[0][1]

    def coeff_of(self, exps):
        exps = tuple(exps)
        for c, e in self.terms:
            if e == exps:
                return c
        return 0

    def graded_parts(self):
        parts = {}
        for c, e in self.terms:
            parts.setdefault(self.ring.wdeg(e), []).append((c, e))
        return {
            d: Polynomial(self.ring, tuple(ts)) for d, ts in sorted(parts.items())
        }

    def homogeneous_part(self, d):
        ts = tuple((c, e) for c, e in self.terms if self.ring.wdeg(e) == d)
        return Polynomial(self.ring, ts)

    # -- arithmetic --------------------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check_ring(other)
        return self.ring.from_terms(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, tuple((p - c, e) for c, e in self.terms))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if c == 0:
                return self.ring.zero
            return Polynomial(
                self.ring, tuple((a * c % self.ring.p, e) for a, e in self.terms)
            )
        self._check_ring(other)
        kr = self.ring.kring()
        u = kr.vec((c, 0, e) for c, e in self.terms)
        v = kr.vec((c, 0, e) for c, e in other.terms)
        return Polynomial(
            self.ring, tuple((c, e) for c, _, e in kr.terms(kr.mul(u, v)))
        )

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.p, self.terms))

    # -- maps ---------------------------------------------------------------------

    def evaluate(self, point):
        """Value at a point (sequence of integers), in [0, p)."""
        p = self.ring.p
        point = [x % p for x in point]
        total = 0
        for c, e in self.terms:
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * pow(x, k, p) % p
            total = (total + v) % p
        return total

    def substitute(self, target_ring, images):
        """Apply x_i -> images[i]; images are polynomials of target_ring or ints."""
        imgs = []
        for g in images:
            if isinstance(g, int):
                g = target_ring.constant(g)
            imgs.append(g)
        pows = [{0: target_ring.one} for _ in imgs]

        def power(i, k):
            cache = pows[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * imgs[i]
            return cache[k]

        out = target_ring.zero
        for c, e in self.terms:
            term = target_ring.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def derivative(self, i):
        p = self.ring.p
        terms = []
        for c, e in self.terms:
            if e[i] == 0:
                continue
            nc = c * e[i] % p
            if nc == 0:
                continue
            ne = tuple(x - 1 if j == i else x for j, x in enumerate(e))
            terms.append((nc, ne))
        return self.ring.from_terms(terms)

    def coefficients_on(self, monomials):
        table = {e: c for c, e in self.terms}
        return [table.get(tuple(m), 0) for m in monomials]

    # -- printing ------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        chunks = []
        for c, e in self.terms:
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            if not factors:
                chunks.append(str(c))
            elif c == 1:
                chunks.append("*".join(factors))
            else:
                chunks.append(f"{c}*" + "*".join(factors))
        return " + ".join(chunks)

    def __repr__(self):
        return f"<{self}>"


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|\^|\*|\+|-|\(|\))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text[pos:pos + 12]!r}")
        out.append(m.group(1))
        pos = m.end()
    out.append("$")
    return out


def _parse(ring, text):
    toks = _tokenize(text)
    idx = [0]

    def peek():
        return toks[idx[0]]

    def take():
        t = toks[idx[0]]
        idx[0] += 1
        return t

    var_index = {name: i for i, name in enumerate(ring.names)}

    def parse_base():
        t = take()
        if t == "(":
            f = parse_expr()
            if take() != ")":
                raise ValueError("expected ')'")
            return f
        if t.isdigit():
            return ring.constant(int(t))
        if t in var_index:
            return ring.variable(var_index[t])
        raise ValueError(f"unknown token {t!r}")

    def parse_factor():
        f = parse_base()
        while peek() == "^":
            take()
            t = take()
            if not t.isdigit():
                raise ValueError("exponent must be an integer")
            f = f ** int(t)
        return f

    def parse_term():
        f = parse_factor()
        while peek() == "*":
            take()
            f = f * parse_factor()
        return f

    def parse_expr():
        sign = 1
        while peek() in ("+", "-"):
            if take() == "-":
                sign = -sign
        f = parse_term() * sign
        while peek() in ("+", "-"):
            sign = 1
            while peek() in ("+", "-"):
                if take() == "-":
                    sign = -sign
            f = f + parse_term() * sign
        return f

    f = parse_expr()
    if peek() != "$":
        raise ValueError(f"trailing input near {peek()!r}")
    return f


class GradedFreeModule:
    """Twisted free module ⊕_j S(-twists[j])."""

    __slots__ = ("ring", "twists")

    def __init__(self, ring, twists):
        self.ring = ring
        self.twists = tuple(int(t) for t in twists)

    @property
    def rank(self):
        return len(self.twists)

    def __eq__(self, other):
        return (
            isinstance(other, GradedFreeModule)
            and self.ring == other.ring
            and self.twists == other.twists
        )

    def __repr__(self):
        return f"GradedFreeModule{self.twists}"


class GradedMatrix:
    """Homogeneous matrix between graded free modules (entries row-major)."""

    __slots__ = ("target", "source", "entries")

    def __init__(self, target, source, entries, check=True):
        self.target = target
        self.source = source
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
            raise ValueError("entry grid does not match module ranks")
        if check:
            for i, row in enumerate(rows):
                for j, f in enumerate(row):
                    if f.is_zero:
                        continue
                    want = source.twists[j] - target.twists[i]
                    if not f.is_homogeneous or f.degree != want:
                        raise ValueError(
                            f"entry ({i},{j}) must be homogeneous of degree {want}"
                        )
        self.entries = rows

    @property
    def ring(self):
        return self.target.ring

    @property
    def nrows(self):
        return self.target.rank

    @property
    def ncols(self):
        return self.source.rank

    def entry(self, i, j):
        return self.entries[i][j]

    def row(self, i):
        return list(self.entries[i])

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    @property
    def is_zero(self):
        return all(f.is_zero for row in self.entries for f in row)

    def __eq__(self, other):
        return (
            isinstance(other, GradedMatrix)
            and self.target == other.target
            and self.source == other.source
            and self.entries == other.entries
        )

    def __mul__(self, other):
        if self.source != other.target:
            raise ValueError("matrix shapes/twists do not compose")
        ring = self.ring
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = ring.zero
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.is_zero or b.is_zero:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(self.target, other.source, out, check=False)

    def transpose(self):
        tgt = GradedFreeModule(self.ring, [-t for t in self.source.twists])
        src = GradedFreeModule(self.ring, [-t for t in self.target.twists])
        entries = [
            [self.entries[j][i] for j in range(self.nrows)] for i in range(self.ncols)
        ]
        return GradedMatrix(tgt, src, entries, check=False)

    def submatrix(self, rows, cols):
        tgt = GradedFreeModule(self.ring, [self.target.twists[i] for i in rows])
        src = GradedFreeModule(self.ring, [self.source.twists[j] for j in cols])
        entries = [[self.entries[i][j] for j in cols] for i in rows]
        return GradedMatrix(tgt, src, entries, check=False)

    def twist(self, d):
        """Shift both target and source twists by d (same map, new grading)."""
        tgt = GradedFreeModule(self.ring, [t + d for t in self.target.twists])
        src = GradedFreeModule(self.ring, [t + d for t in self.source.twists])
        return GradedMatrix(tgt, src, self.entries, check=False)

    def __repr__(self):
        return f"GradedMatrix({self.nrows}x{self.ncols})"


def matrix_of_columns(ring, columns, target_twists=None):
    """Graded matrix from polynomial columns; twists inferred when omitted."""
    ncols = len(columns)
    nrows = len(columns[0]) if ncols else 0
    if target_twists is None:
        target_twists = [0] * nrows
    tgt = GradedFreeModule(ring, target_twists)
    src_twists = []
    for col in columns:
        tws = {
            tgt.twists[i] + f.degree for i, f in enumerate(col) if not f.is_zero
        }
        if len(tws) > 1:
            raise ValueError("column is not homogeneous")
        src_twists.append(tws.pop() if tws else 0)
    src = GradedFreeModule(ring, src_twists)
    entries = [[columns[j][i] for j in range(ncols)] for i in range(nrows)]
    return GradedMatrix(tgt, src, entries)


def random_graded_matrix(target, source, rng):
    """Matrix with uniformly random homogeneous entries of the forced degrees."""
    ring = target.ring
    entries = []
    for i in range(target.rank):
        row = []
        for j in range(source.rank):
            d = source.twists[j] - target.twists[i]
            row.append(ring.random_form(d, rng) if d >= 0 else ring.zero)
        entries.append(row)
    return GradedMatrix(target, source, entries, check=False)


def jacobian(polys):
    """Matrix of partials: rows indexed by variables, columns by the forms."""
    ring = polys[0].ring
    tgt = GradedFreeModule(ring, [1] * ring.nvars)
    src = GradedFreeModule(ring, [f.degree for f in polys])
    entries = [[f.derivative(i) for f in polys] for i in range(ring.nvars)]
    return GradedMatrix(tgt, src, entries, check=False)


def _det(rows):
    """Determinant by cofactor expansion with memoization on column subsets."""
    ring = rows[0][0].ring
    n = len(rows)
    cache = {}

    def rec(r, cols):
        if r == n:
            return ring.one
        key = cols
        if key in cache:
            return cache[key]
        acc = ring.zero
        sign = 1
        for idx, c in enumerate(cols):
            f = rows[r][c]
            if not f.is_zero:
                sub = rec(r + 1, cols[:idx] + cols[idx + 1 :])
                term = f * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        cache[key] = acc
        return acc

    return rec(0, tuple(range(n)))


def determinant(m):
    if m.nrows != m.ncols:
        raise ValueError("determinant needs a square matrix")
    return _det([list(row) for row in m.entries])


def minors(k, m):
    """All k x k minors, rows and columns in lexicographic subset order."""
    out = []
    for rows in itertools.combinations(range(m.nrows), k):
        for cols in itertools.combinations(range(m.ncols), k):
            out.append(_det([[m.entries[i][j] for j in cols] for i in rows]))
    return out


def exterior_power(k, m):
    """Matrix of k x k minors indexed by lexicographic subsets of rows/cols."""
    ring = m.ring
    row_sets = list(itertools.combinations(range(m.nrows), k))
    col_sets = list(itertools.combinations(range(m.ncols), k))
    tgt = GradedFreeModule(ring, [sum(m.target.twists[i] for i in rs) for rs in row_sets])
    src = GradedFreeModule(ring, [sum(m.source.twists[j] for j in cs) for cs in col_sets])
    entries = [
        [_det([[m.entries[i][j] for j in cs] for i in rs]) for cs in col_sets]
        for rs in row_sets
    ]
    return GradedMatrix(tgt, src, entries, check=False)


def _pfaffian(rows, idx):
    if len(idx) == 0:
        raise ValueError("empty pfaffian")
    if len(idx) == 2:
        return rows[idx[0]][idx[1]]
    ring = rows[0][1].ring if len(rows) > 1 else rows[0][0].ring
    first = idx[0]
    rest = idx[1:]
    acc = ring.zero
    sign = 1
    for pos, j in enumerate(rest):
        f = rows[first][j]
        if not f.is_zero:
            sub = rest[:pos] + rest[pos + 1 :]
            term = f * _pfaffian(rows, sub)
            acc = acc + (term if sign > 0 else -term)
        sign = -sign
    return acc


def pfaffians(k, m):
    """Pfaffians of the principal k x k submatrices of a skew matrix."""
    if k % 2:
        raise ValueError("pfaffians need even size")
    if m.nrows != m.ncols:
        raise ValueError("pfaffians need a square matrix")
    ring = m.ring
    for i in range(m.nrows):
        if not m.entries[i][i].is_zero:
            raise ValueError("matrix is not alternating")
        for j in range(i):
            if m.entries[i][j] != -m.entries[j][i]:
                raise ValueError("matrix is not skew-symmetric")
    rows = [list(row) for row in m.entries]
    return [
        _pfaffian(rows, idx) for idx in itertools.combinations(range(m.nrows), k)
    ]
