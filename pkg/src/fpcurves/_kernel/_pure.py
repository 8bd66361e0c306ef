"""Pure-Python term-order kernel.

A vector is an element of a free module over F_p[x_0..x_{n-1}], stored as a
list of (key, coeff) pairs sorted descending by key.  Keys are tuples built so
that plain tuple comparison realizes the term order:

  grevlex (elim == 0):
      (block, deg, -e[n-1], ..., -e[0], -comp)
  eliminating the first k variables (elim == k):
      (block, deg1, -e[k-1], ..., -e[0], deg2, -e[n-1], ..., -e[k], -comp)

block is 1 when the component lies below `boundary` (dominant components sort
first), degrees are raw exponent sums over the corresponding variable block,
the negated exponents scanned right-to-left give the reverse-lexicographic
tie-break, and the negated component makes lower components sort larger.

Coefficients are kept in [1, p); zero terms are never stored.
"""


class KRing:
    __slots__ = ("p", "nvars", "elim", "boundary")

    def __init__(self, p, nvars, elim=0, boundary=None):
        if elim < 0 or elim > nvars:
            raise ValueError("elimination block out of range")
        self.p = p
        self.nvars = nvars
        self.elim = elim
        self.boundary = -1 if boundary is None else boundary

    # -- keys ---------------------------------------------------------------

    def key(self, comp, exps):
        block = 1 if comp < self.boundary else 0
        k = self.elim
        if k == 0:
            return (block, sum(exps)) + tuple(-e for e in reversed(exps)) + (-comp,)
        head = exps[:k]
        tail = exps[k:]
        return (
            (block, sum(head))
            + tuple(-e for e in reversed(head))
            + (sum(tail),)
            + tuple(-e for e in reversed(tail))
            + (-comp,)
        )

    def decode(self, key):
        n = self.nvars
        k = self.elim
        comp = -key[-1]
        if k == 0:
            exps = tuple(-key[2 + n - 1 - i] for i in range(n))
        else:
            head = tuple(-key[2 + k - 1 - i] for i in range(k))
            base = 3 + k
            tail = tuple(-key[base + (n - k) - 1 - i] for i in range(n - k))
            exps = head + tail
        return comp, exps

    # -- construction -------------------------------------------------------

    def vec(self, items):
        p = self.p
        acc = {}
        for coeff, comp, exps in items:
            c = coeff % p
            if c == 0:
                continue
            k = self.key(comp, exps)
            c = (acc.get(k, 0) + c) % p
            if c:
                acc[k] = c
            elif k in acc:
                del acc[k]
        out = sorted(acc.items(), reverse=True)
        return out

    def zero(self):
        return []

    # -- inspection ----------------------------------------------------------

    def terms(self, v):
        return [(c, *self.decode(k)) for k, c in v]

    def nterms(self, v):
        return len(v)

    def is_zero(self, v):
        return not v

    def lead(self, v):
        k, c = v[0]
        comp, exps = self.decode(k)
        return c, comp, exps

    def lead_key(self, v):
        return v[0][0]

    def coeff_of(self, v, comp, exps):
        k = self.key(comp, exps)
        lo, hi = 0, len(v)
        while lo < hi:
            mid = (lo + hi) // 2
            if v[mid][0] > k:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(v) and v[lo][0] == k:
            return v[lo][1]
        return 0

    # -- arithmetic ----------------------------------------------------------

    def scale(self, c, v):
        c %= self.p
        if c == 0:
            return []
        if c == 1:
            return list(v)
        p = self.p
        return [(k, co * c % p) for k, co in v]

    def monic(self, v):
        if not v:
            return []
        return self.scale(pow(v[0][1], self.p - 2, self.p), v)

    def neg(self, v):
        p = self.p
        return [(k, p - co) for k, co in v]

    def _merge(self, a, ai, b, bi, bsign):
        """a[ai:] + bsign*b[bi:], both descending; returns a new list."""
        p = self.p
        out = []
        la, lb = len(a), len(b)
        while ai < la and bi < lb:
            ka, ca = a[ai]
            kb, cb = b[bi]
            if ka > kb:
                out.append(a[ai])
                ai += 1
            elif ka < kb:
                out.append((kb, cb * bsign % p))
                bi += 1
            else:
                c = (ca + cb * bsign) % p
                if c:
                    out.append((ka, c))
                ai += 1
                bi += 1
        if ai < la:
            out.extend(a[ai:])
        while bi < lb:
            kb, cb = b[bi]
            out.append((kb, cb * bsign % p))
            bi += 1
        return out

    def add(self, u, v):
        return self._merge(u, 0, v, 0, 1)

    def sub(self, u, v):
        return self._merge(u, 0, v, 0, -1)

    def mul_term(self, v, c, exps):
        """v * c*x^exps; multiplying by a monomial preserves term order."""
        p = self.p
        c %= p
        if c == 0 or not v:
            return []
        out = []
        key = self.key
        decode = self.decode
        for k, co in v:
            comp, e = decode(k)
            ne = tuple(a + b for a, b in zip(e, exps))
            out.append((key(comp, ne), co * c % p))
        return out

    def mul(self, u, v):
        """Product of a rank-1 vector u (all components 0) with v."""
        p = self.p
        acc = {}
        key = self.key
        decode = self.decode
        ud = [(c, decode(k)[1]) for k, c in u]
        for kv, cv in v:
            comp, ev = decode(kv)
            for cu, eu in ud:
                ne = tuple(a + b for a, b in zip(eu, ev))
                k = key(comp, ne)
                c = (acc.get(k, 0) + cu * cv) % p
                if c:
                    acc[k] = c
                elif k in acc:
                    del acc[k]
        return sorted(acc.items(), reverse=True)

    def spoly(self, u, v):
        cu, compu, eu = self.lead(u)
        cv, compv, ev = self.lead(v)
        if compu != compv:
            raise ValueError("s-vector needs matching lead components")
        lcm = tuple(max(a, b) for a, b in zip(eu, ev))
        p = self.p
        a = self.mul_term(u, pow(cu, p - 2, p), tuple(l - e for l, e in zip(lcm, eu)))
        b = self.mul_term(v, pow(cv, p - 2, p), tuple(l - e for l, e in zip(lcm, ev)))
        return self._merge(a, 1, b, 1, -1)

    # -- reduction -----------------------------------------------------------

    def reducer(self):
        return KReducer(self)

    def normal_form(self, v, red, tail=True):
        out = []
        work = list(v)
        i = 0
        find = red.find
        decode = self.decode
        while i < len(work):
            k, c = work[i]
            comp, exps = decode(k)
            hit = find(comp, exps)
            if hit is None:
                if not tail:
                    return out + work[i:]
                out.append(work[i])
                i += 1
                continue
            gexps, g = hit
            delta = tuple(a - b for a, b in zip(exps, gexps))
            prod = self.mul_term(g, c, delta)
            work = self._merge(work, i + 1, prod, 1, -1)
            i = 0
        return out


class KReducer:
    """Growable set of monic vectors searched by lead-term divisibility."""

    __slots__ = ("ring", "vecs", "_by_comp")

    def __init__(self, ring):
        self.ring = ring
        self.vecs = []
        self._by_comp = {}

    def __len__(self):
        return len(self.vecs)

    def add(self, v):
        ring = self.ring
        v = ring.monic(v)
        if not v:
            raise ValueError("cannot reduce by zero")
        _, comp, exps = ring.lead(v)
        self.vecs.append(v)
        self._by_comp.setdefault(comp, []).append((sum(exps), exps, v))

    def find(self, comp, exps):
        """A stored vector whose lead divides x^exps*e_comp, or None."""
        bucket = self._by_comp.get(comp)
        if bucket is None:
            return None
        d = sum(exps)
        for gd, ge, g in bucket:
            if gd <= d:
                for a, b in zip(ge, exps):
                    if a > b:
                        break
                else:
                    return ge, g
        return None
