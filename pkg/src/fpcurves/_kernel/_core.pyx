# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled term-order kernel.

Semantics mirror the pure-Python backend exactly; only the representation
differs.  A vector stores its terms in two C arrays: a row of ``width`` ints
per term holding the same entries the pure backend puts in its key tuple
(so lexicographic comparison of rows realizes the term order), plus a
coefficient in [1, p).  Rows are kept descending, zero terms never stored.

Key layout (one row per term):

  grevlex (elim == 0), width = nvars + 3:
      (block, deg, -e[n-1], ..., -e[0], -comp)
  eliminating the first k variables (elim == k), width = nvars + 4:
      (block, deg1, -e[k-1], ..., -e[0], deg2, -e[n-1], ..., -e[k], -comp)
"""

from cpython.object cimport Py_EQ, Py_NE
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcmp, memcpy

ctypedef long long i64


cdef inline i64 _modpow(i64 base, i64 exp, i64 mod):
    cdef i64 r = 1
    base %= mod
    while exp > 0:
        if exp & 1:
            r = r * base % mod
        base = base * base % mod
        exp >>= 1
    return r


cdef inline int _cmp_row(const int* a, const int* b, int w) noexcept:
    cdef int i
    for i in range(w):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


cdef class KVec:
    """Opaque vector handle; only KRing methods look inside."""

    cdef int* keys          # n rows of width ints
    cdef i64* coeffs        # n coefficients in [1, p)
    cdef Py_ssize_t n
    cdef int width

    def __cinit__(self):
        self.keys = NULL
        self.coeffs = NULL
        self.n = 0
        self.width = 0

    def __dealloc__(self):
        if self.keys != NULL:
            free(self.keys)
        if self.coeffs != NULL:
            free(self.coeffs)

    def __richcmp__(x, y, int op):
        # Same value semantics as the pure backend's term lists: equal when
        # the terms agree, unordered and unhashable otherwise.
        if op != Py_EQ and op != Py_NE:
            return NotImplemented
        if not (isinstance(x, KVec) and isinstance(y, KVec)):
            return NotImplemented
        cdef KVec a = <KVec> x
        cdef KVec b = <KVec> y
        cdef bint eq
        if a.n != b.n:
            eq = False
        elif a.n == 0:
            eq = True
        elif a.width != b.width:
            eq = False
        else:
            eq = (memcmp(a.keys, b.keys, a.n * a.width * sizeof(int)) == 0
                  and memcmp(a.coeffs, b.coeffs, a.n * sizeof(i64)) == 0)
        return eq if op == Py_EQ else not eq

    def __hash__(self):
        raise TypeError("unhashable type: 'KVec'")


cdef KVec _new_vec(int width, Py_ssize_t cap):
    cdef KVec v = KVec.__new__(KVec)
    v.width = width
    v.n = 0
    if cap > 0:
        v.keys = <int*> malloc(cap * width * sizeof(int))
        v.coeffs = <i64*> malloc(cap * sizeof(i64))
        if v.keys == NULL or v.coeffs == NULL:
            raise MemoryError()
    return v


cdef void _merge_runs(int* keys, int w, Py_ssize_t* idx, Py_ssize_t* tmp,
                      Py_ssize_t lo, Py_ssize_t mid, Py_ssize_t hi) noexcept:
    cdef Py_ssize_t i = lo, j = mid, k = lo
    while i < mid and j < hi:
        if _cmp_row(keys + idx[i] * w, keys + idx[j] * w, w) >= 0:
            tmp[k] = idx[i]
            i += 1
        else:
            tmp[k] = idx[j]
            j += 1
        k += 1
    while i < mid:
        tmp[k] = idx[i]
        i += 1
        k += 1
    while j < hi:
        tmp[k] = idx[j]
        j += 1
        k += 1
    for i in range(lo, hi):
        idx[i] = tmp[i]


cdef KVec _sort_combine(KVec raw, i64 p):
    """Sort raw's rows descending and sum coefficients of equal rows mod p."""
    cdef Py_ssize_t n = raw.n
    cdef int w = raw.width
    cdef KVec out = _new_vec(w, n)
    if n == 0:
        return out
    cdef Py_ssize_t* idx = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* tmp = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if idx == NULL or tmp == NULL:
        if idx != NULL:
            free(idx)
        if tmp != NULL:
            free(tmp)
        raise MemoryError()
    cdef Py_ssize_t i, j, run, lo, mid, hi
    for i in range(n):
        idx[i] = i
    run = 1
    while run < n:
        lo = 0
        while lo + run < n:
            mid = lo + run
            hi = lo + 2 * run
            if hi > n:
                hi = n
            _merge_runs(raw.keys, w, idx, tmp, lo, mid, hi)
            lo += 2 * run
        run *= 2
    cdef int* row
    cdef i64 acc
    i = 0
    while i < n:
        row = raw.keys + idx[i] * w
        acc = raw.coeffs[idx[i]] % p
        j = i + 1
        while j < n and _cmp_row(row, raw.keys + idx[j] * w, w) == 0:
            acc = (acc + raw.coeffs[idx[j]]) % p
            j += 1
        if acc != 0:
            memcpy(out.keys + out.n * w, row, w * sizeof(int))
            out.coeffs[out.n] = acc
            out.n += 1
        i = j
    free(idx)
    free(tmp)
    return out


cdef class _Entry:
    """One reducer member: total lead degree, positive lead exponents, vector."""

    cdef long gd
    cdef int* ge
    cdef KVec g

    def __cinit__(self):
        self.ge = NULL

    def __dealloc__(self):
        if self.ge != NULL:
            free(self.ge)


cdef class KRing:
    cdef readonly long long p
    cdef readonly int nvars
    cdef readonly int elim
    cdef readonly long boundary
    cdef int width

    def __init__(self, p, nvars, elim=0, boundary=None):
        if elim < 0 or elim > nvars:
            raise ValueError("elimination block out of range")
        self.p = p
        self.nvars = nvars
        self.elim = elim
        self.boundary = -1 if boundary is None else boundary
        self.width = nvars + 3 if elim == 0 else nvars + 4

    # -- row helpers ----------------------------------------------------------

    cdef int _encode(self, int* row, long comp, object exps) except -1:
        cdef int n = self.nvars, k = self.elim, i
        cdef long d1 = 0, d2 = 0, e
        row[0] = 1 if comp < self.boundary else 0
        if k == 0:
            for i in range(n):
                e = exps[i]
                d1 += e
                row[2 + n - 1 - i] = <int> (-e)
            row[1] = <int> d1
            row[n + 2] = <int> (-comp)
        else:
            for i in range(k):
                e = exps[i]
                d1 += e
                row[2 + k - 1 - i] = <int> (-e)
            for i in range(k, n):
                e = exps[i]
                d2 += e
                row[k + 3 + n - 1 - i] = <int> (-e)
            row[1] = <int> d1
            row[k + 2] = <int> d2
            row[n + 3] = <int> (-comp)
        return 0

    cdef inline long _row_comp(self, const int* row) noexcept:
        return -row[self.width - 1]

    cdef inline long _row_deg(self, const int* row) noexcept:
        if self.elim == 0:
            return row[1]
        return row[1] + row[self.elim + 2]

    cdef void _row_exps(self, const int* row, int* out) noexcept:
        cdef int n = self.nvars, k = self.elim, i
        if k == 0:
            for i in range(n):
                out[i] = -row[2 + n - 1 - i]
        else:
            for i in range(k):
                out[i] = -row[2 + k - 1 - i]
            for i in range(k, n):
                out[i] = -row[k + 3 + n - 1 - i]

    cdef tuple _row_exps_tuple(self, const int* row):
        cdef int n = self.nvars, k = self.elim, i
        cdef list out = [0] * n
        if k == 0:
            for i in range(n):
                out[i] = -row[2 + n - 1 - i]
        else:
            for i in range(k):
                out[i] = -row[2 + k - 1 - i]
            for i in range(k, n):
                out[i] = -row[k + 3 + n - 1 - i]
        return tuple(out)

    cdef tuple _row_key_tuple(self, const int* row):
        cdef int i
        cdef list out = [0] * self.width
        for i in range(self.width):
            out[i] = row[i]
        return tuple(out)

    # -- keys -----------------------------------------------------------------

    def key(self, comp, exps):
        cdef int* row = <int*> malloc(self.width * sizeof(int))
        if row == NULL:
            raise MemoryError()
        try:
            self._encode(row, comp, exps)
            return self._row_key_tuple(row)
        finally:
            free(row)

    def decode(self, key):
        n = self.nvars
        k = self.elim
        comp = -key[len(key) - 1]
        if k == 0:
            exps = tuple(-key[2 + n - 1 - i] for i in range(n))
        else:
            head = tuple(-key[2 + k - 1 - i] for i in range(k))
            base = 3 + k
            tail = tuple(-key[base + (n - k) - 1 - i] for i in range(n - k))
            exps = head + tail
        return comp, exps

    # -- construction -----------------------------------------------------------

    def vec(self, items):
        cdef list itemlist = list(items)
        cdef KVec raw = _new_vec(self.width, len(itemlist))
        cdef object coeff, comp, exps
        cdef i64 c
        for coeff, comp, exps in itemlist:
            c = coeff % self.p
            if c == 0:
                continue
            self._encode(raw.keys + raw.n * self.width, comp, exps)
            raw.coeffs[raw.n] = c
            raw.n += 1
        return _sort_combine(raw, self.p)

    def zero(self):
        return _new_vec(self.width, 0)

    # -- inspection ----------------------------------------------------------

    def terms(self, KVec v):
        cdef list out = []
        cdef Py_ssize_t i
        cdef const int* row
        for i in range(v.n):
            row = v.keys + i * self.width
            out.append((v.coeffs[i], self._row_comp(row),
                        self._row_exps_tuple(row)))
        return out

    def nterms(self, KVec v):
        return v.n

    def is_zero(self, KVec v):
        return v.n == 0

    def lead(self, KVec v):
        if v.n == 0:
            raise IndexError("lead term of zero vector")
        cdef const int* row = v.keys
        return v.coeffs[0], self._row_comp(row), self._row_exps_tuple(row)

    def lead_key(self, KVec v):
        if v.n == 0:
            raise IndexError("lead term of zero vector")
        return self._row_key_tuple(v.keys)

    def coeff_of(self, KVec v, comp, exps):
        cdef int* row = <int*> malloc(self.width * sizeof(int))
        if row == NULL:
            raise MemoryError()
        cdef Py_ssize_t lo = 0, hi = v.n, mid
        cdef int c
        try:
            self._encode(row, comp, exps)
            while lo < hi:
                mid = (lo + hi) // 2
                if _cmp_row(v.keys + mid * self.width, row, self.width) > 0:
                    lo = mid + 1
                else:
                    hi = mid
            if lo < v.n and _cmp_row(v.keys + lo * self.width, row, self.width) == 0:
                return v.coeffs[lo]
            return 0
        finally:
            free(row)

    # -- arithmetic ----------------------------------------------------------

    cdef KVec _scale_c(self, i64 c, KVec v):
        cdef KVec out
        if c == 0:
            return _new_vec(self.width, 0)
        out = _new_vec(self.width, v.n)
        out.n = v.n
        if v.n > 0:
            memcpy(out.keys, v.keys, v.n * self.width * sizeof(int))
        cdef Py_ssize_t i
        if c == 1:
            if v.n > 0:
                memcpy(out.coeffs, v.coeffs, v.n * sizeof(i64))
        else:
            for i in range(v.n):
                out.coeffs[i] = v.coeffs[i] * c % self.p
        return out

    def scale(self, c, KVec v):
        return self._scale_c(c % self.p, v)

    def monic(self, KVec v):
        if v.n == 0:
            return _new_vec(self.width, 0)
        return self._scale_c(_modpow(v.coeffs[0], self.p - 2, self.p), v)

    def neg(self, KVec v):
        cdef KVec out = _new_vec(self.width, v.n)
        out.n = v.n
        if v.n > 0:
            memcpy(out.keys, v.keys, v.n * self.width * sizeof(int))
        cdef Py_ssize_t i
        for i in range(v.n):
            out.coeffs[i] = self.p - v.coeffs[i]
        return out

    cdef KVec _merge_c(self, KVec a, Py_ssize_t ai, KVec b, Py_ssize_t bi,
                       int bsign):
        """a[ai:] + bsign*b[bi:], both descending; returns a new vector."""
        cdef i64 p = self.p
        cdef int w = self.width
        cdef KVec out = _new_vec(w, (a.n - ai) + (b.n - bi))
        cdef int cmp
        cdef i64 c, cb
        while ai < a.n and bi < b.n:
            cmp = _cmp_row(a.keys + ai * w, b.keys + bi * w, w)
            if cmp > 0:
                memcpy(out.keys + out.n * w, a.keys + ai * w, w * sizeof(int))
                out.coeffs[out.n] = a.coeffs[ai]
                out.n += 1
                ai += 1
            elif cmp < 0:
                cb = b.coeffs[bi]
                memcpy(out.keys + out.n * w, b.keys + bi * w, w * sizeof(int))
                out.coeffs[out.n] = cb if bsign > 0 else p - cb
                out.n += 1
                bi += 1
            else:
                cb = b.coeffs[bi]
                c = (a.coeffs[ai] + (cb if bsign > 0 else p - cb)) % p
                if c != 0:
                    memcpy(out.keys + out.n * w, a.keys + ai * w,
                           w * sizeof(int))
                    out.coeffs[out.n] = c
                    out.n += 1
                ai += 1
                bi += 1
        if ai < a.n:
            memcpy(out.keys + out.n * w, a.keys + ai * w,
                   (a.n - ai) * w * sizeof(int))
            memcpy(out.coeffs + out.n, a.coeffs + ai,
                   (a.n - ai) * sizeof(i64))
            out.n += a.n - ai
        while bi < b.n:
            cb = b.coeffs[bi]
            memcpy(out.keys + out.n * w, b.keys + bi * w, w * sizeof(int))
            out.coeffs[out.n] = cb if bsign > 0 else p - cb
            out.n += 1
            bi += 1
        return out

    def add(self, KVec u, KVec v):
        return self._merge_c(u, 0, v, 0, 1)

    def sub(self, KVec u, KVec v):
        return self._merge_c(u, 0, v, 0, -1)

    cdef KVec _mul_term_c(self, KVec v, i64 c, const int* mexps):
        """v * c*x^mexps; multiplying by a monomial preserves row order."""
        cdef int n = self.nvars, k = self.elim, w = self.width, i
        cdef long dhead = 0, dtail = 0
        if k == 0:
            for i in range(n):
                dhead += mexps[i]
        else:
            for i in range(k):
                dhead += mexps[i]
            for i in range(k, n):
                dtail += mexps[i]
        cdef KVec out = _new_vec(w, v.n)
        out.n = v.n
        cdef Py_ssize_t t
        cdef const int* src
        cdef int* dst
        for t in range(v.n):
            src = v.keys + t * w
            dst = out.keys + t * w
            memcpy(dst, src, w * sizeof(int))
            if k == 0:
                dst[1] = src[1] + <int> dhead
                for i in range(n):
                    dst[2 + n - 1 - i] = src[2 + n - 1 - i] - mexps[i]
            else:
                dst[1] = src[1] + <int> dhead
                dst[k + 2] = src[k + 2] + <int> dtail
                for i in range(k):
                    dst[2 + k - 1 - i] = src[2 + k - 1 - i] - mexps[i]
                for i in range(k, n):
                    dst[k + 3 + n - 1 - i] = src[k + 3 + n - 1 - i] - mexps[i]
            out.coeffs[t] = v.coeffs[t] * c % self.p
        return out

    def mul_term(self, KVec v, c, exps):
        cdef i64 cc = c % self.p
        if cc == 0 or v.n == 0:
            return _new_vec(self.width, 0)
        cdef int* mexps = <int*> malloc(self.nvars * sizeof(int))
        if mexps == NULL:
            raise MemoryError()
        cdef int i
        try:
            for i in range(self.nvars):
                mexps[i] = exps[i]
            return self._mul_term_c(v, cc, mexps)
        finally:
            free(mexps)

    def mul(self, KVec u, KVec v):
        """Product of a rank-1 vector u (all components 0) with v."""
        cdef int w = self.width
        cdef KVec raw = _new_vec(w, u.n * v.n)
        cdef Py_ssize_t iu, iv
        cdef const int* urow
        cdef const int* vrow
        cdef int* dst
        cdef int j
        for iu in range(u.n):
            urow = u.keys + iu * w
            for iv in range(v.n):
                vrow = v.keys + iv * w
                dst = raw.keys + raw.n * w
                dst[0] = vrow[0]
                for j in range(1, w - 1):
                    dst[j] = urow[j] + vrow[j]
                dst[w - 1] = vrow[w - 1]
                raw.coeffs[raw.n] = u.coeffs[iu] * v.coeffs[iv] % self.p
                raw.n += 1
        return _sort_combine(raw, self.p)

    def spoly(self, KVec u, KVec v):
        if u.n == 0 or v.n == 0:
            raise IndexError("lead term of zero vector")
        cdef int n = self.nvars, w = self.width, i
        if self._row_comp(u.keys) != self._row_comp(v.keys):
            raise ValueError("s-vector needs matching lead components")
        cdef int* buf = <int*> malloc(4 * n * sizeof(int))
        if buf == NULL:
            raise MemoryError()
        cdef int* eu = buf
        cdef int* ev = buf + n
        cdef int* du = buf + 2 * n
        cdef int* dv = buf + 3 * n
        cdef KVec a, b
        try:
            self._row_exps(u.keys, eu)
            self._row_exps(v.keys, ev)
            for i in range(n):
                if eu[i] >= ev[i]:
                    du[i] = 0
                    dv[i] = eu[i] - ev[i]
                else:
                    du[i] = ev[i] - eu[i]
                    dv[i] = 0
            a = self._mul_term_c(u, _modpow(u.coeffs[0], self.p - 2, self.p), du)
            b = self._mul_term_c(v, _modpow(v.coeffs[0], self.p - 2, self.p), dv)
            return self._merge_c(a, 1, b, 1, -1)
        finally:
            free(buf)

    # -- reduction -----------------------------------------------------------

    def reducer(self):
        return KReducer(self)

    def normal_form(self, KVec v, KReducer red, tail=True):
        cdef int w = self.width, n = self.nvars
        cdef bint full = bool(tail)
        cdef KVec work = self._scale_c(1, v)
        cdef KVec prod, merged, out
        cdef Py_ssize_t i = 0, out_n = 0, out_cap = 16, t
        cdef int* out_keys = <int*> malloc(out_cap * w * sizeof(int))
        cdef i64* out_coeffs = <i64*> malloc(out_cap * sizeof(i64))
        cdef int* ebuf = <int*> malloc(2 * n * sizeof(int))
        cdef int* delta = ebuf + n
        cdef int* nk
        cdef i64* nc
        cdef const int* row
        cdef _Entry hit
        cdef int j
        if out_keys == NULL or out_coeffs == NULL or ebuf == NULL:
            if out_keys != NULL:
                free(out_keys)
            if out_coeffs != NULL:
                free(out_coeffs)
            if ebuf != NULL:
                free(ebuf)
            raise MemoryError()
        try:
            while i < work.n:
                row = work.keys + i * w
                self._row_exps(row, ebuf)
                hit = red._find_c(self._row_comp(row), ebuf, self._row_deg(row))
                if hit is None:
                    if not full:
                        out = _new_vec(w, out_n + (work.n - i))
                        if out_n > 0:
                            memcpy(out.keys, out_keys, out_n * w * sizeof(int))
                            memcpy(out.coeffs, out_coeffs, out_n * sizeof(i64))
                        memcpy(out.keys + out_n * w, work.keys + i * w,
                               (work.n - i) * w * sizeof(int))
                        memcpy(out.coeffs + out_n, work.coeffs + i,
                               (work.n - i) * sizeof(i64))
                        out.n = out_n + (work.n - i)
                        return out
                    if out_n == out_cap:
                        out_cap *= 2
                        nk = <int*> realloc(out_keys, out_cap * w * sizeof(int))
                        nc = <i64*> realloc(out_coeffs, out_cap * sizeof(i64))
                        if nk != NULL:
                            out_keys = nk
                        if nc != NULL:
                            out_coeffs = nc
                        if nk == NULL or nc == NULL:
                            raise MemoryError()
                    memcpy(out_keys + out_n * w, row, w * sizeof(int))
                    out_coeffs[out_n] = work.coeffs[i]
                    out_n += 1
                    i += 1
                    continue
                for j in range(n):
                    delta[j] = ebuf[j] - hit.ge[j]
                prod = self._mul_term_c(hit.g, work.coeffs[i], delta)
                work = self._merge_c(work, i + 1, prod, 1, -1)
                i = 0
            out = _new_vec(w, out_n)
            if out_n > 0:
                memcpy(out.keys, out_keys, out_n * w * sizeof(int))
                memcpy(out.coeffs, out_coeffs, out_n * sizeof(i64))
            out.n = out_n
            return out
        finally:
            free(out_keys)
            free(out_coeffs)
            free(ebuf)


cdef class KReducer:
    """Growable set of monic vectors searched by lead-term divisibility."""

    cdef readonly KRing ring
    cdef readonly list vecs
    cdef dict _by_comp

    def __init__(self, KRing ring):
        self.ring = ring
        self.vecs = []
        self._by_comp = {}

    def __len__(self):
        return len(self.vecs)

    def add(self, v):
        cdef KVec g = self.ring.monic(v)
        if g.n == 0:
            raise ValueError("cannot reduce by zero")
        cdef int n = self.ring.nvars
        cdef _Entry e = _Entry.__new__(_Entry)
        e.ge = <int*> malloc(n * sizeof(int))
        if e.ge == NULL:
            raise MemoryError()
        self.ring._row_exps(g.keys, e.ge)
        e.gd = self.ring._row_deg(g.keys)
        e.g = g
        self.vecs.append(g)
        cdef long comp = self.ring._row_comp(g.keys)
        cdef list bucket = <list> self._by_comp.setdefault(comp, [])
        bucket.append(e)

    cdef _Entry _find_c(self, long comp, const int* exps, long d):
        cdef object b = self._by_comp.get(comp)
        if b is None:
            return None
        cdef list bucket = <list> b
        cdef Py_ssize_t i, m = len(bucket)
        cdef _Entry e
        cdef int j, n = self.ring.nvars
        cdef bint ok
        for i in range(m):
            e = <_Entry> bucket[i]
            if e.gd <= d:
                ok = True
                for j in range(n):
                    if e.ge[j] > exps[j]:
                        ok = False
                        break
                if ok:
                    return e
        return None

    def find(self, comp, exps):
        """A stored vector whose lead divides x^exps*e_comp, or None."""
        cdef int n = self.ring.nvars, i
        cdef int* ebuf = <int*> malloc(n * sizeof(int))
        if ebuf == NULL:
            raise MemoryError()
        cdef long d = 0
        cdef _Entry e
        cdef list ge
        try:
            for i in range(n):
                ebuf[i] = exps[i]
                d += ebuf[i]
            e = self._find_c(comp, ebuf, d)
            if e is None:
                return None
            ge = [0] * n
            for i in range(n):
                ge[i] = e.ge[i]
            return tuple(ge), e.g
        finally:
            free(ebuf)
