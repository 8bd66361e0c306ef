"""Dense linear algebra over F_p on numpy int64 arrays.

Entries are canonical residues in [0, p).  p must stay below 2^31 so a
single product fits in int64 before reduction.
"""

import numpy as np


def as_matrix(rows, width, p):
    if len(rows) == 0:
        return np.zeros((0, width), dtype=np.int64)
    a = np.array(rows, dtype=np.int64)
    a %= p
    return a


def _panel_product(mult, rows, p, use_float):
    if use_float:
        prod = mult.astype(np.float64) @ rows.astype(np.float64)
        return np.rint(prod).astype(np.int64) % p
    return mult @ rows % p


def rref(a, p, block=48):
    """Reduced row echelon form. Returns (matrix, pivot column list).

    Elimination is blocked: a panel of up to `block` pivots is factored with
    lazily updated columns, then a single matrix product applies the panel to
    the trailing columns (and, in the back-substitution phase, to the rows
    above).  Entries stay in [0, p), so a panel product is bounded by
    block * (p-1)^2; when that fits in float64's exact integer range the
    product runs through BLAS.
    """
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    pivots = []
    blk = max(1, min(block, m or 1))
    while blk > 1 and blk * (p - 1) ** 2 >= 2**62:
        blk //= 2
    use_float = blk * (p - 1) ** 2 < 2**53
    r = 0
    c = 0
    while r < m and c < n:
        r0 = r
        c0 = c
        t = 0
        mult = np.zeros((m - r0, blk), dtype=np.int64)
        while c < n and t < blk:
            # Rows below the panel are stale; reconstruct the true column.
            col = a[r0 + t :, c]
            if t:
                col = (col - mult[t:, :t] @ a[r0 : r0 + t, c]) % p
            else:
                col = col % p
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                c += 1
                continue
            i = int(nz[0])
            piv = int(col[i])
            if i:
                a[[r0 + t, r0 + t + i]] = a[[r0 + t + i, r0 + t]]
                mult[[t, t + i]] = mult[[t + i, t]]
                col[i] = col[0]
            row = a[r0 + t, c0:]
            if t:
                row = (row - mult[t, :t] @ a[r0 : r0 + t, c0:]) % p
            a[r0 + t, c0:] = row * pow(piv, p - 2, p) % p
            mult[t + 1 :, t] = col[1:]
            pivots.append(c)
            t += 1
            c += 1
        if t == 0:
            break
        if r0 + t < m:
            upd = _panel_product(mult[t:, :t], a[r0 : r0 + t, c0:], p, use_float)
            a[r0 + t :, c0:] = (a[r0 + t :, c0:] - upd) % p
        r = r0 + t
    t1 = len(pivots)
    while t1 > 0:
        t0 = max(0, t1 - blk)
        c0 = pivots[t0]
        for t in range(t1 - 1, t0, -1):
            ct = pivots[t]
            col = a[t0:t, ct]
            nzr = np.nonzero(col)[0]
            if nzr.size:
                rows = t0 + nzr
                a[rows, ct:] = (a[rows, ct:] - np.outer(col[nzr], a[t, ct:])) % p
        if t0:
            mult = a[:t0, pivots[t0:t1]]
            if mult.any():
                upd = _panel_product(mult, a[t0:t1, c0:], p, use_float)
                a[:t0, c0:] = (a[:t0, c0:] - upd) % p
        t1 = t0
    return a, pivots


def rank(a, p):
    return len(rref(a, p)[1])


def nullspace(a, p):
    """Rows spanning {v : a @ v == 0 mod p}, in echelon order."""
    a = np.asarray(a, dtype=np.int64)
    m, n = a.shape
    r, pivots = rref(a, p)
    piv = set(pivots)
    free = [c for c in range(n) if c not in piv]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for row, c in enumerate(pivots):
            out[k, c] = (-int(r[row, f])) % p
    return out


def rank_fp(a, p, block=64):
    """Rank over F_p via blocked Gaussian elimination with a BLAS core.

    Columns are processed in panels of `block`.  Within a panel, ordinary
    int64 elimination finds pivots and stores the multipliers in place
    (each pivot row is normalized to 1).  The panel's row operations are then
    replayed on the trailing columns: a unit-lower triangular solve among the
    pivot rows, followed by a single float64 matrix product for all rows
    below.  Entries of that product are bounded by block * (p-1)^2, so with
    block * (p-1)^2 < 2^53 the float64 arithmetic is exact; everything else
    stays in int64 where p^2 sized intermediates are trivially exact.
    """
    a = np.asarray(a)
    if a.size == 0:
        return 0
    m, n = a.shape
    block = max(1, min(block, n))
    if block * (p - 1) * (p - 1) >= 2**53:
        raise ValueError("modulus too large for exact float64 products")
    B = np.ascontiguousarray(a, dtype=np.int64) % p
    rank_total = 0
    while B.shape[0] and B.shape[1]:
        ma, na = B.shape
        w = min(block, na)
        panel = B[:, :w].copy()
        order = np.arange(ma)
        piv_cols = []  # panel column of each pivot; pivot t sits in panel row t
        invs = []
        for jj in range(w):
            t = len(piv_cols)
            if t >= ma:
                break
            col = panel[:, jj]
            nz = np.nonzero(col[t:ma])[0]
            if nz.size == 0:
                continue
            i = t + int(nz[0])
            if i != t:
                panel[[i, t]] = panel[[t, i]]
                order[[i, t]] = order[[t, i]]
            inv = pow(int(col[t]), p - 2, p)
            panel[t, jj:w] = panel[t, jj:w] * inv % p
            if t + 1 < ma and jj + 1 < w:
                tail = panel[t + 1 : ma, jj + 1 : w]
                tail -= np.outer(col[t + 1 : ma], panel[t, jj + 1 : w])
                tail %= p
            # col[t+1:] keeps the multipliers of this elimination step
            piv_cols.append(jj)
            invs.append(inv)
        k = len(piv_cols)
        rank_total += k
        if w == na or k == ma:
            break
        # replay the panel's row operations on the trailing columns: copy them
        # out contiguously in pivot order, solve among the k pivot rows, then
        # update everything below with one matrix product
        trail = B[order, w:]
        for t in range(k):
            trail[t] = trail[t] * invs[t] % p
            if t + 1 < k:
                trail[t + 1 : k] = (
                    trail[t + 1 : k] - np.outer(panel[t + 1 : k, piv_cols[t]], trail[t])
                ) % p
        if k:
            prod = panel[k:, piv_cols].astype(np.float64) @ trail[:k].astype(np.float64)
            trail[k:] -= prod.astype(np.int64)
            trail[k:] %= p
        B = trail[k:]
    return rank_total


class RowSpan:
    """Incremental row space over F_p with reduction of new vectors.

    The stored basis is kept fully reduced (each row monic at its pivot and
    zero at every other pivot), so reducing a vector is a single
    coefficient-gather and matrix product rather than a row-by-row sweep.
    """

    def __init__(self, width, p):
        self.width = width
        self.p = p
        self._n = 0
        self._buf = np.zeros((16, width), dtype=np.int64)
        self._pbuf = np.zeros(16, dtype=np.intp)
        self.pivot_of_row = []
        self.pivot_index = {}

    def __len__(self):
        return self._n

    @property
    def rows(self):
        return list(self._buf[: self._n])

    def residual(self, vec):
        """Reduce vec against the span; returns the residual (may be zero)."""
        p = self.p
        v = np.asarray(vec, dtype=np.int64) % p
        n = self._n
        if n:
            coef = v[self._pbuf[:n]]
            nz = np.nonzero(coef)[0]
            if nz.size:
                v = (v - coef[nz] @ self._buf[nz]) % p
        return v

    def add(self, vec):
        """Insert vec; returns True if it enlarged the span."""
        v = self.residual(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = v * pow(int(v[c]), self.p - 2, self.p) % self.p
        n = self._n
        # keep the basis fully reduced
        if n:
            col = self._buf[:n, c]
            nzr = np.nonzero(col)[0]
            if nzr.size:
                self._buf[nzr] = (self._buf[nzr] - np.outer(col[nzr], v)) % self.p
        if n == self._buf.shape[0]:
            grown = np.zeros((2 * n, self.width), dtype=np.int64)
            grown[:n] = self._buf
            self._buf = grown
            pgrown = np.zeros(2 * n, dtype=np.intp)
            pgrown[:n] = self._pbuf
            self._pbuf = pgrown
        self._buf[n] = v
        self._pbuf[n] = c
        self._n = n + 1
        self.pivot_of_row.append(c)
        self.pivot_index[c] = n
        return True

    def add_batch(self, rows):
        """Insert many vectors at once; returns the number of new pivots.

        Equivalent to add() in a loop but reduces the whole block with two
        matrix products and one echelonization.
        """
        if not len(rows):
            return 0
        p = self.p
        a = np.asarray(rows, dtype=np.int64) % p
        n = self._n
        if n:
            coefs = a[:, self._pbuf[:n]]
            if coefs.any():
                a = (a - coefs @ self._buf[:n]) % p
        r, pivots = rref(a, p)
        t = len(pivots)
        if t == 0:
            return 0
        new_rows = r[:t]
        if n:
            sub = self._buf[:n][:, pivots]
            if sub.any():
                self._buf[:n] = (self._buf[:n] - sub @ new_rows) % p
        if n + t > self._buf.shape[0]:
            cap = max(2 * self._buf.shape[0], n + t)
            grown = np.zeros((cap, self.width), dtype=np.int64)
            grown[:n] = self._buf[:n]
            self._buf = grown
            pgrown = np.zeros(cap, dtype=np.intp)
            pgrown[:n] = self._pbuf[:n]
            self._pbuf = pgrown
        self._buf[n : n + t] = new_rows
        self._pbuf[n : n + t] = pivots
        self._n = n + t
        for k, c in enumerate(pivots):
            self.pivot_of_row.append(c)
            self.pivot_index[c] = n + k
        return t

    def contains(self, vec):
        return not np.any(self.residual(vec))
