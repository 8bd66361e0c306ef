"""Prime fields, reproducible randomness, univariate polynomials over F_p."""

import hashlib

import numpy as np


def _stream_id(i):
    if isinstance(i, int):
        return i
    digest = hashlib.blake2s(str(i).encode(), digest_size=4).digest()
    return int.from_bytes(digest, "big")

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, exact for all 64-bit integers."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """F_p with canonical residues in [0, p). Elements are plain ints."""

    __slots__ = ("p",)

    def __init__(self, p=10007):
        if not is_prime(p):
            raise ValueError("field characteristic must be prime, got %r" % (p,))
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def reduce(self, a):
        return a % self.p

    def neg(self, a):
        return -a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inverse(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 is not invertible in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inverse(b) % self.p


class SeededRng:
    """Counter-based PRNG (Philox 4x64) with hierarchical substreams.

    A stream is identified by (seed, stream_path); the underlying key is
    derived with numpy's SeedSequence(entropy=seed, spawn_key=stream_path),
    and draws consume the documented Philox raw 64-bit output, so identical
    (seed, path) pairs give identical draws on every platform.  Substreams
    with distinct paths are statistically independent.
    """

    __slots__ = ("seed", "stream", "_bitgen", "_buf", "_pos")

    def __init__(self, seed, stream=()):
        if isinstance(stream, int):
            stream = (stream,)
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.stream = tuple(int(s) for s in stream)
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=self.stream)
        self._bitgen = np.random.Philox(seed=ss)
        self._buf = ()
        self._pos = 0

    def substream(self, *ids):
        """Independent generator; ids may be integers or stable string tags."""
        return SeededRng(self.seed, self.stream + tuple(_stream_id(i) for i in ids))

    def _raw(self):
        if self._pos >= len(self._buf):
            self._buf = [int(v) for v in self._bitgen.random_raw(256)]
            self._pos = 0
        v = self._buf[self._pos]
        self._pos += 1
        return v

    def randint(self, n):
        """Uniform integer in [0, n), unbiased via 64-bit rejection."""
        if n <= 0:
            raise ValueError("randint needs n >= 1")
        lim = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self._raw()
            if v < lim:
                return v % n

    def field_element(self, field):
        """Uniform element of F_p (zero included)."""
        p = field.p if isinstance(field, PrimeField) else int(field)
        return self.randint(p)

    def field_elements(self, count, field):
        return [self.field_element(field) for _ in range(count)]

    def nonzero_field_element(self, field):
        p = field.p if isinstance(field, PrimeField) else int(field)
        return 1 + self.randint(p - 1)

    def __repr__(self):
        return "SeededRng(seed=%d, stream=%r)" % (self.seed, self.stream)


class UnivariatePoly:
    """Dense univariate polynomial over F_p, coefficients lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        p = field.p
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def random(cls, field, degree, rng):
        """Uniformly random polynomial of exactly the given degree."""
        c = [rng.field_element(field) for _ in range(degree)]
        c.append(rng.nonzero_field_element(field))
        return cls(field, c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, UnivariatePoly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("x" if c == 1 else "%d*x" % c)
            else:
                parts.append("x^%d" % i if c == 1 else "%d*x^%d" % (c, i))
        return " + ".join(reversed(parts))

    def __add__(self, other):
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, v in enumerate(b):
            c[i] = (c[i] + v) % p
        return UnivariatePoly(self.field, c)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        p = self.field.p
        k %= p
        return UnivariatePoly(self.field, [k * v % p for v in self.coeffs])

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return UnivariatePoly.zero(self.field)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        c = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    c[i + j] = (c[i + j] + ai * bj) % p
        return UnivariatePoly(self.field, c)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("univariate division by zero")
        p = self.field.p
        rem = list(self.coeffs)
        dn = other.degree
        inv = self.field.inverse(other.coeffs[-1])
        quo = [0] * max(0, len(rem) - dn)
        for i in range(len(rem) - dn - 1, -1, -1):
            q = rem[i + dn] * inv % p
            if q:
                quo[i] = q
                for j, v in enumerate(other.coeffs):
                    rem[i + j] = (rem[i + j] - q * v) % p
        return UnivariatePoly(self.field, quo), UnivariatePoly(self.field, rem[:dn])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inverse(self.coeffs[-1]))

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e, modulus):
        result = UnivariatePoly.one(self.field)
        base = self % modulus
        while e > 0:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def derivative(self):
        p = self.field.p
        return UnivariatePoly(
            self.field, [i * c % p for i, c in enumerate(self.coeffs)][1:]
        )

    def evaluate(self, a):
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % p
        return acc

    def shift_compose(self, a):
        """f(x + a)."""
        # Horner on f with x replaced by (x + a).
        f = UnivariatePoly.zero(self.field)
        xa = UnivariatePoly(self.field, [a, 1])
        for c in reversed(self.coeffs):
            f = f * xa + UnivariatePoly(self.field, [c])
        return f


def _pth_root(f):
    """For f(x) = g(x^p) over F_p return g (coefficientwise p-th root)."""
    p = f.field.p
    return UnivariatePoly(f.field, [f.coeffs[i] for i in range(0, len(f.coeffs), p)])


def squarefree_decomposition(f):
    """Yield (g, m) with g monic squarefree, f = prod g^m up to a constant."""
    p = f.field.p
    out = []

    def visit(h, mult):
        h = h.monic()
        d = h.derivative()
        if d.is_zero():
            # h is a p-th power
            visit(_pth_root(h), mult * p)
            return
        w = h.gcd(d)
        # h / w carries each distinct factor once
        c = (h // w).monic()
        i = 1
        while c.degree > 0:
            y = c.gcd(w)
            z = (c // y).monic()
            if z.degree > 0:
                out.append((z, mult * i))
            c = y
            w = (w // y).monic()
            i += 1
        if w.degree > 0:
            visit(w, mult)

    if f.degree > 0:
        visit(f, 1)
    return out


def distinct_degree_split(f):
    """For monic squarefree f, return [(product of degree-d factors, d)]."""
    field = f.field
    p = field.p
    out = []
    x = UnivariatePoly.x(field)
    h = x
    rest = f
    d = 0
    while rest.degree > 2 * d:
        d += 1
        h = h.pow_mod(p, rest)
        g = rest.gcd(h - x)
        if g.degree > 0:
            out.append((g.monic(), d))
            rest = (rest // g).monic()
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


MAX_SPLIT_TRIES = 64


def equal_degree_split(f, d, rng):
    """Cantor-Zassenhaus: split monic squarefree f, all factors of degree d."""
    field = f.field
    p = field.p
    if f.degree == d:
        return [f]
    for _ in range(MAX_SPLIT_TRIES):
        r = UnivariatePoly(
            field, [rng.field_element(field) for _ in range(f.degree)] + [1]
        )
        if p == 2:
            # trace map r + r^2 + r^4 + ... splits in characteristic 2
            t = UnivariatePoly.zero(field)
            s = r % f
            for _ in range(d):
                t = (t + s) % f
                s = (s * s) % f
            g = f.gcd(t)
        else:
            e = (pow(p, d) - 1) // 2
            s = r.pow_mod(e, f) - UnivariatePoly.one(field)
            g = f.gcd(s)
        if 0 < g.degree < f.degree:
            left = equal_degree_split(g, d, rng)
            right = equal_degree_split((f // g).monic(), d, rng)
            return left + right
    raise ArithmeticError(
        "equal-degree splitting did not separate after %d attempts" % MAX_SPLIT_TRIES
    )


def factor(f, rng):
    """Full monic factorization: list of (irreducible, multiplicity)."""
    if f.degree < 0:
        raise ValueError("cannot factor the zero polynomial")
    out = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree_split(g):
            for q in equal_degree_split(h, d, rng):
                out.append((q, m))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs, t[1]))
    return out


def factor_degrees(f, rng):
    """Multiset of (degree, multiplicity) over the irreducible factors of f."""
    return sorted((g.degree, m) for g, m in factor(f, rng))


def rational_roots(f, rng):
    """The distinct roots of f in F_p, ascending."""
    if f.degree < 0:
        raise ValueError("the zero polynomial vanishes everywhere")
    field = f.field
    p = field.p
    # gcd with x^p - x isolates the product of the distinct linear factors
    x = UnivariatePoly.x(field)
    if f.degree == 0:
        return []
    xp = x.pow_mod(p, f)
    lin = f.gcd(xp - x)
    roots = []
    if lin.degree > 0:
        for g in equal_degree_split(lin, 1, rng):
            roots.append((-g.coeffs[0]) % p)
    return sorted(roots)
