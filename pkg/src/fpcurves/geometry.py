"""Geometric certification and finite-field points on plane curves.

Singular loci via Jacobian minors, the nodal certificate for plane curves
(reduced singular scheme of the expected degree), smoothness in arbitrary
codimension, random rational points on plane curves through line sections,
and the census of factor-degree partitions of random line sections.
"""

import multiprocessing

from .arith import SeededRng, UnivariatePoly, factor_degrees, rational_roots
from .groebner import Ideal, saturate
from .homology import hilbert_data
from .ring import Ring, jacobian, minors

__all__ = [
    "CertificateReport",
    "RetryExhausted",
    "certify_nodal_plane_curve",
    "certify_smooth_curve",
    "decomposition_tally",
    "random_rational_point",
    "singular_locus",
]


class RetryExhausted(RuntimeError):
    """A randomized search ran out of trials without meeting its target."""


class CertificateReport:
    """Named list of (expected, observed) checks; passes iff all checks do."""

    def __init__(self, name, seed=None):
        self.name = name
        self.seed = seed
        self.checks = []

    def add(self, label, expected, observed):
        self.checks.append(
            {
                "check": label,
                "expected": expected,
                "observed": observed,
                "pass": expected == observed,
            }
        )
        return self

    @property
    def passed(self):
        return all(c["pass"] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c["pass"]]

    def to_json(self):
        out = {"name": self.name, "pass": self.passed, "checks": self.checks}
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def __repr__(self):
        verdict = "pass" if self.passed else "FAIL"
        return f"CertificateReport({self.name}: {verdict}, {len(self.checks)} checks)"


def singular_locus(ideal, expected_codim):
    """I plus the c x c minors of the Jacobian of its generators (c supplied).

    For a hypersurface (c = 1) this adds all partial derivatives.  The caller
    provides the expected codimension of V(I); on the locus where V(I) really
    has that codimension, the result cuts out exactly the singular points.
    """
    gens = [g for g in ideal.gens if not g.is_zero]
    if not gens:
        raise ValueError("singular locus of the zero ideal")
    jac = jacobian(gens)
    return Ideal(ideal.ring, tuple(ideal.gens) + tuple(minors(expected_codim, jac)))


def certify_nodal_plane_curve(curve, delta, irreducibility=False, min_gen_degree=5):
    """Certificate that a plane curve has exactly `delta` ordinary nodes.

    Checks: (a) the singular scheme has codimension 2 and degree delta;
    (b) after saturation the singular scheme is smooth of dimension 0 --
    adding the 2x2 Jacobian minors of its generators leaves an empty scheme
    (codimension 3) -- which makes it reduced, and a plane curve with reduced
    singular scheme has only nodes.  With `irreducibility=True` two checklist
    items used to rule out decompositions are added: the node scheme has no
    generator of degree below `min_gen_degree` and is not a complete
    intersection.
    """
    ring = curve.ring
    if ring.nvars != 3:
        raise ValueError("expected a plane curve (three variables)")
    report = CertificateReport("nodal-plane-curve")
    sing = singular_locus(curve, 1)
    data = hilbert_data(sing)
    if delta == 0:
        # smooth curve: the singular scheme must be empty
        report.add("singular scheme empty (codimension)", 3, data.codim)
        return report
    report.add("singular scheme codimension", 2, data.codim)
    report.add("singular scheme degree", delta, data.degree)
    if data.codim != 2:
        return report
    sings = saturate(sing)
    reduced = singular_locus(sings, 2)
    report.add(
        "node scheme reduced (codim of its singular locus)",
        3,
        hilbert_data(reduced).codim,
    )
    if irreducibility:
        degs = sorted(g.degree for g in sings.mingens())
        report.add(f"no node-scheme generator of degree < {min_gen_degree}", True, degs[0] >= min_gen_degree)
        report.add("node scheme is not a complete intersection", True, len(degs) != 2)
    return report


def certify_smooth_curve(ideal, report=None):
    """Jacobian-criterion smoothness for a curve: singular locus is empty.

    V(I) is expected to be a curve of codimension n-1 in P^n; the certificate
    passes iff the singular scheme has codimension n+1, i.e. no points.
    """
    ring = ideal.ring
    n = ring.nvars - 1
    if report is None:
        report = CertificateReport("smooth-curve")
    sing = singular_locus(ideal, n - 1)
    report.add("singular locus codimension", n + 1, hilbert_data(sing).codim)
    return report


# ---------------------------------------------------------------------------
# Rational points on plane curves


def _random_projective_point(ring, rng):
    p = ring.p
    while True:
        coords = tuple(rng.field_element(p) for _ in range(ring.nvars))
        if any(coords):
            return coords


def _random_line(ring, rng):
    """Two linearly independent points spanning a random line."""
    p = ring.p
    a = _random_projective_point(ring, rng)
    while True:
        b = _random_projective_point(ring, rng)
        for i in range(ring.nvars):
            for j in range(i + 1, ring.nvars):
                if (a[i] * b[j] - a[j] * b[i]) % p:
                    return a, b


def _restrict_to_line(f, a, b):
    """Coefficients of t -> f(a + t*b) as a UnivariatePoly over F_p.

    The parametrized line covers every point a + t*b plus the point b itself
    at t = infinity; the returned polynomial has degree deg f exactly when b
    does not lie on the curve.
    """
    ring = f.ring
    p = ring.p
    d = f.degree
    coeffs = [0] * (d + 1)
    # expand each monomial prod (a_i + t b_i)^{e_i} by convolution
    for c, exps in f.terms:
        poly = [c]
        for i, e in enumerate(exps):
            for _ in range(e):
                nxt = [0] * (len(poly) + 1)
                for k, q in enumerate(poly):
                    nxt[k] = (nxt[k] + q * a[i]) % p
                    nxt[k + 1] = (nxt[k + 1] + q * b[i]) % p
                poly = nxt
        for k, q in enumerate(poly):
            coeffs[k] = (coeffs[k] + q) % p
    return UnivariatePoly(ring.field, coeffs)


def point_ideal(ring, coords):
    """Ideal of a projective point: the 2x2 minors against the coordinates."""
    p = ring.p
    k = max(i for i, c in enumerate(coords) if c % p)
    inv = pow(coords[k] % p, p - 2, p)
    gens = []
    for i in range(ring.nvars):
        if i == k:
            continue
        # x_i - (c_i / c_k) x_k
        gens.append(ring.variable(i) - ring.constant(coords[i] * inv) * ring.variable(k))
    return Ideal(ring, tuple(gens))


def random_rational_point(curve, rng, max_trials=200):
    """Ideal of a random F_p-rational point on a plane curve.

    Draws random lines, restricts the curve to the line parameter, and takes
    rational roots; the line is redrawn when it passes through the base point
    of the parametrization (restriction degree drops) or when no rational
    root exists.  Raises RetryExhausted after max_trials lines.
    """
    ring = curve.ring
    if ring.nvars != 3:
        raise ValueError("expected a plane curve (three variables)")
    f = next(g for g in curve.gens if not g.is_zero)
    p = ring.p
    for _ in range(max_trials):
        a, b = _random_line(ring, rng)
        restricted = _restrict_to_line(f, a, b)
        if restricted.degree < f.degree:
            continue  # b lies on the curve (or line inside the curve): redraw
        roots = rational_roots(restricted, rng)
        if not roots:
            continue
        t = roots[0]
        coords = tuple((ai + t * bi) % p for ai, bi in zip(a, b))
        pt = point_ideal(ring, coords)
        if not all(g.evaluate(coords) == 0 for g in curve.gens):
            raise AssertionError("point fails curve membership")
        return pt
    raise RetryExhausted(f"no rational point found in {max_trials} line sections")


def _tally_trials(p, names, f_text, seed, stream, start, count):
    ring = Ring(p, len(names), names=names)
    f = ring.parse(f_text)
    base = SeededRng(seed, stream)
    out = {}
    for i in range(start, start + count):
        trial = base.substream("tally", i)
        a, b = _random_line(ring, trial)
        restricted = _restrict_to_line(f, a, b)
        if restricted.degree < 0:
            part = ()
        else:
            degs = factor_degrees(restricted, trial)
            part = tuple(sorted(d for d, m in degs for _ in range(m)))
            if sum(part) != restricted.degree:
                raise AssertionError("factor degrees do not sum to the restriction degree")
        out[part] = out.get(part, 0) + 1
    return out


def decomposition_tally(curve, trials, rng, jobs=1):
    """Tally of factor-degree partitions of the curve along random lines.

    Each trial restricts the (principal) plane curve to a random line and
    records the sorted degrees of the irreducible factors, with multiplicity;
    the partition sums to the degree of the restricted polynomial, which is
    deg(curve) unless the parametrization base point lies on the curve.
    Results are independent of `jobs`: trial i always uses the substream
    ("tally", i) of the supplied rng.
    """
    ring = curve.ring
    if ring.nvars != 3:
        raise ValueError("expected a plane curve (three variables)")
    f = next(g for g in curve.gens if not g.is_zero)
    if jobs <= 1:
        return _tally_trials(ring.p, ring.names, str(f), rng.seed, rng.stream, 0, trials)
    step = (trials + jobs - 1) // jobs
    chunks = [
        (ring.p, ring.names, str(f), rng.seed, rng.stream, start, min(step, trials - start))
        for start in range(0, trials, step)
    ]
    with multiprocessing.Pool(jobs) as pool:
        parts = pool.starmap(_tally_trials, chunks)
    total = {}
    for part in parts:
        for key, v in part.items():
            total[key] = total.get(key, 0) + v
    return total
