"""Randomized constructions of algebraic curves of genus 7 through 14.

Every entry point draws random data over a prime field, assembles a curve
from it, and certifies the outcome exactly -- degrees, genera, Hilbert
functions, Betti numbers, smoothness -- before returning.  Failed draws are
retried on fresh deterministic substreams, so results are reproducible from
the seed alone.

The pipelines:

* ``random_distinct_plane_points`` -- reduced sets of k points in the plane
  with generic Hilbert function, presented by maximal minors.
* ``random_nodal_plane_curve`` -- plane models of minimal degree with the
  expected number of nodes, any genus up to 10.
* ``search_plane_genus11_curve`` -- a search over small fields for degree-10
  plane curves with two ordinary triple points and 19 further double points
  (the expected dimension of the system is negative, so hits are rare).
* ``random_hartshorne_rao_module`` / ``random_space_curve_genus12_degree13``
  -- smooth genus-12 curves of degree 13 in P^3 presented by a random
  finite-length module.
* ``random_canonical_genus8_with_8points`` -- canonical genus-8 curves as
  linear sections of the Pfaffian quadrics of G(2,6), with marked points.
* ``random_normal_curve_genus8_degree14`` -- the genus-8 curve re-embedded
  into P^6 by quadrics through a residual divisor.
* ``random_curve_genus14`` -- genus-14 curves of degree 18 linked to the
  previous ones by five quadrics.
* ``random_genus7_degree14_curve`` -- genus-7 curves of degree 14 in P^7
  built from a 14-point divisor on an 8-nodal plane septic.
"""

import logging
import math
import multiprocessing

import numpy as np

from .arith import SeededRng, UnivariatePoly
from .geometry import (
    CertificateReport,
    RetryExhausted,
    certify_nodal_plane_curve,
    certify_smooth_curve,
    point_ideal,
    random_rational_point,
    singular_locus,
)
from .groebner import (
    Ideal,
    ideal_quotient,
    intersect,
    ring_map_kernel_linear,
    saturate,
    syzygy_matrix,
)
from .homology import (
    betti_via_koszul,
    ext_dual_presentation,
    free_resolution,
    hilbert_data,
    petri_injective_certificate,
    satisfies_np,
)
from .linalg import RowSpan, nullspace, rank, rref
from .ring import (
    GradedFreeModule,
    GradedMatrix,
    Ring,
    jacobian,
    minors,
    pfaffians,
    random_graded_matrix,
)

logger = logging.getLogger("fpcurves.constructions")

__all__ = [
    "BrillNoetherData",
    "CurveWithMarkedPoints",
    "brill_noether",
    "certify_genus11_plane_curve",
    "distinct_plane_points",
    "dmin",
    "points_mutually_distinct",
    "random_canonical_genus8_with_8points",
    "random_curve_genus14",
    "random_distinct_plane_points",
    "random_genus7_degree14_curve",
    "random_hartshorne_rao_module",
    "random_nodal_plane_curve",
    "random_normal_curve_genus8_degree14",
    "random_space_curve_genus12_degree13",
    "search_plane_genus11_curve",
]


# ---------------------------------------------------------------------------
# Brill-Noether bookkeeping


class BrillNoetherData:
    """Numerology of linear systems of rank r and degree d on a genus-g curve:
    the Brill-Noether number rho, and for plane models (r = 2) the number of
    nodes a degree-d model with delta ordinary double points must carry."""

    def __init__(self, genus, rank, degree):
        self.genus = genus
        self.rank = rank
        self.degree = degree
        self.rho = genus - (rank + 1) * (genus - degree + rank)
        self.nodes = math.comb(degree - 1, 2) - genus if rank == 2 else None

    def __repr__(self):
        extra = f", nodes={self.nodes}" if self.nodes is not None else ""
        return (
            f"BrillNoetherData(genus={self.genus}, rank={self.rank}, "
            f"degree={self.degree}, rho={self.rho}{extra})"
        )


def dmin(r, g):
    """Smallest degree d with nonnegative Brill-Noether number rho(g, r, d)."""
    return -(-((r + 1) * (g + r) - g) // (r + 1))


def brill_noether(g, r, d=None):
    """BrillNoetherData for genus g, rank r, degree d (minimal by default)."""
    if d is None:
        d = dmin(r, g)
    return BrillNoetherData(g, r, d)


# ---------------------------------------------------------------------------
# Random distinct plane points


def distinct_plane_points(ideal):
    """True when the ideal cuts out a reduced zero-dimensional plane scheme."""
    if hilbert_data(ideal).dimension != 0:
        return False
    return hilbert_data(singular_locus(ideal, 2)).dimension < 0


def points_mutually_distinct(ideals):
    """True when the given finite point sets are pairwise disjoint
    (the degree of the intersection ideal equals the sum of the degrees)."""
    total = 0
    meet = None
    for i in ideals:
        total += hilbert_data(i).degree
        meet = i if meet is None else intersect(meet, i)
    return hilbert_data(meet).degree == total


def random_distinct_plane_points(k, ring, rng, max_attempts=32):
    """Ideal of k distinct points of P^2 with generic Hilbert function.

    The points are the maximal minors of a random graded matrix whose shape
    forces degree k (a Hilbert-Burch presentation): with n minimal such that
    binomial(n+2, 2) >= k and eps = k - binomial(n+1, 2), either an
    (a) x (b + eps) matrix with b linear and eps quadric columns (when
    b = n - 2*eps >= 0) or an (a + |b|) x eps matrix with mixed rows.  Draws
    repeat until the scheme is reduced of dimension zero and degree k.
    """
    if ring.nvars != 3:
        raise ValueError("expected a polynomial ring in three variables")
    if k < 1:
        raise ValueError("need at least one point")
    n = 0
    while (2 * n + 3) ** 2 < 9 + 8 * k:
        n += 1
    eps = k - math.comb(n + 1, 2)
    a = n + 1 - eps
    b = n - 2 * eps
    for attempt in range(max_attempts):
        sub = rng.substream("plane-points", k, attempt)
        if b >= 0:
            m = random_graded_matrix(
                GradedFreeModule(ring, [0] * a),
                GradedFreeModule(ring, [1] * b + [2] * eps),
                sub,
            )
            size = b + eps
        else:
            m = random_graded_matrix(
                GradedFreeModule(ring, [0] * a + [1] * (-b)),
                GradedFreeModule(ring, [2] * eps),
                sub,
            )
            size = eps
        ideal = Ideal(ring, tuple(minors(size, m)))
        if hilbert_data(ideal).degree == k and distinct_plane_points(ideal):
            return ideal
        logger.debug("plane points draw %d for k=%d rejected", attempt, k)
    raise RetryExhausted(
        f"no reduced set of {k} plane points in {max_attempts} draws"
    )


# ---------------------------------------------------------------------------
# Nodal plane curves of genus up to 10


def _combination(ring, polys, coeffs):
    """Linear combination of polynomials with field coefficients."""
    acc = ring.zero
    for c, f in zip(coeffs, polys):
        if c:
            acc = acc + f * ring.constant(c)
    return acc


def random_nodal_plane_curve(g, ring, rng, max_attempts=32):
    """Nodal plane curve of geometric genus g <= 10 and minimal degree.

    Takes the minimal plane degree d = dmin(2, g) and delta =
    binomial(d-1, 2) - g prescribed nodes: a random curve of degree d in the
    saturated square of the ideal of delta random points.  Returns
    (curve ideal, certificate report); the certificate checks that the
    singular scheme is exactly the delta nodes and that they are ordinary.
    """
    if ring.nvars != 3:
        raise ValueError("expected a polynomial ring in three variables")
    if not 0 <= g <= 10:
        raise ValueError("plane-model pipeline supports genus 0 through 10")
    bn = brill_noether(g, 2)
    d, delta = bn.degree, bn.nodes
    last = None
    for attempt in range(max_attempts):
        sub = rng.substream("nodal-curve", g, attempt)
        if delta == 0:
            f = ring.random_form(d, sub)
            if f.is_zero:
                continue
            curve = Ideal(ring, (f,))
            report = certify_nodal_plane_curve(curve, 0)
        else:
            try:
                pts = random_distinct_plane_points(delta, ring, sub)
            except RetryExhausted:
                continue
            system = saturate(pts.square(), rng=sub).graded_piece(d)
            if not system:
                continue
            f = _combination(ring, system, sub.field_elements(len(system), ring.field))
            if f.is_zero:
                continue
            curve = Ideal(ring, (f,))
            report = certify_nodal_plane_curve(curve, delta)
            report.add(
                "curves of minimal degree through the doubled points",
                math.comb(d + 2, 2) - 3 * delta,
                len(system),
            )
        if report.passed:
            return curve, report
        last = report
        logger.info("nodal curve attempt %d failed: %s", attempt, report.failures())
    raise RetryExhausted(
        f"no certified {delta}-nodal curve of degree {d} in {max_attempts} draws"
        + (f"; last failures: {last.failures()}" if last else "")
    )


# ---------------------------------------------------------------------------
# Genus-11 plane decics with two ordinary triple points

_GENUS11_NODES = 19


def _triple_point_ideals(ring):
    x0, x1, x2 = ring.variables
    return Ideal(ring, (x0, x1)), Ideal(ring, (x1, x2))


def _ideal_power(ideal, k):
    out = ideal
    for _ in range(k - 1):
        out = out.multiply(ideal)
    return Ideal(ideal.ring, tuple(out.mingens()))


def _divide_power(f, var, power):
    """Sum of the terms of f divisible by x_var^power, divided by it."""
    terms = [
        (c, tuple(v - power if k == var else v for k, v in enumerate(e)))
        for c, e in f.terms
        if e[var] >= power
    ]
    return f.ring.from_terms(terms)


def _binary_cubic_squarefree(f, i, j):
    """True when f is a cubic in variables i and j with three distinct roots."""
    if f.is_zero:
        return False
    field = f.ring.field
    coeffs = [0, 0, 0, 0]
    for c, e in f.terms:
        if sum(e) != 3 or e[i] + e[j] != 3:
            return False
        coeffs[e[i]] = c
    u = UnivariatePoly(field, coeffs)
    if u.degree < 2:
        return False  # at least a double root on the i = 0 axis
    return u.gcd(u.derivative()).degree == 0


def certify_genus11_plane_curve(curve, rng=None):
    """Certificate that a plane decic has ordinary triple points at (0:0:1)
    and (1:0:0), exactly 19 further double points, and a reduced double-point
    scheme; such a curve has geometric genus 36 - 2*3 - 19 = 11."""
    ring = curve.ring
    report = CertificateReport("genus-11 plane decic")
    i1, i2 = _triple_point_ideals(ring)
    f = next(g for g in curve.gens if not g.is_zero)
    report.add("curve degree", 10, f.degree)
    nodes = saturate(singular_locus(curve, 1), i1.multiply(i2), rng=rng)
    hd = hilbert_data(nodes)
    report.add("double points away from the triple points (codimension)", 2, hd.codim)
    if hd.codim == 2:
        report.add(
            "double points away from the triple points (degree)",
            _GENUS11_NODES,
            hd.degree,
        )
        report.add(
            "double point scheme reduced (codim of its singular locus)",
            3,
            hilbert_data(singular_locus(nodes, 2)).codim,
        )
    report.add(
        "triple point at (0:0:1) ordinary (tangent cone squarefree)",
        True,
        _binary_cubic_squarefree(_divide_power(f, 2, 7), 0, 1),
    )
    report.add(
        "triple point at (1:0:0) ordinary (tangent cone squarefree)",
        True,
        _binary_cubic_squarefree(_divide_power(f, 0, 7), 1, 2),
    )
    return report


def _genus11_candidate(ring, sub):
    """One search attempt: a decic through two tripled points and 19 doubled
    points, or None when the linear system is empty."""
    i1, i2 = _triple_point_ideals(ring)
    base = None
    for inner in range(32):
        pts = random_distinct_plane_points(
            _GENUS11_NODES, ring, sub.substream("nodes", inner)
        )
        if points_mutually_distinct([i1, i2, pts]):
            base = pts
            break
    if base is None:
        raise RetryExhausted("no admissible 19-point configuration")
    j = intersect(
        intersect(_ideal_power(i1, 3), _ideal_power(i2, 3)),
        saturate(base.square(), rng=sub),
    )
    system = j.graded_piece(10)
    if not system:
        return None
    if len(system) == 1:
        return system[0]
    for _ in range(8):
        f = _combination(ring, system, sub.field_elements(len(system), ring.field))
        if not f.is_zero:
            return f
    return None


def _g11_worker(args):
    p, names, seed, stream, idx = args
    ring = Ring(p, 3, names=tuple(names))
    sub = SeededRng(seed, tuple(stream)).substream("genus11", idx)
    try:
        f = _genus11_candidate(ring, sub)
    except RetryExhausted:
        return idx, None
    if f is None:
        return idx, None
    report = certify_genus11_plane_curve(
        Ideal(ring, (f,)), rng=sub.substream("certify")
    )
    return idx, (str(f) if report.passed else None)


def search_plane_genus11_curve(ring, rng, attempts=None, jobs=1):
    """Search for a genus-11 plane decic with two ordinary triple points.

    Each attempt draws 19 random double points, forms the ideal of curves
    through their squares and the cubes of the two fixed triple points, and
    tests for a degree-10 element.  The expected dimension of that system is
    binomial(12, 2) - 3*19 - 6*2 = -3, so hits occur only over small fields;
    the default budget is 2*p^4 attempts.  Returns (ideal, report, attempts
    used), with ideal and report None when the search fails.  With jobs > 1
    attempts run in worker processes and the lowest successful attempt index
    wins, so the result does not depend on scheduling.
    """
    if ring.nvars != 3:
        raise ValueError("expected a polynomial ring in three variables")
    if attempts is None:
        attempts = 2 * ring.p ** 4
    if jobs > 1:
        args = (
            (ring.p, list(ring.names), rng.seed, list(rng.stream), i)
            for i in range(attempts)
        )
        with multiprocessing.Pool(jobs) as pool:
            for idx, text in pool.imap(_g11_worker, args, chunksize=1):
                if text is None:
                    logger.debug("genus-11 attempt %d: no certified decic", idx)
                    continue
                curve = Ideal(ring, (ring.parse(text),))
                report = certify_genus11_plane_curve(
                    curve, rng=rng.substream("genus11", idx, "certify")
                )
                logger.info("genus-11 search succeeded on attempt %d", idx)
                return curve, report, idx + 1
        return None, None, attempts
    for i in range(attempts):
        sub = rng.substream("genus11", i)
        try:
            f = _genus11_candidate(ring, sub)
        except RetryExhausted:
            continue
        if f is None:
            logger.debug("genus-11 attempt %d: empty linear system", i)
            continue
        curve = Ideal(ring, (f,))
        report = certify_genus11_plane_curve(curve, rng=sub.substream("certify"))
        if report.passed:
            logger.info("genus-11 search succeeded on attempt %d", i)
            return curve, report, i + 1
        logger.info(
            "genus-11 attempt %d: decic failed certification: %s",
            i,
            report.failures(),
        )
    return None, None, attempts


# ---------------------------------------------------------------------------
# Genus 12, degree 13 in P^3 via a finite-length module

_HR_HILBERT = [0, 0, 5, 8, 6, 0, 0, 0]
_HR_NATURAL_BETTI = {
    (0, 2): 5,
    (1, 3): 12,
    (2, 4): 4,
    (2, 5): 4,
    (2, 6): 9,
    (3, 7): 16,
    (4, 8): 6,
}
_G12_IDEAL_BETTI = {(0, 0): 1, (1, 5): 2, (1, 6): 9, (2, 7): 16, (3, 8): 6}
_G12_EXT_BETTI = {(0, -1): 2, (0, 0): 4, (1, 1): 12}


def _betti_key(entries):
    return " ".join(f"{i},{j}:{c}" for (i, j), c in sorted(entries.items()))


def random_hartshorne_rao_module(ring, rng, max_attempts=32):
    """Minimal presentation S(-2)^5 <- S(-3)^12 of a random finite-length
    module with Hilbert function (5, 8, 6) in degrees (2, 3, 4).

    The transpose of a random 12 x 4 matrix of linear forms has an
    8-dimensional space of linear syzygies; five random constant combinations
    of them, transposed back, present the module.  Draws repeat until the
    Hilbert function and finite length are as stated.
    """
    if ring.nvars != 4:
        raise ValueError("expected a polynomial ring in four variables")
    for attempt in range(max_attempts):
        sub = rng.substream("hr-module", attempt)
        psi = random_graded_matrix(
            GradedFreeModule(ring, [3] * 12),
            GradedFreeModule(ring, [4] * 4),
            sub,
        )
        ker = syzygy_matrix(psi.transpose(), minimalize=True)
        cols = [j for j, t in enumerate(ker.source.twists) if t == -2]
        if len(cols) != 8:
            logger.debug("module draw %d: %d linear syzygies", attempt, len(cols))
            continue
        sel = ker.submatrix(range(ker.nrows), cols)
        combo = random_graded_matrix(
            GradedFreeModule(ring, [-2] * 8),
            GradedFreeModule(ring, [-2] * 5),
            sub,
        )
        pres = (sel * combo).transpose()
        hd = hilbert_data(pres)
        if hd.codim != 4:
            continue
        if [hd.hilbert_function(t) for t in range(8)] != _HR_HILBERT:
            continue
        return pres
    raise RetryExhausted(
        f"no module with Hilbert function (5, 8, 6) in {max_attempts} draws"
    )


def random_space_curve_genus12_degree13(ring, rng, max_attempts=32):
    """Smooth curve of genus 12 and degree 13 in P^3.

    Resolves a random finite-length module, composes the second differential
    with a random map from S(-4)^4 + S(-5)^2, and extracts the degree-zero
    syzygies of the transpose: their pairing against the differential spans
    the curve ideal.  The certificate checks codimension 2, degree 13, genus
    12, smoothness, the ideal's Betti table, and that the presentation of the
    canonical module is generated in the expected degrees with only linear
    relations (so the quadratic strand of the re-embedded canonical curve
    behaves as expected).  Returns (ideal, report).
    """
    if ring.nvars != 4:
        raise ValueError("expected a polynomial ring in four variables")
    for attempt in range(max_attempts):
        sub = rng.substream("genus12", attempt)
        try:
            pres = random_hartshorne_rao_module(ring, sub)
        except RetryExhausted:
            continue
        res = free_resolution(pres)
        if res.betti().entries != _HR_NATURAL_BETTI:
            logger.info(
                "genus-12 attempt %d: module resolution not natural", attempt
            )
            continue
        dd2 = res.maps[1]
        lift = random_graded_matrix(
            dd2.source, GradedFreeModule(ring, [4] * 4 + [5] * 2), sub
        )
        ker = syzygy_matrix((dd2 * lift).transpose(), minimalize=True)
        cols = [j for j, t in enumerate(ker.source.twists) if t == 0]
        if not cols:
            logger.info("genus-12 attempt %d: no degree-0 syzygy", attempt)
            continue
        pairing = ker.submatrix(range(ker.nrows), cols).transpose() * dd2
        gens = [e for row in pairing.entries for e in row if not e.is_zero]
        curve = Ideal(ring, tuple(Ideal(ring, tuple(gens)).mingens()))
        report = CertificateReport("genus-12 degree-13 space curve")
        hd = hilbert_data(curve)
        report.add("codimension", 2, hd.codim)
        if hd.codim == 2:
            report.add("degree", 13, hd.degree)
            report.add("genus", 12, hd.genus)
        certify_smooth_curve(curve, report)
        report.add(
            "ideal Betti table",
            _betti_key(_G12_IDEAL_BETTI),
            _betti_key(free_resolution(curve).betti().entries),
        )
        ext = ext_dual_presentation(curve)
        report.add(
            "canonical module presentation Betti",
            _betti_key(_G12_EXT_BETTI),
            _betti_key(ext.entries),
        )
        report.add(
            "canonical module relations all linear",
            True,
            petri_injective_certificate(ext),
        )
        if report.passed:
            return curve, report
        logger.info("genus-12 attempt %d failed: %s", attempt, report.failures())
    raise RetryExhausted(f"no certified genus-12 curve in {max_attempts} draws")


# ---------------------------------------------------------------------------
# Canonical genus-8 curves from Pfaffian quadrics, with marked points


class CurveWithMarkedPoints:
    """A curve ideal together with marked rational points (coordinate tuples
    and their ideals)."""

    def __init__(self, ideal, points, point_ideals):
        self.ideal = ideal
        self.points = points
        self.point_ideals = point_ideals

    def __repr__(self):
        return (
            f"CurveWithMarkedPoints({self.ideal!r}, {len(self.points)} points)"
        )


def _pluecker_ring(p):
    pairs = [(i, j) for j in range(6) for i in range(j)]
    names = tuple(f"p{i}{j}" for i, j in pairs)
    return Ring(p, 15, names=names), pairs


def _grassmann_quadrics(ring, pairs):
    """The 15 quadric Pfaffians cutting out G(2,6) in P^14."""
    index = {pair: k for k, pair in enumerate(pairs)}
    entries = []
    for i in range(6):
        row = []
        for j in range(6):
            if i < j:
                row.append(ring.variable(index[(i, j)]))
            elif i > j:
                row.append(-ring.variable(index[(j, i)]))
            else:
                row.append(ring.zero)
        entries.append(row)
    skew = GradedMatrix(
        GradedFreeModule(ring, [0] * 6),
        GradedFreeModule(ring, [1] * 6),
        entries,
        check=False,
    )
    return pfaffians(4, skew)


def _normalize_point(field, coords):
    k = max(i for i, c in enumerate(coords) if c)
    inv = field.inverse(coords[k])
    return tuple(c * inv % field.p for c in coords)


def random_canonical_genus8_with_8points(ring, rng, max_attempts=32):
    """Canonical genus-8 curve in P^7, with 8 marked rational points.

    Eight random planes in six-space give eight points on G(2,6) in Pluecker
    coordinates; when they span a P^7, the 15 Pfaffian quadrics of the
    Grassmannian restrict to that span, and the substitution (solving the
    seven linear equations of the span in row echelon form) produces the
    ideal of a canonical curve of genus 8 through the images of the points.
    Degenerate draws (points not spanning, wrong invariants, collisions) are
    rejected and redrawn.
    """
    if ring.nvars != 8:
        raise ValueError("expected a polynomial ring in eight variables")
    field = ring.field
    p = ring.p
    plueck, pairs = _pluecker_ring(p)
    quadrics = _grassmann_quadrics(plueck, pairs)
    for attempt in range(max_attempts):
        sub = rng.substream("pfaffian", attempt)
        pts = []
        for k in range(8):
            prng = sub.substream("plane", k)
            for _ in range(32):
                a = [prng.field_elements(6, field) for _ in range(2)]
                coords = tuple(
                    (a[0][i] * a[1][j] - a[0][j] * a[1][i]) % p for i, j in pairs
                )
                if any(coords):
                    pts.append(coords)
                    break
        if len(pts) != 8:
            continue
        for q in quadrics:
            for c in pts:
                if q.evaluate(c) != 0:
                    raise AssertionError("marked point fails the quadrics")
        coords = np.array(pts, dtype=np.int64)
        if rank(coords, p) != 8:
            logger.debug("pfaffian draw %d: points span too little", attempt)
            continue
        echelon, piv = rref(nullspace(coords, p), p)
        npv = [c for c in range(15) if c not in piv]
        images = [None] * 15
        for t, c in enumerate(npv):
            images[c] = ring.variable(t)
        for row_i, c in enumerate(piv):
            acc = ring.zero
            for t, cc in enumerate(npv):
                v = int(echelon[row_i, cc])
                if v:
                    acc = acc - ring.variable(t) * ring.constant(v)
            images[c] = acc
        curve = Ideal(
            ring,
            tuple(
                Ideal(
                    ring, tuple(q.substitute(ring, images) for q in quadrics)
                ).mingens()
            ),
        )
        img_pts = [tuple(int(c[k]) for k in npv) for c in pts]
        keys = {_normalize_point(field, ic) for ic in img_pts}
        if len(keys) != 8:
            continue
        for ic in img_pts:
            if not all(g.evaluate(ic) == 0 for g in curve.gens):
                raise AssertionError("marked point fails curve membership")
        if hilbert_data(curve).triple() != (6, 14, 8):
            logger.info("pfaffian draw %d: wrong invariants", attempt)
            continue
        return CurveWithMarkedPoints(
            curve, img_pts, [point_ideal(ring, ic) for ic in img_pts]
        )
    raise RetryExhausted(
        f"no canonical genus-8 section with marked points in {max_attempts} draws"
    )


# ---------------------------------------------------------------------------
# Genus 8, degree 14 in P^6

_G8D14_BETTI = {
    (0, 0): 1,
    (1, 2): 7,
    (2, 4): 35,
    (3, 5): 56,
    (4, 6): 35,
    (5, 7): 8,
}


def _intersect_all(ideals):
    meet = ideals[0]
    for i in ideals[1:]:
        meet = intersect(meet, i)
    return meet


def _monomial_value(mono, pt, p):
    v = 1
    for e, c in zip(mono, pt):
        if e:
            v = v * pow(int(c), e, p) % p
    return v


def _colon_piece(modulus, multipliers, degree, points=()):
    """Basis of the degree-d piece of (modulus : multipliers), intersected
    with the forms vanishing at the given points.

    Avoids computing the colon ideal itself: a form f of the given degree
    lies in the piece exactly when every product f*m reduces to zero against
    the Groebner basis of the modulus, which is one linear condition block
    per multiplier, solved together as a nullspace.
    """
    ring = modulus.ring
    gbm = modulus.gb()
    ms = ring.monomials(degree)
    blocks = []
    for m in multipliers:
        std = modulus.standard_monomials(degree + m.degree)
        index = {mm: i for i, mm in enumerate(std)}
        block = np.zeros((len(std), len(ms)), dtype=np.int64)
        for col, mono in enumerate(ms):
            nf = gbm.normal_form(ring.from_terms([(1, mono)]) * m)
            for c, e in nf.terms:
                block[index[e], col] = c
        blocks.append(block)
    for pt in points:
        blocks.append(
            np.array(
                [[_monomial_value(mono, pt, ring.p) for mono in ms]],
                dtype=np.int64,
            )
        )
    a = np.vstack(blocks) if blocks else np.zeros((0, len(ms)), dtype=np.int64)
    return [
        ring.from_terms([(int(c), ms[i]) for i, c in enumerate(v) if c])
        for v in nullspace(a, ring.p)
    ]


def _span_complement(ring, basis, modulo_basis, degree):
    """Members of basis extending the span of modulo_basis in degree d."""
    ms = ring.monomials(degree)
    index = {m: i for i, m in enumerate(ms)}

    def vec(f):
        v = [0] * len(ms)
        for c, e in f.terms:
            v[index[e]] = c
        return v

    span = RowSpan(len(ms), ring.p)
    span.add_batch([vec(f) for f in modulo_basis])
    return [f for f in basis if span.add(vec(f))]


def random_normal_curve_genus8_degree14(ring, rng, max_attempts=32):
    """Genus-8 curve of degree 14 in P^6, embedded by quadrics through a
    residual divisor on a canonical curve.

    On a Pfaffian canonical genus-8 curve with marked points, a hyperplane
    through the first four points leaves a residual divisor E1 of degree 10;
    the quadrics through E1 and the last four points cut a 7-dimensional
    system (modulo the curve's own quadrics) mapping the curve to P^6 with
    degree 28 - 10 - 4 = 14.  The image ideal is recovered by linear algebra
    through degree 3 and certified by its invariants and Betti table.
    Returns (ideal, report).
    """
    if ring.nvars != 7:
        raise ValueError("expected a polynomial ring in seven variables")
    big = Ring(ring.p, 8)
    for attempt in range(max_attempts):
        sub = rng.substream("genus8-normal", attempt)
        try:
            marked = random_canonical_genus8_with_8points(big, sub)
        except RetryExhausted:
            continue
        icanon = marked.ideal
        d1 = _intersect_all(marked.point_ideals[:4])
        lin = [g for g in d1.mingens() if g.degree == 1]
        if len(lin) != 4:
            continue
        h1 = _combination(big, lin, sub.field_elements(len(lin), big.field))
        if h1.is_zero:
            continue
        section = icanon + Ideal(big, (h1,))
        report = CertificateReport("genus-8 degree-14 curve in P^6")
        residual = _colon_piece(section, d1.mingens(), 2)
        report.add("quadrics through the residual divisor", 26, len(residual))
        system = _colon_piece(section, d1.mingens(), 2, marked.points[4:])
        reps = _span_complement(big, system, icanon.graded_piece(2), 2)
        report.add("embedding system dimension", 7, len(reps))
        if not report.passed:
            logger.info(
                "genus-8 embedding attempt %d failed: %s",
                attempt,
                report.failures(),
            )
            continue
        curve = ring_map_kernel_linear(reps, ring, icanon, bound=3)
        hd = hilbert_data(curve)
        report.add("codimension", 5, hd.codim)
        if hd.codim == 5:
            report.add("degree", 14, hd.degree)
            report.add("genus", 8, hd.genus)
        try:
            table = betti_via_koszul(curve, rows=range(3))
        except ValueError:
            logger.info("genus-8 embedding attempt %d: Betti window failed", attempt)
            continue
        report.add(
            "Betti table", _betti_key(_G8D14_BETTI), _betti_key(table.entries)
        )
        report.add("linear normality (property N1)", True, satisfies_np(table, 1))
        if report.passed:
            return curve, report
        logger.info(
            "genus-8 embedding attempt %d failed: %s", attempt, report.failures()
        )
    raise RetryExhausted(
        f"no certified genus-8 degree-14 curve in {max_attempts} draws"
    )


# ---------------------------------------------------------------------------
# Genus 14, degree 18 in P^6 by linkage


def random_curve_genus14(ring, rng, certify=False, max_attempts=32):
    """Genus-14 curve of degree 18 in P^6, linked to a genus-8 curve of
    degree 14 by five random quadrics through it.

    The two curves together form a complete intersection of five quadrics
    (arithmetic genus 49, degree 32); the residual of the genus-8 curve has
    degree 18 and genus 14.  The residual ideal is assembled from the degree-2
    and degree-3 pieces of the colon ideal (its expected generators), and the
    certified invariants rule out draws where higher-degree generators would
    be required.  With certify=True the report also verifies
    smoothness in stages: the singular scheme of the complete intersection
    consists of 28 points in codimension 6, and adding the 5 x 5 jacobian
    minors of four quadrics and one cubic of the curve ideal empties it.
    Returns (ideal, report).
    """
    if ring.nvars != 7:
        raise ValueError("expected a polynomial ring in seven variables")
    for attempt in range(max_attempts):
        sub = rng.substream("genus14", attempt)
        try:
            base, _ = random_normal_curve_genus8_degree14(ring, sub)
        except RetryExhausted:
            continue
        quads = [g for g in base.gens if g.degree == 2]
        if len(quads) != 7:
            continue
        rows = None
        for _ in range(8):
            cand = [sub.field_elements(7, ring.field) for _ in range(5)]
            if rank(np.array(cand, dtype=np.int64), ring.p) == 5:
                rows = cand
                break
        if rows is None:
            continue
        ci = Ideal(ring, tuple(_combination(ring, quads, row) for row in rows))
        pieces = _colon_piece(ci, base.gens, 2) + _colon_piece(ci, base.gens, 3)
        curve = Ideal(ring, tuple(Ideal(ring, tuple(pieces)).mingens()))
        report = CertificateReport("genus-14 degree-18 curve in P^6")
        hd = hilbert_data(curve)
        report.add("codimension", 5, hd.codim)
        if hd.codim == 5:
            report.add("degree", 18, hd.degree)
            report.add("genus", 14, hd.genus)
        if not report.passed:
            logger.info(
                "genus-14 attempt %d failed: %s", attempt, report.failures()
            )
            continue
        if certify:
            sing_ci = Ideal(
                ring, ci.gens + tuple(minors(5, jacobian(list(ci.gens))))
            )
            hs = hilbert_data(sing_ci)
            report.add(
                "complete intersection singular locus (codimension)", 6, hs.codim
            )
            report.add(
                "complete intersection singular locus (degree)", 28, hs.degree
            )
            gens = curve.gens
            cquads = [g for g in gens if g.degree == 2]
            ccubics = [g for g in gens if g.degree == 3]
            if len(cquads) < 4 or not ccubics:
                logger.info("genus-14 attempt %d: unexpected generator degrees", attempt)
                continue
            extra = minors(5, jacobian(cquads[:4] + [ccubics[0]]))
            sing = Ideal(ring, sing_ci.gens + tuple(extra))
            report.add(
                "curve singular locus empty (codimension)",
                7,
                hilbert_data(sing).codim,
            )
            pa = 2 ** 5 * (5 * 2 - 7) // 2 + 1
            report.add("complete intersection arithmetic genus", 49, pa)
            if hd.codim == 5 and hs.codim == 6:
                report.add(
                    "linked-curve genus bookkeeping",
                    8,
                    pa - hd.genus - hs.degree + 1,
                )
        if report.passed:
            return curve, report
        logger.info("genus-14 attempt %d failed: %s", attempt, report.failures())
    raise RetryExhausted(f"no certified genus-14 curve in {max_attempts} draws")


# ---------------------------------------------------------------------------
# Genus 7, degree 14 in P^7

_G7D14_BETTI = {
    (0, 0): 1,
    (1, 2): 14,
    (2, 3): 28,
    (3, 5): 56,
    (4, 6): 70,
    (5, 7): 36,
    (6, 8): 7,
}


def _coords_of_point(ideal):
    """Coordinates of the projective point cut out by linear forms."""
    ring = ideal.ring
    rows = []
    for g in ideal.gens:
        v = [0] * ring.nvars
        for c, e in g.terms:
            v[e.index(1)] = c
        rows.append(v)
    ns = nullspace(np.array(rows, dtype=np.int64), ring.p)
    if ns.shape[0] != 1:
        raise ValueError("ideal does not cut out a single point")
    return tuple(int(x) for x in ns[0])


def random_genus7_degree14_curve(rng, p=10007, max_attempts=32):
    """Genus-7 curve of degree 14 in P^7 whose quadrics and cubics present
    the homogeneous coordinate ring with linear first syzygies (property N2).

    Start from a plane septic with 8 nodes (geometric genus
    binomial(6,2) - 8 = 7), choose a divisor D of 14 distinct smooth rational
    points on it, and compute the residual E of 2*Delta + D in a sextic
    section through D and the nodes.
    The sextics through E and the nodes form an 8-dimensional system mapping
    the curve to P^7 with degree 42 - 12 - 16 = 14; the image ideal is
    recovered by linear algebra through degree 3.  Certifies degree 14, genus
    7, the full Betti table in the quadratic window, and property N2.
    Returns (ideal, betti table).
    """
    plane = Ring(p, 3)
    target = Ring(p, 8, names=tuple(f"y{i}" for i in range(8)))
    field = plane.field
    for attempt in range(max_attempts):
        sub = rng.substream("genus7", attempt)
        try:
            nodes = random_distinct_plane_points(8, plane, sub)
        except RetryExhausted:
            continue
        sat2 = saturate(nodes.square(), rng=sub)
        system = sat2.graded_piece(7)
        if not system:
            continue
        f = _combination(plane, system, sub.field_elements(len(system), field))
        if f.is_zero:
            continue
        septic = Ideal(plane, (f,))
        nodal = certify_nodal_plane_curve(septic, 8)
        if not nodal.passed:
            logger.info(
                "genus-7 attempt %d: septic not nodal: %s",
                attempt,
                nodal.failures(),
            )
            continue
        prng = sub.substream("points")
        pids, seen = [], set()
        try:
            for k in range(200):
                if len(pids) == 14:
                    break
                pid = random_rational_point(septic, prng.substream(k))
                coords = _coords_of_point(pid)
                key = _normalize_point(field, coords)
                if key in seen:
                    continue
                if all(g.evaluate(coords) == 0 for g in nodes.gens):
                    continue  # the point is a node
                seen.add(key)
                pids.append(pid)
        except RetryExhausted:
            continue
        if len(pids) < 14:
            logger.info("genus-7 attempt %d: too few rational points", attempt)
            continue
        divisor = _intersect_all(pids)
        if hilbert_data(divisor).degree != 14:
            continue
        dj = intersect(divisor, nodes)
        if hilbert_data(dj).degree != 22:
            continue
        sextics = dj.graded_piece(6)
        if not sextics:
            continue
        h = _combination(plane, sextics, sub.field_elements(len(sextics), field))
        if h.is_zero:
            continue
        section = Ideal(plane, (h,) + septic.gens)
        residual = ideal_quotient(ideal_quotient(section, sat2), divisor)
        if hilbert_data(residual).degree != 42 - 14 - 2 * 8:
            logger.info("genus-7 attempt %d: residual degree off", attempt)
            continue
        embed = intersect(residual, nodes).graded_piece(6)
        if len(embed) != 8:
            logger.info(
                "genus-7 attempt %d: embedding system dimension %d",
                attempt,
                len(embed),
            )
            continue
        curve = ring_map_kernel_linear(embed, target, septic, bound=3)
        if hilbert_data(curve).triple() != (6, 14, 7):
            logger.info("genus-7 attempt %d: wrong image invariants", attempt)
            continue
        try:
            table = betti_via_koszul(curve, rows=range(3))
        except ValueError:
            continue
        if table.entries != _G7D14_BETTI:
            logger.info("genus-7 attempt %d: unexpected Betti table", attempt)
            continue
        if not satisfies_np(table, 2):
            continue
        return curve, table
    raise RetryExhausted(
        f"no certified genus-7 degree-14 curve in {max_attempts} draws"
    )
