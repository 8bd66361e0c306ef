from fpcurves.arith import SeededRng
from fpcurves.groebner import Ideal
from fpcurves.ring import Ring
from fpcurves.geometry import (
    RetryExhausted,
    certify_nodal_plane_curve,
    certify_smooth_curve,
    decomposition_tally,
    random_rational_point,
    singular_locus,
)
from fpcurves.homology import hilbert_data

R = Ring(10007, 3, names=("x0", "x1", "x2"))
x0, x1, x2 = R.variables

# smooth conic: singular locus empty (codim 3)
conic = Ideal(R, (x0 * x2 - x1 * x1,))
assert hilbert_data(singular_locus(conic, 1)).codim == 3
rep = certify_nodal_plane_curve(conic, 0)
assert rep.passed, rep.to_json()

# nodal cubic x1^2 x2 - x0^2 (x0 + x2): node at (0:0:1)
nodal = Ideal(R, (x1 * x1 * x2 - x0 * x0 * (x0 + x2),))
sl = singular_locus(nodal, 1)
d = hilbert_data(sl)
assert d.codim == 2 and d.degree == 1, d.triple()
rep = certify_nodal_plane_curve(nodal, 1)
assert rep.passed, rep.to_json()

# cuspidal cubic x1^2 x2 - x0^3: check (b) fails (non-reduced singular scheme)
cusp = Ideal(R, (x1 * x1 * x2 - x0 * x0 * x0,))
rep = certify_nodal_plane_curve(cusp, 1)
assert not rep.passed, rep.to_json()
labels = [c["check"] for c in rep.failures()]
print("cusp failures:", labels)

# smooth space curve: twisted cubic in P^3
R4 = Ring(10007, 4, names=("x", "y", "z", "w"))
x, y, z, w = R4.variables
tc = Ideal(R4, (x * z - y * y, x * w - y * z, y * w - z * z))
rep = certify_smooth_curve(tc)
assert rep.passed, rep.to_json()

# two lines meeting at a point: singular
lines = Ideal(R4, (x, y * z))  # V(x, y) U V(x, z) meet at (0:0:0:1)
rep = certify_smooth_curve(lines)
assert not rep.passed, rep.to_json()

# rational points on the conic
rng = SeededRng(7)
seen = set()
for i in range(10):
    pt = random_rational_point(conic, rng.substream("pt", i))
    assert all(len(g.terms) <= 2 and g.degree == 1 for g in pt.gens)
    seen.add(tuple(str(g) for g in pt.gens))
assert len(seen) > 3, seen

# plane curve with no F_3 points: x0^4 + (x1^2 + x2^2)^2 (2 is a non-square
# mod 3, so both summands must vanish, which forces x0=x1=x2=0)
R3f = Ring(3, 3, names=("x0", "x1", "x2"))
a0, a1, a2 = R3f.variables
nopts = Ideal(R3f, (a0**4 + (a1 * a1 + a2 * a2) ** 2,))
assert all(
    nopts.gens[0].evaluate(c) != 0
    for c in __import__("itertools").product(range(3), repeat=3)
    if any(c)
)
try:
    random_rational_point(nopts, SeededRng(1), max_trials=60)
except RetryExhausted:
    pass
else:
    raise AssertionError("expected RetryExhausted")

# decomposition tally on the conic: only {2} and {1,1} (rarely {1} when the
# base point lies on the curve), {2} frequency near 1/2
tally = decomposition_tally(conic, 400, SeededRng(11))
assert set(tally) <= {(2,), (1, 1), (1,)}, tally
frac2 = tally.get((2,), 0) / 400
assert 0.42 <= frac2 <= 0.58, frac2
print("conic tally:", tally)

# jobs > 1 gives the identical tally
tally2 = decomposition_tally(conic, 400, SeededRng(11), jobs=3)
assert tally2 == tally

# degree-1 curve: every partition is {1}
line = Ideal(R, (x0 + 2 * x1 - x2,))
tl = decomposition_tally(line, 50, SeededRng(2))
assert set(tl) == {(1,)}, tl

print("all geometry smoke tests passed")
