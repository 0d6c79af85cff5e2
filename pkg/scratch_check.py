import importlib.util
import math

import numpy as np

import sys

spec = importlib.util.spec_from_file_location("geometry", "src/hypersticks/geometry.py")
g = importlib.util.module_from_spec(spec)
sys.modules["geometry"] = g
spec.loader.exec_module(g)

# metric basics
o = g.ORIGIN
p = g.from_disc(g.DiscPoint(0.5, 0.0))
print("ln3 check:", p.rho, math.log(3.0), abs(p.rho - math.log(3)) < 1e-14)
print("dist collinear:", g.dist(g.HPoint(2, 0), g.HPoint(5, 0)))
print("chord:", g.chord_distance(3, math.pi / 2), 2 * math.asinh(math.sinh(3) * math.sin(math.pi / 4)))

# disc round trip
rng = np.random.default_rng(0)
errs = []
for _ in range(1000):
    pt = g.HPoint(rng.uniform(0, 20), rng.uniform(0, 2 * math.pi))
    back = g.from_disc(g.to_disc(pt))
    errs.append(g.dist(pt, back))
print("disc roundtrip max:", max(errs))

# frame transforms round trip
errs = []
for _ in range(2000):
    pt = (rng.uniform(0, 15), rng.uniform(0, 2 * math.pi))
    anc = (rng.uniform(0, 15), rng.uniform(0, 2 * math.pi))
    rl, tl = g._to_frame(pt[0], pt[1], anc[0], anc[1])
    rb, tb = g._from_frame(rl, tl, anc[0], anc[1])
    errs.append(g._dist(rb, tb, pt[0], pt[1]))
print("to/from frame roundtrip max:", max(errs))

# distance preserved in frames
errs = []
for _ in range(2000):
    a = (rng.uniform(0, 15), rng.uniform(0, 2 * math.pi))
    b = (rng.uniform(0, 15), rng.uniform(0, 2 * math.pi))
    anc = (rng.uniform(0, 15), rng.uniform(0, 2 * math.pi))
    ra, ta = g._to_frame(a[0], a[1], anc[0], anc[1])
    rb, tb = g._to_frame(b[0], b[1], anc[0], anc[1])
    errs.append(abs(g._dist(ra, ta, rb, tb) - g._dist(a[0], a[1], b[0], b[1])))
print("frame isometry max err:", max(errs))

# translate_to
x = g.HPoint(2, 0)
print("translate collinear:", g.translate_to(x, g.HPoint(1, 0)))  # expect (3, 0)
print("translate o:", g.translate_to(x, o))  # expect (2,0)

# isometry property of translate_to
errs = []
for _ in range(500):
    x = g.HPoint(rng.uniform(0, 10), rng.uniform(0, 2 * math.pi))
    pp = g.HPoint(rng.uniform(0, 10), rng.uniform(0, 2 * math.pi))
    qq = g.HPoint(rng.uniform(0, 10), rng.uniform(0, 2 * math.pi))
    errs.append(abs(g.dist(g.translate_to(x, pp), g.translate_to(x, qq)) - g.dist(pp, qq)))
print("translate isometry max err:", max(errs))

# geodesic_point / bearing consistency
errs = []
for _ in range(500):
    pt = g.HPoint(rng.uniform(0.01, 10), rng.uniform(0, 2 * math.pi))
    beta = rng.uniform(0, 2 * math.pi)
    s = rng.uniform(0.01, 10)
    q = g.geodesic_point(pt, beta, s)
    errs.append(abs(g.dist(pt, q) - s))
    errs.append(abs(g.wrap_signed(g.bearing(pt, q) - beta)))
print("geodesic/bearing max err:", max(errs))

# make_stick invariants
st = g.make_stick(o, 0.0, 2.0)
print("stick at o endpoints:", st.endpoints.a, st.endpoints.b)
errs = []
for _ in range(500):
    x = g.HPoint(rng.uniform(0, 8), rng.uniform(0, 2 * math.pi))
    phi = rng.uniform(0, math.pi)
    L = rng.uniform(0.5, 6)
    stk = g.make_stick(x, phi, L)
    e = stk.endpoints
    errs.append(abs(g.dist(e.a, e.b) - L))
    errs.append(abs(g.dist(stk.center, e.a) - L / 2))
    errs.append(abs(g.dist(stk.center, e.b) - L / 2))
print("stick invariants max err:", max(errs))

# intersections
s1 = g.make_stick(o, 0.0, 2.0)
s2 = g.make_stick(o, math.pi / 2, 2.0)
print("cross at o:", g.segments_intersect(s1, s2))
s3 = g.make_stick(g.HPoint(10, math.pi / 2), 0.0, 2.0)
print("far apart:", g.segments_intersect(s1, s3))

# collinear overlap: two sticks along the axis
s4 = g.make_stick(g.HPoint(0.5, 0.0), 0.0, 2.0)  # spans [-0.5, 1.5]
print("collinear overlap midpoint:", g.segments_intersect(s1, s4))  # overlap [-0.5,1] -> mid 0.25

# triangle
tr = g.triangle_from_sides(1.0, 1.0, 1.0)
print("equilateral alpha:", tr.alpha)

# ideal gap
print("ideal gap pi/4:", g.ideal_angle_gap(math.pi / 4, math.pi / 4), math.acosh(3))

# hit triple perpendicular
stk = g.make_stick(g.HPoint(3, 0), math.pi / 2, 2.0)
print("hit perp:", g.hit_triple(stk))
stk2 = g.make_stick(o, 0.0, 2.0)
print("hit collinear:", g.hit_triple(stk2))

# ideal endpoints vs far point limit
errs = []
for _ in range(300):
    pt = g.HPoint(rng.uniform(0.01, 6), rng.uniform(0, 2 * math.pi))
    beta = rng.uniform(0, 2 * math.pi)
    th_inf = g.ideal_endpoint(pt, beta)
    far = g.geodesic_point(pt, beta, 35.0)
    errs.append(abs(g.wrap_signed(th_inf - far.theta)))
    errs.append(abs(g.wrap_signed(g.bearing_to_ideal(pt, th_inf) - beta)))
print("ideal endpoint max err:", max(errs))

# sigma / Frame sanity
fr = g.Frame(g.HPoint(2.0, 0.3), axis=0.7)
errs = []
for _ in range(500):
    pt = g.HPoint(rng.uniform(0, 8), rng.uniform(0, 2 * math.pi))
    q = fr.to_global_point(pt)
    back = fr.to_local_point(q)
    errs.append(g.dist(pt, back))
print("frame point roundtrip max:", max(errs))

errs = []
for _ in range(500):
    pt = g.HPoint(rng.uniform(0.01, 8), rng.uniform(0, 2 * math.pi))
    beta = rng.uniform(0, 2 * math.pi)
    s = rng.uniform(0.1, 3)
    q_local = g.geodesic_point(pt, beta, s)
    # transporting the bearing and walking in global coords must agree
    gp = fr.to_global_point(pt)
    gb = fr.to_global_bearing(pt, beta)
    q_global = g.geodesic_point(gp, gb, s)
    errs.append(g.dist(fr.to_global_point(q_local), q_global))
print("frame bearing transport max:", max(errs))
