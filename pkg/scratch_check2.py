import importlib.util
import math
import sys
import time

import numpy as np

spec = importlib.util.spec_from_file_location("geometry", "src/hypersticks/geometry.py")
g = importlib.util.module_from_spec(spec)
sys.modules["geometry"] = g
spec.loader.exec_module(g)

rng = np.random.default_rng(42)

# ---- triple -> stick -> triple round trip
n = 2000
L = 4.0
rp = rng.uniform(0, 6, n)
ph = np.arccos(1 - 2 * rng.uniform(0, 1, n))  # sin-density angles
ro = rng.uniform(-L / 2, L / 2, n)
cr, cth, phi = g._sticks_from_triples(rp, ph, ro, L)
alph = g._direction_from_phi(cr, cth, phi)
hit, rp2, ph2, ro2 = g._ray_hits(cr, cth, alph, np.full(n, L), 0.0)
print("all hit:", bool(np.all(hit)))
print("max |rho' err|:", np.max(np.abs(rp2 - rp)))
print("max |phi err|:", np.max(np.abs(ph2 - ph)))
print("max |r err|:", np.max(np.abs(ro2 - ro)))

# mirror symmetry: reflecting across the axis maps (rho', phi, r) -> (rho', pi-phi, -r)
crm, cthm, phim = g._sticks_from_triples(rp, math.pi - ph, -ro, L)
d = g._dist(crm, np.mod(-cthm, 2 * math.pi), cr, cth)
print("mirror center symmetry max:", np.max(d))

# ---- stick_from_triple scalar conventions
# perpendicular bisected: (3, pi/2, 0) -> stick centered (3,0) mark pi/2
cr1, ct1, f1 = g._sticks_from_triples(np.array([3.0]), np.array([math.pi / 2]), np.array([0.0]), 2.0)
print("perp case:", cr1[0], ct1[0], f1[0])

# offset extremal: r = L/2 -> one endpoint on the ray
cr2, ct2, f2 = g._sticks_from_triples(np.array([2.0]), np.array([math.pi / 3]), np.array([1.0]), 2.0)
stk = g.Stick(g.HPoint(float(cr2[0]), float(ct2[0])), float(f2[0]), 2.0)
e = stk.endpoints
print("endpoint-on-ray:", e.a, e.b, "-> dist of endpoints to axis point (2,0):",
      g.dist(e.a, g.HPoint(2, 0)), g.dist(e.b, g.HPoint(2, 0)))

# ---- intersection kernel vs discretization oracle
def min_dist_oracle(s1, s2, n1=400, n2=400, refine=3):
    # dense sampling + local refinement; independent of the sign-test kernel
    r1, t1, a1, l1 = s1
    r2, t2, a2, l2 = s2
    lo1, hi1, lo2, hi2 = -l1 / 2, l1 / 2, -l2 / 2, l2 / 2
    best = None
    for _ in range(refine + 1):
        s1s = np.linspace(lo1, hi1, n1)
        s2s = np.linspace(lo2, hi2, n2)
        b1 = np.where(s1s >= 0, a1, a1 + math.pi)
        p1r, p1t = g._from_frame(np.abs(s1s), b1, r1, t1)
        b2 = np.where(s2s >= 0, a2, a2 + math.pi)
        p2r, p2t = g._from_frame(np.abs(s2s), b2, r2, t2)
        dm = g._dist(p1r[:, None], p1t[:, None], p2r[None, :], p2t[None, :])
        i, j = np.unravel_index(np.argmin(dm), dm.shape)
        best = dm[i, j]
        w1 = (hi1 - lo1) / (n1 - 1)
        w2 = (hi2 - lo2) / (n2 - 1)
        lo1n, hi1n = max(-l1 / 2, s1s[i] - w1), min(l1 / 2, s1s[i] + w1)
        lo2n, hi2n = max(-l2 / 2, s2s[j] - w2), min(l2 / 2, s2s[j] + w2)
        lo1, hi1, lo2, hi2 = lo1n, hi1n, lo2n, hi2n
    return float(best)

t0 = time.time()
mismatch = 0
band = 0
checked = 0
L1 = 2.0
for k in range(300):
    s1 = (rng.uniform(0, 5), rng.uniform(0, 2 * math.pi), rng.uniform(0, 2 * math.pi), L1)
    s2 = (rng.uniform(0, 5), rng.uniform(0, 2 * math.pi), rng.uniform(0, 2 * math.pi), L1)
    hit, _, _ = g._pair_hits(*s1, *s2)
    md = min_dist_oracle(s1, s2)
    if 1e-10 < md < 1e-8:
        band += 1
        continue
    checked += 1
    oracle_hit = md <= 1e-10
    if bool(hit) != oracle_hit:
        mismatch += 1
        print("MISMATCH", s1, s2, "kernel:", bool(hit), "oracle min dist:", md)
print(f"oracle comparison: {checked} checked, {band} in band, {mismatch} mismatches, {time.time()-t0:.1f}s")

# sanity on very-close pairs: force crossing cases
cross_n = 0
for k in range(200):
    # build two sticks through a common point -> must intersect
    p = g.HPoint(rng.uniform(0, 5), rng.uniform(0, 2 * math.pi))
    b1, b2 = rng.uniform(0, 2 * math.pi, 2)
    u1 = rng.uniform(-0.9, 0.9)
    u2 = rng.uniform(-0.9, 0.9)
    c1 = g.geodesic_point(p, b1, u1)
    c2 = g.geodesic_point(p, b2, u2)
    a1 = g.bearing(c1, p) + math.pi if u1 >= 0 else g.bearing(c1, p)
    a2 = g.bearing(c2, p) + math.pi if u2 >= 0 else g.bearing(c2, p)
    hit, pr, pt = g._pair_hits(c1.rho, c1.theta, a1, 2.0, c2.rho, c2.theta, a2, 2.0)
    assert bool(hit), (p, c1, c2)
    q = g.HPoint(float(pr), float(pt))
    assert g.dist(q, p) < 1e-8, (g.dist(q, p))
    cross_n += 1
print("constructed crossings all detected:", cross_n)
