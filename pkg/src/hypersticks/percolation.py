"""Connectivity of realized stick sets.

Builds the intersection graph of a sample (broad phase: polar
annulus-sector buckets sized to the stick length; narrow phase: the exact
segment test), labels connected clusters, and provides the window events
used by the experiments: annulus crossings, two-arm counts, the
branching-tree embedding in nested disjoint half-planes, the subcritical
cluster explorer, and the axis blocking indicator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from hypersticks.geometry import (
    EPS_GEO,
    Frame,
    HalfPlane,
    HPoint,
    ORIGIN,
    Stick,
    _direction_from_phi,
    _dist,
    _from_frame,
    _geo_frame,
    _lift,
    _mdot,
    _pair_hits,
    _sticks_from_triples,
    bearing,
    bearing_to_ideal,
    dist,
    geodesic_point,
    hit_triple,
    make_stick,
    perpendicular_halfplane,
    stick_reach,
    wrap_signed,
)
from hypersticks.process import (
    _ROLE_EMBED,
    _ROLE_EXPLORE,
    ProcessConfig,
    StickSample,
    TripleBox,
    mu_box,
    offspring_mean,
    sample_ball_at,
    sample_hit_triples,
    stream,
)

#: The half-plane geometry of the embedding needs the stick length well into
#: its asymptotic regime; at L = 20 the slack 4*exp(-L/4) is below 0.03.
MIN_EMBED_LENGTH = 20.0

_PAIR_CHUNK = 2_000_000


class EmbeddingGeometryError(RuntimeError):
    """Half-plane containment/disjointness failed; the stick length is below
    the regime the embedding construction needs."""


# ---------------------------------------------------------------------------
# union-find and cluster labelings
# ---------------------------------------------------------------------------


class UnionFind:
    """Array union-find with path halving and union by rank."""

    def __init__(self, n: int):
        self.parent = np.arange(n, dtype=np.int64)
        self.rank = np.zeros(n, dtype=np.int8)
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return int(x)

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        self.count -= 1

    def labels(self) -> np.ndarray:
        return np.array([self.find(i) for i in range(len(self.parent))], dtype=np.int64)


@dataclass
class ClusterLabeling:
    """Partition of a sample's sticks into connected clusters.

    Two sticks share a label exactly when they are linked through a chain
    of pairwise-intersecting sticks.  parent/rank form the (flattened)
    union-find forest of the partition.
    """

    parent: np.ndarray
    rank: np.ndarray
    labels: np.ndarray
    cluster_count: int

    @classmethod
    def from_labels(cls, labels: np.ndarray, cluster_count: int) -> "ClusterLabeling":
        n = labels.size
        rep = np.full(cluster_count, n, dtype=np.int64)
        np.minimum.at(rep, labels, np.arange(n, dtype=np.int64))
        parent = rep[labels] if n else np.zeros(0, dtype=np.int64)
        return cls(parent, np.zeros(n, dtype=np.int8), labels.astype(np.int64), int(cluster_count))

    def label_of(self, i: int) -> int:
        return int(self.labels[i])

    def same_cluster(self, i: int, j: int) -> bool:
        return self.labels[i] == self.labels[j]

    def to_table(self) -> np.ndarray:
        """(stick_index, cluster_id) rows."""
        n = self.labels.size
        return np.column_stack([np.arange(n, dtype=np.int64), self.labels])


# ---------------------------------------------------------------------------
# broad phase: annulus-sector buckets
# ---------------------------------------------------------------------------


def _sector_count(band: np.ndarray, delta: float) -> np.ndarray:
    outer = (band.astype(float) + 1.0) * delta
    return np.maximum(1, np.ceil(2.0 * math.pi * np.sinh(outer) / delta)).astype(np.int64)


def candidate_pairs(rho: np.ndarray, theta: np.ndarray, length: float) -> tuple[np.ndarray, np.ndarray]:
    """Superset of index pairs (i < j) with center distance <= length.

    Sticks of length L intersect only if their centers are within L, so
    bucketing centers by annulus-sector cells of radial width L and arc
    width ~L bounds the search to neighboring cells.  Correctness of the
    clustering never depends on the bucketing (the exact pair test runs on
    every candidate); the buckets only prune.
    """
    n = rho.size
    if n < 2:
        z = np.zeros(0, dtype=np.int64)
        return z, z.copy()
    if n <= 256:
        ii, jj = np.triu_indices(n, k=1)
        return ii.astype(np.int64), jj.astype(np.int64)

    delta = max(length, 0.25)
    pad = length * (1.0 + 1e-12) + 1e-12
    band = np.floor(rho / delta).astype(np.int64)
    nsec = _sector_count(band, delta)
    sec = np.minimum(np.floor(theta / (2.0 * math.pi) * nsec), nsec - 1).astype(np.int64)
    key = band * (1 << 32) + sec

    order = np.argsort(key, kind="stable")
    sorted_key = key[order]
    starts = np.flatnonzero(np.r_[True, sorted_key[1:] != sorted_key[:-1]])
    bounds = np.r_[starts, sorted_key.size]
    cells: dict[int, np.ndarray] = {}
    band_sectors: dict[int, list[int]] = {}
    for s, e in zip(bounds[:-1], bounds[1:]):
        k = int(sorted_key[s])
        cells[k] = order[s:e]
        band_sectors.setdefault(k >> 32, []).append(k & 0xFFFFFFFF)

    ii_parts: list[np.ndarray] = []
    jj_parts: list[np.ndarray] = []
    for k, idx in cells.items():
        b = k >> 32
        s = k & 0xFFFFFFFF
        n_b = int(_sector_count(np.array([b]), delta)[0])
        theta_c = (s + 0.5) * 2.0 * math.pi / n_b
        for b2 in (b - 1, b, b + 1):
            if b2 < 0 or b2 not in band_sectors:
                continue
            n_b2 = int(_sector_count(np.array([b2]), delta)[0])
            inner = b2 * delta
            if inner <= pad or math.sinh(pad) >= math.sinh(inner):
                secs = band_sectors[b2]
            else:
                omega = math.asin(min(1.0, math.sinh(pad) / math.sinh(inner)))
                omega += math.pi / n_b + math.pi / n_b2
                lo = math.floor((theta_c - omega) / (2.0 * math.pi) * n_b2)
                hi = math.floor((theta_c + omega) / (2.0 * math.pi) * n_b2)
                if hi - lo + 1 >= n_b2:
                    secs = band_sectors[b2]
                else:
                    want = {v % n_b2 for v in range(lo, hi + 1)}
                    secs = [v for v in band_sectors[b2] if v in want]
            for s2 in secs:
                k2 = b2 * (1 << 32) + s2
                if k2 < k:
                    continue
                other = cells[k2]
                if k2 == k:
                    a, c = np.triu_indices(idx.size, k=1)
                    ii_parts.append(idx[a])
                    jj_parts.append(idx[c])
                else:
                    a, c = np.meshgrid(idx, other, indexing="ij")
                    ii_parts.append(a.ravel())
                    jj_parts.append(c.ravel())

    ii = np.concatenate(ii_parts) if ii_parts else np.zeros(0, dtype=np.int64)
    jj = np.concatenate(jj_parts) if jj_parts else np.zeros(0, dtype=np.int64)
    swap = ii > jj
    ii, jj = np.where(swap, jj, ii), np.where(swap, ii, jj)
    packed = np.unique(ii * n + jj)
    ii, jj = packed // n, packed % n

    keep = _dist(rho[ii], theta[ii], rho[jj], theta[jj]) <= length + 1e-6
    return ii[keep], jj[keep]


def intersecting_pairs(
    sample: StickSample, brute_force: bool = False, eps: float = EPS_GEO
) -> tuple[np.ndarray, np.ndarray]:
    """Index pairs (i < j) of sticks that intersect."""
    rho, theta = sample.rho, sample.theta
    alpha = sample.directions
    length = sample.config.length
    n = sample.realized_count
    if brute_force:
        ii, jj = np.triu_indices(n, k=1)
        ii, jj = ii.astype(np.int64), jj.astype(np.int64)
    else:
        ii, jj = candidate_pairs(rho, theta, length)
    hit = np.zeros(ii.size, dtype=bool)
    for s in range(0, ii.size, _PAIR_CHUNK):
        sl = slice(s, min(s + _PAIR_CHUNK, ii.size))
        hit[sl], _, _ = _pair_hits(
            rho[ii[sl]], theta[ii[sl]], alpha[ii[sl]], length,
            rho[jj[sl]], theta[jj[sl]], alpha[jj[sl]], length,
            eps=eps,
        )
    return ii[hit], jj[hit]


def build_clusters(
    sample: StickSample, brute_force: bool = False, eps: float = EPS_GEO
) -> ClusterLabeling:
    """Union-find partition of the sample into intersection clusters.

    brute_force skips the spatial index and tests every pair; both routes
    must produce identical labelings.
    """
    n = sample.realized_count
    if n == 0:
        return ClusterLabeling.from_labels(np.zeros(0, dtype=np.int64), 0)
    ii, jj = intersecting_pairs(sample, brute_force=brute_force, eps=eps)
    mat = sparse.coo_matrix(
        (np.ones(ii.size, dtype=np.int8), (ii, jj)), shape=(n, n)
    )
    count, labels = connected_components(mat, directed=False)
    return ClusterLabeling.from_labels(labels.astype(np.int64), count)


# ---------------------------------------------------------------------------
# window events
# ---------------------------------------------------------------------------


def _crossing_label_mask(
    sample: StickSample, labeling: ClusterLabeling, r_in: float, R: float
) -> np.ndarray:
    if not 0.0 < r_in < R:
        raise ValueError("need 0 < r_in < R")
    if R > sample.config.window_radius + 1e-12:
        raise ValueError("R must not exceed the sample window radius")
    if sample.realized_count == 0:
        return np.zeros(0, dtype=bool)
    dmin, dmax = stick_reach(
        sample.rho, sample.theta, sample.directions, sample.config.length
    )
    k = labeling.cluster_count
    touch_in = np.zeros(k, dtype=bool)
    touch_out = np.zeros(k, dtype=bool)
    np.logical_or.at(touch_in, labeling.labels, dmin <= r_in)
    np.logical_or.at(touch_out, labeling.labels, dmax >= R)
    return touch_in & touch_out


def crossing_exists(
    sample: StickSample, labeling: ClusterLabeling, r_in: float, R: float
) -> bool:
    """True when one cluster joins the inner ball B(o, r_in) to distance R."""
    return bool(_crossing_label_mask(sample, labeling, r_in, R).any())


def two_arm_count(
    sample: StickSample, labeling: ClusterLabeling, r_in: float, R: float
) -> int:
    """Number of distinct clusters crossing the annulus."""
    return int(_crossing_label_mask(sample, labeling, r_in, R).sum())


# ---------------------------------------------------------------------------
# branching embedding in nested half-planes
# ---------------------------------------------------------------------------


def upper_child_box(length: float) -> TripleBox:
    return TripleBox(
        (length / 4.0, length / 2.0),
        (math.pi / 6.0, math.pi / 3.0),
        (length / 4.0, length / 2.0),
    )


def lower_child_box(length: float) -> TripleBox:
    return TripleBox(
        (length / 4.0, length / 2.0),
        (math.pi - math.pi / 3.0, math.pi - math.pi / 6.0),
        (-length / 2.0, -length / 4.0),
    )


@dataclass
class EmbeddingNode:
    """One stick of the embedded branching tree.

    frame maps the node's canonical chart (stick centered at the local
    origin along the local +x axis, half-plane beyond the perpendicular at
    the center) to global coordinates; applying it to the canonical stick
    reproduces the node's stick.
    """

    stick: Stick
    frame: Frame
    depth: int
    path: tuple[int, ...] = ()
    triple: Optional[tuple[float, float, float]] = None
    halfplane: Optional[HalfPlane] = None
    margin: float = math.inf


@dataclass
class EmbeddingTree:
    generations: list[list[EmbeddingNode]]
    max_depth: int

    @property
    def survival_depth(self) -> int:
        return len(self.generations) - 1

    @property
    def survived(self) -> bool:
        return self.survival_depth >= self.max_depth

    def node_count(self) -> int:
        return sum(len(g) for g in self.generations)

    def rows(self) -> list[tuple]:
        """Parent-pointer export: (index, parent_index, depth, rho', phi, r)."""
        out = []
        index_of: dict[tuple[int, ...], int] = {}
        for gen in self.generations:
            for node in gen:
                idx = len(out)
                index_of[node.path] = idx
                parent = index_of.get(node.path[:-1], -1) if node.path else -1
                t = node.triple or (math.nan, math.nan, math.nan)
                out.append((idx, parent, node.depth, t[0], t[1], t[2]))
        return out


def _sample_box_triple(
    box: TripleBox, intensity: float, rng: np.random.Generator
) -> Optional[tuple[float, float, float]]:
    """Lexicographically first point of a Poisson draw on the box, or None.

    The tie-break (lowest rho', then phi, then r) fixes a deterministic
    choice when the box holds several sticks.
    """
    count = int(rng.poisson(intensity * mu_box(box)))
    if count == 0:
        return None
    r1, r2 = box.rho_interval
    p1, p2 = box.phi_interval
    o1, o2 = box.r_interval
    rp = r1 + rng.random(count) * (r2 - r1)
    u = rng.random(count)
    ph = np.arccos(np.cos(p1) - u * (math.cos(p1) - math.cos(p2)))
    ro = o1 + rng.random(count) * (o2 - o1)
    best = np.lexsort((ro, ph, rp))[0]
    return float(rp[best]), float(ph[best]), float(ro[best])


def _child_geometry(triple, length: float):
    """Local stick data for a child triple: center, canonical 'up' bearing,
    into-half-plane bearing, and the half-plane itself."""
    rp, ph, ro = triple
    cr, cth, phi = _sticks_from_triples(
        np.array([rp]), np.array([ph]), np.array([ro]), length
    )
    center = HPoint(float(cr[0]), float(cth[0]))
    meet = HPoint(rp, 0.0)
    toward_meet = bearing(center, meet)
    away = toward_meet + math.pi
    hp = perpendicular_halfplane(center, away)
    return center, away, hp, float(phi[0])


def _check_child_halfplane(
    triple, hp: HalfPlane, length: float, upper: bool
) -> float:
    """Containment margin checks for one child half-plane.

    The ideal endpoints must fall strictly inside the parent's quadrant
    (upper: (0, pi/2); lower: mirrored), and the rays from the meeting
    point on the axis towards them must keep angle at least
    pi/6 - 4*exp(-L/4) away from both the axis and the perpendicular
    through the origin.  Returns the measured margin.
    """
    rp = triple[0]
    need = math.pi / 6.0 - 4.0 * math.exp(-length / 4.0)
    quad = HalfPlane(0.0, math.pi / 2.0) if upper else HalfPlane(3.0 * math.pi / 2.0, 2.0 * math.pi)
    # ideal angles of far half-planes are exponentially small in the stick
    # length, so strict containment uses a bare positivity margin
    if not (quad.contains_angle(hp.theta1, 1e-15) and quad.contains_angle(hp.theta2, 1e-15)):
        raise EmbeddingGeometryError(
            "child half-plane leaves the parent quadrant; increase the stick length"
        )
    q = HPoint(rp, 0.0)
    margin = math.inf
    for e in (hp.theta1, hp.theta2):
        beta = abs(float(wrap_signed(bearing_to_ideal(q, e))))
        margin = min(margin, beta, math.pi / 2.0 - beta)
    if margin < need:
        raise EmbeddingGeometryError(
            f"half-plane angle margin {margin:.4f} below the required {need:.4f}"
        )
    return margin


def gw_embed_children(
    node: EmbeddingNode,
    intensity: float,
    length: float,
    rng: np.random.Generator,
    check_geometry: bool = True,
) -> list[EmbeddingNode]:
    """Children of an embedding node from fresh restricted-process draws.

    Each of the two search boxes independently holds a stick with
    probability 1 - exp(-lambda*(sqrt(3)-1)/(32 pi) L^2); a found stick
    becomes a child whose frame re-anchors its own half-plane to the
    canonical position.
    """
    if length < MIN_EMBED_LENGTH:
        raise ValueError(f"embedding requires length >= {MIN_EMBED_LENGTH}")
    children = []
    plane_arcs = []
    for slot, (box, upper) in enumerate(
        ((upper_child_box(length), True), (lower_child_box(length), False))
    ):
        triple = _sample_box_triple(box, intensity, rng)
        if triple is None:
            continue
        center, away, hp, phi_local = _child_geometry(triple, length)
        margin = math.inf
        if check_geometry:
            margin = _check_child_halfplane(triple, hp, length, upper)
        plane_arcs.append(hp)
        frame = node.frame.compose(Frame(center, away))
        center_g = node.frame.to_global_point(center)
        phi_g = float(np.mod(node.frame.to_global_bearing(center, away), math.pi))
        stick = make_stick(center_g, phi_g, length)
        children.append(
            EmbeddingNode(
                stick=stick,
                frame=frame,
                depth=node.depth + 1,
                path=node.path + (slot + 1,),
                triple=triple,
                halfplane=hp,
                margin=margin,
            )
        )
    if check_geometry and len(plane_arcs) == 2 and not plane_arcs[0].disjoint_from(plane_arcs[1]):
        raise EmbeddingGeometryError("sibling half-planes are not disjoint")
    return children


def gw_embedding_simulate(
    intensity: float,
    length: float,
    max_depth: int,
    seed: int,
    check_geometry: bool = True,
) -> EmbeddingTree:
    """Grow the embedded tree generation by generation up to max_depth.

    Each node consumes a fresh stream keyed by its path, so the offspring
    counts form a branching process with two independent Bernoulli slots
    per node, regardless of traversal order.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    root = EmbeddingNode(
        stick=make_stick(ORIGIN, 0.0, length), frame=Frame.identity(), depth=0, path=()
    )
    generations = [[root]]
    for depth in range(max_depth):
        nxt: list[EmbeddingNode] = []
        for node in generations[depth]:
            rng = stream(seed, _ROLE_EMBED, depth, *node.path)
            nxt.extend(
                gw_embed_children(node, intensity, length, rng, check_geometry=check_geometry)
            )
        if not nxt:
            break
        generations.append(nxt)
    return EmbeddingTree(generations, max_depth)


# ---------------------------------------------------------------------------
# subcritical cluster exploration
# ---------------------------------------------------------------------------


@dataclass
class SubcriticalSummary:
    """Cluster-size statistics of the rooted stick under local exploration."""

    sizes: np.ndarray
    truncated: int
    reps: int
    gw_mean: float

    @property
    def mean(self) -> float:
        return float(self.sizes.mean())

    @property
    def stderr(self) -> float:
        return float(self.sizes.std(ddof=1) / math.sqrt(self.sizes.size))


def _cluster_of_root(rho, theta, alpha, length, eps) -> np.ndarray:
    """Indices connected to stick 0 (all pairs; small working sets only)."""
    n = rho.size
    ii, jj = np.triu_indices(n, k=1)
    hit, _, _ = _pair_hits(
        rho[ii], theta[ii], alpha[ii], length, rho[jj], theta[jj], alpha[jj], length, eps=eps
    )
    uf = UnionFind(n)
    for a, b in zip(ii[hit], jj[hit]):
        uf.union(int(a), int(b))
    root = uf.find(0)
    return np.flatnonzero(np.fromiter((uf.find(i) == root for i in range(n)), bool, n))


def subcritical_cluster_stats(
    intensity: float,
    length: float,
    n_reps: int,
    seed: int = 0,
    size_cap: int = 20000,
    eps: float = EPS_GEO,
) -> SubcriticalSummary:
    """Cluster of the rooted stick centered at the origin, replicated.

    The cluster is grown by exact local exploration: the region within
    distance L of an unprocessed cluster stick is realized (conditionally
    on everything already seen -- the process is independent over disjoint
    regions), so the realized cluster has exactly the law of the rooted
    cluster in the infinite-volume process; no window bias enters.  A
    replicate is truncated only when size_cap is hit.
    """
    m = offspring_mean(intensity, length)
    if m >= 1.0:
        raise ValueError("subcritical exploration requires offspring mean < 1")
    config = ProcessConfig(intensity, length, window_radius=length, seed=seed)
    sizes = np.zeros(n_reps, dtype=np.int64)
    truncated = 0
    reach = length * (1.0 + 1e-9) + 1e-12
    for rep in range(n_reps):
        rho = np.array([0.0])
        theta = np.array([0.0])
        alpha = np.array([0.0])
        regions: list[tuple[float, float]] = []  # (center_rho, center_theta)
        queue = [0]
        processed: set[int] = set()
        cluster = np.array([0])
        was_truncated = False
        ball = 0
        while queue:
            i = queue.pop()
            if i in processed:
                continue
            processed.add(i)
            if rho.size > size_cap:
                was_truncated = True
                break
            center = HPoint(float(rho[i]), float(theta[i]))
            rng = stream(seed, _ROLE_EXPLORE, rep, ball)
            ball += 1
            nr, nt, nphi = sample_ball_at(config, center, reach, rng)
            if regions and nr.size:
                keep = np.ones(nr.size, dtype=bool)
                for cr, ct in regions:
                    keep &= _dist(nr, nt, cr, ct) > reach
                nr, nt, nphi = nr[keep], nt[keep], nphi[keep]
            regions.append((center.rho, center.theta))
            if nr.size:
                rho = np.concatenate([rho, nr])
                theta = np.concatenate([theta, nt])
                alpha = np.concatenate([alpha, _direction_from_phi(nr, nt, nphi)])
                cluster = _cluster_of_root(rho, theta, alpha, length, eps)
            queue.extend(int(c) for c in cluster if int(c) not in processed)
        sizes[rep] = cluster.size
        truncated += int(was_truncated)
    return SubcriticalSummary(sizes, truncated, n_reps, 1.0 / (1.0 - m))


# ---------------------------------------------------------------------------
# axis blocking indicator
# ---------------------------------------------------------------------------


def axis_block_box(k: int, length: float) -> TripleBox:
    """Stick class crossing the axis near distance k, steeply and centrally."""
    return TripleBox(
        (float(k), float(k) + 1.0),
        (math.pi / 4.0, 3.0 * math.pi / 4.0),
        (-length / 4.0, length / 4.0),
    )


def _canonical_up(center: HPoint, meet: HPoint, r_off: float, varphi: float) -> float:
    """Bearing at the stick center of the orientation making angle varphi
    with the ray at the meeting point (points into the upper half-plane)."""
    if dist(center, meet) < 1e-13:
        return varphi if meet.rho > 0 else varphi
    back = bearing(center, meet)
    return back + math.pi if r_off >= 0.0 else back


def _block_halfplanes(stick_center, up, length):
    """Perpendicular half-planes at the two interior points L/8 in from the
    stick endpoints."""
    x_plus = geodesic_point(stick_center, up, 3.0 * length / 8.0)
    x_minus = geodesic_point(stick_center, up + math.pi, 3.0 * length / 8.0)
    up_at_plus = bearing(x_plus, stick_center) + math.pi
    up_at_minus = bearing(x_minus, stick_center)
    hp_plus = perpendicular_halfplane(x_plus, up_at_plus)
    hp_minus = perpendicular_halfplane(x_minus, up_at_minus)
    return x_plus, x_minus, hp_plus, hp_minus


def _behind_boundary(points_rho, points_theta, at: HPoint, boundary_bearing: float):
    """Side test: True for points on the side of the geodesic through `at`
    (with the given bearing) that does not contain the origin."""
    _, _, n = _geo_frame(at.rho, at.theta, boundary_bearing)
    side_o = -n[2]
    lifted = _lift(np.asarray(points_rho, float), np.asarray(points_theta, float))
    vals = _mdot(lifted, np.broadcast_to(n, lifted.shape))
    if side_o > 0:
        return vals < 0.0
    return vals > 0.0


def blocking_indicator(
    sample: StickSample,
    labeling: ClusterLabeling,
    k: int,
    length: float,
    depth_radius: float,
    eps: float = EPS_GEO,
) -> bool:
    """Finite-depth blocking proxy at axis offset k.

    True when some stick of the class axis_block_box(k, L) belongs to a
    cluster that reaches hyperbolic distance >= depth_radius from the
    stick's midpoint on both sides, within the half-planes beyond the
    perpendiculars at the two interior points L/8 in from its endpoints.
    """
    if sample.config.window_radius < k + 1 + depth_radius:
        raise ValueError("window too small for the requested blocking depth")
    if sample.realized_count == 0:
        return False
    hitm, rp, ph, ro = sample_hit_triples(sample)
    box = axis_block_box(k, length)
    in_class = (
        hitm
        & (rp >= box.rho_interval[0])
        & (rp <= box.rho_interval[1])
        & (ph >= box.phi_interval[0])
        & (ph <= box.phi_interval[1])
        & (ro >= box.r_interval[0])
        & (ro <= box.r_interval[1])
    )
    if not in_class.any():
        return False

    # endpoint arrays for reach tests
    er1, et1 = _from_frame(length / 2.0, sample.directions, sample.rho, sample.theta)
    er2, et2 = _from_frame(length / 2.0, sample.directions + math.pi, sample.rho, sample.theta)

    upper = HalfPlane(0.0, math.pi)
    lower = HalfPlane(math.pi, 2.0 * math.pi)
    for i in np.flatnonzero(in_class):
        center = sample.stick(i).center
        meet = HPoint(float(rp[i]), 0.0)
        up = _canonical_up(center, meet, float(ro[i]), float(ph[i]))
        x_plus, x_minus, hp_plus, hp_minus = _block_halfplanes(center, up, length)
        if not (upper.contains_halfplane(hp_plus) and lower.contains_halfplane(hp_minus)):
            raise EmbeddingGeometryError(
                "blocking half-planes leave their sides; stick length too small"
            )
        members = np.flatnonzero(labeling.labels == labeling.labels[i])
        ok_sides = []
        for x_ref, brg_up in ((x_plus, bearing(x_plus, center) + math.pi),
                              (x_minus, bearing(x_minus, center))):
            deep = False
            for er, et in ((er1, et1), (er2, et2)):
                far = _dist(er[members], et[members], center.rho, center.theta) >= depth_radius
                beyond = _behind_boundary(er[members], et[members], x_ref, brg_up + math.pi / 2.0)
                if bool(np.any(far & beyond)):
                    deep = True
                    break
            ok_sides.append(deep)
            if not deep:
                break
        if all(ok_sides):
            return True
    return False


def hk_disjointness_check(l_k: Stick, l_k4: Stick, length: float) -> bool:
    """Verify the half-plane geometry of two axis-blocking sticks at offsets
    four apart: each perpendicular half-plane stays inside its side of the
    axis and the two upper (and lower) half-planes are disjoint."""
    planes = []
    for stick in (l_k, l_k4):
        t = hit_triple(stick)
        if t is None:
            return False
        meet = HPoint(t.rho_prime, 0.0)
        up = _canonical_up(stick.center, meet, t.r, t.varphi)
        _, _, hp_plus, hp_minus = _block_halfplanes(stick.center, up, length)
        planes.append((hp_plus, hp_minus))
    upper = HalfPlane(0.0, math.pi)
    lower = HalfPlane(math.pi, 2.0 * math.pi)
    (p1, m1), (p2, m2) = planes
    return (
        upper.contains_halfplane(p1)
        and upper.contains_halfplane(p2)
        and lower.contains_halfplane(m1)
        and lower.contains_halfplane(m2)
        and p1.disjoint_from(p2)
        and m1.disjoint_from(m2)
    )


def hk_angle_bounds(l_k: Stick, l_k4: Stick, length: float) -> tuple[float, float]:
    """Diagnostic angles of the disjointness construction.

    Returns (alpha_k, beta_k): the half-plane opening angle seen from the
    first stick's axis meeting point, and the angle subtended there by the
    near ideal endpoint of the second stick's upper half-plane.
    """
    t1 = hit_triple(l_k)
    t4 = hit_triple(l_k4)
    if t1 is None or t4 is None:
        raise ValueError("both sticks must meet the axis")
    meet1 = HPoint(t1.rho_prime, 0.0)
    up1 = _canonical_up(l_k.center, meet1, t1.r, t1.varphi)
    x_plus1 = geodesic_point(l_k.center, up1, 3.0 * length / 8.0)
    alpha_k = math.asin(1.0 / math.cosh(dist(meet1, x_plus1)))

    meet4 = HPoint(t4.rho_prime, 0.0)
    up4 = _canonical_up(l_k4.center, meet4, t4.r, t4.varphi)
    _, _, hp_plus4, _ = _block_halfplanes(l_k4.center, up4, length)
    beta_k = min(
        abs(float(wrap_signed(bearing_to_ideal(meet1, hp_plus4.theta1)))),
        abs(float(wrap_signed(bearing_to_ideal(meet1, hp_plus4.theta2)))),
    )
    return alpha_k, beta_k
