"""Intensity measures and exact samplers for the Poisson stick process.

The process drops sticks of a fixed length L with intensity lambda per unit
hyperbolic area, centers carrying independent uniform angle marks on
[0, pi).  Two samplers are provided: a window sampler (all sticks meeting a
ball around the origin) and a restricted sampler producing exactly the
sticks that meet a reference ray, built from the closed-form density
(1/pi) d(rho') x sin(varphi) d(varphi) x dr of the ray parameterization.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from hypersticks.geometry import (
    HitTriple,
    HPoint,
    Stick,
    _direction_from_phi,
    _ray_hits,
    _sticks_from_triples,
    ball_volume,
    make_stick,
)

SQRT3 = math.sqrt(3.0)

#: Default cap on the expected number of sampled sticks; the sampling ball
#: volume grows like e^rho, so a mistyped parameter can silently request
#: billions of sticks.
DEFAULT_MAX_EXPECTED = 5e7

_ROLE_WINDOW = 1
_ROLE_RESTRICTED = 2
_ROLE_ANNULUS = 3
_ROLE_EMBED = 4
_ROLE_EXPLORE = 5


class SampleCapError(RuntimeError):
    """Raised when a sampler would exceed the expected-count safety cap."""


def max_expected_cap() -> float:
    """Safety cap, overridable through HYPERSTICKS_MAX_STICKS."""
    raw = os.environ.get("HYPERSTICKS_MAX_STICKS")
    return float(raw) if raw else DEFAULT_MAX_EXPECTED


def stream(seed: int, *path: int) -> np.random.Generator:
    """Counter-based random stream keyed by (seed, *path).

    Streams for distinct keys are independent and insensitive to the order
    in which they are created, so replicates can run under any scheduling.
    """
    key = np.random.SeedSequence((int(seed),) + tuple(int(p) for p in path))
    return np.random.Generator(np.random.Philox(key=key.generate_state(2, np.uint64)))


# ---------------------------------------------------------------------------
# configuration and samples
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProcessConfig:
    """Parameters of one stick process realization.

    intensity is the mean number of stick centers per unit area; length the
    common stick length; window_radius the radius of the region of interest.
    Centers are sampled in the larger ball of radius window_radius +
    length/2 so that no stick meeting the window is missed.
    """

    intensity: float
    length: float
    window_radius: float
    seed: int = 0

    def __post_init__(self):
        if not (self.intensity > 0.0 and math.isfinite(self.intensity)):
            raise ValueError("intensity must be positive and finite")
        if not (self.length > 0.0 and math.isfinite(self.length)):
            raise ValueError("length must be positive and finite")
        if not (self.window_radius > 0.0 and math.isfinite(self.window_radius)):
            raise ValueError("window_radius must be positive and finite")

    @property
    def sampling_radius(self) -> float:
        return self.window_radius + self.length / 2.0


@dataclass
class StickSample:
    """One realization: parallel arrays of stick centers and angle marks."""

    config: ProcessConfig
    rho: np.ndarray
    theta: np.ndarray
    phi: np.ndarray

    @property
    def realized_count(self) -> int:
        return int(self.rho.size)

    def __len__(self) -> int:
        return self.realized_count

    @property
    def directions(self) -> np.ndarray:
        """Center bearings (against the outward radial direction)."""
        return _direction_from_phi(self.rho, self.theta, self.phi)

    def sticks(self) -> list[Stick]:
        return [
            make_stick(HPoint(float(r), float(t)), float(p), self.config.length)
            for r, t, p in zip(self.rho, self.theta, self.phi)
        ]

    def stick(self, i: int) -> Stick:
        return make_stick(
            HPoint(float(self.rho[i]), float(self.theta[i])),
            float(self.phi[i]),
            self.config.length,
        )

    def extend(self, rho, theta, phi) -> "StickSample":
        return StickSample(
            self.config,
            np.concatenate([self.rho, np.asarray(rho, float)]),
            np.concatenate([self.theta, np.asarray(theta, float)]),
            np.concatenate([self.phi, np.asarray(phi, float)]),
        )


# ---------------------------------------------------------------------------
# closed-form measure values
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TripleBox:
    """Product box in the ray parameterization (rho', varphi, r)."""

    rho_interval: tuple[float, float]
    phi_interval: tuple[float, float]
    r_interval: tuple[float, float]

    def __post_init__(self):
        r1, r2 = self.rho_interval
        p1, p2 = self.phi_interval
        o1, o2 = self.r_interval
        if not (0.0 <= r1 < r2):
            raise ValueError("rho' interval must be nondegenerate and nonnegative")
        if not (0.0 <= p1 < p2 <= math.pi):
            raise ValueError("varphi interval must be nondegenerate inside [0, pi]")
        if not o1 < o2:
            raise ValueError("r interval must be nondegenerate")


def mu_box(box: TripleBox) -> float:
    """Measure of a triple box: (1/pi) * d(rho') * d(r) * (cos p1 - cos p2)."""
    r1, r2 = box.rho_interval
    p1, p2 = box.phi_interval
    o1, o2 = box.r_interval
    return (r2 - r1) * (o2 - o1) * (math.cos(p1) - math.cos(p2)) / math.pi


def offspring_mean(intensity: float, length: float) -> float:
    """Expected number of process sticks meeting a fixed stick: 2*lambda*L^2/pi."""
    return 2.0 * intensity * length * length / math.pi


def embedding_success_prob(intensity: float, length: float) -> float:
    """Probability that the branching-embedding search box is nonempty:
    1 - exp(-lambda * (sqrt(3)-1)/(32*pi) * L^2)."""
    return -math.expm1(-intensity * (SQRT3 - 1.0) / (32.0 * math.pi) * length * length)


def alpha_exponent(intensity: float, length: float) -> float:
    """Exponential decay rate of the vacant-segment probability: (2/pi)*lambda*L."""
    return 2.0 * intensity * length / math.pi


def vacant_line_prob(intensity: float, length: float, R: float) -> float:
    """Probability that no stick meets a ray segment of length R (Poisson
    void probability, exact)."""
    return math.exp(-alpha_exponent(intensity, length) * R)


# ---------------------------------------------------------------------------
# samplers
# ---------------------------------------------------------------------------


def _check_cap(expected: float):
    cap = max_expected_cap()
    if expected > cap:
        raise SampleCapError(
            f"expected stick count {expected:.3g} exceeds the safety cap {cap:.3g}; "
            "raise HYPERSTICKS_MAX_STICKS to override"
        )


def sample_window(config: ProcessConfig, rng: Optional[np.random.Generator] = None) -> StickSample:
    """All sticks of one realization meeting the window ball B(o, window_radius).

    Centers fill the completeness ball of radius window_radius + length/2:
    count Poisson(lambda * area), radial law with density sinh(rho) via its
    inverse CDF, uniform angles, uniform marks on [0, pi).  Deterministic
    given (config, seed).
    """
    radius = config.sampling_radius
    mean = config.intensity * float(ball_volume(radius))
    _check_cap(mean)
    if rng is None:
        rng = stream(config.seed, _ROLE_WINDOW)
    n = int(rng.poisson(mean))
    u = rng.random(n)
    rho = np.arccosh(1.0 + u * (math.cosh(radius) - 1.0))
    theta = rng.random(n) * 2.0 * math.pi
    phi = rng.random(n) * math.pi
    return StickSample(config, rho, theta, phi)


def sample_annulus(
    config: ProcessConfig,
    r_lo: float,
    r_hi: float,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Fresh sticks with centers in the annulus r_lo <= rho < r_hi.

    Extends an existing realization consistently: the process restricted to
    disjoint regions is independent.
    """
    if not 0.0 <= r_lo < r_hi:
        raise ValueError("need 0 <= r_lo < r_hi")
    mean = config.intensity * float(ball_volume(r_hi) - ball_volume(r_lo))
    _check_cap(mean)
    n = int(rng.poisson(mean))
    u = rng.random(n)
    rho = np.arccosh(np.cosh(r_lo) + u * (math.cosh(r_hi) - math.cosh(r_lo)))
    theta = rng.random(n) * 2.0 * math.pi
    phi = rng.random(n) * math.pi
    return rho, theta, phi


def sample_ball_at(
    config: ProcessConfig,
    center: HPoint,
    radius: float,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Fresh sticks with centers in the ball B(center, radius).

    Sampled in the polar chart of the ball center (the intensity is
    isometry invariant) and mapped back to global coordinates.
    """
    mean = config.intensity * float(ball_volume(radius))
    _check_cap(mean)
    n = int(rng.poisson(mean))
    u = rng.random(n)
    rho_l = np.arccosh(1.0 + u * (math.cosh(radius) - 1.0))
    th_l = rng.random(n) * 2.0 * math.pi
    phi = rng.random(n) * math.pi
    from hypersticks.geometry import _from_frame

    rho, theta = _from_frame(rho_l, th_l, center.rho, center.theta)
    return np.asarray(rho, float), np.asarray(theta, float), phi


def _restricted_triples(
    intensity: float,
    length: float,
    rho_max: float,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Hit triples of one restricted realization on the segment [0, rho_max].

    Three steps: Poisson((2/pi)*lambda*L*rho_max) many meeting points,
    uniform on the segment; angles from the density sin(varphi)/2 via the
    inverse CDF arccos(1 - 2u); offsets uniform on [-L/2, L/2].
    """
    rate = 2.0 / math.pi * intensity * length * rho_max
    _check_cap(rate)
    n = int(rng.poisson(rate))
    rho_p = rng.random(n) * rho_max
    varphi = np.arccos(1.0 - 2.0 * rng.random(n))
    r_off = (rng.random(n) - 0.5) * length
    return rho_p, varphi, r_off


def sample_restricted(
    config: ProcessConfig,
    rho_max: float,
    ray_angle: float = 0.0,
    full_geodesic: bool = False,
    rng: Optional[np.random.Generator] = None,
) -> StickSample:
    """Exactly the sticks of one realization meeting the reference ray
    segment of length rho_max from the origin at angle ray_angle.

    With full_geodesic=True the opposite ray is included as an independent
    second batch (a stick meets a full geodesic at most once, so the union
    realizes the doubled intensity of the two-sided extension).
    """
    if not rho_max > 0.0:
        raise ValueError("rho_max must be positive")
    if rng is None:
        rng = stream(config.seed, _ROLE_RESTRICTED)
    rho_p, varphi, r_off = _restricted_triples(config.intensity, config.length, rho_max, rng)
    cr, cth, phi = _sticks_from_triples(rho_p, varphi, r_off, config.length, ray_angle)
    sample = StickSample(config, np.asarray(cr, float), np.asarray(cth, float), phi)
    if full_geodesic:
        rho_p2, varphi2, r_off2 = _restricted_triples(config.intensity, config.length, rho_max, rng)
        cr2, cth2, phi2 = _sticks_from_triples(
            rho_p2, varphi2, r_off2, config.length, ray_angle + math.pi
        )
        sample = sample.extend(cr2, cth2, phi2)
    return sample


def stick_from_triple(t: HitTriple, length: float, ray_angle: float = 0.0) -> Stick:
    """Stick realizing a hit triple on the given ray (inverse of hit_triple)."""
    if not -length / 2.0 <= t.r <= length / 2.0:
        raise ValueError("offset r must lie in [-L/2, L/2]")
    cr, cth, phi = _sticks_from_triples(
        np.array([t.rho_prime]), np.array([t.varphi]), np.array([t.r]), length, ray_angle
    )
    return make_stick(HPoint(float(cr[0]), float(cth[0])), float(phi[0]), length)


def sample_hit_triples(sample: StickSample, ray_angle: float = 0.0, rho_max: Optional[float] = None):
    """Hit triples of the sample's sticks against a reference ray.

    Returns (mask, rho', varphi, r) over the sample; rho_max truncates the
    ray to a segment.
    """
    hit, rp, ph, ro = _ray_hits(
        sample.rho, sample.theta, sample.directions, sample.config.length, ray_angle
    )
    if rho_max is not None:
        hit = hit & (rp <= rho_max)
    return hit, rp, np.mod(ph, math.pi), ro


# ---------------------------------------------------------------------------
# plain-text serialization
# ---------------------------------------------------------------------------

_SAMPLE_HEADER = "# hypersticks-sample v1"


def write_sample(sample: StickSample, path_or_file) -> None:
    """One record per stick as (center_rho, center_theta, phi, length),
    17 significant digits, with the configuration in the header."""
    own = isinstance(path_or_file, (str, os.PathLike))
    f = open(path_or_file, "w", newline="\n") if own else path_or_file
    try:
        c = sample.config
        f.write(_SAMPLE_HEADER + "\n")
        f.write(
            f"# lambda={c.intensity:.17g} L={c.length:.17g} "
            f"window_radius={c.window_radius:.17g} seed={c.seed} "
            f"count={sample.realized_count}\n"
        )
        f.write("# columns: center_rho center_theta phi length\n")
        for r, t, p in zip(sample.rho, sample.theta, sample.phi):
            f.write(f"{r:.17g} {t:.17g} {p:.17g} {c.length:.17g}\n")
    finally:
        if own:
            f.close()


def read_sample(path_or_file) -> StickSample:
    own = isinstance(path_or_file, (str, os.PathLike))
    f = open(path_or_file, "r") if own else path_or_file
    try:
        header = f.readline().strip()
        if header != _SAMPLE_HEADER:
            raise ValueError(f"unrecognized sample header: {header!r}")
        meta = f.readline().strip().lstrip("# ").split()
        kv = dict(item.split("=", 1) for item in meta)
        config = ProcessConfig(
            intensity=float(kv["lambda"]),
            length=float(kv["L"]),
            window_radius=float(kv["window_radius"]),
            seed=int(kv["seed"]),
        )
        f.readline()  # column names
        rows = np.loadtxt(f, ndmin=2) if int(kv["count"]) else np.zeros((0, 4))
        if rows.shape[0] != int(kv["count"]):
            raise ValueError("row count does not match header count")
        return StickSample(config, rows[:, 0].copy(), rows[:, 1].copy(), rows[:, 2].copy())
    finally:
        if own:
            f.close()
