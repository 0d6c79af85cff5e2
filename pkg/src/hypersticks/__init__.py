"""Poisson stick processes in the hyperbolic plane.

Library layout:

- :mod:`hypersticks.geometry` -- exact plane geometry (metric, isometries,
  sticks, intersection, triangle laws, ideal boundary).
- :mod:`hypersticks.process` -- intensity measures and exact samplers for
  the stick process.
- :mod:`hypersticks.percolation` -- connectivity of realized stick sets,
  crossing/two-arm events, branching embedding, blocking indicators.
- :mod:`hypersticks.experiments` -- Monte Carlo drivers, threshold
  estimation, verification suites, persistence.
- :mod:`hypersticks.cli` -- command line entry point.
"""

from hypersticks.geometry import (
    EPS_GEO,
    DiscPoint,
    Frame,
    HalfPlane,
    HitTriple,
    HPoint,
    ORIGIN,
    Segment,
    Stick,
    Triangle,
    ball_volume,
    bearing,
    chord_distance,
    circle_cover_points,
    dist,
    from_disc,
    geodesic_point,
    hit_triple,
    ideal_angle_gap,
    make_stick,
    segments_intersect,
    to_disc,
    translate_to,
    triangle_from_sides,
)
from hypersticks.process import (
    ProcessConfig,
    StickSample,
    TripleBox,
    alpha_exponent,
    embedding_success_prob,
    mu_box,
    offspring_mean,
    sample_restricted,
    sample_window,
    stick_from_triple,
    vacant_line_prob,
)
from hypersticks.percolation import (
    ClusterLabeling,
    EmbeddingNode,
    EmbeddingTree,
    blocking_indicator,
    build_clusters,
    crossing_exists,
    gw_embed_children,
    gw_embedding_simulate,
    hk_disjointness_check,
    subcritical_cluster_stats,
    two_arm_count,
)

__version__ = "0.1.0"
