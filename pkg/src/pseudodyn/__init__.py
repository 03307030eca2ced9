"""pseudodyn: exact orbit geometry for pseudogroups of the line and circle.

Pseudogroups are generated by finitely many piecewise-Möbius partial maps
with coefficients in Q or Q(sqrt(d)). Everything is computed exactly: orbit
balls and the word metric, hitting distances into a window, Følner ratios
and averaging measures, orbit correspondences, equicontinuity moduli and
the glued metric of an atlas of local metric patches.

Example - word metric on an irrational rotation:
    from pseudodyn import load_bundled, orbit_ball

    scenario = load_bundled("rotation_sqrt2")
    ball = orbit_ball(scenario.system, 0, 3)
    print(len(ball))  # 7

Example - the non-recurrent example:
    from fractions import Fraction

    from pseudodyn import build_section6_example, recurrence_profile

    example = build_section6_example()
    seeds = example.backward_orbit(Fraction(5, 4), 5)[1:]
    profile = recurrence_profile(example.system, example.target, seeds, 8)

Example - gluing local metrics:
    from pseudodyn import glue_metric, load_atlas

    glued = glue_metric(load_atlas("atlas_two_patch"))
    glued.d("p0", "p4")
"""

from pseudodyn._config import EngineConfig, default_config
from pseudodyn._version import __version__
from pseudodyn.coarse import (
    ball_metric,
    distortion_stats,
    hausdorff_distance,
    inverse_correspondence_holds,
    net_check,
    orbit_correspondence,
    table_metric,
)
from pseudodyn.equicont import (
    TranslationCombination,
    ab_propagation_check,
    extend_word_over,
    minimality_witness,
    modulus_estimate,
    orbit_density,
    quasi_effective_check,
    translation_combination_example,
)
from pseudodyn.exactnum import (
    NEG_INF,
    POS_INF,
    Infinity,
    Ordering,
    QuadraticField,
    Scalar,
    approx,
    compare,
    make_scalar,
)
from pseudodyn.exceptions import PseudodynError
from pseudodyn.folner import (
    ConstantFunction,
    PiecewiseLinearFunction,
    TabulatedFunction,
    a_cap_s_check,
    averaging_measure,
    boundary_growth_holds,
    folner_ratios,
    graph_boundary,
    invariance_defect,
    measure_series,
    quasi_lattice_K,
    r_boundary,
    shell_bound_holds,
)
from pseudodyn.localmaps import (
    DomainSet,
    GeneratorSystem,
    Germ,
    Interval,
    MoebiusMap,
    PartialMap,
    Space,
    combine,
    compose,
    invert,
    restrict,
)
from pseudodyn.metrization import (
    admissible_pairs,
    check_overlaps,
    check_quasilocal_modulus,
    exhaustive_chain_metric,
    glue_metric,
    is_metric,
    local_agreement,
    lower_bound_check,
    random_line_atlas,
    sup_premetric,
)
from pseudodyn.pseudogroup import (
    OrbitBall,
    Word,
    WordEnumerator,
    brute_force_distances,
    distances_to,
    enumerate_words,
    evaluate_word,
    find_word,
    germ_group_sample,
    hitting_search,
    orbit_ball,
    set_neighborhood,
    word_germ,
    word_metric,
)
from pseudodyn.recurrence import (
    Section6Example,
    bilipschitz_audit,
    build_section6_example,
    recurrence_profile,
    recurrent_companion,
    window_hitting_bound,
)
from pseudodyn.scenario import (
    Scenario,
    build_scenario,
    bundled_names,
    load_atlas,
    load_bundled,
    loads_atlas,
    loads_scenario,
    parse_scenario,
    resolve_scenario,
)

__all__ = [
    "__version__",
    # Configuration
    "EngineConfig",
    "default_config",
    "PseudodynError",
    # Exact numbers
    "Scalar",
    "Infinity",
    "POS_INF",
    "NEG_INF",
    "QuadraticField",
    "Ordering",
    "make_scalar",
    "compare",
    "approx",
    # Local maps
    "Interval",
    "DomainSet",
    "MoebiusMap",
    "PartialMap",
    "Germ",
    "Space",
    "GeneratorSystem",
    "compose",
    "invert",
    "restrict",
    "combine",
    # Orbit engine
    "Word",
    "OrbitBall",
    "WordEnumerator",
    "orbit_ball",
    "set_neighborhood",
    "hitting_search",
    "find_word",
    "distances_to",
    "word_metric",
    "evaluate_word",
    "word_germ",
    "enumerate_words",
    "germ_group_sample",
    "brute_force_distances",
    # Recurrence
    "Section6Example",
    "build_section6_example",
    "recurrence_profile",
    "window_hitting_bound",
    "recurrent_companion",
    "bilipschitz_audit",
    # Følner
    "PiecewiseLinearFunction",
    "TabulatedFunction",
    "ConstantFunction",
    "r_boundary",
    "graph_boundary",
    "folner_ratios",
    "quasi_lattice_K",
    "boundary_growth_holds",
    "shell_bound_holds",
    "a_cap_s_check",
    "averaging_measure",
    "measure_series",
    "invariance_defect",
    # Coarse geometry
    "table_metric",
    "ball_metric",
    "hausdorff_distance",
    "net_check",
    "orbit_correspondence",
    "distortion_stats",
    "inverse_correspondence_holds",
    # Equicontinuity
    "modulus_estimate",
    "TranslationCombination",
    "translation_combination_example",
    "extend_word_over",
    "ab_propagation_check",
    "orbit_density",
    "minimality_witness",
    "quasi_effective_check",
    # Metrization
    "admissible_pairs",
    "sup_premetric",
    "check_overlaps",
    "glue_metric",
    "exhaustive_chain_metric",
    "lower_bound_check",
    "local_agreement",
    "is_metric",
    "check_quasilocal_modulus",
    "random_line_atlas",
    # Scenarios
    "Scenario",
    "build_scenario",
    "loads_scenario",
    "parse_scenario",
    "bundled_names",
    "load_bundled",
    "resolve_scenario",
    "loads_atlas",
    "load_atlas",
]
