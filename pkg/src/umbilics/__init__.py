"""Multiplicity of umbilic points on surfaces in Euclidean and Minkowski
3-space, with the surrounding analysis: curvature-line equations, special
curve germs and their singularity classes, cubic normal forms, parameter
plane stratifications, versality and transversality tests, a
deformation-splitting oracle, and phase portraits.

All core computations are exact over the rationals; floating point is
confined to the portrait renderer.
"""

from __future__ import annotations

from .analysis import (
    ConfigLabel,
    ConfigRoot,
    EquivalencePanel,
    UmbilicReport,
    analyze_umbilic,
    bde_multiplicity,
    bde_multiplicity_germ,
    check_inequality,
    classify_config,
    equivalence_panel,
    phi_alpha,
    umbilic_multiplicity,
)
from .cli import (
    SurfaceSpec,
    load_spec,
    parse_surface_spec,
    patch_to_spec,
    serialize_surface_spec,
    spec_to_patch,
)
from .cubics import CubicForm, ReducedCubic, RootRecord, cubic_roots, reduce_cubic, root_causal_type
from .deform import (
    ExperimentResult,
    LocatedUmbilic,
    SplitReport,
    complex_count,
    default_family,
    find_umbilics,
    perturb_patch,
    split_experiment,
)
from .errors import AnalysisError, SpecError, UmbilicsError
from .jets import DEFAULT_ORDER, JetPoly, jet, jet_const, jet_x, jet_y
from .localalg import (
    INFINITE,
    MultiplicityResult,
    SingularityClass,
    classify_singularity,
    intersection_multiplicity,
    milnor_number,
)
from .models import (
    Expectation,
    ModelEntry,
    crosscap_germ,
    lightlike_adapted,
    lightlike_ladder,
    model_catalog,
    model_library,
    quintic_family,
    spacelike_ladder,
    timelike_ladder,
)
from .portrait import Marker, PhasePortrait, emit_svg, integrate_lines
from .rationals import DyadicInterval, Q
from .strata import (
    StratumLabel,
    curve_polynomial,
    curve_value,
    family_patch,
    plane_data,
    region_catalog,
    stratify,
    stratify_beta,
    stratify_timelike,
)
from .surfaces import (
    BdeGerm,
    FundamentalForms,
    MongePatch,
    causal_type_at_origin,
    detect_umbilic,
    fundamental_forms,
    monge_patch,
    principal_bde,
    special_curves,
)
from .versality import d4_and_versality, monge_taylor_transversality

__version__ = "0.1.0"

__all__ = [
    "AnalysisError",
    "BdeGerm",
    "ConfigLabel",
    "ConfigRoot",
    "CubicForm",
    "DEFAULT_ORDER",
    "DyadicInterval",
    "EquivalencePanel",
    "Expectation",
    "ExperimentResult",
    "FundamentalForms",
    "INFINITE",
    "JetPoly",
    "LocatedUmbilic",
    "Marker",
    "ModelEntry",
    "MongePatch",
    "MultiplicityResult",
    "PhasePortrait",
    "Q",
    "ReducedCubic",
    "RootRecord",
    "SingularityClass",
    "SpecError",
    "SplitReport",
    "StratumLabel",
    "SurfaceSpec",
    "UmbilicReport",
    "UmbilicsError",
    "analyze_umbilic",
    "bde_multiplicity",
    "bde_multiplicity_germ",
    "causal_type_at_origin",
    "check_inequality",
    "classify_config",
    "classify_singularity",
    "complex_count",
    "crosscap_germ",
    "cubic_roots",
    "curve_polynomial",
    "curve_value",
    "d4_and_versality",
    "default_family",
    "detect_umbilic",
    "emit_svg",
    "equivalence_panel",
    "family_patch",
    "find_umbilics",
    "fundamental_forms",
    "integrate_lines",
    "intersection_multiplicity",
    "jet",
    "jet_const",
    "jet_x",
    "jet_y",
    "lightlike_adapted",
    "lightlike_ladder",
    "load_spec",
    "milnor_number",
    "model_catalog",
    "model_library",
    "monge_patch",
    "monge_taylor_transversality",
    "parse_surface_spec",
    "patch_to_spec",
    "perturb_patch",
    "phi_alpha",
    "plane_data",
    "principal_bde",
    "quintic_family",
    "reduce_cubic",
    "region_catalog",
    "root_causal_type",
    "serialize_surface_spec",
    "spacelike_ladder",
    "spec_to_patch",
    "special_curves",
    "split_experiment",
    "stratify",
    "stratify_beta",
    "stratify_timelike",
    "timelike_ladder",
    "umbilic_multiplicity",
    "__version__",
]
