"""Curves on surfaces, Heegaard and trisection diagrams, and handle-slide search."""

from .catalog import catalog
from .constructions import slope_curve, standard_alpha, standard_beta, union
from .heegaard import (
    HeegaardDiagram,
    SurgeryInstance,
    SurgerySplit,
    h1_invariants,
    is_pseudo_standard,
    is_standard,
    surgery_split,
)
from .homology import HomologyVerdict, direct_sum
from .multicurve import (
    Multicurve,
    MulticurveError,
    Violation,
    canonical_encoding,
    reduce,
    trace_components,
    validate_multicurve,
)
from .overlay import (
    algebraic_intersection,
    complement_regions,
    geometric_intersection,
    is_cut_system,
    is_isotopic,
    make_diagram,
    overlay,
)
from .primitivity import (
    Budget,
    SlideCertificate,
    Verdict,
    check_dsp,
    check_dspp,
    is_primitive_wrt,
    is_pseudo_primitive_wrt,
    replay_certificate,
    slide_search,
)
from .slides import SlideArc, band_slide, enumerate_slide_arcs
from .snf import smith_normal_form
from .surface import BoundaryPoint, SurfaceModel, build_surface
from .trisection import (
    TrisectionDiagram,
    TrisectionReport,
    connected_sum,
    stabilize,
    validate_trisection,
)

__version__ = "0.1.0"
