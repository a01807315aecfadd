"""Finite q-ultraspherical polynomial systems at q = exp(2*pi*i/N)."""

from .identities import (
    IdentityCase,
    RangeError,
    check_base_sums,
    check_even_identity,
    check_odd_identity,
    sweep_identities,
)
from .measures import (
    ChainExhausted,
    DarbouxStep,
    MeasureData,
    NonpositiveWeight,
    OrthogonalityReport,
    WrongSeries,
    build_grid_weights,
    closed_form_norms,
    darboux_chain,
    darboux_step,
    numeric_norms,
    verify_orthogonality,
    with_norms,
)
from .parameters import (
    RejectedParameter,
    SeriesKind,
    SeriesSpec,
    classify,
    complementary_samples,
    enumerate_series,
)
from .recurrence import (
    ConvergenceFailure,
    DegenerateDenominator,
    JacobiMatrix,
    RecurrenceTable,
    build_jacobi,
    build_recurrence,
    eval_monic,
    eval_symmetric,
    jacobi_spectrum,
    recurrence_coefficient,
)
from .representation import (
    AlgebraReport,
    DualBasisData,
    DualReport,
    GeneratorTriple,
    RepresentationData,
    build_dual_basis,
    build_generators,
    build_representation,
    verify_algebra,
    verify_dual_structure,
)
from .trig import PhaseParams, cos_om, sin_om

__version__ = "0.1.0"
