"""Exact weight-module constructions over higher rank Virasoro algebras.

The package builds, over the centrally extended Lie algebra on a free
abelian group of finite rank, the three standard families of weight
modules -- intermediate series, highest-weight (Verma) modules relative to
a total order, and modules induced from an intermediate-series module over
a corank-one subgroup -- entirely in exact arithmetic, and provides the
finite-window probes (reducibility, degeneracy, support shapes, dimension
tables, boundedness, generalized-highest-weight detection, classification
round trips) that make the structure theory mechanically checkable.
"""

__version__ = "0.1.0"

from .algebra import (
    SIGN_XY,
    SIGN_YX,
    LieElement,
    TriangularDecomposition,
    ad_action,
    bracket,
    bracket_closure,
    jacobi_defect,
    module_axiom_defect,
)
from .classify import (
    ClassificationVerdict,
    WindowView,
    classify_module,
    dichotomy_probe,
    find_ghw_vectors,
    induced_window_view,
    intermediate_window_view,
    lowering_family_independence,
    ray_family_matrix,
    support_ray,
    trivial_view,
    verma_window_view,
)
from .induced import (
    InducedModule,
    InducedWindow,
    QuotientWeightTable,
    SplitGroup,
    double_factorial_odd,
)
from .intermediate import (
    IntermediateModule,
    SubquotientKind,
    SubquotientModule,
    proper_invariant_subset,
)
from .lattice import GroupElement, GroupSpec, complement_basis, cone_basis_matrix
from .orders import (
    FunctionalOrder,
    LexOrder,
    OrderError,
    certify_discrete_minimal,
    classify_order,
    compare,
    dense_witness,
)
from .scalars import (
    ALPHA,
    BETA,
    CDOT,
    H,
    LAMBDA0,
    InexactValueError,
    QuadValue,
    Scalar,
    equal,
    exact,
    generator_symbols,
    is_zero,
    substitute,
)
from .verma import (
    VermaModule,
    VermaWindow,
    irreducibility_probe,
    label_counts_by_weight,
    positive_length_span_closure,
    singleton_norm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
