"""matroidkit: exact finite matroids as circuit families over bit-mask subsets."""
from .config import Settings, load_settings
from .construct import (
    GF2Matrix,
    Multigraph,
    PointedMatroid,
    cycle_matroid,
    direct_sum,
    free_extension,
    from_gf2,
    g_family,
    l_family,
    n5,
    named,
    parallel_connection,
    registry,
    series_connection,
    su,
    uniform,
)
from .core import (
    CircuitFamily,
    ElementPartition,
    Matroid,
    are_isomorphic,
    canonical_key,
    is_binary,
)
from .errors import (
    AxiomError,
    ConfigError,
    ConstructionError,
    InputError,
    MatroidKitError,
    ParseError,
    SearchLimitError,
)
from .props import (
    axiom_check,
    has_k_skew,
    has_series_minor,
    has_su_series_minor,
    is_circuit_difference,
    is_unbreakable,
    skew_circuit_pairs,
    ssce_check,
)

__version__ = "0.1.0"
