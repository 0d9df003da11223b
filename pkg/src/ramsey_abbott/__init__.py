"""Explicit Ramsey graphs from Abbott powers of a derandomized base graph."""

__version__ = "0.1.0"

from .abbott import abbott_power, abbott_product
from .construct import (
    ConstructionParams,
    construct_ramsey,
    guaranteed_bound,
    select_params,
)
from .errors import (
    CapacityError,
    GraphFormatError,
    GraphValidationError,
    ParameterError,
    RamseyError,
    SearchExhausted,
)
from .extremal import (
    CliqueWitness,
    VerificationReport,
    has_clique_of_size,
    max_clique,
    max_independent_set,
    verify_bounds,
)
from .formats import decode, encode
from .graph import Graph, complement, induced_subgraph
from .sample_space import (
    SampleSpaceSpec,
    Seed,
    derive_spec,
    enumerate_seeds,
    measure_bias,
    sample_string,
)
from .search import (
    SearchOutcome,
    conditional_expectations_base_graph,
    search_base_graph,
)
