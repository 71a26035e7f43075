"""Exact tensor product decompositions for the classical groups, with stability checks."""

from .engine import (
    Memo,
    StabilityReport,
    decompose,
    gl_tensor,
    multiplicity_in_sym_chain,
    restrict_decomposition,
    stability_report,
    stable_tensor,
    stable_threshold,
    tensor_stable_range,
)
from .errors import (
    ConsistencyError,
    InputError,
    OutOfStableRangeError,
    ResourceError,
    StableTensorError,
)
from .oracle import Decomposition, WeightSystem, dim, tensor_oracle, weight_multiplicities
from .partitions import Partition, parse_partition
from .pieri import classical_pieri, gl_pieri, pieri_last_row, sym_decomposition
from .rootsystem import GroupFamily, Kind

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "Decomposition",
    "GroupFamily",
    "InputError",
    "Kind",
    "Memo",
    "OutOfStableRangeError",
    "Partition",
    "ResourceError",
    "StabilityReport",
    "StableTensorError",
    "WeightSystem",
    "classical_pieri",
    "decompose",
    "dim",
    "gl_pieri",
    "gl_tensor",
    "multiplicity_in_sym_chain",
    "parse_partition",
    "pieri_last_row",
    "restrict_decomposition",
    "stability_report",
    "stable_tensor",
    "stable_threshold",
    "sym_decomposition",
    "tensor_oracle",
    "tensor_stable_range",
    "weight_multiplicities",
]
