"""Hamilton cycles in vertex-transitive graphs whose transitive group has a
cyclic prime-power commutator subgroup, built by quotienting and lifting."""

from .graphcore import CayleySpec, Graph, GroupAction, cayley_graph
from .lifting import HamiltonCertificate, verify_certificate
from .permgroup import Permutation, PermGroup
from .pipeline import PipelineResult, hamilton_path, hamiltonize

__all__ = [
    "CayleySpec",
    "Graph",
    "GroupAction",
    "HamiltonCertificate",
    "PermGroup",
    "Permutation",
    "PipelineResult",
    "cayley_graph",
    "hamilton_path",
    "hamiltonize",
    "verify_certificate",
]

__version__ = "0.1.0"
