"""Chromatic polynomials and wheel contractions of maximal planar graphs."""

from .chromatic import ChromaticEngine, CountReport, brute_force_count, chromatic_polynomial, count_colorings
from .coloring import ColorPartition, Classification, classify, enumerate_partitions, is_4chromatic_funnel
from .generate import GenerationReport, generate_all
from .graph import AdjacentPair, Graph, GraphError, canonical_form, is_isomorphic
from .io import read_adjlist, read_planar_code, write_adjlist, write_planar_code
from .polynomial import Polynomial
from .triangulation import (
    Funnel,
    Triangulation,
    Wheel,
    contract_wheel4,
    contract_wheel5,
    extend_wheel3,
    extend_wheel4,
    extend_wheel5,
    from_graph,
    icosahedron,
    link_cycle,
    octahedron,
)
from .wheels import ColoringCertificate, four_color, theorem1_check, theorem2_check

__all__ = [
    "AdjacentPair",
    "ChromaticEngine",
    "Classification",
    "ColorPartition",
    "ColoringCertificate",
    "CountReport",
    "Funnel",
    "GenerationReport",
    "Graph",
    "GraphError",
    "Polynomial",
    "Triangulation",
    "Wheel",
    "brute_force_count",
    "canonical_form",
    "chromatic_polynomial",
    "classify",
    "contract_wheel4",
    "contract_wheel5",
    "count_colorings",
    "enumerate_partitions",
    "extend_wheel3",
    "extend_wheel4",
    "extend_wheel5",
    "four_color",
    "from_graph",
    "generate_all",
    "icosahedron",
    "is_4chromatic_funnel",
    "is_isomorphic",
    "link_cycle",
    "octahedron",
    "read_adjlist",
    "read_planar_code",
    "theorem1_check",
    "theorem2_check",
    "write_adjlist",
    "write_planar_code",
]
