"""Cocyclic matrices over Z_t x Z_2^2: construction, diagram calculus,
equivalence actions, exhaustive search and classification."""

from .errors import InvalidParameter, ParseError
from .group import (
    Automorphism,
    BundleElement,
    GroupElement,
    elem_index,
    elem_of_index,
    g_inv,
    g_mul,
    h_compose,
    h_enumerate,
)
from .matrix import (
    SignMatrix,
    assemble,
    delta_matrix,
    hadamard_full,
    hadamard_rowsum,
    is_cocycle,
    k_matrix,
    rho_matrix,
    transpose,
)
from .diagram import Diagram, diagram_from_set, parse, render, v_canonical, v_translates
from .hprime import HPrimeElement, hp_apply, hp_compose

__version__ = "0.1.0"
