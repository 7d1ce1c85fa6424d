"""Generalized complete intersection Stanley-Reisner ideals: classification and verification."""

from .combinatorics import classify_theorem, reconstruct
from .complex import (
    ComplexError,
    SimplicialComplex,
    SupportFamily,
    core,
    from_facets,
    from_nonfaces,
    is_pure,
    join,
    link,
    minimal_nonfaces,
    star,
    support_family,
)
from .homology import GF2, QQ, FieldSpec, is_buchsbaum, is_cohen_macaulay, reduced_betti
from .ideal import gci_route_links, gci_route_local, is_complete_intersection
from .io import InputDocument, ParseError, parse_input
from .report import ClassificationReport, classify

__version__ = "0.1.0"
