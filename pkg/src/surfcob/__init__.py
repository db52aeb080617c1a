"""Decide and witness single-singular-value Morse functions on 3-dimensional cobordisms."""
from .decision import Decision, classify, decide, edge_sets, is_cobordant
from .handles import Join, Phase, SelfAttach, Split, Surger, Witness, apply, legal_moves, validate
from .notation import ParseError, parse_surface
from .reeb import build_reeb, to_dot
from .search import SearchBounds, enumerate_reachable, find_witness, verify_theorem
from .surface import (
    Surface,
    SurfaceComponent,
    SurfaceError,
    connected_sum,
    euler_characteristic,
    even_genus,
    nonorientable,
    nonorientable_genus,
    normal_form,
    odd_count,
    orientable,
)

__version__ = "0.1.0"
