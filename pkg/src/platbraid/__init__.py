"""Plat closures of spherical braids in real projective 3-space.

Word algebra for the sphere braid groups, closure invariants, M-moves,
bounded equivalence search and annulus diagrams.
"""

from .errors import BraidError
from .moves import MoveApplication, MoveId, apply_move, enumerate_moves, predecessors
from .plat import (
    PlatReport,
    affine_witness,
    component_count,
    component_homology,
    oracle_component_count,
    plat_report,
    residual_cycles,
)
from .relations import RelationRule, word_equal_bounded
from .render import render_braid, render_plat, trace_closed_curves
from .search import SearchConfig, SearchOutcome, m_equivalent, perturb, replay
from .words import (
    BraidWord,
    Letter,
    Permutation,
    abelian_class,
    compose,
    embed_e,
    free_reduce,
    invert,
    parse_word,
    permutation_of,
    sphere_relator,
    strand_deletion,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
