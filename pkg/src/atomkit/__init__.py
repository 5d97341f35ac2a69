"""Atoms and Hecke atoms of involutions in signed permutation groups."""

from .core import (
    SetPermutation,
    SignedPermutation,
    absolute_length,
    compose,
    coxeter_length,
    format_signed,
    from_word,
    inverse,
    left_descents,
    neg_count,
    parse_signed,
    reduced_word,
    right_descents,
    signed_permutations,
)
from .errors import AtomkitError, BoundExceeded, NotAnInverseAtom, NotAnInvolution, ParseError, RankMismatch
from .hecke import (
    SignedInvolution,
    atoms_brute,
    demazure,
    demazure_conjugate,
    hecke_atoms_brute,
    hecke_image,
    involution_length,
)
from .orders import (
    CoverKind,
    HasseDiagram,
    atoms_fast,
    components_A,
    covers,
    extremes,
    hasse,
    poset_probe,
    rank_A,
    rank_B,
)
from .structure import Matching, ncsp, nested_data, nested_descent_graph, one_B, recover_involution, shape, zero_B
from .equivalence import equivalence_class, partition
from .census import census, involutions, is_atomic, radius
from .tableaux import count_reduced_words, reduced_words, rhat, verify_identities

__version__ = "0.1.0"
