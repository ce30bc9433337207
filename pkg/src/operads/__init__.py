"""Symbolic algebra for operads over exact rationals.

The pieces, roughly bottom up:

- ``exactla``: rank and span membership over ``fractions.Fraction``
- ``permutations``: S_n, block and partial composition
- ``trees``: planar operadic trees and grafting
- ``free_operad``: decorated leaf-labelled terms, composition, the
  symmetric action, rational combinations, basis enumeration
- ``endomorphism``: multilinear maps on Q^d as an operad
- ``symmetrized``: rational combinations of permutations under block
  composition (the symmetrized one-product operad)
- ``quotient``: presentations, relation ideals, quotient dimensions
- ``representations``: algebras over a presentation and their checks
- ``termio``: parsers and printers, presentation and representation files
- ``presets``: the bundled presentations (as, uas, com, ucom, ass, lie)
- ``laws``: randomized law checking
- ``cli``: the ``operads`` command
"""

from .exactla import Eliminator, Rational, RowMatrix, in_span, rank
from .free_operad import (LinComb, Signature, Term, act, circ, enumerate_basis,
                          gamma, gen_corolla, lin_act, lin_circ, lin_gamma,
                          trivial_term, weight)
from .endomorphism import (MultilinearMap, act_endo, compose_endo, evaluate,
                           from_entries, identity_map, zero_map)
from .permutations import (Permutation, block_compose, compose,
                           equivariance_twist, identity, inverse,
                           partial_compose)
from .presets import get_preset
from .quotient import (IdealBasis, Presentation, equal_mod_ideal, free_dim,
                       ideal_spanning_set, is_quadratic, make_presentation,
                       quotient_dim)
from .representations import (AlgebraSpec, Representation, binary_from_rep,
                              builtin_algebra, check_relations, derived_map,
                              is_algebra_morphism, make_representation,
                              rep_from_binary)
from .symmetrized import PermCombination, ass_act, ass_compose
from .trees import OperadTree, corolla, graft, trivial_tree

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
