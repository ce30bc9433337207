"""Concrete products checked against presentations.

The cross product satisfies the bracket relations, 2x2 matrices are
associative, the zero product is everything at once, and the built-in
signed-difference product is deliberately not associative. A linear map
between two algebras can be tested for compatibility as well: the trace
is not multiplicative, so it fails.
"""

from fractions import Fraction

from operads import (builtin_algebra, check_relations, derived_map, evaluate,
                     is_algebra_morphism, rep_from_binary)
from operads.endomorphism import from_entries
from operads.presets import get_preset
from operads.termio import parse_term

lie, As, com = get_preset("lie"), get_preset("as"), get_preset("com")

for pres, alg in ((lie, "cross3"), (As, "mat2"), (As, "sub"),
                  (com, "zero"), (As, "zero")):
    rep = rep_from_binary(pres, builtin_algebra(alg).product)
    verdict = check_relations(rep)
    state = "PASS" if verdict.ok else f"FAIL on {verdict.witness_relation}"
    print(f"{alg:7} over {pres.name:4} -> {state}")

print()
print("Evaluating a derived bracket: ((e1 x e2) x e1) should be e2:")
cross = rep_from_binary(lie, builtin_algebra("cross3").product)
t = parse_term("l(l(1,2),3)", lie.signature)
e1, e2 = (1, 0, 0), (0, 1, 0)
print("  ", evaluate(derived_map(cross, t), [e1, e2, e1]))

print()
print("Trace from 2x2 matrices to scalars, against the one-dim product:")
mat2 = rep_from_binary(As, builtin_algebra("mat2").product)
scalars = rep_from_binary(As, from_entries(1, 2, {(1, 1, 1): Fraction(1)}))
trace = [[1, 0, 0, 1]]  # 1 x 4 matrix
verdict = is_algebra_morphism(trace, mat2, scalars)
print("   morphism?", verdict.ok, "| witness generator:", verdict.witness_relation)
