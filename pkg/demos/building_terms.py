"""Terms of a free operad: parsing, grafting, the symmetric action.

Terms are decorated planar trees with numbered leaves. Text form is
nested calls, e.g. ``l(l(1,2),3)``; the unit prints as ``id``.
"""

from operads import Permutation, act, circ, enumerate_basis, gamma, weight
from operads.presets import get_preset
from operads.termio import parse_lincomb, parse_term, print_lincomb, print_term

lie = get_preset("lie")
sig = lie.signature

l = parse_term("l(1,2)", sig)
print("l           =", print_term(l), " weight", weight(l))

nested = circ(l, 1, l)
print("l o_1 l     =", print_term(nested), " weight", weight(nested))

print("acted [2,3,1] ->", print_term(act(nested, Permutation([2, 3, 1]))))
print("acted [3,1,2] ->", print_term(act(nested, Permutation([3, 1, 2]))))

jacobi = parse_lincomb("l(l(1,2),3) + l(l(2,3),1) + l(l(3,1),2)", sig)
print("jacobi sum  =", print_lincomb(jacobi))

print()
print("Total composition plugs a term into every slot at once:")
out = gamma(nested, [l, parse_term("id", sig), l])
print("(l o_1 l) o (l, id, l) =", print_term(out))

print()
print("Basis sizes over one binary generator (symmetric labels):")
for n in range(1, 6):
    print(f"  arity {n}: {len(enumerate_basis(sig, n))} terms")
print("First few arity-3 basis terms:")
for t in enumerate_basis(sig, 3)[:6]:
    print("  ", print_term(t))
