"""Dimension tables for the bundled presentations.

Imposing relations on the free operad cuts each arity component down to
the quotient dimension; associativity alone leaves n! operations, adding
commutativity leaves one, and the bracket relations leave (n-1)!.
Arity 5 for the bracket takes a few seconds: the ambient space already
has dimension 1680.
"""

from operads import equal_mod_ideal, free_dim, quotient_dim
from operads.presets import get_preset
from operads.termio import parse_lincomb

for name, top in (("as", 6), ("ass", 4), ("com", 5), ("lie", 5)):
    p = get_preset(name)
    dims = [quotient_dim(p, n) for n in range(2, top + 1)]
    frees = [free_dim(p, n) for n in range(2, top + 1)]
    print(f"{name:4}  free {frees}  quotient {dims}")

print()
lie = get_preset("lie")
sig = lie.signature
pairs = [
    ("l(1,2)", "-1*l(2,1)"),
    ("l(1,2)", "l(2,1)"),
    ("l(l(1,2),3)", "-1*l(l(2,3),1) - l(l(3,1),2)"),
]
for a, b in pairs:
    same = equal_mod_ideal(lie, parse_lincomb(a, sig), parse_lincomb(b, sig))
    print(f"{a}  ==  {b}  mod relations?  {same}")
