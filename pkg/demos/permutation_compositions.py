"""Block and partial composition of permutations.

Permutations compose like operations whose inputs are slots: each block
permutes within its own run of inputs, then whole blocks are rearranged.
Run this file to see the arithmetic spelled out.
"""

from operads import Permutation, block_compose, compose, inverse, partial_compose

sigma = Permutation([2, 3, 1])
tau1 = Permutation([1, 2])
tau2 = Permutation([3, 1, 2])
tau3 = Permutation([2, 1])

print("sigma          =", sigma)
print("inverse(sigma) =", inverse(sigma))
print("sigma o inverse =", compose(sigma, inverse(sigma)))

print()
print("Block composition: blocks of sizes 2, 3, 2; block j lands at slot",
      "sigma(j).")
out = block_compose(sigma, [tau1, tau2, tau3])
print(f"{sigma} o ({tau1}, {tau2}, {tau3}) = {out}")

print()
print("Partial composition inserts one block and shifts the rest:")
s = Permutation([3, 4, 2, 1])
t = Permutation([2, 3, 1])
print(f"{s} o_2 {t} = {partial_compose(s, 2, t)}")

print()
print("Insertion is the same as block composition with identity blocks:")
blocks = [Permutation([1]), t, Permutation([1]), Permutation([1])]
print(f"{s} o (id, {t}, id, id) = {block_compose(s, blocks)}")
