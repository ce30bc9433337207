import random
from fractions import Fraction

import pytest

from operads.free_operad import Signature, enumerate_basis, gamma
from operads.laws import random_perm
from operads.permutations import (Permutation, block_compose, compose,
                                  equivariance_twist, identity)
from operads.symmetrized import PermCombination, ass_act, ass_compose

F = Fraction


def single(p, c=1):
    return PermCombination.of(p, c)


def _rand_comb(rng, n, nterms=2):
    return PermCombination(
        n, [(random_perm(rng, n), F(rng.randint(-3, 3))) for _ in range(nterms)])


def test_singleton_composition_is_block_composition():
    s = Permutation([2, 3, 1])
    blocks = [Permutation([1, 2]), Permutation([3, 1, 2]), Permutation([2, 1])]
    got = ass_compose(single(s), [single(b) for b in blocks])
    assert got == single(block_compose(s, blocks))
    assert got.coeff(Permutation([3, 4, 7, 5, 6, 2, 1])) == 1


def test_identity_composition():
    got = ass_compose(single(identity(2)), [single(identity(1))] * 2)
    assert got == single(identity(2))


def test_composition_distributes():
    rng = random.Random(51)
    for _ in range(40):
        n = rng.randint(1, 3)
        host = _rand_comb(rng, n)
        args = [_rand_comb(rng, rng.randint(1, 2)) for _ in range(n)]
        # expand-then-compose oracle
        expected: dict[Permutation, F] = {}
        for p, c in host.terms:
            choices = [list(a.terms) for a in args]
            stack = [(c, [])]
            for ch in choices:
                stack = [(coeff * ac, sel + [q]) for coeff, sel in stack
                         for q, ac in ch]
            for coeff, sel in stack:
                q = block_compose(p, sel)
                expected[q] = expected.get(q, F(0)) + coeff
        got = ass_compose(host, args)
        degree = sum(a.degree for a in args)
        assert got == PermCombination(degree, expected.items())


def test_act_identity_and_singletons():
    rng = random.Random(52)
    x = _rand_comb(rng, 3)
    assert ass_act(x, identity(3)) == x
    s, t = Permutation([2, 3, 1]), Permutation([3, 1, 2])
    assert ass_act(single(s), t) == single(compose(s, t))


def test_act_group_law():
    rng = random.Random(53)
    for _ in range(60):
        n = rng.randint(1, 4)
        x = _rand_comb(rng, n)
        s, t = random_perm(rng, n), random_perm(rng, n)
        assert ass_act(ass_act(x, s), t) == ass_act(x, compose(s, t))


def test_degree_mismatches():
    with pytest.raises(ValueError):
        ass_act(single(identity(2)), identity(3))
    with pytest.raises(ValueError):
        ass_compose(single(identity(2)), [single(identity(1))])
    with pytest.raises(ValueError):
        PermCombination(2, [(identity(3), F(1))])


def test_equivariance_of_compose_and_act():
    rng = random.Random(54)
    for _ in range(60):
        n = rng.randint(1, 3)
        host = _rand_comb(rng, n)
        arities = [rng.randint(1, 2) for _ in range(n)]
        args = [_rand_comb(rng, a) for a in arities]
        sigma = random_perm(rng, n)
        pis = [random_perm(rng, a) for a in arities]
        lhs = ass_compose(ass_act(host, sigma),
                          [ass_act(args[sigma(j) - 1], pis[sigma(j) - 1])
                           for j in range(1, n + 1)])
        rhs = ass_act(ass_compose(host, args), equivariance_twist(sigma, pis))
        assert lhs == rhs


def test_term_word_map_respects_composition():
    # sending a basis term to its label word is compatible with the two
    # composition laws, degree by degree
    rng = random.Random(55)
    sig = Signature((("mu", 2),), mode="symmetric")
    for _ in range(40):
        n = rng.randint(1, 3)
        host = rng.choice(enumerate_basis(sig, n))
        args = [rng.choice(enumerate_basis(sig, rng.randint(1, 2)))
                for _ in range(n)]
        composite = gamma(host, args)
        via_perms = ass_compose(
            single(Permutation(host.labels)),
            [single(Permutation(a.labels)) for a in args])
        assert via_perms == single(Permutation(composite.labels))
