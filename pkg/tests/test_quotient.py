import itertools
import random
from fractions import Fraction

import pytest

from operads.exactla import rank
from operads.free_operad import (LinComb, Signature, enumerate_basis,
                                 gen_corolla)
from operads.laws import random_perm
from operads.presets import get_preset
from operads.quotient import (DEFAULT_ARITY_CAP, coordinates, equal_mod_ideal,
                              free_dim, ideal_spanning_set, is_quadratic,
                              lin_act, make_presentation, quotient_dim,
                              spanning_lincombs)
from operads.free_operad import lin_circ, lin_gamma
from operads.termio import parse_lincomb
from oracles import rank_of_vectors

LIE = get_preset("lie")
COM = get_preset("com")
ASS = get_preset("ass")
AS = get_preset("as")


def lc(src, p):
    return parse_lincomb(src, p.signature)


# -- spanning sets ------------------------------------------------------------

def test_lie_arity_two_rank_one():
    basis = ideal_spanning_set(LIE, 2)
    assert basis.arity == 2
    assert rank(basis.spanning) == 1
    # the line is spanned by l(1,2) + l(2,1)
    anti = coordinates(lc("l(1,2) + l(2,1)", LIE), LIE.signature)
    vecs = [dict(r) for r in basis.spanning.sparse_rows()]
    assert rank_of_vectors(vecs + [anti]) == 1


def test_com_arity_two_rank_one():
    assert rank(ideal_spanning_set(COM, 2).spanning) == 1


def test_rank_zero_below_relation_arities():
    assert rank(ideal_spanning_set(AS, 2).spanning) == 0
    assert quotient_dim(AS, 2) == free_dim(AS, 2) == 1


def test_spanning_rows_replay_to_zero():
    # every row regenerates from the recipe; regenerating and subtracting
    # must land on the zero combination
    first = spanning_lincombs(LIE, 3)
    again = spanning_lincombs(LIE, 3)
    assert first == again
    for x, y in zip(first, again):
        assert (x - y).is_zero()


# -- quotient dimensions --------------------------------------------------------

def test_quotient_dims_small():
    assert quotient_dim(LIE, 3) == 2
    assert quotient_dim(COM, 4) == 1
    assert quotient_dim(ASS, 3) == 6


def test_quotient_bounded_by_free():
    for p, n in ((LIE, 2), (LIE, 3), (COM, 3), (ASS, 3), (AS, 4)):
        assert quotient_dim(p, n) <= free_dim(p, n)


def test_unsupported_signature_rejected():
    ucom = get_preset("ucom")
    with pytest.raises(ValueError):
        quotient_dim(ucom, 2)
    with pytest.raises(ValueError):
        ideal_spanning_set(ucom, 2)


def test_arity_cap():
    with pytest.raises(ValueError):
        quotient_dim(LIE, DEFAULT_ARITY_CAP + 1)
    with pytest.raises(ValueError):
        quotient_dim(LIE, 0)


# -- equality modulo the ideal ---------------------------------------------------

def test_as_associativity_classes_agree():
    assert equal_mod_ideal(AS, lc("mu(mu(1,2),3)", AS), lc("mu(1,mu(2,3))", AS))


def test_relations_are_zero_in_quotient():
    for p in (AS, COM, LIE, ASS):
        for rel in p.relations:
            zero = LinComb(rel.arity, [])
            assert equal_mod_ideal(p, rel, zero)


def test_lie_sign_classes():
    assert equal_mod_ideal(LIE, lc("l(1,2)", LIE), lc("-1*l(2,1)", LIE))
    assert not equal_mod_ideal(LIE, lc("l(1,2)", LIE), lc("l(2,1)", LIE))


def test_equal_requires_matching_arity():
    with pytest.raises(ValueError):
        equal_mod_ideal(LIE, lc("l(1,2)", LIE), lc("l(l(1,2),3)", LIE))


def _random_lincomb(rng, p, n, nterms=2):
    basis = enumerate_basis(p.signature, n)
    return LinComb(n, [(rng.choice(basis), Fraction(rng.randint(-3, 3)))
                       for _ in range(nterms)])


def test_equal_mod_ideal_is_equivalence():
    rng = random.Random(61)
    n = 3
    xs = [_random_lincomb(rng, LIE, n) for _ in range(6)]
    for x in xs:
        assert equal_mod_ideal(LIE, x, x)
    for x, y in itertools.combinations(xs, 2):
        assert equal_mod_ideal(LIE, x, y) == equal_mod_ideal(LIE, y, x)
    for x, y, z in itertools.permutations(xs, 3):
        if equal_mod_ideal(LIE, x, y) and equal_mod_ideal(LIE, y, z):
            assert equal_mod_ideal(LIE, x, z)


def test_ideal_is_symmetric_group_stable():
    rng = random.Random(62)
    zero3 = LinComb(3, [])
    members = list(spanning_lincombs(LIE, 3))
    for _ in range(40):
        v = rng.choice(members)
        s = random_perm(rng, 3)
        assert equal_mod_ideal(LIE, lin_act(v, s), zero3)


def test_ideal_absorbs_composition():
    rng = random.Random(63)
    members = list(spanning_lincombs(LIE, 2)) + list(spanning_lincombs(LIE, 3))
    l = LinComb.of(gen_corolla(LIE.signature, "l"))
    for _ in range(30):
        v = rng.choice(members)
        # composing an ideal member into a slot of l stays in the ideal
        i = rng.randint(1, 2)
        out = lin_circ(l, i, v)
        if out.arity <= 4:
            assert equal_mod_ideal(LIE, out, LinComb(out.arity, []))
        # and plugging generators into the member stays in the ideal
        out2 = lin_circ(v, rng.randint(1, v.arity), l)
        if out2.arity <= 4:
            assert equal_mod_ideal(LIE, out2, LinComb(out2.arity, []))


# -- presentation validation -----------------------------------------------------

def test_is_quadratic():
    assert is_quadratic(AS)
    assert is_quadratic(ASS)
    assert not is_quadratic(LIE)   # the sign relation has weight 1
    assert not is_quadratic(COM)
    empty = make_presentation("empty", Signature((("m", 2),), "symmetric"), [])
    assert is_quadratic(empty)


def test_presentation_rejects_foreign_generator():
    sig = Signature((("m", 2),), "symmetric")
    other = Signature((("l", 2),), "symmetric")
    rel = parse_lincomb("l(1,2) + l(2,1)", other)
    with pytest.raises(ValueError) as err:
        make_presentation("bad", sig, [rel])
    assert "l" in str(err.value)


def test_presentation_rejects_low_arity_relation():
    sig = Signature((("m", 2),), "symmetric")
    rel = parse_lincomb("id", sig)
    with pytest.raises(ValueError):
        make_presentation("bad", sig, [rel])


def test_lin_gamma_of_relation_lands_in_ideal():
    # r o (s_1, s_2) for the sign relation: still in the ideal at arity 3
    anti = LIE.relations[0]
    l = LinComb.of(gen_corolla(LIE.signature, "l"))
    triv = LinComb.of(enumerate_basis(LIE.signature, 1)[0])
    out = lin_gamma(anti, [l, triv])
    assert equal_mod_ideal(LIE, out, LinComb(3, []))
