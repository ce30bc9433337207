import random
import string
from fractions import Fraction

import pytest

from operads.free_operad import Signature, enumerate_basis, weight
from operads.laws import random_term
from operads.permutations import Permutation
from operads.presets import PRESET_SOURCES, get_preset
from operads.representations import builtin_algebra, rep_from_binary
from operads.symmetrized import PermCombination
from operads.termio import (ParseError, SourceSpan, dump_presentation,
                            dump_rep_file, load_presentation, load_rep_file,
                            parse_lincomb, parse_perm_combination,
                            parse_permutation, parse_term,
                            print_lincomb, print_perm_combination,
                            print_permutation, print_term)

SYM = Signature((("mu", 2),), mode="symmetric")
PLN = Signature((("mu", 2),), mode="planar")
LIE = Signature((("l", 2),), mode="symmetric")


# -- terms --------------------------------------------------------------------

def test_parse_left_comb():
    t = parse_term("mu(mu(1,2),3)", PLN)
    assert weight(t) == 2
    assert print_term(t) == "mu(mu(1,2),3)"


def test_parse_acted_corolla():
    t = parse_term("l(2,1)", LIE)
    assert t.labels == (2, 1)


def test_duplicate_leaf_label_rejected():
    with pytest.raises(ParseError) as err:
        parse_term("mu(1,1)", SYM)
    assert "bijection" in err.value.message


def test_missing_leaf_label_rejected():
    with pytest.raises(ParseError):
        parse_term("mu(1,3)", SYM)


def test_planar_mode_requires_increasing_labels():
    with pytest.raises(ParseError) as err:
        parse_term("mu(2,1)", PLN)
    assert "planar" in err.value.message
    # the same text is fine in symmetric mode
    assert parse_term("mu(2,1)", SYM).labels == (2, 1)


def test_unit_parses_and_prints():
    assert print_term(parse_term("id", SYM)) == "id"
    assert parse_term("1", SYM) == parse_term("id", SYM)


def test_unknown_generator_has_span():
    with pytest.raises(ParseError) as err:
        parse_term("nu(1,2)", SYM)
    assert err.value.span.start == 0 and err.value.span.end == 2


def test_arity_mismatch_reported():
    with pytest.raises(ParseError) as err:
        parse_term("mu(1,2,3)", SYM)
    assert "arity 2" in err.value.message


def test_whitespace_is_free():
    assert parse_term(" mu( mu(1 , 2), 3 ) ", PLN) == parse_term("mu(mu(1,2),3)", PLN)


def test_round_trip_random_terms():
    rng = random.Random(81)
    for _ in range(500):
        sig = rng.choice([SYM, LIE])
        t = random_term(rng, sig, rng.randint(1, 5))
        assert parse_term(print_term(t), sig) == t


def test_round_trip_nullary():
    uas = Signature((("eta", 0), ("mu", 2)), mode="planar")
    t = parse_term("mu(eta(),1)", uas)
    assert t.arity == 1
    assert print_term(t) == "mu(eta(),1)"


# -- linear combinations ---------------------------------------------------------

def test_parse_sign_relation():
    x = parse_lincomb("l(1,2) + l(2,1)", LIE)
    assert len(x.terms) == 2 and x.arity == 2
    assert all(c == 1 for _, c in x.terms)


def test_parse_cancellation():
    assert parse_lincomb("2*mu(1,2) - 2*mu(1,2)", SYM).is_zero()


def test_parse_jacobi_sum():
    x = parse_lincomb("l(l(1,2),3) + l(l(2,3),1) + l(l(3,1),2)", LIE)
    assert len(x.terms) == 3
    assert all(c == 1 for _, c in x.terms)


def test_parse_rational_coefficients():
    x = parse_lincomb("3/2*mu(1,2) - 1/2*mu(2,1)", SYM)
    assert sorted(c for _, c in x.terms) == [Fraction(-1, 2), Fraction(3, 2)]


def test_lincomb_round_trip():
    rng = random.Random(82)
    from operads.free_operad import LinComb
    for _ in range(200):
        n = rng.randint(1, 4)
        basis = enumerate_basis(LIE, n)
        x = LinComb(n, [(rng.choice(basis),
                         Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
                        for _ in range(rng.randint(1, 3))])
        if x.is_zero():
            continue
        assert parse_lincomb(print_lincomb(x), LIE) == x


def test_mixed_arity_rejected():
    with pytest.raises(ParseError) as err:
        parse_lincomb("mu(1,2) + mu(mu(1,2),3)", SYM)
    assert "arities" in err.value.message


def test_leading_minus():
    x = parse_lincomb("-mu(1,2)", SYM)
    assert list(x.terms)[0][1] == -1


# -- permutations ------------------------------------------------------------------

def test_parse_one_line():
    assert parse_permutation("[2,3,1]") == Permutation([2, 3, 1])


def test_parse_cycles():
    assert parse_permutation("(1 2 3)") == Permutation([2, 3, 1])
    assert parse_permutation("(1 3)") == Permutation([3, 2, 1])
    assert parse_permutation("(1 2)(3 4)") == Permutation([2, 1, 4, 3])


def test_cycle_errors():
    with pytest.raises(ParseError):
        parse_permutation("(1 1)")
    with pytest.raises(ParseError):
        parse_permutation("(1 2)(2 3)")


def test_permutation_round_trip():
    rng = random.Random(83)
    for _ in range(120):
        n = rng.randint(1, 7)
        w = list(range(1, n + 1))
        rng.shuffle(w)
        p = Permutation(w)
        assert parse_permutation(print_permutation(p)) == p


def test_perm_combination_round_trip():
    src = "3/2*[2,1] - [1,2]"
    x = parse_perm_combination(src)
    assert x.coeff(Permutation([2, 1])) == Fraction(3, 2)
    assert x.coeff(Permutation([1, 2])) == -1
    assert parse_perm_combination(print_perm_combination(x)) == x


# -- presentation files ---------------------------------------------------------------

def test_bundled_lie_file_loads():
    p = load_presentation(PRESET_SOURCES["lie"])
    assert p.name == "lie"
    assert p.signature.generators == (("l", 2),)
    assert p.relation_names == ("anti", "jacobi")
    assert len(p.relations) == 2


def test_bundled_as_file_loads():
    p = load_presentation(PRESET_SOURCES["as"])
    assert p.name == "as" and p.mode == "planar"
    assert p.relation_names == ("assoc",)


def test_data_files_match_compiled_sources():
    import importlib.resources as res
    for name, src in PRESET_SOURCES.items():
        shipped = (res.files("operads") / "data" / f"{name}.opd").read_text()
        assert shipped == src
        assert load_presentation(shipped) == get_preset(name)


def test_presentation_round_trip():
    p = get_preset("lie")
    assert load_presentation(dump_presentation(p)) == p


def test_unknown_generator_in_relation_named():
    src = """{"name": "bad", "mode": "symmetric",
              "generators": [{"name": "m", "arity": 2}],
              "relations": ["q(1,2) - m(1,2)"]}"""
    with pytest.raises(ParseError) as err:
        load_presentation(src)
    assert "q" in err.value.message


def test_schema_violations_have_field_names():
    with pytest.raises(ParseError) as err:
        load_presentation('{"name": "x", "mode": "symmetric", "generators": []}')
    assert "relations" in err.value.message
    with pytest.raises(ParseError) as err:
        load_presentation('{"name": "x", "mode": "symmetric", '
                          '"generators": [{"name": "m"}], "relations": []}')
    assert "generators[0]" in err.value.message


def test_not_json_is_a_parse_error():
    with pytest.raises(ParseError):
        load_presentation("not json at all {{{")


# -- representation files ----------------------------------------------------------------

def test_rep_file_round_trip():
    lie = get_preset("lie")
    rep = rep_from_binary(lie, builtin_algebra("cross3").product)
    text = dump_rep_file(rep)
    assert load_rep_file(text, lie) == rep


def test_shipped_cross3_rep_file():
    import importlib.resources as res
    lie = get_preset("lie")
    text = (res.files("operads") / "data" / "cross3.rep").read_text()
    rep = load_rep_file(text, lie)
    assert rep == rep_from_binary(lie, builtin_algebra("cross3").product)


def test_rep_file_errors():
    lie = get_preset("lie")
    with pytest.raises(ParseError):
        load_rep_file("l[1;2,3] = 1", lie)       # no dim line
    with pytest.raises(ParseError):
        load_rep_file("dim = 3\nl[1;2] = 1", lie)  # wrong arity
    with pytest.raises(ParseError):
        load_rep_file("dim = 3\nq[1;2,3] = 1", lie)
    with pytest.raises(ParseError):
        load_rep_file("dim = 3\nl[1;2,9] = 1", lie)


# -- totality ---------------------------------------------------------------------

def test_parsers_never_crash_on_fuzz():
    rng = random.Random(84)
    alphabet = string.ascii_letters + string.digits + "()[],*+-/ :"
    for _ in range(1500):
        junk = "".join(rng.choice(alphabet)
                       for _ in range(rng.randint(0, 25)))
        for fn in (lambda s: parse_term(s, SYM),
                   lambda s: parse_lincomb(s, LIE),
                   parse_permutation,
                   parse_perm_combination,
                   load_presentation):
            try:
                fn(junk)
            except ParseError:
                pass


def test_source_span_sanity():
    with pytest.raises(ValueError):
        SourceSpan(4, 2)
    try:
        parse_term("mu(1,", SYM)
    except ParseError as err:
        assert err.span.start <= err.span.end
