import random

from operads.free_operad import act, gamma
from operads.laws import (check_term_equivariance, random_term, run_suite)
from operads.permutations import Permutation
from operads.presets import get_preset


def test_suite_passes_on_presets():
    for name in ("lie", "com", "ass", "as", "ucom"):
        rows = run_suite(get_preset(name), cases=40, seed=3)
        assert [r.law for r in rows] == ["associativity", "unit",
                                         "equivariance", "partial-total"]
        assert all(r.failures == 0 for r in rows), (name, rows)


def test_suite_is_deterministic():
    a = run_suite(get_preset("lie"), cases=25, seed=11)
    b = run_suite(get_preset("lie"), cases=25, seed=11)
    assert [(r.law, r.failures) for r in a] == [(r.law, r.failures) for r in b]


def _corrupted_gamma(host, args):
    # silently transpose the first two inputs of every composite
    out = gamma(host, args)
    if out.arity >= 2:
        w = list(range(1, out.arity + 1))
        w[0], w[1] = w[1], w[0]
        out = act(out, Permutation(w))
    return out


def test_corrupted_composition_trips_equivariance():
    rows = run_suite(get_preset("lie"), cases=60, seed=5,
                     gamma_impl=_corrupted_gamma)
    by_law = {r.law: r for r in rows}
    assert by_law["equivariance"].failures > 0


def test_corrupted_composition_detected_directly():
    rng = random.Random(6)
    sig = get_preset("lie").signature
    hits = 0
    for _ in range(80):
        if not check_term_equivariance(rng, sig, gamma_fn=_corrupted_gamma):
            hits += 1
    assert hits > 0


def test_random_term_produces_requested_arity():
    rng = random.Random(7)
    sig = get_preset("lie").signature
    for n in range(1, 6):
        for _ in range(20):
            assert random_term(rng, sig, n).arity == n
    unital = get_preset("ucom").signature
    for n in range(0, 4):
        for _ in range(20):
            assert random_term(rng, unital, n).arity == n
