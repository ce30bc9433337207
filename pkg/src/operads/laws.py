"""Randomized checks of the operad laws.

Each check builds a random instance (decorated terms over a signature, or
dense multilinear maps on a small rational space) and tests one law by
exact equality: total associativity, the unit laws, equivariance of the
symmetric action, the two partial-composition associativity shapes, and
agreement of total composition with iterated insertions in two different
orders. Deterministic for a fixed seed.

``run_suite`` drives the four-row table used by the command line; the
composition used for the term-level checks can be swapped out, which the
tests use to confirm the suite actually detects a broken composition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .endomorphism import MultilinearMap, act_endo, circ_endo, compose_endo
from .free_operad import Signature, Term, act, circ, gamma, gen_corolla, trivial_term
from .permutations import Permutation, equivariance_twist
from .quotient import Presentation


def random_perm(rng: random.Random, n: int) -> Permutation:
    word = list(range(1, n + 1))
    rng.shuffle(word)
    return Permutation(word)


def _random_parts(rng: random.Random, total: int, k: int,
                  allow_zero: bool) -> list[int]:
    floor = 0 if allow_zero else 1
    parts = [floor] * k
    spare = total - floor * k
    for _ in range(spare):
        parts[rng.randrange(k)] += 1
    return parts


def random_term(rng: random.Random, sig: Signature, arity: int,
                depth: int = 3) -> Term:
    """A random decorated term of the requested arity."""
    zero_gens = [g for g, k in sig.generators if k == 0]
    if arity == 0:
        if not zero_gens:
            raise ValueError("no 0-ary generators in this signature")
        return gen_corolla(sig, rng.choice(zero_gens))
    if arity == 1 and (depth <= 0 or rng.random() < 0.45):
        return trivial_term()
    splittable = [(g, k) for g, k in sig.generators if k >= 2]
    if not splittable or (not zero_gens and arity < min(k for _, k in splittable)):
        return trivial_term() if arity == 1 else _must_split(sig, arity)
    g, k = rng.choice(splittable)
    if not zero_gens and arity < k:
        return trivial_term() if arity == 1 else _must_split(sig, arity)
    parts = _random_parts(rng, arity, k, allow_zero=bool(zero_gens))
    t = gamma(gen_corolla(sig, g),
              [random_term(rng, sig, p, depth - 1) for p in parts])
    if sig.mode == "symmetric" and arity >= 2:
        t = act(t, random_perm(rng, arity))
    return t


def _must_split(sig: Signature, arity: int) -> Term:  # pragma: no cover
    raise ValueError(f"cannot build a term of arity {arity} over {sig}")


def random_map(rng: random.Random, dim: int, arity: int,
               lo: int = -2, hi: int = 2) -> MultilinearMap:
    size = dim ** (arity + 1)
    return MultilinearMap(dim, arity,
                          [Fraction(rng.randint(lo, hi)) for _ in range(size)])


def random_vector(rng: random.Random, dim: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-2, 2)) for _ in range(dim))


# -- individual law checks (term level) -----------------------------------

GammaFn = Callable[[Term, Sequence[Term]], Term]


def check_term_associativity(rng, sig, max_arity=5, gamma_fn: GammaFn = gamma) -> bool:
    n = rng.randint(1, 3)
    host = random_term(rng, sig, n, depth=1)
    mid_arities = _random_parts(rng, rng.randint(n, max_arity), n, allow_zero=False)
    mids = [random_term(rng, sig, a, depth=1) for a in mid_arities]
    inner = []
    for a in mid_arities:
        ks = _random_parts(rng, rng.randint(a, max_arity), a, allow_zero=False)
        inner.append([random_term(rng, sig, k, depth=1) for k in ks])
    lhs = gamma_fn(host, [gamma_fn(m, inn) for m, inn in zip(mids, inner)])
    flat = [t for inn in inner for t in inn]
    rhs = gamma_fn(gamma_fn(host, mids), flat)
    return lhs == rhs


def check_term_units(rng, sig, max_arity=5, gamma_fn: GammaFn = gamma) -> bool:
    n = rng.randint(1, max_arity)
    t = random_term(rng, sig, n)
    left = gamma_fn(trivial_term(), [t])
    right = gamma_fn(t, [trivial_term()] * n)
    i = rng.randint(1, n)
    mid = circ(t, i, trivial_term())
    return left == t and right == t and mid == t


def check_term_equivariance(rng, sig, max_arity=5,
                            gamma_fn: GammaFn = gamma) -> bool:
    n = rng.randint(1, 3)
    host = random_term(rng, sig, n, depth=1)
    arities = _random_parts(rng, rng.randint(n, max_arity), n, allow_zero=False)
    args = [random_term(rng, sig, a, depth=1) for a in arities]
    sigma = random_perm(rng, n)
    pis = [random_perm(rng, a) for a in arities]
    lhs = gamma_fn(act(host, sigma),
                   [act(args[sigma(j) - 1], pis[sigma(j) - 1])
                    for j in range(1, n + 1)])
    rhs = act(gamma_fn(host, args), equivariance_twist(sigma, pis))
    return lhs == rhs


def check_term_partial_nested(rng, sig, max_arity=5) -> bool:
    ell = rng.randint(1, 3)
    m = rng.randint(1, 3)
    k = rng.randint(1, max(1, max_arity - ell - m + 2))
    lam = random_term(rng, sig, ell, depth=1)
    mu = random_term(rng, sig, m, depth=1)
    nu = random_term(rng, sig, k, depth=1)
    i = rng.randint(1, ell)
    j = rng.randint(1, m)
    lhs = circ(circ(lam, i, mu), i + j - 1, nu)
    rhs = circ(lam, i, circ(mu, j, nu))
    return lhs == rhs


def check_term_partial_disjoint(rng, sig, max_arity=5) -> bool:
    ell = rng.randint(2, 4)
    lam = random_term(rng, sig, ell, depth=1)
    m = rng.randint(1, max(1, max_arity - ell))
    mu = random_term(rng, sig, m, depth=1)
    nu = random_term(rng, sig, rng.randint(1, 2), depth=1)
    i = rng.randint(1, ell - 1)
    k = rng.randint(i + 1, ell)
    lhs = circ(circ(lam, i, mu), k - 1 + m, nu)
    rhs = circ(circ(lam, k, nu), i, mu)
    return lhs == rhs


def check_term_partial_total(rng, sig, max_arity=5,
                             gamma_fn: GammaFn = gamma) -> bool:
    n = rng.randint(1, 3)
    host = random_term(rng, sig, n, depth=1)
    arities = _random_parts(rng, rng.randint(n, max_arity), n, allow_zero=False)
    args = [random_term(rng, sig, a, depth=1) for a in arities]
    total = gamma_fn(host, args)
    # right to left: earlier slots stay put
    acc = host
    for i in range(n, 0, -1):
        acc = circ(acc, i, args[i - 1])
    rl = acc
    # left to right: slots shift by the arities already inserted
    acc = host
    pos = 1
    for i in range(1, n + 1):
        acc = circ(acc, pos, args[i - 1])
        pos += args[i - 1].arity
    lr = acc
    return total == rl == lr


# -- individual law checks (multilinear maps) ---------------------------

def _endo_shapes(rng, max_total=5):
    n = rng.randint(1, 3)
    arities = _random_parts(rng, rng.randint(n, max_total), n, allow_zero=False)
    return n, arities


def check_endo_associativity(rng, dim=2) -> bool:
    n, mids = _endo_shapes(rng, max_total=4)
    host = random_map(rng, dim, n)
    mid_maps = [random_map(rng, dim, a) for a in mids]
    inner = []
    for a in mids:
        ks = _random_parts(rng, rng.randint(a, a + 1), a, allow_zero=False)
        inner.append([random_map(rng, dim, k) for k in ks])
    lhs = compose_endo(host, [compose_endo(m, inn)
                              for m, inn in zip(mid_maps, inner)])
    rhs = compose_endo(compose_endo(host, mid_maps),
                       [g for inn in inner for g in inn])
    return lhs == rhs


def check_endo_units(rng, dim=2) -> bool:
    from .endomorphism import identity_map
    n = rng.randint(1, 3)
    f = random_map(rng, dim, n)
    return (compose_endo(f, [identity_map(dim)] * n) == f
            and compose_endo(identity_map(dim), [f]) == f)


def check_endo_equivariance(rng, dim=2) -> bool:
    n, arities = _endo_shapes(rng, max_total=4)
    f = random_map(rng, dim, n)
    gs = [random_map(rng, dim, a) for a in arities]
    sigma = random_perm(rng, n)
    pis = [random_perm(rng, a) for a in arities]
    lhs = compose_endo(act_endo(f, sigma),
                       [act_endo(gs[sigma(j) - 1], pis[sigma(j) - 1])
                        for j in range(1, n + 1)])
    rhs = act_endo(compose_endo(f, gs), equivariance_twist(sigma, pis))
    return lhs == rhs


def check_endo_partial_nested(rng, dim=2) -> bool:
    ell, m, k = rng.randint(1, 2), rng.randint(1, 2), rng.randint(1, 2)
    lam, mu, nu = (random_map(rng, dim, a) for a in (ell, m, k))
    i, j = rng.randint(1, ell), rng.randint(1, m)
    return (circ_endo(circ_endo(lam, i, mu), i + j - 1, nu)
            == circ_endo(lam, i, circ_endo(mu, j, nu)))


def check_endo_partial_disjoint(rng, dim=2) -> bool:
    ell = rng.randint(2, 3)
    lam = random_map(rng, dim, ell)
    mu = random_map(rng, dim, rng.randint(1, 2))
    nu = random_map(rng, dim, rng.randint(1, 2))
    i = rng.randint(1, ell - 1)
    k = rng.randint(i + 1, ell)
    return (circ_endo(circ_endo(lam, i, mu), k - 1 + mu.arity, nu)
            == circ_endo(circ_endo(lam, k, nu), i, mu))


def check_endo_partial_total(rng, dim=2) -> bool:
    n, arities = _endo_shapes(rng, max_total=4)
    f = random_map(rng, dim, n)
    gs = [random_map(rng, dim, a) for a in arities]
    total = compose_endo(f, gs)
    acc = f
    for i in range(n, 0, -1):
        acc = circ_endo(acc, i, gs[i - 1])
    rl = acc
    acc = f
    pos = 1
    for g in gs:
        acc = circ_endo(acc, pos, g)
        pos += g.arity
    lr = acc
    return total == rl == lr


# -- suite ----------------------------------------------------------------

@dataclass
class LawResult:
    law: str
    cases: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0


def run_suite(p: Presentation, cases: int, seed: int, max_arity: int = 5,
              gamma_impl: GammaFn | None = None) -> list[LawResult]:
    """The four-law table: associativity, unit, equivariance, partial/total.

    Half of the instances for each law run on terms over ``p``'s
    signature, half on multilinear maps of dimension 1..3. Planar
    signatures skip the term half of the equivariance row (there is no
    action to test) and rely on the map half.
    """
    rng = random.Random(seed)
    gamma_fn = gamma_impl or gamma
    sig = p.signature
    symmetric = sig.mode == "symmetric"
    rows = []
    checks = {
        "associativity": (
            lambda: check_term_associativity(rng, sig, max_arity, gamma_fn),
            lambda: check_endo_associativity(rng, rng.randint(1, 2)),
        ),
        "unit": (
            lambda: check_term_units(rng, sig, max_arity, gamma_fn),
            lambda: check_endo_units(rng, rng.randint(1, 3)),
        ),
        "equivariance": (
            (lambda: check_term_equivariance(rng, sig, max_arity, gamma_fn))
            if symmetric else None,
            lambda: check_endo_equivariance(rng, rng.randint(1, 2)),
        ),
        "partial-total": (
            lambda: check_term_partial_total(rng, sig, max_arity, gamma_fn),
            lambda: check_endo_partial_total(rng, rng.randint(1, 2)),
        ),
    }
    for law, (term_check, endo_check) in checks.items():
        failures = 0
        for c in range(cases):
            use_term = term_check is not None and (c % 2 == 0 or endo_check is None)
            ok = term_check() if use_term else endo_check()
            if not ok:
                failures += 1
        rows.append(LawResult(law, cases, failures))
    return rows
