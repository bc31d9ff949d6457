"""Random universes, symmetries and models shared by the test modules."""

from __future__ import annotations

import random

from symsat.csp import AbsDiff, AllDifferent, LinearSumEq, MinMaxRel, Model, ModelBuilder, NoAP, RelOp
from symsat.symmetry import Literal, SymmetryMap, compose, identity, product_universe


def random_universe(rng: random.Random, max_vars: int = 4, max_dom: int = 4) -> tuple[dict[int, list[int]], tuple[Literal, ...]]:
    nvars = rng.randint(1, max_vars)
    domains = {v: sorted(rng.sample(range(-2, 6), rng.randint(1, max_dom))) for v in range(nvars)}
    return domains, product_universe(domains)


def random_assignment(rng: random.Random, domains: dict[int, list[int]]) -> frozenset[Literal]:
    return frozenset(Literal(v, rng.choice(d)) for v, d in domains.items())


def random_permutation(rng: random.Random, universe, name: str = "rho") -> SymmetryMap:
    src = list(universe)
    dst = src[:]
    rng.shuffle(dst)
    return SymmetryMap(dict(zip(src, dst)), name=name)


def preserving_permutation(rng: random.Random, universe, keep: frozenset[Literal], name: str = "sigma") -> SymmetryMap:
    """Random bijection mapping ``keep`` onto itself (so it is internal to ``keep``)."""
    inside = sorted(keep)
    outside = sorted(set(universe) - keep)
    fwd = {}
    for part in (inside, outside):
        img = part[:]
        rng.shuffle(img)
        fwd.update(zip(part, img))
    return SymmetryMap(fwd, name=name)


def power(sigma: SymmetryMap, k: int) -> SymmetryMap:
    out = identity(sigma.universe)
    for _ in range(k):
        out = compose(sigma, out)
    return out


def commuting_partner(rng: random.Random, sigma: SymmetryMap) -> SymmetryMap:
    """A power of sigma composed with a shuffle of sigma's fixed points."""
    fixed = sorted(x for x in sigma.universe if sigma(x) == x)
    img = fixed[:]
    rng.shuffle(img)
    rho = {x: x for x in sigma.universe}
    rho.update(zip(fixed, img))
    return compose(power(sigma, rng.randint(0, 3)), SymmetryMap(rho, name="rho"), name="tau")


def random_model(rng: random.Random, max_vars: int = 5, max_dom: int = 4) -> Model:
    """A small model with a random mix of constraint kinds."""
    b = ModelBuilder()
    nvars = rng.randint(2, max_vars)
    for v in range(nvars):
        lo = rng.randint(0, 2)
        b.var(f"v{v}", range(lo, lo + rng.randint(1, max_dom)))
    for _ in range(rng.randint(1, 3)):
        kind = rng.randrange(6)
        vs = rng.sample(range(nvars), rng.randint(2, nvars))
        if kind == 4 and nvars >= 3:
            b.add(AbsDiff(*rng.sample(range(nvars), 3)))
            continue
        if kind == 5:
            b.add(MinMaxRel(vs[0], rng.choice(("<", "<=")), rng.choice(("min", "max")), tuple(vs[1:]),
                            scale=rng.choice((-1, 1, 2)), offset=rng.randint(-3, 5)))
            continue
        if kind == 0:
            b.add(AllDifferent(tuple(vs)))
        elif kind == 1:
            coeffs = tuple(rng.choice((-2, -1, 1, 2)) for _ in vs)
            b.add(LinearSumEq(coeffs, tuple(vs), rng.randint(-2, 8)))
        elif kind == 2:
            b.add(RelOp(vs[0], rng.choice(("<", "<=", "==", "!=", ">", ">=")), vs[1]))
        elif kind == 3:
            b.add(NoAP(tuple(sorted(vs)), 2 if len(vs) < 3 else 3))
    return b.build()
