"""Symmetries as bijections on (variable, value) literals.

A symmetry acts on a finite literal universe, normally the Cartesian product
of the declared variable domains.  Maps act on assignments element-wise, so
both variable symmetries (moving cells of a square) and value symmetries
(inverting labels) are expressed the same way.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Callable, Iterable, Mapping, Sequence
from typing import NamedTuple

__all__ = [
    "Literal",
    "Assignment",
    "SymmetryMap",
    "GeneratorSet",
    "SymmetryError",
    "UniverseMismatchError",
    "ClosureBoundError",
    "InconsistentGenerationError",
    "assignment",
    "as_dict",
    "is_functional",
    "product_universe",
    "identity",
    "apply",
    "is_internal_symmetry",
    "compose",
    "compose_all",
    "inverse",
    "conjugate",
    "commutes",
    "closure",
    "generate",
    "DEFAULT_CLOSURE_BOUND",
]

DEFAULT_CLOSURE_BOUND = 10**6


class Literal(NamedTuple):
    var: int
    val: int


Assignment = frozenset  # frozenset[Literal]


class SymmetryError(Exception):
    pass


class UniverseMismatchError(SymmetryError):
    pass


class ClosureBoundError(SymmetryError):
    pass


class InconsistentGenerationError(SymmetryError):
    def __init__(self, var: int, values: Iterable[int]):
        self.var = var
        self.values = tuple(sorted(values))
        super().__init__(f"variable {var} generated with clashing values {self.values}")


def assignment(values: Mapping[int, int] | Iterable[tuple[int, int]]) -> frozenset[Literal]:
    """Build an assignment from ``{var: val}`` or an iterable of pairs."""
    items = values.items() if isinstance(values, Mapping) else values
    return frozenset(Literal(var, val) for var, val in items)


def is_functional(lits: Iterable[Literal]) -> bool:
    seen: dict[int, int] = {}
    for var, val in lits:
        if seen.setdefault(var, val) != val:
            return False
    return True


def as_dict(lits: Iterable[Literal]) -> dict[int, int]:
    """Return ``{var: val}``; raises InconsistentGenerationError if not functional."""
    out: dict[int, int] = {}
    clash: dict[int, set[int]] = {}
    for var, val in lits:
        old = out.setdefault(var, val)
        if old != val:
            clash.setdefault(var, {old}).add(val)
    if clash:
        var = min(clash)
        raise InconsistentGenerationError(var, clash[var])
    return out


def product_universe(domains: Mapping[int, Iterable[int]] | Sequence[Iterable[int]]) -> tuple[Literal, ...]:
    """Every (var, val) literal of the given domains, in var-then-value order."""
    items = domains.items() if isinstance(domains, Mapping) else enumerate(domains)
    return tuple(Literal(var, val) for var, dom in sorted(items) for val in sorted(dom))


class SymmetryMap:
    """An immutable bijection on a finite literal universe.

    Bijectivity is checked when the map is built.  Equality and hashing are
    extensional: two maps are equal iff they send every literal to the same
    image, regardless of their names.
    """

    __slots__ = ("name", "_forward", "_universe", "_images", "_hash")

    def __init__(self, forward: Mapping[Literal, Literal] | Mapping[tuple[int, int], tuple[int, int]],
                 name: str = "sigma"):
        fwd = {Literal(*k): Literal(*v) for k, v in forward.items()}
        universe = frozenset(fwd)
        if frozenset(fwd.values()) != universe:
            stray = sorted(frozenset(fwd.values()) - universe)
            if stray:
                raise SymmetryError(f"{name}: image {stray[0]} lies outside the universe")
            raise SymmetryError(f"{name}: map is not injective")
        self.name = name
        self._forward = fwd
        self._universe = universe
        order = sorted(universe)
        self._images = tuple(fwd[x] for x in order)
        self._hash = None

    @classmethod
    def from_function(cls, universe: Iterable[Literal], fn: Callable[[Literal], tuple[int, int]],
                      name: str = "sigma") -> SymmetryMap:
        return cls({Literal(*x): Literal(*fn(Literal(*x))) for x in universe}, name=name)

    @property
    def universe(self) -> frozenset[Literal]:
        return self._universe

    @property
    def forward(self) -> Mapping[Literal, Literal]:
        return self._forward

    def __call__(self, lit: tuple[int, int]) -> Literal:
        try:
            return self._forward[lit]
        except KeyError:
            raise UniverseMismatchError(f"{self.name}: literal {tuple(lit)} outside universe") from None

    def renamed(self, name: str) -> SymmetryMap:
        out = SymmetryMap.__new__(SymmetryMap)
        out.name = name
        out._forward = self._forward
        out._universe = self._universe
        out._images = self._images
        out._hash = self._hash
        return out

    def is_identity(self) -> bool:
        return all(k == v for k, v in self._forward.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetryMap):
            return NotImplemented
        return self._universe == other._universe and self._images == other._images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._images)
        return self._hash

    def __repr__(self) -> str:
        return f"SymmetryMap({self.name!r}, |U|={len(self._universe)})"

    def to_json(self) -> str:
        pairs = [[a.var, a.val, b.var, b.val] for a, b in sorted(self._forward.items())]
        return json.dumps({"name": self.name, "pairs": pairs})

    @classmethod
    def from_json(cls, text: str) -> SymmetryMap:
        obj = json.loads(text)
        fwd = {Literal(a, b): Literal(c, d) for a, b, c, d in obj["pairs"]}
        return cls(fwd, name=obj.get("name", "sigma"))


class GeneratorSet(tuple):
    """A tuple of SymmetryMaps sharing one universe."""

    def __new__(cls, generators: Iterable[SymmetryMap] = ()):
        gens = tuple(generators)
        if gens:
            u = gens[0].universe
            for g in gens[1:]:
                if g.universe != u:
                    raise UniverseMismatchError(f"generator {g.name} has a different universe from {gens[0].name}")
        return super().__new__(cls, gens)

    @property
    def universe(self) -> frozenset[Literal]:
        return self[0].universe if self else frozenset()


def identity(universe: Iterable[tuple[int, int]], name: str = "id") -> SymmetryMap:
    return SymmetryMap({Literal(*x): Literal(*x) for x in universe}, name=name)


def apply(sigma: SymmetryMap, lits: Iterable[tuple[int, int]]) -> frozenset[Literal]:
    """Image of a set of literals.  The result is not checked for functionality."""
    fwd = sigma.forward
    try:
        return frozenset(fwd[x] for x in lits)
    except KeyError as exc:
        raise UniverseMismatchError(f"{sigma.name}: literal {exc.args[0]} outside universe") from None


def is_internal_symmetry(sigma: SymmetryMap, solution: Iterable[tuple[int, int]]) -> bool:
    sol = frozenset(Literal(*x) for x in solution)
    return apply(sigma, sol) == sol


def _same_universe(a: SymmetryMap, b: SymmetryMap) -> None:
    if a.universe != b.universe:
        raise UniverseMismatchError(f"{a.name} and {b.name} act on different universes")


def compose(sigma: SymmetryMap, tau: SymmetryMap, name: str | None = None) -> SymmetryMap:
    """``sigma o tau``: apply tau first, then sigma."""
    _same_universe(sigma, tau)
    s, t = sigma.forward, tau.forward
    return SymmetryMap({x: s[y] for x, y in t.items()}, name=name or f"{sigma.name}∘{tau.name}")


def compose_all(*maps: SymmetryMap) -> SymmetryMap:
    out = maps[0]
    for m in maps[1:]:
        out = compose(out, m)
    return out


def inverse(sigma: SymmetryMap) -> SymmetryMap:
    return SymmetryMap({v: k for k, v in sigma.forward.items()}, name=f"{sigma.name}⁻¹")


def conjugate(tau: SymmetryMap, sigma: SymmetryMap) -> SymmetryMap:
    """``tau o sigma o tau^-1``."""
    return compose(tau, compose(sigma, inverse(tau)), name=f"{tau.name}·{sigma.name}·{tau.name}⁻¹")


def commutes(sigma: SymmetryMap, tau: SymmetryMap) -> bool:
    _same_universe(sigma, tau)
    s, t = sigma.forward, tau.forward
    return all(s[t[x]] == t[s[x]] for x in s)


def closure(generators: Iterable[SymmetryMap], max_size: int = DEFAULT_CLOSURE_BOUND) -> frozenset[SymmetryMap]:
    """All compositions of one or more generators.

    The identity is only included when some product yields it; for finite
    groups it always does.
    """
    if max_size <= 0:
        raise ValueError("max_size must be positive")
    gens = list(dict.fromkeys(GeneratorSet(generators)))
    seen: set[SymmetryMap] = set(gens)
    if len(seen) > max_size:
        raise ClosureBoundError(f"closure exceeds {max_size} maps")
    frontier = list(gens)
    while frontier:
        nxt = []
        for g, h in itertools.product(gens, frontier):
            gh = compose(g, h)
            if gh not in seen:
                seen.add(gh)
                if len(seen) > max_size:
                    raise ClosureBoundError(f"closure exceeds {max_size} maps")
                nxt.append(gh)
        frontier = nxt
    return frozenset(seen)


def generate(base: Iterable[tuple[int, int]], generators: Iterable[SymmetryMap],
             max_size: int = DEFAULT_CLOSURE_BOUND) -> frozenset[Literal]:
    """``B ∪ Σ*(B)``; raises InconsistentGenerationError if a variable gets two values."""
    b = frozenset(Literal(*x) for x in base)
    as_dict(b)
    gens = tuple(generators)
    out = set(b)
    if gens:
        for sigma in closure(gens, max_size):
            out |= apply(sigma, b)
    result = frozenset(out)
    as_dict(result)
    return result
