"""A small finite-domain constraint solver.

Domains are kept as integer bitmasks (bit ``k`` stands for value ``base + k``
where ``base`` is the smallest value in the model), so propagators work with
plain big-int arithmetic.  Search is depth-first with smallest-domain-first
variable selection over the model's branch set and ascending values.
"""

from __future__ import annotations

import itertools
import logging
import os
import time
from collections import deque
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field, replace

from .symmetry import Literal, SymmetryMap, UniverseMismatchError

__all__ = [
    "Constraint",
    "AllDifferent",
    "LinearSumEq",
    "RelOp",
    "MinMaxRel",
    "NoAP",
    "SymmetryLink",
    "AbsDiff",
    "Model",
    "ModelBuilder",
    "SearchStats",
    "Solution",
    "Solver",
    "ModelError",
    "UnderDeterminedError",
    "SearchLimitError",
    "solve",
    "enumerate_solutions",
    "count_solutions",
    "check",
    "post_symmetry_constraint",
    "TIME_LIMIT_ENV",
]

log = logging.getLogger(__name__)

TIME_LIMIT_ENV = "SYMSAT_TIME_LIMIT_MS"


class ModelError(ValueError):
    pass


class UnderDeterminedError(RuntimeError):
    """Branching over the branch set left a variable with several values."""

    def __init__(self, var: int, name: str):
        self.var = var
        self.name = name
        super().__init__(f"branch set does not determine variable {name!r} (id {var})")


class SearchLimitError(RuntimeError):
    def __init__(self, reason: str, stats: SearchStats):
        self.reason = reason
        self.stats = stats
        super().__init__(f"search stopped: {reason} after {stats.nodes} nodes")


class Wipeout(Exception):
    """Raised by propagators when a domain becomes empty or a constraint fails."""


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class _Store:
    __slots__ = ("dom", "base", "width", "watch", "queue", "queued", "current")

    def __init__(self, dom: list[int], base: int, width: int, watch: Sequence[Sequence[int]]):
        self.dom = dom
        self.base = base
        self.width = width
        self.watch = watch
        self.queue: deque[int] = deque()
        self.queued: set[int] = set()
        self.current = -1

    def narrow(self, v: int, mask: int) -> bool:
        old = self.dom[v]
        new = old & mask
        if new == old:
            return False
        if not new:
            raise Wipeout
        self.dom[v] = new
        for c in self.watch[v]:
            if c != self.current and c not in self.queued:
                self.queued.add(c)
                self.queue.append(c)
        return True

    def lo(self, v: int) -> int:
        m = self.dom[v]
        return (m & -m).bit_length() - 1 + self.base

    def hi(self, v: int) -> int:
        return self.dom[v].bit_length() - 1 + self.base

    def bit(self, value: int) -> int:
        k = value - self.base
        return 1 << k if k >= 0 else 0

    def range_mask(self, lo: int, hi: int) -> int:
        lo = max(lo - self.base, 0)
        hi = min(hi - self.base, self.width - 1)
        if hi < lo:
            raise Wipeout
        return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)

    def reverse(self, m: int) -> int:
        return int(format(m, f"0{self.width}b")[::-1], 2)


class Constraint:
    """Base class: a scope, an exact checker and a propagator."""

    kind = "constraint"

    @property
    def scope(self) -> tuple[int, ...]:
        raise NotImplementedError

    def check(self, values: Sequence[int]) -> bool:
        raise NotImplementedError

    def propagate(self, st: _Store) -> None:
        pass


@dataclass(frozen=True)
class AllDifferent(Constraint):
    vars: tuple[int, ...]
    kind = "AllDifferent"

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))

    @property
    def scope(self):
        return self.vars

    def check(self, values):
        vals = [values[v] for v in self.vars]
        return len(set(vals)) == len(vals)

    def propagate(self, st):
        dom = st.dom
        vs = self.vars
        while True:
            fixed = 0
            for v in vs:
                m = dom[v]
                if not m & (m - 1):
                    if fixed & m:
                        raise Wipeout
                    fixed |= m
            again = False
            if fixed:
                keep = ~fixed
                for v in vs:
                    m = dom[v]
                    if m & (m - 1) and m & fixed:
                        st.narrow(v, keep)
                        m = dom[v]
                        if not m & (m - 1):
                            again = True
            if again:
                continue
            # pigeonhole; when values and variables balance, a value with a
            # single candidate variable must go there
            once = twice = 0
            for v in vs:
                m = dom[v]
                twice |= once & m
                once |= m
            count = once.bit_count()
            if count < len(vs):
                raise Wipeout
            if count > len(vs):
                return
            unique = once & ~twice
            for v in vs:
                u = dom[v] & unique
                if u:
                    if u & (u - 1):
                        raise Wipeout
                    if st.narrow(v, u):
                        again = True
            if not again:
                return


@dataclass(frozen=True)
class LinearSumEq(Constraint):
    """``sum(coeff * var) == rhs``."""

    coeffs: tuple[int, ...]
    vars: tuple[int, ...]
    rhs: int
    kind = "LinearSumEq"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "vars", tuple(self.vars))
        if len(self.coeffs) != len(self.vars):
            raise ModelError("LinearSumEq: coefficient/variable count mismatch")

    @classmethod
    def sum_of(cls, vars: Iterable[int], rhs: int) -> LinearSumEq:
        vs = tuple(vars)
        return cls((1,) * len(vs), vs, rhs)

    @property
    def scope(self):
        return self.vars

    def check(self, values):
        return sum(c * values[v] for c, v in zip(self.coeffs, self.vars)) == self.rhs

    def propagate(self, st):
        dom = st.dom
        base = st.base
        terms = tuple(zip(self.coeffs, self.vars))
        rhs = self.rhs
        while True:
            lo_sum = hi_sum = 0
            bounds = []
            for c, v in terms:
                m = dom[v]
                lo = (m & -m).bit_length() - 1 + base
                hi = m.bit_length() - 1 + base
                a, b = (c * lo, c * hi) if c > 0 else (c * hi, c * lo)
                lo_sum += a
                hi_sum += b
                bounds.append((a, b))
            if lo_sum > rhs or hi_sum < rhs:
                raise Wipeout
            changed = False
            for (c, v), (a, b) in zip(terms, bounds):
                tlo = rhs - (hi_sum - b)
                thi = rhs - (lo_sum - a)
                if tlo <= a and thi >= b:
                    continue
                if c > 0:
                    xl, xh = _ceil_div(tlo, c), thi // c
                else:
                    xl, xh = _ceil_div(thi, c), tlo // c
                if st.narrow(v, st.range_mask(xl, xh)):
                    changed = True
            if not changed:
                return


_OPS = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


@dataclass(frozen=True)
class RelOp(Constraint):
    """``x op y`` for a variable ``y``, or ``x op const`` when ``const`` is set."""

    x: int
    op: str
    y: int | None = None
    const: int | None = None
    kind = "RelOp"

    def __post_init__(self):
        if self.op not in _OPS:
            raise ModelError(f"RelOp: unknown operator {self.op!r}")
        if (self.y is None) == (self.const is None):
            raise ModelError("RelOp: give exactly one of y or const")

    @property
    def scope(self):
        return (self.x,) if self.y is None else (self.x, self.y)

    def check(self, values):
        rhs = self.const if self.y is None else values[self.y]
        return _OPS[self.op](values[self.x], rhs)

    def propagate(self, st):
        x, op = self.x, self.op
        if self.y is None:
            c = self.const
            if op == "==":
                st.narrow(x, st.bit(c))
            elif op == "!=":
                st.narrow(x, ~st.bit(c))
            elif op == "<":
                st.narrow(x, st.range_mask(st.base, c - 1))
            elif op == "<=":
                st.narrow(x, st.range_mask(st.base, c))
            elif op == ">":
                st.narrow(x, st.range_mask(c + 1, st.base + st.width - 1))
            else:
                st.narrow(x, st.range_mask(c, st.base + st.width - 1))
            return
        y = self.y
        if op in (">", ">="):
            x, y = y, x
            op = "<" if op == ">" else "<="
        if op in ("<", "<="):
            d = 1 if op == "<" else 0
            top = st.base + st.width - 1
            st.narrow(x, st.range_mask(st.base, st.hi(y) - d))
            st.narrow(y, st.range_mask(st.lo(x) + d, top))
        elif op == "==":
            m = st.dom[x] & st.dom[y]
            st.narrow(x, m)
            st.narrow(y, m)
        else:
            mx, my = st.dom[x], st.dom[y]
            if not mx & (mx - 1):
                st.narrow(y, ~mx)
            if not my & (my - 1):
                st.narrow(x, ~my)


@dataclass(frozen=True)
class MinMaxRel(Constraint):
    """``x op offset + scale * agg(vars)`` with ``op`` in {<, <=} and ``agg`` in {min, max}."""

    x: int
    op: str
    agg: str
    vars: tuple[int, ...]
    scale: int = 1
    offset: int = 0
    kind = "MinMaxRel"

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if self.op not in ("<", "<=") or self.agg not in ("min", "max") or not self.vars or self.scale == 0:
            raise ModelError("MinMaxRel: op must be < or <=, agg min or max, scale nonzero")

    @property
    def scope(self):
        return tuple(dict.fromkeys((self.x, *self.vars)))

    def check(self, values):
        agg = min if self.agg == "min" else max
        return _OPS[self.op](values[self.x], self.offset + self.scale * agg(values[v] for v in self.vars))

    def propagate(self, st):
        strict = 1 if self.op == "<" else 0
        # x op offset + scale*s must hold for every s exactly when the
        # aggregate is the one that minimises the right-hand side
        universal = (self.agg == "min") == (self.scale > 0)
        top = st.base + st.width - 1
        while True:
            changed = False
            if universal:
                for s in self.vars:
                    if self.scale > 0:
                        rhs_hi = self.offset + self.scale * st.hi(s)
                        changed |= st.narrow(self.x, st.range_mask(st.base, rhs_hi - strict))
                        need = _ceil_div(st.lo(self.x) + strict - self.offset, self.scale)
                        changed |= st.narrow(s, st.range_mask(need, top))
                    else:
                        rhs_hi = self.offset + self.scale * st.lo(s)
                        changed |= st.narrow(self.x, st.range_mask(st.base, rhs_hi - strict))
                        cap = (st.lo(self.x) + strict - self.offset) // self.scale
                        changed |= st.narrow(s, st.range_mask(st.base, cap))
            else:
                vals = [st.hi(s) if self.scale > 0 else st.lo(s) for s in self.vars]
                rhs_hi = self.offset + self.scale * (max(vals) if self.scale > 0 else min(vals))
                changed |= st.narrow(self.x, st.range_mask(st.base, rhs_hi - strict))
                if all(not st.dom[v] & (st.dom[v] - 1) for v in self.scope):
                    vals = [st.lo(v) for v in range(len(st.dom))]
                    if not self.check(vals):
                        raise Wipeout
            if not changed:
                return


@dataclass(frozen=True)
class NoAP(Constraint):
    """No ``length`` variables at positions in arithmetic progression are all 1."""

    vars: tuple[int, ...]
    length: int
    kind = "NoAP"

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if self.length < 2:
            raise ModelError("NoAP: length must be at least 2")

    @property
    def scope(self):
        return self.vars

    def progressions(self) -> list[tuple[int, ...]]:
        n, k = len(self.vars), self.length
        out = []
        for d in range(1, (n - 1) // (k - 1) + 1):
            for a in range(n - (k - 1) * d):
                out.append(tuple(self.vars[a + j * d] for j in range(k)))
        return out

    def check(self, values):
        return not any(all(values[v] == 1 for v in ap) for ap in self.progressions())

    def propagate(self, st):
        one = st.bit(1)
        dom = st.dom
        aps = self.progressions()
        while True:
            changed = False
            for ap in aps:
                ones = 0
                free = None
                for v in ap:
                    m = dom[v]
                    if m == one:
                        ones += 1
                    elif m & one:
                        free = v if free is None else -1
                if ones == len(ap):
                    raise Wipeout
                if ones == len(ap) - 1 and free is not None and free >= 0:
                    changed |= st.narrow(free, ~one)
            if not changed:
                return


@dataclass(frozen=True)
class SymmetryLink(Constraint):
    """Literal implications ``x == a  =>  y == b``."""

    links: tuple[tuple[Literal, Literal], ...]
    kind = "SymmetryLink"

    def __post_init__(self):
        object.__setattr__(self, "links", tuple((Literal(*a), Literal(*b)) for a, b in self.links))

    @property
    def scope(self):
        return tuple(dict.fromkeys(v for a, b in self.links for v in (a.var, b.var)))

    def check(self, values):
        return all(values[a.var] != a.val or values[b.var] == b.val for a, b in self.links)

    def propagate(self, st):
        dom = st.dom
        while True:
            changed = False
            for a, b in self.links:
                abit = st.bit(a.val)
                if not dom[a.var] & abit:
                    continue
                bbit = st.bit(b.val)
                if not dom[b.var] & bbit:
                    changed |= st.narrow(a.var, ~abit)
                elif dom[a.var] == abit:
                    changed |= st.narrow(b.var, bbit)
            if not changed:
                return


@dataclass(frozen=True)
class AbsDiff(Constraint):
    """``e == |x - y|`` with full domain filtering."""

    e: int
    x: int
    y: int
    kind = "AbsDiff"

    @property
    def scope(self):
        return (self.e, self.x, self.y)

    def check(self, values):
        return values[self.e] == abs(values[self.x] - values[self.y])

    @staticmethod
    def _spread(st: _Store, src: int, offsets: int) -> int:
        """Indices ``i +- d`` for ``i`` in ``src`` and ``d`` in ``offsets`` (raw bit positions)."""
        w = st.width
        out = 0
        if src.bit_count() <= offsets.bit_count():
            rev_off = st.reverse(offsets)
            for i in _bits(src):
                out |= offsets << i
                out |= rev_off >> (w - 1 - i)
        else:
            for d in _bits(offsets):
                out |= src << d
                out |= src >> d
        return out & ((1 << w) - 1)

    def propagate(self, st):
        dom = st.dom
        base = st.base
        e, x, y = self.e, self.x, self.y
        while True:
            dx, dy, de = dom[x], dom[y], dom[e]
            # difference values present in the domains, as a raw mask (bit d = difference d)
            small, big = (dx, dy) if dx.bit_count() <= dy.bit_count() else (dy, dx)
            rev_big = st.reverse(big)
            w = st.width
            diff = 0
            for i in _bits(small):
                diff |= big >> i
                diff |= rev_big >> (w - 1 - i)
            emask = diff >> base if base >= 0 else diff << -base
            changed = st.narrow(e, emask)
            de = dom[e]
            # allowed raw differences from e's domain
            if base >= 0:
                offs = de << base
            else:
                offs = de >> -base
            changed |= st.narrow(x, self._spread(st, dom[y], offs))
            changed |= st.narrow(y, self._spread(st, dom[x], offs))
            if not changed:
                return


@dataclass(frozen=True)
class Model:
    """Variables with finite integer domains, constraints and an optional branch set.

    Variable ids are positions in ``domains``.  Models are immutable; the
    ``add``/``with_branch_set`` helpers return new models.
    """

    domains: tuple[tuple[int, ...], ...]
    constraints: tuple[Constraint, ...] = ()
    names: tuple[str, ...] = ()
    branch_set: tuple[int, ...] | None = None

    def __post_init__(self):
        doms = tuple(tuple(sorted(set(d))) for d in self.domains)
        object.__setattr__(self, "domains", doms)
        object.__setattr__(self, "constraints", tuple(self.constraints))
        names = tuple(self.names) or tuple(f"v{i}" for i in range(len(doms)))
        if len(names) != len(doms):
            raise ModelError("one name per variable required")
        object.__setattr__(self, "names", names)
        n = len(doms)
        for c in self.constraints:
            bad = [v for v in c.scope if not 0 <= v < n]
            if bad:
                raise ModelError(f"{c.kind} references undeclared variable {bad[0]}")
        if self.branch_set is not None:
            bs = tuple(dict.fromkeys(self.branch_set))
            bad = [v for v in bs if not 0 <= v < n]
            if bad:
                raise ModelError(f"branch set references undeclared variable {bad[0]}")
            object.__setattr__(self, "branch_set", bs)

    @property
    def num_vars(self) -> int:
        return len(self.domains)

    def var(self, name: str) -> int:
        return self.names.index(name)

    def literals(self) -> tuple[Literal, ...]:
        return tuple(Literal(v, a) for v, dom in enumerate(self.domains) for a in dom)

    def add(self, *constraints: Constraint) -> Model:
        return replace(self, constraints=self.constraints + tuple(constraints))

    def with_branch_set(self, vars: Iterable[int] | None) -> Model:
        return replace(self, branch_set=None if vars is None else tuple(vars))

    def num_assignments(self) -> int:
        total = 1
        for d in self.domains:
            total *= len(d)
        return total


class ModelBuilder:
    """Mutable helper for assembling a Model."""

    def __init__(self):
        self.domains: list[tuple[int, ...]] = []
        self.names: list[str] = []
        self.constraints: list[Constraint] = []
        self.branch_set: list[int] | None = None

    def var(self, name: str, domain: Iterable[int]) -> int:
        self.domains.append(tuple(domain))
        self.names.append(name)
        return len(self.domains) - 1

    def add(self, *constraints: Constraint) -> None:
        self.constraints.extend(constraints)

    def build(self) -> Model:
        return Model(tuple(self.domains), tuple(self.constraints), tuple(self.names),
                     None if self.branch_set is None else tuple(self.branch_set))


@dataclass
class SearchStats:
    nodes: int = 0
    backtracks: int = 0
    elapsed: float = 0.0

    def as_dict(self) -> dict[str, float]:
        return {"nodes": self.nodes, "backtracks": self.backtracks, "elapsed_ms": round(self.elapsed * 1000, 3)}

    def copy(self) -> SearchStats:
        return SearchStats(self.nodes, self.backtracks, self.elapsed)


@dataclass(frozen=True)
class Solution:
    assignment: frozenset[Literal]
    stats: SearchStats = field(compare=False)

    def values(self) -> dict[int, int]:
        return dict(self.assignment)


def _default_time_limit() -> float | None:
    raw = os.environ.get(TIME_LIMIT_ENV)
    if not raw:
        return None
    return int(raw) / 1000.0


class Solver:
    """Depth-first search over one model; each instance owns its search state."""

    def __init__(self, model: Model, *, time_limit: float | None = None, node_limit: int | None = None):
        self.model = model
        self.time_limit = _default_time_limit() if time_limit is None else time_limit
        self.node_limit = node_limit
        self.stats = SearchStats()
        values = [a for d in model.domains for a in d]
        self.base = min(values) if values else 0
        self.width = (max(values) - self.base + 1) if values else 1
        watch: list[list[int]] = [[] for _ in model.domains]
        for ci, c in enumerate(model.constraints):
            for v in c.scope:
                watch[v].append(ci)
        self.watch = watch
        bs = model.branch_set
        self.branch = tuple(bs) if bs else tuple(range(model.num_vars))
        self._started = 0.0

    def _initial(self) -> list[int] | None:
        dom = [sum(1 << (a - self.base) for a in d) for d in self.model.domains]
        if any(m == 0 for m in dom):
            return None
        try:
            self._propagate(dom, range(len(self.model.constraints)))
        except Wipeout:
            return None
        return dom

    def _propagate(self, dom: list[int], seeds: Iterable[int]) -> None:
        st = _Store(dom, self.base, self.width, self.watch)
        for c in seeds:
            if c not in st.queued:
                st.queued.add(c)
                st.queue.append(c)
        cons = self.model.constraints
        while st.queue:
            c = st.queue.popleft()
            st.queued.discard(c)
            st.current = c
            cons[c].propagate(st)
        st.current = -1

    def _select(self, dom: list[int]) -> int | None:
        best = None
        best_size = 0
        for v in self.branch:
            m = dom[v]
            if m & (m - 1):
                size = m.bit_count()
                if best is None or size < best_size:
                    best, best_size = v, size
                    if size == 2:
                        break
        return best

    def _limit(self) -> None:
        if self.node_limit is not None and self.stats.nodes > self.node_limit:
            self.stats.elapsed = time.perf_counter() - self._started
            raise SearchLimitError("node limit", self.stats.copy())
        if self.time_limit is not None and self.stats.nodes % 256 == 0:
            if time.perf_counter() - self._started > self.time_limit:
                self.stats.elapsed = time.perf_counter() - self._started
                raise SearchLimitError("time limit", self.stats.copy())

    def _search(self, dom: list[int]) -> Iterator[list[int]]:
        v = self._select(dom)
        if v is None:
            for u, m in enumerate(dom):
                if m & (m - 1):
                    raise UnderDeterminedError(u, self.model.names[u])
            yield dom
            return
        watch = self.watch[v]
        m = dom[v]
        while m:
            low = m & -m
            m ^= low
            self.stats.nodes += 1
            self._limit()
            child = dom.copy()
            child[v] = low
            try:
                self._propagate(child, watch)
            except Wipeout:
                self.stats.backtracks += 1
                continue
            yield from self._search(child)

    def _decode(self, dom: list[int]) -> frozenset[Literal]:
        base = self.base
        return frozenset(Literal(v, m.bit_length() - 1 + base) for v, m in enumerate(dom))

    def solutions(self) -> Iterator[Solution]:
        """Yield every solution in search order."""
        self.stats = SearchStats()
        self._started = time.perf_counter()
        dom = self._initial()
        if dom is None:
            self.stats.elapsed = time.perf_counter() - self._started
            return
        for leaf in self._search(dom):
            self.stats.elapsed = time.perf_counter() - self._started
            yield Solution(self._decode(leaf), self.stats.copy())
        self.stats.elapsed = time.perf_counter() - self._started


def solve(model: Model, **limits) -> Solution | None:
    """First solution in search order, or None if the search space is exhausted."""
    solver = Solver(model, **limits)
    sol = next(solver.solutions(), None)
    if sol is None:
        return None
    return Solution(sol.assignment, solver.stats.copy())


def enumerate_solutions(model: Model, **limits) -> list[Solution]:
    return list(Solver(model, **limits).solutions())


def count_solutions(model: Model, **limits) -> tuple[int, SearchStats]:
    solver = Solver(model, **limits)
    n = sum(1 for _ in solver.solutions())
    return n, solver.stats


def check(model: Model, values: Mapping[int, int] | Iterable[tuple[int, int]]) -> bool:
    """Independent verifier: every variable in its domain and every constraint satisfied."""
    vals = dict(values.items() if isinstance(values, Mapping) else values)
    if set(vals) != set(range(model.num_vars)):
        return False
    if any(vals[v] not in model.domains[v] for v in vals):
        return False
    seq = [vals[v] for v in range(model.num_vars)]
    return all(c.check(seq) for c in model.constraints)


def post_symmetry_constraint(model: Model, sigma: SymmetryMap) -> Model:
    """Restrict the model to solutions that are fixed points of ``sigma``.

    Posts ``Z = a  =>  sigma(Z = a)`` for every literal of the model, grouped
    into one SymmetryLink per source variable.  For a total assignment and a
    bijection, closure under these implications is the same as ``sigma(A) = A``.
    """
    universe = sigma.universe
    links: dict[int, list[tuple[Literal, Literal]]] = {}
    for lit in model.literals():
        if lit not in universe:
            raise UniverseMismatchError(f"{sigma.name} does not cover literal {tuple(lit)}")
        img = sigma(lit)
        if img.var >= model.num_vars:
            raise UniverseMismatchError(f"{sigma.name} maps {tuple(lit)} to undeclared variable {img.var}")
        if img != lit:
            links.setdefault(lit.var, []).append((lit, img))
    return model.add(*(SymmetryLink(tuple(ls)) for _, ls in sorted(links.items())))


def brute_force_solutions(model: Model) -> list[frozenset[Literal]]:
    """Generate-and-test over the full Cartesian product.  Test oracle only."""
    out = []
    for combo in itertools.product(*model.domains):
        if all(c.check(combo) for c in model.constraints):
            out.append(frozenset(Literal(v, a) for v, a in enumerate(combo)))
    return out
