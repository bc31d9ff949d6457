"""Graceful labellings of double wheel graphs.

DW_n is a hub joined to every vertex of two disjoint n-cycles ("outer" and
"inner"), 4n edges in all.  A graceful labelling gives the 2n+1 vertices
distinct labels from 0..4n so that the edge differences are exactly 1..4n.

Model variables: hub is 0, outer[i] is 1+i, inner[i] is 1+n+i, and one edge
variable per edge follows.  Only vertex variables are branched on.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .csp import (AbsDiff, AllDifferent, Model, ModelBuilder, RelOp, SearchStats,
                  Solver, SymmetryLink)
from .symmetry import Literal

__all__ = [
    "DwGraph",
    "DwLabelling",
    "Dw4Counts",
    "build_dw_model",
    "verify_graceful",
    "add_internal_symmetries",
    "add_solution_symmetry_breaking",
    "chain_placement",
    "decode",
    "solve_dw",
    "enumerate_dw",
    "brute_force_dw",
    "symmetry_images",
    "canonical_labelling",
    "dw4_counts",
    "count_dw4",
    "DW10",
    "DW24",
]


@dataclass(frozen=True)
class DwGraph:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("a double wheel needs cycles of length at least 3")

    @property
    def num_edges(self) -> int:
        return 4 * self.n

    @property
    def hub(self) -> int:
        return 0

    def outer(self, i: int) -> int:
        return 1 + i % self.n

    def inner(self, i: int) -> int:
        return 1 + self.n + i % self.n

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(2 * self.n + 1))

    def edges(self) -> list[tuple[int, int]]:
        """Spokes to outer and inner vertex i, then the two cycle edges leaving position i."""
        out = []
        for i in range(self.n):
            out.append((self.hub, self.outer(i)))
            out.append((self.hub, self.inner(i)))
            out.append((self.outer(i), self.outer(i + 1)))
            out.append((self.inner(i), self.inner(i + 1)))
        return out


@dataclass(frozen=True)
class DwLabelling:
    hub: int
    outer: tuple[int, ...]
    inner: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "outer", tuple(self.outer))
        object.__setattr__(self, "inner", tuple(self.inner))

    @property
    def n(self) -> int:
        return len(self.outer)

    def vertex_labels(self) -> tuple[int, ...]:
        return (self.hub, *self.outer, *self.inner)

    def edge_labels(self) -> list[int]:
        lab = self.vertex_labels()
        return [abs(lab[u] - lab[v]) for u, v in DwGraph(self.n).edges()]

    def key(self) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        return (self.hub, self.outer, self.inner)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "hub": self.hub, "outer": list(self.outer), "inner": list(self.inner)})

    @classmethod
    def from_json(cls, text: str) -> DwLabelling:
        obj = json.loads(text)
        lab = cls(int(obj["hub"]), tuple(obj["outer"]), tuple(obj["inner"]))
        if "n" in obj and (int(obj["n"]) != len(lab.outer) or int(obj["n"]) != len(lab.inner)):
            raise ValueError(f"n = {obj['n']} does not match the label lists")
        return lab


def verify_graceful(g: DwGraph, lab: DwLabelling) -> bool:
    if len(lab.outer) != g.n or len(lab.inner) != g.n:
        raise ValueError(f"labelling shape does not match DW_{g.n}")
    e = g.num_edges
    labels = lab.vertex_labels()
    if len(set(labels)) != len(labels) or not all(0 <= x <= e for x in labels):
        return False
    return sorted(lab.edge_labels()) == list(range(1, e + 1))


# ---------------------------------------------------------------- model

def build_dw_model(n: int) -> Model:
    g = DwGraph(n)
    e = g.num_edges
    b = ModelBuilder()
    b.var("hub", range(e + 1))
    for i in range(n):
        b.var(f"outer[{i}]", range(e + 1))
    for i in range(n):
        b.var(f"inner[{i}]", range(e + 1))
    names = {0: "hub", **{g.outer(i): f"outer[{i}]" for i in range(n)},
             **{g.inner(i): f"inner[{i}]" for i in range(n)}}
    edge_vars = []
    for u, v in g.edges():
        edge_vars.append(b.var(f"|{names[u]}-{names[v]}|", range(1, e + 1)))
        b.add(AbsDiff(edge_vars[-1], u, v))
    b.add(AllDifferent(g.vertices), AllDifferent(tuple(edge_vars)))
    return b.build().with_branch_set(g.vertices)


def decode(values: dict[int, int], n: int) -> DwLabelling:
    g = DwGraph(n)
    return DwLabelling(values[0], tuple(values[g.outer(i)] for i in range(n)),
                       tuple(values[g.inner(i)] for i in range(n)))


def chain_placement(n: int, guard: str = "n-4") -> dict[int, int]:
    """Vertex labels forced by hub = 4n, outer[0] = 1, inner[0] = 2 and the +2 chain."""
    g = DwGraph(n)
    top = _guard(n, guard)
    fixed = {g.hub: 4 * n, g.outer(0): 1, g.inner(0): 2}
    for start, pos in ((1, g.outer), (2, g.inner)):
        v, p = start, 0
        while 1 <= v <= top and p + 2 < n:
            v, p = v + 2, p + 2
            fixed[pos(p)] = v
    return fixed


def _guard(n: int, guard: str) -> int:
    if guard == "n-4":
        return n - 4
    if guard == "n-2":
        return n - 2
    raise ValueError(f"unknown guard {guard!r}; expected 'n-4' or 'n-2'")


def add_internal_symmetries(m: Model, n: int, guard: str = "n-4") -> Model:
    """Fix the hub to 4n, seed the wheels with 1 and 2, and link X at p to X+2 at p+2.

    The links are posted as literal implications within each wheel; guard
    selects whether they fire for labels up to n-4 or up to n-2.
    """
    if n < 4:
        raise ValueError("internal symmetries need n >= 4")
    g = DwGraph(n)
    top = _guard(n, guard)
    links = []
    for pos in (g.outer, g.inner):
        for p in range(n - 2):
            for v in range(1, top + 1):
                links.append((Literal(pos(p), v), Literal(pos(p + 2), v + 2)))
    out = m.add(RelOp(g.hub, "==", const=4 * n), RelOp(g.outer(0), "==", const=1),
                RelOp(g.inner(0), "==", const=2))
    if links:
        out = out.add(SymmetryLink(tuple(links)))
    placed = chain_placement(n, guard)
    return out.with_branch_set(v for v in g.vertices if v not in placed)


def add_solution_symmetry_breaking(m: Model, n: int) -> Model:
    """Break wheel rotation, wheel reflection, wheel swap and label inversion."""
    g = DwGraph(n)
    out = []
    for pos in (g.outer, g.inner):
        for i in range(1, n):
            out.append(RelOp(pos(0), "<", pos(i)))
        out.append(RelOp(pos(1), "<", pos(n - 1)))
    out.append(RelOp(g.outer(0), "<", g.inner(0)))
    out.append(RelOp(g.hub, "<=", const=2 * n))
    return m.add(*out)


# ---------------------------------------------------------------- solving

def _model_for(n: int, symmetry_breaking: bool, internal_symmetries: bool, guard: str) -> Model:
    m = build_dw_model(n)
    if internal_symmetries:
        # the fixings already pin hub and rotation; solution breaking would clash with hub = 4n
        return add_internal_symmetries(m, n, guard)
    if symmetry_breaking:
        m = add_solution_symmetry_breaking(m, n)
    return m


def _solve_one(args) -> tuple[DwLabelling | None, SearchStats]:
    model, n, time_limit, node_limit = args
    solver = Solver(model, time_limit=time_limit, node_limit=node_limit)
    for sol in solver.solutions():
        return decode(sol.values(), n), sol.stats
    return None, solver.stats


def solve_dw(n: int, symmetry_breaking: bool = False, internal_symmetries: bool = False, *,
             guard: str = "n-4", time_limit: float | None = None, node_limit: int | None = None,
             workers: int | None = None) -> tuple[DwLabelling, SearchStats] | None:
    """First labelling in search order, or None when none exists.

    With ``workers`` set, the hub values are split into separate searches
    (run in parallel when workers > 1) and the labelling from the smallest
    hub value wins, so the result does not depend on the worker count.
    Stats are then summed over the subsearches that ran.
    """
    model = _model_for(n, symmetry_breaking, internal_symmetries, guard)
    if workers is None:
        lab, stats = _solve_one((model, n, time_limit, node_limit))
        return None if lab is None else (lab, stats)
    hubs = model.domains[0]
    jobs = [(model.add(RelOp(0, "==", const=h)), n, time_limit, node_limit) for h in hubs]
    total = SearchStats()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_one, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_solve_one(job))
            if results[-1][0] is not None:
                break
    for lab, stats in results:
        total.nodes += stats.nodes
        total.backtracks += stats.backtracks
        total.elapsed += stats.elapsed
        if lab is not None:
            return lab, total
    return None


def enumerate_dw(n: int, symmetry_breaking: bool = False) -> Iterator[DwLabelling]:
    model = _model_for(n, symmetry_breaking, False, "n-4")
    for sol in Solver(model).solutions():
        yield decode(sol.values(), n)


def brute_force_dw(n: int) -> Iterator[DwLabelling]:
    """Plain backtracking over vertex labels with incremental edge checks; no CSP machinery."""
    g = DwGraph(n)
    e = g.num_edges
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in g.edges():
        adj[u].append(v)
        adj[v].append(u)
    order = g.vertices
    lab: dict[int, int] = {}
    used: set[int] = set()
    diffs: set[int] = set()

    def rec(k: int) -> Iterator[DwLabelling]:
        if k == len(order):
            yield decode(lab, n)
            return
        v = order[k]
        for x in range(e + 1):
            if x in used:
                continue
            new = []
            for w in adj[v]:
                if w in lab:
                    d = abs(x - lab[w])
                    if d in diffs or d in new:
                        break
                    new.append(d)
            else:
                lab[v] = x
                used.add(x)
                diffs.update(new)
                yield from rec(k + 1)
                del lab[v]
                used.discard(x)
                diffs.difference_update(new)

    yield from rec(0)


# ---------------------------------------------------------------- solution symmetries

def symmetry_images(lab: DwLabelling) -> Iterator[DwLabelling]:
    """All 16n^2 images: rotate and reflect each wheel, swap wheels, invert labels."""
    n, e = lab.n, 4 * lab.n
    for invert, swap, ra, rb, fa, fb in itertools.product((False, True), (False, True), range(n), range(n),
                                                          (False, True), (False, True)):
        a, b = (lab.inner, lab.outer) if swap else (lab.outer, lab.inner)
        a = a[ra:] + a[:ra]
        b = b[rb:] + b[:rb]
        if fa:
            a = a[::-1]
        if fb:
            b = b[::-1]
        if invert:
            yield DwLabelling(e - lab.hub, tuple(e - x for x in a), tuple(e - x for x in b))
        else:
            yield DwLabelling(lab.hub, a, b)


def canonical_labelling(lab: DwLabelling) -> DwLabelling:
    return min(symmetry_images(lab), key=DwLabelling.key)


@dataclass(frozen=True)
class Dw4Counts:
    raw: int
    raw_hub_extreme: int
    classes: int
    classes_hub_extreme: int


def dw4_counts(labellings: Sequence[DwLabelling] | None = None) -> Dw4Counts:
    """Raw and up-to-symmetry counts of DW_4 labellings, with the hub at 0 or 16."""
    sols = list(enumerate_dw(4)) if labellings is None else list(labellings)
    classes = {canonical_labelling(s) for s in sols}
    extreme = (0, 16)
    return Dw4Counts(len(sols), sum(s.hub in extreme for s in sols),
                     len(classes), sum(c.hub in extreme for c in classes))


def count_dw4() -> tuple[int, int]:
    """(classes, classes with hub 0 or 16) of DW_4 labellings under the 16n^2 symmetries."""
    c = dw4_counts()
    return c.classes, c.classes_hub_extreme


# ---------------------------------------------------------------- fixtures

DW10 = DwLabelling(0, (9, 33, 16, 37, 15, 34, 14, 39, 11, 38), (1, 3, 7, 12, 18, 31, 8, 40, 10, 36))

DW24 = DwLabelling(
    96,
    (1, 0, 3, 62, 5, 51, 7, 34, 9, 80, 11, 65, 13, 63, 15, 78, 17, 28, 19, 58, 21, 56, 41, 54),
    (2, 45, 4, 30, 6, 29, 8, 40, 10, 32, 12, 31, 14, 26, 16, 23, 18, 67, 20, 24, 22, 82, 88, 60),
)
