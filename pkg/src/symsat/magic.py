"""Normal magic squares: models, named symmetries, symmetry classes.

Cells are ``X[i,j]`` with ``i`` the column and ``j`` the row, both 1-based.
Variable id of ``X[i,j]`` is ``(j-1)*n + (i-1)``, so a row-major list of rows
lines up with variable ids.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence

from .csp import (AllDifferent, LinearSumEq, MinMaxRel, Model, ModelBuilder, RelOp, Solver,
                  post_symmetry_constraint)
from .symmetry import Literal, SymmetryMap, compose, is_internal_symmetry

__all__ = [
    "magic_constant",
    "cell",
    "build_magic",
    "add_symmetry_breaking",
    "add_internal_symmetry",
    "canonical_count",
    "enumerate_squares",
    "canonical_form",
    "classes_containing",
    "is_magic",
    "square_to_assignment",
    "assignment_to_square",
    "format_square",
    "parse_square",
    "universe",
    "sigma_inv",
    "sigma_180",
    "sigma_90",
    "sigma_v",
    "sigma_h",
    "sigma_d",
    "sigma_transpose",
    "sigma_inv_180",
    "sigma_v_inv",
    "sigma_antitranspose_inv",
    "dihedral",
    "tau",
    "LO_SHU",
    "LO_SHU_REFLECTED",
    "SQUARE_3",
    "SQUARE_5",
    "INTERNAL_FORMS",
]

Square = tuple[tuple[int, ...], ...]

LO_SHU: Square = ((4, 9, 2), (3, 5, 7), (8, 1, 6))
# Lo Shu under the diagonal reflection sigma_d
LO_SHU_REFLECTED: Square = ((6, 7, 2), (1, 5, 9), (8, 3, 4))
# order-4 square without the inversion/180 internal symmetry
SQUARE_3: Square = ((1, 4, 13, 16), (14, 15, 2, 3), (8, 5, 12, 9), (11, 10, 7, 6))
# order-4 square with it
SQUARE_5: Square = ((1, 8, 12, 13), (14, 11, 7, 2), (15, 10, 6, 3), (4, 5, 9, 16))


def magic_constant(n: int) -> int:
    return n * (n * n + 1) // 2


def cell(n: int, i: int, j: int) -> int:
    """Variable id of column ``i``, row ``j`` (1-based)."""
    return (j - 1) * n + (i - 1)


def _order(model: Model) -> int:
    n = math.isqrt(model.num_vars)
    if n * n != model.num_vars:
        raise ValueError("not a magic-square model")
    return n


def build_magic(n: int) -> Model:
    if n < 1:
        raise ValueError("order must be at least 1")
    b = ModelBuilder()
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            b.var(f"X[{i},{j}]", range(1, n * n + 1))
    total = magic_constant(n)
    b.add(AllDifferent(tuple(range(n * n))))
    for j in range(1, n + 1):
        b.add(LinearSumEq.sum_of((cell(n, i, j) for i in range(1, n + 1)), total))
    for i in range(1, n + 1):
        b.add(LinearSumEq.sum_of((cell(n, i, j) for j in range(1, n + 1)), total))
    b.add(LinearSumEq.sum_of((cell(n, k, k) for k in range(1, n + 1)), total))
    b.add(LinearSumEq.sum_of((cell(n, n + 1 - k, k) for k in range(1, n + 1)), total))
    return b.build()


def add_symmetry_breaking(model: Model) -> Model:
    """Corner ordering that removes most rotation, reflection and inversion symmetry."""
    n = _order(model)
    if n < 2:
        return model
    x11, x1n, xn1, xnn = cell(n, 1, 1), cell(n, 1, n), cell(n, n, 1), cell(n, n, n)
    return model.add(
        MinMaxRel(x11, "<", "min", (x1n, xn1, xnn)),
        RelOp(x1n, "<", xn1),
        MinMaxRel(x11, "<=", "max", (x11, x1n, xn1, xnn), scale=-1, offset=n * n + 1),
    )


# ---------------------------------------------------------------- symmetries

def universe(n: int) -> tuple[Literal, ...]:
    return tuple(Literal(v, a) for v in range(n * n) for a in range(1, n * n + 1))


def _cell_map(n: int, pos: Callable[[int, int], tuple[int, int]], value: Callable[[int], int],
              name: str) -> SymmetryMap:
    fwd = {}
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            i2, j2 = pos(i, j)
            src, dst = cell(n, i, j), cell(n, i2, j2)
            for a in range(1, n * n + 1):
                fwd[Literal(src, a)] = Literal(dst, value(a))
    return SymmetryMap(fwd, name=name)


def _same(a: int) -> int:
    return a


def sigma_inv(n: int) -> SymmetryMap:
    return _cell_map(n, lambda i, j: (i, j), lambda a: n * n + 1 - a, "σ_inv")


def sigma_180(n: int) -> SymmetryMap:
    return _cell_map(n, lambda i, j: (n + 1 - i, n + 1 - j), _same, "σ_180")


def sigma_90(n: int) -> SymmetryMap:
    """Clockwise quarter turn."""
    return _cell_map(n, lambda i, j: (n + 1 - j, i), _same, "σ_90")


def sigma_v(n: int) -> SymmetryMap:
    """Reflection in the vertical axis (columns reversed)."""
    return _cell_map(n, lambda i, j: (n + 1 - i, j), _same, "σ_v")


def sigma_h(n: int) -> SymmetryMap:
    return _cell_map(n, lambda i, j: (i, n + 1 - j), _same, "σ_h")


def sigma_d(n: int) -> SymmetryMap:
    """Diagonal reflection taking Lo Shu to LO_SHU_REFLECTED."""
    return _cell_map(n, lambda i, j: (n + 1 - j, n + 1 - i), _same, "σ_d")


def sigma_transpose(n: int) -> SymmetryMap:
    return _cell_map(n, lambda i, j: (j, i), _same, "σ_t")


def sigma_inv_180(n: int) -> SymmetryMap:
    return compose(sigma_inv(n), sigma_180(n), name="σ_inv∘σ_180")


def sigma_v_inv(n: int) -> SymmetryMap:
    return compose(sigma_v(n), sigma_inv(n), name="σ_v∘σ_inv")


def sigma_antitranspose_inv(n: int) -> SymmetryMap:
    """``X[n+1-j, n+1-i] = n*n+1 - X[i,j]``, the odd-order equalities exactly as printed."""
    return compose(sigma_d(n), sigma_inv(n), name="σ_d∘σ_inv")


def dihedral(n: int) -> list[SymmetryMap]:
    """The 8 rotations and reflections of the square, identity first."""
    r90 = sigma_90(n)
    rots = [_cell_map(n, lambda i, j: (i, j), _same, "id")]
    for k in range(3):
        rots.append(compose(r90, rots[-1], name=f"σ_{90 * (k + 1)}"))
    return rots + [sigma_v(n), sigma_h(n), sigma_d(n), sigma_transpose(n)]


def tau() -> SymmetryMap:
    """Order-4 quadrant generator.

    Rotates the top-left quadrant by 180 degrees into the top-right one,
    adding 1 to values from the quadrant's leading diagonal and subtracting 1
    from the others; the bottom-right quadrant goes to the bottom-left with
    the opposite signs.  Values wrap within 1..16 and the reverse directions
    use the inverse maps, so the whole thing is an involution.
    """
    n, top = 4, 16

    def shift(a: int, s: int) -> int:
        return (a - 1 + s) % top + 1

    fwd = {}

    def link(src_quad: tuple[int, int], dst_quad: tuple[int, int], sign: int) -> None:
        (ci, cj), (di, dj) = src_quad, dst_quad
        for r in range(2):
            for c in range(2):
                s = sign if r == c else -sign
                src = cell(n, ci + c, cj + r)
                dst = cell(n, di + 1 - c, dj + 1 - r)
                for a in range(1, top + 1):
                    fwd[Literal(src, a)] = Literal(dst, shift(a, s))
                    fwd[Literal(dst, shift(a, s))] = Literal(src, a)

    link((1, 1), (3, 1), +1)
    link((3, 3), (1, 3), -1)
    return SymmetryMap(fwd, name="τ")


# ---------------------------------------------------------------- internal symmetry

INTERNAL_FORMS: dict[str, Callable[[int], SymmetryMap]] = {
    "inv180": sigma_inv_180,
    "v_inv": sigma_v_inv,
    "printed_odd": sigma_antitranspose_inv,
}


def _transversal(n: int, sigma: SymmetryMap) -> tuple[int, ...]:
    """Smallest variable of each orbit of sigma's action on cells."""
    succ = {}
    for lit, img in sigma.forward.items():
        succ.setdefault(lit.var, set()).add(img.var)
    seen: set[int] = set()
    keep = []
    for v in range(n * n):
        if v in seen:
            continue
        keep.append(v)
        stack = [v]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(succ.get(u, ()))
    return tuple(keep)


def add_internal_symmetry(model: Model, form: str = "auto") -> Model:
    """Restrict to squares containing an internal symmetry and branch on a generating half.

    ``form`` is ``"auto"`` (inversion+180 turn for odd order, inversion+vertical
    reflection for even order), or one of INTERNAL_FORMS.
    """
    n = _order(model)
    if form == "auto":
        form = "inv180" if n % 2 else "v_inv"
    sigma = INTERNAL_FORMS[form](n)
    out = post_symmetry_constraint(model, sigma)
    return out.with_branch_set(_transversal(n, sigma))


# ---------------------------------------------------------------- squares

def square_to_assignment(rows: Sequence[Sequence[int]]) -> frozenset[Literal]:
    n = len(rows)
    return frozenset(Literal(cell(n, i + 1, j + 1), rows[j][i]) for j in range(n) for i in range(n))


def assignment_to_square(lits: Iterable[tuple[int, int]], n: int | None = None) -> Square:
    vals = dict(lits)
    if n is None:
        n = math.isqrt(len(vals))
    return tuple(tuple(vals[cell(n, i, j)] for i in range(1, n + 1)) for j in range(1, n + 1))


def is_magic(rows: Sequence[Sequence[int]]) -> bool:
    """Independent checker for normal magic squares."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        return False
    if sorted(v for r in rows for v in r) != list(range(1, n * n + 1)):
        return False
    total = magic_constant(n)
    lines = [list(r) for r in rows] + [[rows[j][i] for j in range(n)] for i in range(n)]
    lines.append([rows[k][k] for k in range(n)])
    lines.append([rows[k][n - 1 - k] for k in range(n)])
    return all(sum(line) == total for line in lines)


def format_square(rows: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(v) for v in r) for r in rows)


def parse_square(text: str) -> Square:
    rows = tuple(tuple(int(tok) for tok in line.split()) for line in text.splitlines() if line.strip())
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("square must have n rows of n integers")
    return rows


def _dihedral_images(rows: Square) -> list[Square]:
    out = []
    a = rows
    for _ in range(4):
        a = tuple(zip(*a[::-1]))
        out.append(a)
        out.append(tuple(r[::-1] for r in a))
    return out


def canonical_form(rows: Sequence[Sequence[int]]) -> Square:
    """Least row-major image under the 8 rotations and reflections (inversion not quotiented)."""
    return min(_dihedral_images(tuple(tuple(r) for r in rows)))


def enumerate_squares(model: Model) -> list[Square]:
    n = _order(model)
    return [assignment_to_square(s.assignment, n) for s in Solver(model).solutions()]


def canonical_count(n: int) -> tuple[int, int]:
    """(number of normal magic squares of order n, number of dihedral classes)."""
    if n > 4:
        raise ValueError("full enumeration is limited to n <= 4")
    squares = enumerate_squares(build_magic(n))
    return len(squares), len({canonical_form(s) for s in squares})


def classes_containing(squares: Iterable[Square], sigma: SymmetryMap) -> set[Square]:
    """Canonical forms of the squares that contain ``sigma`` as an internal symmetry."""
    return {canonical_form(s) for s in squares if is_internal_symmetry(sigma, square_to_assignment(s))}
