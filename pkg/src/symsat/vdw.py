"""Van der Waerden certificates.

A certificate for ``W(k, l) > n`` is a partition of ``1..n`` into ``k`` blocks
none of which contains an arithmetic progression of length ``l``.  Blocks are
checked with Python ints used as bitsets (bit ``x-1`` for element ``x``).

The construction builds a base pattern on the residues ``1..m`` (``m`` stands
for residue 0) from two seeds and the multiplicative/additive maps, repeats it
``l-1`` times and then greedily grows the result at either end.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .csp import LinearSumEq, Model, ModelBuilder, NoAP
from .symmetry import Literal, SymmetryMap

__all__ = [
    "Certificate",
    "ConstructionParams",
    "PartitionError",
    "NoPrimitiveRootError",
    "has_progression",
    "has_progression_naive",
    "verify_certificate",
    "verify_certificate_naive",
    "factorize",
    "largest_prime_factor",
    "carmichael",
    "multiplicative_order",
    "primitive_root",
    "sigma_plus_m",
    "sigma_plus_p",
    "sigma_times_r",
    "sigma_times_r_t",
    "same_up_to_block_permutation",
    "residue_map",
    "base_pattern",
    "construct",
    "extend",
    "search_lower_bound",
    "build_vdw_model",
    "decode_solution",
    "read_certificate",
    "write_certificate",
    "W23_CERTIFICATE",
    "W53_BASE",
    "W53_PLUS_P",
    "W53_TIMES_R",
]

log = logging.getLogger(__name__)


class PartitionError(ValueError):
    pass


class NoPrimitiveRootError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    n: int
    k: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        if len(self.blocks) != self.k:
            raise PartitionError(f"expected {self.k} blocks, got {len(self.blocks)}")

    @classmethod
    def from_blocks(cls, blocks: Sequence[Iterable[int]], n: int | None = None) -> Certificate:
        bl = tuple(frozenset(b) for b in blocks)
        if n is None:
            n = max((max(b) for b in bl if b), default=0)
        return cls(n, len(bl), bl)

    @classmethod
    def from_colors(cls, colors: Sequence[int], k: int) -> Certificate:
        blocks: list[set[int]] = [set() for _ in range(k)]
        for x, c in enumerate(colors, start=1):
            blocks[c].add(x)
        return cls(len(colors), k, tuple(blocks))

    def colors(self) -> list[int]:
        self.validate()
        out = [0] * self.n
        for c, b in enumerate(self.blocks):
            for x in b:
                out[x - 1] = c
        return out

    def validate(self) -> None:
        """Raise PartitionError unless the blocks partition 1..n."""
        seen: dict[int, int] = {}
        for c, b in enumerate(self.blocks):
            for x in b:
                if not 1 <= x <= self.n:
                    raise PartitionError(f"element {x} outside 1..{self.n}")
                if x in seen:
                    raise PartitionError(f"element {x} appears in blocks {seen[x]} and {c}")
                seen[x] = c
        if len(seen) != self.n:
            missing = min(set(range(1, self.n + 1)) - set(seen))
            raise PartitionError(f"element {missing} is in no block")


# ---------------------------------------------------------------- verification

def _bitset(block: Iterable[int]) -> int:
    out = 0
    for x in block:
        out |= 1 << (x - 1)
    return out


def _first_ap(bits: int, l: int, n: int, ds: Iterable[int]) -> tuple[int, int] | None:
    for d in ds:
        acc = bits
        for j in range(1, l):
            acc &= bits >> (j * d)
            if not acc:
                break
        else:
            return ((acc & -acc).bit_length(), d)
    return None


def has_progression(block: Iterable[int], l: int) -> tuple[int, int] | None:
    """Some ``(a, d)`` with ``a, a+d, ..., a+(l-1)d`` all in the block (smallest d, then a)."""
    if l < 2:
        raise ValueError("progression length must be at least 2")
    block = list(block)
    if len(block) < l:
        return None
    bits = _bitset(block)
    n = max(block)
    return _first_ap(bits, l, n, range(1, (n - 1) // (l - 1) + 1))


def has_progression_naive(block: Iterable[int], l: int) -> tuple[int, int] | None:
    """Scan every (d, a) pair directly.  Reference for has_progression."""
    s = set(block)
    if not s:
        return None
    n = max(s)
    for d in range(1, n + 1):
        for a in range(1, n + 1):
            if all(a + j * d in s for j in range(l)):
                return (a, d)
    return None


def _ap_chunk(args: tuple[int, int, int, int, int]) -> tuple[int, int] | None:
    bits, l, n, lo, hi = args
    return _first_ap(bits, l, n, range(lo, hi))


def verify_certificate(cert: Certificate, l: int, workers: int = 1) -> bool:
    """True iff the blocks partition 1..n and no block holds an l-progression."""
    cert.validate()
    if cert.n < l:
        return True
    dmax = (cert.n - 1) // (l - 1)
    bitsets = [_bitset(b) for b in cert.blocks]
    if workers <= 1:
        return all(_first_ap(bits, l, cert.n, range(1, dmax + 1)) is None for bits in bitsets)
    step = max(1, dmax // (workers * 4) + 1)
    jobs = [(bits, l, cert.n, lo, min(lo + step, dmax + 1))
            for bits in bitsets for lo in range(1, dmax + 1, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return all(r is None for r in pool.map(_ap_chunk, jobs))


def verify_certificate_naive(cert: Certificate, l: int) -> bool:
    cert.validate()
    return all(has_progression_naive(b, l) is None for b in cert.blocks)


# ---------------------------------------------------------------- number theory

def factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def largest_prime_factor(m: int) -> int:
    if m < 2:
        raise ValueError("m must be at least 2")
    return max(factorize(m))


def carmichael(m: int) -> int:
    """Largest multiplicative order of a unit modulo m."""
    lam = 1
    for p, e in factorize(m).items():
        if p == 2 and e >= 3:
            part = 2 ** (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = lam * part // math.gcd(lam, part)
    return lam


def multiplicative_order(r: int, m: int) -> int:
    if math.gcd(r, m) != 1:
        raise ValueError(f"{r} is not a unit modulo {m}")
    x, k = r % m, 1
    while x != 1 % m:
        x = x * r % m
        k += 1
    return k


def primitive_root(m: int) -> int:
    """Smallest r >= 2 whose powers modulo m are pairwise distinct for as long as possible.

    That is the smallest unit whose order is the largest order available
    modulo m.  It coincides with the usual primitive root when one exists.
    For m = 2 multiplication by any unit is the identity and 1 is returned.
    """
    if m < 2:
        raise NoPrimitiveRootError(f"no multiplicative structure modulo {m}")
    lam = carmichael(m)
    if lam == 1:
        return 1
    for r in range(2, m):
        if math.gcd(r, m) == 1 and multiplicative_order(r, m) == lam:
            return r
    raise NoPrimitiveRootError(f"no element of order {lam} modulo {m}")


# ---------------------------------------------------------------- symmetries on blocks

def _rep(x: int, mod: int) -> int:
    return (x - 1) % mod + 1


def _map_blocks(blocks: Iterable[Iterable[int]], fn) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(fn(x) for x in b) for b in blocks)


def sigma_plus_m(blocks: Iterable[Iterable[int]], m: int, n: int) -> tuple[frozenset[int], ...]:
    """Shift by m modulo n."""
    return _map_blocks(blocks, lambda x: _rep(x + m, n))


def sigma_plus_p(blocks: Iterable[Iterable[int]], p: int, m: int) -> tuple[frozenset[int], ...]:
    return _map_blocks(blocks, lambda x: _rep(x + p, m))


def sigma_times_r(blocks: Iterable[Iterable[int]], r: int, m: int) -> tuple[frozenset[int], ...]:
    return _map_blocks(blocks, lambda x: _rep(x * r, m))


def sigma_times_r_t(blocks: Iterable[Iterable[int]], r: int, t: int, m: int) -> tuple[frozenset[int], ...]:
    return sigma_times_r(blocks, pow(r, t, m), m)


def same_up_to_block_permutation(a: Iterable[Iterable[int]], b: Iterable[Iterable[int]]) -> bool:
    fa = [frozenset(x) for x in a if x]
    fb = [frozenset(x) for x in b if x]
    return len(fa) == len(fb) and set(fa) == set(fb)


def residue_map(m: int, k: int, fn, name: str) -> SymmetryMap:
    """A residue map as a literal map on (element 1..m, color 0..k-1), colors untouched."""
    return SymmetryMap({Literal(x, c): Literal(_rep(fn(x), m), c)
                        for x in range(1, m + 1) for c in range(k)}, name=name)


# ---------------------------------------------------------------- construction

@dataclass(frozen=True)
class ConstructionParams:
    k: int
    l: int
    n: int
    t: int | None = None
    q: int | None = None
    m: int = field(init=False)
    p: int = field(init=False)
    r: int = field(init=False)

    def __post_init__(self):
        if self.k < 1 or self.l < 2:
            raise ValueError("need k >= 1 and l >= 2")
        if self.n <= 0 or self.n % (self.l - 1):
            raise ValueError(f"n = {self.n} is not a positive multiple of l-1 = {self.l - 1}")
        m = self.n // (self.l - 1)
        if m < 2:
            raise ValueError("base pattern needs at least 2 elements")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "p", largest_prime_factor(m))
        object.__setattr__(self, "r", primitive_root(m))
        if self.t is not None and not 1 <= self.t <= self.k:
            raise ValueError(f"t must lie in 1..{self.k}")
        if self.q is not None and not 1 <= self.q <= m // self.p:
            raise ValueError(f"q must lie in 1..{m // self.p}")

    def candidates(self) -> list[tuple[int, int]]:
        ts = [self.t] if self.t is not None else range(1, self.k + 1)
        qs = [self.q] if self.q is not None else range(1, self.m // self.p + 1)
        return [(t, q) for t in ts for q in qs]


def base_pattern(k: int, m: int, p: int, r: int, t: int, q: int) -> tuple[list[int] | None, str]:
    """Colors of residues 1..m (index 0 unused), or None and the reason it failed.

    q and m seed the first block, which is closed under multiplication by r^t;
    multiplying by r, r^2, ..., r^(t-1) seeds further blocks; finally blocks are
    merged so that adding p maps blocks onto blocks.
    """
    rt = pow(r, t, m)
    orbit: list[int] = []
    seen: set[int] = set()
    x = _rep(q, m)
    while x not in seen:
        seen.add(x)
        orbit.append(x)
        x = _rep(x * rt, m)
    seeded: list[set[int]] = [seen | {m}]
    owner = {y: 0 for y in seeded[0]}
    for j in range(1, t):
        rj = pow(r, j, m)
        img = {_rep(y * rj, m) for y in orbit}
        for y in img:
            if y in owner:
                return None, f"residue {y} forced into blocks {owner[y]} and {j} by x r^{j}"
            owner[y] = j
        seeded.append(img)

    parent = list(range(m + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> bool:
        a, b = find(a), find(b)
        if a == b:
            return False
        parent[a] = b
        return True

    for block in seeded:
        first = next(iter(block))
        for y in block:
            union(first, y)
    changed = True
    while changed:
        changed = False
        for a in range(1, m + 1):
            b = find(a)
            if b != a and union(_rep(a + p, m), _rep(b + p, m)):
                changed = True

    roots = [find(next(iter(b))) for b in seeded]
    if len(set(roots)) < len(roots):
        i, j = next((i, j) for i, j in itertools.combinations(range(len(roots)), 2) if roots[i] == roots[j])
        return None, f"shifting by {p} merges seeded blocks {i} and {j}"
    classes: dict[int, int] = {root: c for c, root in enumerate(roots)}
    colors = [0] * (m + 1)
    for y in range(1, m + 1):
        root = find(y)
        if root not in classes:
            classes[root] = len(classes)
        colors[y] = classes[root]
    if len(classes) > k:
        return None, f"pattern needs {len(classes)} blocks, only {k} available"
    return colors, "ok"


def _try_candidate(args: tuple[int, int, int, int, int, int, int, int]) -> tuple[list[int] | None, str]:
    k, l, n, m, p, r, t, q = args
    pattern, reason = base_pattern(k, m, p, r, t, q)
    if pattern is None:
        return None, reason
    colors = [pattern[_rep(x, m)] for x in range(1, n + 1)]
    if not verify_certificate(Certificate.from_colors(colors, k), l):
        return None, "pattern contains a monochromatic progression"
    return colors, "ok"


def construct(params: ConstructionParams, workers: int = 1) -> Certificate | None:
    """Certificate of length n from the first (t, q) in ascending order that verifies."""
    pr = params
    jobs = [(pr.k, pr.l, pr.n, pr.m, pr.p, pr.r, t, q) for t, q in pr.candidates()]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_try_candidate, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_try_candidate(job))
            if results[-1][0] is not None:
                break
    for job, (colors, reason) in zip(jobs, results):
        if colors is not None:
            log.info("W(%d,%d) > %d: t=%d q=%d", pr.k, pr.l, pr.n, job[6], job[7])
            return Certificate.from_colors(colors, pr.k)
        log.debug("n=%d t=%d q=%d: %s", pr.n, job[6], job[7], reason)
    return None


def extend(cert: Certificate, l: int, limit: int) -> Certificate:
    """Greedily add elements at the end, else at the front, while no progression appears."""
    blocks = [_bitset(b) for b in cert.blocks]
    n = cert.n
    while n < limit:
        dmax = n // (l - 1)
        placed = False
        for c, bits in enumerate(blocks):
            # progressions ending at the new element n+1
            if all(any(not bits >> (n - j * d) & 1 for j in range(1, l)) for d in range(1, dmax + 1)):
                blocks[c] = bits | (1 << n)
                placed = True
                break
        if not placed:
            for c, bits in enumerate(blocks):
                # progressions starting at the new element 0, i.e. d, 2d, ... in the block
                if all(any(not bits >> (j * d - 1) & 1 for j in range(1, l)) for d in range(1, dmax + 1)):
                    blocks = [b << 1 for b in blocks]
                    blocks[c] |= 1
                    placed = True
                    break
        if not placed:
            break
        n += 1
    if n == cert.n:
        return cert
    out = []
    for bits in blocks:
        out.append(frozenset(i + 1 for i in range(n) if bits >> i & 1))
    return Certificate(n, cert.k, tuple(out))


def search_lower_bound(k: int, l: int, n_start: int, n_end: int,
                       workers: int = 1) -> tuple[int, Certificate] | None:
    """Largest certificate length within [n_start, n_end] reachable by construct + extend."""
    best: tuple[int, Certificate] | None = None
    step = l - 1
    first = max(_ceil_to(n_start, step), 2 * step)
    for n in range(first, n_end + 1, step):
        cert = construct(ConstructionParams(k, l, n), workers=workers)
        if cert is None:
            continue
        cert = extend(cert, l, n_end)
        if not verify_certificate(cert, l):
            continue
        if best is None or cert.n > best[0]:
            best = (cert.n, cert)
    if best is not None and best[0] < n_start:
        return None
    return best


def _ceil_to(x: int, step: int) -> int:
    return -(-x // step) * step


# ---------------------------------------------------------------- CSP encoding

def build_vdw_model(k: int, l: int, n: int) -> Model:
    """Boolean x[i,j]: integer j+1 has color i.  One color per integer, no monochromatic l-AP."""
    b = ModelBuilder()
    for i in range(k):
        for j in range(n):
            b.var(f"x[{i},{j}]", (0, 1))
    for j in range(n):
        b.add(LinearSumEq.sum_of((i * n + j for i in range(k)), 1))
    for i in range(k):
        b.add(NoAP(tuple(i * n + j for j in range(n)), l))
    return b.build()


def decode_solution(lits: Iterable[tuple[int, int]], k: int, n: int) -> Certificate:
    vals = dict(lits)
    return Certificate(n, k, tuple(frozenset(j + 1 for j in range(n) if vals[i * n + j] == 1) for i in range(k)))


# ---------------------------------------------------------------- files

def read_certificate(text: str) -> tuple[Certificate, int]:
    """Parse ``k n l`` then one line of sorted elements per block.  Returns (cert, l)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty certificate file")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("header must be 'k n l'")
    k, n, l = (int(tok) for tok in head)
    rows = [frozenset(int(tok) for tok in line.split()) for line in lines[1:]]
    if len(rows) > k:
        raise PartitionError(f"{len(rows)} blocks listed for k = {k}")
    rows += [frozenset()] * (k - len(rows))
    return Certificate(n, k, tuple(rows)), l


def write_certificate(cert: Certificate, l: int) -> str:
    out = [f"{cert.k} {cert.n} {l}"]
    out += [" ".join(str(x) for x in sorted(b)) for b in cert.blocks]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- fixtures

W23_CERTIFICATE = Certificate(8, 2, (frozenset({1, 4, 5, 8}), frozenset({2, 3, 6, 7})))

W53_BASE: tuple[tuple[int, ...], ...] = (
    (1, 3, 7, 9, 16, 19, 21, 27, 48, 49, 57, 59, 62, 63, 73, 81, 85),
    (5, 13, 17, 18, 20, 24, 26, 33, 36, 38, 44, 65, 66, 74, 76, 79, 80),
    (6, 8, 11, 12, 22, 30, 34, 35, 37, 41, 43, 50, 53, 55, 61, 82, 83),
    (14, 15, 23, 25, 28, 29, 39, 47, 51, 52, 54, 58, 60, 67, 70, 72, 78),
    (2, 4, 10, 31, 32, 40, 42, 45, 46, 56, 64, 68, 69, 71, 75, 77, 84),
)

# the base pattern after adding p = 17, rows in the same block order
W53_PLUS_P: tuple[tuple[int, ...], ...] = (
    (18, 20, 24, 26, 33, 36, 38, 44, 65, 66, 74, 76, 79, 80, 5, 13, 17),
    (22, 30, 34, 35, 37, 41, 43, 50, 53, 55, 61, 82, 83, 6, 8, 11, 12),
    (23, 25, 28, 29, 39, 47, 51, 52, 54, 58, 60, 67, 70, 72, 78, 14, 15),
    (31, 32, 40, 42, 45, 46, 56, 64, 68, 69, 71, 75, 77, 84, 2, 4, 10),
    (19, 21, 27, 48, 49, 57, 59, 62, 63, 73, 81, 85, 1, 3, 7, 9, 16),
)

# the base pattern after multiplying by r = 3
W53_TIMES_R: tuple[tuple[int, ...], ...] = (
    (3, 9, 21, 27, 48, 57, 63, 81, 59, 62, 1, 7, 16, 19, 49, 73, 85),
    (15, 39, 51, 54, 60, 72, 78, 14, 23, 29, 47, 25, 28, 52, 58, 67, 70),
    (18, 24, 33, 36, 66, 5, 17, 20, 26, 38, 44, 65, 74, 80, 13, 76, 79),
    (42, 45, 69, 75, 84, 2, 32, 56, 68, 71, 77, 4, 10, 31, 40, 46, 64),
    (6, 12, 30, 8, 11, 35, 41, 50, 53, 83, 22, 34, 37, 43, 55, 61, 82),
)
