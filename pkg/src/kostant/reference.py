"""Brute-force reference implementations used to cross-check the fast path.

Deliberately naive and independent of the residue machinery: partition
counts by dynamic programming over the positive roots, weight multiplicities
by the Freudenthal recursion, tensor coefficients by counting
Littlewood-Richardson skew tableaux, and dimensions by the Weyl product
formula.  All are box-limited; out-of-box inputs raise OracleDomainError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Sequence, Tuple

from .vectors import (
    DominantWeight,
    ValidationError,
    as_vector,
    int_vector,
    is_integral,
    rank_of,
    rho,
    to_fundamental,
    vec_add,
    zero_mean,
)


class OracleDomainError(ValidationError):
    """Input outside the box a brute-force reference can afford."""

    def __init__(self, message: str):
        super().__init__("oracle-out-of-box", message)


DP_ENTRY_BOUND = 12
_DP_STATE_LIMIT = 4_000_000


@dataclass
class DPTable:
    """Partition counts for every zero-sum integral vector in a box.

    States are indexed by the prefix-sum vector (P_1, ..., P_r) of a, which
    is non-negative exactly on the cone.  Roots are folded in one at a time
    with a coin-change pass; adding e_i - e_j bumps P_k for i <= k < j, so a
    lexicographically ascending sweep sees the smaller state first.
    """

    rank: int
    bound: int
    caps: Tuple[int, ...] = field(init=False)
    counts: Dict[Tuple[int, ...], int] = field(init=False)

    def __post_init__(self):
        r, b = self.rank, self.bound
        # |a_i| <= b confines the prefix sums to 0 <= P_k <= min(k, r+1-k)*b.
        self.caps = tuple(min(k, r + 1 - k) * b for k in range(1, r + 1))
        self.counts = {}

    @classmethod
    def build(cls, rank: int, bound: int, root_order: Sequence[Tuple[int, int]] | None = None) -> "DPTable":
        table = cls(rank, bound)
        size = 1
        for cap in table.caps:
            size *= cap + 1
        if size > _DP_STATE_LIMIT:
            raise OracleDomainError(f"DP table would need {size} states")
        states = sorted(product(*(range(cap + 1) for cap in table.caps)))
        counts = {state: 0 for state in states}
        counts[(0,) * rank] = 1
        roots = root_order or [
            (i, j) for i in range(1, rank + 2) for j in range(i + 1, rank + 2)
        ]
        for i, j in roots:
            lo, hi = i - 1, min(j - 1, rank)  # prefix positions bumped by e_i - e_j
            for state in states:
                previous = list(state)
                ok = True
                for k in range(lo, hi):
                    previous[k] -= 1
                    if previous[k] < 0:
                        ok = False
                        break
                if ok:
                    counts[state] += counts[tuple(previous)]
        table.counts = {s: c for s, c in counts.items() if c}
        return table

    def count(self, a: Sequence) -> int:
        a = int_vector(as_vector(a))
        if len(a) != self.rank + 1:
            raise ValidationError("bad-length", "vector rank does not match the table")
        if sum(a) != 0:
            raise ValidationError("not-zero-sum", "partition counts need a zero-sum vector")
        if max(abs(x) for x in a) > self.bound:
            raise OracleDomainError(f"entries exceed the table bound {self.bound}")
        prefix = []
        total = 0
        for x in a[:-1]:
            total += x
            if total < 0:
                return 0
            prefix.append(total)
        return self.counts.get(tuple(prefix), 0)


@lru_cache(maxsize=64)
def _dp_table(rank: int, bound: int) -> DPTable:
    return DPTable.build(rank, bound)


def kostant_partition_bruteforce(a: Sequence) -> int:
    """Partition count by dynamic programming; entries limited to |a_i| <= 12."""
    v = int_vector(as_vector(a))
    if sum(v) != 0:
        raise ValidationError("not-zero-sum", "partition counts need a zero-sum vector")
    bound = max(1, max(abs(x) for x in v))
    if bound > DP_ENTRY_BOUND:
        raise OracleDomainError(f"entries exceed the oracle bound {DP_ENTRY_BOUND}")
    return _dp_table(rank_of(v), bound).count(v)


_FREUDENTHAL_RANK_LIMIT = 4
_FREUDENTHAL_STATE_LIMIT = 2_000_000


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@lru_cache(maxsize=256)
def _freudenthal_table(lam0: Tuple[Fraction, ...]) -> Dict[Tuple[Fraction, ...], int]:
    """Multiplicities of all dominant weights of V(lam0), lam0 zero-sum dominant."""
    n = len(lam0)
    r = n - 1
    simple_count = r
    prefix = []
    total = Fraction(0)
    for x in lam0[:-1]:
        total += x
        prefix.append(total)
    caps = [int(p) for p in prefix]  # c_k <= prefix sum of lam0 (floor)
    size = 1
    for cap in caps:
        size *= cap + 1
    if size > _FREUDENTHAL_STATE_LIMIT:
        raise OracleDomainError(f"weight lattice box would need {size} points")

    candidates = []
    for c in product(*(range(cap + 1) for cap in caps)):
        mu = tuple(
            lam0[i]
            - (c[i] if i < simple_count else 0)
            + (c[i - 1] if i >= 1 else 0)
            for i in range(n)
        )
        if all(mu[i] >= mu[i + 1] for i in range(n - 1)):
            candidates.append((sum(c), c, mu))
    candidates.sort(key=lambda item: (item[0], item[1]))

    rho_v = rho(r)
    lam_norm = _dot(vec_add(lam0, rho_v), vec_add(lam0, rho_v))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    mult: Dict[Tuple[Fraction, ...], int] = {}
    for level, c, mu in candidates:
        if level == 0:
            mult[mu] = 1
            continue
        acc = Fraction(0)
        for i, j in pairs:
            span = range(i, min(j, simple_count))
            k_max = min(c[l] for l in span)
            for k in range(1, k_max + 1):
                nu = list(mu)
                nu[i] += k
                nu[j] -= k
                m = mult.get(tuple(sorted(nu, reverse=True)), 0)
                if m:
                    acc += m * (nu[i] - nu[j])
        denom = lam_norm - _dot(vec_add(mu, rho_v), vec_add(mu, rho_v))
        value = 2 * acc / denom
        if value.denominator != 1:
            raise AssertionError("Freudenthal recursion produced a non-integer")
        mult[mu] = int(value)
    return mult


def freudenthal_multiplicities(lam) -> Dict[Tuple[Fraction, ...], int]:
    """Dominant-weight multiplicities of V(lam), keyed by zero-mean weights."""
    lam = lam if isinstance(lam, DominantWeight) else DominantWeight(as_vector(lam))
    if lam.rank > _FREUDENTHAL_RANK_LIMIT:
        raise OracleDomainError(f"Freudenthal oracle limited to rank {_FREUDENTHAL_RANK_LIMIT}")
    return _freudenthal_table(zero_mean(lam.canonical))


def multiplicity_freudenthal(lam, mu: Sequence) -> int:
    """Multiplicity of the weight mu in V(lam), by the Freudenthal recursion."""
    lam = lam if isinstance(lam, DominantWeight) else DominantWeight(as_vector(lam))
    mu = as_vector(mu)
    if len(mu) != lam.rank + 1:
        raise ValidationError("bad-length", "weight rank does not match")
    diffs = to_fundamental(mu)
    if not is_integral(diffs):
        raise ValidationError("non-integral-weight", "mu needs integer consecutive differences")
    if sum(lam.canonical) != sum(mu):
        raise ValidationError("unequal-sums", "lambda and mu must have equal entry sums")
    if not is_integral(tuple(a - b for a, b in zip(lam.canonical, mu))):
        return 0  # mu is not in the root lattice translate of lambda
    table = freudenthal_multiplicities(lam)
    dominant = tuple(sorted(zero_mean(mu), reverse=True))
    return table.get(dominant, 0)


_LR_RANK_LIMIT = 3
_LR_CELL_LIMIT = 60


def _lr_count(outer: Sequence[int], inner: Sequence[int], content: Sequence[int]) -> int:
    """Littlewood-Richardson tableaux of shape outer/inner with given content.

    Fills cells in reading order (rows top to bottom, right to left within a
    row), keeping rows weakly increasing, columns strictly increasing, and
    every reading-word prefix a lattice word.
    """
    rows = len(outer)
    cells = [
        (i, col)
        for i in range(rows)
        for col in range(outer[i] - 1, inner[i] - 1, -1)
    ]
    m = len(content)
    remaining = list(content)
    entries: Dict[Tuple[int, int], int] = {}
    seen = [0] * (m + 1)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, col = cells[idx]
        right = entries.get((i, col + 1))
        above = entries.get((i - 1, col))
        total = 0
        for value in range(1, m + 1):
            if remaining[value - 1] == 0:
                continue
            if right is not None and value > right:
                continue
            if above is not None and value <= above:
                continue
            if value > 1 and seen[value - 1] <= seen[value]:
                continue  # placing it would break the lattice property
            entries[(i, col)] = value
            remaining[value - 1] -= 1
            seen[value] += 1
            total += fill(idx + 1)
            seen[value] -= 1
            remaining[value - 1] += 1
            del entries[(i, col)]
        return total

    return fill(0)


def tensor_bruteforce_lr(lam, mu, nu) -> int:
    """Tensor coefficient by Littlewood-Richardson counting, small ranks only."""
    lam = lam if isinstance(lam, DominantWeight) else DominantWeight(as_vector(lam))
    mu = mu if isinstance(mu, DominantWeight) else DominantWeight(as_vector(mu))
    nu = nu if isinstance(nu, DominantWeight) else DominantWeight(as_vector(nu))
    if not (lam.rank == mu.rank == nu.rank):
        raise ValidationError("bad-length", "weights must share one rank")
    if lam.rank > _LR_RANK_LIMIT:
        raise OracleDomainError(f"tableau oracle limited to rank {_LR_RANK_LIMIT}")
    if sum(lam.canonical) + sum(mu.canonical) != sum(nu.canonical):
        raise ValidationError("unequal-sums", "sum(lambda) + sum(mu) must equal sum(nu)")

    n = lam.rank + 1
    lam_p = [int(x - lam.canonical[-1]) for x in lam.canonical]
    mu_p = [int(x - mu.canonical[-1]) for x in mu.canonical]
    nu_p = [int(x - nu.canonical[-1]) for x in nu.canonical]

    shift = Fraction(sum(lam_p) + sum(mu_p) - sum(nu_p), n)
    if shift.denominator != 1:
        return 0  # nu is not in the root-lattice translate of lambda + mu
    shift = int(shift)
    pad = max(0, -shift)
    outer = [x + shift + pad for x in nu_p]
    inner = [x + pad for x in lam_p]
    if any(i > o for i, o in zip(inner, outer)):
        return 0
    if sum(outer) - sum(inner) != sum(mu_p):
        return 0
    if sum(outer) - sum(inner) > _LR_CELL_LIMIT:
        raise OracleDomainError("skew shape too large for the tableau oracle")
    return _lr_count(outer, inner, mu_p)


def weyl_dimension(lam) -> int:
    """dim V(lam) = prod_{i<j} (l_i - l_j) / (j - i) with l = lam + rho."""
    lam = lam if isinstance(lam, DominantWeight) else DominantWeight(as_vector(lam))
    l = vec_add(lam.canonical, rho(lam.rank))
    n = lam.rank + 1
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(l[i] - l[j], j - i)
    if value.denominator != 1:
        raise AssertionError("Weyl dimension product is not an integer")
    return int(value)
