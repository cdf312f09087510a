"""Exact rational linear algebra for the root system A_r.

Vectors live in R^{r+1}, written in the canonical basis, and every entry is
an exact rational number.  The positive roots are e_i - e_j for i < j.  The
conventions fixed here (fundamental coordinates, the Weyl vector rho, the
highest root multiples theta, cone membership, regularity, deformation) are
shared by every other module in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate, combinations
from typing import Iterable, Sequence, Tuple

Vector = Tuple[Fraction, ...]

# Regularity is decided by exhaustive subset enumeration, which is exact but
# exponential in the rank; practical ranks here are single digits.
_REGULARITY_RANK_LIMIT = 20


class ValidationError(ValueError):
    """Invalid input, tagged with a stable machine-readable code."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def as_vector(entries: Iterable) -> Vector:
    """Coerce to a tuple of exact rationals; floats are refused outright."""
    out = []
    for x in entries:
        if isinstance(x, float):
            raise ValidationError(
                "inexact-entry",
                f"floating-point entry {x!r}; give integers or p/q rationals",
            )
        out.append(x if isinstance(x, Fraction) else Fraction(x))
    if len(out) < 2:
        raise ValidationError("bad-length", "a rank-r vector needs r+1 >= 2 entries")
    return tuple(out)


def rank_of(v: Sequence) -> int:
    return len(v) - 1


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(v: Vector, c) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def zero_mean(v: Vector) -> Vector:
    """Translate by a multiple of (1, ..., 1) so the entries sum to zero."""
    shift = Fraction(sum(v), len(v))
    return tuple(a - shift for a in v)


def is_integral(v: Sequence[Fraction]) -> bool:
    return all(Fraction(a).denominator == 1 for a in v)


def int_vector(v: Sequence[Fraction]) -> Tuple[int, ...]:
    """Exact conversion to integers; raises if any entry is fractional."""
    out = []
    for a in v:
        a = Fraction(a)
        if a.denominator != 1:
            raise ValidationError("non-integral", f"entry {a} is not an integer")
        out.append(int(a))
    return tuple(out)


def to_fundamental(v: Sequence) -> Tuple[Fraction, ...]:
    """Consecutive differences (v_1 - v_2, ..., v_r - v_{r+1})."""
    v = as_vector(v)
    return tuple(v[i] - v[i + 1] for i in range(len(v) - 1))


def from_fundamental(coords: Sequence) -> Vector:
    """The unique zero-sum vector with the given consecutive differences."""
    coords = [Fraction(c) if not isinstance(c, float) else c for c in coords]
    if any(isinstance(c, float) for c in coords):
        raise ValidationError("inexact-entry", "floating-point fundamental coordinate")
    if not coords:
        raise ValidationError("bad-length", "need at least one fundamental coordinate")
    suffix = [Fraction(0)]
    for c in reversed(coords):
        suffix.append(suffix[-1] + c)
    v = tuple(reversed(suffix))
    return zero_mean(v)


def rho(r: int) -> Vector:
    """Half the sum of the positive roots: (r/2, r/2 - 1, ..., -r/2)."""
    if r < 1:
        raise ValidationError("bad-rank", "rank must be >= 1")
    return tuple(Fraction(r, 2) - i for i in range(r + 1))


def positive_roots(r: int) -> list[Vector]:
    """All e_i - e_j with 1 <= i < j <= r+1, in lexicographic order."""
    roots = []
    for i in range(r + 1):
        for j in range(i + 1, r + 1):
            root = [Fraction(0)] * (r + 1)
            root[i], root[j] = Fraction(1), Fraction(-1)
            roots.append(tuple(root))
    return roots


def in_positive_cone(a: Sequence) -> bool:
    """Membership in the cone spanned by the positive roots.

    Holds exactly when the entries sum to zero and every proper partial sum
    a_1 + ... + a_k is non-negative.
    """
    a = as_vector(a)
    if sum(a) != 0:
        return False
    partial = Fraction(0)
    for x in a[:-1]:
        partial += x
        if partial < 0:
            return False
    return True


def is_regular(a: Sequence) -> bool:
    """No non-empty proper subset of entries sums to zero."""
    a = as_vector(a)
    if sum(a) != 0:
        raise ValidationError("not-zero-sum", "regularity is defined for zero-sum vectors")
    n = len(a)
    if n - 1 > _REGULARITY_RANK_LIMIT:
        raise ValidationError("rank-too-large", f"regularity check limited to rank {_REGULARITY_RANK_LIMIT}")
    # A subset sums to zero iff its complement does, so sizes up to n//2 suffice.
    for size in range(1, n // 2 + 1):
        for subset in combinations(a, size):
            if sum(subset) == 0:
                return False
    return True


def deform(a: Sequence) -> Vector:
    """Regularising shift a + (1/(2r)) * (1, ..., 1, -r) for integral zero-sum a.

    The result is regular, and it lies in the positive-root cone exactly when
    a does, so cone membership and the residue machinery can be evaluated on
    the deformed point without changing the count.
    """
    a = as_vector(a)
    if not is_integral(a):
        raise ValidationError("non-integral", "deform expects an integral vector")
    if sum(a) != 0:
        raise ValidationError("not-zero-sum", "deform expects a zero-sum vector")
    r = rank_of(a)
    eps = Fraction(1, 2 * r)
    return tuple(a[i] + eps for i in range(r)) + (a[r] - r * eps,)


def theta(r: int) -> "DominantWeight":
    """The dominant weight (r, r-1, ..., 1, -r(r+1)/2).

    Its fundamental coordinates are (1, ..., 1, 1 + r(r+1)/2); the weight is
    regular and zero-sum, which makes it the standard stress test direction
    for partition and multiplicity computations.
    """
    if r < 1:
        raise ValidationError("bad-rank", "rank must be >= 1")
    entries = [Fraction(r - i) for i in range(r)] + [Fraction(-r * (r + 1), 2)]
    return DominantWeight(tuple(entries))


@dataclass(frozen=True)
class DominantWeight:
    """A weight with non-negative integer fundamental coordinates."""

    canonical: Vector

    def __post_init__(self):
        v = as_vector(self.canonical)
        object.__setattr__(self, "canonical", v)
        for i in range(len(v) - 1):
            d = v[i] - v[i + 1]
            if d.denominator != 1:
                raise ValidationError(
                    "non-integral-weight",
                    f"consecutive difference {d} is not an integer",
                )
            if d < 0:
                raise ValidationError(
                    "not-dominant",
                    f"consecutive difference {d} is negative at position {i + 1}",
                )

    @property
    def rank(self) -> int:
        return len(self.canonical) - 1

    def fundamental(self) -> Tuple[Fraction, ...]:
        return to_fundamental(self.canonical)

    def scaled(self, n: int) -> "DominantWeight":
        return DominantWeight(vec_scale(self.canonical, n))


def prefix_sums(v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(accumulate(v))
