"""Multivariate Laurent polynomials truncated to per-variable exponent windows.

An iterated residue only ever consumes the coefficient of z^{-1} in the
active variable, and the pole orders met along the way are bounded by the
number of variables, not by the (possibly huge) binomial exponents of the
integrand.  Each series therefore carries a window (min_exponent,
max_exponent) per variable, products are truncated against the window of the
result, and everything discarded is provably irrelevant to the residues
still to be taken.  Coefficients are exact (Python ints or Fractions).
"""

from __future__ import annotations

from typing import Mapping, Optional, Tuple

Bound = Optional[int]  # None means unbounded on that side
Window = Tuple[Tuple[Bound, Bound], ...]


def _bound_add(a: Bound, b: Bound) -> Bound:
    if a is None or b is None:
        return None
    return a + b


def window_product(w1: Window, w2: Window) -> Window:
    """Window containing every product of terms drawn from w1 and w2."""
    return tuple(
        (_bound_add(lo1, lo2), _bound_add(hi1, hi2))
        for (lo1, hi1), (lo2, hi2) in zip(w1, w2)
    )


def _in_window(exps: Tuple[int, ...], window: Window) -> bool:
    for e, (lo, hi) in zip(exps, window):
        if lo is not None and e < lo:
            return False
        if hi is not None and e > hi:
            return False
    return True


class TruncatedLaurentSeries:
    __slots__ = ("nvars", "window", "terms")

    def __init__(self, nvars: int, terms: Mapping[Tuple[int, ...], object] | None = None,
                 window: Window | None = None):
        if window is None:
            window = ((None, None),) * nvars
        if len(window) != nvars:
            raise ValueError("window length must equal the number of variables")
        self.nvars = nvars
        self.window = tuple(window)
        clean = {}
        for exps, coef in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps!r} has wrong arity")
            if not _in_window(exps, self.window):
                raise ValueError(f"exponent tuple {exps!r} lies outside the window")
            if coef:
                clean[tuple(exps)] = coef
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, value, window: Window | None = None) -> "TruncatedLaurentSeries":
        return cls(nvars, {(0,) * nvars: value}, window)

    @classmethod
    def monomial(cls, nvars: int, exps, coef, window: Window | None = None) -> "TruncatedLaurentSeries":
        return cls(nvars, {tuple(exps): coef}, window)

    def is_zero(self) -> bool:
        return not self.terms

    def scalar(self):
        """The value of a zero-variable series."""
        if self.nvars != 0:
            raise ValueError("scalar() requires a zero-variable series")
        return self.terms.get((), 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedLaurentSeries)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("series are mutable-by-construction and unhashable")

    def __repr__(self) -> str:
        inside = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items()))
        return f"TruncatedLaurentSeries({self.nvars}, {{{inside}}})"

    def __add__(self, other: "TruncatedLaurentSeries") -> "TruncatedLaurentSeries":
        if self.nvars != other.nvars or self.window != other.window:
            raise ValueError("addition needs matching variables and windows")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return TruncatedLaurentSeries(self.nvars, terms, self.window)

    def __neg__(self) -> "TruncatedLaurentSeries":
        return self.scaled(-1)

    def __sub__(self, other: "TruncatedLaurentSeries") -> "TruncatedLaurentSeries":
        return self + (-other)

    def scaled(self, c) -> "TruncatedLaurentSeries":
        return TruncatedLaurentSeries(
            self.nvars, {e: c * v for e, v in self.terms.items()}, self.window
        )

    def mul(self, other: "TruncatedLaurentSeries", window: Window | None = None) -> "TruncatedLaurentSeries":
        """Product truncated to `window` (default: the product of the windows)."""
        if self.nvars != other.nvars:
            raise ValueError("multiplication needs matching variables")
        if window is None:
            window = window_product(self.window, other.window)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if _in_window(e, window):
                    out[e] = out.get(e, 0) + c1 * c2
        return TruncatedLaurentSeries(self.nvars, out, window)

    def coefficient_of(self, var: int, exponent: int) -> "TruncatedLaurentSeries":
        """The coefficient of z_var^exponent, as a series without z_var."""
        out = {}
        for e, c in self.terms.items():
            if e[var] == exponent:
                out[e[:var] + e[var + 1 :]] = c
        window = self.window[:var] + self.window[var + 1 :]
        return TruncatedLaurentSeries(self.nvars - 1, out, window)

    def residue(self, var: int) -> "TruncatedLaurentSeries":
        return self.coefficient_of(var, -1)

    def residue_against(self, other: "TruncatedLaurentSeries", var: int) -> "TruncatedLaurentSeries":
        """Coefficient of z_var^{-1} in self * other, with z_var dropped.

        Equivalent to self.mul(other).residue(var) but only forms the term
        pairs whose z_var exponents sum to -1.
        """
        if self.nvars != other.nvars:
            raise ValueError("multiplication needs matching variables")
        buckets: dict = {}
        for e2, c2 in other.terms.items():
            buckets.setdefault(e2[var], []).append((e2[:var] + e2[var + 1 :], c2))
        out: dict = {}
        for e1, c1 in self.terms.items():
            partners = buckets.get(-1 - e1[var])
            if not partners:
                continue
            base = e1[:var] + e1[var + 1 :]
            for e2, c2 in partners:
                e = tuple(a + b for a, b in zip(base, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        window = window_product(self.window, other.window)
        window = window[:var] + window[var + 1 :]
        return TruncatedLaurentSeries(self.nvars - 1, out, window)
