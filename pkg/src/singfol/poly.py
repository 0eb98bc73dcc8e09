"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in ``nvars`` variables is a finite map from exponent tuples
(one non-negative integer per variable) to nonzero ``Fraction``
coefficients.  The zero polynomial is the empty map.  All arithmetic is
exact; nothing is ever rounded, so polynomial identities can be tested
reliably.

The canonical term order used everywhere is graded reverse lexicographic
(grevlex) with the variable order fixed by position: terms are compared
by total degree first, ties broken so that among monomials of equal
degree the one less divisible by the last variable wins.  ``monomial_key``
returns a tuple that sorts ascending in this order; renderers and
echelon pivots list terms descending.

Degree conventions: ``total_degree`` of the zero polynomial is the
dedicated ordered sentinel ``MINUS_INFINITY`` and its ``vanishing_order``
is ``INFINITE_ORDER``.  Both sentinels compare correctly against integers
but refuse arithmetic, so forgetting the zero case fails loudly instead
of silently.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from .errors import DimensionMismatch

Exponent = Tuple[int, ...]


class _Sentinel:
    """Totally ordered endpoint added to the integers."""

    __slots__ = ()
    _above = False  # subclasses set: True if larger than every int

    def __lt__(self, other):
        if isinstance(other, _Sentinel):
            return self._above < other._above
        return not self._above

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not (self <= other)

    def __ge__(self, other):
        return self == other or self > other

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(type(self).__name__)


class _MinusInfinity(_Sentinel):
    _above = False

    def __repr__(self):
        return "-infinity"


class _InfiniteOrder(_Sentinel):
    _above = True

    def __repr__(self):
        return "infinity"


#: Total degree of the zero polynomial.
MINUS_INFINITY = _MinusInfinity()

#: Vanishing order of the zero polynomial.
INFINITE_ORDER = _InfiniteOrder()


def monomial_key(expt: Exponent):
    """Sort key realizing grevlex: ascending key = ascending monomial."""
    return (sum(expt), tuple(-e for e in reversed(expt)))


def monomial_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponent, b: Exponent) -> bool:
    """True if x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponent, b: Exponent) -> Exponent:
    """Exponent of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> list[Exponent]:
    """All exponent tuples of the given total degree, descending grevlex."""
    if degree < 0:
        return []
    out = []
    for bars in itertools.combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        expt = []
        for b in bars:
            expt.append(b - prev - 1)
            prev = b
        expt.append(degree + nvars - 2 - prev)
        out.append(tuple(expt))
    out.sort(key=monomial_key, reverse=True)
    return out


def monomials_up_to(nvars: int, degree: int) -> list[Exponent]:
    out = []
    for d in range(degree + 1):
        out.extend(monomials_of_degree(nvars, d))
    return out


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exponent, Fraction] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: Dict[Exponent, Fraction] = {}
        for expt, coeff in (terms or {}).items():
            coeff = _as_fraction(coeff)
            if len(expt) != nvars:
                raise DimensionMismatch(
                    f"exponent {expt} has length {len(expt)}, expected {nvars}"
                )
            if coeff != 0:
                clean[tuple(expt)] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: _as_fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} vars")
        expt = [0] * nvars
        expt[index] = 1
        return cls(nvars, {tuple(expt): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, expt: Exponent, coeff=1) -> "Polynomial":
        return cls(nvars, {tuple(expt): _as_fraction(coeff)})

    # -- ring operations ----------------------------------------------

    def _check_same(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise DimensionMismatch(
                f"mixed variable counts {self.nvars} and {other.nvars}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        self._check_same(other)
        out = dict(self.terms)
        for expt, coeff in other.terms.items():
            new = out.get(expt, Fraction(0)) + coeff
            if new == 0:
                out.pop(expt, None)
            else:
                out[expt] = new
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return Polynomial.zero(self.nvars)
            return Polynomial(self.nvars, {e: k * c for e, k in self.terms.items()})
        self._check_same(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = monomial_mul(e1, e2)
                new = out.get(key, Fraction(0)) + c1 * c2
                if new == 0:
                    out.pop(key, None)
                else:
                    out[key] = new
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = _as_fraction(scalar)
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / c)

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"Polynomial({self.render()})"

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self.terms)

    def vanishing_order(self):
        """Minimal total degree over the terms; INFINITE_ORDER for zero.

        ``p`` lies in the k-th power of the ideal of functions vanishing
        at the origin exactly when ``p.vanishing_order() >= k``.
        """
        if not self.terms:
            return INFINITE_ORDER
        return min(sum(e) for e in self.terms)

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def homogeneous_parts(self) -> Dict[int, "Polynomial"]:
        """Nonzero homogeneous components keyed by degree, ascending."""
        buckets: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self.terms.items():
            buckets.setdefault(sum(e), {})[e] = c
        return {d: Polynomial(self.nvars, t) for d, t in sorted(buckets.items())}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self.terms}
        if degree is None:
            return len(degrees) <= 1
        return degrees <= {degree}

    def truncate(self, max_degree: int) -> "Polynomial":
        """Drop all terms of total degree greater than ``max_degree``."""
        return Polynomial(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= max_degree}
        )

    def partial(self, index: int) -> "Polynomial":
        """Exact partial derivative along variable ``index``."""
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            k = e[index]
            if k == 0:
                continue
            lowered = list(e)
            lowered[index] = k - 1
            key = tuple(lowered)
            new = out.get(key, Fraction(0)) + c * k
            if new == 0:
                out.pop(key, None)
            else:
                out[key] = new
        return Polynomial(self.nvars, out)

    def substitute(self, values: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate at polynomial arguments, one per variable."""
        if len(values) != self.nvars:
            raise DimensionMismatch(
                f"need {self.nvars} substitution values, got {len(values)}"
            )
        target_nvars = values[0].nvars
        result = Polynomial.zero(target_nvars)
        for e, c in self.sorted_terms():
            term = Polynomial.constant(target_nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * values[i] ** k
            result = result + term
        return result

    # -- rendering ----------------------------------------------------

    def render(self, names: Sequence[str] | None = None) -> str:
        """Canonical text form: descending terms, explicit ``*`` and ``^``.

        Negative coefficients are parenthesized so the output parses back
        through the expression grammar unchanged.
        """
        if names is None:
            names = default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for expt, coeff in self.sorted_terms():
            factors = []
            for name, k in zip(names, expt):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            if not mono:
                parts.append(_coeff_str(coeff))
            elif coeff == 1:
                parts.append(mono)
            else:
                parts.append(f"{_coeff_str(coeff)}*{mono}")
        return " + ".join(parts)


def _coeff_str(c: Fraction) -> str:
    return str(c) if c > 0 else f"({c})"


def default_names(nvars: int) -> list[str]:
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    return [f"x{i + 1}" for i in range(nvars)]


def poly_sum(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    total = Polynomial.zero(nvars)
    for p in polys:
        total = total + p
    return total
