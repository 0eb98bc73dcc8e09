"""Polynomial vector fields on rational affine n-space.

A field is an n-tuple of polynomials, entry ``i`` multiplying the
coordinate derivation along variable ``i``.  The module provides the Lie
bracket of derivations, the Euler field ``sum_i x_i d/dx_i``,
decomposition into homogeneous pieces, and the pair of degree-shift
operators built from the commutator with the Euler field: on a
homogeneous field of degree m, ``homogeneity_defect(X, k)`` acts as
multiplication by (m - k), and ``homogeneity_defect_inverse`` undoes it
on fields whose components all vanish to order at least k + 1.

A field is homogeneous of degree k when every component polynomial is
homogeneous of degree k; equivalently, its commutator with the Euler
field is (k - 1) times itself.  Linear fields are degree 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import DimensionMismatch, PreconditionError
from .poly import (
    INFINITE_ORDER,
    MINUS_INFINITY,
    Polynomial,
    default_names,
    _coeff_str,
)


class PolyVectorField:
    """Immutable polynomial vector field."""

    __slots__ = ("nvars", "components")

    def __init__(self, components: Sequence[Polynomial]):
        components = tuple(components)
        if not components:
            raise ValueError("a vector field needs at least one component")
        nvars = components[0].nvars
        for c in components:
            if c.nvars != nvars:
                raise DimensionMismatch("components disagree on variable count")
        if len(components) != nvars:
            raise DimensionMismatch(
                f"{len(components)} components for {nvars} variables"
            )
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("PolyVectorField is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "PolyVectorField":
        return cls([Polynomial.zero(nvars)] * nvars)

    @classmethod
    def coordinate(cls, nvars: int, index: int) -> "PolyVectorField":
        """The derivation d/dx_index."""
        comps = [Polynomial.zero(nvars)] * nvars
        comps[index] = Polynomial.constant(nvars, 1)
        return cls(comps)

    def _check_same(self, other: "PolyVectorField"):
        if self.nvars != other.nvars:
            raise DimensionMismatch(
                f"mixed variable counts {self.nvars} and {other.nvars}"
            )

    def __add__(self, other: "PolyVectorField"):
        self._check_same(other)
        return PolyVectorField(
            [a + b for a, b in zip(self.components, other.components)]
        )

    def __sub__(self, other: "PolyVectorField"):
        self._check_same(other)
        return PolyVectorField(
            [a - b for a, b in zip(self.components, other.components)]
        )

    def __neg__(self):
        return PolyVectorField([-a for a in self.components])

    def __mul__(self, factor):
        """Multiplication by a polynomial or an exact scalar."""
        if isinstance(factor, Polynomial):
            if factor.nvars != self.nvars:
                raise DimensionMismatch("coefficient over wrong variable count")
        elif not isinstance(factor, (int, Fraction)):
            return NotImplemented
        return PolyVectorField([a * factor for a in self.components])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return PolyVectorField([a / scalar for a in self.components])

    def __eq__(self, other):
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def __repr__(self):
        return f"PolyVectorField({self.render()})"

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def apply_to(self, f: Polynomial) -> Polynomial:
        """Derivation action: sum_i X_i df/dx_i."""
        if f.nvars != self.nvars:
            raise DimensionMismatch("function over wrong variable count")
        total = Polynomial.zero(self.nvars)
        for i, comp in enumerate(self.components):
            if not comp.is_zero:
                total = total + comp * f.partial(i)
        return total

    def lie_bracket(self, other: "PolyVectorField") -> "PolyVectorField":
        """Commutator of derivations: component j is X(Y_j) - Y(X_j)."""
        self._check_same(other)
        return PolyVectorField(
            [
                self.apply_to(yj) - other.apply_to(xj)
                for xj, yj in zip(self.components, other.components)
            ]
        )

    def vanishing_order(self):
        """Minimum vanishing order over components; INFINITE_ORDER if zero."""
        return min(c.vanishing_order() for c in self.components)

    def total_degree(self):
        degs = [c.total_degree() for c in self.components]
        finite = [d for d in degs if d is not MINUS_INFINITY]
        return max(finite) if finite else MINUS_INFINITY

    def homogeneous_part(self, degree: int) -> "PolyVectorField":
        return PolyVectorField([c.homogeneous_part(degree) for c in self.components])

    def homogeneous_components(self) -> List[Tuple[int, "PolyVectorField"]]:
        """Nonzero homogeneous pieces as (degree, field), degrees ascending."""
        degrees = sorted(
            {sum(e) for c in self.components for e in c.terms}
        )
        return [(d, self.homogeneous_part(d)) for d in degrees]

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for c in self.components for e in c.terms}
        if degree is None:
            return len(degrees) <= 1
        return degrees <= {degree}

    def truncate(self, max_degree: int) -> "PolyVectorField":
        return PolyVectorField([c.truncate(max_degree) for c in self.components])

    def vanishes_at_origin(self) -> bool:
        return all(c.constant_term() == 0 for c in self.components)

    def linear_coefficient_matrix(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """Matrix of the induced action on linear coordinate functions.

        Entry (i, j) is the coefficient of x_i in component j, i.e. the
        matrix of f -> X(f) restricted to the span of the coordinates.
        With this convention the assignment X -> matrix is a Lie algebra
        homomorphism (the plain Jacobian would be an anti-homomorphism).
        """
        n = self.nvars
        unit = [0] * n
        rows = []
        for i in range(n):
            e = list(unit)
            e[i] = 1
            key = tuple(e)
            rows.append(
                tuple(self.components[j].terms.get(key, Fraction(0)) for j in range(n))
            )
        return tuple(rows)

    def render(self, names: Sequence[str] | None = None) -> str:
        """Canonical text form, one summand per polynomial term.

        Example: ``x^2*dx + (-1)*y*dy``.  The zero field renders as ``0``.
        """
        if names is None:
            names = default_names(self.nvars)
        parts = []
        for j, comp in enumerate(self.components):
            for expt, coeff in comp.sorted_terms():
                factors = []
                for name, k in zip(names, expt):
                    if k == 1:
                        factors.append(name)
                    elif k > 1:
                        factors.append(f"{name}^{k}")
                mono = "*".join(factors)
                pieces = []
                if coeff != 1 or not mono:
                    pieces.append(_coeff_str(coeff))
                if mono:
                    pieces.append(mono)
                pieces.append(f"d{names[j]}")
                parts.append("*".join(pieces))
        return " + ".join(parts) if parts else "0"


def euler_field(nvars: int) -> PolyVectorField:
    """The Euler field sum_i x_i d/dx_i."""
    if nvars < 1:
        raise ValueError("nvars must be positive")
    return PolyVectorField(
        [Polynomial.variable(nvars, i) for i in range(nvars)]
    )


def homogeneity_defect(field: PolyVectorField, k: int) -> PolyVectorField:
    """[E, X] - (k-1) X, with E the Euler field.

    Scales the degree-m homogeneous piece of X by (m - k); its kernel is
    exactly the homogeneous fields of degree k.
    """
    if k < 1:
        raise PreconditionError("the degree parameter must be at least 1")
    e = euler_field(field.nvars)
    return e.lie_bracket(field) - (field * (k - 1))


def homogeneity_defect_inverse(field: PolyVectorField, k: int) -> PolyVectorField:
    """Inverse of ``homogeneity_defect`` on fields vanishing to order k+1.

    Scales the degree-m homogeneous piece by 1/(m - k).  On polynomial
    data this closed form is exact, so no integral approximation is ever
    needed.  Raises if any homogeneous component has degree <= k.
    """
    if k < 1:
        raise PreconditionError("the degree parameter must be at least 1")
    total = PolyVectorField.zero(field.nvars)
    for degree, piece in field.homogeneous_components():
        if degree <= k:
            raise PreconditionError(
                f"component of degree {degree} is not above the threshold {k}"
            )
        total = total + piece * Fraction(1, degree - k)
    return total


def pushforward(
    field: PolyVectorField,
    image: Sequence[Polynomial],
    inverse: Sequence[Polynomial],
) -> PolyVectorField:
    """Transport a field through the polynomial coordinate change ``image``.

    ``image`` and ``inverse`` must be mutually inverse n-tuples of
    polynomials (this is verified exactly).  The result has component j
    equal to (sum_i d(image_j)/dx_i * X_i) evaluated at ``inverse``.
    """
    n = field.nvars
    if len(image) != n or len(inverse) != n:
        raise DimensionMismatch("coordinate change has wrong length")
    for j in range(n):
        composed = image[j].substitute(inverse)
        if composed != Polynomial.variable(n, j):
            raise PreconditionError(
                f"coordinate change is not invertible: component {j} "
                f"composes to {composed.render()}"
            )
    new_components = []
    for j in range(n):
        push = Polynomial.zero(n)
        for i in range(n):
            push = push + image[j].partial(i) * field.components[i]
        new_components.append(push.substitute(inverse))
    return PolyVectorField(new_components)


def field_from_dict(
    nvars: int, entries: Dict[int, Polynomial]
) -> PolyVectorField:
    comps = [Polynomial.zero(nvars)] * nvars
    for i, p in entries.items():
        comps[i] = p
    return PolyVectorField(comps)
