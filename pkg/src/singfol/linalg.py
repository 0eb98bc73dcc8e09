"""Exact linear algebra over the rationals.

Everything here works on plain tuples/lists of Fraction.  Pivoting is
always "first nonzero coordinate under the fixed coordinate order",
which makes every echelon form, basis and solution choice deterministic
and therefore reproducible across runs and platforms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(values) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(width: int) -> Vector:
    return (ZERO,) * width


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(a: Vector, c: Fraction) -> Vector:
    return tuple(x * c for x in a)


def is_zero_vector(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def mat_vec(matrix: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return tuple(sum((row[j] * v[j] for j in range(len(v))), ZERO) for row in matrix)


def mat_mul(a, b) -> Tuple[Vector, ...]:
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(len(b))), ZERO) for j in range(cols))
        for i in range(len(a))
    )


def identity_matrix(n: int) -> Tuple[Vector, ...]:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def mat_trace(a) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), ZERO)


class TrackedEchelon:
    """Incremental reduced row echelon form with provenance tracking.

    Rows are kept fully reduced (RREF): each has a leading 1 in its pivot
    column and zeros in every other row's pivot column, so the stored
    basis of the span is canonical no matter the insertion order.  Each
    row remembers how it was produced as a combination of the inserted
    vectors, keyed by caller-chosen tags.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: List[Vector] = []
        self.combos: List[Dict[Hashable, Fraction]] = []
        self.pivots: List[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Sequence[Fraction], combo: Optional[Dict] = None):
        """Eliminate all pivot coordinates; return (residual, residual combo)."""
        v = list(vector)
        c = dict(combo or {})
        for row, rcombo, p in zip(self.rows, self.combos, self.pivots):
            factor = v[p]
            if factor == 0:
                continue
            for j in range(self.width):
                v[j] -= factor * row[j]
            for tag, coeff in rcombo.items():
                new = c.get(tag, ZERO) - factor * coeff
                if new == 0:
                    c.pop(tag, None)
                else:
                    c[tag] = new
        return tuple(v), c

    def insert(self, vector: Sequence[Fraction], tag: Hashable = None) -> bool:
        """Add a vector (tagged) to the span; False if it was dependent."""
        combo = {tag: ONE} if tag is not None else {}
        residual, combo = self.reduce(vector, combo)
        pivot = next((j for j, x in enumerate(residual) if x != 0), None)
        if pivot is None:
            return False
        lead = residual[pivot]
        row = tuple(x / lead for x in residual)
        combo = {t: c / lead for t, c in combo.items()}
        # keep existing rows reduced against the new pivot
        for i in range(len(self.rows)):
            factor = self.rows[i][pivot]
            if factor == 0:
                continue
            self.rows[i] = tuple(
                x - factor * y for x, y in zip(self.rows[i], row)
            )
            merged = dict(self.combos[i])
            for t, c in combo.items():
                new = merged.get(t, ZERO) - factor * c
                if new == 0:
                    merged.pop(t, None)
                else:
                    merged[t] = new
            self.combos[i] = merged
        at = next(
            (i for i, p in enumerate(self.pivots) if p > pivot), len(self.pivots)
        )
        self.rows.insert(at, row)
        self.combos.insert(at, combo)
        self.pivots.insert(at, pivot)
        return True

    def contains(self, vector: Sequence[Fraction]) -> bool:
        residual, _ = self.reduce(vector)
        return is_zero_vector(residual)

    def coordinates(self, vector: Sequence[Fraction]):
        """Combination of inserted tags producing the vector, or None."""
        residual, combo = self.reduce(vector)
        if not is_zero_vector(residual):
            return None
        return {t: -c for t, c in combo.items()}

    def basis(self) -> Tuple[Vector, ...]:
        return tuple(self.rows)


def span_echelon(vectors: Sequence[Sequence[Fraction]], width: int) -> TrackedEchelon:
    ech = TrackedEchelon(width)
    for i, v in enumerate(vectors):
        ech.insert(v, tag=i)
    return ech


def nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> List[Vector]:
    """Deterministic basis of {x : A x = 0} for A given by ``rows``."""
    ech = TrackedEchelon(width)
    for r in rows:
        ech.insert(r)
    pivotset = set(ech.pivots)
    free = [j for j in range(width) if j not in pivotset]
    basis = []
    for f in free:
        x = [ZERO] * width
        x[f] = ONE
        for row, p in zip(ech.rows, ech.pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_linear(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Optional[Vector]:
    """One solution of A x = b with free variables pinned to zero, or None."""
    width = len(rows[0]) if rows else 0
    ech = TrackedEchelon(width + 1)
    for r, b in zip(rows, rhs):
        ech.insert(tuple(r) + (b,))
    x = [ZERO] * width
    # back-substitution straight off the RREF rows
    for row, p in zip(ech.rows, ech.pivots):
        if p == width:
            return None  # a row reads 0 = 1
    for row, p in zip(reversed(ech.rows), reversed(ech.pivots)):
        total = row[width]
        for j in range(p + 1, width):
            total -= row[j] * x[j]
        x[p] = total
    return tuple(x)
