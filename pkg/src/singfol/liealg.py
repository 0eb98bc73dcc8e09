"""Finite-dimensional Lie algebras over the rationals.

Algebras are given by structure constants c[i][j][k] with
[e_i, e_j] = sum_k c[i][j][k] e_k; antisymmetry and the Jacobi identity
are checked exactly at construction.  On top of that the module provides
the Killing form, the solvable radical (computed in characteristic zero
as the Killing-orthogonal complement of the derived subalgebra, then
re-verified to be a solvable ideal), a constructive Levi decomposition,
and a solver for degree-1 and degree-2 Chevalley-Eilenberg coboundary
equations.  Cohomological vanishing is never assumed: the solver works
by exact linear algebra and reports a canonical nonzero class when the
system is inconsistent.

The Levi decomposition iterates through the derived series of the
radical.  At each stage the curvature of the current linear section is a
2-cocycle valued in an abelian subquotient; a primitive found by the
coboundary solver corrects the section one stage deeper.  All section
identities are re-verified exactly before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InternalCheckError, PreconditionError
from .linalg import (
    TrackedEchelon,
    identity_matrix,
    is_zero_vector,
    mat_mul,
    mat_trace,
    mat_vec,
    nullspace,
    solve_linear,
    vec_scale,
    vec_sub,
    zero_vector,
)

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]

ZERO = Fraction(0)


class LieAlgebra:
    """Lie algebra presented by exact structure constants."""

    __slots__ = ("dim", "structure")

    def __init__(self, dim: int, structure):
        structure = tuple(
            tuple(tuple(Fraction(c) for c in row) for row in plane)
            for plane in structure
        )
        if len(structure) != dim or any(
            len(plane) != dim or any(len(row) != dim for row in plane)
            for plane in structure
        ):
            raise ValueError("structure tensor has wrong shape")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "structure", structure)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    def _validate(self):
        d = self.dim
        c = self.structure
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if c[i][j][k] != -c[j][i][k]:
                        raise ValueError("structure constants are not antisymmetric")
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    total = [ZERO] * d
                    for m in range(d):
                        for t in range(d):
                            total[t] += c[i][j][m] * c[m][k][t]
                            total[t] += c[j][k][m] * c[m][i][t]
                            total[t] += c[k][i][m] * c[m][j][t]
                    if any(x != 0 for x in total):
                        raise ValueError("Jacobi identity fails")

    @classmethod
    def from_brackets(cls, dim: int, brackets: Dict[Tuple[int, int], Sequence]):
        """Build from [e_i, e_j] for i < j; antisymmetry is filled in."""
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), vector in brackets.items():
            if not i < j:
                raise ValueError("bracket table keys must have i < j")
            for k, value in enumerate(vector):
                c[i][j][k] = Fraction(value)
                c[j][i][k] = -Fraction(value)
        return cls(dim, c)

    @classmethod
    def abelian(cls, dim: int):
        return cls.from_brackets(dim, {})

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        d = self.dim
        out = [ZERO] * d
        for i in range(d):
            if u[i] == 0:
                continue
            for j in range(d):
                if v[j] == 0:
                    continue
                uivj = u[i] * v[j]
                for k in range(d):
                    out[k] += uivj * self.structure[i][j][k]
        return tuple(out)

    def ad(self, v: Sequence[Fraction]) -> Matrix:
        """Matrix of [v, -] in the defining basis."""
        d = self.dim
        columns = [self.bracket(v, _unit(d, j)) for j in range(d)]
        return tuple(tuple(columns[j][k] for j in range(d)) for k in range(d))

    def is_abelian(self) -> bool:
        return all(
            c == 0 for plane in self.structure for row in plane for c in row
        )

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim})"


def _unit(dim: int, index: int) -> Vector:
    return tuple(Fraction(1) if i == index else ZERO for i in range(dim))


@dataclass(frozen=True)
class Subspace:
    """Subspace of a coordinatized Lie algebra, canonical RREF basis."""

    ambient_dim: int
    rows: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Sequence[Sequence[Fraction]]):
        ech = TrackedEchelon(ambient_dim)
        for v in vectors:
            ech.insert(v)
        return cls(ambient_dim, tuple(ech.rows), tuple(ech.pivots))

    @classmethod
    def full(cls, ambient_dim: int):
        return cls.from_vectors(ambient_dim, identity_matrix(ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int):
        return cls(ambient_dim, (), ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    def _echelon(self) -> TrackedEchelon:
        ech = TrackedEchelon(self.ambient_dim)
        for r in self.rows:
            ech.insert(r)
        return ech

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return self._echelon().contains(vector)

    def contains_subspace(self, other: "Subspace") -> bool:
        ech = self._echelon()
        return all(ech.contains(r) for r in other.rows)

    def intersect_dim(self, other: "Subspace") -> int:
        ech = TrackedEchelon(self.ambient_dim)
        for r in self.rows:
            ech.insert(r)
        for r in other.rows:
            ech.insert(r)
        return self.dim + other.dim - ech.dim


def bracket_span(
    algebra: LieAlgebra, left: Subspace, right: Subspace
) -> Subspace:
    vectors = [
        algebra.bracket(u, v) for u in left.rows for v in right.rows
    ]
    return Subspace.from_vectors(algebra.dim, vectors)


def derived_series(algebra: LieAlgebra, start: Subspace) -> List[Subspace]:
    """start ⊇ [start, start] ⊇ ... down to the first repetition."""
    series = [start]
    while True:
        nxt = bracket_span(algebra, series[-1], series[-1])
        if nxt.rows == series[-1].rows:
            break
        series.append(nxt)
        if nxt.is_zero:
            break
    return series


def lower_central_series(algebra: LieAlgebra, start: Subspace) -> List[Subspace]:
    series = [start]
    while True:
        nxt = bracket_span(algebra, start, series[-1])
        if nxt.rows == series[-1].rows:
            break
        series.append(nxt)
        if nxt.is_zero:
            break
    return series


def is_solvable(algebra: LieAlgebra, sub: Subspace) -> bool:
    return derived_series(algebra, sub)[-1].is_zero


def is_nilpotent(algebra: LieAlgebra, sub: Subspace) -> bool:
    return lower_central_series(algebra, sub)[-1].is_zero


def is_ideal(algebra: LieAlgebra, sub: Subspace) -> bool:
    ech = sub._echelon()
    for i in range(algebra.dim):
        e_i = _unit(algebra.dim, i)
        for r in sub.rows:
            if not ech.contains(algebra.bracket(e_i, r)):
                return False
    return True


def killing_form(algebra: LieAlgebra) -> Matrix:
    """kappa(x, y) = trace(ad_x ad_y) on the defining basis."""
    d = algebra.dim
    ads = [algebra.ad(_unit(d, i)) for i in range(d)]
    return tuple(
        tuple(mat_trace(mat_mul(ads[i], ads[j])) for j in range(d)) for i in range(d)
    )


def killing_nondegenerate(algebra: LieAlgebra) -> bool:
    kappa = killing_form(algebra)
    return len(nullspace(kappa, algebra.dim)) == 0


def solvable_radical(algebra: LieAlgebra) -> Subspace:
    """Maximal solvable ideal, as the Killing-perp of [g, g].

    Valid over fields of characteristic zero.  The result is re-verified
    to be a solvable ideal; failure would indicate a bug, not bad input.
    """
    d = algebra.dim
    if d == 0:
        return Subspace.zero(0)
    derived = bracket_span(
        algebra, Subspace.full(d), Subspace.full(d)
    )
    kappa = killing_form(algebra)
    rows = [mat_vec(kappa, w) for w in derived.rows]
    radical = Subspace.from_vectors(d, nullspace(rows, d))
    if not is_ideal(algebra, radical):
        raise InternalCheckError("computed radical is not an ideal")
    if not is_solvable(algebra, radical):
        raise InternalCheckError("computed radical is not solvable")
    return radical


@dataclass(frozen=True)
class QuotientData:
    """Quotient Lie algebra with explicit projection and linear lift.

    The quotient basis consists of the classes of the ambient basis
    vectors at the non-pivot coordinates of the ideal, so projection and
    lift are both deterministic.
    """

    algebra: LieAlgebra
    ideal: Subspace
    complement: Tuple[int, ...]
    proj_matrix: Matrix  # (quotient dim) x (ambient dim)
    lift_matrix: Matrix  # (ambient dim) x (quotient dim)

    def project(self, v: Sequence[Fraction]) -> Vector:
        return mat_vec(self.proj_matrix, v)

    def lift(self, w: Sequence[Fraction]) -> Vector:
        return mat_vec(self.lift_matrix, w)


def quotient_algebra(algebra: LieAlgebra, ideal: Subspace) -> QuotientData:
    if not is_ideal(algebra, ideal):
        raise PreconditionError("quotient requires an ideal")
    d = algebra.dim
    ech = ideal._echelon()
    complement = tuple(j for j in range(d) if j not in set(ideal.pivots))
    qdim = len(complement)

    def project(v):
        residual, _ = ech.reduce(v)
        return tuple(residual[j] for j in complement)

    proj_matrix = tuple(
        tuple(project(_unit(d, i))[t] for i in range(d)) for t in range(qdim)
    )
    lift_matrix = tuple(
        tuple(Fraction(1) if complement[t] == i else ZERO for t in range(qdim))
        for i in range(d)
    )
    structure = [
        [
            [ZERO] * qdim
            for _ in range(qdim)
        ]
        for _ in range(qdim)
    ]
    for a in range(qdim):
        for b in range(qdim):
            w = project(
                algebra.bracket(_unit(d, complement[a]), _unit(d, complement[b]))
            )
            for k in range(qdim):
                structure[a][b][k] = w[k]
    q = LieAlgebra(qdim, structure)
    return QuotientData(q, ideal, complement, proj_matrix, lift_matrix)


class SubQuotient:
    """Vector space quotient outer/inner with class and lift maps."""

    def __init__(self, outer: Subspace, inner: Subspace):
        if not outer.contains_subspace(inner):
            raise PreconditionError("inner space is not inside the outer one")
        self.ambient_dim = outer.ambient_dim
        self._ech = TrackedEchelon(outer.ambient_dim)
        for r in inner.rows:
            self._ech.insert(r)
        self.reps: List[Vector] = []
        for r in outer.rows:
            tag = len(self.reps)
            if self._ech.insert(r, tag=tag):
                self.reps.append(r)
        self.dim = len(self.reps)

    def class_of(self, v: Sequence[Fraction]) -> Vector:
        coords = self._ech.coordinates(v)
        if coords is None:
            raise PreconditionError("vector lies outside the outer space")
        out = [ZERO] * self.dim
        for tag, coeff in coords.items():
            out[tag] = coeff
        return tuple(out)

    def lift(self, w: Sequence[Fraction]) -> Vector:
        out = [ZERO] * self.ambient_dim
        for t, coeff in enumerate(w):
            if coeff != 0:
                for j in range(self.ambient_dim):
                    out[j] += coeff * self.reps[t][j]
        return tuple(out)


class Representation:
    """Exact matrix representation of a Lie algebra.

    The homomorphism property rho([x, y]) = [rho(x), rho(y)] is verified
    on all basis pairs, and both compositions of consecutive
    Chevalley-Eilenberg differentials are checked to vanish, so the
    cochain complexes used by the coboundary solver are structurally
    sound by construction.
    """

    def __init__(self, algebra: LieAlgebra, space_dim: int, matrices: Sequence):
        self.algebra = algebra
        self.space_dim = space_dim
        self.matrices: Tuple[Matrix, ...] = tuple(
            tuple(tuple(Fraction(x) for x in row) for row in m) for m in matrices
        )
        if len(self.matrices) != algebra.dim:
            raise ValueError("need one matrix per basis element")
        for m in self.matrices:
            if len(m) != space_dim or any(len(r) != space_dim for r in m):
                raise ValueError("representation matrix has wrong shape")
        d = algebra.dim
        for i in range(d):
            for j in range(i + 1, d):
                lhs = self.of_vector(
                    algebra.bracket(_unit(d, i), _unit(d, j))
                )
                rhs = _mat_sub(
                    mat_mul(self.matrices[i], self.matrices[j]),
                    mat_mul(self.matrices[j], self.matrices[i]),
                )
                if lhs != rhs:
                    raise ValueError("matrices do not represent the bracket")
        self._verify_complex()

    def of_vector(self, v: Sequence[Fraction]) -> Matrix:
        d = self.algebra.dim
        m = self.space_dim
        out = [[ZERO] * m for _ in range(m)]
        for i in range(d):
            if v[i] == 0:
                continue
            for r in range(m):
                row = self.matrices[i][r]
                for cidx in range(m):
                    out[r][cidx] += v[i] * row[cidx]
        return tuple(tuple(r) for r in out)

    def _verify_complex(self):
        m = self.space_dim
        for b in range(m):
            if any(
                any(x != 0 for x in pairvec)
                for pairvec in delta1(self, delta0(self, _unit(m, b)))
            ):
                raise InternalCheckError("delta1 after delta0 is nonzero")
        d = self.algebra.dim
        for t in range(d):
            for b in range(m):
                sigma = tuple(
                    _unit(m, b) if s == t else zero_vector(m) for s in range(d)
                )
                if any(
                    any(x != 0 for x in tvec)
                    for tvec in delta2(self, delta1(self, sigma))
                ):
                    raise InternalCheckError("delta2 after delta1 is nonzero")


def _mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def adjoint_representation(algebra: LieAlgebra) -> Representation:
    d = algebra.dim
    return Representation(
        algebra, d, [algebra.ad(_unit(d, i)) for i in range(d)]
    )


def pair_list(dim: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(dim) for j in range(i + 1, dim)]


Cochain1 = Tuple[Vector, ...]          # value on each basis element
Cochain2 = Tuple[Vector, ...]          # value on each pair (i, j), i < j


def _cochain2_value(
    rep: Representation, c: Cochain2, i: int, j: int
) -> Vector:
    m = rep.space_dim
    if i == j:
        return zero_vector(m)
    pairs = pair_list(rep.algebra.dim)
    if i < j:
        return c[pairs.index((i, j))]
    return vec_scale(c[pairs.index((j, i))], Fraction(-1))


def _cochain1_on_vector(rep: Representation, sigma: Cochain1, v: Vector) -> Vector:
    m = rep.space_dim
    out = [ZERO] * m
    for t, coeff in enumerate(v):
        if coeff != 0:
            for r in range(m):
                out[r] += coeff * sigma[t][r]
    return tuple(out)


def delta0(rep: Representation, v: Sequence[Fraction]) -> Cochain1:
    return tuple(mat_vec(m, v) for m in rep.matrices)


def delta1(rep: Representation, sigma: Cochain1) -> Cochain2:
    d = rep.algebra.dim
    out = []
    for i, j in pair_list(d):
        value = vec_sub(
            mat_vec(rep.matrices[i], sigma[j]),
            mat_vec(rep.matrices[j], sigma[i]),
        )
        bracket = rep.algebra.bracket(_unit(d, i), _unit(d, j))
        value = vec_sub(value, _cochain1_on_vector(rep, sigma, bracket))
        out.append(value)
    return tuple(out)


def delta2(rep: Representation, c: Cochain2):
    d = rep.algebra.dim
    out = []
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                value = mat_vec(rep.matrices[i], _cochain2_value(rep, c, j, k))
                value = vec_sub(
                    value, mat_vec(rep.matrices[j], _cochain2_value(rep, c, i, k))
                )
                value = tuple(
                    x + y
                    for x, y in zip(
                        value,
                        mat_vec(rep.matrices[k], _cochain2_value(rep, c, i, j)),
                    )
                )
                for (a, b, t), sign in (
                    ((i, j, k), -1),
                    ((i, k, j), 1),
                    ((j, k, i), -1),
                ):
                    w = rep.algebra.bracket(_unit(d, a), _unit(d, b))
                    contribution = zero_vector(rep.space_dim)
                    for s, coeff in enumerate(w):
                        if coeff != 0:
                            contribution = tuple(
                                x + coeff * y
                                for x, y in zip(
                                    contribution, _cochain2_value(rep, c, s, t)
                                )
                            )
                    value = tuple(
                        x + sign * y for x, y in zip(value, contribution)
                    )
                out.append(value)
    return tuple(out)


@dataclass(frozen=True)
class CoboundaryResult:
    """Outcome of a coboundary equation: either a primitive with
    delta(primitive) = cocycle exactly, or a canonical residual
    representing the nonzero cohomology class."""

    solved: bool
    primitive: Optional[tuple] = None
    residual: Optional[tuple] = None


def ce_solve(rep: Representation, degree: int, cocycle) -> CoboundaryResult:
    """Solve delta(sigma) = cocycle in the Chevalley-Eilenberg complex.

    ``degree`` is the degree of the cocycle (1 or 2); the primitive has
    degree one less.  The input must be closed (verified exactly).  The
    solution is pinned by echelon pivoting with free variables set to
    zero, so it is deterministic.
    """
    d = rep.algebra.dim
    m = rep.space_dim
    if degree == 1:
        cocycle = tuple(tuple(Fraction(x) for x in v) for v in cocycle)
        closed = delta1(rep, cocycle)
        if any(any(x != 0 for x in v) for v in closed):
            raise PreconditionError("input 1-cochain is not a cocycle")
        unknowns = m
        rows = []
        rhs = []
        for i in range(d):
            for r in range(m):
                rows.append(tuple(rep.matrices[i][r]))
                rhs.append(cocycle[i][r])

        def unflatten(x):
            return tuple(x)

        def delta_of(x):
            return delta0(rep, x)

        basis_cochains = [_unit(m, b) for b in range(m)]
        flat_target = [v for vec_ in cocycle for v in vec_]

        def flatten_cochain(c):
            return [v for vec_ in c for v in vec_]

    elif degree == 2:
        cocycle = tuple(tuple(Fraction(x) for x in v) for v in cocycle)
        closed = delta2(rep, cocycle)
        if any(any(x != 0 for x in v) for v in closed):
            raise PreconditionError("input 2-cochain is not a cocycle")
        unknowns = d * m
        pairs = pair_list(d)
        rows = []
        rhs = []
        for p, (i, j) in enumerate(pairs):
            bracket = rep.algebra.bracket(_unit(d, i), _unit(d, j))
            for r in range(m):
                row = [ZERO] * unknowns
                for cidx in range(m):
                    row[j * m + cidx] += rep.matrices[i][r][cidx]
                    row[i * m + cidx] -= rep.matrices[j][r][cidx]
                for t in range(d):
                    if bracket[t] != 0:
                        row[t * m + r] -= bracket[t]
                rows.append(tuple(row))
                rhs.append(cocycle[p][r])

        def unflatten(x):
            return tuple(tuple(x[t * m : (t + 1) * m]) for t in range(d))

        def delta_of(x):
            return delta1(rep, x)

        basis_cochains = [
            tuple(
                _unit(m, b) if s == t else zero_vector(m) for s in range(d)
            )
            for t in range(d)
            for b in range(m)
        ]
        flat_target = [v for vec_ in cocycle for v in vec_]

        def flatten_cochain(c):
            return [v for vec_ in c for v in vec_]

    else:
        raise PreconditionError("only degrees 1 and 2 are supported")

    solution = solve_linear(rows, rhs)
    if solution is not None:
        primitive = unflatten(solution)
        if flatten_cochain(delta_of(primitive)) != flat_target:
            raise InternalCheckError("coboundary solution failed re-verification")
        return CoboundaryResult(solved=True, primitive=primitive)
    # canonical representative of the class: reduce modulo the image of delta
    width = len(flat_target)
    image = TrackedEchelon(width)
    for b in basis_cochains:
        image.insert(flatten_cochain(delta_of(b)))
    residual_flat, _ = image.reduce(flat_target)
    if degree == 1:
        residual = tuple(
            tuple(residual_flat[i * m : (i + 1) * m]) for i in range(d)
        )
    else:
        residual = tuple(
            tuple(residual_flat[p * m : (p + 1) * m])
            for p in range(len(pair_list(d)))
        )
    return CoboundaryResult(solved=False, residual=residual)


@dataclass(frozen=True)
class LeviData:
    """Levi decomposition: radical, a bracket-closed complement, and the
    section from the semisimple quotient realizing it."""

    radical: Subspace
    levi: Subspace
    quotient: LieAlgebra
    quotient_data: QuotientData
    section: Tuple[Vector, ...]  # image in g of each quotient basis vector


def levi_subalgebra(algebra: LieAlgebra) -> LeviData:
    """Constructive Levi-Malcev decomposition over the rationals.

    Starting from the coordinate complement of the radical, the section
    is corrected stage by stage through the derived series of the
    radical; at each stage the curvature is a 2-cocycle valued in an
    abelian subquotient and a primitive from ``ce_solve`` removes it.
    Every claimed identity is re-verified exactly before returning.
    """
    d = algebra.dim
    radical = solvable_radical(algebra)
    qdata = quotient_algebra(algebra, radical)
    q = qdata.algebra
    if q.dim > 0 and not killing_nondegenerate(q):
        raise InternalCheckError("semisimple quotient has degenerate Killing form")
    section = [qdata.lift(_unit(q.dim, t)) for t in range(q.dim)]

    def curvature(sec):
        out = {}
        for a in range(q.dim):
            for b in range(a + 1, q.dim):
                value = algebra.bracket(sec[a], sec[b])
                target = q.bracket(_unit(q.dim, a), _unit(q.dim, b))
                for k in range(q.dim):
                    if target[k] != 0:
                        value = vec_sub(value, vec_scale(sec[k], target[k]))
                out[(a, b)] = value
        return out

    series = derived_series(algebra, radical)
    if not series[-1].is_zero:
        raise InternalCheckError("radical derived series does not terminate")
    series.append(Subspace.zero(d))
    for stage in range(len(series) - 1):
        curv = curvature(section)
        if all(is_zero_vector(v) for v in curv.values()):
            break
        outer, inner = series[stage], series[stage + 1]
        for v in curv.values():
            if not outer.contains(v):
                raise InternalCheckError(
                    "curvature escaped its derived-series stage"
                )
        w = SubQuotient(outer, inner)
        if w.dim == 0:
            continue
        matrices = []
        for t in range(q.dim):
            cols = [
                w.class_of(algebra.bracket(section[t], w.lift(_unit(w.dim, b))))
                for b in range(w.dim)
            ]
            matrices.append(
                tuple(tuple(cols[b][r] for b in range(w.dim)) for r in range(w.dim))
            )
        rep = Representation(q, w.dim, matrices)
        cocycle = tuple(
            w.class_of(curv[(a, b)]) for a, b in pair_list(q.dim)
        )
        result = ce_solve(rep, 2, cocycle)
        if not result.solved:
            raise InternalCheckError(
                "Levi curvature is not a coboundary; this contradicts the "
                "Whitehead lemma for the semisimple quotient"
            )
        for t in range(q.dim):
            section[t] = vec_sub(section[t], w.lift(result.primitive[t]))
    final = curvature(section)
    if not all(is_zero_vector(v) for v in final.values()):
        raise InternalCheckError("Levi section is not bracket-preserving")
    for t in range(q.dim):
        if qdata.project(section[t]) != _unit(q.dim, t):
            raise InternalCheckError("Levi section does not split the projection")
    levi = Subspace.from_vectors(d, section)
    if levi.dim != q.dim:
        raise InternalCheckError("Levi section columns are dependent")
    if levi.dim + radical.dim != d or levi.intersect_dim(radical) != 0:
        raise InternalCheckError("Levi complement does not complement the radical")
    return LeviData(
        radical=radical,
        levi=levi,
        quotient=q,
        quotient_data=qdata,
        section=tuple(section),
    )
