"""Isotropy invariants of a foliation module at the origin.

For an involutive module F of vector fields vanishing at the origin, the
isotropy Lie algebra is the quotient of F by the submodule I*F (I the
ideal of functions vanishing at the origin), a finite-dimensional Lie
algebra over the rationals.  This module computes:

* a basis of the isotropy algebra out of the generator classes, with
  structure constants obtained by reducing generator brackets through
  membership certificates;
* the vanishing-order filtration: the subspace of classes representable
  by members vanishing to order i, computed exactly by one bounded
  linear solve per order (coefficient parts of high degree provably
  cannot influence either the constraints or the class);
* the linear quotient (classes modulo the order-two part), realized
  faithfully by the matrices acting on linear coordinate functions;
* the semisimple quotient by the solvable radical, together with the
  verified commuting triangle from the linear quotient;
* a degree-capped certificate for the classical Artin-Rees bound: the
  smallest c such that, in every checked degree d > c, the degree-d
  slice of members vanishing to order d is spanned by degree (d-c)
  monomial multiples of the order-c slice.  A lower-bound witness (a
  member vanishing to order c that is certified not to lie in I*F) is
  attached whenever one exists among the slice witnesses.

Many equalities computed here are theorems for valid input (kernel of
the linearization equals the order-two part, that part is nilpotent and
sits inside the radical, the filtration bracket law).  They are all
re-verified exactly; a failure raises InternalCheckError rather than
producing an uncertified answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import InputRejected, InternalCheckError
from .liealg import (
    LieAlgebra,
    QuotientData,
    Subspace,
    is_nilpotent,
    killing_nondegenerate,
    quotient_algebra,
    solvable_radical,
)
from .linalg import TrackedEchelon, mat_mul, mat_vec, nullspace
from .modalg import (
    FoliationModule,
    MembershipCertificate,
    field_to_terms,
    hom_term_basis,
    field_to_hom_vector,
    modterm_key,
)
from .poly import Polynomial, monomials_of_degree
from .vecfield import PolyVectorField

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]

ZERO = Fraction(0)


@dataclass
class IsotropyData:
    """Everything the point-level holonomy analysis produces at once."""

    module: FoliationModule
    algebra: LieAlgebra
    representatives: Tuple[PolyVectorField, ...]
    representative_gen_indices: Tuple[int, ...]
    generator_class_coords: Tuple[Vector, ...]
    linearization: Tuple[Matrix, ...]
    filtration: Tuple[Subspace, ...]
    filtration_cap: int
    filtration_terminated: bool
    lin_data: QuotientData
    lin_matrices: Tuple[Matrix, ...]
    ss_data: QuotientData
    lin_to_ss: Matrix
    radical: Subspace

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def filtration_at(self, i: int) -> Optional[Subspace]:
        """Filtration subspace, using termination beyond the computed
        range; None when the cap leaves it genuinely unknown."""
        if i < len(self.filtration):
            return self.filtration[i]
        if self.filtration_terminated:
            return Subspace.zero(self.algebra.dim)
        return None

    def class_of_member(self, field: PolyVectorField) -> Vector:
        """Isotropy class of a module member, via a membership certificate."""
        cert = self.module.membership(field)
        if not cert.member:
            raise InputRejected("field is not a member of the module")
        return self.class_of_coefficients(cert.coefficients)

    def class_of_coefficients(self, coefficients) -> Vector:
        out = [ZERO] * self.algebra.dim
        for c, coords in zip(coefficients, self.generator_class_coords):
            value = c.constant_term()
            if value != 0:
                for k in range(self.algebra.dim):
                    out[k] += value * coords[k]
        return tuple(out)

    def representative_of_class(self, coords) -> PolyVectorField:
        field = PolyVectorField.zero(self.module.nvars)
        for c, rep in zip(coords, self.representatives):
            if c != 0:
                field = field + rep * c
        return field


def isotropy_algebra(
    module: FoliationModule, filtration_cap: Optional[int] = None
) -> IsotropyData:
    if module._isotropy is not None and (
        filtration_cap is None
        or module._isotropy.filtration_terminated
        or module._isotropy.filtration_cap >= filtration_cap
    ):
        return module._isotropy

    verdict = module.check_involutive()
    if not verdict.closed:
        i, j, bracket, cert = verdict.witness
        raise InputRejected(
            f"module is not involutive: bracket of generators {i} and {j} "
            f"({bracket.render()}) is not a member"
        )
    if filtration_cap is None:
        filtration_cap = 2 * module.max_generator_degree() + 2

    ideal_times = module.multiply_by_ideal_power(1)
    reduced = [ideal_times.normal_form(g) for g in module.generators]

    # coordinatize the normal forms over their occurring terms
    all_terms = sorted(
        {t for r in reduced for t in field_to_terms(r)}, key=modterm_key, reverse=True
    )
    index = {t: i for i, t in enumerate(all_terms)}
    ech = TrackedEchelon(max(len(all_terms), 1))
    rep_indices: List[int] = []
    for j, r in enumerate(reduced):
        v = [ZERO] * max(len(all_terms), 1)
        for t, c in field_to_terms(r).items():
            v[index[t]] = c
        if ech.insert(v, tag=j):
            rep_indices.append(j)
    dim = len(rep_indices)
    position = {j: b for b, j in enumerate(rep_indices)}

    gen_coords: List[Vector] = []
    for j, r in enumerate(reduced):
        v = [ZERO] * max(len(all_terms), 1)
        for t, c in field_to_terms(r).items():
            v[index[t]] = c
        combo = ech.coordinates(v)
        if combo is None:
            raise InternalCheckError("generator class escaped the computed basis")
        coords = [ZERO] * dim
        for tag, coeff in combo.items():
            coords[position[tag]] = coeff
        gen_coords.append(tuple(coords))

    representatives = tuple(module.generators[j] for j in rep_indices)

    def class_of_coeffs(coefficients) -> Vector:
        out = [ZERO] * dim
        for c, coords in zip(coefficients, gen_coords):
            value = c.constant_term()
            if value != 0:
                for k in range(dim):
                    out[k] += value * coords[k]
        return tuple(out)

    structure = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            if a == b:
                continue
            bracket = representatives[a].lie_bracket(representatives[b])
            if bracket.is_zero:
                continue
            cert = module.membership(bracket)
            if not cert.member:
                raise InternalCheckError(
                    "bracket of members escaped the module despite involutivity"
                )
            coords = class_of_coeffs(cert.coefficients)
            for k in range(dim):
                structure[a][b][k] = coords[k]
    algebra = LieAlgebra(dim, structure)

    linearization = tuple(r.linear_coefficient_matrix() for r in representatives)

    filtration, terminated = _compute_filtration(
        module, gen_coords, dim, filtration_cap
    )
    if dim and (filtration[0].dim != dim or filtration[1].dim != dim):
        raise InternalCheckError(
            "filtration does not start with the full algebra"
        )

    g2 = filtration[2] if len(filtration) > 2 else Subspace.zero(dim)
    lin_data = quotient_algebra(algebra, g2)

    # kernel of the linearization map must be exactly the order-two part
    n = module.nvars
    lin_rows = [
        tuple(linearization[b][r][c] for b in range(dim))
        for r in range(n)
        for c in range(n)
    ]
    lin_kernel = Subspace.from_vectors(dim, nullspace(lin_rows, dim))
    if lin_kernel.rows != g2.rows:
        raise InternalCheckError(
            "kernel of the linearization differs from the order-two part"
        )

    def linear_matrix_of(coords) -> Matrix:
        out = [[ZERO] * n for _ in range(n)]
        for b, c in enumerate(coords):
            if c != 0:
                for r in range(n):
                    for s in range(n):
                        out[r][s] += c * linearization[b][r][s]
        return tuple(tuple(r) for r in out)

    lin_matrices = tuple(
        linear_matrix_of(lin_data.lift(_unit(lin_data.algebra.dim, t)))
        for t in range(lin_data.algebra.dim)
    )
    _verify_matrix_realization(lin_data.algebra, lin_matrices)

    radical = solvable_radical(algebra)
    if not is_nilpotent(algebra, g2):
        raise InternalCheckError(
            "order-two part is not nilpotent; input cannot be a valid "
            "involutive module"
        )
    if not radical.contains_subspace(g2):
        raise InternalCheckError("order-two part escapes the radical")
    ss_data = quotient_algebra(algebra, radical)
    if ss_data.algebra.dim and not killing_nondegenerate(ss_data.algebra):
        raise InternalCheckError("semisimple quotient fails the Killing test")

    # factorization of the projection through the linear quotient
    lin_to_ss = tuple(
        tuple(
            ss_data.project(lin_data.lift(_unit(lin_data.algebra.dim, t)))[k]
            for t in range(lin_data.algebra.dim)
        )
        for k in range(ss_data.algebra.dim)
    )
    if mat_mul(lin_to_ss, lin_data.proj_matrix) != ss_data.proj_matrix:
        raise InternalCheckError(
            "projections to the semisimple quotient do not commute"
        )
    _verify_homomorphism(lin_data.algebra, ss_data.algebra, lin_to_ss)

    data = IsotropyData(
        module=module,
        algebra=algebra,
        representatives=representatives,
        representative_gen_indices=tuple(rep_indices),
        generator_class_coords=tuple(gen_coords),
        linearization=linearization,
        filtration=filtration,
        filtration_cap=filtration_cap,
        filtration_terminated=terminated,
        lin_data=lin_data,
        lin_matrices=lin_matrices,
        ss_data=ss_data,
        lin_to_ss=lin_to_ss,
        radical=radical,
    )
    _verify_filtration_bracket_law(data)
    module._isotropy = data
    return data


def _unit(dim: int, index: int) -> Vector:
    return tuple(Fraction(1) if i == index else ZERO for i in range(dim))


def _compute_filtration(module, gen_coords, dim, cap):
    """Subspaces of classes representable by members of each vanishing
    order, exactly; stops early once the zero subspace is reached."""
    filtration = [Subspace.full(dim), Subspace.full(dim)]
    terminated = dim == 0
    homogeneous = module.generators_homogeneous()
    i = 2
    while i <= cap and not terminated:
        if homogeneous:
            vectors = [
                coords
                for g, coords in zip(module.generators, gen_coords)
                if g.total_degree() >= i
            ]
        else:
            vectors = [
                _class_vector(coeffs, gen_coords, dim)
                for coeffs in module._low_order_solutions(i)
            ]
        sub = Subspace.from_vectors(dim, vectors)
        filtration.append(sub)
        if sub.is_zero:
            terminated = True
        i += 1
    return tuple(filtration[: cap + 1] if not terminated else filtration), terminated


def _class_vector(coefficients, gen_coords, dim) -> Vector:
    out = [ZERO] * dim
    for c, coords in zip(coefficients, gen_coords):
        value = c.constant_term()
        if value != 0:
            for k in range(dim):
                out[k] += value * coords[k]
    return tuple(out)


def _verify_matrix_realization(algebra: LieAlgebra, matrices):
    dim = algebra.dim
    n = len(matrices[0]) if matrices else 0
    flat = [
        tuple(matrices[b][r][c] for b in range(dim))
        for r in range(n)
        for c in range(n)
    ]
    if len(nullspace(flat, dim)) != 0:
        raise InternalCheckError("matrix realization is not faithful")
    for a in range(dim):
        for b in range(dim):
            target = algebra.bracket(_unit(dim, a), _unit(dim, b))
            lhs = _mat_sub(
                mat_mul(matrices[a], matrices[b]), mat_mul(matrices[b], matrices[a])
            )
            rhs = [[ZERO] * n for _ in range(n)]
            for k, c in enumerate(target):
                if c != 0:
                    for r in range(n):
                        for s in range(n):
                            rhs[r][s] += c * matrices[k][r][s]
            if lhs != tuple(tuple(r) for r in rhs):
                raise InternalCheckError("matrix realization breaks the bracket")


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _verify_homomorphism(source: LieAlgebra, target: LieAlgebra, matrix):
    for a in range(source.dim):
        for b in range(source.dim):
            lhs = mat_vec(matrix, source.bracket(_unit(source.dim, a), _unit(source.dim, b)))
            rhs = target.bracket(
                mat_vec(matrix, _unit(source.dim, a)),
                mat_vec(matrix, _unit(source.dim, b)),
            )
            if lhs != rhs:
                raise InternalCheckError("quotient comparison map breaks the bracket")


def _verify_filtration_bracket_law(data: IsotropyData):
    """[g^i, g^j] must land in g^{i+j-1} wherever the target is known."""
    top = len(data.filtration) - 1
    for i in range(1, top + 1):
        for j in range(1, top + 1):
            target = data.filtration_at(i + j - 1)
            if target is None:
                continue
            for u in data.filtration[i].rows:
                for v in data.filtration[j].rows:
                    w = data.algebra.bracket(u, v)
                    if not target.contains(w):
                        raise InternalCheckError(
                            f"filtration bracket law fails at ({i}, {j})"
                        )


def holonomy_filtration(module: FoliationModule, cap: int) -> IsotropyData:
    """Isotropy data with the filtration computed at least up to ``cap``."""
    return isotropy_algebra(module, filtration_cap=cap)


def linear_holonomy(module: FoliationModule):
    """The linear quotient with its faithful matrix realization."""
    data = isotropy_algebra(module)
    return data.lin_data.algebra, data.lin_matrices


def semisimple_holonomy(module: FoliationModule):
    """The semisimple quotient with both verified projections."""
    data = isotropy_algebra(module)
    return data.ss_data.algebra, data.ss_data.proj_matrix, data.lin_to_ss


@dataclass
class ArtinReesCertificate:
    """Degree-capped certification of the Artin-Rees bound.

    ``bound`` is the smallest c whose graded containments hold in every
    checked degree c < d <= checked_up_to; None when even the largest
    candidate below the cap fails (reported as unbounded up to the cap).
    The witness, when present, is a module member vanishing to order
    ``bound`` together with the certificate that it is not in I*F; it
    shows no smaller bound is possible.
    """

    bound: Optional[int]
    checked_up_to: int
    graded_dims: Tuple[int, ...]
    witness_lower: Optional[PolyVectorField] = None
    witness_certificate: Optional[MembershipCertificate] = None
    predecessor_failure: Optional[Tuple[int, int]] = None  # (candidate, degree)

    @property
    def certified(self) -> bool:
        return self.bound is not None


def artin_rees_certify(
    module: FoliationModule, cap: Optional[int] = None
) -> ArtinReesCertificate:
    if cap is None:
        cap = 2 * module.max_generator_degree() + 2
    pieces = {d: module.graded_piece(d) for d in range(cap + 1)}
    failures: Dict[int, int] = {}
    bound = None
    for candidate in range(1, cap):
        failing = _first_failing_degree(module, pieces, candidate, cap)
        if failing is None:
            bound = candidate
            break
        failures[candidate] = failing
    graded_dims = tuple(pieces[d].dim for d in range(cap + 1))
    if bound is None:
        return ArtinReesCertificate(
            bound=None, checked_up_to=cap, graded_dims=graded_dims
        )
    witness = None
    witness_cert = None
    if bound > 1:
        ideal_times = module.multiply_by_ideal_power(1)
        for field, _coeffs in pieces[bound].witnesses:
            cert = ideal_times.membership(field)
            if not cert.member:
                witness = field
                witness_cert = cert
                break
    predecessor = (bound - 1, failures[bound - 1]) if bound > 1 else None
    return ArtinReesCertificate(
        bound=bound,
        checked_up_to=cap,
        graded_dims=graded_dims,
        witness_lower=witness,
        witness_certificate=witness_cert,
        predecessor_failure=predecessor,
    )


def _first_failing_degree(module, pieces, candidate, cap):
    """First degree d in (candidate, cap] where the degree-d slice is not
    spanned by monomial multiples of the degree-candidate slice."""
    nvars = module.nvars
    base_fields = pieces[candidate].basis_fields(nvars)
    for d in range(candidate + 1, cap + 1):
        piece = pieces[d]
        if piece.dim == 0:
            continue
        term_basis = hom_term_basis(nvars, d)
        index = {t: i for i, t in enumerate(term_basis)}
        ech = TrackedEchelon(len(term_basis))
        for v in base_fields:
            for m in monomials_of_degree(nvars, d - candidate):
                shifted = v * Polynomial.monomial(nvars, m)
                ech.insert(field_to_hom_vector(shifted, d, index))
        for row in piece.echelon.rows:
            if not ech.contains(row):
                return d
    return None
