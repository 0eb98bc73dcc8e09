"""Order-by-order construction of a flat Levi connection at the origin.

Given an involutive module F of vector fields vanishing at the origin,
this module builds, degree by degree, a linear map s from the semisimple
quotient of the isotropy algebra into jets of members of F, together
with an Euler-like field E (linear part exactly the Euler field), such
that up to a requested order k:

* linearity: [s(xi), E] has vanishing order >= k, and
* flatness:  [s(xi), s(zeta)] - s([xi, zeta]) has vanishing order >= k.

The starting connection realizes a Levi section of the linear quotient
by actual members and is automatically flat and linear to order 2.  One
improvement step goes from order k to k+1: the degree-k failure of
linearity is a 1-cocycle valued in the quotient of degree-k homogeneous
fields by the degree-k slice of F; a primitive found by the coboundary
solver corrects E, and the leftover bracket defect, which now lies in
the degree-k slice of F, is matched by an explicit member and absorbed
into s with the exact factor 1/(k-1).  That linearity at order k+1
forces flatness at order k+1 is a theorem; it is nevertheless verified
exactly at every step and a failure raises InternalCheckError.

All jets are eagerly truncated at a fixed order; alongside the jets the
connection keeps exact, untruncated members of F representing each
image, which is what makes membership and isotropy-class computations
exact at any stage.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InputRejected, InternalCheckError, PreconditionError
from .holonomy import IsotropyData, isotropy_algebra
from .liealg import (
    LieAlgebra,
    Representation,
    Subspace,
    ce_solve,
    levi_subalgebra,
)
from .linalg import TrackedEchelon, mat_vec, nullspace, solve_linear
from .modalg import (
    FoliationModule,
    field_to_hom_vector,
    field_to_terms,
    hom_term_basis,
    terms_to_field,
)
from .poly import Polynomial, monomials_up_to
from .vecfield import PolyVectorField, euler_field

ZERO = Fraction(0)


@dataclass(frozen=True)
class JetField:
    """A polynomial field trusted modulo components of order > order."""

    field: PolyVectorField
    order: int

    def __post_init__(self):
        if self.field.total_degree() > self.order:
            raise PreconditionError("jet carries terms beyond its order")


def jet(field: PolyVectorField, order: int) -> JetField:
    return JetField(field.truncate(order), order)


@dataclass(frozen=True)
class StepRecord:
    """What one improvement step did, for reporting."""

    order_reached: int
    defect_space_dim: int
    defect_was_zero: bool
    euler_correction_degree: Optional[int]
    implication_verified: bool  # linearity at k+1 forced flatness at k+1


@dataclass(frozen=True)
class LeviConnection:
    """Levi section into jets of members, with its Euler-like field.

    ``images[t]`` is the jet of ``exact_images[t]``, an exact member of
    the module representing s of the t-th semisimple basis vector; the
    linearity and flatness defects have vanishing order at least
    ``certified_order``.
    """

    isotropy: IsotropyData
    semisimple: LieAlgebra
    images: Tuple[JetField, ...]
    exact_images: Tuple[PolyVectorField, ...]
    euler: JetField
    certified_order: int
    truncation_order: int
    steps: Tuple[StepRecord, ...] = ()

    def linearity_defect(self, t: int) -> PolyVectorField:
        return self.images[t].field.lie_bracket(self.euler.field).truncate(
            self.truncation_order
        )

    def flatness_defect(self, a: int, b: int) -> PolyVectorField:
        value = self.images[a].field.lie_bracket(self.images[b].field)
        target = self.semisimple.bracket(
            _unit(self.semisimple.dim, a), _unit(self.semisimple.dim, b)
        )
        for k, c in enumerate(target):
            if c != 0:
                value = value - self.images[k].field * c
        return value.truncate(self.truncation_order)


def _unit(dim: int, index: int):
    return tuple(Fraction(1) if i == index else ZERO for i in range(dim))


def _check_order(field: PolyVectorField, order: int, what: str):
    if not field.is_zero and field.vanishing_order() < order:
        raise InternalCheckError(
            f"{what} has vanishing order {field.vanishing_order()}, "
            f"expected at least {order}"
        )


def initial_connection(
    module: FoliationModule, truncation_order: int
) -> LeviConnection:
    """Order-2 connection from a Levi section of the linear quotient.

    The Levi decomposition of the linear quotient gives a bracket-
    preserving section z of its projection to the semisimple quotient;
    composing with the coordinate lift into the isotropy algebra and
    choosing generator-combination representatives realizes z by exact
    members.  With the exact Euler field this pair is flat and linear to
    order 2 (verified)."""
    if truncation_order < 2:
        raise PreconditionError("truncation order must be at least 2")
    iso = isotropy_algebra(module)
    ss = iso.ss_data.algebra
    euler = jet(euler_field(module.nvars), truncation_order)
    if ss.dim == 0:
        return LeviConnection(
            isotropy=iso,
            semisimple=ss,
            images=(),
            exact_images=(),
            euler=euler,
            certified_order=2,
            truncation_order=truncation_order,
        )
    levi = levi_subalgebra(iso.lin_data.algebra)
    # identify the semisimple quotient with the quotient of the linear
    # quotient by its radical, through the verified commuting triangle
    columns = levi.section
    m = ss.dim
    if levi.quotient.dim != m:
        raise InternalCheckError(
            "Levi quotient of the linear part has unexpected dimension"
        )
    matrix_rows = [
        tuple(
            sum(
                (iso.lin_to_ss[r][i] * columns[t][i] for i in range(len(columns[t]))),
                ZERO,
            )
            for t in range(m)
        )
        for r in range(m)
    ]
    z_columns = []
    for t in range(m):
        alpha = solve_linear(matrix_rows, _unit(m, t))
        if alpha is None:
            raise InternalCheckError(
                "Levi subalgebra of the linear quotient does not split the "
                "semisimple projection"
            )
        z_t = [ZERO] * iso.lin_data.algebra.dim
        for s_idx, c in enumerate(alpha):
            if c != 0:
                for i in range(len(z_t)):
                    z_t[i] += c * columns[s_idx][i]
        z_columns.append(tuple(z_t))
    exact_images = []
    for t in range(m):
        lifted = iso.lin_data.lift(z_columns[t])
        exact_images.append(iso.representative_of_class(lifted))
    conn = LeviConnection(
        isotropy=iso,
        semisimple=ss,
        images=tuple(jet(x, truncation_order) for x in exact_images),
        exact_images=tuple(exact_images),
        euler=euler,
        certified_order=2,
        truncation_order=truncation_order,
    )
    for t in range(m):
        _check_order(conn.linearity_defect(t), 2, "initial linearity defect")
    for a in range(m):
        for b in range(a + 1, m):
            _check_order(conn.flatness_defect(a, b), 2, "initial flatness defect")
    return conn


def improve_step(conn: LeviConnection, module: FoliationModule) -> LeviConnection:
    """Raise the certified order from k to k+1 (see module docstring)."""
    k = conn.certified_order
    if k < 2:
        raise PreconditionError("improvement starts from order 2")
    if k >= conn.truncation_order:
        raise PreconditionError(
            "truncation order too small to certify a higher order"
        )
    ss = conn.semisimple
    if ss.dim == 0:
        return replace(conn, certified_order=k + 1)
    nvars = module.nvars
    term_basis = hom_term_basis(nvars, k)
    index = {t: i for i, t in enumerate(term_basis)}
    slice_k = module.graded_piece(k)
    pivotset = set(slice_k.echelon.pivots)
    complement = [j for j in range(len(term_basis)) if j not in pivotset]
    dim_v = len(complement)

    def to_quotient(field: PolyVectorField):
        v = field_to_hom_vector(field, k, index)
        residual, _ = slice_k.echelon.reduce(v)
        return tuple(residual[j] for j in complement)

    def quotient_lift(coords) -> PolyVectorField:
        terms = {}
        for b, c in enumerate(coords):
            if c != 0:
                terms[term_basis[complement[b]]] = c
        if not terms:
            return PolyVectorField.zero(nvars)
        return terms_to_field(nvars, terms)

    linear_parts = [
        img.field.homogeneous_part(1) for img in conn.images
    ]

    defect = []
    for t in range(ss.dim):
        bracket = conn.images[t].field.lie_bracket(conn.euler.field)
        _check_order(bracket.truncate(conn.truncation_order), k, "linearity defect")
        defect.append(to_quotient(bracket.homogeneous_part(k)))

    defect_zero = all(all(x == 0 for x in v) for v in defect)
    if dim_v == 0:
        epsilon = PolyVectorField.zero(nvars)
    else:
        matrices = []
        for t in range(ss.dim):
            cols = [
                to_quotient(
                    linear_parts[t].lie_bracket(
                        quotient_lift(_unit(dim_v, b))
                    )
                )
                for b in range(dim_v)
            ]
            matrices.append(
                tuple(
                    tuple(cols[b][r] for b in range(dim_v)) for r in range(dim_v)
                )
            )
        try:
            rep = Representation(ss, dim_v, matrices)
        except ValueError as exc:
            raise InternalCheckError(
                f"induced action on the defect space is not a representation: {exc}"
            ) from exc
        try:
            result = ce_solve(rep, 1, tuple(defect))
        except PreconditionError as exc:
            raise InternalCheckError(
                f"linearity defect is not a cocycle: {exc}"
            ) from exc
        if not result.solved:
            raise InternalCheckError(
                "linearity defect class does not vanish; this contradicts the "
                "Whitehead lemma for the semisimple quotient"
            )
        epsilon = quotient_lift(result.primitive)

    new_euler_exact = conn.euler.field - epsilon
    new_euler = jet(new_euler_exact, conn.truncation_order)

    new_exact = []
    for t in range(ss.dim):
        bracket = conn.images[t].field.lie_bracket(new_euler.field)
        bracket = bracket.truncate(conn.truncation_order)
        _check_order(bracket, k, "corrected linearity defect")
        part = bracket.homogeneous_part(k)
        if part.is_zero:
            sigma = PolyVectorField.zero(nvars)
        else:
            coords = slice_k.express(part)
            if coords is None:
                raise InternalCheckError(
                    "corrected defect escaped the degree slice of the module"
                )
            sigma = PolyVectorField.zero(nvars)
            for c, (witness_field, _w) in zip(coords, slice_k.witnesses):
                if c != 0:
                    sigma = sigma + witness_field * c
            _check_order(sigma, k, "image correction")
        # sign: [E, sigma] = (k-1) sigma + higher order, so adding
        # sigma/(k-1) to the image cancels the residual bracket defect
        new_exact.append(conn.exact_images[t] + sigma * Fraction(1, k - 1))

    candidate = LeviConnection(
        isotropy=conn.isotropy,
        semisimple=ss,
        images=tuple(jet(x, conn.truncation_order) for x in new_exact),
        exact_images=tuple(new_exact),
        euler=new_euler,
        certified_order=k + 1,
        truncation_order=conn.truncation_order,
        steps=conn.steps,
    )
    for t in range(ss.dim):
        diff = (candidate.images[t].field - conn.images[t].field).truncate(
            conn.truncation_order
        )
        _check_order(diff, k, "order-k agreement of improved images")
        _check_order(candidate.linearity_defect(t), k + 1, "improved linearity")
    implication_holds = True
    for a in range(ss.dim):
        for b in range(a + 1, ss.dim):
            _check_order(
                candidate.flatness_defect(a, b), k + 1, "implied flatness"
            )
    record = StepRecord(
        order_reached=k + 1,
        defect_space_dim=dim_v,
        defect_was_zero=defect_zero,
        euler_correction_degree=None if epsilon.is_zero else k,
        implication_verified=implication_holds,
    )
    return replace(candidate, steps=conn.steps + (record,))


def linearize(
    module: FoliationModule,
    order: int,
    truncation_order: Optional[int] = None,
) -> LeviConnection:
    """Flat-and-linear-to-the-given-order connection, fully verified.

    Folds the initial connection through improvement steps; afterwards
    every image is re-certified to be a member of the module and the
    per-degree defect report is recomputed from scratch.
    """
    if order < 2:
        raise PreconditionError("target order must be at least 2")
    if truncation_order is None:
        truncation_order = order
    if truncation_order < order:
        raise PreconditionError("truncation order below the target order")
    conn = initial_connection(module, truncation_order)
    while conn.certified_order < order:
        try:
            conn = improve_step(conn, module)
        except InternalCheckError as exc:
            raise InternalCheckError(
                f"order {conn.certified_order} -> {conn.certified_order + 1}: {exc}"
            ) from exc
    for x in conn.exact_images:
        if not module.membership(x).member:
            raise InternalCheckError("connection image left the module")
    report = verify_connection(conn, module, order)
    if not report.all_zero_below(order):
        raise InternalCheckError("final defect report contradicts certification")
    return conn


@dataclass(frozen=True)
class DefectReport:
    """Exact dimensions of the per-degree defect spaces of a connection."""

    rows: Tuple[Tuple[int, int, int], ...]  # (degree, linearity dim, flatness dim)
    capped_at: int

    def all_zero_below(self, order: int) -> bool:
        return all(
            lin == 0 and flat == 0
            for degree, lin, flat in self.rows
            if degree < order
        )


def verify_connection(
    conn: LeviConnection, module: FoliationModule, cap: int
) -> DefectReport:
    """Per-degree spans of all linearity and flatness defects.

    Degrees beyond the jet truncation order cannot be judged from the
    stored jets, so the report stops there."""
    effective = min(cap, conn.truncation_order)
    nvars = module.nvars
    lin_fields = [conn.linearity_defect(t) for t in range(conn.semisimple.dim)]
    flat_fields = [
        conn.flatness_defect(a, b)
        for a in range(conn.semisimple.dim)
        for b in range(a + 1, conn.semisimple.dim)
    ]
    rows = []
    for d in range(1, effective + 1):
        term_basis = hom_term_basis(nvars, d)
        index = {t: i for i, t in enumerate(term_basis)}
        lin_ech = TrackedEchelon(len(term_basis))
        for f in lin_fields:
            lin_ech.insert(field_to_hom_vector(f, d, index))
        flat_ech = TrackedEchelon(len(term_basis))
        for f in flat_fields:
            flat_ech.insert(field_to_hom_vector(f, d, index))
        rows.append((d, lin_ech.dim, flat_ech.dim))
    return DefectReport(rows=tuple(rows), capped_at=effective)


@dataclass(frozen=True)
class SectionCheck:
    """Isotropy-level view of a connection: the class of each image and
    whether the classes form a Lie algebra section of the projection to
    the semisimple quotient."""

    classes: Tuple[Tuple[Fraction, ...], ...]
    splits_projection: bool
    preserves_brackets: bool

    @property
    def is_section(self) -> bool:
        return self.splits_projection and self.preserves_brackets


def induced_isotropy_section(conn: LeviConnection) -> SectionCheck:
    iso = conn.isotropy
    ss = conn.semisimple
    classes = [iso.class_of_member(x) for x in conn.exact_images]
    splits = all(
        iso.ss_data.project(classes[t]) == _unit(ss.dim, t) for t in range(ss.dim)
    )
    preserves = True
    for a in range(ss.dim):
        for b in range(ss.dim):
            target = ss.bracket(_unit(ss.dim, a), _unit(ss.dim, b))
            expected = [ZERO] * iso.algebra.dim
            for kk, c in enumerate(target):
                if c != 0:
                    for i in range(iso.algebra.dim):
                        expected[i] += c * classes[kk][i]
            if iso.algebra.bracket(classes[a], classes[b]) != tuple(expected):
                preserves = False
    return SectionCheck(
        classes=tuple(classes),
        splits_projection=splits,
        preserves_brackets=preserves,
    )


@dataclass(frozen=True)
class RadicalDecomposition:
    """Splitting of the module's jet into the Levi image and the kernel
    of the projection to the semisimple quotient."""

    radical_generators: Tuple[PolyVectorField, ...]
    graded_rows: Tuple[Tuple[int, int, int, int, bool], ...]
    # (degree, module slice dim, section span slice dim, radical slice dim, additive)
    truncated_rows: Tuple[Tuple[int, int, int, int, bool], ...]
    invariance_verified: bool
    class_level_split: bool
    degraded: bool

    @property
    def all_additive(self) -> bool:
        return all(r[4] for r in self.graded_rows) and all(
            r[4] for r in self.truncated_rows
        )


def radical_foliation(
    module: FoliationModule, conn: LeviConnection, cap: int
) -> RadicalDecomposition:
    """Kernel-of-projection module and the per-degree splitting report.

    The kernel of the class map to the semisimple quotient is generated,
    exactly, by representatives of a radical basis together with the
    ideal multiples of the original generators.  Bracket invariance of
    the kernel under the connection images is checked by exact
    membership.  The per-degree additivity tables compare graded and
    truncated dimensions of the three spaces; with a connection
    certified at least to ``cap`` a failure is a contradiction and
    raises, below that the report is only marked degraded.
    """
    iso = conn.isotropy
    nvars = module.nvars
    degraded = conn.certified_order < cap
    rad_fields = tuple(
        iso.representative_of_class(row) for row in iso.radical.rows
    )
    kernel_gens = list(rad_fields) + list(
        module.multiply_by_ideal_power(1).generators
    )
    kernel = FoliationModule(kernel_gens)

    # class-level split: classes of images complement the radical
    section_classes = [iso.class_of_member(x) for x in conn.exact_images]
    ech = TrackedEchelon(iso.algebra.dim)
    for r in iso.radical.rows:
        ech.insert(r)
    split_ok = all(ech.insert(c) for c in section_classes) and ech.dim == iso.algebra.dim
    if not split_ok:
        raise InternalCheckError(
            "image classes do not complement the radical in the isotropy algebra"
        )

    invariance = True
    for t in range(conn.semisimple.dim):
        for r in kernel.generators:
            bracket = conn.exact_images[t].lie_bracket(r)
            if bracket.is_zero:
                continue
            if not kernel.membership(bracket).member:
                invariance = False
    if not invariance and not degraded:
        raise InternalCheckError("kernel module is not invariant under the images")

    graded_rows = []
    truncated_rows = []
    for d in range(1, cap + 1):
        dim_module = module.graded_piece(d).dim
        dim_kernel = kernel.graded_piece(d).dim
        dim_section = _span_graded_dim(conn.exact_images, d, nvars)
        graded_rows.append(
            (d, dim_module, dim_section, dim_kernel,
             dim_module == dim_section + dim_kernel)
        )
        t_module, _, _ = module.truncated_span(d)
        t_kernel, _, _ = kernel.truncated_span(d)
        t_section = _span_truncated(conn.exact_images, d, nvars)
        joint = TrackedEchelon(t_module.width)
        for row in t_kernel.rows:
            joint.insert(row)
        for row in t_section.rows:
            joint.insert(row)
        additive = (
            joint.dim == t_kernel.dim + t_section.dim
            and joint.dim == t_module.dim
        )
        truncated_rows.append(
            (d, t_module.dim, t_section.dim, t_kernel.dim, additive)
        )
    failures = [r for r in graded_rows + truncated_rows if not r[4]]
    if failures and not degraded:
        raise InternalCheckError(
            f"jet splitting fails at degrees {sorted({r[0] for r in failures})}"
        )
    return RadicalDecomposition(
        radical_generators=rad_fields,
        graded_rows=tuple(graded_rows),
        truncated_rows=tuple(truncated_rows),
        invariance_verified=invariance,
        class_level_split=split_ok,
        degraded=degraded,
    )


def _span_graded_dim(fields: Sequence[PolyVectorField], degree: int, nvars: int):
    """dim of degree-d parts of span elements vanishing to order d."""
    if not fields:
        return 0
    rows = []
    for e in range(1, degree):
        term_basis = hom_term_basis(nvars, e)
        index = {t: i for i, t in enumerate(term_basis)}
        for pos_mono, i in index.items():
            rows.append(
                tuple(
                    field_to_hom_vector(f, e, index)[i] for f in fields
                )
            )
    solutions = nullspace(rows, len(fields)) if rows else [
        _unit(len(fields), t) for t in range(len(fields))
    ]
    term_basis = hom_term_basis(nvars, degree)
    index = {t: i for i, t in enumerate(term_basis)}
    ech = TrackedEchelon(len(term_basis))
    for sol in solutions:
        combined = PolyVectorField.zero(nvars)
        for c, f in zip(sol, fields):
            if c != 0:
                combined = combined + f * c
        ech.insert(field_to_hom_vector(combined, degree, index))
    return ech.dim


def _span_truncated(fields: Sequence[PolyVectorField], cap: int, nvars: int):
    term_basis = [
        (pos, expt)
        for pos in range(nvars)
        for expt in monomials_up_to(nvars, cap)
    ]
    index = {t: i for i, t in enumerate(term_basis)}
    ech = TrackedEchelon(len(term_basis))
    for f in fields:
        v = [ZERO] * len(term_basis)
        for term, coeff in field_to_terms(f.truncate(cap)).items():
            v[index[term]] = coeff
        ech.insert(v)
    return ech


def semidirect_product(
    linear_action: Sequence[PolyVectorField],
    radical_generators: Sequence[PolyVectorField],
) -> FoliationModule:
    """Module generated by a bracket-closed family of linear fields
    acting on an invariant module meeting its span only in zero.

    Checks, in order: every action field is homogeneous linear; the span
    is closed under brackets; each [action, radical generator] is a
    member of the radical module; the rational span of the action meets
    the radical module only in zero.  Violations name the offending pair.
    The assembled module is verified involutive before being returned.
    """
    linear_action = list(linear_action)
    radical_generators = list(radical_generators)
    if not linear_action:
        return FoliationModule(radical_generators)
    nvars = linear_action[0].nvars
    for i, a in enumerate(linear_action):
        if not a.is_homogeneous(1):
            raise InputRejected(
                f"action field {i} ({a.render()}) is not homogeneous linear"
            )
    term_basis = hom_term_basis(nvars, 1)
    index = {t: i for i, t in enumerate(term_basis)}
    span = TrackedEchelon(len(term_basis))
    for a in linear_action:
        span.insert(field_to_hom_vector(a, 1, index))
    for i in range(len(linear_action)):
        for j in range(i + 1, len(linear_action)):
            bracket = linear_action[i].lie_bracket(linear_action[j])
            if not span.contains(field_to_hom_vector(bracket, 1, index)):
                raise InputRejected(
                    f"action is not bracket-closed: fields {i} and {j}"
                )
    if not radical_generators:
        return FoliationModule(linear_action)
    radical = FoliationModule(radical_generators)
    for i, a in enumerate(linear_action):
        for j, r in enumerate(radical.generators):
            bracket = a.lie_bracket(r)
            if bracket.is_zero:
                continue
            if not radical.membership(bracket).member:
                raise InputRejected(
                    f"invariance fails: bracket of action field {i} with "
                    f"radical generator {j} ({bracket.render()}) is not a member"
                )
    # trivial intersection of the rational span with the radical module:
    # a combination is a member iff its normal form vanishes, and the
    # normal form is linear in the combination coefficients
    reduced = [radical.normal_form(a) for a in linear_action]
    all_terms = sorted(
        {t for r in reduced for t in field_to_terms(r)}, key=lambda t: t, reverse=True
    )
    tindex = {t: i for i, t in enumerate(all_terms)}
    rows = [
        tuple(
            field_to_terms(reduced[i]).get(t, ZERO) for i in range(len(reduced))
        )
        for t in all_terms
    ]
    kernel = nullspace(rows, len(reduced))
    if kernel:
        alpha = kernel[0]
        witness = PolyVectorField.zero(nvars)
        for c, a in zip(alpha, linear_action):
            if c != 0:
                witness = witness + a * c
        raise InputRejected(
            f"action span meets the radical module: {witness.render()} is a member"
        )
    combined = FoliationModule(list(linear_action) + list(radical.generators))
    verdict = combined.check_involutive()
    if not verdict.closed:
        i, j, bracket, _cert = verdict.witness
        raise InputRejected(
            f"combined module is not involutive: generators {i} and {j} "
            f"bracket to {bracket.render()} outside the module"
        )
    return combined
