"""Finitely generated modules of polynomial vector fields.

A ``FoliationModule`` is the submodule of the rank-n free module over
Q[x_1..x_n] spanned by a finite list of vector fields, all required to
vanish at the origin.  Exact membership is decided through a Groebner
basis of the submodule; the monomial order on free-module terms is
position-over-term with grevlex inside each position, and completion is
plain Buchberger with the chain criterion.  Every basis element carries
its expression in terms of the original generators, so membership
queries return certificates that are re-verified by exact arithmetic.

Besides membership the module knows its graded data with respect to
vanishing order at the origin: for each degree d,

* the span of degree-d homogeneous parts of arbitrary elements, and
* the span of degree-d parts of elements whose lower parts vanish
  (i.e. elements of the module that vanish to order d),

the latter with explicit witnesses inside the module.  For modules with
homogeneous generators the second space is just the degree-d slice of
the module; in general it is computed by a bounded exact linear solve
(coefficient parts above degree d-1 provably cannot matter).

A degree-truncated dense linear-algebra membership oracle is included
as an independent cross-check of the Groebner route; the two must agree
whenever the dense coefficient cap is at least the certificate degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, InputRejected, InternalCheckError
from .linalg import TrackedEchelon
from .poly import (
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_key,
    monomial_lcm,
    monomial_mul,
    monomials_of_degree,
    monomials_up_to,
)
from .vecfield import PolyVectorField

ModTerm = Tuple[int, Tuple[int, ...]]  # (component position, exponent tuple)
Terms = Dict[ModTerm, Fraction]


def modterm_key(term: ModTerm):
    """Position-over-term order: earlier positions dominate, grevlex inside."""
    pos, expt = term
    return (-pos, monomial_key(expt))


def field_to_terms(field: PolyVectorField) -> Terms:
    out: Terms = {}
    for pos, comp in enumerate(field.components):
        for expt, coeff in comp.terms.items():
            out[(pos, expt)] = coeff
    return out


def terms_to_field(nvars: int, terms: Terms) -> PolyVectorField:
    comps: List[Dict] = [dict() for _ in range(nvars)]
    for (pos, expt), coeff in terms.items():
        comps[pos][expt] = coeff
    return PolyVectorField([Polynomial(nvars, c) for c in comps])


def _leading(terms: Terms) -> ModTerm:
    return max(terms, key=modterm_key)


def _scale_terms(terms: Terms, c: Fraction) -> Terms:
    return {t: v * c for t, v in terms.items()}


def _shift_terms(terms: Terms, mono, coeff: Fraction) -> Terms:
    return {
        (pos, monomial_mul(expt, mono)): v * coeff for (pos, expt), v in terms.items()
    }


def _sub_into(target: Terms, other: Terms):
    for t, v in other.items():
        new = target.get(t, Fraction(0)) - v
        if new == 0:
            target.pop(t, None)
        else:
            target[t] = new


@dataclass
class _BasisElement:
    terms: Terms
    lead: ModTerm
    combo: Tuple[Polynomial, ...]  # expression in the module generators


def _normalize(terms: Terms, combo) -> _BasisElement:
    lead = _leading(terms)
    lc = terms[lead]
    inv = Fraction(1) / lc
    return _BasisElement(
        terms=_scale_terms(terms, inv),
        lead=lead,
        combo=tuple(p * inv for p in combo),
    )


def _reduce_full(terms: Terms, basis: Sequence[_BasisElement]):
    """Divide by the basis; return (remainder, quotient term dicts)."""
    work = dict(terms)
    remainder: Terms = {}
    quotients: List[Dict] = [dict() for _ in basis]
    while work:
        t = max(work, key=modterm_key)
        c = work.pop(t)
        pos, expt = t
        for idx, elem in enumerate(basis):
            lpos, lexpt = elem.lead
            if lpos == pos and monomial_divides(lexpt, expt):
                shift = monomial_div(expt, lexpt)
                q = quotients[idx]
                q[shift] = q.get(shift, Fraction(0)) + c
                work[t] = c  # restore, then subtract the full multiple
                _sub_into(work, _shift_terms(elem.terms, shift, c))
                break
        else:
            remainder[t] = c
    return remainder, quotients


def _quotient_poly(nvars: int, qdict: Dict) -> Polynomial:
    return Polynomial(nvars, dict(qdict))


def _buchberger(gens: Sequence[Terms], nvars: int) -> List[_BasisElement]:
    ngens = len(gens)
    unit = [Polynomial.zero(nvars)] * ngens
    basis: List[_BasisElement] = []
    for j, terms in enumerate(gens):
        if not terms:
            continue
        combo = list(unit)
        combo[j] = Polynomial.constant(nvars, 1)
        basis.append(_normalize(dict(terms), combo))

    pending = {
        (i, k)
        for i in range(len(basis))
        for k in range(i + 1, len(basis))
        if basis[i].lead[0] == basis[k].lead[0]
    }
    processed = set()

    def lcm_degree(pair):
        i, k = pair
        return sum(monomial_lcm(basis[i].lead[1], basis[k].lead[1]))

    while pending:
        pair = min(pending, key=lambda p: (lcm_degree(p), p))
        pending.discard(pair)
        processed.add(pair)
        i, k = pair
        gamma = monomial_lcm(basis[i].lead[1], basis[k].lead[1])
        # chain criterion: a third element dividing the lcm whose pairs with
        # both ends were already treated makes this S-vector redundant
        skip = False
        for m in range(len(basis)):
            if m in pair:
                continue
            if basis[m].lead[0] != basis[i].lead[0]:
                continue
            if not monomial_divides(basis[m].lead[1], gamma):
                continue
            pim = (min(i, m), max(i, m))
            pkm = (min(k, m), max(k, m))
            if pim in processed and pkm in processed:
                skip = True
                break
        if skip:
            continue
        si = monomial_div(gamma, basis[i].lead[1])
        sk = monomial_div(gamma, basis[k].lead[1])
        s_terms = _shift_terms(basis[i].terms, si, Fraction(1))
        _sub_into(s_terms, _shift_terms(basis[k].terms, sk, Fraction(1)))
        s_combo = [
            a * Polynomial.monomial(nvars, si) - b * Polynomial.monomial(nvars, sk)
            for a, b in zip(basis[i].combo, basis[k].combo)
        ]
        remainder, quotients = _reduce_full(s_terms, basis)
        if not remainder:
            continue
        combo = list(s_combo)
        for idx, q in enumerate(quotients):
            if not q:
                continue
            qp = _quotient_poly(nvars, q)
            combo = [c - qp * bc for c, bc in zip(combo, basis[idx].combo)]
        new_index = len(basis)
        basis.append(_normalize(remainder, combo))
        for t in range(new_index):
            if basis[t].lead[0] == basis[new_index].lead[0]:
                pending.add((t, new_index))

    # inter-reduce to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for idx in range(len(basis)):
            elem = basis[idx]
            if elem is None:
                continue
            others = [b for t, b in enumerate(basis) if t != idx and b is not None]
            remainder, quotients = _reduce_full(elem.terms, others)
            if remainder == elem.terms:
                continue
            changed = True
            if not remainder:
                basis[idx] = None
                continue
            combo = list(elem.combo)
            for other, q in zip(others, quotients):
                if not q:
                    continue
                qp = _quotient_poly(nvars, q)
                combo = [c - qp * oc for c, oc in zip(combo, other.combo)]
            basis[idx] = _normalize(remainder, combo)
    reduced = [b for b in basis if b is not None]
    reduced.sort(key=lambda b: modterm_key(b.lead), reverse=True)
    return reduced


@dataclass(frozen=True)
class MembershipCertificate:
    """Constructive answer to a module membership query.

    When ``member`` is true, ``coefficients`` lists one polynomial per
    module generator with query = sum coefficients[j] * generator[j],
    an identity re-verified exactly before the certificate is returned.
    Otherwise ``reduction_remainder`` is the nonzero normal form of the
    query against the module's Groebner basis.
    """

    member: bool
    coefficients: Optional[Tuple[Polynomial, ...]] = None
    reduction_remainder: Optional[PolyVectorField] = None


@dataclass(frozen=True)
class InvolutivityVerdict:
    closed: bool
    witness: Optional[Tuple[int, int, PolyVectorField, MembershipCertificate]] = None


def hom_term_basis(nvars: int, degree: int) -> List[ModTerm]:
    """Coordinate order for homogeneous degree-d fields: position-major."""
    return [
        (pos, expt)
        for pos in range(nvars)
        for expt in monomials_of_degree(nvars, degree)
    ]


def field_to_hom_vector(field: PolyVectorField, degree: int, index: Dict[ModTerm, int]):
    v = [Fraction(0)] * len(index)
    for pos, comp in enumerate(field.components):
        for expt, coeff in comp.terms.items():
            if sum(expt) == degree:
                v[index[(pos, expt)]] = coeff
    return tuple(v)


@dataclass
class GradedPiece:
    """Degree-d slice of the vanishing-order filtration of a module.

    ``echelon`` spans the space of degree-d homogeneous parts of module
    elements vanishing to order d; ``witnesses[i]`` is an exact module
    element (with its generator coefficients) whose degree-d part equals
    basis row i.
    """

    degree: int
    term_basis: List[ModTerm]
    index: Dict[ModTerm, int]
    echelon: TrackedEchelon
    witnesses: List[Tuple[PolyVectorField, Tuple[Polynomial, ...]]]

    @property
    def dim(self) -> int:
        return self.echelon.dim

    def basis_fields(self, nvars: int) -> List[PolyVectorField]:
        out = []
        for row in self.echelon.rows:
            terms = {
                self.term_basis[j]: c for j, c in enumerate(row) if c != 0
            }
            out.append(terms_to_field(nvars, terms))
        return out

    def express(self, field: PolyVectorField) -> Optional[List[Fraction]]:
        """Coefficients over the basis rows, or None if not in the span."""
        v = field_to_hom_vector(field, self.degree, self.index)
        residual, _ = self.echelon.reduce(v)
        if any(x != 0 for x in residual):
            return None
        return [v[p] for p in self.echelon.pivots]


class FoliationModule:
    """Module of vector fields vanishing at the origin, with cached data.

    Logically immutable: generators are normalized once at construction
    (content-free, leading coefficient 1 under the module term order) and
    never change.  The Groebner basis and graded slices are memoized
    lazily; recomputation is deterministic, so a benign race at worst
    recomputes an identical value.
    """

    def __init__(self, generators: Sequence[PolyVectorField]):
        gens = [g for g in generators if not g.is_zero]
        if not gens:
            raise InputRejected("a foliation module needs a nonzero generator")
        nvars = gens[0].nvars
        for g in gens:
            if g.nvars != nvars:
                raise DimensionMismatch("generators disagree on variable count")
            if not g.vanishes_at_origin():
                raise InputRejected(
                    f"generator {g.render()} does not vanish at the origin"
                )
        normalized = []
        for g in gens:
            terms = field_to_terms(g)
            lc = terms[_leading(terms)]
            normalized.append(g * (Fraction(1) / lc))
        self.nvars = nvars
        self.generators: Tuple[PolyVectorField, ...] = tuple(normalized)
        self._gb: Optional[List[_BasisElement]] = None
        self._graded: Dict[int, GradedPiece] = {}
        self._truncated: Dict[int, Tuple[TrackedEchelon, List[ModTerm], Dict]] = {}
        self._isotropy = None  # filled by singfol.holonomy

    # -- basic data ----------------------------------------------------

    def max_generator_degree(self) -> int:
        return max(g.total_degree() for g in self.generators)

    def generators_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def groebner_basis(self) -> List[_BasisElement]:
        if self._gb is None:
            gb = _buchberger([field_to_terms(g) for g in self.generators], self.nvars)
            for elem in gb:
                rebuilt: Terms = {}
                for c, g in zip(elem.combo, self.generators):
                    for expt, coeff in c.terms.items():
                        _sub_into(
                            rebuilt, _shift_terms(field_to_terms(g), expt, -coeff)
                        )
                if rebuilt != elem.terms:
                    raise InternalCheckError(
                        "Groebner element fails to match its generator combination"
                    )
            self._gb = gb
        return self._gb

    # -- membership -----------------------------------------------------

    def normal_form(self, field: PolyVectorField) -> PolyVectorField:
        """Unique remainder of the field modulo the module."""
        if field.nvars != self.nvars:
            raise DimensionMismatch("field over wrong variable count")
        remainder, _ = _reduce_full(field_to_terms(field), self.groebner_basis())
        return terms_to_field(self.nvars, remainder)

    def membership(self, field: PolyVectorField) -> MembershipCertificate:
        if field.nvars != self.nvars:
            raise DimensionMismatch("field over wrong variable count")
        gb = self.groebner_basis()
        remainder, quotients = _reduce_full(field_to_terms(field), gb)
        if remainder:
            return MembershipCertificate(
                member=False,
                reduction_remainder=terms_to_field(self.nvars, remainder),
            )
        coeffs = [Polynomial.zero(self.nvars)] * len(self.generators)
        for elem, q in zip(gb, quotients):
            if not q:
                continue
            qp = _quotient_poly(self.nvars, q)
            coeffs = [c + qp * ec for c, ec in zip(coeffs, elem.combo)]
        recombined = PolyVectorField.zero(self.nvars)
        for c, g in zip(coeffs, self.generators):
            recombined = recombined + g * c
        if recombined != field:
            raise InternalCheckError("membership certificate failed re-verification")
        return MembershipCertificate(member=True, coefficients=tuple(coeffs))

    def contains(self, field: PolyVectorField) -> bool:
        return not field_to_terms(self.normal_form(field))

    def same_module(self, other: "FoliationModule") -> bool:
        """Exact module equality via the unique reduced Groebner bases."""
        if self.nvars != other.nvars:
            return False
        mine = [e.terms for e in self.groebner_basis()]
        theirs = [e.terms for e in other.groebner_basis()]
        return mine == theirs

    # -- module constructions -------------------------------------------

    def multiply_by_ideal_power(self, k: int) -> "FoliationModule":
        """Module spanned by (monomial of degree k) * generator products."""
        if k < 0:
            raise InputRejected("ideal power must be non-negative")
        if k == 0:
            return self
        gens = [
            g * Polynomial.monomial(self.nvars, m)
            for g in self.generators
            for m in monomials_of_degree(self.nvars, k)
        ]
        return FoliationModule(gens)

    def check_involutive(self) -> InvolutivityVerdict:
        """Bracket-closedness on generator pairs (sufficient: the bracket
        is a derivation in each module slot)."""
        for i in range(len(self.generators)):
            for j in range(i + 1, len(self.generators)):
                bracket = self.generators[i].lie_bracket(self.generators[j])
                if bracket.is_zero:
                    continue
                cert = self.membership(bracket)
                if not cert.member:
                    return InvolutivityVerdict(
                        closed=False, witness=(i, j, bracket, cert)
                    )
        return InvolutivityVerdict(closed=True)

    # -- graded data -----------------------------------------------------

    def graded_piece(self, degree: int) -> GradedPiece:
        """Degree-d parts of module elements vanishing to order d."""
        if degree < 0:
            raise InputRejected("degree must be non-negative")
        if degree not in self._graded:
            self._graded[degree] = self._compute_graded_piece(degree)
        return self._graded[degree]

    def _compute_graded_piece(self, degree: int) -> GradedPiece:
        term_basis = hom_term_basis(self.nvars, degree)
        index = {t: i for i, t in enumerate(term_basis)}
        ech = TrackedEchelon(len(term_basis))
        inserted: Dict[int, Tuple[PolyVectorField, Tuple[Polynomial, ...]]] = {}
        tag = 0

        def offer(field: PolyVectorField, coeffs: Tuple[Polynomial, ...]):
            nonlocal tag
            v = field_to_hom_vector(field, degree, index)
            if any(x != 0 for x in v):
                inserted[tag] = (field, coeffs)
                ech.insert(v, tag=tag)
                tag += 1

        if self.generators_homogeneous():
            for j, g in enumerate(self.generators):
                d_g = g.total_degree()
                if d_g > degree:
                    continue
                for m in monomials_of_degree(self.nvars, degree - d_g):
                    mono = Polynomial.monomial(self.nvars, m)
                    coeffs = [Polynomial.zero(self.nvars)] * len(self.generators)
                    coeffs[j] = mono
                    offer(g * mono, tuple(coeffs))
        else:
            for coeffs in self._low_order_solutions(degree):
                witness = PolyVectorField.zero(self.nvars)
                for c, g in zip(coeffs, self.generators):
                    witness = witness + g * c
                offer(witness, coeffs)

        witnesses = []
        for combo in ech.combos:
            field = PolyVectorField.zero(self.nvars)
            coeffs = [Polynomial.zero(self.nvars)] * len(self.generators)
            for t, c in combo.items():
                wf, wc = inserted[t]
                field = field + wf * c
                coeffs = [a + b * c for a, b in zip(coeffs, wc)]
            witnesses.append((field, tuple(coeffs)))
        return GradedPiece(degree, term_basis, index, ech, witnesses)

    def _low_order_solutions(self, degree: int):
        """Generator coefficient tuples making the combination vanish to
        the given order.  Coefficient parts of degree >= degree never
        enter the constraints (generators vanish at the origin) and are
        irrelevant to the degree-d output, so the solve is exact."""
        cap = max(degree - 1, 0)
        unknowns = [
            (j, m)
            for j in range(len(self.generators))
            for m in monomials_up_to(self.nvars, cap)
        ]
        col = {u: i for i, u in enumerate(unknowns)}
        rows: Dict[ModTerm, List[Fraction]] = {}
        for (j, m), ci in col.items():
            shifted = _shift_terms(field_to_terms(self.generators[j]), m, Fraction(1))
            for term, coeff in shifted.items():
                if sum(term[1]) < degree:
                    row = rows.setdefault(term, [Fraction(0)] * len(unknowns))
                    row[ci] += coeff
        from .linalg import nullspace

        solutions = nullspace(list(rows.values()), len(unknowns))
        out = []
        for sol in solutions:
            coeffs = [Polynomial.zero(self.nvars)] * len(self.generators)
            for (j, m), ci in col.items():
                if sol[ci] != 0:
                    coeffs[j] = coeffs[j] + Polynomial.monomial(self.nvars, m, sol[ci])
            out.append(tuple(coeffs))
        return out

    def graded_truncation_basis(self, degree: int):
        """Two echelonized bases at homogeneous degree d:

        first, the span of degree-d homogeneous parts of arbitrary module
        elements; second, the span of degree-d parts of module elements
        whose parts below degree d vanish.  The second space sits inside
        the first.
        """
        term_basis = hom_term_basis(self.nvars, degree)
        index = {t: i for i, t in enumerate(term_basis)}
        ech = TrackedEchelon(len(term_basis))
        for g in self.generators:
            for piece_degree, piece in g.homogeneous_components():
                if piece_degree > degree:
                    continue
                for m in monomials_of_degree(self.nvars, degree - piece_degree):
                    shifted = piece * Polynomial.monomial(self.nvars, m)
                    ech.insert(field_to_hom_vector(shifted, degree, index))
        full = [
            terms_to_field(
                self.nvars,
                {term_basis[j]: c for j, c in enumerate(row) if c != 0},
            )
            for row in ech.rows
        ]
        graded = self.graded_piece(degree).basis_fields(self.nvars)
        return tuple(full), tuple(graded)

    def truncated_span(self, max_degree: int):
        """Echelon of the module's image modulo fields vanishing beyond
        ``max_degree``; used for jet-level containment checks."""
        if max_degree not in self._truncated:
            term_basis = [
                (pos, expt)
                for pos in range(self.nvars)
                for expt in monomials_up_to(self.nvars, max_degree)
            ]
            index = {t: i for i, t in enumerate(term_basis)}
            ech = TrackedEchelon(len(term_basis))
            for g in self.generators:
                order = g.vanishing_order()
                for m in monomials_up_to(self.nvars, max_degree - order):
                    shifted = (g * Polynomial.monomial(self.nvars, m)).truncate(
                        max_degree
                    )
                    v = [Fraction(0)] * len(term_basis)
                    for term, coeff in field_to_terms(shifted).items():
                        v[index[term]] = coeff
                    ech.insert(v)
            self._truncated[max_degree] = (ech, term_basis, index)
        return self._truncated[max_degree]

    def truncation_contains(self, field: PolyVectorField, max_degree: int) -> bool:
        """Whether the field agrees with a module element up to the cap."""
        ech, term_basis, index = self.truncated_span(max_degree)
        v = [Fraction(0)] * len(term_basis)
        for term, coeff in field_to_terms(field.truncate(max_degree)).items():
            v[index[term]] = coeff
        return ech.contains(v)


def homogeneous_generators(
    module: FoliationModule, check_degree: Optional[int] = None
) -> FoliationModule:
    """Replace the generators by homogeneous ones of no larger degrees.

    Requires the module to be preserved by the Euler field (each bracket
    [E, g] must be a member; verified, with the offending generator named
    on failure).  Under that hypothesis every homogeneous component of a
    member is again a member, so the components of the generators span
    the same module; a greedy pass in ascending degree keeps only the
    components that enlarge the module, and equality of the input and
    output modules is verified both exactly (reduced Groebner bases) and
    degree by degree up to ``check_degree``.
    """
    from .vecfield import euler_field

    if check_degree is None:
        check_degree = module.max_generator_degree() + 2
    e = euler_field(module.nvars)
    for idx, g in enumerate(module.generators):
        cert = module.membership(e.lie_bracket(g))
        if not cert.member:
            raise InputRejected(
                f"module is not Euler-invariant: bracket with generator "
                f"{idx} ({g.render()}) is not a member"
            )
    candidates = []
    for j, g in enumerate(module.generators):
        for degree, piece in g.homogeneous_components():
            candidates.append((degree, j, piece))
    candidates.sort(key=lambda t: (t[0], t[1]))
    for degree, j, piece in candidates:
        if not module.membership(piece).member:
            raise InternalCheckError(
                "homogeneous component of a generator escaped the module"
            )
    kept: List[PolyVectorField] = []
    kept_module: Optional[FoliationModule] = None
    for degree, j, piece in candidates:
        if kept_module is not None and kept_module.contains(piece):
            continue
        kept.append(piece)
        kept_module = FoliationModule(kept)
    assert kept_module is not None
    if not kept_module.same_module(module):
        raise InternalCheckError("homogeneous regeneration changed the module")
    for d in range(check_degree + 1):
        lhs, _, _ = module.truncated_span(d)
        rhs, _, _ = kept_module.truncated_span(d)
        if lhs.basis() != rhs.basis():
            raise InternalCheckError(
                f"homogeneous regeneration disagrees at truncation degree {d}"
            )
    return kept_module


def dense_membership(
    field: PolyVectorField,
    module: FoliationModule,
    coefficient_degree_cap: int,
):
    """Degree-truncated membership oracle, independent of Groebner data.

    Searches for generator coefficients of total degree at most the cap
    by solving one exact linear system over the occurring terms.  A
    positive answer comes with re-verified coefficients and is conclusive;
    a negative answer only rules out certificates within the cap.
    """
    if field.nvars != module.nvars:
        raise DimensionMismatch("field over wrong variable count")
    nvars = module.nvars
    unknowns = [
        (j, m)
        for j in range(len(module.generators))
        for m in monomials_up_to(nvars, coefficient_degree_cap)
    ]
    col = {u: i for i, u in enumerate(unknowns)}
    rows: Dict[ModTerm, List[Fraction]] = {}
    target = field_to_terms(field)
    for term in target:
        rows.setdefault(term, [Fraction(0)] * len(unknowns))
    for (j, m), ci in col.items():
        shifted = _shift_terms(field_to_terms(module.generators[j]), m, Fraction(1))
        for term, coeff in shifted.items():
            row = rows.setdefault(term, [Fraction(0)] * len(unknowns))
            row[ci] += coeff
    ordered_terms = sorted(rows, key=modterm_key, reverse=True)
    matrix = [rows[t] for t in ordered_terms]
    rhs = [target.get(t, Fraction(0)) for t in ordered_terms]
    from .linalg import solve_linear

    solution = solve_linear(matrix, rhs)
    if solution is None:
        return False, None
    coeffs = [Polynomial.zero(nvars)] * len(module.generators)
    for (j, m), ci in col.items():
        if solution[ci] != 0:
            coeffs[j] = coeffs[j] + Polynomial.monomial(nvars, m, solution[ci])
    recombined = PolyVectorField.zero(nvars)
    for c, g in zip(coeffs, module.generators):
        recombined = recombined + g * c
    if recombined != field:
        raise InternalCheckError("dense membership solution failed re-verification")
    return True, tuple(coeffs)
