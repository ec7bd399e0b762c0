"""Commutative structure theory: nilradical, characters, the Boolean ring of
idempotents with its finite Stone space, idempotent lifting, nil-plus-
idempotent decompositions, and the character-or-radical dichotomies.

Everything here is verified by postconditions: lifted idempotents are checked
against e*e = e, sections against multiplicativity, decompositions against
exact reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from zpbal.algebra import (
    Algebra,
    Element,
    Quotient,
    commutator,
    ideal_closure,
    quotient_algebra,
    scalar_algebra,
)
from zpbal.config import DEFAULT_CONFIG, SweepConfig
from zpbal.errors import (
    BudgetExceeded,
    HypothesisFailed,
    NotCommutative,
    NotIdempotentModNil,
    SoundnessAlarm,
)
from zpbal.fields import Scalar
from zpbal.linalg import Matrix, SpanBuilder, Subspace, vec_is_zero
from zpbal.linmaps import AlgMap
from zpbal.multiplier import enumerate_idempotents
from zpbal.squarezero import commutator_span, factorizable_pair_product_span
from zpbal.tensorsquare import (
    EXACT,
    UNKNOWN,
    YES,
    compute_zero_product_span,
    is_zero_product_balanced,
)

PARTIAL = "PARTIAL"


def _require_commutative(algebra: Algebra):
    if not algebra.predicates().is_commutative:
        raise NotCommutative("operation requires a commutative algebra")


def _is_nilpotent_coords(algebra: Algebra, coords) -> bool:
    """Repeated squaring: nilpotent iff the 2^k-th power vanishes, 2^k > dim."""
    v = list(coords)
    steps = max(1, (algebra.dim + 1).bit_length())
    for _ in range(steps):
        if vec_is_zero(v):
            return True
        v = algebra.multiply_coords(v, v)
    return vec_is_zero(v)


def nilradical(algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG) -> Subspace:
    """The ideal of nilpotent elements of a commutative algebra.

    Characteristic 0: radical of the trace form (x,y) -> tr(L_x L_y), with
    every output basis vector re-verified nilpotent.  Prime fields: exhaustive
    nilpotency sweep (the trace form is unreliable in small characteristic).
    """
    _require_commutative(algebra)
    f = algebra.field
    d = algebra.dim
    if f.characteristic == 0:
        lmats = [algebra.left_mult_matrix(
            [f.one if t == i else f.zero for t in range(d)]) for i in range(d)]
        gram = []
        for i in range(d):
            row = []
            for j in range(d):
                prod = lmats[i].mul(lmats[j])
                tr = f.zero
                for t in range(d):
                    tr = f.add(tr, prod.rows[t][t])
                row.append(tr)
            gram.append(row)
        space = Matrix(f, gram, cols=d).kernel()
        for v in space.basis:
            if not _is_nilpotent_coords(algebra, v):
                raise SoundnessAlarm("trace-form radical contains a non-nilpotent vector")
        return space
    size = algebra.n_elements()
    if size > config.enumeration_cap:
        raise BudgetExceeded(
            f"nilpotency sweep over {size} elements exceeds cap {config.enumeration_cap}"
        )
    builder = SpanBuilder(f, d)
    for coords in algebra.coord_tuples():
        if _is_nilpotent_coords(algebra, coords):
            builder.add(list(coords))
    return builder.to_subspace()


# ---------------------------------------------------------------------------
# idempotents, atoms, Boolean ring
# ---------------------------------------------------------------------------


def boolean_sum(e: Element, g: Element) -> Element:
    """e + g - 2eg: the addition of the Boolean ring of idempotents."""
    two = e.parent.field.of_int(2)
    return e + g - (e * g).scale(two)


def atoms_from_idempotents(idempotents: List[Element]) -> List[Element]:
    """Primitive pairwise-orthogonal idempotents refining the given ones.

    Standard partition refinement: each new idempotent splits every current
    part q into qe and q - qe, plus the remainder of e outside the current
    support.  Requires a commutative parent.
    """
    parts: List[Element] = []
    for e in idempotents:
        if e.is_zero():
            continue
        new_parts: List[Element] = []
        r = e
        for q in parts:
            qe = q * e
            r = r - qe
            if not qe.is_zero():
                new_parts.append(qe)
            rest = q - qe
            if not rest.is_zero():
                new_parts.append(rest)
        if not r.is_zero():
            new_parts.append(r)
        parts = new_parts
    return parts


@dataclass
class BooleanRingInfo:
    """The Boolean ring of idempotents under e+f-2ef and ring multiplication."""

    elements: List[Element]
    atoms: List[Element]
    axioms_ok: bool  # closure under both operations within the element list
    exhaustive: bool


@dataclass
class StoneReport:
    ring: BooleanRingInfo
    stone_points: List[Element]  # atoms; the finite Stone space
    iso_check: bool  # algebra = direct sum of the lines through the atoms


def boolean_ring_and_stone(algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG) -> StoneReport:
    """Boolean ring of idempotents of a commutative reduced algebra, its atoms,
    and the check that the algebra is the span of the atom lines."""
    _require_commutative(algebra)
    nil = nilradical(algebra, config)
    if nil.dim != 0:
        raise HypothesisFailed("algebra is not reduced")
    idem = enumerate_idempotents(algebra, config)
    atoms = atoms_from_idempotents(idem.items)
    elements = list(idem.items)
    if not idem.exhaustive:
        # close the registered list under both ring operations
        seen = {e.coords for e in elements}
        frontier = list(elements)
        while frontier:
            nxt = []
            for a in frontier:
                for b in elements:
                    for c in (a * b, boolean_sum(a, b)):
                        if c.coords not in seen:
                            seen.add(c.coords)
                            nxt.append(c)
            elements.extend(nxt)
            frontier = nxt
    axioms_ok = True
    coords_set = {e.coords for e in elements}
    for a in elements:
        if (a * a) != a:
            axioms_ok = False
        for b in elements:
            if (a * b).coords not in coords_set or boolean_sum(a, b).coords not in coords_set:
                axioms_ok = False
    builder = SpanBuilder(algebra.field, algebra.dim)
    for a in atoms:
        builder.add(list(a.coords))
    iso = builder.dim == algebra.dim and len(atoms) == algebra.dim
    return StoneReport(
        ring=BooleanRingInfo(elements=elements, atoms=atoms, axioms_ok=axioms_ok,
                             exhaustive=idem.exhaustive),
        stone_points=atoms,
        iso_check=iso,
    )


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------


@dataclass
class CharacterReport:
    """Nonzero multiplicative functionals to the base field."""

    characters: List[AlgMap]
    status: str  # EXACT / PARTIAL
    notes: List[str]


def _atom_expansion(q: Algebra, atoms: List[Element]) -> Optional[Matrix]:
    """Matrix sending a quotient vector to its coefficients in the atom basis,
    or None when the atoms do not span."""
    if len(atoms) != q.dim:
        return None
    cols = Matrix.from_columns(q.field, [list(a.coords) for a in atoms], q.dim)
    return cols.inverse()


def _atom_characters(algebra: Algebra, quot: Quotient, config: SweepConfig):
    """Characters through the reduced quotient, via its atom basis.

    Returns (list of functionals on the original algebra, complete: bool).
    Complete means the quotient is spanned by the known idempotents, in which
    case the coordinate projections along the atoms are *all* characters.
    """
    q = quot.algebra
    f = algebra.field
    if q.dim == 0:
        return [], True
    try:
        idem = enumerate_idempotents(q, config)
    except BudgetExceeded:
        return [], False
    atoms = atoms_from_idempotents(idem.items)
    expansion = _atom_expansion(q, atoms)
    if expansion is None:
        return [], False
    chars = []
    for t in range(len(atoms)):
        functional = Matrix(f, [expansion.rows[t]], cols=q.dim).mul(quot.projection)
        chars.append(AlgMap(algebra, scalar_algebra(f), functional))
    # spanning atoms identify the quotient with K^r, whose characters are
    # exactly the r coordinate projections: complete even from a registry
    return chars, True


def characters(algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG) -> CharacterReport:
    """All nonzero algebra homomorphisms to the base field (commutative case).

    Route 1 (any field): through the quotient by the nilradical, when that
    quotient is spanned by enumerable idempotents.  Route 2 (prime fields
    within budget): exhaustive sweep of multiplicative functionals.  When
    both routes are complete they must agree.
    """
    _require_commutative(algebra)
    f = algebra.field
    d = algebra.dim
    notes = []
    route1: Optional[List[AlgMap]] = None
    chars1: List[AlgMap] = []
    try:
        nil = nilradical(algebra, config)
        quot = quotient_algebra(algebra, nil)
        chars1, complete1 = _atom_characters(algebra, quot, config)
        if complete1:
            route1 = chars1
            notes.append(f"atom route complete: {len(chars1)} characters")
        else:
            notes.append("atom route incomplete (idempotents not known to span)")
    except BudgetExceeded:
        notes.append("atom route skipped (nilradical sweep over budget)")

    route2: Optional[List[AlgMap]] = None
    if f.is_finite() and f.characteristic ** d <= config.enumeration_cap:
        found = []
        for phi in algebra.coord_tuples():
            if all(a == 0 for a in phi):
                continue
            ok = True
            for i in range(d):
                for j in range(d):
                    lhs = f.zero
                    for t, c in enumerate(algebra.table[i][j]):
                        if c != 0 and phi[t] != 0:
                            lhs = f.add(lhs, f.mul(c, phi[t]))
                    if lhs != f.mul(phi[i], phi[j]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.append(AlgMap(algebra, scalar_algebra(f), Matrix(f, [list(phi)], cols=d)))
        route2 = found
        notes.append(f"functional sweep complete: {len(found)} characters")

    if route1 is not None and route2 is not None:
        set1 = sorted(tuple(c.matrix.rows[0]) for c in route1)
        set2 = sorted(tuple(c.matrix.rows[0]) for c in route2)
        if set1 != set2:
            raise SoundnessAlarm("character routes disagree")
    chars = route2 if route2 is not None else route1
    if chars is not None:
        chars = sorted(chars, key=lambda c: tuple(c.matrix.rows[0]))
        return CharacterReport(characters=chars, status=EXACT, notes=notes)
    return CharacterReport(characters=chars1, status=PARTIAL, notes=notes)


# ---------------------------------------------------------------------------
# idempotent lifting and the nil + idempotent decomposition
# ---------------------------------------------------------------------------


def lift_idempotent(algebra: Algebra, quot: Quotient, ebar: Element) -> Element:
    """The unique idempotent congruent to ebar modulo the nilradical.

    Newton iteration e <- 3e² - 2e³ starting from any coset representative;
    uniqueness is asserted by running a second, shifted representative to the
    same fixed point.
    """
    _require_commutative(algebra)
    q = quot.algebra
    if (ebar * ebar) != ebar:
        raise NotIdempotentModNil("class is not idempotent in the quotient")

    def iterate(e: Element) -> Element:
        three = algebra.field.of_int(3)
        two = algebra.field.of_int(2)
        for _ in range(algebra.dim + 2):
            if (e * e) == e:
                return e
            e2 = e * e
            e = e2.scale(three) - (e2 * e).scale(two)
        raise SoundnessAlarm("idempotent lifting failed to converge")

    start = quot.lift(ebar)
    e = iterate(start)
    if quot.project(e) != ebar:
        raise SoundnessAlarm("lift drifted out of its coset")
    if quot.ideal.dim > 0:
        shift = algebra.element(quot.ideal.basis[0])
        e2 = iterate(start + shift)
        if e2 != e:
            raise SoundnessAlarm("idempotent lift is not unique")
    return e


@dataclass
class SigmaSplitting:
    """Multiplicative linear section of the projection onto the reduced quotient."""

    quotient: Quotient
    sigma: Matrix  # algebra.dim x quotient.dim
    atoms: List[Element]  # atoms of the quotient
    lifted_atoms: List[Element]
    atom_expansion: Optional[Matrix]  # quotient vector -> atom coefficients
    section_ok: bool
    multiplicative_ok: bool

    def apply(self, qbar: Element) -> Element:
        return self.quotient.parent.element(self.sigma.apply(list(qbar.coords)))


def sigma_splitting(algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG) -> SigmaSplitting:
    """Split the projection onto the quotient by the nilradical by lifting the
    atoms; requires the quotient to be spanned by enumerable idempotents."""
    _require_commutative(algebra)
    f = algebra.field
    nil = nilradical(algebra, config)
    quot = quotient_algebra(algebra, nil)
    q = quot.algebra
    if q.dim == 0:
        sigma = Matrix(f, [[] for _ in range(algebra.dim)], cols=0)
        return SigmaSplitting(quotient=quot, sigma=sigma, atoms=[], lifted_atoms=[],
                              atom_expansion=None, section_ok=True, multiplicative_ok=True)
    idem = enumerate_idempotents(q, config)
    atoms = atoms_from_idempotents(idem.items)
    expansion = _atom_expansion(q, atoms)
    if expansion is None:
        raise HypothesisFailed("reduced quotient is not spanned by known idempotents")
    lifted = [lift_idempotent(algebra, quot, a) for a in atoms]
    # sigma = (lifted atoms as columns) ∘ (expansion in the atom basis)
    lift_cols = Matrix.from_columns(f, [list(a.coords) for a in lifted], algebra.dim)
    sigma = lift_cols.mul(expansion)
    sigma_map = AlgMap(q, algebra, sigma)
    section_ok = quot.projection.mul(sigma) == Matrix.identity(f, q.dim)
    multiplicative_ok = sigma_map.is_multiplicative() is None
    if not (section_ok and multiplicative_ok):
        raise SoundnessAlarm("sigma splitting failed verification")
    return SigmaSplitting(quotient=quot, sigma=sigma, atoms=atoms, lifted_atoms=lifted,
                          atom_expansion=expansion, section_ok=section_ok,
                          multiplicative_ok=multiplicative_ok)


@dataclass
class Decomposition:
    """a = nil_part + sum of lambda_i * e_i with orthogonal idempotents e_i and
    distinct nonzero coefficients; unique up to permutation, so coefficients
    are stored in a canonical sort order."""

    nil_part: Element
    terms: List[Tuple[Scalar, Element]]

    def reconstruct(self) -> Element:
        out = self.nil_part
        for lam, e in self.terms:
            out = out + e.scale(lam)
        return out

    def verify(self) -> bool:
        a = self.nil_part
        if not a.is_nilpotent():
            return False
        lams = [lam for lam, _ in self.terms]
        if len(set(lams)) != len(lams) or any(lam == 0 for lam in lams):
            return False
        for i, (_, e) in enumerate(self.terms):
            if (e * e) != e or e.is_zero():
                return False
            for j in range(i + 1, len(self.terms)):
                if not (e * self.terms[j][1]).is_zero():
                    return False
        return True


def decompose(a: Element, splitting: SigmaSplitting) -> Decomposition:
    """Nil-plus-idempotent normal form of an element."""
    algebra = a.parent
    f = algebra.field
    quot = splitting.quotient
    abar = quot.project(a)
    sig = splitting.apply(abar)
    nil_part = a - sig
    # expand abar over the atoms; atoms with equal coefficients merge into one
    # idempotent so the coefficients of the normal form are pairwise distinct
    by_coeff: Dict[Scalar, Element] = {}
    if splitting.atom_expansion is not None:
        coeffs = splitting.atom_expansion.apply(list(abar.coords))
        for lam, lifted in zip(coeffs, splitting.lifted_atoms):
            if lam == 0:
                continue
            if lam in by_coeff:
                by_coeff[lam] = by_coeff[lam] + lifted
            else:
                by_coeff[lam] = lifted
    terms = [(lam, by_coeff[lam]) for lam in sorted(by_coeff.keys())]
    dec = Decomposition(nil_part=nil_part, terms=terms)
    if dec.reconstruct() != a or not dec.verify():
        raise SoundnessAlarm("decomposition failed to reconstruct its input")
    return dec


# ---------------------------------------------------------------------------
# regularity / cleanness
# ---------------------------------------------------------------------------

NOT_EVALUATED = "NOT_EVALUATED"


@dataclass
class RegularCleanReport:
    regular_on_quotient: Optional[bool]
    clean: str  # YES / NO / NOT_EVALUATED / UNKNOWN
    notes: List[str]


def regular_and_clean_check(algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG) -> RegularCleanReport:
    """Von Neumann regularity of the reduced quotient (via the atom formula)
    and cleanness (unit + idempotent) for unital algebras over small prime
    fields; cleanness of nonunital algebras is reported NOT_EVALUATED."""
    _require_commutative(algebra)
    f = algebra.field
    notes = []
    regular: Optional[bool] = None
    try:
        splitting = sigma_splitting(algebra, config)
        q = splitting.quotient.algebra
        regular = True
        for i in range(q.dim):
            x = q.basis_element(i)
            coeffs = splitting.atom_expansion.apply(list(x.coords))
            y = q.zero_element()
            for lam, at in zip(coeffs, splitting.atoms):
                if lam != 0:
                    y = y + at.scale(f.inv(lam))
            if (x * y * x) != x:
                regular = False
        notes.append("regularity via atom inverses")
    except (HypothesisFailed, BudgetExceeded) as exc:
        notes.append(f"regularity not decided: {exc}")

    pred = algebra.predicates()
    if not pred.is_unital:
        clean = NOT_EVALUATED
        notes.append("clean requires a unit; not evaluated for nonunital input")
    elif f.is_finite() and algebra.n_elements() <= config.enumeration_cap:
        unit = list(pred.unit)
        idems = [list(e.coords) for e in enumerate_idempotents(algebra, config).items]
        units = set()
        for coords in algebra.coord_tuples():
            if algebra.left_mult_matrix(list(coords)).solve(unit) is not None:
                if algebra.right_mult_matrix(list(coords)).solve(unit) is not None:
                    units.add(tuple(coords))
        clean = YES
        for coords in algebra.coord_tuples():
            if not any(
                tuple(f.sub(a, b) for a, b in zip(coords, e)) in units for e in idems
            ):
                clean = NO
                break
        notes.append(f"clean by exhaustive unit+idempotent search ({len(units)} units)")
    else:
        clean = UNKNOWN
        notes.append("clean check needs exhaustive enumeration; over budget or infinite field")
    return RegularCleanReport(regular_on_quotient=regular, clean=clean, notes=notes)


# ---------------------------------------------------------------------------
# dichotomies
# ---------------------------------------------------------------------------

HAS_CHARACTER = "HAS_CHARACTER"
NILRADICAL = "NILRADICAL"
INAPPLICABLE = "INAPPLICABLE"
RADICAL_OVER_COMMUTATOR_IDEAL = "RADICAL_OVER_COMMUTATOR_IDEAL"


@dataclass
class DichotomyResult:
    kind: str
    witness: Optional[AlgMap] = None  # character, when found
    nilradical_dim: Optional[int] = None
    character_count: Optional[int] = None
    exponents: Optional[List[int]] = None  # per-basis nilpotency exponents mod the ideal
    note: str = ""


def dichotomy_commutative(algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG) -> DichotomyResult:
    """A commutative balanced algebra either has a character or is all
    nilradical; exactly one branch holds.  Without certified balancedness the
    result is INAPPLICABLE with a best-effort report."""
    _require_commutative(algebra)
    span = compute_zero_product_span(algebra, config)
    balanced = is_zero_product_balanced(algebra, span)
    nil = nilradical(algebra, config)
    chars = characters(algebra, config)
    nil_all = nil.dim == algebra.dim
    if balanced.status != YES:
        return DichotomyResult(
            kind=INAPPLICABLE,
            nilradical_dim=nil.dim,
            character_count=len(chars.characters) if chars.status == EXACT else None,
            note=f"balancedness not certified (verdict {balanced.status}); report is best-effort",
        )
    if nil_all and chars.characters:
        raise SoundnessAlarm("nilradical algebra with a character")
    if nil_all:
        return DichotomyResult(kind=NILRADICAL, nilradical_dim=nil.dim,
                               character_count=len(chars.characters) if chars.status == EXACT else 0)
    if not chars.characters:
        if chars.status == EXACT:
            raise SoundnessAlarm("balanced commutative algebra with neither character nor nilradical")
        return DichotomyResult(kind=INAPPLICABLE, nilradical_dim=nil.dim,
                               note="character search incomplete over this field")
    return DichotomyResult(kind=HAS_CHARACTER, witness=chars.characters[0],
                           nilradical_dim=nil.dim, character_count=len(chars.characters))


def commutator_ideal(algebra: Algebra) -> Subspace:
    """Two-sided ideal generated by all commutators."""
    return ideal_closure(algebra, commutator_span(algebra).basis)


def dichotomy_general(algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG,
                      balanced_status: Optional[str] = None) -> DichotomyResult:
    """Either a character exists, or every element has a power inside the
    commutator ideal (checked on basis images in the commutative quotient,
    which suffices since nilpotents there form an ideal)."""
    ideal = commutator_ideal(algebra)
    quot = quotient_algebra(algebra, ideal)
    q = quot.algebra
    if q.dim > 0 and not q.predicates().is_commutative:
        raise SoundnessAlarm("quotient by the commutator ideal is not commutative")
    chars = characters(q, config) if q.dim > 0 else CharacterReport([], EXACT, ["zero quotient"])
    if chars.characters:
        chi = chars.characters[0]
        pulled = AlgMap(algebra, chi.target, chi.matrix.mul(quot.projection))
        return DichotomyResult(kind=HAS_CHARACTER, witness=pulled,
                               character_count=len(chars.characters))
    exponents = []
    radical = True
    for i in range(algebra.dim):
        image = q.element(quot.projection.apply(
            [algebra.field.one if t == i else algebra.field.zero for t in range(algebra.dim)]))
        m = None
        power = image
        for exp in range(1, q.dim + 2):
            if power.is_zero():
                m = exp
                break
            power = power * image
        if m is None:
            radical = False
            break
        exponents.append(m)
    if radical:
        return DichotomyResult(kind=RADICAL_OVER_COMMUTATOR_IDEAL, exponents=exponents,
                               character_count=0 if chars.status == EXACT else None)
    if chars.status == EXACT and balanced_status == YES:
        raise SoundnessAlarm("balanced algebra fits neither dichotomy branch")
    return DichotomyResult(kind=UNKNOWN,
                           note="no character found (search incomplete) and not radical over the commutator ideal")


@dataclass
class NilpotentGenerationReport:
    """Three equivalent statements for unital balanced algebras: no character,
    generated by nilpotents as an ideal, spanned by products of pairs of
    orthogonally factorizable square-zero elements."""

    no_character: bool
    nilpotents_generate: bool
    pair_products_span: bool
    agree: bool


def generated_by_nilpotents_check(algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG) -> NilpotentGenerationReport:
    span = compute_zero_product_span(algebra, config)
    balanced = is_zero_product_balanced(algebra, span)
    if not algebra.predicates().is_unital:
        raise HypothesisFailed("algebra not unital")
    if balanced.status != YES:
        raise HypothesisFailed("algebra not certified zero-product balanced")
    ideal = commutator_ideal(algebra)
    quot = quotient_algebra(algebra, ideal)
    chars = characters(quot.algebra, config) if quot.algebra.dim > 0 else CharacterReport([], EXACT, [])
    if chars.status != EXACT:
        raise BudgetExceeded("character search on the abelianization is incomplete")
    no_char = not chars.characters

    f = algebra.field
    size = algebra.n_elements()
    if size is None or size > config.enumeration_cap:
        raise BudgetExceeded("nilpotent sweep needs exhaustive enumeration")
    builder = SpanBuilder(f, algebra.dim)
    for coords in algebra.coord_tuples():
        if _is_nilpotent_coords(algebra, coords):
            builder.add(list(coords))
    nil_ideal = ideal_closure(algebra, builder.rows)
    nilpotents_generate = nil_ideal.dim == algebra.dim

    pair_span, pair_status = factorizable_pair_product_span(algebra, config)
    if pair_status != EXACT:
        raise BudgetExceeded("factorizable-span sweep is incomplete")
    pair_products_span = pair_span.dim == algebra.dim

    agree = no_char == nilpotents_generate == pair_products_span
    if not agree:
        raise SoundnessAlarm("three-way nilpotent-generation equivalence violated")
    return NilpotentGenerationReport(
        no_character=no_char,
        nilpotents_generate=nilpotents_generate,
        pair_products_span=pair_products_span,
        agree=agree,
    )
