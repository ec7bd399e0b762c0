"""Commutator spans and orthogonally factorizable square-zero elements.

An element x is an *orthogonally factorizable* square-zero element when
x = yz with zy = 0; then automatically x² = 0 and x = [y, z].  In
zero-product balanced idempotent algebras the span of these elements equals
the whole commutator span; the containment span(factorizable) ⊆ span of
commutators holds unconditionally.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from zpbal.algebra import Algebra, Element, commutator
from zpbal.config import DEFAULT_CONFIG, SweepConfig
from zpbal.errors import SoundnessAlarm
from zpbal.linalg import SpanBuilder, Subspace
from zpbal.tensorsquare import (
    EXACT,
    LOWER_BOUND,
    YES,
    ZeroProductSpanReport,
    compute_zero_product_span,
    is_zero_product_balanced,
)


def square_zero(a: Element) -> bool:
    return (a * a).is_zero()


def commutator_span(algebra: Algebra) -> Subspace:
    """Span of [e_i, e_j] over basis pairs (sufficient by bilinearity)."""
    f = algebra.field
    d = algebra.dim
    builder = SpanBuilder(f, d)
    for i in range(d):
        for j in range(i + 1, d):
            diff = [f.sub(a, b) for a, b in zip(algebra.table[i][j], algebra.table[j][i])]
            builder.add(diff)
    return builder.to_subspace()


@dataclass
class FactorizableWitness:
    """x = yz with zy = 0; re-verified together with x² = 0 and x = [y,z]."""

    x: Element
    y: Element
    z: Element

    def verify(self) -> bool:
        x, y, z = self.x, self.y, self.z
        return (
            x == y * z
            and (z * y).is_zero()
            and (x * x).is_zero()
            and x == commutator(y, z)
        )


@dataclass
class FactorizableSpanReport:
    subspace: Subspace
    status: str  # EXACT / LOWER_BOUND
    witnesses: List[FactorizableWitness]  # one per retained generator


def _factor_sweep(algebra: Algebra, builder: SpanBuilder, witnesses, y_coords) -> int:
    """For fixed y adjoin {yz : zy = 0} = image under y of y's left annihilator."""
    if all(a == 0 for a in y_coords):
        return 0
    added = 0
    for z in algebra.right_mult_matrix(y_coords).kernel().basis:
        x = algebra.multiply_coords(y_coords, z)
        if builder.add(x):
            w = FactorizableWitness(
                x=algebra.element(x), y=algebra.element(y_coords), z=algebra.element(z)
            )
            if not w.verify():
                raise SoundnessAlarm("factorizable witness failed re-verification")
            witnesses.append(w)
            added += 1
    return added


def factorizable_square_zero_span(
    algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG
) -> FactorizableSpanReport:
    """Span of {yz : zy = 0}; exhaustive over finite algebras within budget.

    For fixed y the eligible products form a subspace (the image of the left
    annihilator of y under left multiplication by y), so sweeping y suffices.
    """
    f = algebra.field
    d = algebra.dim
    builder = SpanBuilder(f, d)
    witnesses: List[FactorizableWitness] = []
    size = algebra.n_elements()
    if size is not None and size <= config.enumeration_cap:
        for y in algebra.coord_tuples():
            if builder.dim >= d:
                break
            _factor_sweep(algebra, builder, witnesses, list(y))
        status = EXACT
    else:
        sweep = []
        for i in range(d):
            sweep.append([f.one if t == i else f.zero for t in range(d)])
        for i in range(d):
            for j in range(i + 1, d):
                v = [f.zero] * d
                v[i] = f.one
                v[j] = f.one
                sweep.append(list(v))
                if f.characteristic != 2:
                    w = list(v)
                    w[j] = f.neg(f.one)
                    sweep.append(w)
        sweep.extend([list(e.coords) for e in algebra.registered_idempotents])
        for y in sweep:
            _factor_sweep(algebra, builder, witnesses, y)
        rng = random.Random(config.seed)
        stall = 0
        while stall < config.stall_rounds and builder.dim < d:
            if f.characteristic == 0:
                y = [f.of_int(rng.randint(-3, 3)) for _ in range(d)]
            else:
                y = [rng.randrange(f.characteristic) for _ in range(d)]
            stall = 0 if _factor_sweep(algebra, builder, witnesses, y) else stall + 1
        status = LOWER_BOUND
    return FactorizableSpanReport(subspace=builder.to_subspace(), status=status, witnesses=witnesses)


@dataclass
class SpanEqualityReport:
    """Comparison of the commutator span with the factorizable square-zero span."""

    commutator_dim: int
    factorizable_dim: int
    factorizable_status: str
    containment_ok: bool  # factorizable span inside commutator span (unconditional)
    applicable: bool  # balanced YES and idempotent
    equal: Optional[bool]  # None when the factorizable span is only a lower bound
    balanced_status: str
    is_idempotent: bool


def check_span_equality(
    algebra: Algebra,
    config: SweepConfig = DEFAULT_CONFIG,
    span_report: Optional[ZeroProductSpanReport] = None,
) -> SpanEqualityReport:
    """Where balancedness and idempotency hold, the two spans must coincide;
    a verified counterexample would be a soundness alarm."""
    if span_report is None:
        span_report = compute_zero_product_span(algebra, config)
    balanced = is_zero_product_balanced(algebra, span_report)
    comm = commutator_span(algebra)
    fact = factorizable_square_zero_span(algebra, config)
    containment = comm.contains_subspace(fact.subspace)
    if not containment:
        raise SoundnessAlarm("factorizable square-zero span escapes the commutator span")
    idem = algebra.predicates().is_idempotent
    applicable = balanced.status == YES and idem
    equal: Optional[bool]
    if fact.status == EXACT:
        equal = comm.dim == fact.subspace.dim
        if applicable and not equal:
            raise SoundnessAlarm(
                "balanced idempotent algebra with exact spans violating span equality"
            )
    else:
        equal = True if comm.dim == fact.subspace.dim else None
    return SpanEqualityReport(
        commutator_dim=comm.dim,
        factorizable_dim=fact.subspace.dim,
        factorizable_status=fact.status,
        containment_ok=containment,
        applicable=applicable,
        equal=equal,
        balanced_status=balanced.status,
        is_idempotent=idem,
    )


def factorizable_pair_product_span(
    algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG
) -> Tuple[Subspace, str]:
    """Span of pairwise products of factorizable square-zero elements.

    Generators of the factorizable span suffice: any product of two such
    elements expands bilinearly over them.
    """
    fact = factorizable_square_zero_span(algebra, config)
    f = algebra.field
    builder = SpanBuilder(f, algebra.dim)
    xs = [list(w.x.coords) for w in fact.witnesses]
    for u in xs:
        for v in xs:
            builder.add(algebra.multiply_coords(u, v))
    return builder.to_subspace(), fact.status
