"""The tensor square of an algebra and the certified deciders built on it.

The central object is the span of all tensors u⊗v with uv = 0 inside the
tensor square.  An algebra is *zero-product balanced* when every shifted
product tensor ab⊗c - a⊗bc lies in that span, and *zero-product determined*
when the span exhausts the kernel of the multiplication map.  Both deciders
return machine-verifiable evidence: membership decompositions into certified
zero-product tensors for YES, separating functionals for NO.

Tensor index convention: e_i ⊗ e_j sits at flat index i*d + j (row-major).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from zpbal.algebra import Algebra
from zpbal.config import DEFAULT_CONFIG, SweepConfig
from zpbal.errors import MalformedCertificate, SoundnessAlarm
from zpbal.fields import Field, Scalar
from zpbal.linalg import Matrix, SpanBuilder, Subspace, Vector, dot, vec_is_zero

TENSOR_CONVENTION = "row-major i*d+j"

EXACT = "EXACT"
LOWER_BOUND = "LOWER_BOUND"
YES = "YES"
NO = "NO"
UNKNOWN = "UNKNOWN"


class TensorSquare:
    """Tensor square A⊗A with the linear multiplication map a⊗b -> ab."""

    def __init__(self, algebra: Algebra):
        self.algebra = algebra
        d = algebra.dim
        self.ambient = d * d
        f = algebra.field
        # mul matrix: d rows, d*d columns; column i*d+j holds coords of e_i e_j
        rows = [[f.zero] * self.ambient for _ in range(d)]
        for i in range(d):
            for j in range(d):
                cij = algebra.table[i][j]
                for k, c in enumerate(cij):
                    if c != 0:
                        rows[k][i * d + j] = c
        self.mul_matrix = Matrix(f, rows, cols=self.ambient)
        self._kernel: Optional[Subspace] = None

    def kernel(self) -> Subspace:
        if self._kernel is None:
            self._kernel = self.mul_matrix.kernel()
        return self._kernel

    def kernel_dim(self) -> int:
        return self.ambient - self.mul_matrix.rank()

    def tensor_coords(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        f = self.algebra.field
        d = self.algebra.dim
        out = [f.zero] * self.ambient
        for i, a in enumerate(u):
            if a == 0:
                continue
            base = i * d
            for j, b in enumerate(v):
                if b != 0:
                    out[base + j] = f.mul(a, b)
        return out

    def apply_mul(self, t: Vector) -> Vector:
        return self.mul_matrix.apply(t)

    def defect_tensor(self, i: int, j: int, k: int) -> Vector:
        """(e_i e_j)⊗e_k - e_i⊗(e_j e_k)."""
        f = self.algebra.field
        d = self.algebra.dim
        out = [f.zero] * self.ambient
        for s, c in enumerate(self.algebra.table[i][j]):
            if c != 0:
                out[s * d + k] = f.add(out[s * d + k], c)
        for t, c in enumerate(self.algebra.table[j][k]):
            if c != 0:
                out[i * d + t] = f.sub(out[i * d + t], c)
        return out


@dataclass
class ZeroProductSpanReport:
    """Computed (or lower-bounded) span of zero-product tensors.

    Every generator pair (u, v) was re-verified to satisfy uv = 0 before
    insertion, so the recorded subspace is a certified subset of the true
    span regardless of status.  Status EXACT means the generating sweep was
    exhaustive over the whole (finite) algebra.
    """

    algebra: Algebra
    tensor: TensorSquare
    subspace: Subspace
    status: str
    generators: List[Tuple[Tuple[Scalar, ...], Tuple[Scalar, ...]]]
    strategy_log: List[str]
    kernel_dim: int
    config: SweepConfig
    _builder: SpanBuilder = dc_field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def is_complete(self) -> bool:
        """Whether the subspace provably equals the full zero-product span.

        True for exhaustive sweeps, and also when a lower bound reaches the
        kernel ceiling (the span always sits inside that kernel).
        """
        return self.status == EXACT or self.dim == self.kernel_dim

    def membership_terms(self, target: Vector) -> Optional[List[Tuple[Scalar, tuple, tuple]]]:
        """target = sum of lambda * (u⊗v) over recorded generators, or None."""
        combo = self._builder.generator_coefficients(target)
        if combo is None:
            return None
        return [(lam, self.generators[g][0], self.generators[g][1]) for g, lam in sorted(combo.items())]


def _annihilator_tensors(report_builder, ts, u, side, generators):
    """Insert u⊗w (right annihilators w of u) or w⊗u (left) into the span."""
    alg = ts.algebra
    if all(a == 0 for a in u):
        return 0
    mat = alg.left_mult_matrix(u) if side == "right" else alg.right_mult_matrix(u)
    added = 0
    for w in mat.kernel().basis:
        t = ts.tensor_coords(u, w) if side == "right" else ts.tensor_coords(w, u)
        pair = (tuple(u), tuple(w)) if side == "right" else (tuple(w), tuple(u))
        if report_builder.add(t):
            assert vec_is_zero(alg.multiply_coords(pair[0], pair[1]))
            generators.append(pair)
            added += 1
    return added


def compute_zero_product_span(algebra: Algebra, config: SweepConfig = DEFAULT_CONFIG) -> ZeroProductSpanReport:
    """Span of {u⊗v : uv = 0}, exhaustive over finite algebras within budget.

    Exhaustive route: sweep every element u and adjoin u ⊗ (right annihilator
    of u); this reaches the whole span because each zero-product pair (u, v)
    appears with v in the annihilator of u.  Otherwise a lower bound is grown
    from zero basis pairs, one- and two-basis-vector annihilator sweeps,
    registered idempotents (with their transfer tensors), and seeded random
    elements until the span stalls.
    """
    ts = TensorSquare(algebra)
    f = algebra.field
    d = algebra.dim
    ker_dim = ts.kernel_dim()
    builder = SpanBuilder(f, ts.ambient, track_expressions=True)
    generators: List[Tuple[tuple, tuple]] = []
    log: List[str] = [f"seed={config.seed}", f"convention={TENSOR_CONVENTION}"]

    size = algebra.n_elements()
    if size is not None and size <= config.enumeration_cap:
        for u in algebra.coord_tuples():
            if builder.dim >= ker_dim:
                break
            _annihilator_tensors(builder, ts, list(u), "right", generators)
        log.append(f"exhaustive annihilator sweep over {size} elements")
        status = EXACT
    else:
        reason = "infinite field" if size is None else f"{size} elements exceed cap {config.enumeration_cap}"
        log.append(f"lower-bound strategy ({reason})")
        # (i) basis pairs with zero product
        for i in range(d):
            if builder.dim >= ker_dim:
                break
            for j in range(d):
                if vec_is_zero(algebra.table[i][j]):
                    ei = tuple(f.one if t == i else f.zero for t in range(d))
                    ej = tuple(f.one if t == j else f.zero for t in range(d))
                    if builder.add(ts.tensor_coords(ei, ej)):
                        generators.append((ei, ej))
        log.append(f"zero basis pairs: dim {builder.dim}")
        # (ii) annihilator sweeps over structured elements
        sweep: List[List[Scalar]] = []
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
        idems = [list(e.coords) for e in algebra.registered_idempotents]
        sweep.extend(idems)
        for a in range(len(idems)):
            for b in range(a + 1, len(idems)):
                sweep.append([f.add(x, y) for x, y in zip(idems[a], idems[b])])
                sweep.append([f.sub(x, y) for x, y in zip(idems[a], idems[b])])
        for u in sweep:
            if builder.dim >= ker_dim:
                break
            _annihilator_tensors(builder, ts, u, "right", generators)
            _annihilator_tensors(builder, ts, u, "left", generators)
        log.append(f"structured annihilator sweep ({len(sweep)} elements): dim {builder.dim}")
        # (iii) idempotent transfer tensors: ae⊗(c-ec) and (ae-a)⊗ec
        for e in algebra.registered_idempotents:
            if builder.dim >= ker_dim:
                break
            for i in range(d):
                a = algebra.basis_element(i)
                ae = a * e
                for k in range(d):
                    c = algebra.basis_element(k)
                    ec = e * c
                    for u, v in ((ae, c - ec), (ae - a, ec)):
                        t = ts.tensor_coords(u.coords, v.coords)
                        if builder.add(t):
                            assert vec_is_zero(algebra.multiply_coords(u.coords, v.coords))
                            generators.append((u.coords, v.coords))
        log.append(f"idempotent transfer tensors: dim {builder.dim}")
        # (iv) seeded random elements until the span stalls
        rng = random.Random(config.seed)
        stall = 0
        samples = 0
        while stall < config.stall_rounds and builder.dim < ker_dim:
            if f.characteristic == 0:
                u = [f.of_int(rng.randint(-3, 3)) for _ in range(d)]
            else:
                u = [rng.randrange(f.characteristic) for _ in range(d)]
            samples += 1
            added = _annihilator_tensors(builder, ts, u, "right", generators)
            added += _annihilator_tensors(builder, ts, u, "left", generators)
            stall = 0 if added else stall + 1
        log.append(f"random sweep: {samples} samples, dim {builder.dim}")
        status = LOWER_BOUND
        if builder.dim == ker_dim:
            log.append("lower bound reached the multiplication-kernel ceiling")

    subspace = builder.to_subspace()
    if subspace.dim > ker_dim:
        raise SoundnessAlarm("zero-product span exceeds multiplication kernel")
    return ZeroProductSpanReport(
        algebra=algebra,
        tensor=ts,
        subspace=subspace,
        status=status,
        generators=generators,
        strategy_log=log,
        kernel_dim=ker_dim,
        config=config,
        _builder=builder,
    )


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

MEMBERSHIP = "membership-decomposition"
SEPARATING = "separating-functional"
NOT_VERIFIED = "not-verified"


@dataclass
class Certificate:
    """Independently re-checkable evidence for one membership/refutation claim.

    membership-decomposition: target = sum lambda*(u⊗v) with every uv = 0.
    separating-functional: functional vanishing on all stored zero-product
    generator tensors but not on the target; refutes membership whenever the
    stored generators span the whole zero-product span (status EXACT).
    """

    kind: str
    target: Vector
    terms: List[Tuple[Scalar, tuple, tuple]] = dc_field(default_factory=list)
    functional: Optional[Vector] = None
    generators: List[Tuple[tuple, tuple]] = dc_field(default_factory=list)
    convention: str = TENSOR_CONVENTION
    meta: Dict = dc_field(default_factory=dict)

    def to_dict(self, fld: Field) -> Dict:
        fmt = fld.format
        out = {
            "kind": self.kind,
            "convention": self.convention,
            "target": [fmt(a) for a in self.target],
        }
        if self.kind == MEMBERSHIP:
            out["terms"] = [
                {"lambda": fmt(lam), "u": [fmt(a) for a in u], "v": [fmt(b) for b in v]}
                for lam, u, v in self.terms
            ]
        if self.kind == SEPARATING:
            out["functional"] = [fmt(a) for a in self.functional]
            out["generators"] = [
                {"u": [fmt(a) for a in u], "v": [fmt(b) for b in v]} for u, v in self.generators
            ]
        if self.meta:
            out["meta"] = self.meta
        return out

    @classmethod
    def from_dict(cls, data: Dict, fld: Field) -> "Certificate":
        try:
            kind = data["kind"]
            target = [fld.parse(a) for a in data["target"]]
            terms = [
                (fld.parse(t["lambda"]), tuple(fld.parse(a) for a in t["u"]), tuple(fld.parse(b) for b in t["v"]))
                for t in data.get("terms", [])
            ]
            functional = [fld.parse(a) for a in data["functional"]] if "functional" in data else None
            generators = [
                (tuple(fld.parse(a) for a in g["u"]), tuple(fld.parse(b) for b in g["v"]))
                for g in data.get("generators", [])
            ]
        except (KeyError, TypeError) as exc:
            raise MalformedCertificate(f"missing or malformed field: {exc}") from exc
        return cls(
            kind=kind,
            target=target,
            terms=terms,
            functional=functional,
            generators=generators,
            convention=data.get("convention", TENSOR_CONVENTION),
            meta=data.get("meta", {}),
        )


def verify_certificate(algebra: Algebra, cert: Certificate) -> bool:
    """Re-check a certificate using only algebra multiplication and arithmetic.

    Deliberately independent of the span engine: a third party holding the
    structure constants can re-run this check.
    """
    f = algebra.field
    d = algebra.dim
    ambient = d * d
    if len(cert.target) != ambient:
        raise MalformedCertificate("target has wrong length")
    if cert.kind == MEMBERSHIP:
        acc = [f.zero] * ambient
        for lam, u, v in cert.terms:
            if len(u) != d or len(v) != d:
                raise MalformedCertificate("term vector has wrong length")
            if not vec_is_zero(algebra.multiply_coords(u, v)):
                return False
            for i, a in enumerate(u):
                if a == 0:
                    continue
                la = f.mul(lam, a)
                base = i * d
                for j, b in enumerate(v):
                    if b != 0:
                        acc[base + j] = f.add(acc[base + j], f.mul(la, b))
        return acc == list(cert.target)
    if cert.kind == SEPARATING:
        if cert.functional is None or len(cert.functional) != ambient:
            raise MalformedCertificate("separating certificate lacks a functional")
        if dot(f, cert.functional, cert.target) == 0:
            return False
        for u, v in cert.generators:
            if not vec_is_zero(algebra.multiply_coords(u, v)):
                return False
            t = [f.zero] * ambient
            for i, a in enumerate(u):
                if a == 0:
                    continue
                base = i * d
                for j, b in enumerate(v):
                    if b != 0:
                        t[base + j] = f.mul(a, b)
            if dot(f, cert.functional, t) != 0:
                return False
        return True
    if cert.kind == NOT_VERIFIED:
        return False
    raise MalformedCertificate(f"unknown certificate kind {cert.kind!r}")


def _separating_functional(report: ZeroProductSpanReport, target: Vector) -> Vector:
    """A functional orthogonal to the span with nonzero value on the target."""
    f = report.algebra.field
    for phi in report.subspace.complement_functionals():
        if dot(f, phi, target) != 0:
            return phi
    raise SoundnessAlarm("target reported outside the span but no functional separates it")


# ---------------------------------------------------------------------------
# deciders
# ---------------------------------------------------------------------------


@dataclass
class DeterminedVerdict:
    status: str  # YES / NO / UNKNOWN
    span_dim: int
    kernel_dim: int
    witness: Optional[Vector] = None  # kernel tensor outside the span
    certificate: Optional[Certificate] = None
    note: str = ""


def is_zero_product_determined(algebra: Algebra, report: ZeroProductSpanReport) -> DeterminedVerdict:
    """Decide whether the zero-product span exhausts the multiplication kernel."""
    span_dim = report.dim
    ker_dim = report.kernel_dim
    if span_dim == ker_dim:
        return DeterminedVerdict(YES, span_dim, ker_dim)
    if report.status != EXACT:
        return DeterminedVerdict(
            UNKNOWN,
            span_dim,
            ker_dim,
            note="span is a lower bound below the kernel ceiling; no refutation over this field",
        )
    witness = next(
        (v for v in report.tensor.kernel().basis if not report.subspace.contains_vector(v)),
        None,
    )
    if witness is None:
        raise SoundnessAlarm("kernel dimension exceeds span but every kernel basis vector is inside")
    phi = _separating_functional(report, witness)
    cert = Certificate(
        kind=SEPARATING,
        target=witness,
        functional=phi,
        generators=list(report.generators),
        meta={"claim": "not-zero-product-determined", "span_status": report.status,
              "seed": report.config.seed},
    )
    return DeterminedVerdict(NO, span_dim, ker_dim, witness=witness, certificate=cert)


@dataclass
class BalancedVerdict:
    status: str  # YES / NO / UNKNOWN
    witness_triple: Optional[Tuple[int, int, int]] = None
    certificate: Optional[Certificate] = None  # separating functional for NO
    certificates: Optional[List[Certificate]] = None  # per-triple memberships for YES
    n_triples: int = 0
    note: str = ""


def is_zero_product_balanced(
    algebra: Algebra,
    report: ZeroProductSpanReport,
    with_certificates: bool = False,
) -> BalancedVerdict:
    """Decide whether every shifted product tensor lies in the zero-product span.

    By trilinearity it suffices to test the basis triples.  A YES obtained
    from a lower-bound span is still sound (membership in a subset implies
    membership); a NO needs the exhaustive span.
    """
    ts = report.tensor
    d = algebra.dim
    certs: List[Certificate] = [] if with_certificates else None
    for i in range(d):
        for j in range(d):
            for k in range(d):
                t = ts.defect_tensor(i, j, k)
                if vec_is_zero(t):
                    if with_certificates:
                        certs.append(Certificate(kind=MEMBERSHIP, target=t, terms=[],
                                                 meta={"triple": [i, j, k]}))
                    continue
                if report.subspace.contains_vector(t):
                    if with_certificates:
                        terms = report.membership_terms(t)
                        if terms is None:
                            raise SoundnessAlarm("membership reported but no decomposition found")
                        certs.append(Certificate(kind=MEMBERSHIP, target=t, terms=terms,
                                                 meta={"triple": [i, j, k]}))
                    continue
                if report.status == EXACT:
                    phi = _separating_functional(report, t)
                    cert = Certificate(
                        kind=SEPARATING,
                        target=t,
                        functional=phi,
                        generators=list(report.generators),
                        meta={"claim": "not-zero-product-balanced", "triple": [i, j, k],
                              "span_status": report.status, "seed": report.config.seed},
                    )
                    return BalancedVerdict(NO, witness_triple=(i, j, k), certificate=cert,
                                           n_triples=d ** 3)
                return BalancedVerdict(
                    UNKNOWN,
                    witness_triple=(i, j, k),
                    n_triples=d ** 3,
                    note="membership failed against a lower-bound span; not refutable over this field",
                )
    return BalancedVerdict(YES, certificates=certs, n_triples=d ** 3)


def balanced_defect(algebra: Algebra, report: ZeroProductSpanReport) -> Tuple[Subspace, int]:
    """Span of all shifted-product tensors plus the zero-product span.

    The excess over the span dimension is 0 exactly when the algebra is
    balanced (granted a complete span).
    """
    ts = report.tensor
    d = algebra.dim
    builder = SpanBuilder(algebra.field, ts.ambient)
    for row in report.subspace.basis:
        builder.add(row)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                builder.add(ts.defect_tensor(i, j, k))
    total = builder.to_subspace()
    return total, total.dim - report.dim
