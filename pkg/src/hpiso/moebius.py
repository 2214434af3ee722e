"""Holomorphic automorphisms of the open unit disc.

Every holomorphic automorphism of ``D = {z : |z| < 1}`` can be written

    phi(z) = lam * (z - a) / (1 - conj(a) * z),    |lam| = 1, |a| < 1,

and the pair ``(lam, a)`` is unique.  This module implements the group
structure (composition, inverse, fast iteration), the trace-based
classification into identity / elliptic / parabolic / hyperbolic, canonical
forms with explicit conjugators, conjugacy testing, and the one-parameter
commutant groups.

Internally compositions run through the SU(1,1) matrix representation

    [[alpha, beta], [conj(beta), conj(alpha)]],   |alpha|^2 - |beta|^2 = 1,

which represents ``phi`` up to a global sign; the induced map is

    phi(z) = (alpha z + beta) / (conj(beta) z + conj(alpha)).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import (
    AmbiguousClassification,
    DomainError,
    IdentityError,
    PoleError,
)

__all__ = [
    "DiscAutomorphism",
    "MoebiusMatrix",
    "Kind",
    "Orientation",
    "Classification",
    "CanonicalPair",
    "identity",
    "rotation",
    "standard_hyperbolic",
    "parabolic_fixing_one",
    "disc_translation",
    "eval_auto",
    "compose",
    "inverse",
    "iterate",
    "classify",
    "canonical_pair",
    "find_conjugator",
    "are_conjugate",
    "commutant_element",
    "commutes",
    "boundary_points",
    "circle_points",
    "pointwise_distance",
]

#: evaluation is allowed on the closed disc plus this tolerance shell
EVAL_SLACK = 1e-12
#: zeros this close to the unit circle are rejected at construction
MAX_ZERO_MODULUS = 1.0 - 1e-14
#: default tolerance of the parabolic trace band |t - 2| <= tol
CLASSIFY_TOL = 1e-9
#: identity detection threshold on |lam - 1| and |a|
IDENTITY_TOL = 1e-14
#: largest |n| accepted by iterate()
MAX_ITERATE = 10**9

# Orientation reference, frozen after a one-off brute-force computation
# (re-derived in the test suite): conjugating the standard positively
# oriented parabolic with fixed point 1 into the upper half plane by
# C_w(z) = i(conj(w) z + 1)/(1 - conj(w) z) yields the translation
# zeta -> zeta + 2, so "plus" means positive translation length.
_PLUS_MEANS_POSITIVE_TRANSLATION = True


def _as_complex(z) -> complex:
    try:
        return complex(z)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not interpretable as a complex number: {z!r}") from exc


@dataclass(frozen=True)
class DiscAutomorphism:
    """Automorphism ``z -> lam (z - a) / (1 - conj(a) z)`` of the unit disc.

    ``lam`` is renormalized to unit modulus on construction; ``a`` (the
    point sent to 0) must satisfy ``|a| <= 1 - 1e-14``.
    """

    lam: complex
    a: complex

    def __post_init__(self):
        lam = _as_complex(self.lam)
        a = _as_complex(self.a)
        mod = abs(lam)
        if not math.isfinite(mod) or mod == 0.0:
            raise DomainError("phase lam must be a finite nonzero complex number")
        lam = lam / mod
        if not abs(a) <= MAX_ZERO_MODULUS:
            raise DomainError(
                f"zero must lie strictly inside the disc: |a| = {abs(a)!r}"
            )
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "a", a)

    def __call__(self, z: complex) -> complex:
        return eval_auto(self, z)

    def is_identity(self, tol: float = IDENTITY_TOL) -> bool:
        return abs(self.lam - 1.0) <= tol and abs(self.a) <= tol

    def inverse(self) -> "DiscAutomorphism":
        return inverse(self)

    def matrix(self) -> "MoebiusMatrix":
        return MoebiusMatrix.from_automorphism(self)


@dataclass(frozen=True)
class MoebiusMatrix:
    """SU(1,1) representative ``[[alpha, beta], [conj(beta), conj(alpha)]]``.

    Defined up to a global sign; all consumers use sign-invariant
    quantities (ratios, absolute values).
    """

    alpha: complex
    beta: complex

    @property
    def entries(self):
        a, b = self.alpha, self.beta
        return ((a, b), (b.conjugate(), a.conjugate()))

    @property
    def det(self) -> float:
        return (abs(self.alpha) - abs(self.beta)) * (abs(self.alpha) + abs(self.beta))

    @classmethod
    def from_automorphism(cls, phi: DiscAutomorphism) -> "MoebiusMatrix":
        half = cmath.sqrt(phi.lam)  # principal square root, unit modulus
        c = math.sqrt((1.0 - abs(phi.a)) * (1.0 + abs(phi.a)))
        return cls(half / c, -phi.a * half / c)

    def to_automorphism(self) -> DiscAutomorphism:
        return DiscAutomorphism(self.alpha / self.alpha.conjugate(), -self.beta / self.alpha)

    def __matmul__(self, other: "MoebiusMatrix") -> "MoebiusMatrix":
        a1, b1 = self.alpha, self.beta
        a2, b2 = other.alpha, other.beta
        return MoebiusMatrix(a1 * a2 + b1 * b2.conjugate(), a1 * b2 + b1 * a2.conjugate())

    def renormalized(self) -> "MoebiusMatrix":
        """Rescale so that ``|alpha|^2 - |beta|^2 = 1`` without overflow."""
        m = max(abs(self.alpha), abs(self.beta))
        if m == 0.0 or not math.isfinite(m):
            raise DomainError("degenerate Moebius matrix")
        alpha, beta = self.alpha / m, self.beta / m
        d = (abs(alpha) - abs(beta)) * (abs(alpha) + abs(beta))
        if d > 0.0:
            s = math.sqrt(d)
            alpha, beta = alpha / s, beta / s
        return MoebiusMatrix(alpha, beta)

    def apply(self, z: complex) -> complex:
        num = self.alpha * z + self.beta
        den = self.beta.conjugate() * z + self.alpha.conjugate()
        if den == 0:
            raise PoleError("Moebius matrix evaluated at its pole")
        return num / den


class Kind(Enum):
    IDENTITY = "Identity"
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"


class Orientation(Enum):
    PLUS = "plus"
    MINUS = "minus"
    NOT_APPLICABLE = None


@dataclass(frozen=True)
class Classification:
    """Conjugacy-class data of a disc automorphism.

    ``fixed_points`` is empty for the identity, ``(z0,)`` with ``|z0| < 1``
    for elliptic maps, ``(w,)`` with ``|w| = 1`` for parabolic maps, and
    ``(attracting, repelling)`` on the circle for hyperbolic maps.
    ``multiplier`` is the derivative at the first listed fixed point
    (unimodular for elliptic, 1 for parabolic, in (0,1) for hyperbolic).
    ``orientation`` distinguishes the two parabolic half-turn directions and
    is NOT_APPLICABLE otherwise.
    """

    kind: Kind
    fixed_points: tuple
    multiplier: complex
    orientation: Orientation = Orientation.NOT_APPLICABLE


@dataclass(frozen=True)
class CanonicalPair:
    """Canonical representative ``kappa`` and conjugator ``eta``.

    Satisfies ``phi = eta o kappa o eta^{-1}`` pointwise.  ``kappa`` is a
    rotation about 0 (elliptic), one of the two standard parabolic maps
    fixing 1 (parabolic), or ``(z - r)/(1 - r z)`` with ``0 < r < 1``
    (hyperbolic, attracting fixed point -1).
    """

    kappa: DiscAutomorphism
    eta: DiscAutomorphism


# ---------------------------------------------------------------------------
# constructors


def identity() -> DiscAutomorphism:
    """The identity automorphism ``e``."""
    return DiscAutomorphism(1.0, 0.0)


def rotation(lam: complex) -> DiscAutomorphism:
    """Rotation ``z -> lam z`` about the origin (``|lam| = 1``)."""
    return DiscAutomorphism(lam, 0.0)


def standard_hyperbolic(r: float) -> DiscAutomorphism:
    """The self-map ``z -> (z - r)/(1 - r z)`` of the disc, ``-1 < r < 1``.

    For ``r != 0`` it is hyperbolic with fixed points ±1; for ``r > 0``
    the attracting one is -1 with multiplier ``(1 - r)/(1 + r)``.
    """
    r = float(r)
    if not abs(r) < 1.0:
        raise DomainError("standard hyperbolic parameter must satisfy |r| < 1")
    return DiscAutomorphism(1.0, r)


def parabolic_fixing_one(c: complex) -> DiscAutomorphism:
    """Parabolic automorphism ``z -> (1 + c - 2z)/(2c - (1 + c) z)``.

    ``c`` ranges over the unit circle minus ±1; the fixed point is 1 for
    every ``c``.  In zero/phase form this is ``lam = -1/c, a = (1 + c)/2``.
    The two orientations are reached by ``Im c > 0`` and ``Im c < 0``.
    """
    c = _as_complex(c)
    if abs(abs(c) - 1.0) > 1e-9 or abs(c - 1.0) < 1e-9 or abs(c + 1.0) < 1e-9:
        raise DomainError("parameter must lie on the unit circle, away from ±1")
    c = c / abs(c)
    return DiscAutomorphism(-1.0 / c, (1.0 + c) / 2.0)


def disc_translation(c: complex) -> DiscAutomorphism:
    """The automorphism ``z -> (z + c)/(1 + conj(c) z)`` taking 0 to ``c``."""
    return DiscAutomorphism(1.0, -_as_complex(c))


# ---------------------------------------------------------------------------
# group operations


def eval_auto(phi: DiscAutomorphism, z: complex) -> complex:
    """Evaluate ``phi`` at ``z`` (closed disc plus a 1e-12 shell)."""
    z = _as_complex(z)
    if not abs(z) <= 1.0 + EVAL_SLACK:
        raise DomainError(f"evaluation point must satisfy |z| <= 1 + 1e-12, got |z| = {abs(z)}")
    den = 1.0 - phi.a.conjugate() * z
    if den == 0:
        raise PoleError("evaluation at the pole of the automorphism")
    return phi.lam * (z - phi.a) / den


def compose(outer: DiscAutomorphism, inner: DiscAutomorphism) -> DiscAutomorphism:
    """The composition ``outer o inner`` (apply ``inner`` first)."""
    m = outer.matrix() @ inner.matrix()
    return m.renormalized().to_automorphism()


def inverse(phi: DiscAutomorphism) -> DiscAutomorphism:
    """Group inverse: ``(lam, a) -> (conj(lam), -lam a)``."""
    return DiscAutomorphism(phi.lam.conjugate(), -phi.lam * phi.a)


def iterate(phi: DiscAutomorphism, n: int) -> DiscAutomorphism:
    """The n-fold composition of ``phi`` (negative ``n`` iterates the inverse).

    Uses binary powering on the SU(1,1) representative with renormalization
    after every squaring, so the cost is O(log |n|) and the trace
    normalization cannot drift.  Iterates of non-elliptic maps converge to a
    boundary point; once the result is within 1e-14 of the boundary it is no
    longer representable and the constructor raises ``DomainError``.
    """
    n = int(n)
    if abs(n) > MAX_ITERATE:
        raise DomainError(f"iteration count limited to |n| <= {MAX_ITERATE}")
    if n == 0:
        return identity()
    base = (phi if n > 0 else inverse(phi)).matrix()
    k = abs(n)
    acc: Optional[MoebiusMatrix] = None
    while k:
        if k & 1:
            acc = base if acc is None else (acc @ base).renormalized()
        k >>= 1
        if k:
            base = (base @ base).renormalized()
    assert acc is not None
    return acc.to_automorphism()


# ---------------------------------------------------------------------------
# classification

#: cross-check slack: how far a computed boundary fixed point may sit from
#: the unit circle before the trace verdict is declared inconsistent
_HYPERBOLIC_CIRCLE_SLACK = 1e-6
_PARABOLIC_ROOT_SLACK = 1e-4


def _derivative(phi: DiscAutomorphism, z: complex) -> complex:
    den = 1.0 - phi.a.conjugate() * z
    return phi.lam * (1.0 - abs(phi.a) ** 2) / (den * den)


def _fixed_point_roots(phi: DiscAutomorphism):
    """Roots of ``conj(a) z^2 + (lam - 1) z - lam a = 0`` (requires a != 0)."""
    A = phi.a.conjugate()
    B = phi.lam - 1.0
    C = -phi.lam * phi.a
    disc = B * B - 4.0 * A * C
    sq = cmath.sqrt(disc)
    # pick the sign that avoids cancellation
    if abs(B + sq) >= abs(B - sq):
        q = -(B + sq) / 2.0
    else:
        q = -(B - sq) / 2.0
    return q / A, C / q


def _cayley_at(w: complex):
    """Matrix of ``C_w(z) = i (conj(w) z + 1)/(1 - conj(w) z)``: disc -> upper half plane, w -> inf."""
    wb = w.conjugate()
    return (1j * wb, 1j, -wb, 1.0)


def _mat_mul(m, n):
    return (
        m[0] * n[0] + m[1] * n[2],
        m[0] * n[1] + m[1] * n[3],
        m[2] * n[0] + m[3] * n[2],
        m[2] * n[1] + m[3] * n[3],
    )


def _mat_inv(m):
    return (m[3], -m[1], -m[2], m[0])


def _mat_apply(m, z):
    den = m[2] * z + m[3]
    if den == 0:
        raise PoleError("general Moebius matrix evaluated at its pole")
    return (m[0] * z + m[1]) / den


def _disc_from_matrix(m) -> DiscAutomorphism:
    """Extract a disc automorphism from a general matrix that preserves D.

    A GL(2,C) matrix preserving the disc is a scalar multiple of an SU(1,1)
    matrix; divide out ``sqrt(det)`` and check the conjugation structure.
    """
    det = m[0] * m[3] - m[1] * m[2]
    if det == 0:
        raise DomainError("singular matrix")
    c = cmath.sqrt(det)
    alpha, beta = m[0] / c, m[1] / c
    scale = 1.0 + abs(alpha) + abs(beta)
    if (
        abs(m[2] / c - beta.conjugate()) > 1e-8 * scale
        or abs(m[3] / c - alpha.conjugate()) > 1e-8 * scale
    ):
        raise DomainError("matrix does not preserve the unit disc")
    return MoebiusMatrix(alpha, beta).renormalized().to_automorphism()


def _parabolic_translation_length(phi: DiscAutomorphism, w: complex) -> float:
    """Translation length of ``phi`` in the half-plane chart at its fixed point ``w``.

    ``C_w o phi o C_w^{-1}`` is ``zeta -> zeta + s`` with real ``s``; returns ``s``.
    """
    img = eval_auto(phi, -w)  # C_w^{-1}(0) = -w
    s = _mat_apply(_cayley_at(w), img)
    return s.real


def classify(phi: DiscAutomorphism, tol: float = CLASSIFY_TOL) -> Classification:
    """Classify ``phi`` by the SU(1,1) trace test, cross-checked on fixed points.

    With ``t = |alpha + conj(alpha)|``: elliptic if ``t < 2 - tol``, parabolic
    if ``|t - 2| <= tol``, hyperbolic if ``t > 2 + tol``.  The quantity
    ``t^2 - 4`` is computed in the cancellation-free product form
    ``4 (|beta| - |Im alpha|)(|beta| + |Im alpha|)``.  The verdict is checked
    against the fixed-point geometry (interior point vs. unit-circle points);
    genuine straddling inputs raise ``AmbiguousClassification``.
    """
    tol = float(tol)
    if not 1e-14 <= tol <= 1e-4:
        raise DomainError("classification tolerance must lie in [1e-14, 1e-4]")
    if phi.is_identity():
        return Classification(Kind.IDENTITY, (), 1.0 + 0.0j, Orientation.NOT_APPLICABLE)

    m = phi.matrix()
    t = 2.0 * abs(m.alpha.real)
    disc = 4.0 * (abs(m.beta) - abs(m.alpha.imag)) * (abs(m.beta) + abs(m.alpha.imag))
    band = tol * (t + 2.0)

    if abs(disc) <= band:
        kind = Kind.PARABOLIC
    elif disc < 0.0:
        kind = Kind.ELLIPTIC
    else:
        kind = Kind.HYPERBOLIC

    if phi.a == 0:
        # rotation about the origin: elliptic with fixed point 0
        if kind is not Kind.ELLIPTIC:
            raise AmbiguousClassification(
                "rotation within the parabolic trace band; increase resolution or lower tol"
            )
        mult = phi.lam
        return Classification(Kind.ELLIPTIC, (0.0 + 0.0j,), mult, Orientation.NOT_APPLICABLE)

    r1, r2 = _fixed_point_roots(phi)

    if kind is Kind.ELLIPTIC:
        inner = min((r1, r2), key=abs)
        if not abs(inner) < 1.0:
            raise AmbiguousClassification(
                "trace test says elliptic but no fixed point lies inside the disc"
            )
        mult = _derivative(phi, inner)
        mult = mult / abs(mult)  # unimodular by invariance; renormalize
        return Classification(Kind.ELLIPTIC, (inner,), mult, Orientation.NOT_APPLICABLE)

    if kind is Kind.PARABOLIC:
        gap = abs(r1 - r2)
        w = -(phi.lam - 1.0) / (2.0 * phi.a.conjugate())  # double root
        if gap > _PARABOLIC_ROOT_SLACK or abs(abs(w) - 1.0) > _PARABOLIC_ROOT_SLACK:
            raise AmbiguousClassification(
                "trace test says parabolic but the fixed points are not a double point on the circle"
            )
        w = w / abs(w)
        mult = _derivative(phi, w)
        s = _parabolic_translation_length(phi, w)
        if _PLUS_MEANS_POSITIVE_TRANSLATION:
            orient = Orientation.PLUS if s > 0 else Orientation.MINUS
        else:  # pragma: no cover - frozen convention
            orient = Orientation.MINUS if s > 0 else Orientation.PLUS
        return Classification(Kind.PARABOLIC, (w,), mult, orient)

    # hyperbolic
    if max(abs(abs(r1) - 1.0), abs(abs(r2) - 1.0)) > _HYPERBOLIC_CIRCLE_SLACK:
        raise AmbiguousClassification(
            "trace test says hyperbolic but the fixed points do not sit on the circle"
        )
    w1, w2 = r1 / abs(r1), r2 / abs(r2)
    m1 = _derivative(phi, w1)
    m2 = _derivative(phi, w2)
    # boundary derivatives of a hyperbolic automorphism are real and positive
    if abs(m1) > abs(m2):
        w1, w2 = w2, w1
        m1, m2 = m2, m1
    mult = abs(m1)
    if not mult < 1.0:
        raise AmbiguousClassification("hyperbolic multiplier check failed")
    return Classification(Kind.HYPERBOLIC, (w1, w2), mult, Orientation.NOT_APPLICABLE)


# ---------------------------------------------------------------------------
# canonical forms and conjugacy


def _boundary_pair_to_halfplane(w1: complex, w2: complex):
    """Matrix of a Moebius map D -> upper half plane with ``w1 -> 0, w2 -> inf``.

    The map is ``z -> tau (z - w1)/(z - w2)`` where the unimodular ``tau``
    rotates the image line of the unit circle onto the real axis, with the
    sign fixed so the disc lands in the upper half plane.
    """
    tau = cmath.sqrt(w1.conjugate() * w2)
    img = tau * w1 / w2  # image of 0 with the trial sign
    if img.imag <= 0:
        tau = -tau
    return (tau, -tau * w1, 1.0, -w2)


def canonical_pair(phi: DiscAutomorphism, tol: float = CLASSIFY_TOL) -> CanonicalPair:
    """Canonical form ``kappa`` and conjugator ``eta`` with ``phi = eta o kappa o eta^{-1}``.

    Elliptic maps conjugate to the rotation by their multiplier via the
    translation taking 0 to the fixed point.  Hyperbolic maps conjugate to
    ``(z - r)/(1 - r z)`` with ``r = (1 - s)/(1 + s)`` (``s`` the attracting
    multiplier) via half-plane charts sending the fixed points to 0 and inf.
    Parabolic maps conjugate to the standard parabolic fixing 1 of the same
    orientation via half-plane charts and a dilation matching the
    translation lengths.  Raises ``IdentityError`` for the identity.
    """
    cls = classify(phi, tol)
    if cls.kind is Kind.IDENTITY:
        raise IdentityError("the identity has no canonical conjugacy representative")

    if cls.kind is Kind.ELLIPTIC:
        z0 = cls.fixed_points[0]
        kappa = rotation(cls.multiplier)
        eta = disc_translation(z0)
        return CanonicalPair(kappa, eta)

    if cls.kind is Kind.HYPERBOLIC:
        s = float(cls.multiplier.real if isinstance(cls.multiplier, complex) else cls.multiplier)
        r = (1.0 - s) / (1.0 + s)
        kappa = standard_hyperbolic(r)
        b_phi = _boundary_pair_to_halfplane(*cls.fixed_points)
        b_kappa = _boundary_pair_to_halfplane(-1.0 + 0.0j, 1.0 + 0.0j)
        eta = _disc_from_matrix(_mat_mul(_mat_inv(b_phi), b_kappa))
        return CanonicalPair(kappa, eta)

    # parabolic
    w = cls.fixed_points[0]
    s_phi = _parabolic_translation_length(phi, w)
    if cls.orientation is Orientation.PLUS:
        kappa = parabolic_fixing_one(1j)
        s_kappa = 2.0
    else:
        kappa = parabolic_fixing_one(-1j)
        s_kappa = -2.0
    scale = s_phi / s_kappa  # positive: same orientation
    c_w = _cayley_at(w)
    c_one = _cayley_at(1.0 + 0.0j)
    dilation = (complex(scale), 0.0 + 0.0j, 0.0 + 0.0j, 1.0 + 0.0j)
    eta = _disc_from_matrix(_mat_mul(_mat_inv(c_w), _mat_mul(dilation, c_one)))
    return CanonicalPair(kappa, eta)


def find_conjugator(
    phi: DiscAutomorphism, psi: DiscAutomorphism, tol: float = CLASSIFY_TOL
) -> Optional[DiscAutomorphism]:
    """An ``eta`` with ``psi = eta o phi o eta^{-1}``, or None if none exists.

    Conjugacy requires equal kinds and equal class invariants within ``tol``:
    the multiplier for elliptic (as a complex number - a rotation and its
    conjugate rotation are NOT conjugate inside the group, see
    ``are_conjugate``), the attracting multiplier for hyperbolic, and the
    orientation for parabolic.  The witness is assembled from the canonical
    conjugators of both maps, so the residual is bounded by ~10x the
    invariant mismatch.  Identity inputs raise ``IdentityError``.
    """
    c1 = classify(phi, tol)
    c2 = classify(psi, tol)
    if c1.kind is Kind.IDENTITY or c2.kind is Kind.IDENTITY:
        raise IdentityError("conjugators of the identity are not meaningful here")
    if c1.kind is not c2.kind:
        return None
    if c1.kind is Kind.ELLIPTIC and abs(c1.multiplier - c2.multiplier) > tol:
        return None
    if c1.kind is Kind.HYPERBOLIC and abs(c1.multiplier - c2.multiplier) > tol:
        return None
    if c1.kind is Kind.PARABOLIC and c1.orientation is not c2.orientation:
        return None
    p1 = canonical_pair(phi, tol)
    p2 = canonical_pair(psi, tol)
    # phi = e1 k e1^{-1}, psi = e2 k e2^{-1}  =>  psi = (e2 e1^{-1}) phi (e2 e1^{-1})^{-1}
    return compose(p2.eta, inverse(p1.eta))


def are_conjugate(
    phi: DiscAutomorphism,
    psi: DiscAutomorphism,
    tol: float = CLASSIFY_TOL,
    up_to_conjugate_multiplier: bool = False,
) -> bool:
    """Whether ``phi`` and ``psi`` lie in the same conjugacy class.

    With ``up_to_conjugate_multiplier=True``, elliptic maps whose multipliers
    are complex conjugates of each other are also accepted.  No holomorphic
    witness exists in that widened sense (it corresponds to conjugation by a
    reflection), which is why the flag lives on this predicate and not on
    ``find_conjugator``.
    """
    c1 = classify(phi, tol)
    c2 = classify(psi, tol)
    if c1.kind is not c2.kind:
        return False
    if c1.kind is Kind.IDENTITY:
        return True
    if c1.kind is Kind.ELLIPTIC:
        if abs(c1.multiplier - c2.multiplier) <= tol:
            return True
        if up_to_conjugate_multiplier and abs(c1.multiplier - c2.multiplier.conjugate()) <= tol:
            return True
        return False
    if c1.kind is Kind.HYPERBOLIC:
        return abs(c1.multiplier - c2.multiplier) <= tol
    return c1.orientation is c2.orientation


# ---------------------------------------------------------------------------
# commutants


def commutant_element(phi: DiscAutomorphism, t: float, tol: float = CLASSIFY_TOL) -> DiscAutomorphism:
    """The element at parameter ``t`` of the one-parameter commutant of ``phi``.

    The commutant of a non-identity automorphism is the one-parameter group
    of all automorphisms sharing its fixed-point set: conjugated rotations
    (elliptic, ``t`` = rotation angle), conjugated horocycle translations
    (parabolic, ``t`` = translation length), or conjugated axis translations
    (hyperbolic, ``t`` = hyperbolic displacement, i.e. the canonical
    parameter is ``tanh t``).  ``commutant_element(phi, t + t')`` equals the
    composition of the elements at ``t`` and ``t'``; ``t = 0`` gives the
    identity.  Raises ``IdentityError`` for the identity, whose commutant is
    the whole group.
    """
    cls = classify(phi, tol)
    if cls.kind is Kind.IDENTITY:
        raise IdentityError("the commutant of the identity is the whole group")
    t = float(t)
    if t == 0.0:
        return identity()

    if cls.kind is Kind.ELLIPTIC:
        z0 = cls.fixed_points[0]
        tau = disc_translation(z0)
        return compose(tau, compose(rotation(cmath.exp(1j * t)), inverse(tau)))

    if cls.kind is Kind.HYPERBOLIC:
        b = _boundary_pair_to_halfplane(*cls.fixed_points)
        dil = (complex(math.exp(-2.0 * t)), 0.0 + 0.0j, 0.0 + 0.0j, 1.0 + 0.0j)
        return _disc_from_matrix(_mat_mul(_mat_inv(b), _mat_mul(dil, b)))

    w = cls.fixed_points[0]
    c_w = _cayley_at(w)
    trans = (1.0 + 0.0j, complex(t), 0.0 + 0.0j, 1.0 + 0.0j)
    return _disc_from_matrix(_mat_mul(_mat_inv(c_w), _mat_mul(trans, c_w)))


def boundary_points(n: int) -> list:
    """``n`` equally spaced points on the unit circle."""
    return [cmath.exp(2j * math.pi * k / n) for k in range(n)]


def circle_points(radius: float, n: int) -> list:
    """``n`` equally spaced points on the circle of the given radius."""
    return [radius * z for z in boundary_points(n)]


_COMMUTE_POINTS: Sequence[complex] = tuple(circle_points(0.5, 12) + boundary_points(12))


def pointwise_distance(
    f: DiscAutomorphism, g: DiscAutomorphism, points: Sequence[complex] = _COMMUTE_POINTS
) -> float:
    """``max |f(z) - g(z)|`` over the given evaluation points."""
    return max(abs(eval_auto(f, z) - eval_auto(g, z)) for z in points)


def commutes(phi: DiscAutomorphism, sigma: DiscAutomorphism, tol: float = 1e-10) -> bool:
    """Whether ``phi o sigma = sigma o phi`` pointwise within ``tol``."""
    return pointwise_distance(compose(phi, sigma), compose(sigma, phi)) <= tol
