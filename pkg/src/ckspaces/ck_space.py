"""Validated spaces of anticommuting orthogonal skew matrices, the
norm-multiplicative bilinear families they induce, and conversions between
the two presentations.

A CKSpace carries an ordered basis (u_1, ..., u_l) of 2n x 2n matrices with
u orthogonal, skew, u^2 = -I and u_i u_j + u_j u_i = 0 for i != j; each u
is then a unit-length rotation field x -> ux on the unit sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, ShapeError, ValidationError
from .exact import (Lcg, Matrix, RowSpan, matrix_from_lists, matrix_to_lists,
                    span_basis)


@dataclass(frozen=True)
class CKSpace:
    two_n: int
    l: int
    basis: tuple[Matrix, ...]

    def conjugated(self, q: Matrix) -> "CKSpace":
        """Basis-wise q u q^T.  The caller guarantees q is orthogonal, which
        preserves every defining condition, so no re-validation happens."""
        qt = q.transpose()
        return CKSpace(self.two_n, self.l,
                       tuple(q @ u @ qt for u in self.basis))

    def permuted(self, order: Sequence[int]) -> "CKSpace":
        """Same space with the basis reordered."""
        if sorted(order) != list(range(self.l)):
            raise DomainError("order must be a permutation of the basis indices")
        return CKSpace(self.two_n, self.l, tuple(self.basis[i] for i in order))


@dataclass(frozen=True)
class HurwitzFamily:
    """Matrices (A_1, ..., A_p) meant to define a bilinear form
    z(x, y) = (sum x_j A_j) y with |z| = |x| |y|; checked by hurwitz_check,
    not by construction."""

    two_n: int
    p: int
    matrices: tuple[Matrix, ...]


@dataclass(frozen=True)
class HurwitzReport:
    passed: bool
    criterion_ok: bool
    trials: int
    counterexample: tuple[tuple[Fraction, ...], tuple[Fraction, ...]] | None


def validate(candidate: Sequence[Matrix]) -> CKSpace:
    """Check the defining conditions and build the space, or raise a
    ValidationError naming the first violated condition and the offending
    basis index (pair).

    Condition order: even_dimension, orthogonality, skewness, square,
    anticommutation, independence.
    """
    mats = list(candidate)
    if not mats:
        raise DomainError("candidate basis is empty")
    n = mats[0].rows
    if any(m.shape != (n, n) for m in mats):
        raise ShapeError("all basis matrices must be square of equal size")
    if n % 2 != 0:
        raise ValidationError("even_dimension")
    eye = Matrix.identity(n)
    for i, u in enumerate(mats):
        if u.transpose() @ u != eye:
            raise ValidationError("orthogonality", (i,))
    for i, u in enumerate(mats):
        if not u.is_skew():
            raise ValidationError("skewness", (i,))
    for i, u in enumerate(mats):
        if u @ u != -eye:
            raise ValidationError("square", (i,))
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if mats[i] @ mats[j] != -(mats[j] @ mats[i]):
                raise ValidationError("anticommutation", (i, j))
    span = RowSpan((n, n))
    for i, u in enumerate(mats):
        if not span.add(u):
            raise ValidationError("independence", (i,))
    return CKSpace(two_n=n, l=len(mats), basis=tuple(mats))


def unit_inner_products(space: CKSpace) -> Matrix:
    """Gram matrix of the fields x -> u_i x, constant over the sphere.

    The symmetric part of u_i^T u_j is delta_ij * I as an exact matrix
    identity, so the Gram matrix is the l x l identity; the identity is
    re-verified here rather than assumed.
    """
    eye = Matrix.identity(space.two_n)
    zero = Matrix.zeros(space.two_n, space.two_n)
    gram = []
    for i, ui in enumerate(space.basis):
        row = []
        for j, uj in enumerate(space.basis):
            sym = ui.transpose() @ uj + uj.transpose() @ ui
            if i == j:
                if sym != 2 * eye:
                    raise ValidationError("orthogonality", (i,))
            elif sym != zero:
                raise ValidationError("anticommutation", (i, j))
            row.append(Fraction(1 if i == j else 0))
        gram.append(row)
    return Matrix(gram)


def field_at(u: Matrix, x: Sequence) -> tuple[Fraction, ...]:
    """Value of the rotation field at x: the vector u x."""
    vec = tuple(Fraction(c) for c in x)
    if len(vec) != u.cols:
        raise ShapeError(f"vector has length {len(vec)}, matrix has {u.cols} columns")
    return tuple(sum((row[k] * vec[k] for k in range(u.cols) if row[k]), Fraction(0))
                 for row in u.data)


def to_hurwitz(space: CKSpace) -> HurwitzFamily:
    """Append the identity: the family (u_1, ..., u_l, I) with p = l + 1."""
    return HurwitzFamily(two_n=space.two_n, p=space.l + 1,
                         matrices=space.basis + (Matrix.identity(space.two_n),))


def from_hurwitz(family: HurwitzFamily) -> CKSpace:
    """Right-translate by the last matrix and validate: B_j = A_j A_p^T."""
    if family.p < 2 or len(family.matrices) < 2:
        raise DomainError("a family with p >= 2 is required")
    last_t = family.matrices[-1].transpose()
    return validate([a @ last_t for a in family.matrices[:-1]])


def hurwitz_check(family: HurwitzFamily, trials: int = 100, seed: int = 0) -> HurwitzReport:
    """Check the norm-product identity |x|^2 |y|^2 = |z(x,y)|^2.

    Verifies the closed-form criterion A_i^T A_j + A_j^T A_i = 2 delta_ij I
    (equivalent to the identity holding for all x, y), then evaluates the
    identity on `trials` seeded random rational vector pairs, exactly.
    Numerators are drawn from [-100, 100] and denominators from [1, 100].
    """
    if trials < 1:
        raise DomainError("trials must be at least 1")
    mats = family.matrices
    n = family.two_n
    eye2 = 2 * Matrix.identity(n)
    zero = Matrix.zeros(n, n)
    criterion_ok = True
    for i in range(len(mats)):
        for j in range(i, len(mats)):
            s = mats[i].transpose() @ mats[j] + mats[j].transpose() @ mats[i]
            if s != (eye2 if i == j else zero):
                criterion_ok = False
                break
        if not criterion_ok:
            break
    rng = Lcg(seed)
    counterexample = None
    for _ in range(trials):
        x = rng.rational_vector(len(mats), 100, 100)
        y = rng.rational_vector(n, 100, 100)
        z = [Fraction(0)] * n
        for coeff, a in zip(x, mats):
            if coeff:
                ay = field_at(a, y)
                z = [acc + coeff * v for acc, v in zip(z, ay)]
        lhs = sum(c * c for c in x) * sum(c * c for c in y)
        rhs = sum(c * c for c in z)
        if lhs != rhs:
            counterexample = (x, y)
            break
    return HurwitzReport(passed=criterion_ok and counterexample is None,
                         criterion_ok=criterion_ok,
                         trials=trials,
                         counterexample=counterexample)


def space_to_doc(space: CKSpace) -> dict:
    """CKSpace interchange document: {"dim", "l", "basis"}."""
    return {
        "dim": space.two_n,
        "l": space.l,
        "basis": [matrix_to_lists(u) for u in space.basis],
    }


def parse_space_doc(doc) -> list[Matrix]:
    """Parse the interchange document into candidate matrices (unvalidated).

    Malformed structure raises DomainError; run validate() on the result to
    obtain a CKSpace or a condition-level diagnosis.
    """
    if not isinstance(doc, dict):
        raise DomainError("space document must be a JSON object")
    try:
        dim = doc["dim"]
        l = doc["l"]
        basis = doc["basis"]
    except KeyError as missing:
        raise DomainError(f"space document lacks key {missing}") from None
    if not isinstance(dim, int) or not isinstance(l, int):
        raise DomainError("dim and l must be integers")
    if not isinstance(basis, list) or len(basis) != l:
        raise DomainError("basis must be a list of l matrices")
    return [matrix_from_lists(rows, expect_shape=(dim, dim)) for rows in basis]
