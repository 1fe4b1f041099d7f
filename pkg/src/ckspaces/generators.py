"""Constructors for anticommuting orthogonal skew-symmetric families.

Base families are hardcoded integer tables:

* l = 1: the 2x2 rotation generator.
* l = 2, 3: prefixes of the 4x4 quaternion left-multiplication family.
* l = 4..7: prefixes of the 8x8 family obtained by Cayley-Dickson doubling
  of the quaternion family (left multiplication by the seven imaginary
  units of the doubled algebra, written in paired 4-blocks).

Two verified rules extend the tables.  The doubling rule turns a family
{J_i} on dimension d into {J_i (x) diag(1,-1)} + {I_d (x) R} on dimension 2d
(R the rotation generator); it is used for 7 -> 8, where it lands on the
irreducible dimension.  The rank-8 periodicity rule multiplies dimensions
by 16: with {G_j} the l = 8 family and W = G_1...G_8 (symmetric, W^2 = I,
anticommuting with each G_j), the l + 8 family on 16d is
{J_i (x) W} + {I_d (x) G_j}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, ExistenceError
from .exact import Matrix, kron
from .radon_hurwitz import max_ck_dim, n0

_ROTATION = ((0, -1), (1, 0))

_QUATERNION = (
    ((0, 0, 0, -1), (0, 0, -1, 0), (0, 1, 0, 0), (1, 0, 0, 0)),
    ((0, 0, -1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, -1, 0, 0)),
    ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0)),
)

_DOUBLED = (
    ((0, 0, 0, -1, 0, 0, 0, 0), (0, 0, -1, 0, 0, 0, 0, 0),
     (0, 1, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0),
     (0, 0, 0, 0, 0, 0, 0, -1), (0, 0, 0, 0, 0, 0, 1, 0),
     (0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, 0, 0)),
    ((0, 0, -1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0),
     (1, 0, 0, 0, 0, 0, 0, 0), (0, -1, 0, 0, 0, 0, 0, 0),
     (0, 0, 0, 0, 0, 0, -1, 0), (0, 0, 0, 0, 0, 0, 0, -1),
     (0, 0, 0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0, 0)),
    ((0, -1, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0),
     (0, 0, 0, -1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0, 0),
     (0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, 0, 0),
     (0, 0, 0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 0, -1, 0)),
    ((0, 0, 0, 0, -1, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 0, 0, 1),
     (1, 0, 0, 0, 0, 0, 0, 0), (0, -1, 0, 0, 0, 0, 0, 0),
     (0, 0, -1, 0, 0, 0, 0, 0), (0, 0, 0, -1, 0, 0, 0, 0)),
    ((0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 0, -1, 0, 0, 0),
     (0, 0, 0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 0, -1, 0),
     (0, 1, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0),
     (0, 0, 0, 1, 0, 0, 0, 0), (0, 0, -1, 0, 0, 0, 0, 0)),
    ((0, 0, 0, 0, 0, 0, -1, 0), (0, 0, 0, 0, 0, 0, 0, -1),
     (0, 0, 0, 0, -1, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, 1, 0, 0, 0, 0, 0), (0, 0, 0, -1, 0, 0, 0, 0),
     (1, 0, 0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 0)),
    ((0, 0, 0, 0, 0, 0, 0, -1), (0, 0, 0, 0, 0, 0, 1, 0),
     (0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 0, -1, 0, 0, 0),
     (0, 0, 0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0, 0),
     (0, -1, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0)),
)


class Variant(enum.Enum):
    """Which of the two inequivalent irreducible module types to build.

    Only meaningful for l = 4k+3, where the family's ordered product is a
    scalar +-I and negating every generator swaps the two types.  PLUS is
    whatever the construction yields; MINUS is its generator-wise negation.
    The labels carry no meaning across different l.
    """

    PLUS = "plus"
    MINUS = "minus"
    NONE = "none"


@dataclass(frozen=True)
class IrreducibleFamily:
    l: int
    dim: int
    generators: tuple[Matrix, ...]
    variant: Variant


@dataclass(frozen=True)
class ModuleSpec:
    """Block-diagonal construction request: mult_plus copies of the PLUS
    irreducible family followed by mult_minus copies of MINUS."""

    l: int
    two_n: int
    mult_plus: int
    mult_minus: int = 0


def _double(family: tuple[Matrix, ...]) -> tuple[Matrix, ...]:
    d = family[0].rows
    sign = Matrix(((1, 0), (0, -1)))
    rot = Matrix(_ROTATION)
    return tuple(kron(j, sign) for j in family) + (kron(Matrix.identity(d), rot),)


def _periodicity_step(family: tuple[Matrix, ...],
                      rank8: tuple[Matrix, ...]) -> tuple[Matrix, ...]:
    w = rank8[0]
    for g in rank8[1:]:
        w = w @ g
    eye = Matrix.identity(family[0].rows)
    return tuple(kron(j, w) for j in family) + tuple(kron(eye, g) for g in rank8)


@lru_cache(maxsize=None)
def _plus_family(l: int) -> tuple[Matrix, ...]:
    if l == 1:
        gens: tuple[Matrix, ...] = (Matrix(_ROTATION),)
    elif l <= 3:
        gens = tuple(Matrix(t) for t in _QUATERNION[:l])
    elif l <= 7:
        gens = tuple(Matrix(t) for t in _DOUBLED[:l])
    elif l == 8:
        gens = _double(_plus_family(7))
    else:
        gens = _periodicity_step(_plus_family(l - 8), _plus_family(8))
    assert gens[0].rows == n0(l)
    return gens


def irreducible_generators(l: int, variant: Variant = Variant.NONE) -> IrreducibleFamily:
    """The l-generator family on the irreducible dimension n0(l).

    A family on dimension n0(l) is automatically irreducible, since every
    module dimension is a multiple of n0(l); prefixes of anticommuting
    families stay anticommuting.
    """
    if l < 1:
        raise DomainError("l must be a positive integer")
    if (variant == Variant.NONE) != (l % 4 != 3):
        raise DomainError(
            f"variant {variant.value} does not apply to l = {l}: "
            "PLUS/MINUS exist exactly when l = 4k+3")
    gens = _plus_family(l)
    if variant == Variant.MINUS:
        gens = tuple(-g for g in gens)
    return IrreducibleFamily(l=l, dim=gens[0].rows, generators=gens, variant=variant)


def module_generators(spec: ModuleSpec) -> list[Matrix]:
    """Block-diagonal generator family with the prescribed multiplicities."""
    l, two_n = spec.l, spec.two_n
    if l < 1:
        raise DomainError("l must be a positive integer")
    if two_n < 2 or two_n % 2 != 0:
        raise DomainError("ambient dimension must be even and at least 2")
    if l > max_ck_dim(two_n):
        raise ExistenceError(
            f"no CK_{l} in so({two_n}): maximal dimension is {max_ck_dim(two_n)}")
    if spec.mult_plus < 0 or spec.mult_minus < 0:
        raise DomainError("multiplicities must be nonnegative")
    if l % 4 != 3 and spec.mult_minus != 0:
        raise DomainError(f"l = {l} has a single module type; mult_minus must be 0")
    if (spec.mult_plus + spec.mult_minus) * n0(l) != two_n:
        raise DomainError(
            f"multiplicities ({spec.mult_plus}, {spec.mult_minus}) do not fill "
            f"dimension {two_n} with blocks of size {n0(l)}")
    plus = _plus_family(l)
    blocks_per_gen = []
    for g in plus:
        blocks_per_gen.append([g] * spec.mult_plus + [-g] * spec.mult_minus)
    return [Matrix.block_diag(blocks) for blocks in blocks_per_gen]


def admissible_splits(two_n: int, l: int) -> list[ModuleSpec]:
    """All unordered multiplicity splits for (two_n, l), largest plus-part
    first.  A single spec unless l = 4k+3."""
    total = two_n // n0(l)
    if l % 4 != 3:
        return [ModuleSpec(l=l, two_n=two_n, mult_plus=total)]
    return [ModuleSpec(l=l, two_n=two_n, mult_plus=total - k, mult_minus=k)
            for k in range(total // 2 + 1)]
