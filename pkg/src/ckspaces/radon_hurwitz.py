"""Integer arithmetic of the Radon-Hurwitz function, irreducible module
dimensions, and equivalence-class counting."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ExistenceError


@dataclass(frozen=True)
class RhoDecomposition:
    """m = 2^(4*alpha + beta) * m_odd with beta in {0,1,2,3} and m_odd odd."""

    m: int
    alpha: int
    beta: int
    m_odd: int

    @property
    def rho(self) -> int:
        return 8 * self.alpha + 2 ** self.beta


def rho_decomposition(m: int) -> RhoDecomposition:
    if m < 1:
        raise DomainError("m must be a positive integer")
    v = 0
    odd = m
    while odd % 2 == 0:
        odd //= 2
        v += 1
    return RhoDecomposition(m=m, alpha=v // 4, beta=v % 4, m_odd=odd)


def rho(m: int) -> int:
    """Radon-Hurwitz number: 8*alpha + 2^beta for m = 2^(4a+b) * odd."""
    return rho_decomposition(m).rho


# beta as a function of l mod 8: the half-open dimension brackets
# (8a + 2^(b-1) - 1, 8a + 2^b - 1] tile the positive integers.
_BETA_OF_RESIDUE = (0, 1, 2, 2, 3, 3, 3, 3)


def n0(l: int) -> int:
    """Dimension of the irreducible module(s) carrying l anticommuting
    orthogonal complex structures: 2^(4*alpha + beta)."""
    if l < 1:
        raise DomainError("l must be a positive integer")
    alpha, r = divmod(l, 8)
    return 2 ** (4 * alpha + _BETA_OF_RESIDUE[r])


def max_ck_dim(two_n: int) -> int:
    """Largest l admitting an l-dimensional constant-length Killing space
    on the sphere of dimension two_n - 1; equals rho(two_n) - 1."""
    if two_n < 2 or two_n % 2 != 0:
        raise DomainError("ambient dimension must be even and at least 2")
    return rho(two_n) - 1


def _check_range(two_n: int, l: int) -> None:
    top = max_ck_dim(two_n)
    if not 1 <= l <= top:
        raise ExistenceError(
            f"no CK_{l} in so({two_n}): l must satisfy 1 <= l <= {top}")


def count_o_classes(two_n: int, l: int) -> int:
    """Number of O(2n)-equivalence classes of CK_l spaces in so(2n).

    All spaces are equivalent unless l = 4k+3, where the unordered
    multiplicity split of the two irreducible module types gives
    floor(n / n0(l)) + 1 classes.
    """
    _check_range(two_n, l)
    if l % 4 != 3:
        return 1
    return (two_n // 2) // n0(l) + 1


def count_so_classes(two_n: int, l: int) -> int:
    """Number of SO(2n)-equivalence classes: the O(2n) count, doubled when
    4 divides 2n (orientation splits every class in two)."""
    base = count_o_classes(two_n, l)
    return base * 2 if two_n % 4 == 0 else base
