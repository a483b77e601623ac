"""Bass-Heller-Swan splitting and the groups built from it.

``K_q(R[Z]) = K_q(R) (+) K_{q-1}(R) (+) NK_q(R)^2``.  The endomorphism
induced by multiplication by ``n`` on ``Z`` is the identity on ``K_q``,
multiplication by ``n`` on ``K_{q-1}`` and an undetermined (Frobenius type)
map on the Nil part, so anything depending on the latter is carried as a
:class:`~dihedral_bredon.abelian.Bounded` value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import ZERO, AbelianGroup, Bounded, GroupValue, bounded, countable_sum, direct_sum, n_torsion
from .ktheory import KTheoryProfile, get_k, get_nk
from .snf import IntMatrix, ker_coker_with_symbolic


@dataclass(frozen=True)
class BhsDecomposition:
    kq: GroupValue
    kq_minus_1: GroupValue
    nil_pair: GroupValue

    @property
    def total(self) -> GroupValue:
        return direct_sum(self.kq, self.kq_minus_1, self.nil_pair)


@dataclass(frozen=True)
class IndKernel:
    """Kernel of ``ind_n`` on ``K_q(R[Z])``: ``t1 (+) t2``."""

    t1: GroupValue
    t2: GroupValue
    n: int

    @property
    def total(self) -> GroupValue:
        return direct_sum(self.t1, self.t2)


def k_of_laurent(profile: KTheoryProfile, q: int) -> BhsDecomposition:
    return BhsDecomposition(
        get_k(profile, q), get_k(profile, q - 1), countable_sum(get_nk(profile, q), 2)
    )


def _upper(v: GroupValue) -> AbelianGroup:
    return v.upper if isinstance(v, Bounded) else v


def ind_kernel(profile: KTheoryProfile, q: int, n: int) -> IndKernel:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    t1 = n_torsion(get_k(profile, q - 1), n)
    nil = countable_sum(_upper(get_nk(profile, q)), 2)
    return IndKernel(t1, bounded(ZERO, n_torsion(nil, n)), n)


def n_q_class_term(profile: KTheoryProfile, q: int) -> GroupValue:
    """``N_q = K_{q-1}(R) (+) NK_q(R)^2``, the part of ``K_q(R[Z])`` beyond ``K_q(R)``."""
    return direct_sum(get_k(profile, q - 1), countable_sum(get_nk(profile, q), 2))


def apply_matrix(m: IntMatrix, value: GroupValue, cols: int | None = None
                 ) -> tuple[GroupValue, GroupValue]:
    """Kernel and cokernel of ``m`` on powers of ``value``; bounds are mapped endpoint-wise."""
    if isinstance(value, Bounded):
        lo = ker_coker_with_symbolic(m, value.lower, cols)
        up = ker_coker_with_symbolic(m, value.upper, cols)
        return bounded(lo[0], up[0]), bounded(lo[1], up[1])
    return ker_coker_with_symbolic(m, value, cols)


def coprime_pair_coker(profile: KTheoryProfile, q: int, n: int) -> GroupValue:
    """Cokernel of ``x -> (2x, nx)`` on ``K_{q-1}(R)``."""
    return apply_matrix([[2], [n]], get_k(profile, q - 1))[1]


def _check_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"C(K_q) is defined for odd n >= 3, got {n}")


def big_c_bar(profile: KTheoryProfile, q: int, n: int) -> GroupValue:
    _check_odd(n)
    nil4 = countable_sum(_upper(get_nk(profile, q)), 4)
    return direct_sum(coprime_pair_coker(profile, q, n), bounded(ZERO, nil4))


def big_c(profile: KTheoryProfile, q: int, n: int) -> GroupValue:
    """Cokernel of ``(ind_2, ind_n)`` on ``K_q(R[Z])``; Nil part only bounded."""
    return direct_sum(get_k(profile, q), big_c_bar(profile, q, n))
