"""Power sums, elementary symmetric polynomials, and the Newton recursions.

For a multiset {x_1, ..., x_n} write p_k = sum_i x_i^k and e_k for the k-th
elementary symmetric polynomial (e_0 = 1, e_k = 0 for k > n).  The two are
linked by

    k*e_k = sum_{i=1..k}   (-1)^(i-1) e_{k-i} p_i      (1 <= k <= n)
    0     = sum_{i=k-n..k} (-1)^(i-1) e_{k-i} p_i      (k >= n, with p_0 = n)

which lets either family be computed from the other without touching the
points themselves.  A consequence used throughout this package: when
2m-1 <= n, the odd power sums p_1, p_3, ..., p_{2m-1} vanish iff the odd
elementary symmetric polynomials of the same indices do.

All kernels are generic over exact (int/Fraction) and approximate (float)
scalars; exact inputs yield exact outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DomainError,
    HypothesisError,
    InternalDefectError,
    PreconditionError,
)
from .scalars import DEFAULT_TOL, Scalar, all_exact


@dataclass(frozen=True)
class PowerSumVector:
    """Power sums p_1 .. p_K of some multiset; ``entries[k-1]`` is p_k."""

    entries: tuple[Scalar, ...]
    exact: bool = True

    def __len__(self) -> int:
        return len(self.entries)

    def p(self, k: int) -> Scalar:
        if not 1 <= k <= len(self.entries):
            raise DomainError(f"p_{k} not available (have p_1..p_{len(self.entries)})")
        return self.entries[k - 1]


@dataclass(frozen=True)
class ElemSymVector:
    """Elementary symmetric values e_0 .. e_K; ``entries[k]`` is e_k."""

    entries: tuple[Scalar, ...]
    exact: bool = True

    @property
    def order(self) -> int:
        """Largest index K with e_K stored."""
        return len(self.entries) - 1

    def e(self, k: int) -> Scalar:
        if not 0 <= k <= self.order:
            raise DomainError(f"e_{k} not available (have e_0..e_{self.order})")
        return self.entries[k]


def power_sums(values: Sequence[Scalar], K: int) -> PowerSumVector:
    """Direct power sums p_1 .. p_K of a nonempty multiset."""
    vals = tuple(values)
    if not vals:
        raise DomainError("power sums of an empty multiset are undefined")
    if K < 1:
        raise DomainError("K must be a positive integer")
    entries = []
    powers = list(vals)
    for k in range(1, K + 1):
        if k > 1:
            powers = [pw * v for pw, v in zip(powers, vals)]
        entries.append(sum(powers))
    return PowerSumVector(tuple(entries), all_exact(vals))


def elementary_symmetric(values: Sequence[Scalar], K: int) -> ElemSymVector:
    """e_0 .. e_K by incremental expansion of prod (T - x_i).

    Entries with index above the multiset size come out exactly zero.
    """
    vals = tuple(values)
    if K < 1:
        raise DomainError("K must be a positive integer")
    e: list[Scalar] = [1] + [0] * K
    for v in vals:
        for j in range(K, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return ElemSymVector(tuple(e), all_exact(vals))


def newton_e_from_p(p: PowerSumVector, K: int) -> ElemSymVector:
    """e_1 .. e_K from power sums via k*e_k = sum (-1)^(i-1) e_{k-i} p_i.

    Valid for K up to the size of the originating multiset.
    """
    if K < 1:
        raise DomainError("K must be a positive integer")
    if len(p) < K:
        raise DomainError(f"need power sums through {K}, have {len(p)}")
    e: list[Scalar] = [1]
    for k in range(1, K + 1):
        acc: Scalar = 0
        for i in range(1, k + 1):
            term = e[k - i] * p.p(i)
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(Fraction(acc, k) if p.exact else acc / k)
    return ElemSymVector(tuple(e), p.exact)


def newton_p_from_e(e: ElemSymVector, n: int, K: int) -> PowerSumVector:
    """p_1 .. p_K of the n-element multiset determined by e.

    Uses the k <= n recursion while it applies, then the k > n variant in
    which e_j is zero for j > n.  Only e_0 .. e_{min(K, n)} are consulted.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    if K < 1:
        raise DomainError("K must be a positive integer")
    if e.order < min(K, n):
        raise DomainError(
            f"inconsistent e length: need entries through {min(K, n)}, have {e.order}"
        )

    def e_at(j: int) -> Scalar:
        return e.e(j) if j <= min(e.order, n) else 0

    p: list[Scalar] = [n]  # p_0 = n by convention
    for k in range(1, K + 1):
        if k <= n:
            acc: Scalar = 0
            for i in range(1, k):
                term = e_at(k - i) * p[i]
                acc = acc + term if i % 2 == 1 else acc - term
            rhs = k * e_at(k) - acc
            p.append(rhs if k % 2 == 1 else -rhs)
        else:
            acc = 0
            for i in range(k - n, k):
                term = e_at(k - i) * p[i]
                acc = acc + term if i % 2 == 1 else acc - term
            p.append(-acc if k % 2 == 1 else acc)
    return PowerSumVector(tuple(p[1:]), e.exact)


def power_scale(values: Sequence[Scalar], k: int) -> float:
    """Scale 1 + sum |x_i|^k used by approximate zero tests."""
    return 1.0 + float(sum(abs(float(v)) ** k for v in values))


def residual_is_zero(value: Scalar, exact: bool, scale: float, tol: float) -> bool:
    if exact:
        return value == 0
    return abs(value) <= tol * scale


@dataclass(frozen=True)
class OddEquivalence:
    odd_p_all_zero: bool
    odd_e_all_zero: bool


def odd_equivalence_check(
    values: Sequence[Scalar], m: int, tol: float = DEFAULT_TOL
) -> OddEquivalence:
    """Whether the odd power sums / odd elementary symmetric values through
    index 2m-1 all vanish.

    Requires 2m-1 <= n; under that hypothesis the two booleans always agree,
    so a mismatch in exact arithmetic is a defect.
    """
    vals = tuple(values)
    n = len(vals)
    if 2 * m - 1 > n:
        raise PreconditionError(f"requires 2m-1 <= n; got 2m-1={2 * m - 1} > n={n}")
    exact = all_exact(vals)
    p = power_sums(vals, 2 * m - 1)
    e = elementary_symmetric(vals, 2 * m - 1)
    odd = range(1, 2 * m, 2)
    p_zero = all(residual_is_zero(p.p(k), exact, power_scale(vals, k), tol) for k in odd)
    e_zero = all(residual_is_zero(e.e(k), exact, _elem_scale(vals, k), tol) for k in odd)
    if exact and p_zero != e_zero:
        raise InternalDefectError(
            "odd power sums and odd elementary symmetric values disagree "
            "under exact arithmetic"
        )
    return OddEquivalence(p_zero, e_zero)


def _elem_scale(values: Sequence[Scalar], k: int) -> float:
    abs_e = elementary_symmetric([abs(float(v)) for v in values], k)
    return 1.0 + float(abs_e.e(k))


def extend_odd_power_sums(
    values: Sequence[Scalar], m: int, K: int, tol: float = DEFAULT_TOL
) -> tuple[Scalar, ...]:
    """Odd power sums p_1, p_3, ..., p_{2K-1}, all certified zero.

    Hypothesis: |values| <= 2m and p_{2k-1} = 0 for k = 1..m (verified here;
    exactly for exact inputs, scale-aware otherwise).  The remaining odd sums
    are then forced: for 2k-1 > n the k >= n recursion splits into a sum of
    odd-index e's times even-index p's and a sum of even-index e's times
    lower odd-index p's, and both families of odd-index factors vanish.

    Returns the K odd sums in order; entry k-1 is p_{2k-1}.  Raises with the
    smallest violating odd index if the hypothesis fails.
    """
    vals = tuple(values)
    n = len(vals)
    if n == 0:
        raise DomainError("empty multiset")
    if K < 1:
        raise DomainError("K must be a positive integer")
    if n > 2 * m:
        raise PreconditionError(f"requires |values| <= 2m; got n={n} > 2m={2 * m}")
    exact = all_exact(vals)

    direct = power_sums(vals, max(2 * K - 2, 2 * m - 1, 1))
    for k in range(1, m + 1):
        idx = 2 * k - 1
        if not residual_is_zero(direct.p(idx), exact, power_scale(vals, idx), tol):
            raise HypothesisError(
                f"odd power sum p_{idx} = {direct.p(idx)} is nonzero",
                failing_index=idx,
            )

    e = elementary_symmetric(vals, n)
    if exact:
        for j in range(1, n + 1, 2):
            if e.e(j) != 0:
                raise InternalDefectError(
                    f"e_{j} nonzero although all odd power sums through "
                    f"{2 * m - 1} vanish"
                )

    def e_at(j: int) -> Scalar:
        return e.e(j) if j <= n else 0

    out: list[Scalar] = [direct.p(2 * k - 1) for k in range(1, min(m, K) + 1)]
    for k in range(m + 1, K + 1):
        acc: Scalar = 0
        for i in range(1, m + 1):
            acc = acc + e_at(2 * i - 1) * direct.p(2 * (k - i))
            acc = acc - e_at(2 * i) * out[k - i - 1]
        out.append(acc)
        if exact and acc != 0:
            raise InternalDefectError(f"extended odd power sum p_{2 * k - 1} nonzero")
    return tuple(out)
