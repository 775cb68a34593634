"""Interval design candidates on [-1, 1] with odd harmonic indices.

A multiset X in [-1, 1] satisfies the index set T_m = {1, 3, ..., 2m-1} when
its odd power sums p_1, p_3, ..., p_{2m-1} vanish (the matching uniform
moments on [-1, 1] are all zero, so the usual 1/n averaging drops out).  For
such an X with at most 2m points, symmetry X = -X is forced, and this module
produces the witness: an explicit involutive pairing of positions.  The same
is done for weighted supports, where at most m nonzero support points force
the weight function to be even.

Multisets are kept as position-indexed tuples (repeats allowed, input order
preserved) so certificates can cite positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DomainError,
    HypothesisError,
    InternalDefectError,
    PreconditionError,
    ToleranceError,
)
from .scalars import DEFAULT_TOL, Scalar, all_exact, format_scalar, parse_scalar
from .symfun import extend_odd_power_sums, power_scale, power_sums, residual_is_zero

_MODES = ("auto", "exact", "approximate")


def _resolve_mode(mode: str, values: Sequence[Scalar], what: str) -> str:
    if mode not in _MODES:
        raise DomainError(f"mode must be one of {_MODES}")
    if mode == "auto":
        return "exact" if all_exact(values) else "approximate"
    if mode == "exact" and not all_exact(values):
        raise DomainError(f"exact mode rejects float {what}")
    return mode


@dataclass(frozen=True)
class Configuration:
    """Finite multiset of points in [-1, 1], in input order.

    ``mode`` is "exact" when every point is rational and arithmetic should be
    exact, "approximate" for tolerance-based work; "auto" picks by inspecting
    the points.  Rational points may be forced into approximate mode (useful
    for rational approximations of irrational data).
    """

    points: tuple[Scalar, ...]
    tolerance: float = DEFAULT_TOL
    mode: str = "auto"

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(
            self, "mode", _resolve_mode(self.mode, self.points, "points")
        )
        for x in self.points:
            if self.is_exact and not -1 <= x <= 1:
                raise DomainError(f"point {format_scalar(x)} outside [-1, 1]")
            if not self.is_exact and abs(float(x)) > 1 + self.tolerance:
                raise DomainError(f"point {x!r} outside [-1, 1] beyond tolerance")

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "points": [format_scalar(x) for x in self.points],
            "mode": self.mode,
        }

    @staticmethod
    def from_json(doc: dict, tolerance: float = DEFAULT_TOL) -> "Configuration":
        mode = doc.get("mode", "auto")
        pts = [
            parse_scalar(str(x), exact_only=(mode == "exact")) for x in doc["points"]
        ]
        return Configuration(tuple(pts), tolerance=doc.get("tolerance", tolerance), mode=mode)


@dataclass(frozen=True)
class WeightedConfiguration:
    """Distinct support points in [-1, 1] with aligned nonzero weights."""

    support: tuple[Scalar, ...]
    weights: tuple[Scalar, ...]
    tolerance: float = DEFAULT_TOL
    mode: str = "auto"

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(self.support))
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.support) != len(self.weights):
            raise DomainError("support and weights must have equal lengths")
        values = self.support + self.weights
        object.__setattr__(self, "mode", _resolve_mode(self.mode, values, "values"))
        for x in self.support:
            if self.is_exact and not -1 <= x <= 1:
                raise DomainError(f"support point {format_scalar(x)} outside [-1, 1]")
            if not self.is_exact and abs(float(x)) > 1 + self.tolerance:
                raise DomainError(f"support point {x!r} outside [-1, 1]")
        for i, xi in enumerate(self.support):
            for xj in self.support[i + 1 :]:
                dup = xi == xj if self.is_exact else abs(float(xi) - float(xj)) <= self.tolerance
                if dup:
                    raise DomainError(f"duplicate support point {xi!r}")
        for w in self.weights:
            zero = w == 0 if self.is_exact else abs(float(w)) <= self.tolerance
            if zero:
                raise DomainError("weights must be nonzero")

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    def __len__(self) -> int:
        return len(self.support)

    def to_json(self) -> dict:
        return {
            "support": [format_scalar(x) for x in self.support],
            "weights": [format_scalar(w) for w in self.weights],
            "mode": self.mode,
        }

    @staticmethod
    def from_json(doc: dict, tolerance: float = DEFAULT_TOL) -> "WeightedConfiguration":
        mode = doc.get("mode", "auto")
        exact_only = mode == "exact"
        return WeightedConfiguration(
            tuple(parse_scalar(str(x), exact_only=exact_only) for x in doc["support"]),
            tuple(parse_scalar(str(w), exact_only=exact_only) for w in doc["weights"]),
            tolerance=doc.get("tolerance", tolerance),
            mode=mode,
        )


@dataclass(frozen=True)
class SymmetryCertificate:
    """Involution on positions witnessing X = -X (or an even weight function).

    ``pairs`` are (i, j) with value_i = -value_j; ``fixed`` positions carry
    the value 0 (for a weighted support, the weight at 0 is unconstrained).
    The certificate is checkable without re-running the certifier.
    """

    pairs: tuple[tuple[int, int], ...]
    fixed: tuple[int, ...] = ()

    def covers(self, n: int) -> bool:
        seen = sorted([i for p in self.pairs for i in p] + list(self.fixed))
        return seen == list(range(n))

    def check_multiset(self, points: Sequence[Scalar], tol: float | None = None) -> bool:
        if not self.covers(len(points)):
            return False
        if tol is None:
            return all(points[i] == -points[j] for i, j in self.pairs) and all(
                points[i] == 0 for i in self.fixed
            )
        return all(
            abs(float(points[i]) + float(points[j])) <= tol for i, j in self.pairs
        ) and all(abs(float(points[i])) <= tol for i in self.fixed)

    def check_weighted(
        self,
        support: Sequence[Scalar],
        weights: Sequence[Scalar],
        tol: float | None = None,
    ) -> bool:
        if not self.covers(len(support)):
            return False
        if tol is None:
            return all(
                support[i] == -support[j] and weights[i] == weights[j]
                for i, j in self.pairs
            ) and all(support[i] == 0 for i in self.fixed)
        return all(
            abs(float(support[i]) + float(support[j])) <= tol
            and abs(float(weights[i]) - float(weights[j])) <= tol * (1 + abs(float(weights[i])))
            for i, j in self.pairs
        ) and all(abs(float(support[i])) <= tol for i in self.fixed)

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs], "fixed": list(self.fixed)}


@dataclass(frozen=True)
class DesignReport:
    """Residuals of the odd-index design condition and the verdict."""

    index_set: tuple[int, ...]
    residuals: tuple[Scalar, ...]
    verdict: bool
    tolerance: float | None = None  # None: exact-arithmetic zero tests

    def to_json(self) -> dict:
        return {
            "index_set": list(self.index_set),
            "residuals": [format_scalar(r) for r in self.residuals],
            "verdict": self.verdict,
            "tolerance": None if self.tolerance is None else repr(self.tolerance),
        }


def _sorted_pairs(pairs: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((min(i, j), max(i, j)) for i, j in pairs))


def verify_interval_design(config: Configuration, m: int) -> DesignReport:
    """Residuals p_1, p_3, ..., p_{2m-1} of the points, and whether all vanish.

    Approximate mode uses the scale-aware test |p_k| <= tol*(1 + sum |x|^k).
    """
    if m < 0:
        raise DomainError("m must be >= 0")
    if m == 0:
        return DesignReport((), (), True, None if config.is_exact else config.tolerance)
    if len(config) == 0:
        raise DomainError("empty configuration")
    pts = config.points
    p = power_sums(pts, 2 * m - 1)
    index_set = tuple(range(1, 2 * m, 2))
    residuals = tuple(p.p(k) for k in index_set)
    ok = all(
        residual_is_zero(r, config.is_exact, power_scale(pts, k), config.tolerance)
        for k, r in zip(index_set, residuals)
    )
    return DesignReport(
        index_set, residuals, ok, None if config.is_exact else config.tolerance
    )


def certify_symmetry(config: Configuration, m: int) -> SymmetryCertificate:
    """Symmetry certificate for a T_m multiset with at most 2m points.

    Follows the forcing argument: first the odd power sums are extended to
    all orders (they vanish identically once the first m do), then points are
    repeatedly removed from the top of the |value| order, either as a zero or
    together with their antipodal partner.  Approximate mode matches greedily
    with the per-pair gap test |x + y| <= tol; a best gap within 10*tol fails
    as "pairing ambiguous", anything worse as "hypothesis approximately
    violated".
    """
    n = len(config)
    if n == 0:
        return SymmetryCertificate((), ())
    if n > 2 * m:
        raise PreconditionError(f"requires n <= 2m; got n={n} > 2m={2 * m}")
    pts = config.points
    tol = config.tolerance
    # Verifies the design hypothesis (raising with the smallest failing odd
    # index) and certifies that all higher odd power sums vanish with it.
    extend_odd_power_sums(pts, m, max(n, 1), tol=tol)

    remaining = sorted(range(n), key=lambda i: (-abs(float(pts[i])), i))
    pairs: list[tuple[int, int]] = []
    fixed: list[int] = []
    while remaining:
        i = remaining.pop(0)
        v = pts[i]
        if config.is_exact:
            if v == 0:
                fixed.append(i)
                continue
            j = next((c for c in remaining if pts[c] == -v), None)
            if j is None:
                raise InternalDefectError(
                    f"verified design has no partner for value {format_scalar(v)}"
                )
        else:
            if abs(float(v)) <= tol:
                fixed.append(i)
                continue
            gap, j = min(
                ((abs(float(v) + float(pts[c])), c) for c in remaining),
                default=(float("inf"), None),
            )
            if j is None or gap > tol:
                reason = (
                    "pairing ambiguous"
                    if gap <= 10 * tol
                    else "hypothesis approximately violated"
                )
                raise ToleranceError(
                    f"no partner for {v!r} within {tol} (best gap {gap:.3e})",
                    reason=reason,
                )
        remaining.remove(j)
        pairs.append((i, j))
    return SymmetryCertificate(_sorted_pairs(pairs), tuple(sorted(fixed)))


def verify_weighted_design(wconfig: WeightedConfiguration, m: int) -> DesignReport:
    """Residuals sum_x x^(2k-1) f(x) for k = 1..m, and whether all vanish.

    The 1/n averaging of the general definition is omitted: the uniform odd
    moments are zero, so it cannot affect the verdict.
    """
    if m < 0:
        raise DomainError("m must be >= 0")
    if m == 0:
        return DesignReport(
            (), (), True, None if wconfig.is_exact else wconfig.tolerance
        )
    xs, ws = wconfig.support, wconfig.weights
    index_set = tuple(range(1, 2 * m, 2))
    residuals = []
    scales = []
    powers = list(xs)
    for k in range(1, 2 * m):
        if k > 1:
            powers = [pw * x for pw, x in zip(powers, xs)]
        if k % 2 == 1:
            residuals.append(sum(pw * w for pw, w in zip(powers, ws)))
            scales.append(
                1.0 + sum(abs(float(x)) ** k * abs(float(w)) for x, w in zip(xs, ws))
            )
    ok = all(
        residual_is_zero(r, wconfig.is_exact, s, wconfig.tolerance)
        for r, s in zip(residuals, scales)
    )
    return DesignReport(
        index_set,
        tuple(residuals),
        ok,
        None if wconfig.is_exact else wconfig.tolerance,
    )


def certify_weighted_symmetry(
    wconfig: WeightedConfiguration, m: int
) -> SymmetryCertificate:
    """Evenness certificate for a weighted T_m design with small support.

    Requires at most m nonzero support points and vanishing residuals.  The
    point 0 (if present) never constrains anything and is reported as fixed;
    the rest is reduced pair by pair: an antipodal support pair must exist,
    its two weights must agree (merging them into a single point with the
    difference as weight would otherwise leave an unpaired support point in
    the reduced design), and induction handles the remainder.
    """
    xs, ws = wconfig.support, wconfig.weights
    exact = wconfig.is_exact
    tol = wconfig.tolerance

    fixed = [
        i
        for i, x in enumerate(xs)
        if (x == 0 if exact else abs(float(x)) <= tol)
    ]
    active = [i for i in range(len(xs)) if i not in fixed]
    if len(active) > m:
        raise PreconditionError(
            f"requires at most m nonzero support points; got {len(active)} > m={m}"
        )
    report = verify_weighted_design(wconfig, m)
    if not report.verdict:
        k = next(
            k
            for k, r in zip(report.index_set, report.residuals)
            if not residual_is_zero(
                r,
                exact,
                1.0 + sum(abs(float(x)) ** k * abs(float(w)) for x, w in zip(xs, ws)),
                tol,
            )
        )
        raise HypothesisError(
            f"weighted design residual at index {k} is nonzero", failing_index=k
        )

    pairs: list[tuple[int, int]] = []

    def reduce(items: list[int]) -> None:
        if not items:
            return
        best: tuple[int, int] | None = None
        best_gap = float("inf")
        for a_pos, a in enumerate(items):
            for b in items[a_pos + 1 :]:
                if exact:
                    if xs[a] == -xs[b]:
                        best = (a, b)
                        break
                else:
                    gap = abs(float(xs[a]) + float(xs[b]))
                    if gap < best_gap:
                        best, best_gap = (a, b), gap
            if exact and best is not None:
                break
        if best is None or (not exact and best_gap > tol):
            if exact:
                raise InternalDefectError(
                    "verified weighted design has no antipodal support pair"
                )
            reason = (
                "pairing ambiguous"
                if best_gap <= 10 * tol
                else "hypothesis approximately violated"
            )
            raise ToleranceError(
                f"no antipodal support pair within {tol} (best gap {best_gap:.3e})",
                reason=reason,
            )
        a, b = best
        merged = ws[a] - ws[b]
        if exact:
            if merged != 0:
                raise InternalDefectError(
                    "antipodal support pair of a verified design has unequal weights"
                )
        elif abs(float(merged)) > tol * (1 + abs(float(ws[a]))):
            raise ToleranceError(
                f"weights at +-{xs[a]!r} differ by {float(merged):.3e}",
                reason="hypothesis approximately violated",
            )
        pairs.append((a, b))
        reduce([i for i in items if i not in (a, b)])

    reduce(active)
    return SymmetryCertificate(_sorted_pairs(pairs), tuple(sorted(fixed)))


def is_symmetric(
    obj: Configuration | WeightedConfiguration,
) -> tuple[bool, SymmetryCertificate | None]:
    """Direct symmetry check, independent of any design hypothesis.

    For a Configuration: is the multiset equal to its negation, multiplicity
    included.  For a WeightedConfiguration: does every support point have its
    negation in the support with the same weight.  Returns the witnessing
    pairing when the answer is yes.
    """
    if isinstance(obj, Configuration):
        return _is_symmetric_multiset(obj)
    if isinstance(obj, WeightedConfiguration):
        return _is_symmetric_weighted(obj)
    raise DomainError("expected a Configuration or WeightedConfiguration")


def _is_symmetric_multiset(config: Configuration):
    pts = config.points
    n = len(pts)
    order = sorted(range(n), key=lambda i: (float(pts[i]), i))
    lo, hi = 0, n - 1
    pairs: list[tuple[int, int]] = []
    fixed: list[int] = []
    while lo <= hi:
        if lo == hi:
            i = order[lo]
            zero = pts[i] == 0 if config.is_exact else abs(float(pts[i])) <= config.tolerance
            if not zero:
                return False, None
            fixed.append(i)
            break
        i, j = order[lo], order[hi]
        if config.is_exact:
            ok = pts[i] == -pts[j]
        else:
            ok = abs(float(pts[i]) + float(pts[j])) <= config.tolerance
        if not ok:
            return False, None
        if config.is_exact and pts[i] == 0:
            # both ends are zeros; report them as fixed points
            fixed.extend([i, j])
        else:
            pairs.append((i, j))
        lo += 1
        hi -= 1
    return True, SymmetryCertificate(_sorted_pairs(pairs), tuple(sorted(fixed)))


def _is_symmetric_weighted(w: WeightedConfiguration):
    xs, ws = w.support, w.weights
    n = len(xs)
    used = [False] * n
    pairs: list[tuple[int, int]] = []
    fixed: list[int] = []
    for i in range(n):
        if used[i]:
            continue
        used[i] = True
        if w.is_exact:
            if xs[i] == 0:
                fixed.append(i)
                continue
            j = next(
                (j for j in range(n) if not used[j] and xs[j] == -xs[i]), None
            )
            if j is None or ws[i] != ws[j]:
                return False, None
        else:
            if abs(float(xs[i])) <= w.tolerance:
                fixed.append(i)
                continue
            cands = [
                (abs(float(xs[i]) + float(xs[j])), j)
                for j in range(n)
                if not used[j]
            ]
            gap, j = min(cands, default=(float("inf"), None))
            if (
                j is None
                or gap > w.tolerance
                or abs(float(ws[i]) - float(ws[j]))
                > w.tolerance * (1 + abs(float(ws[i])))
            ):
                return False, None
        used[j] = True
        pairs.append((i, j))
    return True, SymmetryCertificate(_sorted_pairs(pairs), tuple(sorted(fixed)))
