"""Upper and lower bounds on the maximum number of minimal codewords, with
exact rational arithmetic wherever a formula divides.

The high-rate upper bound can drop below known exact values at small
parameters, so reports flag it and never assert it. The random-coding lower
bound is likewise a reference estimate only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .census import MAX_K as CENSUS_MAX_K, MAX_N as CENSUS_MAX_N, census_max_folded
from .errors import BudgetError, DomainError
from .optimize import DEFAULT_SWEEP_BUDGET, MAX_T, maxmin, predicted_sweep_leaves

__all__ = [
    "BoundsReport",
    "trivial_ub",
    "matroid_ub",
    "binomial_sum_ub",
    "improved_ub",
    "agrell_ub",
    "random_coding_lb",
    "projective_base_lb",
    "kashyap_lb",
    "bounds_report",
    "bounds_report_json_obj",
    "bounds_report_text",
]

TRIVIAL_GUARD_BITS = 120


@dataclass(frozen=True)
class BoundsReport:
    """All applicable bounds for an (n, k) pair, plus the exact maximum when
    a search path fits.

    agrell_ub and random_coding_lb are reference values: the former can fall
    below the true maximum at small parameters (flagged via
    agrell_below_exact), the latter is asymptotic guidance. kashyap_lb
    applies to projective codes only.
    """

    n: int
    k: int
    t: int
    q: int
    trivial_ub: int
    matroid_ub: int
    binomial_sum_ub: int
    improved_ub: Fraction | None
    improved_ub_floor: int | None
    agrell_ub: Fraction | None
    random_coding_lb: Fraction | None
    projective_base_lb: int
    kashyap_lb: int
    exact: int | None
    exact_method: str | None
    agrell_below_exact: bool | None


def trivial_ub(n: int, k: int, q: int = 2) -> int:
    """(q^k - 1)/(q - 1): the number of projective points, hence of distinct
    supports of scalar classes.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if q < 2:
        raise DomainError(f"need q >= 2, got {q}")
    if k * math.log2(q) > TRIVIAL_GUARD_BITS:
        raise DomainError(
            f"k log2(q) exceeds {TRIVIAL_GUARD_BITS} bits, refusing huge value"
        )
    return (q**k - 1) // (q - 1)


def matroid_ub(n: int, k: int) -> int:
    """C(n, k-1): circuits of the column matroid bound the minimal supports."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    return math.comb(n, k - 1)


def binomial_sum_ub(k: int, t: int) -> int:
    """sum_{i=1}^{t+1} C(k+t, i): minimal words of a [k+t, k] code have
    weight at most t+1 and pairwise distinct supports, so the supports are
    counted directly.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    return sum(math.comb(k + t, i) for i in range(1, t + 2))


def improved_ub(k: int, t: int) -> Fraction:
    """(k+1)k/2 + sum_{s=2}^{t+1} C(2^t - 1, s) (k/(2^t - 1))^s, exact.

    Bounds each product term of the counting formula by the symmetric
    maximum at the uniform point.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if t < 1:
        raise DomainError(f"t must be at least 1, got {t}")
    m = (1 << t) - 1
    u = Fraction(k, m)
    total = Fraction((k + 1) * k, 2)
    for s in range(2, t + 2):
        total += math.comb(m, s) * u**s
    return total


def agrell_ub(n: int, k: int) -> Fraction | None:
    """High-rate bound 2^k / (4n((k-1)/n - 1/2)); absent unless
    (k-1)/n > 1/2. Reference only: not valid at small parameters.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if 2 * (k - 1) <= n:
        return None
    return Fraction(2**k, 4 * (k - 1) - 2 * n)


def random_coding_lb(n: int, k: int, q: int = 2) -> Fraction | None:
    """Expected count over random generator matrices; absent when n <= k.
    Reference estimate only.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if q < 2:
        raise DomainError(f"need q >= 2, got {q}")
    if n <= k:
        return None
    r = n - k
    total = Fraction(0)
    for j in range(r + 2):
        term = Fraction(math.comb(n, j) * (q - 1) ** j, q**r)
        for i in range(j - 1):
            term *= 1 - Fraction(1, q ** (r - i))
        total += term
    return total


def projective_base_lb(k: int, t: int) -> int:
    """floor(k/(t+1))^(t+1), attained by a code whose information parts sit
    on a projective base in near-equal groups.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    return (k // (t + 1)) ** (t + 1)


def kashyap_lb(k: int, t: int) -> int:
    """k + t, valid for projective codes only (no repeated or zero columns)."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    return k + t


def _exact_value(
    n: int, k: int, budget: int | None, threads: int
) -> tuple[int | None, str | None]:
    t = n - k
    if t <= MAX_T and (
        t == 0 or budget is None or predicted_sweep_leaves(t, k) <= budget
    ):
        res = maxmin(n, k, budget)
        return res.value, res.method
    if k <= CENSUS_MAX_K and min(n, (1 << k) - 1) <= CENSUS_MAX_N:
        try:
            value, _ = census_max_folded(min(n, (1 << k) - 1), k, None, threads)
            return value, "census"
        except (DomainError, BudgetError):
            return None, None
    return None, None


def bounds_report(
    n: int,
    k: int,
    budget: int | None = DEFAULT_SWEEP_BUDGET,
    threads: int = 1,
) -> BoundsReport:
    """Evaluate every applicable bound for an (n, k) pair at q=2, plus the
    exact maximum when n-k <= 5 fits the sweep budget or the folded census
    envelope applies. exact is None otherwise.
    """
    if not 1 <= k <= n <= 64:
        raise DomainError(f"need 1 <= k <= n <= 64, got n={n}, k={k}")
    t = n - k
    imp = improved_ub(k, t) if t >= 1 else None
    ag = agrell_ub(n, k)
    exact, method = _exact_value(n, k, budget, threads)
    report = BoundsReport(
        n=n,
        k=k,
        t=t,
        q=2,
        trivial_ub=trivial_ub(n, k),
        matroid_ub=matroid_ub(n, k),
        binomial_sum_ub=binomial_sum_ub(k, t),
        improved_ub=imp,
        improved_ub_floor=None if imp is None else imp.__floor__(),
        agrell_ub=ag,
        random_coding_lb=random_coding_lb(n, k),
        projective_base_lb=projective_base_lb(k, t),
        kashyap_lb=kashyap_lb(k, t),
        exact=exact,
        exact_method=method,
        agrell_below_exact=None
        if ag is None or exact is None
        else ag < exact,
    )
    assert report.projective_base_lb <= report.matroid_ub
    return report


def _frac_json(x: Fraction | None) -> dict | None:
    if x is None:
        return None
    return {
        "numerator": x.numerator,
        "denominator": x.denominator,
        "approx": float(x),
    }


def bounds_report_json_obj(r: BoundsReport) -> dict:
    return {
        "n": r.n,
        "k": r.k,
        "t": r.t,
        "q": r.q,
        "upper": {
            "trivial": r.trivial_ub,
            "matroid": r.matroid_ub,
            "binomial_sum": r.binomial_sum_ub,
            "improved": _frac_json(r.improved_ub),
            "improved_floor": r.improved_ub_floor,
            "agrell": _frac_json(r.agrell_ub),
        },
        "lower": {
            "random_coding_estimate": _frac_json(r.random_coding_lb),
            "projective_base": r.projective_base_lb,
            "kashyap_projective_only": r.kashyap_lb,
        },
        "exact": r.exact,
        "exact_method": r.exact_method,
        "agrell_below_exact": r.agrell_below_exact,
    }


def _frac_text(x: Fraction | None) -> str:
    if x is None:
        return "-"
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} (~{float(x):.4f})"


def bounds_report_text(r: BoundsReport) -> str:
    lines = [
        f"bounds for n={r.n} k={r.k} (t={r.t}, q={r.q})",
        f"  trivial upper          {r.trivial_ub}",
        f"  matroid upper          {r.matroid_ub}",
        f"  binomial-sum upper     {r.binomial_sum_ub}",
        f"  improved upper         {_frac_text(r.improved_ub)}",
        f"  agrell upper           {_frac_text(r.agrell_ub)}"
        + (" [reference only]" if r.agrell_ub is not None else ""),
        f"  projective-base lower  {r.projective_base_lb}",
        f"  kashyap lower          {r.kashyap_lb} [projective codes only]",
        f"  random-coding lower    {_frac_text(r.random_coding_lb)}"
        + (" [estimate]" if r.random_coding_lb is not None else ""),
    ]
    if r.exact is not None:
        lines.append(f"  exact maximum          {r.exact} [{r.exact_method}]")
    else:
        lines.append("  exact maximum          unavailable")
    if r.agrell_below_exact:
        lines.append(
            "  note: agrell value lies below the exact maximum at these"
            " parameters and is not asserted"
        )
    return "\n".join(lines)
