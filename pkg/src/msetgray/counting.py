"""Exact counting of bounded multiset combinations.

Two independent routes to |S|, the number of count vectors for a spec:
inclusion-exclusion over the unconstrained closure, and a direct dynamic
program.  Both use exact integer arithmetic throughout (Python ints are
arbitrary precision), so they double as overflow-free oracles for the
generators.
"""

from __future__ import annotations

from math import comb

from .core import MultisetSpec, OracleLimitError, validate

# Inclusion-exclusion visits 2^n subsets; past this n use count_dp.
IE_SUBSET_LIMIT = 24


def count_closure(n: int, k: int) -> int:
    """Combinations of size k when every component is unbounded: C(n+k-1, k)."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    return comb(n + k - 1, k)


def count_inclusion_exclusion(spec: MultisetSpec) -> int:
    """Count combinations by subtracting over-capacity selections.

    Each subset T of components contributes (-1)^|T| * C(n+k'-1, k') with
    k' = k - sum over T of (m[i]+1); once k' goes negative no superset of
    T can contribute, so that branch is cut.
    """
    validate(spec)
    n, m = spec.n, spec.m
    if n > IE_SUBSET_LIMIT:
        raise OracleLimitError(
            f"inclusion-exclusion over 2^{n} subsets exceeds limit "
            f"(n <= {IE_SUBSET_LIMIT}); use count_dp instead"
        )

    def rec(idx: int, kp: int, sign: int) -> int:
        if kp < 0:
            return 0
        if idx == n:
            return sign * comb(n + kp - 1, kp)
        return rec(idx + 1, kp, sign) + rec(idx + 1, kp - m[idx] - 1, -sign)

    return rec(0, spec.k, 1)


def inclusion_exclusion_terms(spec: MultisetSpec) -> list[tuple[tuple[int, ...], int]]:
    """Nonzero inclusion-exclusion terms as (subset of 1-based positions, signed value).

    Exposed for reporting: the empty-subset term is the closure count and
    the remaining terms are the alternating corrections.
    """
    validate(spec)
    n, m = spec.n, spec.m
    if n > IE_SUBSET_LIMIT:
        raise OracleLimitError(f"term expansion limited to n <= {IE_SUBSET_LIMIT}")
    terms: list[tuple[tuple[int, ...], int]] = []

    def rec(idx: int, chosen: tuple[int, ...], kp: int, sign: int) -> None:
        if kp < 0:
            return
        if idx == n:
            terms.append((chosen, sign * comb(n + kp - 1, kp)))
            return
        rec(idx + 1, chosen, kp, sign)
        rec(idx + 1, chosen + (idx + 1,), kp - m[idx] - 1, -sign)

    rec(0, (), spec.k, 1)
    terms.sort(key=lambda t: (len(t[0]), t[0]))
    return terms


def count_dp(spec: MultisetSpec) -> int:
    """Count combinations by a table over positions and partial sums.

    ways[s] after processing i components is the number of bounded vectors
    of length i summing to s; each step sums a window of width m[i]+1.
    """
    validate(spec)
    k = spec.k
    ways = [1] + [0] * k
    for mult in spec.m:
        ways = [sum(ways[s - t] for t in range(min(mult, s) + 1)) for s in range(k + 1)]
    return ways[k]
