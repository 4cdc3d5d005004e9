"""Slow, obviously-correct reference generators.

These are the oracles the fast iterative engine is validated against:

* brute_force     -- filter the full Cartesian product on sum == k.
* lex_generate    -- recursive descent with prefix-aware bounds; visits no
                     dead branch, emits in lexicographic order.
* gray_generate_recursive -- same recursion, but each level sweeps its
                     range alternately upward and downward (a per-level
                     direction flag flips after every call), which turns
                     the output into an adjacent sequence.

The recursive generators deliberately pay the O(n) call overhead per
object; they exist for clarity, not speed.
"""

from __future__ import annotations

import itertools

from .core import MultisetSpec, OracleLimitError, validate

# Cap on product(m[i]+1) for the brute-force oracle.
BRUTE_FORCE_LIMIT = 2_000_000

Vector = tuple[int, ...]


def brute_force(spec: MultisetSpec, limit: int = BRUTE_FORCE_LIMIT) -> list[Vector]:
    """All valid vectors in lexicographic order, by exhaustive filtering."""
    validate(spec)
    size = 1
    for mult in spec.m:
        size *= mult + 1
        if size > limit:
            raise OracleLimitError(
                f"brute force would scan > {limit} candidate vectors"
            )
    return [
        v
        for v in itertools.product(*(range(mult + 1) for mult in spec.m))
        if sum(v) == spec.k
    ]


def _suffix_capacities(spec: MultisetSpec) -> list[int]:
    """b[i] = m[i] + ... + m[n], 1-based, with sentinel b[n+1] = 0."""
    n = spec.n
    b = [0] * (n + 2)
    for i in range(n, 0, -1):
        b[i] = b[i + 1] + spec.m[i - 1]
    return b


def lex_generate(spec: MultisetSpec) -> list[Vector]:
    """All valid vectors in lexicographic order, by bounded recursion.

    At level i with rem units left to place, a[i] ranges over
    max(rem - b[i+1], 0) .. min(m[i], rem): anything lower strands units
    the suffix cannot absorb, anything higher overdraws.  Emission happens
    at depth n+1, the empty-suffix base case.
    """
    validate(spec)
    n = spec.n
    m = (0,) + spec.m  # 1-based view
    b = _suffix_capacities(spec)
    a = [0] * (n + 1)
    out: list[Vector] = []

    def descend(i: int, rem: int) -> None:
        if i > n:
            out.append(tuple(a[1:]))
            return
        lower = max(rem - b[i + 1], 0)
        upper = min(m[i], rem)
        for v in range(lower, upper + 1):
            a[i] = v
            descend(i + 1, rem - v)

    descend(1, spec.k)
    return out


def gray_generate_recursive(spec: MultisetSpec) -> list[Vector]:
    """All valid vectors as an adjacent sequence, by direction-flipping recursion.

    d[i] = +1 sweeps level i upward, -1 downward; the flag flips after
    every call at level i, so consecutive visits traverse the level in
    opposite orders.  The first object is the lexicographically smallest
    (all directions start at +1).
    """
    validate(spec)
    n = spec.n
    m = (0,) + spec.m
    b = _suffix_capacities(spec)
    d = [1] * (n + 1)
    a = [0] * (n + 1)
    out: list[Vector] = []

    def descend(i: int, rem: int) -> None:
        if i > n:
            out.append(tuple(a[1:]))
            return
        lower = max(rem - b[i + 1], 0)
        upper = min(m[i], rem)
        if d[i] > 0:
            values = range(lower, upper + 1)
        else:
            values = range(upper, lower - 1, -1)
        for v in values:
            a[i] = v
            descend(i + 1, rem - v)
        d[i] = -d[i]

    descend(1, spec.k)
    return out
