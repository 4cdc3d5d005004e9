"""Domain types and elementary operations for bounded multiset combinations.

An instance fixes multiplicities m[1..n] (component i is available m[i]
times) and a selection size k.  A combination is stored as a count vector
(a[1], ..., a[n]): a[i] copies of component i, with sum(a) == k and
0 <= a[i] <= m[i].  Equivalently, the vectors are the compositions of k
into n parts with part i bounded by m[i].  The expanded, non-decreasing
list of selected component identifiers is the "in-place" form.

Two vectors are adjacent when they differ at exactly two positions, one
by +1 and one by -1; the generators in this package walk the whole object
set along such steps.

Positions and component identifiers are 1-based in public interfaces and
error messages; vectors themselves are plain tuples (0-based as usual).
All types here are immutable values and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence


class InvalidSpecError(ValueError):
    """An instance violates its constraints (bad n, m, or k)."""


class OracleLimitError(RuntimeError):
    """A reference computation would exceed its configured size cap."""


@dataclass(frozen=True)
class MultisetSpec:
    """Problem instance: multiplicities ``m`` and selection size ``k``."""

    m: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(self.m))

    @property
    def n(self) -> int:
        """Number of components."""
        return len(self.m)

    @property
    def total(self) -> int:
        """Total capacity sum(m), the largest feasible k."""
        return sum(self.m)


class TransitionDelta(NamedTuple):
    """One adjacent step: position ``inc`` gains one unit, ``dec`` loses one."""

    inc: int
    dec: int


def validate(spec: MultisetSpec) -> None:
    """Raise InvalidSpecError unless the instance is well formed.

    Zero multiplicities are rejected rather than skipped; callers must
    drop empty components before building a spec.
    """
    if spec.n < 1:
        raise InvalidSpecError("need at least one component (n >= 1)")
    for pos, mult in enumerate(spec.m, start=1):
        if mult < 1:
            raise InvalidSpecError(f"multiplicity m[{pos}] must be >= 1, got {mult}")
    if not 0 <= spec.k <= spec.total:
        raise InvalidSpecError(f"k={spec.k} out of range 0..{spec.total} for m={spec.m}")


def validate_vector(spec: MultisetSpec, a: Sequence[int]) -> None:
    """Raise ValueError unless ``a`` is a valid count vector for ``spec``."""
    if len(a) != spec.n:
        raise ValueError(f"vector length {len(a)} != n={spec.n}")
    for pos, (count, mult) in enumerate(zip(a, spec.m), start=1):
        if not 0 <= count <= mult:
            raise ValueError(f"a[{pos}]={count} outside 0..{mult}")
    if sum(a) != spec.k:
        raise ValueError(f"sum(a)={sum(a)} != k={spec.k}")


def first_combination(spec: MultisetSpec) -> tuple[tuple[int, ...], int]:
    """Lexicographically smallest combination, plus the fill stop level.

    Boxes are filled to capacity from right to left; the returned level
    i0 is the right-most box left unfilled.  When k == sum(m) every box
    fills and i0 is reported as 0 ("no free level").  Positions left of
    i0 are explicitly zero.
    """
    validate(spec)
    a = [0] * spec.n
    rem = spec.k
    i0 = 0
    for idx in range(spec.n - 1, -1, -1):
        if spec.m[idx] <= rem:
            a[idx] = spec.m[idx]
            rem -= spec.m[idx]
        else:
            a[idx] = rem
            i0 = idx + 1
            break
    return tuple(a), i0


def last_combination(spec: MultisetSpec) -> tuple[int, ...]:
    """Lexicographically largest combination (boxes filled left to right)."""
    validate(spec)
    a = [0] * spec.n
    rem = spec.k
    for idx in range(spec.n):
        a[idx] = min(spec.m[idx], rem)
        rem -= a[idx]
    return tuple(a)


def is_adjacent(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff the vectors differ at exactly two positions, by +1 and -1."""
    if len(x) != len(y):
        raise ValueError(f"vector lengths differ: {len(x)} vs {len(y)}")
    diffs = [b - a for a, b in zip(x, y) if a != b]
    return len(diffs) == 2 and sorted(diffs) == [-1, 1]


def to_inplace(spec: MultisetSpec, a: Sequence[int]) -> tuple[int, ...]:
    """Expand a count vector to its sorted in-place form.

    Returns a[i] copies of identifier i, ascending; length is k.
    """
    if len(a) != spec.n:
        raise ValueError(f"vector length {len(a)} != n={spec.n}")
    out: list[int] = []
    for ident, count in enumerate(a, start=1):
        out.extend([ident] * count)
    return tuple(out)


def apply_delta(
    a: Sequence[int],
    delta: TransitionDelta,
    spec: Optional[MultisetSpec] = None,
) -> tuple[int, ...]:
    """Apply one adjacent step, returning a new vector.

    Underflow of the source position always raises; capacity overflow is
    checked when ``spec`` is given.  Either failure signals a bug in the
    producer of the delta, not bad user input.
    """
    inc, dec = delta
    if inc == dec:
        raise ValueError(f"delta positions must differ, got inc=dec={inc}")
    n = len(a)
    if not (1 <= inc <= n and 1 <= dec <= n):
        raise ValueError(f"delta positions ({inc},{dec}) outside 1..{n}")
    if a[dec - 1] <= 0:
        raise ValueError(f"underflow: a[{dec}] is already 0")
    if spec is not None and a[inc - 1] >= spec.m[inc - 1]:
        raise ValueError(f"overflow: a[{inc}] is already at capacity {spec.m[inc - 1]}")
    out = list(a)
    out[inc - 1] += 1
    out[dec - 1] -= 1
    return tuple(out)
