"""Cross-oracle verification: every generator checked against every other.

For one spec the suite runs the brute-force, lexicographic, recursive
adjacent, and loopless generators plus both counters, the tree models and
the in-place container, then checks the full consistency web.  Mandatory
checks decide pass/fail; informational comparisons (whether the two
adjacent orders coincide, tree/generator sequence identities) are
reported but do not gate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .core import (
    MultisetSpec,
    first_combination,
    is_adjacent,
    to_inplace,
    validate,
)
from .counting import count_dp, count_inclusion_exclusion
from .engine import GrayEngine
from .inplace import apply_move, init_container
from .reference import brute_force, gray_generate_recursive, lex_generate
from .treemodel import ParityMode, build_lexico_tree, leaf_sequence, twist


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SpecReport:
    spec: MultisetSpec
    checks: list[CheckResult] = field(default_factory=list)
    info: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Optional[CheckResult]:
        for c in self.checks:
            if not c.passed:
                return c
        return None


def _adjacent_everywhere(seq: list[tuple[int, ...]]) -> Optional[int]:
    """Index of the first non-adjacent consecutive pair, or None."""
    for idx in range(len(seq) - 1):
        if not is_adjacent(seq[idx], seq[idx + 1]):
            return idx
    return None


def run_spec_checks(spec: MultisetSpec, debug_engine: bool = True) -> SpecReport:
    """Run the full cross-oracle suite on one spec."""
    validate(spec)
    report = SpecReport(spec=spec)
    add = report.checks.append

    reference = brute_force(spec)
    lex = lex_generate(spec)
    add(CheckResult("lex_equals_brute_force", lex == reference))

    n_objects = len(reference)
    ie = count_inclusion_exclusion(spec)
    dp = count_dp(spec)
    add(
        CheckResult(
            "counts_agree",
            ie == dp == n_objects,
            f"ie={ie} dp={dp} enumerated={n_objects}",
        )
    )

    recursive = gray_generate_recursive(spec)
    add(CheckResult("recursive_is_permutation", sorted(recursive) == lex))
    bad = _adjacent_everywhere(recursive)
    add(
        CheckResult(
            "recursive_adjacent",
            bad is None,
            "" if bad is None else f"pair at index {bad}",
        )
    )

    # Engine run with a synchronized container sweep.
    eng = GrayEngine(spec, debug=debug_engine)
    state = init_container(spec, eng.current())
    engine_seq = [eng.current()]
    deltas = 0
    container_ok = True
    one_cell_ok = True
    container_detail = ""
    while True:
        before = state.cells()
        delta = eng.advance()
        if delta is None:
            break
        deltas += 1
        apply_move(state, delta)
        after = state.cells()
        engine_seq.append(eng.current())
        if sum(1 for x, y in zip(before, after) if x != y) != 1:
            one_cell_ok = False
            container_detail = f"step {deltas}: {before} -> {after}"
        if tuple(sorted(after)) != to_inplace(spec, eng.current()):
            container_ok = False
            container_detail = f"step {deltas}: sorted({after}) != in-place form"

    add(CheckResult("engine_first_is_smallest", engine_seq[0] == first_combination(spec)[0]))
    add(CheckResult("engine_is_permutation", sorted(engine_seq) == lex))
    bad = _adjacent_everywhere(engine_seq)
    add(
        CheckResult(
            "engine_adjacent",
            bad is None,
            "" if bad is None else f"pair at index {bad}",
        )
    )
    add(CheckResult("engine_delta_count", deltas == n_objects - 1, f"{deltas} deltas"))
    add(CheckResult("container_matches_vector", container_ok, container_detail))
    add(CheckResult("container_single_cell_steps", one_cell_ok, container_detail))

    tree = build_lexico_tree(spec)
    add(CheckResult("tree_leaves_lexicographic", leaf_sequence(tree) == lex))
    skip_leaves = leaf_sequence(twist(tree, ParityMode.SKIP_SINGLE_CHILD))
    add(CheckResult("twisted_leaves_permutation", sorted(skip_leaves) == lex))
    bad = _adjacent_everywhere(skip_leaves)
    add(
        CheckResult(
            "twisted_leaves_adjacent",
            bad is None,
            "" if bad is None else f"pair at index {bad}",
        )
    )

    global_leaves = leaf_sequence(twist(tree, ParityMode.GLOBAL))
    report.info["engine_equals_recursive"] = engine_seq == recursive
    report.info["twisted_tree_equals_engine"] = skip_leaves == engine_seq
    report.info["global_tree_equals_recursive"] = global_leaves == recursive
    return report


def random_spec(rng: random.Random, max_n: int, max_m: int) -> MultisetSpec:
    """Uniform small instance: n in 1..max_n, m[i] in 1..max_m, any feasible k."""
    n = rng.randint(1, max_n)
    m = tuple(rng.randint(1, max_m) for _ in range(n))
    return MultisetSpec(m=m, k=rng.randint(0, sum(m)))


def iter_random_specs(
    count: int, max_n: int, max_m: int, seed: int
) -> Iterator[MultisetSpec]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_spec(rng, max_n, max_m)
