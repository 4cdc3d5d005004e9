import random

import pytest

from msetgray import (
    EngineExhausted,
    GrayEngine,
    MultisetSpec,
    OP_COUNT_CEILING,
    TransitionDelta,
    apply_delta,
    brute_force,
    count_dp,
    first_combination,
    generate,
    gray_generate_recursive,
    is_adjacent,
    lex_generate,
    run_instrumented,
)

from example_data import ENGINE_SEQUENCE, EXAMPLE_SPEC


def random_spec(rng, max_n=6, max_m=4):
    n = rng.randint(1, max_n)
    m = tuple(rng.randint(1, max_m) for _ in range(n))
    return MultisetSpec(m=m, k=rng.randint(0, sum(m)))


class TestInit:
    def test_worked_example_state(self):
        eng = GrayEngine(EXAMPLE_SPEC)
        assert eng.i0 == 2
        assert eng.current() == (0, 0, 2, 1, 1)
        assert eng.d == (1, 1, -1, -1, -1)
        assert eng.b == (7, 6, 4, 2, 1, 0)  # includes the b[n+1] sentinel
        assert eng.solve == (5, 5, 5, 5, 5)
        assert eng.down[:4] == (4, 4, 4, 4)
        assert eng.mark == (False,) * 5
        # prefix sums carry the +1 offset right of the start level
        assert eng.sum == (0, 0, 1, 3, 4)

    def test_saturated_single_object(self):
        eng = GrayEngine(MultisetSpec(m=(2, 2), k=4))
        assert eng.current() == (2, 2)
        assert eng.i0 == 0
        assert eng.advance() is None
        assert eng.finished

    def test_two_box_start(self):
        eng = GrayEngine(MultisetSpec(m=(2, 2), k=2))
        assert eng.i0 == 1
        assert eng.current() == (0, 2)
        assert eng.d == (1, -1)

    def test_fill_stops_in_last_box_starts_higher(self):
        # k < m[n]: level n is forced, so the first free level is n-1.
        eng = GrayEngine(MultisetSpec(m=(2, 2), k=1))
        assert eng.i0 == 1
        assert eng.current() == (0, 1)


class TestAdvance:
    def test_first_step_worked_example(self):
        eng = GrayEngine(EXAMPLE_SPEC)
        delta = eng.advance()
        assert delta == TransitionDelta(inc=2, dec=5)
        assert eng.current() == (0, 1, 2, 1, 0)

    def test_single_object_finishes_immediately(self):
        eng = GrayEngine(MultisetSpec(m=(3,), k=2))
        assert eng.advance() is None
        assert eng.finished
        assert eng.current() == (2,)

    def test_advance_after_finished_raises(self):
        eng = GrayEngine(MultisetSpec(m=(1,), k=1))
        assert eng.advance() is None
        with pytest.raises(EngineExhausted):
            eng.advance()

    def test_full_worked_example_golden(self):
        assert generate(EXAMPLE_SPEC) == ENGINE_SEQUENCE

    def test_delta_count_is_objects_minus_one(self):
        eng = GrayEngine(EXAMPLE_SPEC)
        deltas = 0
        while eng.advance() is not None:
            deltas += 1
        assert deltas == 17
        assert eng.current() == ENGINE_SEQUENCE[-1]

    def test_every_emission_sums_to_k(self):
        eng = GrayEngine(EXAMPLE_SPEC, debug=True)
        for vec in eng.iter_vectors():
            assert sum(vec) == 4

    def test_deltas_replay_the_sequence(self):
        # Applying the delta stream (with capacity checks on) must walk
        # the same vectors; capacity preconditions never fire mid-run.
        spec = MultisetSpec(m=(3, 1, 2, 2), k=5)
        eng = GrayEngine(spec)
        shadow = eng.current()
        while True:
            delta = eng.advance()
            if delta is None:
                break
            shadow = apply_delta(shadow, delta, spec)
            assert shadow == eng.current()


class TestProperties:
    def test_randomized_cross_oracle(self):
        rng = random.Random(17)
        for _ in range(250):
            spec = random_spec(rng)
            seq = generate(spec)
            assert sorted(seq) == lex_generate(spec), spec
            assert all(is_adjacent(x, y) for x, y in zip(seq, seq[1:])), spec
            assert len(seq) == count_dp(spec), spec
            assert seq[0] == first_combination(spec)[0], spec

    def test_debug_prefix_sum_invariant(self):
        # debug=True asserts sum[i] == a[1]+...+a[i-1] at every evaluation.
        rng = random.Random(23)
        for _ in range(60):
            spec = random_spec(rng, max_n=5, max_m=3)
            eng = GrayEngine(spec, debug=True)
            while eng.advance() is not None:
                pass

    def test_fill_stops_in_last_box_family(self):
        # Instances with k < m[n] exercise the adjusted start level.
        for m, k in [((2, 2), 1), ((1, 3), 2), ((4, 4, 4), 1), ((2, 2, 3, 3), 2)]:
            spec = MultisetSpec(m=m, k=k)
            seq = generate(spec)
            assert sorted(seq) == brute_force(spec), (m, k)
            assert all(is_adjacent(x, y) for x, y in zip(seq, seq[1:])), (m, k)

    def test_compositions_family(self):
        for n in range(2, 5):
            for k in range(1, 5):
                spec = MultisetSpec(m=(k,) * n, k=k)
                seq = generate(spec)
                assert sorted(seq) == lex_generate(spec)
                assert all(is_adjacent(x, y) for x, y in zip(seq, seq[1:]))

    def test_plain_combinations_family(self):
        for n in range(1, 8):
            for k in range(0, n + 1):
                spec = MultisetSpec(m=(1,) * n, k=k)
                seq = generate(spec)
                assert sorted(seq) == lex_generate(spec)
                assert all(is_adjacent(x, y) for x, y in zip(seq, seq[1:]))

    def test_recursive_order_may_differ_but_same_set(self):
        engine_seq = generate(EXAMPLE_SPEC)
        recursive_seq = gray_generate_recursive(EXAMPLE_SPEC)
        assert sorted(engine_seq) == sorted(recursive_seq)


class TestInstrumentation:
    def test_worked_example_run(self):
        vectors, max_ops = run_instrumented(EXAMPLE_SPEC)
        assert len(vectors) == 18
        assert 0 < max_ops <= OP_COUNT_CEILING

    def test_single_object_run(self):
        vectors, max_ops = run_instrumented(MultisetSpec(m=(2, 2), k=4))
        assert vectors == [(2, 2)]
        assert max_ops == 0

    def test_op_count_flat_across_sizes(self):
        # The per-step ceiling must not grow with n.
        maxima = []
        for n in (8, 40, 160):
            spec = MultisetSpec(m=(3,) * n, k=(3 * n) // 2)
            _, max_ops = run_instrumented(spec, max_steps=8000, collect=False)
            maxima.append(max_ops)
        assert len(set(maxima)) == 1
        assert maxima[0] <= OP_COUNT_CEILING

    def test_trace_fields(self):
        eng = GrayEngine(EXAMPLE_SPEC)
        assert eng.last_trace is None
        eng.advance()
        trace = eng.last_trace
        assert trace.level == 2
        assert trace.delta == TransitionDelta(inc=2, dec=5)
        assert trace.went_up != trace.went_down
        assert trace.op_count <= OP_COUNT_CEILING


def test_state_views_are_tuples():
    eng = GrayEngine(EXAMPLE_SPEC)
    for view in (eng.a, eng.d, eng.b, eng.sum, eng.solve, eng.down, eng.mark):
        assert isinstance(view, tuple)
