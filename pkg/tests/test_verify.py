from msetgray import MultisetSpec, run_spec_checks
from msetgray.verify import iter_random_specs, random_spec

from example_data import EXAMPLE_SPEC


def test_worked_example_all_pass():
    report = run_spec_checks(EXAMPLE_SPEC)
    assert report.passed
    assert report.first_failure() is None
    names = {c.name for c in report.checks}
    assert "engine_adjacent" in names
    assert "container_matches_vector" in names


def test_info_flags_on_worked_example():
    report = run_spec_checks(EXAMPLE_SPEC)
    # The two adjacent orders differ on this instance, but both tree
    # identities hold.
    assert report.info["engine_equals_recursive"] is False
    assert report.info["twisted_tree_equals_engine"] is True
    assert report.info["global_tree_equals_recursive"] is True


def test_degenerate_specs_pass():
    for m, k in [((2, 2), 4), ((3,), 0), ((5,), 3), ((1, 1), 2)]:
        report = run_spec_checks(MultisetSpec(m=m, k=k))
        assert report.passed, (m, k, report.first_failure())


def test_random_spec_generator_bounds():
    specs = list(iter_random_specs(50, max_n=4, max_m=3, seed=2))
    assert len(specs) == 50
    for spec in specs:
        assert 1 <= spec.n <= 4
        assert all(1 <= mult <= 3 for mult in spec.m)
        assert 0 <= spec.k <= spec.total


def test_random_spec_generator_deterministic():
    a = list(iter_random_specs(20, max_n=5, max_m=4, seed=9))
    b = list(iter_random_specs(20, max_n=5, max_m=4, seed=9))
    assert a == b


def test_random_batch_passes():
    for spec in iter_random_specs(40, max_n=5, max_m=3, seed=13):
        report = run_spec_checks(spec)
        assert report.passed, (spec, report.first_failure())
