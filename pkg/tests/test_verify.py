"""Verification suites: clean runs, the corruption hook, and determinism
under different worker counts."""

from fractions import Fraction

import pytest

from sl2forms.verify import (
    SuiteResult,
    sweep_decomposition,
    sweep_karlsson_minton,
    sweep_omega_signs,
    sweep_relations,
    sweep_series_route,
    sweep_singular_vectors,
    sweep_star_forms,
    sweep_x_power,
    verify_all,
)

SUITE_NAMES = [
    "relations",
    "star-forms",
    "decomposition",
    "singular-vectors",
    "x-power",
    "karlsson-minton",
    "3f2-route",
    "omega-signs",
]


def strip_timing(suites):
    return [(s.name, s.checks, s.failures) for s in suites]


class TestSuites:
    def test_verify_all_clean_at_small_bound(self):
        suites = verify_all(3)
        assert [s.name for s in suites] == SUITE_NAMES
        assert all(s.ok for s in suites)
        assert all(s.checks > 0 for s in suites)

    def test_verify_all_bound_zero(self):
        suites = verify_all(0)
        assert all(s.ok for s in suites)

    def test_nontrivial_q_r(self):
        suites = verify_all(2, q=Fraction(1, 2), r=Fraction(-3))
        assert all(s.ok for s in suites)

    def test_check_counts(self):
        assert sweep_relations(2).checks == 3 + 9       # irreducibles + pairs
        assert sweep_star_forms(2).checks == 6 + 9      # canonical q,r + tensor pairs
        assert sweep_decomposition(2).checks == 9
        assert sweep_singular_vectors(2).checks == sum(
            min(m, n) + 1 for m in range(3) for n in range(3)
        )
        assert sweep_x_power(2).checks == sweep_singular_vectors(2).checks
        assert sweep_karlsson_minton(1).checks == 6
        assert sweep_omega_signs(2).checks == sweep_singular_vectors(2).checks

    def test_corruption_flips_relations_suite(self):
        suites = verify_all(2, corrupt=True)
        by_name = {s.name: s for s in suites}
        assert not by_name["relations"].ok
        assert "corrupt" in by_name["relations"].failures[0]
        # the damage is confined to the injected module
        for name in SUITE_NAMES[1:]:
            assert by_name[name].ok

    def test_corruption_at_bound_zero(self):
        suites = verify_all(0, corrupt=True)
        assert not suites[0].ok


class TestDeterminismAndParallelism:
    def test_worker_count_does_not_change_results(self):
        serial = verify_all(2, jobs=1)
        parallel = verify_all(2, jobs=2)
        assert strip_timing(serial) == strip_timing(parallel)

    def test_parallel_star_sweep_matches_serial(self):
        q, r = Fraction(1, 2), Fraction(-1)
        a = sweep_star_forms(3, q, r, jobs=1)
        b = sweep_star_forms(3, q, r, jobs=2)
        assert (a.name, a.checks, a.failures) == (b.name, b.checks, b.failures)

    def test_repeat_runs_identical(self):
        assert strip_timing(verify_all(2)) == strip_timing(verify_all(2))
