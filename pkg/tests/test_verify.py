"""Tests for the seeded property suites."""

import random
from fractions import Fraction

import pytest

from chf_cli.core.builtins import builtin, builtin_names
from chf_cli.core.ribbon_graph import RibbonGraph
from chf_cli.core.verify import (
    INTEGER_MODE_WORDS,
    PROPERTIES,
    VerifyOptions,
    _check,
    random_cusped_labeling,
    random_labeling,
    run_property,
    run_suite,
)

QUICK = VerifyOptions(seed=42, samples=20)


class TestRandomInputs:
    """Tests for the random generators."""

    def test_labeling_range(self, cube: RibbonGraph, rng: random.Random) -> None:
        for _ in range(20):
            z = random_labeling(rng, cube)
            assert all(-2 <= v <= 2 and (4 * v).denominator == 1 for v in z.values)

    def test_cusped_labeling_solves_system(self, tetrahedron: RibbonGraph, rng: random.Random) -> None:
        z = random_cusped_labeling(rng, tetrahedron)
        assert z is not None
        for face in tetrahedron.faces():
            assert sum((z.at(d) for d in face), Fraction(0)) == 0

    def test_no_cusped_labeling_for_theta(self, theta: RibbonGraph, rng: random.Random) -> None:
        assert random_cusped_labeling(rng, theta) is None


class TestRunProperty:
    """Tests for running single properties."""

    def test_reproducible(self, tetrahedron: RibbonGraph) -> None:
        first = run_property("homomorphism", tetrahedron, tetrahedron.base, QUICK)
        second = run_property("homomorphism", tetrahedron, tetrahedron.base, QUICK)
        assert first == second
        assert first.passed
        assert first.checks == QUICK.samples

    def test_failure_names_seed(self, theta: RibbonGraph, monkeypatch: pytest.MonkeyPatch) -> None:
        def broken(*_: object) -> int:
            _check(False, "gamma is not parabolic")
            return 0

        monkeypatch.setitem(PROPERTIES, "broken", broken)
        result = run_property("broken", theta, theta.base, VerifyOptions(seed=7))
        assert not result.passed
        assert result.detail == "gamma is not parabolic (seed 7)"

    def test_product_relation_skips_higher_genus(self, twisted_theta: RibbonGraph) -> None:
        result = run_property("product-relation", twisted_theta, twisted_theta.base, QUICK)
        assert result.passed
        assert result.checks == 0

    def test_regularity_within_bound(self, quotient411: RibbonGraph) -> None:
        result = run_property("regularity-monodromy", quotient411, quotient411.base, QUICK)
        assert result.passed

    def test_regularity_past_bound(self, quotient411: RibbonGraph) -> None:
        options = VerifyOptions(samples=5, closure_bound=2)
        assert run_property("regularity-monodromy", quotient411, quotient411.base, options).passed


class TestRunSuite:
    """Tests for whole suites."""

    def test_theta_suite(self, theta: RibbonGraph) -> None:
        results = run_suite(theta, theta.base, QUICK)
        assert [r.name for r in results] == list(PROPERTIES)
        assert all(r.passed for r in results), [r.detail for r in results if not r.passed]

    def test_selected_properties(self, cube: RibbonGraph) -> None:
        results = run_suite(cube, cube.base, QUICK, ["farey", "integer-mode"])
        assert [r.name for r in results] == ["farey", "integer-mode"]
        assert all(r.passed for r in results)

    def test_other_base_dart(self, tetrahedron: RibbonGraph) -> None:
        results = run_suite(tetrahedron, 5, QUICK, ["homomorphism", "product-relation", "farey"])
        assert all(r.passed for r in results)

    @pytest.mark.parametrize("name", builtin_names())
    def test_homomorphism_with_defaults(self, name: str) -> None:
        """Float labelings of large words still compare within the default tolerance."""
        g = builtin(name)
        result = run_property("homomorphism", g, g.base, VerifyOptions())
        assert result.passed, result.detail

    def test_integer_mode_samples_500_words(self, theta: RibbonGraph) -> None:
        result = run_property("integer-mode", theta, theta.base, QUICK)
        assert result.passed
        assert result.checks == INTEGER_MODE_WORDS + 1

    @pytest.mark.slow
    @pytest.mark.parametrize("name", builtin_names())
    def test_every_builtin(self, name: str) -> None:
        g = builtin(name)
        results = run_suite(g, g.base, VerifyOptions(seed=2024, samples=100))
        assert all(r.passed for r in results), [r.detail for r in results if not r.passed]
