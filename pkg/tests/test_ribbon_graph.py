"""Tests for graph parsing, validation, faces and labelings."""

from fractions import Fraction

import pytest

from chf_cli.core.builtins import BUILTIN_TEXTS, builtin, builtin_names
from chf_cli.core.errors import (
    GraphFormatError,
    GraphValidationError,
    LabelingFormatError,
    UnknownBuiltinError,
)
from chf_cli.core.ribbon_graph import (
    EdgeLabeling,
    RibbonGraph,
    faces,
    genus,
    parse_graph,
    parse_labeling,
)


class TestParseGraph:
    """Tests for the graph file format."""

    def test_theta_permutations(self, theta: RibbonGraph) -> None:
        """Darts are numbered in declaration order, rho0 follows the listed rotation."""
        assert theta.dart_names == ("B", "A", "C", "B'", "C'", "A'")
        assert theta.rho0 == (1, 2, 0, 4, 5, 3)
        assert theta.rho1 == (3, 5, 4, 0, 2, 1)
        assert theta.base == 0

    def test_comments_and_blank_lines(self) -> None:
        """Comments and blank lines are ignored."""
        text = "\n# a comment\n" + BUILTIN_TEXTS["theta"] + "\n   # trailing\n"
        assert parse_graph(text) == builtin("theta")

    def test_unknown_dart_in_edge_reports_position(self) -> None:
        """An unknown dart name gives the line and column."""
        text = "vertex u: A B C\nvertex v: A' B' C'\nedge A X\nedge B B'\nedge C C'\n"
        with pytest.raises(GraphFormatError) as excinfo:
            parse_graph(text)
        assert excinfo.value.line == 3
        assert excinfo.value.column == 8
        assert "line 3, column 8" in str(excinfo.value)

    def test_unknown_statement(self) -> None:
        """Unknown keywords are format errors."""
        with pytest.raises(GraphFormatError):
            parse_graph("vertex u: A B C\nface A B\n")

    def test_missing_colon(self) -> None:
        with pytest.raises(GraphFormatError):
            parse_graph("vertex u A B C\n")

    def test_valence_two_rejected(self) -> None:
        """Every vertex must have exactly three darts."""
        with pytest.raises(GraphValidationError, match="valence 2"):
            parse_graph("vertex u: A B\n")

    def test_unpaired_dart_rejected(self) -> None:
        text = "vertex u: A B C\nvertex v: A' B' C'\nedge A A'\nedge B B'\n"
        with pytest.raises(GraphValidationError, match="unpaired"):
            parse_graph(text)

    def test_dart_paired_twice_rejected(self) -> None:
        text = "vertex u: A B C\nvertex v: A' B' C'\nedge A A'\nedge A B'\nedge C C'\n"
        with pytest.raises(GraphValidationError, match="paired twice"):
            parse_graph(text)

    def test_self_pairing_rejected(self) -> None:
        text = "vertex u: A B C\nvertex v: A' B' C'\nedge A A\n"
        with pytest.raises(GraphValidationError, match="itself"):
            parse_graph(text)

    def test_disconnected_rejected(self) -> None:
        """Two separate theta graphs do not form one dessin."""
        text = BUILTIN_TEXTS["theta"].replace("base B\n", "") + (
            "vertex x: P Q R\nvertex y: P' R' Q'\nedge P P'\nedge Q Q'\nedge R R'\n"
        )
        with pytest.raises(GraphValidationError, match="disconnected"):
            parse_graph(text)

    def test_unknown_base(self) -> None:
        with pytest.raises(GraphFormatError, match="unknown base dart"):
            parse_graph(BUILTIN_TEXTS["theta"].replace("base B", "base Z"))


class TestFromPermutations:
    """Tests for building graphs from raw permutations."""

    def test_matches_parsed_theta(self, theta: RibbonGraph) -> None:
        g = RibbonGraph.from_permutations(theta.rho0, theta.rho1)
        assert g.faces() == theta.faces()
        assert g.genus() == 0

    def test_rho1_fixed_point_rejected(self) -> None:
        with pytest.raises(GraphValidationError):
            RibbonGraph.from_permutations((1, 2, 0), (0, 2, 1))

    def test_rho0_not_order_three_rejected(self) -> None:
        with pytest.raises(GraphValidationError):
            RibbonGraph.from_permutations((1, 0, 2, 4, 5, 3), (3, 5, 4, 0, 2, 1))


class TestFaces:
    """Tests for faces, genus and case labels."""

    def test_theta_faces(self, theta: RibbonGraph) -> None:
        assert faces(theta) == [(0, 4), (1, 3), (2, 5)]
        assert theta.face_of == (0, 1, 2, 1, 0, 2)

    def test_case_labels(
        self,
        theta: RibbonGraph,
        tetrahedron: RibbonGraph,
        cube: RibbonGraph,
        quotient411: RibbonGraph,
        twisted_theta: RibbonGraph,
    ) -> None:
        assert theta.case_label() == "<3,3|2,2,2>"
        assert tetrahedron.case_label() == "<3,3,3,3|3,3,3,3>"
        assert cube.case_label() == "<3,3,3,3,3,3,3,3|4,4,4,4,4,4>"
        assert quotient411.case_label() == "<3,3|4,1,1>"
        assert twisted_theta.case_label() == "<3,3|6>"

    def test_genus(self, cube: RibbonGraph, twisted_theta: RibbonGraph) -> None:
        assert genus(cube) == 0
        assert genus(twisted_theta) == 1
        assert twisted_theta.euler_characteristic() == 0

    @pytest.mark.parametrize("chi", [3, 1, 4])
    def test_impossible_euler_characteristic(
        self, theta: RibbonGraph, monkeypatch: pytest.MonkeyPatch, chi: int
    ) -> None:
        monkeypatch.setattr(RibbonGraph, "euler_characteristic", lambda self: chi)
        with pytest.raises(GraphValidationError, match=f"V - E \\+ F = {chi}"):
            theta.genus()

    def test_quotient411_faces(self, quotient411: RibbonGraph) -> None:
        assert quotient411.faces() == [(0, 1, 3, 4), (2,), (5,)]

    def test_every_dart_in_exactly_one_face(self, cube: RibbonGraph) -> None:
        darts = sorted(d for face in cube.faces() for d in face)
        assert darts == list(range(cube.dart_count))

    def test_edge_names(self, tetrahedron: RibbonGraph) -> None:
        assert tetrahedron.edge_names == ("a", "b", "c", "d", "e", "f")


class TestSerialize:
    """Tests for serialization and canonical numbering."""

    @pytest.mark.parametrize("name", builtin_names())
    def test_serialize_parses_back(self, name: str) -> None:
        g = builtin(name)
        assert parse_graph(g.serialize()) == g.canonical()

    def test_canonical_of_permuted_graph(self, theta: RibbonGraph) -> None:
        """Relabeling darts and canonicalizing preserves faces up to renumbering."""
        g = RibbonGraph.from_permutations((2, 0, 1, 5, 3, 4), theta.rho1)
        canonical = g.canonical()
        assert canonical.dual_valences() == g.dual_valences()
        assert canonical.rho0 == (1, 2, 0, 4, 5, 3)

    def test_with_base(self, theta: RibbonGraph) -> None:
        moved = theta.with_base(theta.dart_id("A"))
        assert moved.base == 1
        assert moved.faces() == theta.faces()

    def test_dart_id_unknown(self, theta: RibbonGraph) -> None:
        with pytest.raises(GraphValidationError):
            theta.dart_id("Z")


class TestBuiltins:
    """Tests for the builtin registry."""

    def test_names(self) -> None:
        assert builtin_names() == ["theta", "tetrahedron", "cube", "quotient411", "twisted_theta"]

    def test_unknown(self) -> None:
        with pytest.raises(UnknownBuiltinError, match="known: theta"):
            builtin("dodecahedron")

    def test_named(self) -> None:
        assert builtin("cube").name == "cube"


class TestLabeling:
    """Tests for edge labelings."""

    def test_zero(self, theta: RibbonGraph) -> None:
        z = EdgeLabeling.zero(theta)
        assert z.is_zero
        assert z.at(4) == 0

    def test_parse_rationals(self, theta: RibbonGraph) -> None:
        z = parse_labeling("A 1/2\nB' -2\n# comment\nC 0.25\n", theta)
        assert z.at(theta.dart_id("A'")) == Fraction(1, 2)
        assert z.at(theta.dart_id("B")) == Fraction(-2)
        assert z.at(theta.dart_id("C'")) == Fraction(1, 4)
        assert not z.is_zero

    def test_unlisted_edges_default_to_zero(self, theta: RibbonGraph) -> None:
        z = parse_labeling("A 3\n", theta)
        assert z.values == (Fraction(3), Fraction(0), Fraction(0))

    def test_edge_labeled_twice(self, theta: RibbonGraph) -> None:
        with pytest.raises(LabelingFormatError, match="labeled twice"):
            parse_labeling("A 1\nA' 1\n", theta)

    def test_bad_value(self, theta: RibbonGraph) -> None:
        with pytest.raises(LabelingFormatError, match="line 1"):
            parse_labeling("A one\n", theta)

    def test_unknown_dart(self, theta: RibbonGraph) -> None:
        with pytest.raises(LabelingFormatError, match="unknown dart"):
            parse_labeling("Q 1\n", theta)

    def test_from_edges_wrong_length(self, theta: RibbonGraph) -> None:
        with pytest.raises(LabelingFormatError):
            EdgeLabeling.from_edges(theta, [1, 2])

    def test_serialize_parses_back(self, tetrahedron: RibbonGraph) -> None:
        z = EdgeLabeling.from_edges(tetrahedron, [1, Fraction(-1, 3), 0, 2, 5, Fraction(7, 2)])
        assert parse_labeling(z.serialize(tetrahedron), tetrahedron) == z
