"""
Tests for the report-producing tools.
"""

import json

import pytest

from src.errors import InputFormatError, ParameterError
from src.groups.catalog import named_group
from src.groups.matgroup import group_to_json
from src.tools import (
    compute_degree,
    error_report,
    get_bound_report,
    get_bound_table,
    get_gl3_cases,
    is_error,
    run_algorithm1,
    run_examples,
    run_verify,
)
from src.tools.envelope_tools import load_json_file
from src.tools.verify_tools import CASES, oracle_check, run_case, sympy_oracle_check


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document to a temporary file and return its path."""

    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return write


class TestErrorReports:
    """Tests for error dictionaries."""

    def test_field_from_exception(self):
        """Test that the input field is copied from the exception."""
        report = error_report(InputFormatError("bad", field="vars"))
        assert report == {"error": "bad", "kind": "InputFormatError", "field": "vars"}
        assert is_error(report)

    def test_explicit_field(self):
        """Test that an explicit field wins."""
        report = error_report(ParameterError("too big"), field="n")
        assert report["field"] == "n"
        assert report["kind"] == "ParameterError"

    def test_success_is_not_error(self):
        """Test that normal reports are not errors."""
        assert not is_error({"d": 3})


class TestBoundTools:
    """Tests for bound reports."""

    def test_single_report(self):
        """Test the report at n = 2."""
        report = get_bound_report(2)
        assert report["schur_J"] == 384064
        assert report["schur_J_integral"] is True
        assert report["headline"] == 6
        assert report["tight"] == 3072512
        assert report["findings"] == []

    @pytest.mark.parametrize("n", [0, 25])
    def test_out_of_range(self, n):
        """Test that n outside the configured range is an error."""
        report = get_bound_report(n)
        assert report["kind"] == "ParameterError"

    def test_range_cap_from_settings(self, monkeypatch):
        """Test that the n cap is read from settings."""
        monkeypatch.setenv("TORIC_MAX_BOUNDS_N", "3")
        assert is_error(get_bound_report(4))
        assert not is_error(get_bound_report(3))

    def test_table(self):
        """Test a range of reports."""
        table = get_bound_table(1, 4)
        assert [r["n"] for r in table["reports"]] == [1, 2, 3, 4]
        assert table["findings"] == []

    def test_table_reversed_range(self):
        """Test that an empty range names the offending flag."""
        assert get_bound_table(4, 2)["field"] == "to"

    def test_gl3_cases(self):
        """Test the GL3 case report."""
        report = get_gl3_cases()
        assert report["maximum"] == 360
        assert report["matches"] is True
        assert len(report["cases"]) == 5


class TestAlgorithm1Tool:
    """Tests for the degree search report."""

    def test_catalog_tag(self):
        """Test a run on a catalog group."""
        report = run_algorithm1(group="cyclic-3")
        assert report["d"] == 3
        assert report["group"] == "cyclic-3"
        assert report["order_of_group"] == 3
        assert report["num_lines"] == 3
        assert report["order"] == "grlex"
        assert report["strategy"] == "interpolation"

    def test_compare_orders(self):
        """Test that both graded orders are reported."""
        report = run_algorithm1(group="binary-dihedral-2", order="grevlex", compare_orders=True)
        assert report["order"] == "grevlex"
        assert set(report["d_by_order"]) == {"grlex", "grevlex"}
        assert len(set(report["d_by_order"].values())) == 1

    def test_intersection_strategy(self):
        """Test that the strategy flag is honored."""
        report = run_algorithm1(group="cyclic-4", strategy="intersection")
        assert report["strategy"] == "intersection"
        assert report["d"] == 2

    def test_group_file(self, write_json):
        """Test a run from a group file named after its stem."""
        path = write_json("cyclic5.json", group_to_json(named_group("cyclic-5")))
        report = run_algorithm1(file=str(path))
        assert report["group"] == "cyclic5"
        assert report["d"] == 5

    @pytest.mark.parametrize(
        "kwargs,kind",
        [
            ({}, "ParameterError"),
            ({"group": "cyclic-3", "file": "g.json"}, "ParameterError"),
            ({"group": "quaternion"}, "ParameterError"),
            ({"group": "dihedral-example-2"}, "GroupShapeError"),
            ({"group": "permutation-diag-3"}, "GroupShapeError"),
        ],
    )
    def test_errors(self, kwargs, kind):
        """Test that failures come back as error reports."""
        assert run_algorithm1(**kwargs)["kind"] == kind

    def test_missing_file(self, tmp_path):
        """Test that an unreadable file names the file field."""
        report = run_algorithm1(file=str(tmp_path / "absent.json"))
        assert report["kind"] == "InputFormatError"
        assert report["field"] == "file"

    def test_bad_group_file(self, write_json):
        """Test that a malformed group file names the offending entry."""
        path = write_json("bad.json", {"n": 2, "generators": [[[["1"], ["x"]], [["0"], ["1"]]]]})
        report = run_algorithm1(file=str(path))
        assert report["field"] == "generators.0.0.1"


class TestLoadJson:
    """Tests for reading input files."""

    def test_invalid_json(self, tmp_path):
        """Test that a syntax error is reported."""
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(InputFormatError):
            load_json_file(path)

    def test_not_an_object(self, write_json):
        """Test that the top level must be an object."""
        with pytest.raises(InputFormatError):
            load_json_file(write_json("list.json", [1, 2]))


class TestComputeDegree:
    """Tests for ideal measurement."""

    def test_empty_ideal(self, write_json):
        """Test that no generators give the whole space."""
        path = write_json("empty.json", {"vars": ["a", "b", "c", "d"], "generators": []})
        report = compute_degree(str(path))
        assert (report["dimension"], report["degree"]) == (4, 1)
        assert report["gb_size"] == 0
        assert report["gb_max_degree"] == 0
        assert report["basis"] == []

    def test_twisted_cubic(self):
        """Test the twisted cubic."""
        data = {"vars": ["x", "y", "w"], "generators": ["y - x^2", "w - x^3"], "order": "grevlex"}
        report = compute_degree(data=data)
        assert (report["dimension"], report["degree"]) == (1, 3)
        assert report["order"] == "grevlex"
        assert report["vars"] == ["x", "y", "w"]

    def test_cyclotomic_coefficients(self):
        """Test a root of unity in the coefficient field."""
        data = {"vars": ["x"], "conductor": 5, "generators": ["x^5 - 1"]}
        assert compute_degree(data=data)["degree"] == 5
        data = {"vars": ["x"], "conductor": 5, "generators": ["x - z"]}
        report = compute_degree(data=data)
        assert (report["dimension"], report["degree"], report["gb_size"]) == (0, 1, 1)

    def test_unit_ideal(self):
        """Test that an empty zero set is an error."""
        report = compute_degree(data={"vars": ["x", "y"], "generators": ["x", "x - 1"]})
        assert report["kind"] == "EmptyVarietyError"

    def test_mixed_dimension(self):
        """Test that a plane union a line has no single degree."""
        report = compute_degree(data={"vars": ["x", "y", "w"], "generators": ["x*y", "x*w"]})
        assert report["kind"] == "MixedDimensionError"

    @pytest.mark.parametrize(
        "data,field",
        [
            ({"vars": ["x", "y"], "generators": ["x", "x +* y"]}, "generators.1"),
            ({"vars": ["x", "y"], "generators": ["x", "q"]}, "generators.1"),
            ({"vars": ["x", "x"], "generators": []}, "vars"),
            ({"vars": ["x", "z"], "generators": []}, "vars"),
            ({"vars": ["x"], "generators": [], "order": "lex"}, "order"),
            ({"vars": ["x"], "generators": [], "extra": 1}, "extra"),
        ],
    )
    def test_field_errors(self, data, field):
        """Test that invalid ideal files name the offending field."""
        report = compute_degree(data=data)
        assert report["kind"] == "InputFormatError"
        assert report["field"] == field

    def test_code_in_generator_is_not_run(self, tmp_path):
        """Test that a generator outside the polynomial grammar is rejected unevaluated."""
        marker = tmp_path / "marker"
        text = f"__import__('pathlib').Path({str(marker)!r}).write_text('x') and x"
        report = compute_degree(data={"vars": ["x"], "generators": ["x", text]})
        assert report["kind"] == "InputFormatError"
        assert report["field"] == "generators.1"
        assert not marker.exists()

    def test_field_not_repeated_in_message(self):
        """Test that re-wrapped parse errors keep the field out of the message."""
        report = compute_degree(data={"vars": ["x", "y"], "generators": ["x +* y"]})
        assert report["field"] == "generators.0"
        assert not report["error"].startswith("generators")

    def test_nothing_given(self):
        """Test that an ideal source is required."""
        assert compute_degree()["kind"] == "ParameterError"


class TestExampleTools:
    """Tests for the worked example reports."""

    def test_all_examples(self):
        """Test that every family matches."""
        report = run_examples()
        assert report["all_match"] is True
        assert len(report["examples"]) == 5

    def test_one_example(self):
        """Test a single family with a parameter."""
        report = run_examples("roots", 4)
        assert report["examples"][0]["group"] == {"dimension": 0, "degree": 4}

    def test_param_needs_name(self):
        """Test that a parameter alone is rejected."""
        assert run_examples(param=3)["field"] == "param"

    def test_param_out_of_range(self):
        """Test that a parameter past its cap is an error."""
        assert run_examples("roots", 99)["kind"] == "ParameterError"

    def test_gl2_table(self):
        """Test the GL2 envelope table report."""
        report = run_examples("gl2-table")
        assert [row["name"] for row in report["rows"]] == ["GL2", "B", "D", "D0"]
        assert all(row["classified_as"] for row in report["rows"])


class TestVerifyTools:
    """Tests for the acceptance suite."""

    @pytest.mark.parametrize("seed", range(5))
    def test_oracle_seeds(self, seed):
        """Test that random point ideals pass every property check."""
        assert oracle_check(seed) is None

    @pytest.mark.parametrize("seed", range(4))
    @pytest.mark.parametrize("order_name", ["grlex", "grevlex"])
    def test_polynomial_ideals_match_sympy(self, seed, order_name):
        """Test that random polynomial ideals get the same reduced basis as sympy."""
        assert sympy_oracle_check(seed, order_name) is None

    def test_single_case(self):
        """Test one acceptance case row."""
        row = run_case("bound-table")
        assert row["case"] == "bound-table"
        assert row["passed"] is True

    def test_subset(self):
        """Test a subset of the suite."""
        report = run_verify(cases=["bound-table", "groebner-oracle", "catalog-orders"])
        assert report["passed"] is True
        assert [row["case"] for row in report["cases"]] == [
            "bound-table",
            "groebner-oracle",
            "catalog-orders",
        ]

    def test_unknown_case(self):
        """Test that unknown case names are rejected."""
        report = run_verify(cases=["bound-table", "nonsense"])
        assert report["field"] == "cases"

    @pytest.mark.slow
    def test_full_suite(self):
        """Test every acceptance case."""
        report = run_verify()
        assert len(report["cases"]) == len(CASES)
        assert report["passed"] is True
