"""Tests for problem-file parsing, validation paths, and round-trips."""

import json

import numpy as np
import pytest

from ifhv import (
    CriterionKind,
    ParseError,
    ValidationError,
    VersionError,
    parse_problem,
    problem_from_dict,
    serialize_problem,
    write_problem,
)
from ifhv.fixtures import table1_path
from gen import random_problem


@pytest.fixture
def table1_doc():
    return json.loads(table1_path().read_text())


class TestParse:
    def test_bundled_fixture_parses(self):
        problem = parse_problem(table1_path())
        assert problem.alternatives == ("X1", "X2", "X3")
        assert [c.kind for c in problem.criteria] == [CriterionKind.BENEFIT] * 2
        assert problem.evaluations[0][0][0].mu == 0.2
        assert problem.evaluations[0][1][2].mu == 0.6
        assert problem.expertise == ((1.0, 1.0),)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            parse_problem(tmp_path / "nope.problem")

    def test_json_error_reports_location(self, tmp_path):
        path = tmp_path / "broken.problem"
        path.write_text('{"schema_version": 1,,}')
        with pytest.raises(ParseError, match=r":1:"):
            parse_problem(path)


class TestValidation:
    def test_invalid_ifn_cites_cell(self, table1_doc, tmp_path):
        table1_doc["evaluations"]["dm1"]["c1"]["X2"] = [0.7, 0.5]
        path = tmp_path / "bad.problem"
        path.write_text(json.dumps(table1_doc))
        with pytest.raises(ValidationError, match=r"evaluations\.dm1\.c1\.X2"):
            parse_problem(path)

    def test_missing_expertise_section(self, table1_doc):
        del table1_doc["expertise"]
        with pytest.raises(ValidationError, match="expertise"):
            problem_from_dict(table1_doc)

    def test_missing_alternative_cell(self, table1_doc):
        del table1_doc["evaluations"]["dm1"]["c2"]["X3"]
        with pytest.raises(ValidationError, match=r"evaluations\.dm1\.c2\.X3"):
            problem_from_dict(table1_doc)

    def test_unknown_criterion_kind(self, table1_doc):
        table1_doc["criteria"][0]["kind"] = "target"
        with pytest.raises(ValidationError, match="benefit"):
            problem_from_dict(table1_doc)

    def test_expertise_out_of_range(self, table1_doc):
        table1_doc["expertise"]["dm1"]["c1"] = 1.5
        with pytest.raises(ValidationError, match=r"expertise\.dm1\.c1"):
            problem_from_dict(table1_doc)

    def test_unsupported_version(self, table1_doc):
        table1_doc["schema_version"] = 99
        with pytest.raises(VersionError):
            problem_from_dict(table1_doc)

    def test_non_numeric_pair(self, table1_doc):
        table1_doc["importance"]["dm1"]["c1"] = ["high", 0.0]
        with pytest.raises(ValidationError, match=r"importance\.dm1\.c1"):
            problem_from_dict(table1_doc)


class TestRoundTrip:
    def test_parse_serialize_identity_on_fixture(self):
        problem = parse_problem(table1_path())
        assert problem_from_dict(serialize_problem(problem)) == problem

    def test_write_then_parse_random_problems(self, tmp_path):
        rng = np.random.default_rng(70)
        for index in range(25):
            problem = random_problem(rng)
            path = tmp_path / f"p{index}.problem"
            write_problem(problem, path)
            assert parse_problem(path) == problem
