import glob
import json
import os

import pytest

from hkforge.errors import ParseError, PreconditionViolated
from hkforge.problem import load_problem, problem_from_dict

PROBLEMS = os.path.join(os.path.dirname(__file__), "..", "problems")


def test_whole_corpus_loads():
    paths = sorted(glob.glob(os.path.join(PROBLEMS, "*.json")))
    assert len(paths) >= 20
    for path in paths:
        problem = load_problem(path)
        assert problem.ring.field.p >= 2
        for rideal in problem.ideals.values():
            assert rideal.presentation is problem.presentation


def test_node_file_contents():
    problem = load_problem(os.path.join(PROBLEMS, "node.json"))
    assert problem.ring.names == ("x", "y")
    assert len(problem.presentation.ci_gens) == 1
    assert set(problem.ideals) == {"I", "a", "b"}
    assert problem.ideal("I").colength() == 1
    assert problem.group is None


def test_group_file_contents():
    problem = load_problem(os.path.join(PROBLEMS, "order2.json"))
    assert problem.group == [[[4, 0], [0, 4]]]
    assert problem.ideals == {}


def test_defaults():
    problem = problem_from_dict({"p": 5, "vars": ["x"]})
    assert problem.ring.order.name == "grevlex"
    assert len(problem.presentation.ci_gens) == 0
    assert problem.ideals == {}
    assert problem.group is None


def test_order_override():
    problem = problem_from_dict({"p": 5, "vars": ["x", "y"], "order": "lex"})
    assert problem.ring.order.name == "lex"


def test_unknown_ideal_name():
    problem = problem_from_dict({"p": 5, "vars": ["x"], "ideals": {"I": ["x"]}})
    with pytest.raises(ParseError) as exc:
        problem.ideal("J")
    assert "I" in str(exc.value)


def test_non_ci_quotient_rejected():
    # two relations in a 2-variable ring must cut the dimension to 0
    with pytest.raises(PreconditionViolated):
        problem_from_dict(
            {"p": 5, "vars": ["x", "y"], "quotient": ["x*y", "x^2"]}
        )


@pytest.mark.parametrize(
    "data",
    [
        [1, 2],
        {"p": "five", "vars": ["x"]},
        {"p": 5},
        {"p": 5, "vars": []},
        {"p": 5, "vars": ["x", "2bad"]},
        {"p": 5, "vars": "xy"},
        {"p": 5, "vars": ["x"], "order": 3},
        {"p": 5, "vars": ["x"], "order": "mystery"},
        {"p": 5, "vars": ["x"], "quotient": "x^2"},
        {"p": 5, "vars": ["x"], "ideals": ["x"]},
        {"p": 5, "vars": ["x"], "ideals": {"I": "x"}},
        {"p": 5, "vars": ["x"], "ideals": {"I": [3]}},
        {"p": 5, "vars": ["x", "y"], "group": []},
        {"p": 5, "vars": ["x", "y"], "group": [[[1, 0]]]},
        {"p": 5, "vars": ["x", "y"], "group": [[[1, 0], [0, "1"]]]},
        {"p": 5, "vars": ["x"], "extra": True},
    ],
)
def test_malformed_shapes(data):
    with pytest.raises(ParseError):
        problem_from_dict(data)


def test_nonprime_p_rejected():
    with pytest.raises(PreconditionViolated):
        problem_from_dict({"p": 6, "vars": ["x"]})


def test_parse_errors_surface_with_ideal_context():
    with pytest.raises(ParseError):
        problem_from_dict({"p": 5, "vars": ["x"], "ideals": {"I": ["x +"]}})


def test_missing_file_and_bad_json(tmp_path):
    with pytest.raises(ParseError):
        load_problem(str(tmp_path / "absent.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_problem(str(bad))


def test_loading_matches_dict_route(tmp_path):
    data = {
        "p": 5,
        "vars": ["x", "y"],
        "quotient": ["x*y"],
        "ideals": {"I": ["x", "y"]},
    }
    path = tmp_path / "roundtrip.json"
    path.write_text(json.dumps(data))
    problem = load_problem(str(path))
    direct = problem_from_dict(data)
    assert problem.ring.signature() == direct.ring.signature()
    assert problem.ideal("I").equals(direct.ideal("I"))
