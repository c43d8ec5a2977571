import json
import math
import os
from pathlib import Path

import pytest

import fbsel

DATA = Path(os.environ.get("FBSEL_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_worked_example_dp():
    inst = fbsel.load_system(str(DATA / "worked_example.json"))
    assert (inst.n, inst.m, inst.p) == (11, 4, 3)
    report = fbsel.solve_dp(inst)
    assert report.method == "dp"
    assert report.links == [(2, 3)]
    assert report.cost == 5
    assert report.dp_w == [0, 2, 5, 5, 5]
    assert report.feasible
    assert json.loads(report.to_json())["links"] == [[2, 3]]


def test_reduction_and_exact():
    inst = fbsel.reduce_set_cover(5, [[1, 2], [2, 3], [3, 4, 5]], [1, 1, 1])
    assert (inst.n, inst.m, inst.p) == (6, 1, 3)
    assert fbsel.condense(inst)[0] == [6]
    assert fbsel.solve_exact(inst).cost == 2
    weighted = fbsel.reduce_set_cover(5, [[1, 2], [2, 3], [3, 4, 5]], [2, 3, 4])
    greedy = fbsel.solve_greedy(weighted)
    assert greedy.links == [(1, 1), (1, 3)]
    assert greedy.cost == 6


def test_check_sfm_diagnostics():
    inst = fbsel.load_system(str(DATA / "cover_reduced.json"))
    empty = fbsel.check_sfm(inst, [])
    assert not empty.feasible
    assert empty.uncovered_states == [1, 2, 3, 4, 5, 6]
    partial = fbsel.check_sfm(inst, [(1, 1)])
    assert partial.uncovered_states == [3, 4, 5]
    assert fbsel.check_sfm(inst, [(1, 1), (1, 3)]).feasible


def test_instance_construction_and_round_trip():
    inst = fbsel.Instance(2, 1, 1, [(2, 1)], [(1, 1)], [(1, 2)], [[math.inf]])
    assert inst.cost == [[math.inf]]
    assert fbsel.parse_system(inst.to_json()) == inst
    assert not fbsel.solve_two_stage(inst).solved
    with pytest.raises(fbsel.DimensionError):
        fbsel.Instance(2, 1, 1, [(3, 1)], [], [], [[1]])


def test_generator_determinism_and_two_stage():
    a = fbsel.generate_line(seed=11, sccs=4, perfect_matching=False)
    b = fbsel.generate_line(seed=11, sccs=4, perfect_matching=False)
    assert a == b
    report = fbsel.solve_two_stage(a)
    if report.solved:
        assert report.feasible


def test_errors_and_cli():
    inst = fbsel.load_system(str(DATA / "worked_example.json"))
    with pytest.raises(fbsel.PreconditionError):
        fbsel.solve_greedy(inst)
    with pytest.raises(fbsel.ParseError):
        fbsel.parse_system("{}")
    code, out, _ = fbsel.run_cli(["solve-dp", str(DATA / "worked_example.json"), "--format", "structured"])
    assert code == 0
    assert json.loads(out)["cost"] == 5
    assert "C3 -> C4;" in fbsel.to_dot(inst, condensation=True)
