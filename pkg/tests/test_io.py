import json

import pytest

from radzero import bratteli, gen_cycle, gen_loops, gen_random, hom_finite, to_dot, to_json
from radzero.io import SAFE_INT, jsonable, quiver_from_dict, quiver_to_dict


def test_hom_finite_report():
    r = hom_finite(gen_cycle(3))
    data = json.loads(to_json({"hom_finite": r.value, "explanation": r.explanation}))
    assert data == {
        "schema": "radzero/1",
        "hom_finite": True,
        "explanation": "cyclicization is a disjoint union of trivial cycles",
    }


def test_big_integers_become_strings():
    B = bratteli(gen_loops(10), 20)
    data = json.loads(to_json({"dims": list(B.level_dims)}, "bratteli"))
    assert data["command"] == "bratteli"
    assert data["dims"][7] == 10**14
    assert data["dims"][20] == str(10**40)
    assert jsonable(SAFE_INT) == SAFE_INT and jsonable(-SAFE_INT - 1) == str(-SAFE_INT - 1)


def test_jsonable_containers():
    assert jsonable({1: {"b", "a"}, "t": (1, 2)}) == {"1": ["a", "b"], "t": [1, 2]}
    with pytest.raises(TypeError):
        jsonable(object())


def test_quiver_dict_round_trip():
    for seed in range(20):
        Q = gen_random(seed, 6, 3, valued=True)
        back = quiver_from_dict(json.loads(json.dumps(quiver_to_dict(Q))))
        assert back == Q and back.weights == Q.weights and back.name == Q.name


def test_dot_quiver():
    text = to_dot(gen_cycle(3))
    assert text.count("->") == 3
    assert text.count('[label="(1,1)"]') == 3
    assert sum(1 for line in text.splitlines() if line.strip().startswith('"') and "->" not in line) == 3


def test_dot_shows_weights():
    from radzero import validate

    text = to_dot(validate({"vertices": [1, 2], "arrows": [(1, 2, 1, 2), (2, 1, 2, 1)]}))
    assert 'label="2 (f=2)"' in text and 'label="(1,2)"' in text


def test_dot_bratteli_layers():
    text = to_dot(bratteli(gen_loops(2), 3))
    assert text.count("rank=same") == 4
    assert '"L3:1" [label="1: 8"]' in text
    assert text.count('[label="2"]') == 3
