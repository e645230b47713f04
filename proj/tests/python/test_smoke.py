import json

import pytest

import tourcolor


def triangle():
    return tourcolor.Tournament.parse("3\n101\n")


def test_triangle_values():
    t = triangle()
    k, classes = tourcolor.dichromatic_number(t)
    assert k == 2
    assert sorted(v for c in classes for v in c) == [0, 1, 2]
    gamma, dominators = tourcolor.domination_number(t)
    assert gamma == 2 and len(dominators) == 2


def test_paley_and_s4():
    assert tourcolor.dichromatic_number(tourcolor.Tournament.paley(7))[0] == 3
    assert tourcolor.domination_number(tourcolor.Tournament.paley(7))[0] == 3
    assert tourcolor.dichromatic_number(tourcolor.Tournament.s(4))[0] == 4


def test_constants():
    assert tourcolor.theorem_constants(2) == (2, 3)
    assert tourcolor.theorem_constants(3) == (14, 2787)
    assert tourcolor.theorem_constants(4)[0] == 8420


def test_random_is_deterministic():
    a = tourcolor.Tournament.random(20, 5)
    assert a == tourcolor.Tournament.random(20, 5)
    assert tourcolor.Tournament.parse(a.serialize()) == a


def test_extract_and_local_colouring():
    t = tourcolor.Tournament.random(15, 2)
    trace = tourcolor.extract(t, 2)
    assert len(trace["trace"]["A_prime"]) == 3
    report = tourcolor.color_t_local(t)
    assert report["k"] <= report["bound"]


def test_errors():
    with pytest.raises(tourcolor.ParseError):
        tourcolor.Tournament.parse("3\n10\n")
    with pytest.raises(tourcolor.InfeasibleError):
        tourcolor.dichromatic_number(tourcolor.Tournament.random(80, 1))
    with pytest.raises(IndexError):
        tourcolor.dichromatic_number(triangle(), scope=[5])


def test_cli_entry():
    code, out, _ = tourcolor.run_cli(["constants", "--k", "2"])
    assert code == 0
    assert json.loads(out) == {"schema": 1, "k": 2, "K": 2, "l": 3}
