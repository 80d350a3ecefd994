"""Canonical JSON: byte-stable round trips and strict parsing.

Round-trip tests assert emit -> parse -> emit gives identical bytes.
Parse tests distinguish the two failure modes: structural problems
(wrong keys, bad shapes, non-integers) raise ParseError, semantic
problems (a matrix that does not respect the declared relations, a
group conflict) raise DomainError.
"""

import copy
import json

import pytest

from slicekit.errors import DomainError, ParseError
from slicekit.mackey import check_mackey_axioms, mackey_preset
from slicekit.serialize import (
    canonical_json,
    group_to_json,
    invariants_to_json,
    mackey_to_json,
    parse_group_obj,
    parse_mackey_obj,
    parse_presentation,
    presentation_to_json,
    slices_view_json,
    tower_to_json,
)

E_ID = "0.1"
C2_ID = "0.1-1.0"

Z1 = {"free_rank": 1, "torsion": []}


# ---------------------------------------------------------------------------
# canonical form

def test_canonical_json_shape():
    text = canonical_json({"b": 1, "a": [1, 2]})
    assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    assert text.endswith("\n")


def test_invariants_to_json():
    assert invariants_to_json((1, (2, 4))) == {"free_rank": 1, "torsion": [2, 4]}
    assert invariants_to_json((0, ())) == {"free_rank": 0, "torsion": []}


# ---------------------------------------------------------------------------
# groups

def test_group_round_trip_bytes(groups):
    for G in groups.values():
        obj = group_to_json(G)
        text = canonical_json(obj)
        G2 = parse_group_obj(json.loads(text))
        assert G2.elements == G.elements
        assert canonical_json(group_to_json(G2)) == text


def test_group_preset_object(groups):
    G = parse_group_obj({"preset": "S3"})
    assert G.elements == groups["S3"].elements


def test_group_parse_errors():
    bad = [
        "not an object",
        {},
        {"degree": 2},
        {"generators": [[1, 0]]},
        {"degree": 0, "generators": []},
        {"degree": True, "generators": []},
        {"degree": 2, "generators": [[0, 0]]},
        {"degree": 2, "generators": [[1, 0, 2]]},
        {"degree": 2, "generators": "nope"},
        {"preset": "Z99"},
        {"preset": 7},
    ]
    for obj in bad:
        with pytest.raises(ParseError):
            parse_group_obj(obj)


def test_group_element_cap():
    with pytest.raises(DomainError):
        parse_group_obj({"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]},
                        element_cap=2)


# ---------------------------------------------------------------------------
# presentations

def test_presentation_round_trip():
    A = parse_presentation({"ngens": 2, "relations": [[2, 0], [0, 4]]}, "here")
    assert A.invariant_factors() == (0, (2, 4))
    assert presentation_to_json(A) == {"ngens": 2, "relations": [[2, 0], [0, 4]]}


def test_presentation_parse_errors():
    bad = [
        [],
        {"ngens": 1},
        {"ngens": 1, "relations": [], "extra": 0},
        {"ngens": -1, "relations": []},
        {"ngens": True, "relations": []},
        {"ngens": 1, "relations": [[1, 2]]},
        {"ngens": 1, "relations": [[True]]},
        {"ngens": 1, "relations": 3},
    ]
    for obj in bad:
        with pytest.raises(ParseError):
            parse_presentation(obj, "here")


# ---------------------------------------------------------------------------
# Mackey functors

def test_mackey_round_trip_bytes(functors):
    for key in (("C2", "burnside"), ("C4", "constant-Z2"), ("S3", "fixed-sign")):
        M = functors[key]
        text = canonical_json(mackey_to_json(M))
        M2, from_preset = parse_mackey_obj(json.loads(text))
        assert from_preset is False
        assert canonical_json(mackey_to_json(M2)) == text
        assert check_mackey_axioms(M2).passed


def test_mackey_preset_objects(groups, functors):
    G = groups["C2"]
    cases = [
        ({"preset": "burnside"}, functors[("C2", "burnside")]),
        ({"preset": "constant"}, functors[("C2", "constant-Z")]),
        ({"preset": "constant", "modulus": 2}, functors[("C2", "constant-Z2")]),
        ({"preset": "fixed", "action": "sign"}, functors[("C2", "fixed-sign")]),
        ({"preset": "fixed", "action": "regular"}, functors[("C2", "fixed-regular")]),
        ({"preset": "fixed", "matrices": [[[-1]]]}, functors[("C2", "fixed-sign")]),
    ]
    for obj, want in cases:
        M, from_preset = parse_mackey_obj(obj, group=G)
        assert from_preset is True
        assert mackey_to_json(M) == mackey_to_json(want)


def test_mackey_preset_errors(groups):
    G = groups["C2"]
    with pytest.raises(ParseError):
        parse_mackey_obj({"preset": "burnside"})  # no group to build over
    bad = [
        {"preset": "septenary"},
        {"preset": 3},
        {"preset": "burnside", "modulus": 2},
        {"preset": "constant", "modulus": -1},
        {"preset": "constant", "modulus": True},
        {"preset": "constant", "extra": 1},
        {"preset": "fixed"},
        {"preset": "fixed", "action": "cyclic"},
        {"preset": "fixed", "matrices": "x"},
        {"preset": "fixed", "matrices": [[[1, 0]]]},
        {"preset": "fixed", "matrices": [[]]},
    ]
    for obj in bad:
        with pytest.raises(ParseError):
            parse_mackey_obj(obj, group=G)
    with pytest.raises(DomainError):
        parse_mackey_obj({"preset": "fixed", "matrices": [[[2]]]}, group=G)


def test_mackey_parse_structural_errors(functors):
    good = mackey_to_json(functors[("C2", "burnside")])

    def corrupt(fn):
        j = copy.deepcopy(good)
        fn(j)
        return j

    cases = [
        corrupt(lambda j: j.pop("levels")),
        corrupt(lambda j: j.update(extra=1)),
        corrupt(lambda j: j["levels"].pop(E_ID)),
        corrupt(lambda j: j["levels"].update(bogus={"ngens": 1, "relations": []})),
        corrupt(lambda j: j["res"].pop("%s,%s" % (C2_ID, E_ID))),
        corrupt(lambda j: j["res"].update({"x,y": [[1]]})),
        corrupt(lambda j: j["tr"].update({"%s,%s" % (E_ID, C2_ID): [[1]]})),
        corrupt(lambda j: j["res"].__setitem__("%s,%s" % (C2_ID, E_ID), [[1]])),
        corrupt(lambda j: j["res"].__setitem__("%s,%s" % (C2_ID, E_ID), [[1.5, 0]])),
        corrupt(lambda j: j["conj"].clear()),
        corrupt(lambda j: j.__setitem__("conj", [])),
    ]
    for j in cases:
        with pytest.raises(ParseError):
            parse_mackey_obj(j)


def test_mackey_parse_relation_violation(functors):
    j = copy.deepcopy(mackey_to_json(functors[("C2", "constant-Z2")]))
    # re-declare the bottom level as free: res Z/2 -> Z is no longer a map
    j["levels"][E_ID]["relations"] = []
    with pytest.raises(DomainError):
        parse_mackey_obj(j)


def test_mackey_group_conflict(groups, functors):
    j = mackey_to_json(functors[("C2", "burnside")])
    M, _ = parse_mackey_obj(j, group=groups["C2"])
    assert M.group.elements == groups["C2"].elements
    with pytest.raises(DomainError):
        parse_mackey_obj(j, group=groups["C3"])


# ---------------------------------------------------------------------------
# towers

def test_tower_json_burnside_plus(towers):
    j = tower_to_json(towers[("C2", "burnside", 1)])
    assert j["shift"] == 1
    assert j["variant"] == "regular"
    assert j["slices"] == {
        "1": {E_ID: Z1, C2_ID: Z1},
        "2": {C2_ID: Z1},
    }


def test_tower_json_constant_minus(towers):
    j = tower_to_json(towers[("C2", "constant-Z", -1)])
    assert j["shift"] == -1
    assert j["slices"] == {
        "-1": {E_ID: Z1, C2_ID: Z1},
        "-2": {C2_ID: {"free_rank": 0, "torsion": [2]}},
    }


def test_tower_json_base_round_trips(towers):
    T = towers[("C4", "burnside", 1)]
    j = tower_to_json(T)
    M2, _ = parse_mackey_obj(j["base"])
    assert canonical_json(mackey_to_json(M2)) == canonical_json(j["base"])


def test_tower_json_deterministic(groups):
    from slicekit.slices import em_tower_plus
    a = tower_to_json(em_tower_plus(mackey_preset(groups["S3"], "burnside")))
    b = tower_to_json(em_tower_plus(mackey_preset(groups["S3"], "burnside")))
    assert canonical_json(a) == canonical_json(b)


def test_slices_view_shape(towers):
    T = towers[("C2", "burnside", 1)]
    view = slices_view_json(T)
    assert set(view) == {"group", "shift", "variant", "slices"}
    assert view["group"] == group_to_json(T.base.group)
    assert view["slices"] == tower_to_json(T)["slices"]
