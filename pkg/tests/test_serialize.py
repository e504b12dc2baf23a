import json

import pytest

from weakhopf import zoo
from weakhopf.coreops import WeakHopfAlgebra, check_weak_bialgebra
from weakhopf.errors import ParseError
from weakhopf.scalars import Field, Q
from weakhopf.serialize import (dumps, load_pair, load_structure, pair_from_json, pair_to_json,
                                structure_from_json, structure_to_json)

from helpers import F7, pair

PAIR_DIR = __import__("pathlib").Path(__file__).resolve().parent.parent / "pairs"


def same(a, b):
    return all(getattr(a.wb, k) == getattr(b.wb, k) for k in ("M", "u", "D", "e"))


@pytest.mark.parametrize("h", [zoo.hg("C3", Q), zoo.hg("C3", F7), zoo.kaplansky(zoo.groupoid_algebra("C2", Q)),
                               zoo.dual(zoo.groupoid_algebra("S3", Q))], ids=["hgC3", "hgC3F7", "kap", "dualS3"])
def test_structure_round_trip(h, tmp_path):
    doc = structure_to_json(h)
    p = tmp_path / "h.json"
    p.write_text(dumps(doc))
    back = load_structure(p)
    assert isinstance(back, WeakHopfAlgebra) and same(back, h) and back.S == h.S
    assert structure_to_json(back) == doc
    assert list(back.labels) == list(h.labels)


def test_rationals_written_as_strings():
    doc = structure_to_json(zoo.hg("C2", Q))
    assert doc["field"] == "Q" and doc["counit"] == [2, 0]
    assert doc["comult"][0][0][0] == "1/2"
    assert structure_to_json(zoo.hg("C2", Field(3)))["field"] == {"Fp": 3}


def test_pair_round_trip():
    mp = pair("lambda_z")
    doc = json.loads(dumps(pair_to_json(mp)))
    back = pair_from_json(doc)
    assert back.T == mp.T and back.R == mp.R and same(back.h, mp.h)


def test_pair_files_load():
    for name in ["hg_c2", "hg_c2xc2", "hg_c3_f7", "lambda_z", "kaplansky_c2"]:
        mp = load_pair(PAIR_DIR / f"{name}.json")
        assert mp.h.dim >= 2
    assert load_pair(PAIR_DIR / "kaplansky_c2.json").h.dim == 3


def test_recipe_in_structure_position():
    h = structure_from_json({"field": "Q", "example": "hg", "group": "C2"})
    assert same(h, zoo.hg("C2", Q))


@pytest.mark.parametrize("mutate,path", [
    (lambda d: d.pop("mult"), "mult"),
    (lambda d: d.__setitem__("unit", [1, 0, 0]), "unit"),
    (lambda d: d["comult"][1].pop(), "comult[1]"),
    (lambda d: d["counit"].__setitem__(0, "x/2"), "counit[0]"),
    (lambda d: d.__setitem__("dim", 0), "dim"),
    (lambda d: d.__setitem__("field", {"Fp": 4}), "field"),
    (lambda d: d.__setitem__("labels", ["a"]), "labels"),
])
def test_parse_errors_name_the_path(mutate, path):
    doc = structure_to_json(zoo.hg("C2", Q))
    mutate(doc)
    with pytest.raises(ParseError) as exc:
        structure_from_json(doc)
    assert exc.value.path == path


def test_invalid_json_reports_line(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n "field": "Q",\n "dim": 2,,\n}')
    with pytest.raises(ParseError) as exc:
        load_structure(p)
    assert exc.value.path.endswith(":3")


def test_pair_errors():
    with pytest.raises(ParseError) as exc:
        pair_from_json({"field": "Q", "H": {"example": "hg", "group": "C2"},
                        "A": {"example": "hg", "group": "C2"},
                        "action": {"lambda": [0, 0]}, "coaction": "regular"})
    assert exc.value.path == "action.lambda"
    with pytest.raises(ParseError) as exc:
        pair_from_json({"field": "Q", "H": {"example": "hg", "group": "C2"}, "A": {"example": "hg", "group": "C2"},
                        "action": "regular"})
    assert exc.value.path == "coaction"
    with pytest.raises(ParseError):
        pair_from_json({"H": {"example": "hg", "group": "C2"}})
