import json

import pytest
from hypothesis import given

from conftest import families
from hxcomb import Family, family_from_json, family_from_text, family_to_json, family_to_text
from hxcomb.errors import FormatError
from hxcomb.formats import read_family, write_family


def test_text_layout():
    f = Family(5, 3, [(2, 3, 4), (1, 2, 3)])
    assert family_to_text(f) == "n=5 k=3\n1 2 3\n2 3 4\n"


def test_json_layout_colex():
    f = Family(5, 3, [(1, 2, 5), (2, 3, 4), (1, 2, 3)])
    assert json.loads(family_to_json(f)) == {"n": 5, "k": 3, "edges": [[1, 2, 3], [2, 3, 4], [1, 2, 5]]}


@given(families(max_n=12))
def test_round_trips_bit_exact(f):
    t = family_to_text(f)
    j = family_to_json(f)
    assert family_from_text(t) == f and family_to_text(family_from_text(t)) == t
    assert family_from_json(j) == f and family_to_json(family_from_json(j)) == j


@pytest.mark.parametrize("text", ["", "1 2 3\n", "n=4 k=3\n1 2 9\n", "n=4 k=3\n1 2\n"])
def test_bad_text(text):
    with pytest.raises(FormatError):
        family_from_text(text)


def test_bad_json():
    with pytest.raises(FormatError):
        family_from_json("{not json")
    with pytest.raises(FormatError):
        family_from_json('{"n": 4}')


def test_file_sniffing(tmp_path):
    f = Family(6, 3, [(1, 2, 3), (4, 5, 6)])
    for name in ("a.json", "a.txt"):
        write_family(f, tmp_path / name)
        assert read_family(tmp_path / name) == f
    assert (tmp_path / "a.txt").read_text().startswith("n=6 k=3")
