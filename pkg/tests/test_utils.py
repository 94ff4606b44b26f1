# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

import io
import json

import pytest

from kfpoly.utils import (
    check_decreasing,
    dumps,
    format_time,
    format_vector,
    iter_compositions,
    iter_partitions,
    json_dump,
    pad,
    parse_vector,
    progress_bar,
)


def test_parse_vector():
    assert parse_vector("3,1,0") == (3, 1, 0)
    assert parse_vector(" 0,-1,-2 ") == (0, -1, -2)
    assert parse_vector("") == ()
    with pytest.raises(ValueError):
        parse_vector("1,,2")
    assert format_vector((2, 0, -1)) == "2,0,-1"


def test_pad():
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        pad((1, 1, 1), 2)
    with pytest.raises(ValueError):
        check_decreasing((0, 1))


def test_iter_partitions():
    assert list(iter_partitions(3, 3)) == [(3, 0, 0), (2, 1, 0), (1, 1, 1)]
    assert list(iter_partitions(4, 2)) == [(4, 0), (3, 1), (2, 2)]
    assert list(iter_partitions(4, 3, max_part=2)) == [(2, 2, 0), (2, 1, 1)]
    assert list(iter_partitions(0, 2)) == [(0, 0)]
    assert list(iter_partitions(2, 0)) == []
    assert list(iter_partitions(-1, 2)) == []


def test_iter_compositions():
    assert list(iter_compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(iter_compositions(3, 3))) == 10
    assert list(iter_compositions(0, 0)) == [()]
    assert list(iter_compositions(1, 0)) == []


def test_json_dump():
    fp = io.StringIO()
    json_dump({"value": {"10": 1, "2": 3}, "a": [1, 2], "b": True, "c": None}, fp)
    text = fp.getvalue()
    assert text.endswith("}\n")
    # exponents sort numerically
    assert text.index('"2"') < text.index('"10"')
    assert '"a": [1, 2]' in text
    assert json.loads(text) == {"value": {"10": 1, "2": 3}, "a": [1, 2], "b": True, "c": None}


def test_dumps_nested():
    fp = io.StringIO()
    dumps(fp, [{"x": "a\"b"}, {}], indent=2)
    assert json.loads(fp.getvalue()) == [{"x": 'a"b'}, {}]
    with pytest.raises(TypeError):
        dumps(io.StringIO(), object())


def test_format_time():
    assert format_time(0) == "00:00:00.0"
    assert format_time(3725.5) == "01:02:05.5"


def test_progress_bar():
    items = [1, 2, 3]
    assert progress_bar(items, show_progress=False) is items
    assert progress_bar(items, progress_type=None) is items
    assert list(progress_bar(items, show_progress=True)) == items
