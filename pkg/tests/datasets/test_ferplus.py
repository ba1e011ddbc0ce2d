# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""FER2013 pixels and FERplus vote tests."""

import os

import numpy as np
import pytest

from ferkit.datasets import REJECT, VoteRecord, load_ferplus, \
    majority_vote, parse_pixels, read_votes
from ferkit.datasets.errors import HeaderError, PixelParseError, \
    RowCountMismatch, VoteParseError

from ..helpers import brute_majority, write_ferplus


def _paths(directory):
    return (os.path.join(str(directory), "fer2013.csv"),
            os.path.join(str(directory), "fer2013new.csv"))


@pytest.mark.parametrize("votes,expected", [
    ((8, 1, 1, 0, 0, 0, 0, 0, 0, 0), 0),
    ((0, 9, 1, 0, 0, 0, 0, 0, 0, 0), 1),
    ((0, 0, 0, 0, 0, 0, 0, 0, 10, 0), REJECT),
    ((0, 0, 0, 0, 0, 0, 0, 0, 0, 10), REJECT),
    ((5, 0, 0, 0, 0, 0, 0, 0, 5, 0), REJECT),
    ((0, 0, 4, 4, 0, 0, 0, 0, 2, 0), 2),
    ((0, 0, 0, 0, 0, 0, 0, 6, 4, 0), 7),
])
def test_majority_vote_examples(votes, expected):
    """Emotion ties go to the lowest column; reject ties reject."""
    assert majority_vote(VoteRecord("x", "Training", votes)) == expected
    assert majority_vote(votes) == expected


def test_majority_vote_against_brute_force(rng):
    """10,000 random tallies agree with a column-by-column scan."""
    for _ in range(10000):
        cuts = np.sort(rng.integers(0, 11, size=9))
        votes = tuple(np.diff(np.concatenate([[0], cuts, [10]])))
        assert sum(votes) == 10
        assert majority_vote(votes) == brute_majority(votes)


def test_majority_vote_follows_column_permutations(rng):
    """Permuting emotion columns permutes the winner accordingly."""
    checked = 0
    while checked < 500:
        emotions = rng.integers(0, 11, size=8)
        if np.sum(emotions == emotions.max()) > 1:
            continue
        votes = tuple(emotions) + (0, 0)
        order = rng.permutation(8)
        permuted = tuple(emotions[order]) + (0, 0)
        winner = majority_vote(votes)
        assert order[majority_vote(permuted)] == winner
        checked += 1

def test_parse_pixels():
    """2304 values become a raw 48x48 single-channel image."""
    img = parse_pixels(" ".join(["7"] * 2304))
    assert img.shape == (48, 48, 1)
    assert img.value_range == "raw"
    np.testing.assert_array_equal(img.data, 7.0)


@pytest.mark.parametrize("field,reason", [
    (" ".join(["0"] * 2303), "expected 2304 pixel values, got 2303"),
    (" ".join(["0"] * 2303 + ["x"]), "non-numeric pixel 'x'"),
    (" ".join(["0"] * 2303 + ["256"]), "pixel value outside 0..255"),
])
def test_parse_pixels_errors(field, reason):
    """Malformed rows name the row and the problem."""
    with pytest.raises(PixelParseError) as excinfo:
        parse_pixels(field, row=12)
    assert excinfo.value.row == 12
    assert reason in str(excinfo.value)


def test_load_three_rows(ferplus_dir):
    """Two kept samples and one rejection, mapped onto the splits."""
    split = load_ferplus(*_paths(ferplus_dir))
    assert len(split) == 2
    assert split.rejected == 1
    assert [s.label for s in split.train] == [0]
    assert [s.label for s in split.validation] == [1]
    assert split.test == []
    assert split.train[0].image.shape == (48, 48, 1)
    assert split.train[0].source_id == "fer0000000.png"
    assert split.warnings == dict(ill_formed_votes=0, unknown_usage=0)


def test_load_counts_warnings(tmp_path):
    """Short tallies and unknown usages are counted, not fatal."""
    rows = [
        ("Training", [1] * 2304, (3, 1, 0, 0, 0, 0, 0, 0, 0, 0)),
        ("Holdout", [2] * 2304, (10, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
        ("PrivateTest", [3] * 2304, (0, 0, 10, 0, 0, 0, 0, 0, 0, 0)),
    ]
    split = load_ferplus(*write_ferplus(str(tmp_path), rows))
    assert split.warnings == dict(ill_formed_votes=1, unknown_usage=1)
    assert len(split.train) == 1 and len(split.test) == 1
    assert len(split) + split.rejected + 1 == len(rows)


def test_row_count_mismatch(ferplus_dir):
    """Pixel and vote files must have the same number of rows."""
    pixels, votes = _paths(ferplus_dir)
    with open(votes, "a") as fp:
        fp.write("Training,extra.png,10,0,0,0,0,0,0,0,0,0\n")
    with pytest.raises(RowCountMismatch):
        load_ferplus(pixels, votes)


def test_malformed_vote_header(tmp_path):
    """A votes file with the wrong header is refused."""
    path = write_ferplus(
        str(tmp_path), [("Training", [0] * 2304, (10,) + (0,) * 9)],
        header="usage,name,a,b,c,d,e,f,g,h,i,j",
    )[1]
    with pytest.raises(HeaderError):
        read_votes(path)


def test_bad_pixel_row_is_located(tmp_path):
    """The failing row number is one-based."""
    rows = [
        ("Training", [0] * 2304, (10,) + (0,) * 9),
        ("Training", [0] * 2303, (10,) + (0,) * 9),
    ]
    with pytest.raises(PixelParseError) as excinfo:
        load_ferplus(*write_ferplus(str(tmp_path), rows))
    assert excinfo.value.row == 2


@pytest.mark.parametrize("cell", ["x", "", "-1", "1.5"])
def test_malformed_vote_cell_is_located(tmp_path, cell):
    """A vote that is not a count fails with its row and column."""
    rows = [
        ("Training", [0] * 2304, (10,) + (0,) * 9),
        ("Training", [0] * 2304, (0, cell, 10) + (0,) * 7),
    ]
    votes_path = write_ferplus(str(tmp_path), rows)[1]
    with pytest.raises(VoteParseError) as excinfo:
        read_votes(votes_path)
    assert excinfo.value.row == 2
    assert excinfo.value.column == "happiness"


def test_every_row_is_accounted_for(tmp_path, rng):
    """Rows in equal samples plus rejections plus skipped usages."""
    usages = ("Training", "PublicTest", "PrivateTest", "Holdout")
    rows = []
    for _ in range(40):
        cuts = np.sort(rng.integers(0, 11, size=9))
        votes = tuple(np.diff(np.concatenate([[0], cuts, [10]])))
        rows.append((usages[rng.integers(0, 4)], [0] * 2304, votes))
    split = load_ferplus(*write_ferplus(str(tmp_path), rows))
    skipped = split.warnings["unknown_usage"]
    assert len(split) + split.rejected + skipped == len(rows)
    assert skipped == sum(usage == "Holdout" for usage, _, _ in rows)
