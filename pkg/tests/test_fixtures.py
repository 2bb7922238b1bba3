"""Bundled fixtures: files on disk match the packaged texts and each other."""

from __future__ import annotations

from pathlib import Path

import pytest

from srlab import Complex, alexander_dual, parse_complex
from srlab.fixtures import COMPLEXES, GRAPHS, fixture_complex, fixture_text

REPO_FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.mark.parametrize("name", sorted(COMPLEXES) + sorted(GRAPHS))
def test_repo_files_match_packaged_texts(name):
    assert (REPO_FIXTURES / name).read_text() == fixture_text(name)


def test_d6_is_dual_of_r6():
    assert fixture_complex("D6") == alexander_dual(fixture_complex("R6"))


def test_dualc5_is_dual_of_pentagon():
    pentagon = Complex.from_facets([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert fixture_complex("DUALC5") == alexander_dual(pentagon)


def test_simplexes():
    for k in (1, 2, 3, 4):
        assert fixture_complex(f"SIMPLEX_{k}") == Complex.simplex(k)


def test_mt6_shape():
    mt6 = fixture_complex("MT6")
    assert (mt6.n, mt6.dim, len(mt6.facet_masks)) == (6, 3, 9)


def test_all_parse(tmp_path):
    for name, text in COMPLEXES.items():
        parse_complex(text)
