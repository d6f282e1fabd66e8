"""Shared fixtures: small canonical graphs and optional large datasets.

The SNAP Amazon files are not bundled.  Tests that need them look in
``$NETPATRIMONY_DATA_DIR`` (default: ``<repo>/data``) for
``amazon0302.txt`` etc. and skip with a clear message when absent.
"""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from netpatrimony import RAW_MULTISET, SIMPLE, build_graph
from netpatrimony.reference import AMAZON_REFERENCE, SIX_NODE_EDGES

DATA_ENV = "NETPATRIMONY_DATA_DIR"

SIX_NODE_FILE = Path(__file__).parent / "data" / "six_node.txt"


def data_dir() -> Path:
    return Path(os.environ.get(DATA_ENV, Path(__file__).resolve().parents[1] / "data"))


def amazon_path(name: str) -> Path | None:
    path = data_dir() / f"{name}.txt"
    return path if path.is_file() else None


def require_amazon(name: str) -> Path:
    path = amazon_path(name)
    if path is None:
        pytest.skip(
            f"{name}.txt not found in {data_dir()} "
            f"(download from https://snap.stanford.edu/data/ and set ${DATA_ENV})"
        )
    return path


@pytest.fixture
def six_node_simple():
    return build_graph(SIX_NODE_EDGES, mode=SIMPLE)


@pytest.fixture
def six_node_raw():
    return build_graph(SIX_NODE_EDGES, mode=RAW_MULTISET)


@pytest.fixture
def path5():
    """Path graph 1-2-3-4-5."""
    return build_graph([(1, 2), (2, 3), (3, 4), (4, 5)], mode=SIMPLE)


@pytest.fixture
def star5():
    """Star with centre 0 and four leaves."""
    return build_graph([(0, i) for i in range(1, 5)], mode=SIMPLE)


@pytest.fixture
def complete5():
    return build_graph(
        [(i, j) for i in range(5) for j in range(i + 1, 5)], mode=SIMPLE
    )


@pytest.fixture
def ring6():
    return build_graph([(i, (i + 1) % 6) for i in range(6)], mode=SIMPLE)


@pytest.fixture(params=sorted(AMAZON_REFERENCE))
def amazon_dataset(request):
    """(name, path) for each reference dataset; skips when the file is absent."""
    return request.param, require_amazon(request.param)
