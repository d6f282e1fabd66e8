"""Undirected graph storage over compressed sparse adjacency arrays.

Graphs are built from edge lists (in-memory pairs or SNAP-style text files)
under one of two preprocessing modes:

``RAW_MULTISET``
    Every input pair is kept as one undirected edge slot.  Duplicate lines
    become parallel edges and self-loops are retained (a self-loop
    contributes 2 to its endpoint's degree).  This mode reproduces the
    arithmetic of treating a directed edge dump as a plain line count.

``SIMPLE``
    Input pairs are symmetrized, self-loops are dropped and duplicates are
    collapsed, yielding a simple undirected graph.

Node identifiers in the input may be arbitrary (non-contiguous) integers;
they are mapped to contiguous internal indices ``0..n-1`` in order of first
appearance, and the original labels are kept for output.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

RAW_MULTISET = "RAW_MULTISET"
SIMPLE = "SIMPLE"
MODES = (RAW_MULTISET, SIMPLE)

#: Density denominators: ``TABLE1`` uses ordered pairs n*(n-1), matching the
#: convention of the published reference statistics shipped with this
#: package; ``HALF`` uses unordered pairs n*(n-1)/2, the textbook density
#: of a simple undirected graph.  TABLE1 values are half the HALF values.
TABLE1 = "TABLE1"
HALF = "HALF"
DENSITY_CONVENTIONS = (TABLE1, HALF)


class SnapParseError(ValueError):
    """Raised for malformed edge-list text; carries the 1-based line number."""

    def __init__(self, message: str, path: str, line_no: int):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected graph in CSR (indptr/indices) form.

    Attributes
    ----------
    node_count : int
        Number of nodes n (contiguous internal ids 0..n-1).
    edge_count : int
        Number of undirected edges m.  In RAW_MULTISET mode this counts
        every retained input pair, including parallel edges and self-loops.
    indptr, indices : np.ndarray
        CSR adjacency: neighbours of node i are
        ``indices[indptr[i]:indptr[i+1]]``.  Both endpoints of every edge
        are stored, and a self-loop appears twice in its node's row, so
        ``len(indices) == 2 * edge_count`` and row lengths equal degrees.
    degrees : np.ndarray
        Degree of each node (row length in the CSR arrays).
    node_labels : np.ndarray
        Original external identifier for each internal index.
    mode : str
        RAW_MULTISET or SIMPLE.
    """

    node_count: int
    edge_count: int
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)
    degrees: np.ndarray = field(repr=False)
    node_labels: np.ndarray = field(repr=False)
    mode: str

    def degree(self, i: int) -> int:
        """Degree of internal node ``i``; IndexError if out of range."""
        if not 0 <= i < self.node_count:
            raise IndexError(
                f"node index {i} out of range for graph with {self.node_count} nodes"
            )
        return int(self.degrees[i])

    def neighbors(self, i: int) -> np.ndarray:
        """Neighbour indices of node ``i`` (with multiplicity in RAW_MULTISET)."""
        if not 0 <= i < self.node_count:
            raise IndexError(
                f"node index {i} out of range for graph with {self.node_count} nodes"
            )
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def __repr__(self) -> str:  # keep array dumps out of test failures
        return (
            f"Graph(n={self.node_count}, m={self.edge_count}, mode={self.mode})"
        )


@dataclass(frozen=True)
class DegreeStats:
    """First and second degree moments plus density of one graph.

    ``degree_sum`` and ``degree_square_sum`` keep the exact integer
    numerators behind the two means, so ratios of moments can be computed
    without compounding rounding.
    """

    node_count: int
    edge_count: int
    degree_sequence: np.ndarray = field(repr=False)
    degree_sum: int
    degree_square_sum: int
    mean_degree: float
    mean_square_degree: float
    variance: float
    density: float
    density_convention: str


def _first_appearance_ids(labels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Map arbitrary integer labels to 0..n-1 in order of first appearance.

    Returns ``(ids, ordered_labels)`` where ``ids`` has the shape of
    ``labels`` and ``ordered_labels[k]`` is the original label of internal
    index k.
    """
    uniq, first_pos, inverse = np.unique(
        labels, return_index=True, return_inverse=True
    )
    order = np.argsort(first_pos, kind="stable")
    rank = np.empty(len(uniq), dtype=np.int64)
    rank[order] = np.arange(len(uniq), dtype=np.int64)
    return rank[inverse].reshape(labels.shape), uniq[order]


def _csr_from_pairs(
    src: np.ndarray, dst: np.ndarray, n: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Build (indptr, indices, degrees) from directed entry pairs."""
    perm = np.argsort(src, kind="stable")
    indices = dst[perm]
    degrees = np.bincount(src, minlength=n).astype(np.int64)
    indptr = np.concatenate(([0], np.cumsum(degrees))).astype(np.int64)
    return indptr, indices, degrees


def build_graph(
    edges: Iterable[tuple[int, int]] | np.ndarray,
    mode: str = SIMPLE,
    nodes: Sequence[int] | np.ndarray | None = None,
) -> Graph:
    """Build a Graph from integer endpoint pairs.

    Parameters
    ----------
    edges : array-like of shape (k, 2)
        Endpoint pairs with arbitrary integer labels.
    mode : str
        RAW_MULTISET or SIMPLE (see module docstring).
    nodes : optional sequence of labels
        Extra node labels to register before the edge endpoints, in the
        given order.  Lets callers keep isolated nodes; required when
        ``edges`` is empty.

    Raises
    ------
    ValueError
        If ``mode`` is unknown, or the edge list is empty and no ``nodes``
        were supplied (there would be nothing to define the graph).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode: {mode!r} (expected RAW_MULTISET or SIMPLE)")

    pairs = np.asarray(edges, dtype=np.int64)
    if pairs.size == 0:
        pairs = pairs.reshape(0, 2)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise ValueError(f"edges must have shape (k, 2), got {pairs.shape}")

    extra = (
        np.asarray(nodes, dtype=np.int64).reshape(-1)
        if nodes is not None
        else np.empty(0, dtype=np.int64)
    )
    if pairs.shape[0] == 0 and extra.size == 0:
        raise ValueError("empty edge list and no nodes given: graph is undefined")

    flat = np.concatenate([extra, pairs.reshape(-1)])
    ids_flat, labels = _first_appearance_ids(flat)
    ids = ids_flat[extra.size :].reshape(pairs.shape)
    n = len(labels)

    if mode == RAW_MULTISET:
        a, b = ids[:, 0], ids[:, 1]
        m = int(pairs.shape[0])
    else:
        keep = ids[:, 0] != ids[:, 1]
        lo = np.minimum(ids[keep, 0], ids[keep, 1])
        hi = np.maximum(ids[keep, 0], ids[keep, 1])
        key = np.unique(lo * np.int64(n) + hi)
        a, b = key // n, key % n
        m = int(len(key))

    src = np.concatenate([a, b])
    dst = np.concatenate([b, a])
    indptr, indices, degrees = _csr_from_pairs(src, dst, n)
    for arr in (indptr, indices, degrees, labels):
        arr.setflags(write=False)
    return Graph(
        node_count=n,
        edge_count=m,
        indptr=indptr,
        indices=indices,
        degrees=degrees,
        node_labels=labels,
        mode=mode,
    )


def _parse_lines_strict(lines: Iterable[str], path: str) -> np.ndarray:
    """Line-by-line edge parser with exact error locations (slow path)."""
    out: list[tuple[int, int]] = []
    for line_no, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if len(parts) != 2:
            raise SnapParseError(
                f"expected two whitespace-separated integer ids, got {len(parts)} fields",
                path,
                line_no,
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise SnapParseError(
                f"non-integer node id in {parts!r}", path, line_no
            ) from None
        if not (-(2**63) <= u < 2**63 and -(2**63) <= v < 2**63):
            raise SnapParseError("node id out of 64-bit range", path, line_no)
        out.append((u, v))
    if not out:
        return np.empty((0, 2), dtype=np.int64)
    return np.asarray(out, dtype=np.int64)


def parse_edge_lines(lines: Iterable[str], path: str = "<memory>") -> np.ndarray:
    """Parse SNAP-style edge-list lines to an (k, 2) int64 array.

    Lines starting with ``#`` and blank lines are ignored; every other line
    must hold two whitespace-separated integer ids.  Malformed lines raise
    SnapParseError with the 1-based line number.
    """
    return _parse_lines_strict(lines, path)


def load_edge_file(path: str | Path) -> np.ndarray:
    """Read an edge-list text file to an (k, 2) int64 array.

    Tries the fast numpy text reader first and falls back to the strict
    parser (which pins down the offending line) when the file does not
    conform.
    """
    path = Path(path)
    try:
        with warnings.catch_warnings():
            # A fractional id like "4.5" must be a parse error, not a
            # silent truncation.
            warnings.filterwarnings(
                "error", message=".*Parsing an integer via a float.*"
            )
            warnings.filterwarnings("ignore", message=".*input contained no data.*")
            arr = np.loadtxt(path, dtype=np.int64, comments="#", ndmin=2)
    except OSError:
        raise
    except Exception:
        with open(path, "r", encoding="utf-8", errors="replace") as fh:
            return _parse_lines_strict(fh, str(path))
    if arr.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    if arr.shape[1] != 2:
        # Uniformly wrong column count parses fine; re-scan for the message.
        with open(path, "r", encoding="utf-8", errors="replace") as fh:
            return _parse_lines_strict(fh, str(path))
    return arr


def load_graph(path: str | Path, mode: str = SIMPLE) -> Graph:
    """Load an edge-list file and build a Graph in the given mode.

    Raises ValueError (via build_graph) if the file holds no edges, and
    SnapParseError for malformed lines.
    """
    return build_graph(load_edge_file(path), mode=mode)


def degree_stats(g: Graph, density_convention: str = TABLE1) -> DegreeStats:
    """Degree sequence, first two moments, variance and density of ``g``.

    The mean and mean-square degree are exact integer sums divided by n;
    variance is ``mean_square_degree - mean_degree**2``.  Density is
    ``m / (n*(n-1))`` under TABLE1 and ``m / (n*(n-1)/2)`` under HALF, and
    defined as 0 for a single-node graph.

    Raises ValueError on an unknown convention or an empty graph.
    """
    if density_convention not in DENSITY_CONVENTIONS:
        raise ValueError(
            f"unknown density convention: {density_convention!r} "
            f"(expected TABLE1 or HALF)"
        )
    n = g.node_count
    if n == 0:
        raise ValueError("degree statistics are undefined for an empty graph")
    seq = np.sort(g.degrees)[::-1]
    seq.setflags(write=False)
    sum_d = int(g.degrees.sum())
    sum_d2 = int(np.dot(g.degrees, g.degrees))
    mean = sum_d / n
    mean_sq = sum_d2 / n
    if n == 1:
        density = 0.0
    elif density_convention == TABLE1:
        density = g.edge_count / (n * (n - 1))
    else:
        density = 2 * g.edge_count / (n * (n - 1))
    return DegreeStats(
        node_count=n,
        edge_count=g.edge_count,
        degree_sequence=seq,
        degree_sum=sum_d,
        degree_square_sum=sum_d2,
        mean_degree=mean,
        mean_square_degree=mean_sq,
        variance=mean_sq - mean * mean,
        density=density,
        density_convention=density_convention,
    )


def edge_dump_lines(g: Graph) -> list[str]:
    """Render the edge multiset as sorted text lines of original labels.

    Each edge appears once as ``"<u>\\t<v>"`` with u's internal index not
    greater than v's; the lines are sorted lexicographically, so two equal
    labelled graphs produce identical dumps.
    """
    n = g.node_count
    row = np.repeat(np.arange(n, dtype=np.int64), g.degrees)
    col = g.indices
    upper = col > row
    a = row[upper]
    b = col[upper]
    loops = np.flatnonzero(col == row)
    if loops.size:
        # A self-loop occupies two slots in its row; emit it once.
        sel = loops[::2]
        a = np.concatenate([a, row[sel]])
        b = np.concatenate([b, col[sel]])
    labels = g.node_labels
    lines = [f"{labels[i]}\t{labels[j]}" for i, j in zip(a, b)]
    lines.sort()
    return lines


def write_edge_dump(g: Graph, path: str | Path) -> None:
    """Write ``edge_dump_lines(g)`` to ``path``, one edge per line."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in edge_dump_lines(g):
            fh.write(line)
            fh.write("\n")


def same_labelled_graph(g1: Graph, g2: Graph) -> bool:
    """True when two graphs have identical label sets and edge multisets.

    Compares node count, edge count, the set of node labels and the
    multiset of labelled edges (each edge canonicalized by sorting its
    endpoint labels).  Internal index order is deliberately ignored.
    """
    if (g1.node_count, g1.edge_count) != (g2.node_count, g2.edge_count):
        return False
    if not np.array_equal(np.sort(g1.node_labels), np.sort(g2.node_labels)):
        return False
    return sorted(_labelled_edges(g1)) == sorted(_labelled_edges(g2))


def _labelled_edges(g: Graph) -> list[tuple[int, int]]:
    n = g.node_count
    row = np.repeat(np.arange(n, dtype=np.int64), g.degrees)
    col = g.indices
    upper = col > row
    pairs = [
        (int(x), int(y))
        for x, y in zip(g.node_labels[row[upper]], g.node_labels[col[upper]])
    ]
    loops = np.flatnonzero(col == row)[::2]
    pairs += [
        (int(x), int(x)) for x in g.node_labels[row[loops]]
    ]
    return [(min(u, v), max(u, v)) for u, v in pairs]
