"""Embedded reference values and the small worked example.

``AMAZON_REFERENCE`` holds published summary statistics for the four SNAP
Amazon co-purchase snapshots (https://snap.stanford.edu/data/), rounded as
published: density to 3 significant digits, the remaining floats to 2-3
decimals.  They correspond to RAW_MULTISET preprocessing of the directed
edge dumps (every line one edge) with the TABLE1 density convention.

``SIX_NODE_EDGES`` is the hand-checkable six-node, eight-edge example used
throughout the tests; its degree sequence is (4, 3, 3, 2, 2, 2).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReferenceRow:
    """One dataset's published summary statistics."""

    name: str
    n: int
    m: int
    density: float
    mean_degree: float
    mean_square_degree: float
    variance: float
    assortativity: float
    nip_network: float


AMAZON_REFERENCE: dict[str, ReferenceRow] = {
    row.name: row
    for row in (
        ReferenceRow("amazon0302", 262111, 1234877, 1.79e-5, 9.422, 123.823, 35.03, 0.003, 14.141),
        ReferenceRow("amazon0312", 400727, 3200440, 1.99e-5, 15.973, 505.859, 250.71, -0.044, 32.670),
        ReferenceRow("amazon0505", 410236, 3356824, 1.99e-5, 16.365, 533.438, 265.61, -0.043, 33.595),
        ReferenceRow("amazon0601", 403394, 3387388, 2.08e-5, 16.794, 542.731, 260.68, -0.043, 33.317),
    )
}

#: Published raw-scale per-node score of a well-connected degree-44 node in
#: amazon0601 — a reference point for the RAW scale: d * (1 + k_nn,i).
AMAZON0601_OUTLIER = {"name": "amazon0601", "degree": 44, "raw_nip": 192.61}

SIX_NODE_EDGES: tuple[tuple[int, int], ...] = (
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 4),
    (2, 5),
    (3, 4),
    (4, 6),
    (5, 6),
)
