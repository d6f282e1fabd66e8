"""Configuration-model sampling from explicit or parametric degree sequences.

Generation is plain stub matching: each node contributes as many stubs as
its degree, the stub array is shuffled once with a seeded generator and
consecutive stubs are paired.  Matching may produce self-loops and parallel
edges; three policies handle them:

* ``MULTIGRAPH`` keeps everything (degrees preserved exactly),
* ``ERASE`` drops self-loops and collapses parallel edges (degrees may
  shrink; isolated nodes are kept),
* ``REJECT`` re-shuffles until the matching is already simple, failing
  after ``max_attempts`` tries.

Randomness comes from ``numpy.random.default_rng`` (PCG64); equal seeds
give byte-identical graphs.  For ensembles, derive independent streams by
seeding member i with ``default_rng([seed, i])`` instead of sharing one
generator across members.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import RAW_MULTISET, SIMPLE, Graph, build_graph

MULTIGRAPH = "MULTIGRAPH"
ERASE = "ERASE"
REJECT = "REJECT"
SIMPLE_POLICIES = (MULTIGRAPH, ERASE, REJECT)

EXPLICIT = "EXPLICIT"
POISSON = "POISSON"
POWERLAW = "POWERLAW"
SOURCES = (EXPLICIT, POISSON, POWERLAW)

RNG_NAME = "pcg64"
_PARITY_ATTEMPTS = 1000


class RejectionExhaustedError(RuntimeError):
    """REJECT policy failed to produce a simple matching within the budget."""

    def __init__(self, attempts: int):
        super().__init__(
            f"no simple stub matching found in {attempts} attempts; the "
            "sequence may not be graphical or is dominated by a few huge degrees"
        )
        self.attempts = attempts


@dataclass(frozen=True)
class DegreeSequenceSpec:
    """Declarative description of where a degree sequence comes from.

    Exactly one source is active: EXPLICIT uses ``degrees`` verbatim,
    POISSON draws ``n`` samples with the given ``mean``, POWERLAW draws
    ``n`` samples with tail exponent ``exponent`` on the support
    ``min_degree .. n-1``.
    """

    source: str
    seed: int = 0
    simple_policy: str = MULTIGRAPH
    max_attempts: int = 100
    degrees: tuple[int, ...] | None = None
    mean: float | None = None
    exponent: float | None = None
    min_degree: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"unknown degree-sequence source: {self.source!r}")
        if self.simple_policy not in SIMPLE_POLICIES:
            raise ValueError(f"unknown simple policy: {self.simple_policy!r}")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        if self.source == EXPLICIT:
            if not self.degrees:
                raise ValueError("EXPLICIT source requires a non-empty degree list")
            if any(d < 0 for d in self.degrees):
                raise ValueError("degrees must be non-negative")
        else:
            if self.n is None or self.n < 1:
                raise ValueError(f"{self.source} source requires n >= 1")
        if self.source == POISSON:
            if self.mean is None or not self.mean > 0:
                raise ValueError("POISSON source requires mean > 0")
        if self.source == POWERLAW:
            if self.exponent is None or not self.exponent > 1:
                raise ValueError("POWERLAW source requires exponent > 1")
            if self.min_degree is None or self.min_degree < 1:
                raise ValueError("POWERLAW source requires min_degree >= 1")
            if self.min_degree > self.n - 1:
                raise ValueError(
                    f"min_degree {self.min_degree} exceeds the largest possible "
                    f"degree {self.n - 1}"
                )

    @classmethod
    def explicit(cls, degrees: Sequence[int], **kw) -> "DegreeSequenceSpec":
        return cls(source=EXPLICIT, degrees=tuple(int(d) for d in degrees), **kw)

    @classmethod
    def poisson(cls, mean: float, n: int, **kw) -> "DegreeSequenceSpec":
        return cls(source=POISSON, mean=float(mean), n=int(n), **kw)

    @classmethod
    def power_law(
        cls, exponent: float, min_degree: int, n: int, **kw
    ) -> "DegreeSequenceSpec":
        return cls(
            source=POWERLAW,
            exponent=float(exponent),
            min_degree=int(min_degree),
            n=int(n),
            **kw,
        )

    def to_dict(self) -> dict:
        params: dict = {}
        if self.source == EXPLICIT:
            params["degrees"] = list(self.degrees)
        elif self.source == POISSON:
            params = {"mean": self.mean, "n": self.n}
        else:
            params = {
                "exponent": self.exponent,
                "min_degree": self.min_degree,
                "n": self.n,
            }
        return {
            "source": self.source,
            "params": params,
            "seed": self.seed,
            "simple_policy": self.simple_policy,
            "max_attempts": self.max_attempts,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DegreeSequenceSpec":
        try:
            source = data["source"]
            params = dict(data.get("params", {}))
        except (TypeError, KeyError) as exc:
            raise ValueError(f"malformed degree-sequence spec: {exc}") from None
        kw = dict(
            seed=int(data.get("seed", 0)),
            simple_policy=data.get("simple_policy", MULTIGRAPH),
            max_attempts=int(data.get("max_attempts", 100)),
        )
        if source == EXPLICIT:
            return cls.explicit(params.get("degrees", ()), **kw)
        if source == POISSON:
            return cls.poisson(params.get("mean", 0.0), params.get("n", 0), **kw)
        if source == POWERLAW:
            return cls.power_law(
                params.get("exponent", 0.0),
                params.get("min_degree", 0),
                params.get("n", 0),
                **kw,
            )
        raise ValueError(f"unknown degree-sequence source: {source!r}")

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "DegreeSequenceSpec":
        return cls.from_dict(json.loads(text))


def _eg_slack(sorted_desc: np.ndarray) -> np.ndarray:
    """Erdos-Gallai slack rhs(k) - lhs(k) for k = 1..n over a sorted sequence."""
    d = sorted_desc.astype(np.int64)
    n = len(d)
    prefix = np.concatenate(([0], np.cumsum(d)))
    suffix = prefix[n] - prefix
    ks = np.arange(1, n + 1, dtype=np.int64)
    # Count of entries >= k (the array is non-increasing).
    count_ge = np.searchsorted(-d, -ks, side="right")
    big = np.maximum(count_ge - ks, 0)  # entries beyond index k that are >= k
    split = np.maximum(ks, count_ge)
    rhs = ks * (ks - 1) + big * ks + suffix[split]
    lhs = prefix[ks]
    return rhs - lhs


def is_graphical(degrees: Sequence[int] | np.ndarray) -> bool:
    """Whether some simple graph realizes the degree sequence.

    Uses the Erdos-Gallai criterion: the degree sum must be even and every
    prefix of the non-increasing sequence must satisfy
    sum(d_1..d_k) <= k(k-1) + sum(min(d_j, k) for j > k).
    The empty sequence and all-zero sequences are graphical.
    """
    d = np.asarray(degrees, dtype=np.int64)
    if d.size == 0:
        return True
    if (d < 0).any():
        raise ValueError("degrees must be non-negative")
    if int(d.sum()) % 2:
        return False
    return bool((_eg_slack(np.sort(d)[::-1]) >= 0).all())


def first_violated_prefix(degrees: Sequence[int] | np.ndarray) -> int | None:
    """Smallest k whose Erdos-Gallai inequality fails, or None.

    Parity is not checked here; an odd-sum sequence can still return None.
    """
    d = np.asarray(degrees, dtype=np.int64)
    if d.size == 0:
        return None
    slack = _eg_slack(np.sort(d)[::-1])
    bad = np.flatnonzero(slack < 0)
    return int(bad[0]) + 1 if bad.size else None


def _draw(spec: DegreeSequenceSpec, rng: np.random.Generator, size: int) -> np.ndarray:
    if spec.source == POISSON:
        return rng.poisson(spec.mean, size).astype(np.int64)
    # POWERLAW: inverse-CDF sampling on the integer support min_degree..n-1,
    # weighting degree d by d**-exponent.
    support = np.arange(spec.min_degree, spec.n, dtype=np.int64)
    weights = support.astype(float) ** (-spec.exponent)
    cdf = np.cumsum(weights)
    cdf /= cdf[-1]
    u = rng.random(size)
    return support[np.searchsorted(cdf, u, side="left")]


def sample_degree_sequence(spec: DegreeSequenceSpec) -> np.ndarray:
    """Materialize the degree sequence described by ``spec``.

    EXPLICIT sequences pass through untouched.  Parametric draws use the
    spec's seed; if the drawn sum is odd, one uniformly chosen entry is
    redrawn until the total is even, so the result is always pairable.
    """
    if spec.source == EXPLICIT:
        return np.asarray(spec.degrees, dtype=np.int64)
    rng = np.random.default_rng(spec.seed)
    seq = _draw(spec, rng, spec.n)
    for _ in range(_PARITY_ATTEMPTS):
        if int(seq.sum()) % 2 == 0:
            return seq
        pos = int(rng.integers(spec.n))
        seq[pos] = _draw(spec, rng, 1)[0]
    raise RuntimeError(
        f"could not reach an even degree sum after {_PARITY_ATTEMPTS} redraws"
    )


def _match_stubs(
    degrees: np.ndarray, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    stubs = np.repeat(np.arange(len(degrees), dtype=np.int64), degrees)
    rng.shuffle(stubs)
    half = len(stubs) // 2
    return stubs[0::2][:half], stubs[1::2][:half]


def _is_simple_matching(a: np.ndarray, b: np.ndarray, n: int) -> bool:
    if (a == b).any():
        return False
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    keys = lo * np.int64(n) + hi
    return len(np.unique(keys)) == len(keys)


def generate(
    degrees: Sequence[int] | np.ndarray,
    seed: int = 0,
    simple_policy: str = MULTIGRAPH,
    max_attempts: int = 100,
) -> tuple[Graph, dict]:
    """Configuration-model graph plus generation metadata.

    Returns ``(graph, info)`` where ``info`` records the rng, the number of
    matching attempts and, under ERASE, how many edges were removed.  The
    graph always contains all ``len(degrees)`` nodes (labelled 0..n-1), so
    zero-degree entries become isolated nodes.

    Raises ValueError for negative degrees or an odd degree sum, and
    RejectionExhaustedError when REJECT runs out of attempts.
    """
    if simple_policy not in SIMPLE_POLICIES:
        raise ValueError(f"unknown simple policy: {simple_policy!r}")
    deg = np.asarray(degrees, dtype=np.int64)
    if deg.size == 0:
        raise ValueError("degree sequence is empty")
    if (deg < 0).any():
        raise ValueError("degrees must be non-negative")
    total = int(deg.sum())
    if total % 2:
        raise ValueError(
            f"degree sum must be even to pair stubs, got {total}"
        )
    n = len(deg)
    nodes = np.arange(n, dtype=np.int64)
    rng = np.random.default_rng(seed)
    info = {"rng": RNG_NAME, "seed": int(seed), "policy": simple_policy}

    if simple_policy == REJECT:
        for attempt in range(1, max_attempts + 1):
            a, b = _match_stubs(deg, rng)
            if _is_simple_matching(a, b, n):
                g = build_graph(np.column_stack([a, b]), mode=SIMPLE, nodes=nodes)
                info["attempts"] = attempt
                return g, info
        raise RejectionExhaustedError(max_attempts)

    a, b = _match_stubs(deg, rng)
    info["attempts"] = 1
    if simple_policy == MULTIGRAPH:
        g = build_graph(np.column_stack([a, b]), mode=RAW_MULTISET, nodes=nodes)
        return g, info
    # ERASE: build_graph's SIMPLE preprocessing is exactly the erasure step.
    g = build_graph(np.column_stack([a, b]), mode=SIMPLE, nodes=nodes)
    info["erased_edges"] = int(total // 2 - g.edge_count)
    return g, info


def configuration_model(
    degrees: Sequence[int] | np.ndarray,
    seed: int = 0,
    simple_policy: str = MULTIGRAPH,
    max_attempts: int = 100,
) -> Graph:
    """``generate`` without the metadata; see that function for semantics."""
    g, _ = generate(degrees, seed=seed, simple_policy=simple_policy, max_attempts=max_attempts)
    return g
