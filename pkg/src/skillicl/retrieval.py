"""Task-adaptive demonstration ranking: fused visual + plan similarity.

Each candidate gets a raw cosine score against the query embedding, the scores
are min-max normalized over the whole candidate pool, plan similarity is
computed against the predicted skill sequence, and the two are blended with
weight alpha. Top-k by fused score, ties broken by ascending demo id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import DimensionMismatch, EmptyInput, MissingEmbedding, ZeroVector
from .skills import SkillSequence, plan_similarity

if TYPE_CHECKING:
    from .store import DemoLibrary


def l2_normalize(values, tolerance: float = 1e-9) -> np.ndarray:
    """Return a unit-norm float64 copy; vectors already unit within tolerance
    are passed through unchanged so repeated normalization is byte-stable."""
    v = np.asarray(values, dtype=np.float64)
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    if abs(norm - 1.0) <= tolerance:
        return v
    return v / norm


def visual_similarity(query: np.ndarray, demo: np.ndarray) -> float:
    """Cosine similarity of two unit vectors (a plain dot product)."""
    query = np.asarray(query, dtype=np.float64)
    demo = np.asarray(demo, dtype=np.float64)
    if query.shape != demo.shape:
        raise DimensionMismatch(f"{query.shape} vs {demo.shape}")
    return float(query @ demo)


def minmax_normalize(scores) -> list[float]:
    """(s - min) / (max - min); all-equal inputs map to 0.0 (rank-neutral)."""
    scores = list(scores)
    if not scores:
        raise EmptyInput("minmax_normalize needs at least one score")
    lo, hi = min(scores), max(scores)
    if hi == lo:
        return [0.0] * len(scores)
    return [(s - lo) / (hi - lo) for s in scores]


@dataclass(frozen=True)
class RankedCandidate:
    demo_id: str
    s_vis: float
    s_vis_norm: float
    s_plan: float
    fused: float


def rank_and_select(
    query_embedding: np.ndarray,
    predicted_plan: SkillSequence,
    library: "DemoLibrary",
    k_sim: int,
    lambda_: float,
    alpha: float,
    query_task: str | None = None,
) -> list[RankedCandidate]:
    """Score every candidate demo and return the top-k_sim.

    When ``query_task`` is given, demos from that task are excluded from the
    candidate pool (cross-task protocol); normalization runs over the pool
    actually scored.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    if k_sim < 1:
        raise ValueError(f"k_sim must be >= 1, got {k_sim}")

    pool = [
        d
        for d in library.demos.values()
        if query_task is None or d.task_name != query_task
    ]
    missing = [d.id for d in pool if d.embedding is None]
    if missing:
        raise MissingEmbedding("demos without embeddings: " + ", ".join(sorted(missing)))
    if not pool:
        return []

    raw = [visual_similarity(query_embedding, d.embedding) for d in pool]
    vis_norm = minmax_normalize(raw)
    plan_scores = [plan_similarity(predicted_plan, d.skills, lambda_) for d in pool]

    ranked = [
        RankedCandidate(
            demo_id=d.id,
            s_vis=raw[j],
            s_vis_norm=vis_norm[j],
            s_plan=plan_scores[j],
            fused=alpha * vis_norm[j] + (1.0 - alpha) * plan_scores[j],
        )
        for j, d in enumerate(pool)
    ]
    ranked.sort(key=lambda c: (-c.fused, c.demo_id))
    return ranked[: min(k_sim, len(ranked))]
