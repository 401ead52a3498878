"""Per-link edge weights: the four routing metrics and three merge functions.

Static metrics never change during a run:

    LL   -> normalized link length L
    U    -> 1 for every link

Dynamic metrics add a state term scaled by alpha and shaped by a merge
function f (linear u, quadratic u^2, or square root sqrt(u)):

    LLU  -> L + alpha * f(u)        u = fraction of used slots
    LLP  -> L + alpha * f(1 - p)    p = accommodation probability

LLP also has a literal variant `p + alpha * f(u)` kept behind
CostSpec.llp_literal; the default form rewards high-p links, which is what
the metric is meant to do (minimizing a cost that grows with p would do the
opposite).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class Metric(str, enum.Enum):
    LL = "LL"
    U = "U"
    LLU = "LLU"
    LLP = "LLP"


class Merge(str, enum.Enum):
    LINEAR = "linear"
    QUADRATIC = "quadratic"
    SQRT = "sqrt"


# Costs must stay strictly positive for the router; the only computable zero
# is llp_literal with alpha=0 on a p=0 link.
_MIN_COST = 1e-12


@dataclass(frozen=True)
class CostSpec:
    metric: Metric
    merge: Merge = Merge.LINEAR
    alpha: float = 1.0
    llp_literal: bool = False

    def __post_init__(self) -> None:
        if not self.alpha >= 0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")

    def label(self) -> str:
        return f"{self.metric.value}/{self.merge.value}/a={self.alpha:g}" + (
            "/literal" if self.llp_literal else ""
        )


def merge_term(merge: Merge, x):
    """f(x) for the chosen merge function; works on scalars and numpy arrays."""
    if merge is Merge.LINEAR:
        return x
    if merge is Merge.QUADRATIC:
        return x * x
    if isinstance(x, float):
        return math.sqrt(x)
    import numpy as np

    return np.sqrt(x)


def link_cost(spec: CostSpec, length_norm: float, usage: float, accom_prob: float) -> float:
    """Edge weight of one link under `spec`.

    length_norm is the link length over the topology's longest link (in
    (0, 1]); usage and accom_prob are the grid queries, both in [0, 1].
    """
    if not 0.0 < length_norm <= 1.0:
        raise ValueError(f"normalized length {length_norm} outside (0, 1]")
    if not 0.0 <= usage <= 1.0:
        raise ValueError(f"usage {usage} outside [0, 1]")
    if not 0.0 <= accom_prob <= 1.0:
        raise ValueError(f"accommodation probability {accom_prob} outside [0, 1]")

    if spec.metric is Metric.LL:
        return length_norm
    if spec.metric is Metric.U:
        return 1.0
    if spec.metric is Metric.LLU:
        return length_norm + spec.alpha * merge_term(spec.merge, usage)
    if spec.llp_literal:
        return max(accom_prob + spec.alpha * merge_term(spec.merge, usage), _MIN_COST)
    return length_norm + spec.alpha * merge_term(spec.merge, 1.0 - accom_prob)
