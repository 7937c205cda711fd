"""Verdict records and refinement traces shared by all inequality checks.

Every check produces a VerdictRecord.  Exactly one of two fields drives
the verdict:

- ``explicit_constant``: the inequality has a known constant; ``passed``
  states whether ``lhs <= explicit_constant * rhs_core`` held within the
  check's tolerance.
- ``empirical_ratio``: the constant is not pinned down; the record
  stores ``lhs / rhs_core`` and boundedness is judged across sweeps and
  refinement traces, never from a single record.

A ratio of 0/0 is reported as ratio 0.0 with ``params["degenerate"]``
set, so degenerate inputs never manufacture spurious evidence.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = ["VerdictRecord", "RefinementTrace", "ratio_of"]


def ratio_of(lhs: float, rhs: float) -> tuple[float, bool]:
    """Empirical ratio lhs/rhs with the 0/0 -> 0 convention.

    Returns (ratio, degenerate).  A positive lhs over a zero rhs yields
    inf; callers treat that as an unbounded-ratio signal.
    """
    if rhs == 0.0:
        if lhs == 0.0:
            return 0.0, True
        return math.inf, False
    return lhs / rhs, False


def _clean(v):
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, np.ndarray):
        return [_clean(x) for x in v.tolist()]
    if isinstance(v, dict):
        return {str(k): _clean(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_clean(x) for x in v]
    if v is None or isinstance(v, (bool, int, float, str)):
        return v
    return str(v)


@dataclass
class VerdictRecord:
    """Outcome of one inequality check on one input."""

    inequality_id: str
    lhs: float
    rhs_core: float
    explicit_constant: float | None = None
    empirical_ratio: float | None = None
    passed: bool | None = None
    grid_spacing: float = math.nan
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.explicit_constant is None) == (self.empirical_ratio is None):
            raise ValueError(
                "exactly one of explicit_constant / empirical_ratio must be set"
            )
        if self.explicit_constant is not None and self.passed is None:
            raise ValueError("explicit-constant records must carry a verdict")
        if self.empirical_ratio is not None:
            if self.passed is not None:
                raise ValueError("empirical-ratio records carry no pass/fail verdict")
            if self.empirical_ratio < 0:
                raise ValueError("empirical_ratio must be nonnegative")

    def to_dict(self) -> dict:
        return {
            "inequality_id": self.inequality_id,
            "lhs": float(self.lhs),
            "rhs_core": float(self.rhs_core),
            "explicit_constant": None
            if self.explicit_constant is None
            else float(self.explicit_constant),
            "empirical_ratio": None
            if self.empirical_ratio is None
            else float(self.empirical_ratio),
            "passed": self.passed,
            "grid_spacing": None if math.isnan(self.grid_spacing) else float(self.grid_spacing),
            "params": _clean(self.params),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), allow_nan=True)


@dataclass
class RefinementTrace:
    """One inequality checked on the same input at successively halved spacing."""

    records: list[VerdictRecord]

    def __post_init__(self):
        if len(self.records) < 2:
            raise ValueError("a refinement trace needs at least two levels")
        ids = {r.inequality_id for r in self.records}
        if len(ids) != 1:
            raise ValueError(f"records of one trace must share inequality_id, got {ids}")
        spacings = [r.grid_spacing for r in self.records]
        if any(not (a > b) for a, b in zip(spacings, spacings[1:])):
            raise ValueError("grid spacings must strictly decrease along a trace")

    @property
    def ratios(self) -> list[float]:
        out = []
        for r in self.records:
            if r.empirical_ratio is None:
                raise ValueError("stability is defined for empirical-ratio records")
            out.append(r.empirical_ratio)
        return out

    @property
    def stability(self) -> float:
        """Max relative change of the empirical ratio between successive levels."""
        rs = self.ratios
        worst = 0.0
        for a, b in zip(rs, rs[1:]):
            denom = max(abs(a), 1e-300)
            worst = max(worst, abs(b - a) / denom)
        return worst

    def to_dict(self) -> dict:
        return {
            "inequality_id": self.records[0].inequality_id,
            "stability": self.stability if self.records[0].empirical_ratio is not None else None,
            "records": [r.to_dict() for r in self.records],
        }
