"""Polar sampling grids and the verification report record."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def densified_radii(count: int = 40, r_min: float = 0.01, r_max: float = 0.99) -> np.ndarray:
    """Radii in ``[r_min, r_max]`` spaced geometrically in ``1 - r``."""
    return 1.0 - np.geomspace(1.0 - r_min, 1.0 - r_max, count)


@dataclass(frozen=True)
class SamplingConfig:
    radii: tuple = tuple(densified_radii())
    angles: int = 256
    tol: float = 1e-9

    def __post_init__(self):
        r = np.asarray(self.radii, dtype=float)
        if r.ndim != 1 or r.size == 0:
            raise ValueError("radii must be a non-empty list")
        if np.any(np.diff(r) <= 0):
            raise ValueError("radii must be strictly increasing")
        if r[0] < 0 or r[-1] >= 1:
            raise ValueError("radii must lie in [0, 1)")
        if self.angles < 8:
            raise ValueError("need at least 8 angles per circle")
        object.__setattr__(self, "radii", tuple(float(x) for x in r))

    @classmethod
    def polar(cls, count: int = 40, r_max: float = 0.99, angles: int = 256,
              tol: float = 1e-9, r_min: float = 0.01) -> "SamplingConfig":
        return cls(tuple(densified_radii(count, r_min, r_max)), angles, tol)

    @classmethod
    def uniform(cls, count: int, r_max: float, angles: int = 256, tol: float = 1e-9) -> "SamplingConfig":
        return cls(tuple(np.linspace(r_max / count, r_max, count)), angles, tol)

    def points(self) -> np.ndarray:
        """Grid as a ``(len(radii), angles)`` complex array."""
        theta = 2 * np.pi * np.arange(self.angles) / self.angles
        return np.asarray(self.radii)[:, None] * np.exp(1j * theta)[None, :]

    @property
    def size(self) -> int:
        return len(self.radii) * self.angles


@dataclass
class VerificationReport:
    theorem_id: str
    passed: bool
    worst_margin: float
    witness_z: complex
    samples: int
    tol: float = 1e-9
    details: dict = field(default_factory=dict)

    @classmethod
    def from_margins(cls, theorem_id: str, z: np.ndarray, margins: np.ndarray,
                     tol: float, **details) -> "VerificationReport":
        z = np.asarray(z).ravel()
        margins = np.asarray(margins, dtype=float).ravel()
        if margins.size == 0:
            raise ValueError("no samples")
        bad = np.isnan(margins)
        if bad.any():
            # a NaN margin is never a pass
            k = int(np.argmax(bad))
            return cls(theorem_id, False, float("nan"), complex(z[k]), margins.size, tol, details)
        k = int(np.argmin(margins))
        worst = float(margins[k])
        return cls(theorem_id, worst >= -tol, worst, complex(z[k]), margins.size, tol, details)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "passed": bool(self.passed),
            "worst_margin": _num(self.worst_margin),
            "witness_z": [_num(self.witness_z.real), _num(self.witness_z.imag)],
            "samples": int(self.samples),
            "tol": _num(self.tol),
            "details": {k: _jsonable(v) for k, v in sorted(self.details.items())},
        }


def combine(theorem_id: str, reports: list[VerificationReport], **details) -> VerificationReport:
    """Worst of several reports, keeping its witness."""
    worst = min(reports, key=lambda r: (not np.isnan(r.worst_margin), r.worst_margin))
    return VerificationReport(
        theorem_id,
        all(r.passed for r in reports),
        worst.worst_margin,
        worst.witness_z,
        sum(r.samples for r in reports),
        worst.tol,
        details,
    )


def _num(x):
    x = float(x)
    if np.isnan(x) or np.isinf(x):
        return str(x)
    return x


def _jsonable(v):
    if isinstance(v, (complex, np.complexfloating)):
        return [_num(v.real), _num(v.imag)]
    if isinstance(v, (float, np.floating)):
        return _num(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v
