"""
Configuration management for qflag runs.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from typing import Any

from returns.result import Failure, Result, Success

MAX_N_ENV = "QFLAG_MAX_N"


@dataclass
class QFlagConfig:
    """Configuration for enumeration and verification runs."""

    # Limits
    max_n: int = 7  # Hard cap on n; QFLAG_MAX_N overrides
    algebraic_warn_n: int = 5  # Algebraic suites warn above this n

    # Geometric sampling
    q0: Fraction = Fraction(2)  # Rational specialization of q
    seed: int = 42
    samples: int = 100  # Sampled points per cell

    # Execution
    workers: int = 1  # 1 = sequential
    failure_cap: int = 20  # Failures kept verbatim per check

    @property
    def parallel(self) -> bool:
        """Whether suites fan out over a worker pool."""
        return self.workers > 1

    def algebraic_heavy(self, n: int) -> bool:
        """n beyond the size algebraic suites are comfortable with."""
        return n > self.algebraic_warn_n

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "max_n": self.max_n,
            "algebraic_warn_n": self.algebraic_warn_n,
            "q0": str(self.q0),
            "seed": self.seed,
            "samples": self.samples,
            "workers": self.workers,
            "failure_cap": self.failure_cap,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> QFlagConfig:
        """Create from dictionary."""
        return cls(
            max_n=data.get("max_n", 7),
            algebraic_warn_n=data.get("algebraic_warn_n", 5),
            q0=Fraction(str(data.get("q0", "2"))),
            seed=data.get("seed", 42),
            samples=data.get("samples", 100),
            workers=data.get("workers", 1),
            failure_cap=data.get("failure_cap", 20),
        )


def parse_q(text: str) -> Result[Fraction, str]:
    """Parse ``NUM/DEN`` (or an integer) into a usable q0."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        return Failure(f"Invalid q value: {text!r} (expected NUM/DEN)")
    if value in (0, 1, -1):
        return Failure(f"q0 = {value} is 0 or a root of unity")
    return Success(value)


def load_config(
    environ: Mapping[str, str] | None = None,
    overrides: Mapping[str, Any] | None = None,
) -> Result[QFlagConfig, str]:
    """
    Build the run configuration from defaults, the environment and CLI overrides.

    Overrides whose value is None are ignored, so argparse namespaces with
    unset options can be passed through directly.
    """
    config = QFlagConfig()
    env = environ or {}

    raw_max = env.get(MAX_N_ENV)
    if raw_max is not None:
        try:
            max_n = int(raw_max)
        except ValueError:
            return Failure(f"{MAX_N_ENV} must be an integer, got {raw_max!r}")
        if max_n < 2:
            return Failure(f"{MAX_N_ENV} must be at least 2, got {max_n}")
        config = replace(config, max_n=max_n)

    known = {f.name for f in fields(QFlagConfig)}
    updates = {k: v for k, v in (overrides or {}).items() if k in known and v is not None}
    if "q0" in updates:
        parsed = parse_q(str(updates["q0"]))
        if isinstance(parsed, Failure):
            return parsed
        updates["q0"] = parsed.unwrap()
    config = replace(config, **updates)

    if config.samples < 1:
        return Failure(f"--samples must be positive, got {config.samples}")
    if config.workers < 1:
        return Failure(f"--workers must be positive, got {config.workers}")
    return Success(config)
