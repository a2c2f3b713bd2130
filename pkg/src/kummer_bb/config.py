from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, TypeAlias

logger = logging.getLogger("kummer_bb")

OutputFormat: TypeAlias = Literal["json", "dot", "text"]
Ambient: TypeAlias = Literal["L2", "L2p2"]
Presentation: TypeAlias = Literal["snf", "marked", "primary"]

DEFAULT_SEED = 42
DEFAULT_FORMAT: OutputFormat = "json"
DEFAULT_BRUTE_FORCE_BUDGET = 10**8
THREADS_ENV_VAR = "KBB_THREADS"


@dataclass(frozen=True)
class OracleOptions:
    threads: int = 1
    brute_force_budget: int = DEFAULT_BRUTE_FORCE_BUDGET

    @classmethod
    def from_env(cls) -> OracleOptions:
        """Read the thread cap from ``KBB_THREADS``; invalid values mean 1."""
        raw = os.environ.get(THREADS_ENV_VAR)
        if raw is None:
            return cls()
        try:
            threads = int(raw)
        except ValueError:
            threads = 0
        if threads < 1:
            logger.warning("Ignoring %s=%r, using 1 thread", THREADS_ENV_VAR, raw)
            threads = 1
        return cls(threads=threads)


@dataclass(frozen=True)
class RunConfig:
    command: str
    p: int | None = None
    l2: bool = False
    out: Path | None = None
    format: OutputFormat = DEFAULT_FORMAT
    seed: int = DEFAULT_SEED
    options: OracleOptions = field(default_factory=OracleOptions)
