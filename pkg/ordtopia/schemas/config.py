"""
Run configuration schema.

Defines the knobs shared by every `repro` and `verify` command.
"""
import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional

from ordtopia.errors import ConfigError


SEED_ENV_VAR = "ORDTOPIA_SEED"

DEFAULT_TRIALS = 10_000
DEFAULT_MAX_CARRIER = 4
DEFAULT_Q = Fraction(1, 2)

# Exhaustive enumeration limits. Topologies on four points already number 355
# families out of 2^14 candidates, and preorder pairs on five points exceed 10^7.
MAX_RANDOM_CARRIER = 5
MAX_EXHAUSTIVE_TOPOLOGY_CARRIER = 3
MAX_EXHAUSTIVE_PAIR_CARRIER = 4

# Carrier sizes drawn by the randomized parts of every suite
RANDOM_CARRIERS = (4, 5)


class OutputFormat(str, Enum):
    """Report rendering."""

    JSON = "json"
    TEXT = "text"


@dataclass(frozen=True)
class RunConfig:
    """Configuration for a single CLI run."""

    seed: int = 0
    trials: int = DEFAULT_TRIALS
    max_carrier: int = DEFAULT_MAX_CARRIER
    format: OutputFormat = OutputFormat.JSON
    output_path: Optional[str] = None
    p: Optional[float] = None
    q: Fraction = DEFAULT_Q
    verbose: bool = False

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ConfigError(f"Invalid config: seed must be unsigned, got {self.seed}")
        if self.trials < 1:
            raise ConfigError(f"Invalid config: trials must be positive, got {self.trials}")
        if not 1 <= self.max_carrier <= MAX_RANDOM_CARRIER:
            raise ConfigError(
                f"Invalid config: max_carrier must be in 1..{MAX_RANDOM_CARRIER}, "
                f"got {self.max_carrier}"
            )
        if self.p is not None and self.p <= 1:
            raise ConfigError(f"Invalid config: p must exceed 1, got {self.p}")
        if not 0 < self.q < 1:
            raise ConfigError(f"Invalid config: q must lie in (0, 1), got {self.q}")

    @property
    def topology_carrier(self) -> int:
        """Largest carrier for suites that enumerate every topology."""
        return min(self.max_carrier, MAX_EXHAUSTIVE_TOPOLOGY_CARRIER)

    @property
    def pair_carrier(self) -> int:
        """Largest carrier for suites that enumerate pairs of preorders."""
        return min(self.max_carrier, MAX_EXHAUSTIVE_PAIR_CARRIER)


def resolve_seed(cli_seed: Optional[int], environ: Mapping[str, str] = os.environ) -> int:
    """
    Pick the run seed: explicit flag first, then ORDTOPIA_SEED, then 0.

    Raises:
        ConfigError: If the environment variable is not an unsigned integer
    """
    if cli_seed is not None:
        return cli_seed
    raw = environ.get(SEED_ENV_VAR)
    if raw is None or raw.strip() == "":
        return 0
    try:
        seed = int(raw)
    except ValueError:
        raise ConfigError(f"Invalid config: {SEED_ENV_VAR}={raw!r} is not an integer")
    if seed < 0:
        raise ConfigError(f"Invalid config: {SEED_ENV_VAR} must be unsigned, got {seed}")
    return seed
