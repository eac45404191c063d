"""Run configuration assembled from the parsed command line."""
from dataclasses import dataclass, field
from typing import List, Optional

FORMATS = ("text", "json", "csv")
FUNCTIONS = ("op", "rk")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class ConfigError(ValueError):
    """Invalid combination of command-line options."""


@dataclass
class RunConfig:
    command: str
    fn: str = "op"
    k: int = 3
    modulus: Optional[int] = None
    limit: int = 0
    profile: str = "default"
    filter: Optional[str] = None
    fmt: str = "text"
    output: Optional[str] = None
    timings: bool = False
    verbose: bool = False
    paths: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.limit < 0:
            raise ConfigError(f"--limit must be non-negative, got {self.limit}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"--format must be one of {FORMATS}, got {self.fmt!r}")
        if self.fn not in FUNCTIONS:
            raise ConfigError(f"--fn must be one of {FUNCTIONS}, got {self.fn!r}")
        if self.k < 1:
            raise ConfigError(f"--k must be positive, got {self.k}")
        if self.modulus is not None and self.modulus < 2:
            raise ConfigError(f"--modulus must be at least 2, got {self.modulus}")
