"""
Run configuration of the command line front end.

Classes:
    Command: The subcommands.
    OutputFormat: json or csv reports.
    ExitCode: The process exit codes.
    RunConfig: Resolved settings of one invocation.
"""
import re
from dataclasses import dataclass, field
from enum import Enum, IntEnum

from src.constant import WORKERS
from src.errors import (
    BudgetError, DomainError, PoleAtContent, SpecParseError, TruncationError, UnsupportedError
)
from src.symfunc import Key, make_key


class Command(Enum):
    """Subcommands."""
    EXPAND = "expand"
    COEFF = "coeff"
    VERIFY = "verify"
    HURWITZ = "hurwitz"
    PLAN = "plan"

    @classmethod
    def from_char(cls, name: str) -> "Command":
        """Parse a subcommand name."""
        try:
            return cls(name)
        except ValueError as exc:
            raise SpecParseError(f"Unknown command {name!r}") from exc


class OutputFormat(Enum):
    """Report formats."""
    JSON = "json"
    CSV = "csv"

    @classmethod
    def from_char(cls, name: str) -> "OutputFormat":
        """Parse a format name."""
        try:
            return cls(name)
        except ValueError as exc:
            raise SpecParseError(f"Unknown output format {name!r}, expected json or csv") from exc


class ExitCode(IntEnum):
    """Process exit codes."""
    OK = 0
    VERIFY_FAILED = 1
    PARSE_ERROR = 2
    POLE = 3
    CAP = 4
    MODE = 5

    @classmethod
    def for_error(cls, error: Exception) -> "ExitCode":
        """Exit code of a library error."""
        if isinstance(error, SpecParseError):
            return cls.PARSE_ERROR
        if isinstance(error, PoleAtContent):
            return cls.POLE
        if isinstance(error, TruncationError):
            return cls.CAP
        if isinstance(error, (DomainError, UnsupportedError, BudgetError)):
            return cls.MODE
        return cls.PARSE_ERROR


_FACTOR = re.compile(r"^t(\d+)_(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str) -> Key:
    """
    Parse `t1_2^2 t0_1` (factors separated by spaces or `*`); "1" is the constant monomial.

    Raises:
        SpecParseError: A factor is not of the form t<j>_<k>[^<a>].
    """
    powers: dict[str, dict[int, int]] = {}
    for factor in re.split(r"[\s*]+", text.strip()):
        if factor in ("", "1"):
            continue
        match = _FACTOR.match(factor)
        if match is None:
            raise SpecParseError(f"Malformed monomial factor {factor!r}")
        block, k, power = f"t{match.group(1)}", int(match.group(2)), int(match.group(3) or 1)
        if k < 1:
            raise SpecParseError(f"Time index must be positive in {factor!r}")
        per_block = powers.setdefault(block, {})
        per_block[k] = per_block.get(k, 0) + power
    return make_key(powers)


def parse_caps(text: str) -> tuple[int, ...]:
    """
    Parse "4,4,3" as caps (D_0, ..., D_{m+1}).

    Raises:
        SpecParseError: A cap is not a non-negative integer.
    """
    try:
        caps = tuple(int(piece) for piece in text.split(",") if piece.strip())
    except ValueError as exc:
        raise SpecParseError(f"Caps must be comma separated integers, got {text!r}") from exc
    if any(cap < 0 for cap in caps):
        raise SpecParseError(f"Caps must be non-negative, got {text!r}")
    return caps


@dataclass(frozen=True)
class RunConfig:
    """
    Settings of one command line run.

    Attributes:
        command (Command): The subcommand.
        spec_path (str | None): Spec file name (under assets/specs) or path.
        caps (tuple[int, ...] | None): Cap override (D_0, ..., D_{m+1}).
        out_path (str | None): Report file; standard output when unset.
        output_format (OutputFormat): json or csv.
        suite (str): Verification suite name.
        jobs (int): Worker threads.
        monomial (Key): Monomial queried by `coeff`.
        corrupt (bool): Inject a perturbation into the checks that support it.
        plan_name (str | None): Builder used by `plan` when no spec is given.
        size (int): Matrix size for the plan builders.
    """
    command: Command
    spec_path: str | None = None
    caps: tuple[int, ...] | None = None
    out_path: str | None = None
    output_format: OutputFormat = OutputFormat.JSON
    suite: str = "all"
    jobs: int = 1
    monomial: Key = field(default=())
    corrupt: bool = False
    plan_name: str | None = None
    size: int = 2

    def __post_init__(self):
        if self.jobs < 1:
            raise SpecParseError(f"--jobs must be positive, got {self.jobs}")
        if self.jobs > WORKERS * 4:
            raise SpecParseError(f"--jobs is limited to {WORKERS * 4}, got {self.jobs}")
        if self.size < 1:
            raise SpecParseError(f"--size must be positive, got {self.size}")
        if self.caps is not None and any(cap < 0 for cap in self.caps):
            raise SpecParseError(f"Caps must be non-negative, got {self.caps}")
