"""Constants and tunables for TauForge."""
import os

## Deal with the annoying path conflict (Windows vs Linux)
BASE_PATH = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
SPECS_PATH = os.path.join(BASE_PATH, "assets", "specs")
RESULTS_PATH = os.path.join(BASE_PATH, "results")
LOGS_DIR = os.path.join(BASE_PATH, "src", "logs")

# Worker pool size used by the CLI and the verification suites
WORKERS = 4

# Largest number of U letters the Weingarten oracle accepts
WEINGARTEN_MAX_LETTERS = 6

# Chain oracle limits: total coupling expansion order and matrix size
CHAIN_MAX_ORDER = 8
CHAIN_MAX_N = 3

# Roughly 1 KiB per memo entry; unset means unbounded memo tables
MEMO_ENTRY_BYTES = 1024


def _memo_maxsize() -> int | None:
    raw = os.environ.get("TAUFORGE_MEMO_MB")
    if raw is None or raw.strip() == "":
        return None
    try:
        megabytes = float(raw)
    except ValueError as exc:
        raise ValueError(f"TAUFORGE_MEMO_MB must be a number, got {raw!r}") from exc
    return max(128, int(megabytes * 1024 * 1024 / MEMO_ENTRY_BYTES))


MEMO_MAXSIZE = _memo_maxsize()
