import os
from dotenv import load_dotenv

# Load environment variables from .env if present
load_dotenv()

WORKERS: int = int(os.getenv("QRELAY_WORKERS", "1"))
LOG_LEVEL: str = os.getenv("QRELAY_LOG_LEVEL", "INFO").upper()
LOG_DIR: str | None = os.getenv("QRELAY_LOG_DIR") or None
STRICT_CHECKS: bool = os.getenv("QRELAY_STRICT_CHECKS", "1").strip().lower() not in ("0", "false", "no")

# Experiment service only; the CLI runs without a token.
AUTH_TOKEN: str | None = os.getenv("AUTH_TOKEN") or None
HOST: str = os.getenv("HOST", "0.0.0.0")
PORT: int = int(os.getenv("PORT", "8086"))

if WORKERS < 1:
    raise RuntimeError("QRELAY_WORKERS must be a positive integer")
