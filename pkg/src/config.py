"""Configuration management for the Hurwitz orbit toolkit."""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Application configuration."""

    # Paths
    BASE_DIR = Path(__file__).parent.parent
    LOGS_DIR = BASE_DIR / "logs"

    def __init__(self):
        """Initialize config and ensure directories exist."""
        if self.LOG_TO_FILE:
            self.LOGS_DIR.mkdir(parents=True, exist_ok=True)

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    LOG_TO_FILE: bool = _env_flag("LOG_TO_FILE", "true")

    # Search limits
    ORBIT_CAP: int = int(os.getenv("ORBIT_CAP", "100000"))
    CONNECT_CAP: int = int(os.getenv("CONNECT_CAP", "200000"))
    GROUP_CAP: int = int(os.getenv("GROUP_CAP", "100000"))
    # resolve_peak tries |k| <= factor * (path length + length of the peak vertex)
    PEAK_SEARCH_FACTOR: int = int(os.getenv("PEAK_SEARCH_FACTOR", "10"))
    DEPTH_REDUCTION_CAP: int = int(os.getenv("DEPTH_REDUCTION_CAP", "100000"))
    # LRU size of the per-system reflection matrix and class witness caches
    ROOT_CACHE_SIZE: int = int(os.getenv("ROOT_CACHE_SIZE", "65536"))

    # Orbit search workers; 1 keeps everything on the calling thread
    THREADS: int = int(os.getenv("THREADS", "1"))

    # Self-test
    SELFTEST_SEED: int = int(os.getenv("SELFTEST_SEED", "20240613"))
    SELFTEST_SAMPLES: int = int(os.getenv("SELFTEST_SAMPLES", "25"))

    def validate(self) -> bool:
        """Validate configuration values."""
        for name in (
            "ORBIT_CAP", "CONNECT_CAP", "GROUP_CAP", "PEAK_SEARCH_FACTOR",
            "DEPTH_REDUCTION_CAP", "ROOT_CACHE_SIZE", "THREADS", "SELFTEST_SAMPLES",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        return True


config = Config()
