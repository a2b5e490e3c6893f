import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _optional_int(name: str) -> int | None:
    value = os.getenv(name)
    return int(value) if value not in (None, "") else None


def _optional_float(name: str) -> float | None:
    value = os.getenv(name)
    return float(value) if value not in (None, "") else None


class Config:
    LOG_LEVEL = os.getenv('REPWORDS_LOG_LEVEL', 'INFO')

    # Brute-force word search
    MAX_N = int(os.getenv('REPWORDS_MAX_N', '5'))
    MAX_OCCURRENCES = int(os.getenv('REPWORDS_MAX_OCCURRENCES', '2'))
    TIME_CAP = _optional_float('REPWORDS_TIME_CAP')

    # Figures and randomized suites
    SVG_SCALE = int(os.getenv('REPWORDS_SVG_SCALE', '40'))
    SEED = int(os.getenv('REPWORDS_SEED', '0'))

    @classmethod
    def jobs(cls, cli_value: int | None = None) -> int:
        """REPWORDS_JOBS wins over --jobs; read on every call so tests can patch the env."""
        env_value = _optional_int('REPWORDS_JOBS')
        if env_value is not None:
            return max(1, env_value)
        return max(1, cli_value or 1)
