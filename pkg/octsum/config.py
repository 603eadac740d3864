import os
from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings
from dotenv import load_dotenv

from . import __version__

# Load .env file if it exists
load_dotenv()

# Project root directory
ROOT_DIR = Path(__file__).parent.parent


class Settings(BaseSettings):
    # Application settings
    APP_NAME: str = "octsum-verify"
    ENV: str = "development"
    LOG_LEVEL: str = "WARNING"
    LOG_DIR: Path = ROOT_DIR / "logs"

    # Search and scan settings
    DEFAULT_BOUND: int = 10_000
    MAX_SCAN_BOUND: int = 10_000_000
    TAU_MAX_ITERS: int = 64

    # Verification settings
    ENGINE_VERSION: str = __version__
    WORKERS: int = 1
    SAMPLE_WITNESSES: int = 10
    CERT_DIR: Path = ROOT_DIR / "data" / "certificates"

    # Result cache settings
    CACHE_PATH: Optional[Path] = None
    CACHE_AUDIT_RATE: float = 0.01
    AUDIT_SEED: int = 20170601

    class Config:
        env_file = ".env"
        case_sensitive = True


# Create settings instance
settings = Settings()

if settings.ENV == "production":
    os.makedirs(settings.LOG_DIR, exist_ok=True)
