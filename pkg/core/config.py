import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

load_dotenv()

ORACLE_VMAX_HARD_CAP = 8


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    log_level: str = "WARNING"
    oracle_vmax_cap: int = Field(default=ORACLE_VMAX_HARD_CAP, ge=1, le=ORACLE_VMAX_HARD_CAP)
    prune_above: int = Field(default=6, ge=0)
    workers: int = Field(default=1, ge=1)
    data_dir: str = "data"


@lru_cache
def get_settings() -> Settings:
    return Settings(
        log_level=os.getenv("LOCALCHI_LOG_LEVEL", "WARNING").upper(),
        oracle_vmax_cap=int(
            os.getenv("LOCALCHI_ORACLE_VMAX_CAP", str(ORACLE_VMAX_HARD_CAP))
        ),
        prune_above=int(os.getenv("LOCALCHI_PRUNE_ABOVE", "6")),
        workers=int(os.getenv("LOCALCHI_WORKERS", "1")),
        data_dir=os.getenv("LOCALCHI_DATA_DIR", "data"),
    )
