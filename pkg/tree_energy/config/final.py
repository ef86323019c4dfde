from pathlib import Path
from typing import Literal, Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import BaseModel, Field


class Logging(BaseModel):
    log_level: Literal["DEBUG", "INFO", "WARNING"] = Field(
        "INFO", description="default log level"
    )


class Cache(BaseModel):
    dir: Optional[Path] = Field(
        None, description="directory for the energy cache, disabled when unset"
    )
    enabled: bool = Field(True, description="use the cache when a directory is set")


class Numerics(BaseModel):
    energy_tol: float = Field(1e-9, gt=0, description="default radius for energies")
    rank_tol: float = Field(
        1e-8, gt=0, description="first-pass radius used when ranking a whole order"
    )
    min_tol: float = Field(
        1e-14, gt=0, description="tightest radius tried before reporting a tie"
    )
    quad_epsabs: float = Field(
        1e-11, gt=0, description="absolute tolerance handed to each quadrature piece"
    )
    quad_limit: int = Field(400, gt=0, description="maximum adaptive subintervals")
    quad_tol: float = Field(
        1e-9, gt=0, description="error budget an integral has to meet"
    )


class Enumeration(BaseModel):
    cap: int = Field(20, gt=0, description="largest order accepted for enumeration")


class Workers(BaseModel):
    jobs: int = Field(1, gt=0, description="worker processes for energy fan-out")


def _default_orders() -> dict[str, list[int]]:
    return {
        "fourth-max": [10, 14],
        "broom-short-arm": [12],
        "broom-long-arm": [14],
        "broom-longest-arm": [11, 15],
        "broom-bound": [14],
        "two-leg-chain": [31, 32],
        "starlike-max": [31],
        "spider-vs-two-leg": [10, 31],
        "broom-vs-two-leg": [22, 31],
        "three-arm-vs-two-leg": [31, 32],
        "top-list": [31, 32, 33, 34, 35],
        "grafting": [9],
    }


class Verification(BaseModel):
    default_orders: dict[str, list[int]] = Field(
        default_factory=_default_orders,
        description="orders each claim is re-checked at when no order is given",
    )
    grafting_max_bases: int = Field(
        120, gt=0, description="base trees sampled by the grafting property check"
    )
    reduction_samples: int = Field(
        40, ge=0, description="random trees pushed through branch reduction per order"
    )
    seed: int = Field(20120831, description="seed for every sampled check")


class Settings(BaseSettings):
    logging: Logging = Field(
        default_factory=lambda: Logging.model_construct(),
        description="logging config",
    )

    cache: Cache = Field(
        default_factory=lambda: Cache.model_construct(),
        description="energy cache config",
    )

    numerics: Numerics = Field(
        default_factory=lambda: Numerics.model_construct(),
        description="tolerances for root refinement and quadrature",
    )

    enumeration: Enumeration = Field(
        default_factory=lambda: Enumeration.model_construct(),
        description="enumeration config",
    )

    workers: Workers = Field(
        default_factory=lambda: Workers.model_construct(),
        description="worker pool config",
    )

    verification: Verification = Field(
        default_factory=lambda: Verification(),
        description="claim verification config",
    )

    model_config = SettingsConfigDict(
        env_prefix="TREE_ENERGY__",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
    )
