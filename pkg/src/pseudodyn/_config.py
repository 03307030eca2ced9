"""Engine configuration for pseudodyn.

Defaults live here as module constants. Explicit arguments override the
environment, which overrides the defaults.
"""

from __future__ import annotations

import os

from pydantic import BaseModel, ConfigDict, Field

from pseudodyn.exceptions import ConfigurationError

# Default configuration
DEFAULT_NODE_CAP = 1_000_000
DEFAULT_WORD_CAP = 2_000_000
DEFAULT_APPROX_BITS = 40
DEFAULT_LOG_LEVEL = "WARNING"

NODE_CAP_ENV = "PSEUDODYN_NODE_CAP"
WORD_CAP_ENV = "PSEUDODYN_WORD_CAP"
LOG_LEVEL_ENV = "PSEUDODYN_LOG_LEVEL"

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(name, raw, "expected an integer") from None
    if value < 1:
        raise ConfigurationError(name, raw, "must be positive")
    return value


class EngineConfig(BaseModel):
    """Resource limits shared by the orbit engine and its consumers.

    Example:
        config = EngineConfig.from_env(node_cap=50_000)
        ball = orbit_ball(system, seed, 12, config=config)
    """

    model_config = ConfigDict(frozen=True)

    node_cap: int = Field(default=DEFAULT_NODE_CAP, ge=1)
    word_cap: int = Field(default=DEFAULT_WORD_CAP, ge=1)
    log_level: str = Field(default=DEFAULT_LOG_LEVEL)

    @classmethod
    def from_env(
        cls,
        *,
        node_cap: int | None = None,
        word_cap: int | None = None,
        log_level: str | None = None,
    ) -> EngineConfig:
        """Build a config from explicit values, then environment, then defaults.

        Args:
            node_cap: Explicit node cap for BFS expansions.
            word_cap: Explicit cap on enumerated words.
            log_level: Explicit log level name.

        Returns:
            The resolved configuration.

        Raises:
            ConfigurationError: If an environment value is malformed.
        """
        resolved_level = (log_level or os.getenv(LOG_LEVEL_ENV) or DEFAULT_LOG_LEVEL).upper()
        if resolved_level not in _LOG_LEVELS:
            raise ConfigurationError(LOG_LEVEL_ENV, resolved_level, "unknown level")
        return cls(
            node_cap=node_cap or _int_from_env(NODE_CAP_ENV, DEFAULT_NODE_CAP),
            word_cap=word_cap or _int_from_env(WORD_CAP_ENV, DEFAULT_WORD_CAP),
            log_level=resolved_level,
        )


def default_config() -> EngineConfig:
    """Return the configuration resolved from the current environment."""
    return EngineConfig.from_env()
