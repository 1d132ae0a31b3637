"""
Configuration loader for the local-group workbench.
Handles environment variables and YAML defaults configuration.
Every limit used by an operation has its default here.
"""

import os
from pathlib import Path
from typing import Optional, Dict, Any
from dataclasses import dataclass
import yaml
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


DEFAULT_CONFIG_PATH = Path(__file__).parent.parent / "config" / "workbench.yaml"


@dataclass
class WorkbenchConfig:
    """Main workbench configuration."""
    # Logging
    log_level: str = "INFO"
    json_logs: bool = False

    # Word calculus
    seed: int = 0
    max_len: int = 6
    samples: int = 200
    assoc_workers: int = 1

    # Completion
    max_rules: int = 500
    max_rule_len: int = 24

    # Move-graph search
    bfs_max_word_len: int = 6
    bfs_max_steps: int = 8

    # Contractive checks
    contraction_budget: int = 64
    ball_depth: int = 6

    # Sampling policy for instances
    denominator_bound: int = 64
    padic_precision: int = 8

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WorkbenchConfig":
        known = {name for name in cls.__dataclass_fields__}
        return cls(**{k: v for k, v in data.items() if k in known})

    @classmethod
    def load(cls, config_path: Optional[str] = None) -> "WorkbenchConfig":
        """Load configuration from YAML defaults, then environment overrides."""
        if config_path is None:
            config_path = os.getenv("WORKBENCH_CONFIG")
        path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH

        values: Dict[str, Any] = {}
        if path.exists():
            with open(path, "r", encoding="utf-8") as f:
                yaml_config = yaml.safe_load(f) or {}

            values.update(yaml_config.get("defaults", {}))
            sampling = yaml_config.get("sampling", {})
            if "denominator_bound" in sampling:
                values["denominator_bound"] = sampling["denominator_bound"]
            if "padic_precision" in sampling:
                values["padic_precision"] = sampling["padic_precision"]
            if "samples" in sampling:
                values["samples"] = sampling["samples"]

        # Environment wins over YAML
        env_overrides = {
            "WORKBENCH_LOG_LEVEL": ("log_level", str),
            "WORKBENCH_SEED": ("seed", int),
            "WORKBENCH_MAX_LEN": ("max_len", int),
            "WORKBENCH_MAX_RULES": ("max_rules", int),
            "WORKBENCH_MAX_RULE_LEN": ("max_rule_len", int),
        }
        for env_name, (field_name, cast) in env_overrides.items():
            raw = os.getenv(env_name)
            if raw is not None and raw != "":
                values[field_name] = cast(raw)

        return cls.from_dict(values)


# Global config instance
_config: Optional[WorkbenchConfig] = None


def get_config(config_path: Optional[str] = None) -> WorkbenchConfig:
    """Get or create the global config instance."""
    global _config
    if _config is None:
        _config = WorkbenchConfig.load(config_path)
    return _config


def reload_config(config_path: Optional[str] = None) -> WorkbenchConfig:
    """Force reload the configuration."""
    global _config
    _config = WorkbenchConfig.load(config_path)
    return _config
