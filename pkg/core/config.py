"""
Configuration management for the verification toolkit: tolerances, solver options,
enumeration caps and output settings, persisted as JSON with validation.
"""

import json
import multiprocessing
from dataclasses import asdict, dataclass, fields
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from core.log_writer import get_logger


@dataclass
class ToleranceSettings:
    """Numeric tolerances recorded in every certificate."""
    strict_margin: float = 1e-12
    residual: float = 1e-8
    agreement: float = 1e-7
    root_match: float = 1e-9
    gap: float = 1e-9
    perron_tie: float = 1e-12
    root_width: float = 1e-12
    argmax: float = 1e-9


@dataclass
class SpectralSettings:
    """Eigen-solver settings."""
    solver: str = 'eigh'  # 'eigh' or 'power'
    max_iterations: int = 200000
    eigen_tol: float = 1e-12


@dataclass
class EnumerationSettings:
    """Exhaustive generation caps and worker pool sizing."""
    max_m: int = 10
    max_n_cap: int = 12
    canonical_bound: int = 12
    workers: Optional[int] = None
    parallel_threshold: int = 400
    cache_enabled: bool = False
    cache_dir: str = '.qindex_cache'

    def __post_init__(self):
        if self.workers is None:
            self.workers = max(1, multiprocessing.cpu_count() - 1)


@dataclass
class VerificationSettings:
    """Default ranges and sample sizes of the verification suites."""
    k_min: int = 2
    k_max: int = 40
    m_max: int = 9
    bound_k_max: int = 200
    chain_k_min: int = 5
    chain_k_max: int = 60
    closed_form_k_max: int = 100
    window_m_max: int = 200
    forest_s_max: int = 6
    random_seed: int = 20240607
    random_graphs: int = 100
    rotation_trials: int = 50


@dataclass
class OutputSettings:
    """Logging and report output settings."""
    log_dir: str = 'logs'
    enable_console_log: bool = False
    enable_json_log: bool = False
    q_digits: int = 12
    auto_save_settings: bool = False


CATEGORIES = {
    'tolerances': ToleranceSettings,
    'spectral': SpectralSettings,
    'enumeration': EnumerationSettings,
    'verification': VerificationSettings,
    'output': OutputSettings,
}


class ConfigManager:
    """Configuration manager with validation and JSON persistence."""

    def __init__(self, config_file: str = "qindex_config.json"):
        """
        Initialize configuration manager.

        Args:
            config_file: Configuration file path
        """
        self.config_file = Path(config_file)
        self.logger = get_logger()

        self.tolerances = ToleranceSettings()
        self.spectral = SpectralSettings()
        self.enumeration = EnumerationSettings()
        self.verification = VerificationSettings()
        self.output = OutputSettings()

        self.load_config()

    def load_config(self) -> bool:
        """
        Load configuration from file.

        Returns:
            True if loaded successfully, False otherwise
        """
        try:
            if not self.config_file.exists():
                self.logger.log_debug("No config file found, using defaults")
                return False

            with open(self.config_file, 'r') as f:
                data = json.load(f)

            for category, settings_cls in CATEGORIES.items():
                if category in data:
                    setattr(self, category, settings_cls(**data[category]))

            self.logger.log_info(f"Configuration loaded from {self.config_file}")
            return True

        except Exception as e:
            self.logger.log_error(f"Failed to load config: {str(e)}")
            return False

    def save_config(self) -> bool:
        """
        Save configuration to file.

        Returns:
            True if saved successfully, False otherwise
        """
        try:
            config_data = self.get_all_settings()
            config_data['version'] = '1.0.0'
            config_data['last_saved'] = datetime.now().isoformat()

            # Keep the previous file as a backup
            if self.config_file.exists():
                backup_file = self.config_file.with_suffix('.json.bak')
                self.config_file.replace(backup_file)

            with open(self.config_file, 'w') as f:
                json.dump(config_data, f, indent=2)

            self.logger.log_info(f"Configuration saved to {self.config_file}")
            return True

        except Exception as e:
            self.logger.log_error(f"Failed to save config: {str(e)}")
            return False

    def validate_settings(self) -> Dict[str, List[str]]:
        """
        Validate all settings for potential issues.

        Returns:
            Dictionary of validation warnings/errors
        """
        issues: Dict[str, List[str]] = {
            'warnings': [],
            'errors': []
        }

        for f in fields(self.tolerances):
            if getattr(self.tolerances, f.name) <= 0:
                issues['errors'].append(f"Tolerance {f.name} must be positive")
        if self.tolerances.residual > 1e-8:
            issues['warnings'].append("Residual tolerance looser than 1e-8 weakens certificates")
        if self.tolerances.root_width < 1e-12:
            issues['errors'].append("Root isolation width must be at least 1e-12")

        if self.spectral.solver not in ('eigh', 'power'):
            issues['errors'].append("Solver must be 'eigh' or 'power'")

        if self.enumeration.max_m > 10:
            issues['warnings'].append("Enumeration beyond 10 edges is not supported")
        if self.enumeration.max_n_cap > 12 or self.enumeration.canonical_bound > 12:
            issues['warnings'].append("Vertex caps above 12 make canonical search very slow")
        if self.enumeration.workers is not None and self.enumeration.workers > 32:
            issues['warnings'].append("Very high worker count may degrade performance")

        if self.verification.k_min > self.verification.k_max:
            issues['errors'].append("k_min must not exceed k_max")

        return issues

    def reset_to_defaults(self):
        """Reset all settings to defaults."""
        for category, settings_cls in CATEGORIES.items():
            setattr(self, category, settings_cls())
        self.logger.log_info("Configuration reset to defaults")

    def get_all_settings(self) -> Dict[str, Any]:
        """Get all settings as a dictionary."""
        return {category: asdict(getattr(self, category)) for category in CATEGORIES}

    def update_setting(self, category: str, key: str, value: Any) -> bool:
        """
        Update a specific setting.

        Args:
            category: Settings category ('tolerances', 'spectral', 'enumeration', ...)
            key: Setting key
            value: New value

        Returns:
            True if updated successfully
        """
        settings_obj = getattr(self, category, None) if category in CATEGORIES else None
        if settings_obj is None:
            self.logger.log_error(f"Unknown settings category: {category}")
            return False

        if not hasattr(settings_obj, key):
            self.logger.log_error(f"Unknown setting: {category}.{key}")
            return False

        setattr(settings_obj, key, value)
        self.logger.log_info(f"Updated {category}.{key} = {value}")

        if self.output.auto_save_settings:
            self.save_config()

        return True

    def export_config(self, export_path: str) -> bool:
        """
        Export configuration to a different location.

        Args:
            export_path: Path to export configuration

        Returns:
            True if exported successfully
        """
        original_config_file = self.config_file
        self.config_file = Path(export_path)
        try:
            return self.save_config()
        finally:
            self.config_file = original_config_file


# Global configuration instance
_config_manager: Optional[ConfigManager] = None


def get_config() -> ConfigManager:
    """Get the global configuration manager instance."""
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager


def set_config(manager: Optional[ConfigManager]) -> None:
    """Replace the global configuration manager (None restores lazy defaults)."""
    global _config_manager
    _config_manager = manager
