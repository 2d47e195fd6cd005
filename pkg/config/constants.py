"""
Useful constant variables.
"""

from pathlib import Path

PROJECT_ROOT = Path(__file__).parent.parent
PROJECT_CONFIG_PATH = PROJECT_ROOT / "project_config.json"

EXACTCORE_SETTINGS_PATH = PROJECT_ROOT / "exactcore" / "settings.json"
GENUS2_SETTINGS_PATH = PROJECT_ROOT / "genus2" / "settings.json"
ELLSURF_SETTINGS_PATH = PROJECT_ROOT / "ellsurf" / "settings.json"
CONSTRUCTIONS_SETTINGS_PATH = PROJECT_ROOT / "constructions" / "settings.json"
CLI_SETTINGS_PATH = PROJECT_ROOT / "cli" / "settings.json"
