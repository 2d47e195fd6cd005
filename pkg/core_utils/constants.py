"""
Useful constant variables.
"""

from pathlib import Path

PROJECT_ROOT = Path(__file__).parent.parent
DATA_PATH = PROJECT_ROOT / "core_utils" / "data"
QM_CURVE_PATH = DATA_PATH / "qm_curve.json"
SPLIT_CURVE_PATH = DATA_PATH / "split_curve.json"
EXAMPLE43_PATH = DATA_PATH / "example43.json"

EXAMPLE_PATHS = {
    "qm": QM_CURVE_PATH,
    "split": SPLIT_CURVE_PATH,
    "example43": EXAMPLE43_PATH,
}
