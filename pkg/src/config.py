"""Configuration settings for the Minkowski angle toolkit."""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent.parent
OUTPUT_DIR = BASE_DIR / os.getenv("MINKOWSKI_OUTPUT_DIR", "output")
CATALOG_DIR = BASE_DIR / os.getenv("MINKOWSKI_CATALOG_DIR", "catalog")

# Tolerances
DEFAULT_TOL = float(os.getenv("MINKOWSKI_TOL", 1e-9))
SEARCH_TOL = float(os.getenv("MINKOWSKI_SEARCH_TOL", 1e-6))
GUARD_BAND = float(os.getenv("MINKOWSKI_GUARD_BAND", 1e-9))

# Sampling
DEFAULT_SEED = int(os.getenv("MINKOWSKI_SEED", 7))
WITNESS_GRID = int(os.getenv("MINKOWSKI_GRID", 64))

# Diagnostics go to stderr; set MINKOWSKI_QUIET=1 to silence them
QUIET = os.getenv("MINKOWSKI_QUIET", "").lower() in ("1", "true", "yes")

# Search settings
GOLDEN_MAX_ITER = 200
ROBERTS_EXPONENTS = range(-20, 21)
FD_STEPS = (1e-4, 5e-5)

# Quadrature settings
MIN_QUAD = 64
MIN_DEKSTER_QUAD = 256
QUAD_TOL = 1e-11
QUAD_ACCEPT_TOL = 1e-9

# Output settings
SIGNIFICANT_DIGITS = 12
SVG_SIZE = 640

# Plot layers
PLOT_LAYERS = [
    "unit_circle", "antinorm_circle", "bisectors",
    "measure_density", "dekster_density",
]


def validate_config():
    """Validate that numeric overrides are usable."""
    errors = []

    for name, value in (
        ("MINKOWSKI_TOL", DEFAULT_TOL),
        ("MINKOWSKI_SEARCH_TOL", SEARCH_TOL),
        ("MINKOWSKI_GUARD_BAND", GUARD_BAND),
    ):
        if not value > 0:
            errors.append(f"{name} must be positive (got {value}).")

    if WITNESS_GRID < 4:
        errors.append(f"MINKOWSKI_GRID must be at least 4 (got {WITNESS_GRID}).")

    if errors:
        raise ValueError("\n".join(errors))

    return True
