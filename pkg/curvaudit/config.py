from __future__ import annotations

import os

# Output defaults.
USE_COLOR = True             # Toggle ANSI colours in table output.
DEFAULT_FORMAT = "table"
OUTPUT_FORMATS = ("table", "json", "csv")

# Search defaults.
DEFAULT_POLICY = "pass"      # "pass": gated-out filters cannot eliminate; "require": they exclude.
DEFAULT_WORKERS = 1          # Thread workers for top-level search branches.

# Number of intervals in an alpha sweep (steps + 1 sample points).
DEFAULT_SWEEP_STEPS = 8

# Process exit codes (the machine contract of the CLI).
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_RULED_OUT = 2

CATALOG_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "catalog.yaml")
