"""Locate data files whether running from source or from a bundled executable."""
import os
import sys


def resource_path(relative: str) -> str:
    """Resolve a path like 'data/profiles.json' against the project root.

    Normalizes separators for Windows.
    """
    base_path = getattr(sys, "_MEIPASS", os.path.abspath(os.path.dirname(__file__)))

    # Running from source: src/utils -> project root
    if base_path.endswith(os.path.join("src", "utils")):
        base_path = os.path.dirname(os.path.dirname(base_path))

    relative = relative.replace("/", os.sep).replace("\\", os.sep)
    return os.path.join(base_path, relative)
