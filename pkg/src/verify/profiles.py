"""Verification profiles: how large the shared tables may grow."""
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional

from ..utils.resources import resource_path

logger = logging.getLogger(__name__)

PROFILES_FILE = "data/profiles.json"
PROFILE_NAMES = ("quick", "default", "deep")


class ProfileError(ValueError):
    """Unknown profile name or malformed profile file."""


@dataclass(frozen=True)
class Profile:
    name: str
    trunc: int
    density_scale: float = 1.0
    description: str = ""


def _parse(name: str, entry: dict) -> Profile:
    try:
        trunc = int(entry["trunc"])
    except (KeyError, TypeError, ValueError) as e:
        raise ProfileError(f"profile {name!r} needs an integer 'trunc'") from e
    if trunc < 0:
        raise ProfileError(f"profile {name!r} has negative trunc {trunc}")
    return Profile(
        name=name,
        trunc=trunc,
        density_scale=float(entry.get("density_scale", 1.0)),
        description=entry.get("description", ""),
    )


@lru_cache(maxsize=4)
def load_profiles(path: Optional[str] = None) -> Dict[str, Profile]:
    """Load every profile from the JSON file (data/profiles.json by default)."""
    path = path or resource_path(PROFILES_FILE)
    try:
        with open(path, "r") as f:
            raw = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ProfileError(f"cannot read profiles from {path}: {e}") from e
    profiles = {name: _parse(name, entry) for name, entry in raw.items()}
    logger.debug("Loaded %d profiles from %s", len(profiles), path)
    return profiles


def get_profile(name: str) -> Profile:
    profiles = load_profiles()
    if name not in profiles:
        raise ProfileError(f"unknown profile {name!r}; choose one of {sorted(profiles)}")
    return profiles[name]
