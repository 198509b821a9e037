import os

DEFAULT_ORBIT_CAP = 10**6
DEFAULT_DOMINANCE_CAP = 10**5
DEFAULT_MAX_RANK = 16


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def orbit_cap(cap=None):
    if cap is not None:
        return cap
    return _env_int("WEYLFACES_ORBIT_CAP", DEFAULT_ORBIT_CAP)


def dominance_cap(cap=None):
    if cap is not None:
        return cap
    return _env_int("WEYLFACES_DOMINANCE_CAP", DEFAULT_DOMINANCE_CAP)
