"""Twisted quantum double (Dijkgraaf-Witten) anyons, gapped boundaries and walls."""

import json

from ._core import (
    BoundaryInvalid,
    ConfigError,
    Group,
    NonIntegerMultiplicity,
    closure,
    cyclic,
    golden_suites,
    group_from_spec,
    product,
    s3,
    verify_golden,
)
from ._core import run as _run

__all__ = [
    "BoundaryInvalid", "ConfigError", "Group", "NonIntegerMultiplicity", "closure", "cyclic",
    "golden_suites", "group_from_spec", "product", "s3", "verify_golden", "run", "compute",
]

_ERRORS = {2: ConfigError, 3: BoundaryInvalid, 4: NonIntegerMultiplicity}


def run(config, mode=None, format=None, oracle=False):
    """Run a configuration (dict or JSON text); returns (exit_code, output, error_text)."""
    text = config if isinstance(config, str) else json.dumps(config)
    return _run(text, mode or "", format or "", oracle)


def compute(config, mode=None, oracle=False):
    """Run a configuration and return the parsed JSON artifact; raises on failure."""
    rc, out, err = run(config, mode=mode, format="json", oracle=oracle)
    if rc != 0:
        raise _ERRORS.get(rc, RuntimeError)(err.strip())
    return json.loads(out)
