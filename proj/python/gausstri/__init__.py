"""Random Gaussian triangles: samplers, densities, moments and acuteness."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import DEFAULT_SEED, conjecture_json, verify_json


def verify(n=1_000_000, seed=DEFAULT_SEED, workers=0):
    """Run the verification suite and return the parsed report."""
    return _json.loads(verify_json(n, seed, workers))


def conjecture(lo=2, hi=8, n=1_000_000, seed=DEFAULT_SEED, workers=0):
    """Run the conjecture suite for dimensions lo..hi."""
    return _json.loads(conjecture_json(lo, hi, n, seed, workers))
