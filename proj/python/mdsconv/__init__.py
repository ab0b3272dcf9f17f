"""Unit-memory MDS convolutional codes: construction and verification."""

import json as _json

from ._core import (  # noqa: F401
    Field,
    MdsconvError,
    admissible_parameters,
    block_min_distance,
    singleton_and_indices,
)
from . import _core


def construct(family, q, n=0, k=0, delta=0, tau=0):
    """Bundle dictionary for one construction."""
    return _json.loads(_core.construct_json(family, q, n, k, delta, tau))


def classify(bundle, jmax=4, budget=10_000_000):
    """Classification report for a bundle dictionary (or any document with q/field and parity)."""
    return _json.loads(_core.classify_json(_json.dumps(bundle), jmax, budget))


def example(example_id):
    """Regenerate and check one worked F_8 example."""
    return _json.loads(_core.example_json(example_id))
