"""Tournament clique numbers, dichromatic numbers and the bounds recurrences."""

import json

from ._core import (
    BudgetExceeded,
    InvalidInput,
    SizeLimitExceeded,
    Tournament,
    build,
    canonical_code,
    chi,
    contains,
    f_main,
    isomorphic,
    omega,
    ramsey_upper,
    random_tournament,
    transitive,
)
from ._core import lemma_suite as _lemma_suite


def lemma_suite(seed=1, max_n=10, scale=1.0):
    """Runs the property audits and returns the report as a dict."""
    return json.loads(_lemma_suite(seed, max_n, scale))


__all__ = [
    "BudgetExceeded",
    "InvalidInput",
    "SizeLimitExceeded",
    "Tournament",
    "build",
    "canonical_code",
    "chi",
    "contains",
    "f_main",
    "isomorphic",
    "lemma_suite",
    "omega",
    "ramsey_upper",
    "random_tournament",
    "transitive",
]
