"""Certified checks for the Holder-1/2 bound of f(x) = x sin(1/x)."""

import json

from ._core import (
    MAX_INDEX,
    ArgumentTooLarge,
    CertificationFailure,
    ConfigError,
    DomainError,
    RemapFailure,
    __version__,
    brute_grid_oracle,
    check_prop_inequalities,
    constants,
    critical_pair,
    ddf,
    df,
    evaluate_term,
    f,
    f_enclosure,
    interval_sup,
    piece_index,
    quotient,
    remap,
    root,
)
from ._core import global_sup_json as _global_sup_json
from ._core import verify_json as _verify_json


def global_sup(n_max=200, x_cap=8.0, resolution=512, alpha_exp=0.5):
    """Supremum search report as a dict."""
    return json.loads(_global_sup_json(n_max, x_cap, resolution, alpha_exp))


def verify(n_max=200, resolution=512, checklist="", supremum=True):
    """Full verification report as a dict (same schema as `holder-cert verify`)."""
    return json.loads(_verify_json(n_max, resolution, checklist, supremum))


__all__ = [
    "MAX_INDEX",
    "ArgumentTooLarge",
    "CertificationFailure",
    "ConfigError",
    "DomainError",
    "RemapFailure",
    "__version__",
    "brute_grid_oracle",
    "check_prop_inequalities",
    "constants",
    "critical_pair",
    "ddf",
    "df",
    "evaluate_term",
    "f",
    "f_enclosure",
    "global_sup",
    "interval_sup",
    "piece_index",
    "quotient",
    "remap",
    "root",
    "verify",
]
