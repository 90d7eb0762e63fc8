"""Thakur Gamma values over F_q[t].

Series evaluation of Gamma(a/f) and the Carlitz period, combinatorial
bracket-relation decisions, CM classification of soliton t-modules, and
numerical certification of Gamma/period ratios by rational recognition.
All functions mirror the `fqgamma` CLI subcommands and return plain dicts
shaped like the CLI's JSON output; `run` is the CLI itself.
"""

from ._core import (
    DomainError,
    GuardError,
    PrecisionError,
    __version__,
    bracket,
    certify,
    classify,
    equiv,
    gamma,
    isogeny,
    pi,
    run,
    verify,
)

__all__ = [
    "DomainError",
    "GuardError",
    "PrecisionError",
    "__version__",
    "bracket",
    "certify",
    "classify",
    "equiv",
    "gamma",
    "isogeny",
    "pi",
    "run",
    "verify",
]
