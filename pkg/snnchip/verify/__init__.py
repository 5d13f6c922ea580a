"""
Verification
============

Differential checking of the cycle-accurate model against the reference oracle.
"""

from .differential import (
    CheckConfig, CheckReport, Divergence, Episode,
    generate_episode, run_check, run_episode
)

__all__ = [
    "CheckConfig",
    "CheckReport",
    "Divergence",
    "Episode",
    "generate_episode",
    "run_check",
    "run_episode",
]
