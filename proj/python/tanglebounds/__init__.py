"""Diagrammatic link invariants, link families, and crosscap bounds."""

from ._core import (
    DEFAULT_CAP,
    canonical_pd,
    crosscap_torus,
    family_torus,
    family_whitehead,
    jones,
    jones_summary,
    suite_names,
    twist_number,
    verify_suite,
    writhe,
)

__all__ = [
    "DEFAULT_CAP",
    "canonical_pd",
    "crosscap_torus",
    "family_torus",
    "family_whitehead",
    "jones",
    "jones_summary",
    "suite_names",
    "twist_number",
    "verify_suite",
    "writhe",
]
