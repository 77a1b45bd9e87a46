"""Exhaustive verification of the chirally cosmetic surgery obstruction
on positive 2-bridge knots."""

from .conway import MemoStore, conway
from .enumeration import EnumerationPlan, census, enumerate_presentations
from .invariants import InvariantSet, invariants_for
from .obstruction import ObstructionRecord, Verdict, check
from .rational_cf import (
    CanonicalKnotKey,
    canonical_key,
    eval_cf,
    is_positive_knot_form,
    positive_cf_from_rational,
    to_even_cf,
)
from .sweep import SweepConfig, SweepReport, emit_plot_data, run_sweep

__all__ = [
    "CanonicalKnotKey",
    "EnumerationPlan",
    "InvariantSet",
    "MemoStore",
    "ObstructionRecord",
    "SweepConfig",
    "SweepReport",
    "Verdict",
    "canonical_key",
    "census",
    "check",
    "conway",
    "emit_plot_data",
    "enumerate_presentations",
    "eval_cf",
    "invariants_for",
    "is_positive_knot_form",
    "positive_cf_from_rational",
    "run_sweep",
    "to_even_cf",
]
