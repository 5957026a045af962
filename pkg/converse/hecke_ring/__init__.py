from converse.hecke_ring.element import RingElem, p_multiplier, p_reduce
from converse.hecke_ring.operators import R_sum, atkin_U, hecke_T, hecke_T_power, translation_sum
from converse.hecke_ring.relations import Hypothesis, Provenance, Relation, RelationStore, new_session
from converse.hecke_ring.steps import (
    AUTO,
    CombineStep,
    ConjStep,
    ExactStep,
    HypothesisStep,
    LmulStep,
    MacroStep,
    RmulStep,
    Step,
    WeilStep,
    WordStep,
    apply_step,
    verify_certificate,
)
from converse.hecke_ring.script import AssertGen, DerivationScript
from converse.hecke_ring.dsl import load_script, parse_script
from converse.hecke_ring.engine import SUPPORTED_LEVELS, run_script, verify_cusps, verify_level
from converse.hecke_ring.audit import flatten

__all__ = [
    "AUTO",
    "AssertGen",
    "CombineStep",
    "ConjStep",
    "DerivationScript",
    "ExactStep",
    "Hypothesis",
    "HypothesisStep",
    "LmulStep",
    "MacroStep",
    "Provenance",
    "R_sum",
    "Relation",
    "RelationStore",
    "RingElem",
    "RmulStep",
    "SUPPORTED_LEVELS",
    "Step",
    "WeilStep",
    "WordStep",
    "apply_step",
    "atkin_U",
    "flatten",
    "hecke_T",
    "hecke_T_power",
    "load_script",
    "new_session",
    "p_multiplier",
    "p_reduce",
    "parse_script",
    "run_script",
    "translation_sum",
    "verify_certificate",
    "verify_cusps",
    "verify_level",
]
