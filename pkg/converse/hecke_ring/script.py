"""
converse/hecke_ring/script.py

Derivation scripts: a session header, ordered steps and the generator
assertions checked once every step has been replayed.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from converse.exact_linalg import ProjMat
from converse.hecke_ring.relations import Hypothesis
from converse.hecke_ring.steps import Step


@dataclass(frozen=True)
class AssertGen:
    matrix: ProjMat
    text: str = ""
    line: Optional[int] = None


@dataclass
class DerivationScript:
    level: int
    hypotheses: List[Hypothesis] = field(default_factory=list)
    steps: List[Step] = field(default_factory=list)
    assertions: List[AssertGen] = field(default_factory=list)
    name: str = ""
    # id of the relation the script exists to establish, if any
    result: Optional[str] = None

    def step_count(self) -> int:
        return len(self.steps)
