from converse.congruence_subgroup.word import ModularWord, free_reduce, word_decompose
from converse.congruence_subgroup.psi import psi_formula, psi_index
from converse.congruence_subgroup.todd_coxeter import CosetTable, todd_coxeter
from converse.congruence_subgroup.schemas import GenerationCertificate, MemberReport, Verdict
from converse.congruence_subgroup.certify import (
    certify_generators,
    certify_level,
    coset_cap,
    drop_generator,
    load_generator_table,
    shipped_generators,
    short_name,
)

__all__ = [
    "CosetTable",
    "GenerationCertificate",
    "MemberReport",
    "ModularWord",
    "Verdict",
    "certify_generators",
    "certify_level",
    "coset_cap",
    "drop_generator",
    "free_reduce",
    "load_generator_table",
    "psi_formula",
    "psi_index",
    "shipped_generators",
    "short_name",
    "todd_coxeter",
    "word_decompose",
]
