"""
tests/congruence_subgroup/test_certify.py

Test cases for the index formula, S/T word decomposition and the
generation certificates
"""

import pytest

from converse.congruence_subgroup import (
    ModularWord,
    Verdict,
    certify_generators,
    certify_level,
    drop_generator,
    free_reduce,
    load_generator_table,
    psi_formula,
    psi_index,
    shipped_generators,
    short_name,
    todd_coxeter,
    word_decompose,
)
from converse.exact_linalg import IDENTITY, P, canonicalize, m_two
from converse.exceptions import (
    CosetLimitExceeded,
    InvalidConfig,
    MemberNotInGamma0,
    NotUnimodular,
    UnsupportedLevel,
)
from tests.factories import ENTRY_BOUND, Gamma0MatrixFactory, SL2WordMatrixFactory


@pytest.mark.parametrize(
    "N, expected",
    [(1, 1), (2, 3), (5, 6), (9, 12), (11, 12), (14, 24), (16, 24), (23, 24)],
)
def test_psi_index(N, expected):
    """Known values of the index"""
    assert psi_index(N) == expected
    assert psi_formula(N) == expected


def test_psi_index_matches_formula():
    """Counting P^1(Z/N) agrees with the product formula up to 200"""
    for N in range(1, 201):
        assert psi_index(N) == psi_formula(N)


def test_free_reduce():
    """T t, t T and S S cancel"""
    assert free_reduce(["T", "t", "S", "S"]) == ()
    assert free_reduce(["S", "T", "t", "S", "T"]) == ("T",)
    with pytest.raises(ValueError):
        free_reduce(["X"])


def test_word_decomposition_round_trip():
    """Evaluating the decomposed word gives back the matrix"""
    for m in Gamma0MatrixFactory.build_batch(15):
        assert word_decompose(m).evaluate() == m
    assert word_decompose(m_two(23)).evaluate() == m_two(23)
    assert str(word_decompose(IDENTITY)) == "1"
    assert str(word_decompose(P)) == "T"


def test_word_round_trip_on_random_products():
    """500 random products of T powers and S with entries up to 10^6"""
    matrices = SL2WordMatrixFactory.build_batch(500)
    assert max(max(abs(v) for v in m.entries) for m in matrices) > 1000
    for m in matrices:
        assert max(abs(v) for v in m.entries) <= ENTRY_BOUND
        assert word_decompose(m).evaluate() == m


def test_word_inverse():
    """w w^-1 reduces to the empty word"""
    w = word_decompose(m_two(11))
    assert len(w * w.inverse()) == 0
    assert (w * w.inverse()).evaluate() == IDENTITY
    assert w.inverse().evaluate() == m_two(11).inverse()


def test_word_decompose_requires_unimodular():
    """Determinant other than 1 is rejected"""
    with pytest.raises(NotUnimodular):
        word_decompose(canonicalize(2, 0, 0, 1))


def test_modular_group_has_index_one():
    """S and T generate everything"""
    table = todd_coxeter([ModularWord(("S",)), ModularWord(("T",))], 50)
    assert table.index == 1


def test_enumeration_cap():
    """The trivial subgroup never closes"""
    with pytest.raises(CosetLimitExceeded):
        todd_coxeter([], 40)


@pytest.mark.parametrize(
    "N, psi",
    [
        (1, 1),
        (5, 6),
        (6, 12),
        (7, 8),
        (8, 12),
        (9, 12),
        (10, 18),
        (11, 12),
        (12, 24),
        (14, 24),
        (15, 24),
        (16, 24),
        (17, 18),
        (23, 24),
    ],
)
def test_shipped_lists_generate(N, psi):
    """The shipped generator lists have index psi(N)"""
    cert = certify_level(N)
    assert cert.verdict == Verdict.GENERATES
    assert cert.index == psi
    assert cert.psi == psi
    assert all(member.in_gamma0 for member in cert.members)
    assert cert.generates()


def test_dropping_a_generator_at_level_11():
    """Without M3 the subgroup is proper"""
    cert = certify_level(11, drop="M3")
    assert cert.verdict == Verdict.NOT_GENERATING
    assert cert.expressions == ["P", "M2"]
    assert cert.index is None or cert.index != 12


@pytest.mark.parametrize("N", [11, 17])
def test_every_generator_is_needed(N):
    """Dropping any one shipped generator leaves a proper subgroup"""
    for expr in shipped_generators(N):
        cert = certify_level(N, drop=short_name(expr))
        assert cert.verdict == Verdict.NOT_GENERATING, expr
        assert not cert.generates()


def test_translation_alone_at_level_1():
    """P by itself has infinite index, so level 1 needs W as well"""
    cert = certify_generators(1, ["P"])
    assert cert.verdict == Verdict.NOT_GENERATING
    assert cert.index is None
    assert certify_generators(1, ["P", "W"]).generates()


def test_certify_explicit_expressions():
    """Members are reported with their S/T words"""
    cert = certify_generators(5, ["P", "W", "M2"])
    assert cert.generates()
    assert [m.expression for m in cert.members] == ["P", "W", "M2"]
    assert cert.members[0].word == "T"
    assert cert.members[0].word_length == 1


def test_member_outside_gamma0():
    """H_N has determinant N; W_5 is not in Gamma0(11)"""
    with pytest.raises(MemberNotInGamma0):
        certify_generators(11, ["P", "H"])
    with pytest.raises(MemberNotInGamma0):
        certify_generators(11, ["P", "W(5)"])


def test_generator_table(tmp_path):
    """Comments, version line and the | separator"""
    table = load_generator_table()
    assert table[11] == ["P", "M2", "M(3)"]
    assert table[6] == ["P", "W", "A^-1 W A"]

    path = tmp_path / "gens.txt"
    path.write_text("# demo\nversion=1\n5: P | W | M2  # odd level\n")
    assert load_generator_table(path) == {5: ["P", "W", "M2"]}

    path.write_text("five: P | W\n")
    with pytest.raises(InvalidConfig):
        load_generator_table(path)


def test_short_names_and_drop():
    """M(3) and M3 name the same generator"""
    assert short_name("M(3)") == "M3"
    assert short_name("M(13, 6)") == "M13_6"
    assert drop_generator(["P", "W", "M(13,6)"], "M13_6", 14) == ["P", "W"]
    with pytest.raises(InvalidConfig):
        drop_generator(["P", "W"], "M5", 14)


def test_unsupported_level():
    """No list for level 13"""
    with pytest.raises(UnsupportedLevel):
        shipped_generators(13)
