"""
tests/hecke_ring/test_scripts.py

Test cases for the derivation script language, the replay engine, the
built-in level scripts and the generated families
"""

import pytest

from converse.congruence_subgroup import shipped_generators
from converse.exact_linalg import (
    OrderKind,
    canonicalize,
    classify_order,
    eval_matrix_expr,
    fricke,
    in_gamma0,
)
from converse.exceptions import (
    CertificateMismatch,
    InconsistentLevel,
    InvalidLevelShape,
    NoSolution,
    ScriptParseError,
    UnsatisfiableConstraint,
    UnsupportedExponent,
    UnsupportedLevel,
)
from converse.hecke_ring import (
    SUPPORTED_LEVELS,
    R_sum,
    RingElem,
    flatten,
    load_script,
    parse_script,
    run_script,
    verify_cusps,
    verify_level,
)
from converse.hecke_ring.engine import cusp_radii, replay
from converse.hecke_ring.generators import (
    corollary2_element,
    corollary2_residues,
    corollary3_data,
    cusp_remark_identity,
    gen_corollary2_script,
    gen_theorem2_script,
    gen_theorem3_script,
)
from converse.hecke_ring.relations import EVEN_WEIGHT, HOLOMORPHIC_NONCONSTANT

LEVEL_5 = """\
# Gamma0(5) from the T_2 eigen-relation
session N=5
hyp P
hyp H
hyp T 2

step conj as hT2h T2 by H
step combine as D2 target= [2,0;-5,1] - [1,1;0,2] cert= hT2h - T2
step rmul as Mm2 D2 by [2,-1;0,1]
step word as W = H P^-1 H
step word as M2 = W Mm2 P

assert gen P
assert gen W
assert gen M2
"""


def test_parse_level_5():
    """Header, hypotheses, steps and assertions are read in order"""
    script = parse_script(LEVEL_5, "five")
    assert script.level == 5
    assert script.name == "five"
    assert [h.default_id() for h in script.hypotheses] == ["P", "H", "T2"]
    assert [step.kind for step in script.steps] == ["conj", "combine", "rmul", "word", "word"]
    assert [a.text for a in script.assertions] == ["P", "W", "M2"]
    assert script.assertions[2].matrix == canonicalize(2, 1, 5, 3)
    assert script.steps[1].line == 8


def test_run_level_5():
    """The hand-written derivation proves every generator"""
    report = run_script(parse_script(LEVEL_5))
    assert report.ok
    assert report.verified() == ["P", "W", "M2"]
    assert report.assumptions == [EVEN_WEIGHT]
    assert all(residual == "0" for residual in report.residuals)
    assert report.step_count == 5


def test_flatten_level_5():
    """M2 = 1 expands down to hypotheses"""
    store, _ = replay(parse_script(LEVEL_5))
    assert store.proves_trivial(canonicalize(2, 1, 5, 3)) == "M2"
    report = flatten(store, "M2")
    assert report.ok
    assert {leaf.relation for leaf in report.leaves} <= {"P", "H", "T2"}


def test_load_script(tmp_path):
    """Scripts are named after their file"""
    path = tmp_path / "five.ccv"
    path.write_text(LEVEL_5)
    assert load_script(path).name == "five"


def test_unverified_assertion():
    """An assertion without a matching relation is reported, not raised"""
    report = run_script(parse_script("session N=5\nhyp P\nassert gen P\nassert gen W\n"))
    assert not report.ok
    assert report.verified() == ["P"]
    assert report.assertions[0].relation == "P"
    assert report.assertions[1].relation is None
    assert report.assertions[1].line == 4


def test_failed_step_is_located():
    """A bad certificate names its step and line"""
    text = "session N=5\nhyp P\nhyp H\nstep combine as X target= [2,0;0,1] cert= P\n"
    with pytest.raises(CertificateMismatch) as exc_info:
        run_script(parse_script(text))
    assert exc_info.value.context["step"] == 1
    assert exc_info.value.context["line"] == 4


@pytest.mark.parametrize(
    "text, line",
    [
        ("hyp P\n", 1),
        ("# nothing\n", 1),
        ("session N=0\n", 1),
        ("session N=5\nsession N=5\n", 2),
        ("session N=5\nhyp P\nstep frobnicate x\n", 3),
        ("session N=5\nhyp Q\n", 2),
        ("session N=5\nhyp U2 maybe\n", 2),
        ("session N=5\n\nassert gen W M2 )\n", 3),
        ("session N=5\nstep combine as X target= 1\n", 2),
        ("session N=5\nlemma 3\n", 2),
    ],
)
def test_parse_errors(text, line):
    """Malformed scripts report the offending line"""
    with pytest.raises(ScriptParseError) as exc_info:
        parse_script(text)
    assert exc_info.value.context["line"] == line


def test_theorem2_macro_in_script():
    """step theorem2 expands into checked sub-steps"""
    text = "session N=5\nhyp P\nhyp H\nhyp T 2\nstep theorem2 n=2\n"
    script = parse_script(text)
    store, steps = replay(script)
    assert "thm2_2" in store
    assert len(steps) > 1


def test_theorem2_relation():
    """H_N R_2 H_{4N} = R_2 at level 5"""
    script = gen_theorem2_script(2, 5)
    store, _ = replay(script)
    r = R_sum(2)
    h = RingElem.from_matrix(fricke(5))
    h_far = RingElem.from_matrix(fricke(20))
    assert store.get(script.result).element == h * r * h_far - r
    assert flatten(store, script.result).ok


def test_theorem2_arguments():
    """n >= 2, coprime to N, exponents within the configured bound"""
    with pytest.raises(UnsatisfiableConstraint):
        gen_theorem2_script(1, 5)
    with pytest.raises(InconsistentLevel):
        gen_theorem2_script(10, 5)
    with pytest.raises(UnsupportedExponent):
        gen_theorem2_script(16, 5, max_exponent=3)


def test_residue_data():
    """Reduced residues and their Gamma0(N) matrices"""
    assert corollary2_residues(3, 14) == [(-1, -1, 5), (1, 1, 5)]
    with pytest.raises(NoSolution):
        corollary2_residues(7, 14)
    with pytest.raises(NoSolution):
        corollary2_residues(1, 14)


def test_elliptic_data_at_level_11():
    """M_3 = [3,1;11,4] and the elliptic element of infinite order"""
    n, gamma, gamma_neg, eps = corollary3_data(3, 11)
    assert n == 4
    assert gamma == eval_matrix_expr("M(3)", 11)
    assert in_gamma0(gamma_neg, 11)
    assert classify_order(eps).kind == OrderKind.ELLIPTIC_INFINITE
    with pytest.raises(NoSolution):
        corollary3_data(5, 11)
    with pytest.raises(NoSolution):
        corollary3_data(2, 11)


@pytest.mark.slow
@pytest.mark.parametrize("N", SUPPORTED_LEVELS)
def test_builtin_levels(N):
    """Every built-in script proves the shipped generator list"""
    report = verify_level(N)
    assert report.ok
    assert report.verified() == shipped_generators(N)
    assert EVEN_WEIGHT in report.assumptions


@pytest.mark.slow
@pytest.mark.parametrize("N", [11, 14, 15, 23])
def test_elliptic_rule_assumption(N):
    """Levels that use the elliptic rule record the extra assumption"""
    assert HOLOMORPHIC_NONCONSTANT in verify_level(N).assumptions


def test_unsupported_level():
    """No built-in script for level 13"""
    with pytest.raises(UnsupportedLevel):
        verify_level(13)


def test_cusp_radii():
    """Exact divisors r of N"""
    assert cusp_radii(11) == [1, 11]
    assert cusp_radii(12) == [1, 3, 4, 12]
    assert cusp_radii(14) == [1, 2, 7, 14]


@pytest.mark.parametrize("N", [4, 5, 8, 11, 12, 14])
def test_cusp_relations(N):
    """The cusp relation replays at every radius"""
    reports = verify_cusps(N)
    assert len(reports) == len(cusp_radii(N))
    for r, report in zip(cusp_radii(N), reports):
        assert report.ok
        assert report.result == f"cusp_{r}"


def test_cusp_sum_with_two_squared_dividing_level():
    """At N = 8 every divisor term of the sum goes through U_2 = 0"""
    script = gen_theorem3_script(8, 1)
    summed = script.steps[0]
    assert summed.id == "_cusp_1_sum"
    used = [rel for rel, _ in summed.terms]
    assert used.count("U2") == 2
    assert used[-1] == "P"
    assert not any(rel.startswith("U") and rel != "U2" for rel in used)
    assert any(h.kind == "U" and h.prime == 2 and h.mode == "zero" for h in script.hypotheses)

    report = run_script(script)
    assert report.ok
    assert set(report.residuals) == {"0"}


def test_cusp_relation_at_infinity():
    """At r = N the relation is H P H = [1,0;-N,1]"""
    script = gen_theorem3_script(11, 11)
    store, _ = replay(script)
    one = RingElem.from_scalar(1)
    assert store.get("cusp_11").element == RingElem.from_matrix(canonicalize(1, 0, -11, 1)) - one


def test_cusp_level_shape():
    """Squares of odd primes and 2^5 are out of range"""
    with pytest.raises(InvalidLevelShape):
        verify_cusps(9)


@pytest.mark.slow
@pytest.mark.parametrize(
    "n, N", [(2, 5), (2, 7), (3, 11), (4, 15), (5, 14), (6, 17), (6, 23), (8, 15)]
)
def test_theorem2_instances(n, N):
    """H_N R_n H_{n^2 N} = R_n replays with zero residual"""
    report = run_script(gen_theorem2_script(n, N))
    assert report.ok
    assert set(report.residuals) == {"0"}


@pytest.mark.slow
@pytest.mark.parametrize("m, N", [(3, 11), (4, 11), (5, 14), (8, 15), (3, 23)])
def test_residue_sum_instances(m, N):
    """sum_b (1 - gamma_b) beta(b/m) = 0 replays with zero residual"""
    script = gen_corollary2_script(m, N)
    store, _ = replay(script)
    assert store.get(script.result).element == corollary2_element(m, N)


@pytest.mark.parametrize("M", [2, 3, 4, 5])
def test_cusp_remark_identity(M):
    """H_{M^2} [1,0;M,1] and [1,0;-M,1] beta(1/M) are the same class"""
    lhs, rhs = cusp_remark_identity(M)
    assert lhs == rhs
    assert len(lhs) == 1
