"""
tests/hecke_ring/test_ring.py

Test cases for group-ring elements, the Hecke operators, the relation
store and the individual proof steps
"""

from fractions import Fraction

import pytest

from converse.exact_linalg import (
    IDENTITY,
    P,
    canonicalize,
    eval_matrix_expr,
    fricke,
    lower_translation,
    m_two,
    translation,
)
from converse.exceptions import (
    CertificateMismatch,
    DuplicateRelationId,
    InconsistentLevel,
    MemberNotInGamma0,
    NotPrime,
    SideConditionFailed,
    UnknownRelationId,
)
from converse.hecke_ring import (
    AUTO,
    CombineStep,
    ConjStep,
    ExactStep,
    Hypothesis,
    LmulStep,
    RingElem,
    RmulStep,
    WeilStep,
    WordStep,
    apply_step,
    atkin_U,
    flatten,
    hecke_T,
    hecke_T_power,
    new_session,
    p_multiplier,
    p_reduce,
    R_sum,
)
from converse.hecke_ring.relations import EVEN_WEIGHT, HOLOMORPHIC_NONCONSTANT
from converse.symscalar import EPS, SymScalar
from tests.factories import Gamma0MatrixFactory

ONE = RingElem.from_matrix(IDENTITY)
ELLIPTIC = "[1,-2/3;11/2,-8/3]"


def elem(mat):
    return RingElem.from_matrix(mat)


def test_t2_squared():
    """T_2 T_2 = T_4 + 1 + P exactly in the group ring"""
    t2 = hecke_T(2)
    assert len(t2) == 3
    assert t2 * t2 == hecke_T_power(2, 2) + 1 + elem(P)


def test_operator_sizes():
    """Term counts of T_{p^l}, U_q and R_n"""
    assert len(hecke_T_power(2, 2)) == 7
    assert len(hecke_T_power(3, 2)) == 13
    assert len(atkin_U(3)) == 3
    assert len(R_sum(6)) == 2
    assert R_sum(1) == elem(P)
    assert hecke_T_power(5, 0) == ONE
    with pytest.raises(NotPrime):
        hecke_T(4)
    with pytest.raises(NotPrime):
        atkin_U(9)


def test_hecke_times_diagonal():
    """T_p [p,0;0,1] = R_p + [p^2,0;0,1] + 1"""
    for p in (2, 3, 5):
        lhs = hecke_T(p) * elem(canonicalize(p, 0, 0, 1))
        assert lhs == R_sum(p) + elem(canonicalize(p * p, 0, 0, 1)) + 1


def test_matrix_identities():
    """Fricke identities used by the level scripts"""
    beta = elem(translation(Fraction(1, 3)))
    lhs = beta * elem(fricke(99))
    rhs = elem(fricke(11)) * elem(canonicalize(3, -1, -11, 4)) * beta
    assert lhs == rhs
    for N in (6, 10, 14):
        assert fricke(2 * N) == fricke(N) * canonicalize(2, 0, 0, 1)


def test_scalars_act_trivially():
    """[2,0;0,2] is the identity class"""
    assert elem(canonicalize(2, 0, 0, 2)) == ONE
    assert elem(fricke(11)) * elem(fricke(11)) == ONE


def test_unit_forms():
    """a*g + b*1 reads as g = -b/a"""
    form = (elem(fricke(11)) - RingElem.from_scalar(EPS)).unit_form()
    assert form == (fricke(11), 1, EPS)
    g, a, sigma = (ONE - elem(P)).unit_form()
    assert (g, a, sigma) == (P, -1, 1)
    assert (elem(P) + elem(fricke(11))).unit_form() is None
    alpha = SymScalar.symbol("alpha_2")
    assert (elem(P) * alpha - 1).unit_form() is None


def test_p_reduce_and_multiplier():
    """Left translates collapse; the multiplier rebuilds the element"""
    x = elem(translation(3)) - ONE
    assert p_reduce(x).is_zero()
    u = p_multiplier(x)
    assert (ONE - elem(P)) * u == x
    assert p_multiplier(elem(P)) is None

    for gamma in Gamma0MatrixFactory.build_batch(5):
        y = elem(P) ** 2 * elem(gamma) - elem(gamma)
        u = p_multiplier(y)
        assert u is not None
        assert (ONE - elem(P)) * u == y


def test_negative_powers():
    """Only monomials invert"""
    m = elem(m_two(11))
    assert m * m ** -1 == ONE
    with pytest.raises(ValueError):
        (m + ONE) ** -1


def test_large_powers():
    """Powers in the thousands stay exact and match repeated products"""
    assert elem(P) ** 1000000 == elem(translation(1000000))
    assert elem(P) ** -4096 == elem(translation(-4096))
    assert elem(fricke(11)) ** 1000001 == elem(fricke(11))
    x = ONE + elem(P)
    assert x ** 3 == ONE + elem(P) * 3 + elem(P ** 2) * 3 + elem(P ** 3)
    y = elem(m_two(11)) - elem(P) * EPS
    product = ONE
    for k in range(6):
        assert y ** k == product
        product = product * y


def test_store_bookkeeping(store_11):
    """Ids are unique and lookups of unknown ids fail"""
    assert len(store_11) == 2
    assert store_11.assumptions == [EVEN_WEIGHT]
    assert store_11.get("P").element == ONE - elem(P)
    with pytest.raises(UnknownRelationId):
        store_11.get("W")
    with pytest.raises(DuplicateRelationId):
        store_11.add_hypothesis(Hypothesis("P"))
    assert store_11.fresh_id() == "s3"


def test_hypothesis_ids():
    """Default relation ids per hypothesis kind"""
    assert Hypothesis("T", prime=2).default_id() == "T2"
    assert Hypothesis("T", prime=3, exponent=2).default_id() == "T3_2"
    assert Hypothesis("U", prime=2, mode="zero").default_id() == "U2"
    assert Hypothesis("P", id="trans").default_id() == "trans"


@pytest.mark.parametrize(
    "N, hypothesis, error",
    [
        (11, Hypothesis("T", prime=4), NotPrime),
        (11, Hypothesis("T", prime=11), InconsistentLevel),
        (11, Hypothesis("U", prime=2, mode="zero"), InconsistentLevel),
        (12, Hypothesis("U", prime=2, mode="id"), InconsistentLevel),
        (11, Hypothesis("G", matrix=fricke(11)), MemberNotInGamma0),
    ],
)
def test_hypotheses_checked_against_level(N, hypothesis, error):
    """Eigen and Atkin-Lehner hypotheses must fit the level"""
    with pytest.raises(error):
        new_session(N, [hypothesis])


def test_atkin_hypotheses():
    """U_3 = [3,0;0,1] at 3 || 12 and U_2 = 0 at 4 | 12"""
    store = new_session(
        12,
        [Hypothesis("U", prime=3, mode="id"), Hypothesis("U", prime=2, mode="zero")],
    )
    assert store.get("U2").element == atkin_U(2)
    assert len(store.get("U3").element) == 4


def test_proves_trivial(store_11):
    """Relations g = 1 are found for g and g^-1"""
    assert store_11.proves_trivial(P) == "P"
    assert store_11.proves_trivial(P.inverse()) == "P"
    assert store_11.proves_trivial(IDENTITY) == "identity"
    assert store_11.proves_trivial(fricke(11)) is None
    assert store_11.proves_trivial(lower_translation(11)) is None


def test_exact_step(store_11):
    """Exact identities store a zero relation; false ones are refused"""
    t2 = hecke_T(2)
    apply_step(store_11, ExactStep(lhs=t2 * t2, rhs=hecke_T_power(2, 2) + 1 + elem(P), id="sq"))
    assert store_11.get("sq").element.is_zero()
    with pytest.raises(CertificateMismatch) as exc_info:
        apply_step(store_11, ExactStep(lhs=t2 * t2, rhs=hecke_T_power(2, 2)))
    assert "residual" in exc_info.value.context


def test_combine_step(store_11):
    """Certificates must reproduce the target"""
    target = elem(translation(3)) - ONE
    apply_step(store_11, CombineStep(terms=[("P", AUTO)], target=target, id="P3"))
    relation = store_11.get("P3")
    assert relation.element == target
    assert len(relation.certificate) == 1

    with pytest.raises(CertificateMismatch):
        apply_step(
            store_11,
            CombineStep(terms=[("P", RingElem.from_scalar(1))], target=elem(P)),
        )
    with pytest.raises(CertificateMismatch):
        apply_step(store_11, CombineStep(terms=[("P", AUTO)], target=elem(P)))
    with pytest.raises(SideConditionFailed):
        apply_step(store_11, CombineStep(terms=[("H", AUTO)], target=ONE))
    with pytest.raises(UnknownRelationId):
        apply_step(store_11, CombineStep(terms=[("T2", ONE)]))


def test_multiplication_steps(store_11):
    """rmul, lmul and conj by the Fricke relation"""
    apply_step(store_11, RmulStep(source="P", by=elem(m_two(11)), id="r"))
    assert store_11.get("r").element == elem(m_two(11)) - elem(P) * elem(m_two(11))

    apply_step(store_11, LmulStep(source="P", by="H", id="l"))
    assert store_11.get("l").element == elem(fricke(11)) * (ONE - elem(P))

    apply_step(store_11, ConjStep(source="P", by="H", id="c"))
    assert store_11.get("c").element == ONE - elem(canonicalize(1, 0, -11, 1))
    assert store_11.proves_trivial(lower_translation(11)) == "c"

    with pytest.raises(SideConditionFailed):
        apply_step(store_11, ConjStep(source="P", by="r"))


def test_word_step():
    """W = H P^-1 H from f|H = eps f and f|P = f"""
    store = new_session(5, [Hypothesis("P"), Hypothesis("H")])
    apply_step(store, WordStep(letters=[("H", False), ("P", True), ("H", False)], id="W"))
    assert store.get("W").element == elem(lower_translation(5)) - ONE
    assert store.proves_trivial(lower_translation(5)) == "W"
    with pytest.raises(SideConditionFailed):
        apply_step(store, WordStep(letters=[]))


def test_weil_step(store_11):
    """(1 - gamma)(1 - eps) gives 1 - gamma for elliptic eps of infinite order"""
    eps = eval_matrix_expr(ELLIPTIC)
    apply_step(store_11, RmulStep(source="P", by=ONE - elem(eps), id="prod"))
    apply_step(store_11, WeilStep(gamma=P, eps=eps, source="prod", id="again"))
    assert store_11.get("again").element == ONE - elem(P)
    assert HOLOMORPHIC_NONCONSTANT in store_11.assumptions


def test_weil_step_side_conditions(store_11):
    """Finite-order eps, det(gamma) != 1 and a mismatched source"""
    eps = eval_matrix_expr(ELLIPTIC)
    with pytest.raises(SideConditionFailed):
        apply_step(store_11, WeilStep(gamma=P, eps=P, source="P"))
    with pytest.raises(SideConditionFailed):
        apply_step(store_11, WeilStep(gamma=fricke(11), eps=eps, source="P"))
    with pytest.raises(CertificateMismatch):
        apply_step(store_11, WeilStep(gamma=P, eps=eps, source="P"))
    assert store_11.assumptions == [EVEN_WEIGHT]


def test_flatten(store_11):
    """Nested certificates expand down to the hypotheses"""
    apply_step(store_11, ConjStep(source="P", by="H", id="c"))
    apply_step(store_11, RmulStep(source="c", by=elem(m_two(11)), id="cm"))
    report = flatten(store_11, "cm")
    assert report.ok
    assert report.residual == "0"
    assert {leaf.relation for leaf in report.leaves} <= {"P", "H"}
