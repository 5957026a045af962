"""
converse/hecke_ring/generators.py

Instantiated derivations for the infinite families of congruences:

- H_N R_n H_{n^2 N} = R_n from the T_p eigen-relations (gen_theorem2_script)
- sum_b (1 - gamma_b) beta(b/m) = 0 over reduced b mod m (gen_corollary2_script)
- M_m = 1 and M_{-m} = 1 when m (N+1)/m = N+1 with phi = 2 on both factors
  (gen_corollary3_script)
- the cusp relation [1,0;-r,1] sum beta(b_a) = sum beta_q [1,0;0,q]
  used for vanishing at 1/r (gen_theorem3_script)

Every emitted step carries an explicit certificate; the engine checks it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import List, Optional, Sequence, Tuple

from sympy import divisors, factorint, mobius, mod_inverse, multiplicity, totient

from converse.analytic.cusps import check_level_shape, lemma6_gamma
from converse.config import settings
from converse.exact_linalg import (
    IDENTITY,
    ProjMat,
    canonicalize,
    diagonal,
    fricke,
    translation,
)
from converse.exceptions import (
    InconsistentLevel,
    InvalidCuspData,
    NoSolution,
    UnsatisfiableConstraint,
    UnsupportedExponent,
)
from converse.hecke_ring.element import RingElem
from converse.hecke_ring.operators import R_sum, hecke_T, hecke_T_power, translation_sum
from converse.hecke_ring.relations import Hypothesis
from converse.hecke_ring.script import DerivationScript
from converse.hecke_ring.steps import (
    AUTO,
    CombineStep,
    ConjStep,
    HypothesisStep,
    Step,
    WeilStep,
)
from converse.symscalar import EPS, ONE, SymScalar, eigenvalue_symbol

logger = logging.getLogger(__name__)

UNIT = RingElem.from_matrix(IDENTITY)


def _m(mat: ProjMat) -> RingElem:
    return RingElem.from_matrix(mat)


def _beta(x) -> RingElem:
    return _m(translation(Fraction(x)))


def _diag(x, y=1) -> RingElem:
    return _m(diagonal(x, y))


def _scalar(c) -> RingElem:
    return RingElem.from_scalar(c)


def _base_hypotheses(primes: Sequence[int]) -> List[Hypothesis]:
    return [Hypothesis("P"), Hypothesis("H")] + [
        Hypothesis("T", prime=p) for p in sorted(set(primes))
    ]


# -- H_N R_n H_{n^2 N} = R_n


def eigen_polynomials(p: int, top: int) -> List[SymScalar]:
    """c_0..c_top: the T_{p^l} eigenvalues as polynomials in alpha_p"""
    alpha = SymScalar.symbol(eigenvalue_symbol(p))
    c = [ONE, alpha]
    for l in range(1, top):
        c.append(alpha * c[l] - c[l - 1] * p)
    return c[: top + 1]


@dataclass
class Theorem2Chain:
    steps: List[Step]
    rho: str  # id of the relation R_n - Z
    z: RingElem  # diagonal combination Z with H_N Z H_{n^2 N} = Z
    n: int


def _prime_power_rho(
    p: int, lam: int, prefix: str, steps: List[Step]
) -> Tuple[str, RingElem]:
    c = eigen_polynomials(p, lam)

    # T_{p^(l+1)} - c_{l+1} from T_{p^l} T_p = T_{p^(l+1)} + p T_{p^(l-1)} up to P
    rel = {1: f"T{p}"}
    t_p = hecke_T(p)
    for l in range(1, lam):
        rid = f"{prefix}_T{p}_{l + 1}"
        terms = [(rel[l], t_p), (rel[1], _scalar(c[l]))]
        if l > 1:
            terms.append((rel[l - 1], _scalar(-p)))
        terms.append(("P", AUTO))
        steps.append(
            CombineStep(
                terms=terms,
                target=hecke_T_power(p, l + 1) - _scalar(c[l + 1]),
                id=rid,
            )
        )
        rel[l + 1] = rid

    def y(l: int) -> RingElem:
        if l == 0:
            return UNIT
        return _diag(p ** l) * c[l] - _diag(p ** (l + 1)) * c[l - 1]

    # sum_{b < p^l} beta(b/p^l) = (T_{p^l} - T_{p^(l-1)} D(p)) D(p^l), exactly
    vid = {}
    for l in range(1, lam + 1):
        vid[l] = f"{prefix}_V{p}_{l}"
        terms = [(rel[l], _diag(p ** l))]
        if l > 1:
            terms.append((rel[l - 1], -_diag(p ** (l + 1))))
        steps.append(
            CombineStep(
                terms=terms, target=translation_sum(p ** l) - y(l), id=vid[l]
            )
        )

    z = y(lam) - y(lam - 1)
    if lam == 1:
        return vid[1], z
    rid = f"{prefix}_rho{p ** lam}"
    steps.append(
        CombineStep(
            terms=[(vid[lam], UNIT), (vid[lam - 1], -UNIT)],
            target=R_sum(p ** lam) - z,
            id=rid,
        )
    )
    return rid, z


def theorem2_chain(
    n: int, N: int, prefix: str, max_exponent: Optional[int] = None
) -> Theorem2Chain:
    """Steps establishing R_n - Z for a diagonal Z fixed by the Fricke pair"""
    max_exponent = max_exponent or settings.THEOREM2_MAX_EXPONENT
    if n < 2:
        raise UnsatisfiableConstraint("n must be at least 2", n=n)
    if gcd(n, N) != 1:
        raise InconsistentLevel("n must be coprime to N", n=n, N=N)
    factors = sorted(factorint(n).items())
    for p, lam in factors:
        if lam > max_exponent:
            raise UnsupportedExponent(
                f"exponent {lam} of {p} exceeds {max_exponent}",
                p=p,
                exponent=lam,
            )

    steps: List[Step] = []
    rho, z, m = None, UNIT, 1
    for p, lam in factors:
        rid, zp = _prime_power_rho(p, lam, prefix, steps)
        q = p ** lam
        if rho is None:
            rho, z, m = rid, zp, q
            continue
        # R_{m q} = R_m R_q and Z R_q = R_q Z, both up to left translations
        combined = f"{prefix}_rho{m * q}"
        steps.append(
            CombineStep(
                terms=[(rho, R_sum(q)), (rid, z), ("P", AUTO)],
                target=R_sum(m * q) - z * zp,
                id=combined,
            )
        )
        rho, z, m = combined, z * zp, m * q
    return Theorem2Chain(steps, rho, z, n)


def _fricke_step(
    rho_id: str, r_elem: RingElem, z: RingElem, n: int, N: int, rid: str
) -> CombineStep:
    """H_N R H_{n^2 N} - R from R - Z, using H_N Z H_{n^2 N} = Z"""
    h = _m(fricke(N))
    h_far = _m(fricke(n * n * N))
    rho = r_elem - z
    return CombineStep(
        terms=[
            ("H", rho * h_far),
            (rho_id, _scalar(EPS) * h_far),
            (rho_id, -UNIT),
        ],
        target=h * r_elem * h_far - r_elem,
        id=rid,
    )


def theorem2_steps(
    n: int, N: int, rid: str, max_exponent: Optional[int] = None
) -> List[Step]:
    chain = theorem2_chain(n, N, f"_{rid}", max_exponent)
    return chain.steps + [_fricke_step(chain.rho, R_sum(n), chain.z, n, N, rid)]


def gen_theorem2_script(
    n: int, N: int, max_exponent: Optional[int] = None, rid: Optional[str] = None
) -> DerivationScript:
    rid = rid or f"thm2_{n}"
    steps = theorem2_steps(n, N, rid, max_exponent)
    return DerivationScript(
        level=N,
        hypotheses=_base_hypotheses(factorint(n)),
        steps=steps,
        name=f"theorem2 n={n} N={N}",
        result=rid,
    )


# -- sum over reduced residues mod m


def corollary2_residues(m: int, N: int) -> List[Tuple[int, int, int]]:
    """(b, c, n) per reduced b in (-m/2, m/2] with m n - b c N = 1.

    c = -(bN)^-1 mod m with the least |c|, positive on a tie.
    """
    if m < 2 or gcd(m, N) != 1:
        raise NoSolution("needs m >= 2 and gcd(m, N) = 1", m=m, N=N)
    out = []
    for b in range(-((m - 1) // 2), m // 2 + 1):
        if gcd(b, m) != 1:
            continue
        c0 = (-int(mod_inverse((b * N) % m, m))) % m
        c = min((c0, c0 - m), key=lambda v: (abs(v), v < 0))
        num = 1 + b * c * N
        if num % m:
            raise NoSolution("m n - b c N = 1 has no integral n", m=m, b=b, c=c)
        out.append((b, c, num // m))
    return out


def corollary2_gamma(m: int, N: int, b: int, c: int, n: int) -> ProjMat:
    return canonicalize(m, -b, -N * c, n)


def corollary2_element(m: int, N: int) -> RingElem:
    """sum_b (1 - gamma_b) beta(b/m)"""
    return sum(
        (
            (UNIT - _m(corollary2_gamma(m, N, b, c, n))) * _beta(Fraction(b, m))
            for b, c, n in corollary2_residues(m, N)
        ),
        RingElem(),
    )


def corollary2_steps(
    m: int, N: int, rid: str, max_exponent: Optional[int] = None
) -> List[Step]:
    residues = corollary2_residues(m, N)
    prefix = f"_{rid}"
    chain = theorem2_chain(m, N, prefix, max_exponent)
    steps = list(chain.steps)

    # switch to the representatives beta(c_b/m): beta(c/m) H_{N m^2} = H_N gamma_b beta(b/m)
    r_alt = sum((_beta(Fraction(c, m)) for _, c, _ in residues), RingElem())
    rho_alt = f"{prefix}_rho_alt"
    steps.append(
        CombineStep(
            terms=[(chain.rho, UNIT), ("P", AUTO)],
            target=r_alt - chain.z,
            id=rho_alt,
        )
    )
    theta = f"{prefix}_fricke"
    steps.append(_fricke_step(rho_alt, r_alt, chain.z, m, N, theta))
    steps.append(
        CombineStep(
            terms=[(theta, -UNIT), ("P", AUTO)],
            target=corollary2_element(m, N),
            id=rid,
        )
    )
    return steps


def gen_corollary2_script(
    m: int, N: int, max_exponent: Optional[int] = None, rid: Optional[str] = None
) -> DerivationScript:
    rid = rid or f"C{m}"
    steps = corollary2_steps(m, N, rid, max_exponent)
    return DerivationScript(
        level=N,
        hypotheses=_base_hypotheses(factorint(m)),
        steps=steps,
        name=f"corollary2 m={m} N={N}",
        result=rid,
    )


# -- M_m = 1 and M_{-m} = 1


def corollary3_data(m: int, N: int) -> Tuple[int, ProjMat, ProjMat, ProjMat]:
    """(n, M_m, M_{-m}, eps) with eps = M_{-m}^-1 beta(-2/n) M_m beta(-2/m)"""
    if m < 2 or (N + 1) % m:
        raise NoSolution("m must divide N + 1", m=m, N=N)
    n = (N + 1) // m
    if totient(m) != 2 or totient(n) != 2:
        raise NoSolution("needs phi(m) = phi((N+1)/m) = 2", m=m, n=n, N=N)
    gamma = canonicalize(m, 1, N, n)
    gamma_neg = canonicalize(m, -1, -N, n)
    eps = (
        gamma_neg.inverse()
        * translation(Fraction(-2, n))
        * gamma
        * translation(Fraction(-2, m))
    )
    return n, gamma, gamma_neg, eps


def corollary3_steps(
    m: int,
    N: int,
    rid: str,
    neg_id: Optional[str] = None,
    max_exponent: Optional[int] = None,
) -> List[Step]:
    n, gamma, gamma_neg, eps = corollary3_data(m, N)
    neg_id = neg_id or f"{rid}_neg"
    cm = f"_{rid}_C{m}"
    steps = corollary2_steps(m, N, cm, max_exponent)
    cn = cm
    if n != m:
        cn = f"_{rid}_C{n}"
        steps += corollary2_steps(n, N, cn, max_exponent)

    product = f"_{rid}_product"
    steps.append(
        CombineStep(
            terms=[
                (cm, _beta(Fraction(-1, m))),
                (cn, _beta(Fraction(-1, n)) * _m(gamma) * _beta(Fraction(-2, m))),
            ],
            target=(UNIT - _m(gamma_neg)) * (UNIT - _m(eps)),
            id=product,
        )
    )
    steps.append(WeilStep(gamma=gamma_neg, eps=eps, source=product, id=neg_id))
    steps.append(
        CombineStep(
            terms=[(cm, _beta(Fraction(1, m))), (neg_id, -_beta(Fraction(2, m)))],
            target=UNIT - _m(gamma),
            id=rid,
        )
    )
    return steps


def gen_corollary3_script(
    m: int, N: int, max_exponent: Optional[int] = None, rid: Optional[str] = None
) -> DerivationScript:
    rid = rid or f"M{m}"
    n = corollary3_data(m, N)[0]
    steps = corollary3_steps(m, N, rid, max_exponent=max_exponent)
    return DerivationScript(
        level=N,
        hypotheses=_base_hypotheses(list(factorint(m)) + list(factorint(n))),
        steps=steps,
        name=f"corollary3 m={m} N={N}",
        result=rid,
    )


# -- cusp 1/r


def atkin_hypotheses(N: int, Q: int) -> List[Hypothesis]:
    fact = factorint(N)
    return [
        Hypothesis("U", prime=q, mode="zero" if fact[q] > 1 else "id")
        for q in sorted(factorint(Q))
    ]


def theorem3_steps(N: int, r: int, rid: str) -> List[Step]:
    check_level_shape(N)
    if r < 1 or N % r:
        raise InvalidCuspData("r must divide N", N=N, r=r)
    Q = N // r
    if gcd(r, Q) != 1:
        raise InvalidCuspData("needs gcd(r, N/r) = 1", N=N, r=r)
    two_squared = N % 4 == 0
    prefix = f"_{rid}"
    steps: List[Step] = []

    # sum' beta(a/Q) = sum_{d|Q} mu(d) V_{Q/d}, with V_x = prod U_q = prod D(q)
    diagonal_part = RingElem()
    terms = []
    for d in divisors(Q):
        mu = int(mobius(d))
        if mu == 0:
            continue
        x = Q // d
        if x % 2 == 0 and two_squared:
            # V_x = U_2 * sum_{b < 2^(e-1)} beta(b/2^e) * V_rest and U_2 = 0
            e = int(multiplicity(2, x))
            head = sum(
                (_beta(Fraction(b, 2 ** e)) for b in range(2 ** (e - 1))),
                RingElem(),
            )
            terms.append(("U2", head * translation_sum(x >> e) * mu))
            continue
        diagonal_part = diagonal_part + _diag(x) * mu
        primes = sorted(factorint(x))
        for i, q in enumerate(primes):
            right = UNIT
            for later in primes[i + 1:]:
                right = right * translation_sum(later)
            terms.append((f"U{q}", _diag(prod(primes[:i])) * right * mu))
    terms.append(("P", AUTO))
    summed = f"{prefix}_sum"
    steps.append(
        CombineStep(terms=terms, target=R_sum(Q) - diagonal_part, id=summed)
    )

    # H beta(a/Q) H = [1,0;-ar,1] and H D(q) H = D(1,q)
    conj = f"{prefix}_conj"
    steps.append(ConjStep(source=summed, by="H", id=conj))

    h = _m(fricke(N))
    target = -(h * diagonal_part * h)
    terms = [(conj, UNIT)]
    for a in range(1, Q + 1):
        if gcd(a, Q) != 1:
            continue
        solution = lemma6_gamma(N, r, -a)
        lower = canonicalize(1, 0, -a * r, 1)
        target = target + _m(solution.gamma * lower)
        if solution.gamma == IDENTITY:
            continue
        gid = f"{prefix}_G{a}"
        steps.append(
            HypothesisStep(Hypothesis("G", matrix=solution.gamma, id=gid))
        )
        terms.append((gid, -_m(lower)))
    steps.append(CombineStep(terms=terms, target=target, id=rid))
    return steps


def gen_theorem3_script(N: int, r: int, rid: Optional[str] = None) -> DerivationScript:
    rid = rid or f"cusp_{r}"
    steps = theorem3_steps(N, r, rid)
    return DerivationScript(
        level=N,
        hypotheses=[Hypothesis("P"), Hypothesis("H")] + atkin_hypotheses(N, N // r),
        steps=steps,
        name=f"theorem3 N={N} r={r}",
        result=rid,
    )


def cusp_remark_identity(M: int) -> Tuple[RingElem, RingElem]:
    """H_{M^2} [1,0;M,1] and [1,0;-M,1] beta(1/M), equal as classes"""
    lhs = _m(fricke(M * M)) * _m(canonicalize(1, 0, M, 1))
    rhs = _m(canonicalize(1, 0, -M, 1)) * _beta(Fraction(1, M))
    return lhs, rhs
