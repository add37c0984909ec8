import json
import math
import pathlib
from dataclasses import replace

import numpy as np
import pytest

from selbounds.bounds import (
    BoundParameters,
    BoundResult,
    ConjectureConstants,
    asymptotic_main_terms,
    bound_line1,
    bound_main,
    bound_real_point,
    dedekind_residue_bound,
    family_cor10,
    prime_term_bound,
    r_terms,
    zero_sum_bound,
    zeta_cor9,
)
from selbounds.constants import EULER_GAMMA, TRIGAMMA_QUARTER
from selbounds.descriptors import (
    EvaluationPoint,
    dirichlet_descriptor,
    make_descriptor,
    zeta_descriptor,
)
from selbounds.errors import (
    EulerOrderMismatch,
    MissingEulerOrder,
    NoCaseApplies,
    NotEntire,
    ConductorTooSmall,
    PreconditionFailed,
    StrongLambdaRequired,
)
from selbounds.kernel import a_hat, a_tilde, eta, frak_a, frak_b, integral_theta1

LOG2 = math.log(2.0)


# --- prime_term_bound ---------------------------------------------------------

def test_ex_selector_matches_x_form(zeta):
    # sigma = 1, alpha = log 2, log tau = 20 gives x = 400/4 = 100, and the
    # eta-form of the remainder bound collapses to the x-form exactly
    got = prime_term_bound(zeta, 1.0, 20.0, BoundParameters(alpha=LOG2), which="Ex")
    x = 100.0
    want = 2.0 / (math.sqrt(x) * math.log(x)) \
        + 5.0 * (1.0 + math.log(x)) / (16.0 * math.pi * x)
    assert got == pytest.approx(want, rel=1e-12)
    assert got == pytest.approx(0.049005, abs=1e-6)


def test_s_at1_leading_structure(zeta):
    log_tau = 100.0
    llt = math.log(log_tau)
    alpha = LOG2
    got = prime_term_bound(zeta, 1.0, log_tau, BoundParameters(alpha=alpha),
                           which="S_at1")
    lead = 2 * llt - EULER_GAMMA - alpha
    rest = (math.exp(alpha) - 1) * (2 * alpha + 1) * llt ** 2 \
        / (2 * math.pi * alpha * log_tau) + 0.24 * math.exp(alpha) / log_tau
    assert got == pytest.approx(lead + rest, rel=1e-12)


def test_prime_term_proportional_to_euler_order(zeta):
    m0 = replace(zeta, euler_order=0)
    m3 = replace(zeta, euler_order=3)
    for which in ("S_case1or2", "S_near1", "S_at1", "Shat_case1", "Shat_case2",
                  "Shat_at1", "Ex"):
        sigma = 1.0 if which.endswith("at1") else 0.9
        assert prime_term_bound(m0, sigma, 1000.0, which=which) == 0.0
        assert prime_term_bound(m3, sigma, 1000.0, which=which) == pytest.approx(
            3.0 * prime_term_bound(zeta, sigma, 1000.0, which=which), rel=1e-12)


def test_prime_term_requires_euler_order(zeta):
    anon = replace(zeta, euler_order=None)
    with pytest.raises(MissingEulerOrder):
        prime_term_bound(anon, 0.9, 1000.0)


def test_s_case_bound_dominates_exact(zeta, zeta_tables_1e6):
    """The stated bound dominates the sieved sum at an admissible point."""
    from selbounds.arithmetic import s_exact, select_xy
    log_tau, alpha = 200.0, 1.0
    sigma = 0.9
    x, y = select_xy(sigma, alpha, log_tau)
    exact = s_exact(zeta_tables_1e6, sigma, x, y)
    bound = prime_term_bound(zeta, sigma, log_tau, BoundParameters(alpha=alpha),
                             which="S_case1or2")
    assert exact <= bound


# --- zero_sum_bound -------------------------------------------------------------

def test_zero_sum_bound_assembly(zeta):
    log_tau, alpha1, t0 = 5e5, 6.5, 1e6
    llt0 = math.log(log_tau)
    got = zero_sum_bound(zeta, 1.0, None, log_tau, alpha1, t0, llt0)
    want = log_tau / 2.0 + frak_a(1, alpha1, t0) \
        + 2.0 * math.log(log_tau) + frak_b(1.0, 1, 1, alpha1, t0, log_tau)
    assert got == pytest.approx(want, rel=1e-13)
    assert got == pytest.approx(250000.0, abs=30.0)


def test_zero_sum_bound_exponent_at_three_halves(zeta):
    log_tau = 5e5
    got = zero_sum_bound(zeta, 1.5, None, log_tau, 6.5, 1e6, math.log(log_tau))
    # the tau-power term carries exponent 2 - 2 sigma = -1
    a = frak_a(1, 6.5, 1e6)
    b = frak_b(1.0, 1, 1, 6.5, 1e6, log_tau)
    assert got == pytest.approx(
        log_tau / 2 + a / log_tau + 2 * math.log(log_tau) + b, rel=1e-13)


def test_zero_sum_bound_strong_lambda_required():
    odd = make_descriptor([(1.0, 0.0)], 1.0, euler_order=1)
    with pytest.raises(StrongLambdaRequired):
        zero_sum_bound(odd, 1.0, None, 5e5, 6.5, 1e6, math.log(5e5))


def test_zero_sum_bound_preconditions(zeta):
    with pytest.raises(PreconditionFailed):
        # sigma below 1/2 + alpha1/loglog tau
        zero_sum_bound(zeta, 0.51, None, 5e5, 6.5, 1e6, math.log(5e5))
    with pytest.raises(PreconditionFailed):
        # t too small
        zero_sum_bound(zeta, 1.0, 10.0, 5e5, 6.5, 1e6, math.log(5e5))


# --- r_terms --------------------------------------------------------------------

def test_r2_vanishes_for_entire():
    d5 = dirichlet_descriptor(5, 1)
    r1, r2 = r_terms(d5, 0.9, 100.0, 1.278)
    assert r2 == 0.0
    assert r1 > 0


def test_r1_linear_in_degree(zeta):
    r1_a, _ = r_terms(zeta, 0.9, 100.0, 1.278)
    double = make_descriptor([(0.5, 0.0), (0.5, 0.0)], math.pi ** -1.0,
                             pole_order=1, euler_order=2)
    r1_b, _ = r_terms(double, 0.9, 100.0, 1.278)
    assert r1_b == pytest.approx(2.0 * r1_a, rel=1e-12)


def test_r1_uses_trigamma_constant(zeta):
    sigma, log_tau, alpha = 0.9, 100.0, 1.278
    r1, _ = r_terms(zeta, sigma, log_tau, alpha)
    llt = math.log(log_tau)
    want = (sigma - 0.5) * (1 + math.exp(2 * alpha * sigma / (2 * sigma - 1))) \
        / (alpha * math.exp(2 * sigma * llt)) * TRIGAMMA_QUARTER
    assert r1 == pytest.approx(want, rel=1e-12)


def test_r2_negligible_at_large_tau(zeta):
    _, r2 = r_terms(zeta, 1.0, 16.1, 1.278)
    # (q/tau)^{2/d} = e^{-32.2}
    assert r2 < 1e-12
    assert r2 == pytest.approx(
        0.5 * (1 + 1.0) / 1.278 * math.exp(-2 * 16.1), rel=1e-10)


def test_r_terms_integrated(zeta):
    r1, r2 = r_terms(zeta, 1.0, 5e5, 1.278, integrated=True)
    llt = math.log(5e5)
    want_r1 = 4.3 * (math.exp(2 * 1.278) + 1) / (2 * 1.278 * math.exp(2 * llt) * llt)
    assert r1 == pytest.approx(want_r1, rel=1e-12)
    r1b, _ = r_terms(zeta, 0.9, 5e5, 1.278, integrated=True, alpha1=1.3,
                     log_tau0=5e5)
    assert r1b > 0
    with pytest.raises(ValueError):
        r_terms(zeta, 0.9, 5e5, 1.278, integrated=True)


# --- bound_main -----------------------------------------------------------------

def test_case3_examples(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 1.5, math.e)
    d, l = bound_main(zeta, pt, BoundParameters(alpha3=1.0, case_hint="case3"))
    assert d.value == pytest.approx(math.e, rel=1e-12)
    assert l.value == pytest.approx(1.0 + EULER_GAMMA / math.e, rel=1e-12)
    assert d.case == "case3"


def test_no_case_applies(zeta):
    pt = EvaluationPoint.from_t(zeta, 0.5, 1e6)
    with pytest.raises(NoCaseApplies):
        bound_main(zeta, pt, BoundParameters())


def test_case1_certified_and_close_to_cor9(zeta):
    """With the zeta-corollary parameters the sharp case-1 assembly lands just
    under the corollary display."""
    pt = EvaluationPoint.from_log_log_tau(zeta, 0.75, math.log(1e6))
    params = BoundParameters(alpha=1.278, alpha1=1.0,
                             log_log_tau0=math.log(math.log(1e6)), t0=1e6,
                             case_hint="case1")
    sharp_d, sharp_l = bound_main(zeta, pt, params, strict=True)
    cor_d, cor_l = zeta_cor9(0.75, log_t=1e6, strict=True)
    assert sharp_d.certified and cor_d.certified
    assert sharp_d.value <= cor_d.value
    assert sharp_l.value <= cor_l.value
    assert sharp_d.value == pytest.approx(cor_d.value, rel=7e-3)


def test_case1_auto_selection(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 0.75, 13.0)
    d, _ = bound_main(zeta, pt, BoundParameters(log_log_tau0=13.0, t0=2001.0))
    assert d.case == "case1"
    assert d.certified


def test_case2_certified_at_sigma_one(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 1.0, 13.0)
    d, l = bound_main(zeta, pt, BoundParameters(
        alpha=1.278, log_log_tau0=13.0, t0=2001.0, case_hint="case2"), strict=True)
    assert d.certified and l.certified
    # leading term of the near-1 display
    assert d.terms[0] == ("leading", pytest.approx(26.0, rel=1e-12))


def test_case2_range_detection(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 1.0 + 0.5 / 13.0, 13.0)
    d, _ = bound_main(zeta, pt, BoundParameters(log_log_tau0=13.0, t0=2001.0))
    assert d.case == "case2"


def test_strict_raises_on_range(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 0.75, 13.0)
    with pytest.raises(PreconditionFailed):
        bound_main(zeta, pt, BoundParameters(log_log_tau0=13.0, t0=0.5,
                                             case_hint="case1"), strict=True)


def test_bound_result_terms_sum(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 0.8, 13.5)
    for res in bound_main(zeta, pt, BoundParameters(log_log_tau0=13.0, t0=2001.0)):
        assert res.value == pytest.approx(
            math.fsum(v for _, v in res.terms), rel=1e-12)


def test_bound_result_json_schema(zeta):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(
        (pathlib.Path(__file__).parent.parent / "docs" / "bound_result.schema.json")
        .read_text())
    pt = EvaluationPoint.from_log_log_tau(zeta, 0.8, 13.5)
    d, l = bound_main(zeta, pt, BoundParameters(log_log_tau0=13.0, t0=2001.0))
    for res in (d, l):
        doc = res.to_json_dict()
        jsonschema.validate(doc, schema)
        rebuilt = json.loads(json.dumps(doc))
        assert rebuilt == doc


# --- line 1 and real point ------------------------------------------------------

def line1_logderiv_oracle(m, d, m_l, alpha, llt, llt0, a2, b2, qtau):
    ea = math.exp(alpha)
    P1 = math.exp(llt)
    return (2 * m * llt - m * (EULER_GAMMA + alpha) + (ea + 1) / (2 * alpha)
            + m * (ea - 1) * (2 * alpha + 1) / (2 * math.pi * alpha) * llt ** 2 / P1
            + 2 * m * (ea + 1) / alpha * llt / P1
            + (0.24 * m * ea + (ea + 1) / alpha * (a2 + b2)) / P1
            + 2.15 * d * (math.exp(2 * alpha) + 1) / (alpha * P1 ** 2)
            + m_l / alpha * qtau)


def test_line1_zeta_oracle(zeta):
    t = 1e7
    params = BoundParameters(alpha=LOG2, log_log_tau0=math.log(math.log(t)), t0=t)
    d_res, l_res = bound_line1(zeta, t, params, strict=True)
    llt = math.log(math.log(t))
    llt0 = llt
    a2 = frak_a(1, 0.5 * llt0, t)
    b2 = frak_b(1.0, 1, 1, 0.5 * llt0, t, math.log(t))
    qtau = math.exp(-2 * math.log(t))
    want = line1_logderiv_oracle(1, 1.0, 1, LOG2, llt, llt0, a2, b2, qtau)
    assert d_res.value == pytest.approx(want, rel=1e-12)
    # the three explicit leading terms
    assert d_res.terms[0][1] == pytest.approx(2 * llt, rel=1e-14)
    assert d_res.terms[1][1] == pytest.approx(-(EULER_GAMMA + LOG2), rel=1e-12)
    assert d_res.value == pytest.approx(8.4014, abs=1e-3)
    assert l_res.value == pytest.approx(3.1684, abs=1e-3)
    assert d_res.certified


def test_line1_requires_tau0_floor(zeta):
    params = BoundParameters(alpha=LOG2, log_log_tau0=math.log(math.log(1e5)),
                             t0=1e5)
    with pytest.raises(PreconditionFailed):
        bound_line1(zeta, 1e5, params, strict=True)


def test_real_point_not_entire(zeta):
    with pytest.raises(NotEntire):
        bound_real_point(zeta, BoundParameters(alpha=LOG2))


def test_real_point_synthetic_conductor():
    """Entire strong-lambda descriptor with log q = 20: the bound follows the
    1-line display with tau replaced by the conductor."""
    q_target = math.exp(20.0)
    Q = math.sqrt(q_target / math.pi)
    desc = make_descriptor([(0.5, 0.0)], Q, pole_order=0, euler_order=1)
    assert math.log(desc.conductor) == pytest.approx(20.0, rel=1e-12)
    d_res, l_res = bound_real_point(desc, BoundParameters(alpha=LOG2))
    llt = math.log(20.0)
    assert d_res.terms[0][1] == pytest.approx(2 * llt, rel=1e-12)
    assert d_res.terms[1][1] == pytest.approx(-(EULER_GAMMA + LOG2), rel=1e-12)
    # frak_a3 reduces to (1 - e^{-loglog q0})^{-1} at m_L = 0, t0 = 1
    a3 = frak_a(0, 0.5 * llt, 1.0)
    assert a3 == pytest.approx(1.0 / (1.0 - math.exp(-llt)), rel=1e-12)
    # no pole terms in the breakdown
    assert dict(d_res.terms)["pole"] == 0.0
    assert d_res.certified


def test_real_point_conductor_too_small():
    desc = make_descriptor([(0.5, 0.0)], 1.0, pole_order=0, euler_order=1)
    with pytest.raises(ConductorTooSmall):
        bound_real_point(desc, BoundParameters(alpha=LOG2))


# --- corollaries ----------------------------------------------------------------

def test_cor9_term_by_term():
    d_res, l_res = zeta_cor9(0.75, t=1e6)
    lt = math.log(1e6)
    llt = math.log(lt)
    alpha = 1.278
    terms = dict(d_res.terms)
    assert terms["leading"] == pytest.approx(a_hat(1, alpha, 0.75) * math.sqrt(lt),
                                             rel=1e-12)
    assert terms["secondary"] == pytest.approx(-0.75 * 2 ** 0.25 / 0.25, rel=1e-12)
    assert terms["zero_sum_a"] == pytest.approx(4.2, rel=1e-12)
    assert terms["prime_const"] == pytest.approx(0.64 / 0.125, rel=1e-12)
    assert terms["zero_sum_llt"] == pytest.approx(4 * llt ** 2 / (0.5 * math.sqrt(lt)),
                                                  rel=1e-12)
    assert terms["gamma_factor"] == pytest.approx(2.0 * lt ** (-1.0 / 3.0), rel=1e-12)
    assert d_res.value == pytest.approx(36.4921, abs=1e-3)
    # the sigma range needs sigma >= 0.8808 at t = 1e6, so this is uncertified
    assert not d_res.certified


def test_cor9_certified_inside_range():
    d_res, l_res = zeta_cor9(0.9, t=1e6, strict=True)
    assert d_res.certified and l_res.certified
    assert d_res.value == pytest.approx(15.0336, abs=1e-3)


def test_cor9_rejects_small_t():
    with pytest.raises(PreconditionFailed):
        zeta_cor9(0.75, t=1e5)


def test_cor10_decomposition(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 0.75, 13.0)
    d_res, l_res, d1_res, l1_res = family_cor10(zeta, pt, strict=True)
    terms = dict(d_res.terms)
    p = math.exp(6.5)
    assert terms["leading"] == pytest.approx((p - 0.75 * 2 ** 0.25) / 0.25, rel=1e-12)
    assert terms["alpha_window"] == pytest.approx((1.796 - 1.278) * p, rel=1e-12)
    assert terms["zero_sum_a"] == pytest.approx(4.0, rel=1e-12)
    assert terms["const"] == pytest.approx(90.0)
    assert d_res.value == pytest.approx(3095.54, abs=0.01)
    # 1-line coefficient pair
    t1 = dict(d1_res.terms)
    assert t1["const"] == pytest.approx(2.265 - 2.763, rel=1e-12)
    lt1 = dict(l1_res.terms)
    assert lt1["const"] == pytest.approx(math.log(2 * math.exp(EULER_GAMMA)), rel=1e-12)


def test_cor10_preconditions(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 0.75, 12.9)
    with pytest.raises(PreconditionFailed):
        family_cor10(zeta, pt, strict=True)
    res = family_cor10(zeta, pt)[0]
    assert not res.certified
    d5 = dirichlet_descriptor(5, 1)
    from selbounds.descriptors import product_descriptor, zeta_descriptor
    prod = product_descriptor([zeta_descriptor(), d5])
    pt2 = EvaluationPoint.from_log_log_tau(prod, 0.75, 13.0)
    assert prod.euler_order == 2 and prod.degree == 2  # m = d holds here
    bad = replace(prod, euler_order=3)
    with pytest.raises(EulerOrderMismatch):
        family_cor10(bad, pt2)


def test_dedekind_bound():
    v = dedekind_residue_bound(2, 5.4e6)
    assert v == pytest.approx(24.1016, abs=0.002)
    ll = math.log(math.log(5.4e6))
    assert v == pytest.approx(math.exp(1.271 + 2.475 / ll) * ll, rel=1e-12)
    # n_K = 2 means the bracket enters to the first power only
    assert dedekind_residue_bound(3, 5.4e6) == pytest.approx(v * v, rel=1e-12)
    with pytest.raises(PreconditionFailed):
        dedekind_residue_bound(2, 1e6)
    with pytest.raises(PreconditionFailed):
        dedekind_residue_bound(1, 5.4e6)


# --- asymptotic diagnostics -----------------------------------------------------

def test_thm6_main_terms(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 1.0, 13.0)
    d_rep, l_rep = asymptotic_main_terms(zeta, pt, "thm6", alpha=1.278)
    llt = 13.0
    assert d_rep.value == pytest.approx(
        2 * llt - (EULER_GAMMA + 1.278) + (math.exp(1.278) + 1) / 2.556, rel=1e-12)
    assert not d_rep.certified
    assert "conductor" in d_rep.o_terms
    assert l_rep.value == pytest.approx(
        math.log(2 * llt) + EULER_GAMMA + (math.exp(1.278) + 1) / (4 * 1.278 * llt),
        rel=1e-12)


def test_thm6_m_zero_leaves_zero_window():
    desc = make_descriptor([(0.5, 0.0)], 1.0, euler_order=0)
    pt = EvaluationPoint.from_log_log_tau(desc, 1.0, 13.0)
    d_rep, _ = asymptotic_main_terms(desc, pt, "thm6", alpha=1.278)
    nonzero = [(k, v) for k, v in d_rep.main_terms if v != 0.0]
    assert nonzero == [("zero_window", pytest.approx((math.exp(1.278) + 1) / 2.556))]


def test_thm2_conjecture_route(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 0.8, 13.0)
    conj = ConjectureConstants(variant=2, cp1=1.21, cp2=0.5)
    d_rep, l_rep = asymptotic_main_terms(zeta, pt, "thm2", alpha=1.278,
                                         conjecture=conj)
    want = a_hat(1.21, 1.278, 0.8) * math.exp(0.4 * 13.0)
    assert d_rep.main_terms[0][1] == pytest.approx(want, rel=1e-12)
    # variant-1 m-values take square roots
    conj1 = ConjectureConstants(variant=1, cp1=4.0, cp2=0.0)
    m1, m2, m3, m4 = conj1.m_values(13.0)
    assert m1 == pytest.approx(2.0)
    assert m3 == pytest.approx(2.0 / math.sqrt(13.0))


def test_thm4_regions(zeta):
    near = EvaluationPoint.from_log_log_tau(zeta, 1.0 + 0.5 / 13, 13.0)
    d_rep, _ = asymptotic_main_terms(zeta, near, "thm4", alpha=1.278)
    assert d_rep.main_terms[0] == ("leading", pytest.approx(26.0))
    away = EvaluationPoint.from_log_log_tau(zeta, 0.75, 13.0)
    d_rep2, _ = asymptotic_main_terms(zeta, away, "thm4", alpha=1.278)
    assert d_rep2.main_terms[0][1] == pytest.approx(
        a_hat(1, 1.278, 0.75) * math.exp(0.5 * 13.0), rel=1e-12)


def test_thm1_epsilon_route(zeta):
    pt = EvaluationPoint.from_log_log_tau(zeta, 0.8, 13.0)
    d_rep, l_rep = asymptotic_main_terms(zeta, pt, "thm1", alpha=1.278, eps=0.01)
    assert len(d_rep.main_terms) == 3
    assert all(isinstance(name, str) for name in d_rep.o_terms)
    assert d_rep.value > 0
