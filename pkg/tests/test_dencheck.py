import pytest

from clusterwb.exmatrix import ExchangeMatrix
from clusterwb.inventory import Unsupported
from clusterwb.laurent import parse_laurent, positivity_check
from clusterwb.seeds import EngineInvariantError
from clusterwb.dencheck import (
    Workbench,
    check_T_denominator,
    check_lcm_identity,
    check_oldc3,
    exchange_compatible,
    report_passes,
    tilting_words,
    verify_lcm,
    verify_main2,
    verify_main3_finite,
    verify_oldc3,
    verify_t_all,
)

COUNTEREXAMPLE = "((y1 + y3)^2 + y2)/(y1*y2*y3)"


@pytest.mark.parametrize("name, tcs, nvars", [("a1", 2, 2), ("a2", 5, 5), ("a3cyclic", 14, 9), ("d4", 50, 16)])
def test_finite_type_exhaustive(quiver, name, tcs, nvars):
    rep = verify_main3_finite(Workbench(quiver(name)))
    assert rep["counts"] == {"tilting_choices": tcs, "variables": nvars, "verdicts": tcs * nvars}
    assert rep["verdicts"]["all_hold"] and report_passes(rep)
    assert rep["scope"] == "exhaustive"


def test_cyclic_input_uses_acyclic_root(a3_bench, quiver):
    assert len(a3_bench.input_word) == 1
    tc = a3_bench.tilting_choice()
    assert tc.quiver == quiver("a3cyclic")
    assert a3_bench.C.is_cluster_tilting(tc.T)


def test_counterexample_variable(a2t_bench):
    wb = a2t_bench
    tc = wb.tilting_choice((1,))
    assert tc.describe() == "P1+M101+P3"
    enum = wb.enumerate_tc(tc, 4)
    x = parse_laurent(COUNTEREXAMPLE, 3)
    assert x in enum
    rec = enum.variable(x)
    assert len(rec.witness) <= 4
    M = wb.resolve(rec.companions[-1])
    assert M == tc.T[1]
    assert wb.C.end_C(M) == 2
    v = check_T_denominator(wb.C, x, M, tc)
    assert not v.holds and v.case == "I"
    assert v.expected == (1, 2, 1) and v.actual == (1, 1, 1)
    assert v.mismatches() == [(1, 1, 2)]
    # f is a polynomial here; positivity is what fails, at the point (1, 0, 1)
    assert v.f.is_polynomial() and v.f.evaluate((1, 0, 1)) == 0


def test_main2_on_counterexample(a2t_bench):
    rep = verify_main2(a2t_bench, a2t_bench.tilting_choice((1,)), 4)
    assert rep["verdicts"] == {"a_bounded": False, "b": False, "c": False, "consistent": True}
    assert report_passes(rep)
    a = next(w for w in rep["witnesses"] if w["condition"] == "a")
    assert a["variable"] == "(y1^2 + 2*y1*y3 + y3^2 + y2) / (y1*y2*y3)"
    assert a["mismatches"] == [{"position": 2, "actual": 1, "expected": 2}]


def test_main2_transjective_choice(a2t_bench):
    rep = verify_main2(a2t_bench, a2t_bench.tilting_choice(()), 5)
    assert rep["verdicts"]["consistent"] and rep["verdicts"]["a_bounded"]
    assert rep["scope"] == "bounded at depth 5"


def test_main2_kronecker(quiver):
    wb = Workbench(quiver("kronecker"), inventory_depth=4)
    for word in [(), (0,), (1, 0)]:
        rep = verify_main2(wb, wb.tilting_choice(word), 4)
        assert rep["verdicts"]["consistent"] and rep["verdicts"]["a_bounded"]


def affine31():
    return ExchangeMatrix.from_arrows(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])


def test_main2_rank_three_tube():
    wb = Workbench(affine31(), inventory_depth=3)
    # a quasisimple summand is allowed, a quasilength-2 summand is not
    ok = verify_main2(wb, wb.tilting_choice((2,)), 4)
    assert "S2" in ok["instance"]["T"]
    assert ok["verdicts"] == {"a_bounded": True, "b": True, "c": True, "consistent": True}
    bad = verify_main2(wb, wb.tilting_choice((1, 2)), 4)
    assert bad["verdicts"] == {"a_bounded": False, "b": False, "c": False, "consistent": True}


def test_main3_refused_outside_finite_type(a2t_bench):
    with pytest.raises(Unsupported):
        verify_main3_finite(a2t_bench)
    with pytest.raises(ValueError):
        a2t_bench.enumerate_tc(a2t_bench.tilting_choice(()))


def test_t_all_agrees(a2t_bench, a3_bench):
    rep = verify_t_all(a2t_bench, a2t_bench.tilting_choice((1,)), 4)
    v = rep["verdicts"]
    assert not v["all_summands_compatible"] and not v["all_variables_have_T_denominator"] and v["agree"]
    assert {w["side"] for w in rep["witnesses"]} == {"compatibility", "denominator"}
    for word in tilting_words(a3_bench):
        rep = verify_t_all(a3_bench, a3_bench.tilting_choice(word))
        assert rep["verdicts"]["all_summands_compatible"] and rep["verdicts"]["agree"]


def test_compatibility_bounds_on_all_objects(a2t_bench):
    # the Hom bounds are asserted inside exchange_compatible; run them over the inventory
    wb = a2t_bench
    tc = wb.tilting_choice((1,))
    enum = wb.enumerate_tc(tc, 3)
    objs = [X for X in wb.inventory if X.coords[0] != "preprojective" or X.coords[1] < 3]
    n_boundary = 0
    for edge in enum.edges:
        ex = wb.edge_objects(enum, edge)
        for N in objs:
            res = exchange_compatible(wb.C, N, ex)
            assert res.s <= res.r + res.t and res.u <= res.r + res.t
            if res.boundary:
                n_boundary += 1
                assert res.plus_one and check_oldc3(wb.C, N, ex)
            else:
                assert res.compatible == (res.r + res.t == max(res.s, res.u))
    assert n_boundary > 0


def test_oldc3_rejects_non_boundary(a3_bench):
    wb = a3_bench
    tc = wb.tilting_choice(())
    enum = wb.enumerate_tc(tc)
    edge = enum.edges[0]
    ex = wb.edge_objects(enum, edge)
    N = next(X for X in wb.inventory if wb.C.tau(X) not in (ex.M, ex.Mstar))
    with pytest.raises(ValueError):
        check_oldc3(wb.C, N, ex)


def test_oldc3_suites(a2t_bench, a3_bench):
    for word in tilting_words(a3_bench):
        assert verify_oldc3(a3_bench, a3_bench.tilting_choice(word))["verdicts"]["all_hold"]
    rep = verify_oldc3(a2t_bench, a2t_bench.tilting_choice((1,)), 4)
    assert rep["verdicts"]["all_hold"] and rep["counts"]["boundary_pairs"] == 2 * rep["counts"]["edges"]


def test_lcm_suites(a2t_bench, a3_bench):
    for word in tilting_words(a3_bench):
        rep = verify_lcm(a3_bench, a3_bench.tilting_choice(word))
        assert rep["counts"]["incompatible_edges"] == 0 and report_passes(rep)
    rep = verify_lcm(a2t_bench, a2t_bench.tilting_choice((1,)), 5)
    assert rep["counts"]["incompatible_edges"] > 0 and report_passes(rep)
    assert all(w["c"] == [0, 1, 0] for w in rep["witnesses"] if "nontrivial" not in w or w["nontrivial"])


def test_lcm_identity_matches_exchange_relation(a3_bench):
    # on compatible edges, t_M + t_M* - max(t_B, t_B') is the y-denominator of x_M * x_M*
    wb = a3_bench
    tc = wb.tilting_choice(())
    enum = wb.enumerate_tc(tc)
    for edge in enum.edges:
        ex = wb.edge_objects(enum, edge)
        res = check_lcm_identity(wb.C, tc, ex)
        assert res.holds
        assert res.boundary_index is None or res.t_M[res.boundary_index] + res.t_Mstar[res.boundary_index] >= 1


def test_positivity_of_all_numerators(a2t_bench):
    tc = a2t_bench.tilting_choice(())
    enum = a2t_bench.enumerate_tc(tc, 5)
    for rec in enum.variables:
        f = rec.poly.shift(rec.dvec)
        assert f.is_polynomial() and positivity_check(f)


def test_non_polynomial_f_is_a_failed_verdict(a3_bench):
    wb = a3_bench
    tc = wb.tilting_choice(())
    x = parse_laurent("(y1 + y3)/y2", 3)
    # an object whose t-vector leaves y2 out of the denominator
    obj = next(
        X for X in wb.inventory
        if tc.index_of_tau(X) is None and wb.C.hom_C(tc.T[1], X) == 0
    )
    v = check_T_denominator(wb.C, x, obj, tc)
    assert not v.f.is_polynomial()
    assert not v.holds and not v.positivity


def test_tilting_choice_rejects_bad_word(a3_bench):
    with pytest.raises(IndexError):
        a3_bench.tilting_choice((5,))


def test_engine_error_type():
    assert issubclass(EngineInvariantError, AssertionError)
