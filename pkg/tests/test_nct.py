"""NCT search modes and Toffoli substitution."""

import pytest

import ncvsynth as nv
from ncvsynth import Circuit, NOT, TOF
from ncvsynth.nct import (
    NctCostModel,
    split_nct_cost,
    substituted_witness_cost,
    toffoli_decomposition,
    toffoli_substitute,
)

TOF_FUNC = (0, 1, 2, 3, 4, 5, 7, 6)


@pytest.mark.parametrize(
    "metric,expected",
    [(nv.NCV_111, (1, 1, 5)), (nv.NCV_012, (0, 1, 8)), (nv.NCV_155, (1, 5, 25))],
)
def test_cost_model_weights(metric, expected):
    model = NctCostModel.for_metric(metric)
    assert (model.w_not, model.w_cnot, model.w_tof) == expected
    decomposition = Circuit(toffoli_decomposition(0, 1, 2))
    assert model.w_tof == nv.circuit_cost(decomposition, metric)


def test_substitution_realizes_toffoli():
    substituted = toffoli_substitute(Circuit((TOF(0, 1, 2),), "NCT"))
    assert len(substituted) == 5 and substituted.library == "NCV"
    assert nv.check_realizes(substituted, TOF_FUNC)


def test_substitution_passthrough():
    plain = Circuit((NOT(0), nv.CNOT(1, 2)), "NCT")
    assert toffoli_substitute(plain).gates == plain.gates


def test_double_toffoli_substitutes_to_identity():
    double = Circuit((TOF(0, 1, 2), TOF(0, 1, 2)), "NCT")
    substituted = toffoli_substitute(double)
    assert len(substituted) == 10
    assert nv.check_realizes(substituted, tuple(range(8)))


def test_gate_count_table_basics(nct_gc):
    assert nct_gc.cost_of(tuple(range(8))) == 0
    assert nct_gc.cost_of(TOF_FUNC) == 1
    assert nct_gc.witness(TOF_FUNC) == Circuit((TOF(0, 1, 2),), "NCT")
    assert nct_gc.complete


def test_witness_substitution_cost(nct_gc):
    assert substituted_witness_cost(nct_gc, TOF_FUNC, nv.NCV_111) == 5
    assert substituted_witness_cost(nct_gc, TOF_FUNC, nv.NCV_012) == 8


def test_split_nct_cost_modes(nct_gc):
    lexmin = nv.settle_all_nct("lex-min", nv.NCV_111)
    lexmax = nv.settle_all_nct("lex-max", nv.NCV_111)
    for func in (tuple(range(8)), TOF_FUNC, (7, 6, 4, 5, 2, 3, 1, 0)):
        gc = nct_gc.cost_of(func)
        lo_gc, lo_sub = split_nct_cost(lexmin, lexmin.cost_of(func))
        hi_gc, hi_sub = split_nct_cost(lexmax, lexmax.cost_of(func))
        assert lo_gc == hi_gc == gc
        assert lo_sub <= hi_sub
        assert split_nct_cost(nct_gc, gc) == (gc, gc)


def test_nct_witnesses_fold(nct_gc):
    for func in ((7, 6, 4, 5, 2, 3, 1, 0), (1, 0, 2, 3, 4, 5, 6, 7)):
        witness = nct_gc.witness(func)
        assert nv.realized_function(witness) == func
        assert len(witness) == nct_gc.cost_of(func)
        # the substituted circuit realizes the same function
        assert nv.check_realizes(toffoli_substitute(witness), func)


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        nv.settle_all_nct("lex-median", nv.NCV_111)
    with pytest.raises(nv.MetricMismatch):
        nv.settle_all_nct("lex-min", None)
