import pytest

from primegraphs.configs import ConfigKind, Witness, find_induced
from primegraphs.errors import Refusal
from primegraphs.graph import path_graph
from primegraphs.oracles import (ORACLE_MAX_ORDER, acceptable_tables, brute_force_prime, chain_exists_direct,
                                 is_chain_direct, oracle_check)

K = ConfigKind


def test_direct_helpers():
    p4 = path_graph(4)
    assert brute_force_prime(p4) and not brute_force_prime(path_graph(3))
    assert is_chain_direct(p4, (0, 1, 2, 3)) and not is_chain_direct(p4, (0, 1))
    assert chain_exists_direct(p4, (0, 1), 3)


def test_tables_count_labelled_copies():
    # one labelled perfect matching on 2 edges uses 4 positions: 3 matchings of K4
    assert len(acceptable_tables(K.InducedMatching, 2)) == 3


def test_small_graphs_pass(atlas6):
    bad = [g for g in atlas6[::7] if not oracle_check(g).ok]
    assert bad == []


def test_fault_injection_is_flagged():
    def liar(g, kind, n):
        w = find_induced(g, kind, n)
        if kind is K.InducedMatching and w is not None:
            return None
        return w

    rep = oracle_check(path_graph(5), detector=liar)
    assert not rep.ok and rep.checks["detector"] is False
    assert any("InducedMatching" in f for f in rep.failures)


def test_fabricated_witness_is_flagged():
    def forger(g, kind, n):
        return Witness(kind, n, (("a1", 0),)) if kind is K.ThinSpider else find_induced(g, kind, n)

    assert not oracle_check(path_graph(4), detector=forger).ok


def test_order_nine_is_refused():
    with pytest.raises(Refusal, match="order <= 8"):
        oracle_check(path_graph(ORACLE_MAX_ORDER + 1))


def test_report_json():
    js = oracle_check(path_graph(4)).to_json()
    assert js["ok"] is True and js["failures"] == [] and "primality" in js["checks"]
