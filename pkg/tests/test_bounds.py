import pytest
from hypothesis import given
from hypothesis import strategies as st

from primegraphs.bigbound import BigBound, bb_add, bb_log2, bb_mul
from primegraphs.bounds import LINKS, bound_report, compare_bounds, f_fn, g_fn, h_fn
from primegraphs.errors import InputError
from primegraphs.ramsey import ramsey_upper


def test_g_values():
    assert [g_fn(n).as_int() for n in (2, 3, 4)] == [4, 19, 85]
    with pytest.raises(InputError):
        g_fn(1)


@pytest.mark.parametrize("n, nprime", [(1, 1), (2, 9), (5, 7), (7, 3), (12, 40)])
def test_h_base_case(n, nprime):
    h = h_fn(n, nprime, 2)
    assert h.as_int() == n and h.exact


def test_h_examples():
    assert h_fn(1, 9, 6).as_int() == 1
    h = h_fn(2, 2, 3)
    assert h.as_int() == 3 and h.exact
    assert h_fn(3, 2, 3).polarity == "upper"
    with pytest.raises(InputError):
        h_fn(2, 2, 1)


def test_f_values_and_flags():
    f = f_fn(1, 1, 1)
    assert f.as_int() == 4 and f.exact
    f = f_fn(2, 2, 2)
    m = ramsey_upper((4, 3, 4, 3))
    assert m.polarity == "upper" and f.polarity == "upper"
    assert f.as_int() == 2 ** (m.as_int() + 1)
    with pytest.raises(InputError):
        f_fn(1, 0, 1)


@given(st.integers(2, 6), st.integers(1, 4), st.integers(2, 4))
def test_h_monotone(n, nprime, i):
    assert h_fn(n, nprime, i).certainly_le(h_fn(n + 1, nprime, i))
    assert h_fn(n, nprime, i).certainly_le(h_fn(n, nprime + 1, i))
    assert h_fn(n, nprime, i).certainly_le(h_fn(n, nprime, i + 1))


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4))
def test_f_monotone(n, n1, n2):
    base = f_fn(n, n1, n2)
    for bigger in (f_fn(n + 1, n1, n2), f_fn(n, n1 + 1, n2), f_fn(n, n1, n2 + 1)):
        assert base.certainly_le(bigger)


def test_g_monotone():
    assert all(g_fn(n).as_int() < g_fn(n + 1).as_int() for n in range(2, 30))


def test_report_n2():
    r = bound_report(2)
    assert r.g_n.as_int() == 4 and r.h_n.as_int() == 2
    assert r.x.as_int() == ramsey_upper((2, 2, 2, 4)).as_int() == 4
    assert r.M.is_int and r.M.polarity == "upper"
    assert r.N_ckos_lower.polarity == "lower"
    js = r.to_json()
    assert set(js) == {"n", "g_n", "h_n", "x", "M", "m", "N_new", "N_ckos_lower"}


@pytest.mark.parametrize("n", [2, 3, 5])
def test_report_log_identity(n):
    """log2 N = log2 x + (x+1) log2(5m), up to the enclosure width."""
    r = bound_report(n)
    lhs = bb_log2(r.N_new)
    rhs = bb_add(bb_log2(r.x), bb_mul(bb_add(r.x, 1), bb_log2(bb_mul(5, r.m))))
    assert not lhs.certainly_lt(rhs) and not rhs.certainly_lt(lhs)


def test_compare_n5():
    c = compare_bounds(5)
    assert list(c.links) == list(LINKS)
    assert c.all_true


def test_compare_sweep_is_stable():
    verdicts = [compare_bounds(n).all_true for n in range(2, 21)]
    assert all(verdicts)


def test_compare_reports_failures():
    r = bound_report(2)
    tiny = type(r)(r.n, r.g_n, r.h_n, r.x, r.M, r.m, r.N_new, BigBound.of_int(1, "lower"))
    c = compare_bounds(2, tiny)
    assert not c.all_true and not c.links["N < (sqrt 2)^m"]
