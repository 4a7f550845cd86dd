"""The explicit bound functions f, g, h and the size N of the main theorem.

N(n) = x (5m)^(x+1) with x = R(h(n,g(n),n), n, n, g(n)) and
m = f(n, h(n,g(n),n), g(n)); the earlier bound is R(m,m), which Spencer's
inequality bounds below by (sqrt 2)^m once m >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bigbound import BigBound, bb_add, bb_log2, bb_mul, bb_pow, bb_pow2
from .errors import InputError
from .ramsey import Size, ramsey_upper


def _need_int(name: str, v: int, lo: int) -> None:
    if not isinstance(v, int) or v < lo:
        raise InputError(f"{name} must be an integer >= {lo}, got {v!r}")


def g_fn(n: int) -> BigBound:
    """4^(n-2) (n+1) + 2(n-2) + 1, defined for n >= 2."""
    _need_int("n", n, 2)
    return BigBound.of_int(4 ** (n - 2) * (n + 1) + 2 * (n - 2) + 1)


def h_fn(n: int, nprime: Size, i: int) -> BigBound:
    """h(n,n',2) = n and h(n,n',i) = (n-1) R(n x7, n' x2, h(n,n',i-1)) + 1."""
    _need_int("n", n, 1)
    _need_int("i", i, 2)
    if not isinstance(nprime, BigBound):
        _need_int("nprime", nprime, 1)
    h = BigBound.of_int(n)
    if n == 1:
        return h
    for _ in range(i - 2):
        r = ramsey_upper((n,) * 7 + (nprime, nprime, h))
        h = bb_add(bb_mul(n - 1, r), 1)
    return h


def _ramsey_m(n: int, n1: Size, n2: Size) -> BigBound:
    return ramsey_upper((bb_add(n1, n), 2 * n - 1, bb_add(n2, n), bb_add(n2, n - 1)))


def f_fn(n: int, n1: Size, n2: Size) -> BigBound:
    """2^(M+1) with M = R(n1+n, 2n-1, n+n2, n+n2-1)."""
    _need_int("n", n, 1)
    for name, v in (("n1", n1), ("n2", n2)):
        if not isinstance(v, BigBound):
            _need_int(name, v, 1)
    m_exp = _ramsey_m(n, n1, n2)
    return bb_pow2(bb_add(m_exp, 1))


@dataclass(frozen=True)
class BoundReport:
    n: int
    g_n: BigBound
    h_n: BigBound
    x: BigBound
    M: BigBound
    m: BigBound
    N_new: BigBound
    N_ckos_lower: BigBound

    def to_json(self) -> dict:
        out: dict = {"n": self.n}
        for name in ("g_n", "h_n", "x", "M", "m", "N_new", "N_ckos_lower"):
            out[name] = getattr(self, name).to_json()
        return out


def _unwrap(v: BigBound) -> Size:
    return v.as_int() if v.is_int and v.exact else v


def bound_report(n: int) -> BoundReport:
    _need_int("n", n, 2)
    g = g_fn(n)
    gi = g.as_int()
    h = h_fn(n, gi, n)
    x = ramsey_upper((_unwrap(h), n, n, gi))
    big_m = _ramsey_m(n, _unwrap(h), gi)
    m = bb_pow2(bb_add(big_m, 1))
    n_new = bb_mul(x, bb_pow(bb_mul(5, m), bb_add(x, 1)))
    # (sqrt 2)^m = 2^(m/2) and m/2 = 2^M
    ckos = bb_pow2(bb_pow2(big_m)).with_polarity("lower")
    return BoundReport(n, g, h, x, big_m, m, n_new, ckos)


@dataclass(frozen=True)
class BoundComparison:
    n: int
    links: dict[str, bool] = field(default_factory=dict)

    @property
    def all_true(self) -> bool:
        return all(self.links.values())

    def to_json(self) -> dict:
        return {"n": self.n, "links": dict(self.links), "all_true": self.all_true}


LINKS = (
    "m >= 2",
    "x <= log2 m",
    "N <= (log2 m)(5m)^(2 log2 m + 1)",
    "(log2 m)(5m)^(2 log2 m + 1) < (sqrt 2)^m",
    "N < (sqrt 2)^m",
)


def compare_bounds(n: int, report: BoundReport | None = None) -> BoundComparison:
    """Check each link of x(5m)^(x+1) <= (log2 m)(5m)^(2 log2 m + 1) < (sqrt 2)^m.

    Every comparison is certified by outward-rounded interval arithmetic; a
    link is reported False when it fails or cannot be decided.
    """
    r = bound_report(n) if report is None else report
    log_m = bb_log2(r.m)
    middle = bb_mul(log_m, bb_pow(bb_mul(5, r.m), bb_add(bb_mul(2, log_m), 1)))
    links = {
        LINKS[0]: BigBound.of_int(2).certainly_le(r.m),
        LINKS[1]: r.x.certainly_le(log_m),
        LINKS[2]: r.N_new.certainly_le(middle),
        LINKS[3]: middle.certainly_lt(r.N_ckos_lower),
        LINKS[4]: r.N_new.certainly_lt(r.N_ckos_lower),
    }
    return BoundComparison(r.n, links)

