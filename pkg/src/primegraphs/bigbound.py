"""Certified magnitudes for numbers far beyond positional representation.

A :class:`BigBound` names one definite number ``V``. It stores ``V`` itself
when ``V`` is a modest integer, and otherwise an interval enclosing the
``level``-fold iterated log2 of ``V``. Intervals come from mpmath's interval
context, which rounds outward, so a comparison answered ``True`` is a proof;
an undecided comparison answers ``False``.

``polarity`` relates ``V`` to the quantity it stands for: ``"exact"`` when
``V`` is that quantity, ``"upper"`` / ``"lower"`` when ``V`` only bounds it
from above / below (e.g. a Ramsey number estimated by a recurrence).
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import libmp
from mpmath.ctx_iv import MPIntervalContext

IV = MPIntervalContext()
IV.prec = 192

#: ints wider than this many bits are carried as a log2 interval instead
INT_BITS_LIMIT = 1 << 13
#: refuse to exponentiate intervals whose upper end exceeds 2**POW_EXP_LIMIT
POW_EXP_LIMIT = 1 << 12
MAX_LEVEL = 3

_POW_CAP = libmp.from_int(1 << POW_EXP_LIMIT)
POLARITIES = ("exact", "upper", "lower")
_IVMPF = type(IV.mpf(0))


def ival(x):
    return x if isinstance(x, _IVMPF) else IV.mpf(x)


def _lo(x):
    return ival(x)._mpi_[0]


def _hi(x):
    return ival(x)._mpi_[1]


def _raw_str(t) -> str:
    if t == libmp.finf:
        return "inf"
    if t == libmp.fninf:
        return "-inf"
    sign, man, exp, _ = t
    s = f"{'-' if sign else ''}{man}"
    return s if exp == 0 else f"{s}*2^{exp}"


def interval_json(x) -> list[str]:
    """Exact endpoints as ``"man*2^exp"`` strings (binary rationals)."""
    return [_raw_str(_lo(x)), _raw_str(_hi(x))]


def interval_str(x, digits: int = 10) -> str:
    lo, hi = (libmp.to_str(t, digits) for t in (_lo(x), _hi(x)))
    return lo if lo == hi else f"[{lo}, {hi}]"


def pow2_interval(x):
    x = ival(x)
    if libmp.mpf_gt(_hi(x), _POW_CAP):
        raise OverflowError("interval too large to exponentiate")
    return IV.mpf(2) ** x


def log2_interval(x):
    """Enclosure of log2 over the positive part of ``x`` (lower end -inf if x reaches 0)."""
    x = ival(x)
    if not libmp.mpf_gt(_hi(x), libmp.fzero):
        return IV.mpf(["-inf", "-inf"])
    if not libmp.mpf_gt(_lo(x), libmp.fzero):
        return IV.mpf(["-inf", IV.log(x.b, 2).b])
    return IV.log(x, 2)


def combine(*polarities: str) -> str:
    """Polarity of a monotone increasing function of the operands."""
    ps = set(polarities) - {"exact"}
    if not ps:
        return "exact"
    if len(ps) == 1:
        return ps.pop()
    raise ValueError("cannot combine upper and lower bounds")


@dataclass(frozen=True)
class BigBound:
    level: int
    value: int | None = None  # exact integer, level 0 only
    log: object = None  # interval enclosing log2^level of the number
    polarity: str = "exact"

    def __post_init__(self):
        if self.polarity not in POLARITIES:
            raise ValueError(f"unknown polarity {self.polarity!r}")
        if self.value is None and self.log is None:
            raise ValueError("a BigBound needs a value or an interval")
        if not 0 <= self.level <= MAX_LEVEL:
            raise OverflowError(f"level {self.level} out of range")

    # -- constructors ------------------------------------------------------------

    @classmethod
    def of_int(cls, v: int, polarity: str = "exact") -> BigBound:
        if v < 0:
            raise ValueError("magnitudes are nonnegative")
        if v.bit_length() > INT_BITS_LIMIT:
            return cls(0, log=IV.mpf(v), polarity=polarity)
        return cls(0, value=v, polarity=polarity)

    @classmethod
    def of_interval(cls, level: int, interval, polarity: str = "exact") -> BigBound:
        return cls(level, log=ival(interval), polarity=polarity)

    # -- views ----------------------------------------------------------------------

    @property
    def exact(self) -> bool:
        return self.polarity == "exact"

    @property
    def is_int(self) -> bool:
        return self.value is not None

    def as_int(self) -> int:
        if self.value is None:
            raise OverflowError("number is only known as an interval")
        return self.value

    def interval(self, level: int):
        """Interval enclosing the ``level``-fold log2 of this number."""
        x = IV.mpf(self.value) if self.value is not None else self.log
        k = self.level
        while k > level:
            x = pow2_interval(x)
            k -= 1
        while k < level:
            x = log2_interval(x)
            k += 1
        return x

    def with_polarity(self, polarity: str) -> BigBound:
        return BigBound(self.level, self.value, self.log, polarity)

    def _normal(self) -> BigBound:
        """Drop to the lowest level whose interval mpmath can hold."""
        b = self
        while b.value is None and b.level > 0:
            try:
                x = pow2_interval(b.log)
            except OverflowError:
                break
            b = BigBound(b.level - 1, log=x, polarity=b.polarity)
        return b

    # -- comparison --------------------------------------------------------------

    def certainly_le(self, other: BigBound) -> bool:
        return _cmp(self, other, strict=False)

    def certainly_lt(self, other: BigBound) -> bool:
        return _cmp(self, other, strict=True)

    # -- output ----------------------------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {"exact": self.exact, "polarity": self.polarity}
        if self.value is not None:
            out["value"] = str(self.value)
            return out
        key = ("interval", "log2", "log2log2", "log2log2log2")[self.level]
        out[key] = interval_json(self.log)
        out["approx"] = interval_str(self.log)
        return out

    def __str__(self) -> str:
        tag = "" if self.exact else f" ({self.polarity} bound)"
        if self.value is not None:
            s = str(self.value)
            if len(s) > 40:
                s = f"{s[:12]}...{s[-6:]} ({len(s)} digits)"
            return s + tag
        return f"{'2^' * self.level}{interval_str(self.log, 8)}{tag}"


def _cmp(a: BigBound, b: BigBound, strict: bool) -> bool:
    if a.value is not None and b.value is not None:
        return a.value < b.value if strict else a.value <= b.value
    # log2 is increasing, so comparing enclosures of iterated logs is sound
    level = max(a.level, b.level)
    ha, lb = _hi(a.interval(level)), _lo(b.interval(level))
    return libmp.mpf_lt(ha, lb) if strict else libmp.mpf_le(ha, lb)


def _int(x: BigBound | int) -> BigBound:
    return x if isinstance(x, BigBound) else BigBound.of_int(x)


def bb_add(x: BigBound | int, y: BigBound | int) -> BigBound:
    x, y = _int(x), _int(y)
    pol = combine(x.polarity, y.polarity)
    if x.value is not None and y.value is not None:
        return BigBound.of_int(x.value + y.value, pol)
    if x.value == 0:
        return y.with_polarity(pol)
    if y.value == 0:
        return x.with_polarity(pol)
    # log2(X + Y) = log2 X + log2(1 + 2^(log2 Y - log2 X))
    lx, ly = x.interval(1), y.interval(1)
    if libmp.mpf_lt(_hi(lx), _lo(ly)):
        lx, ly = ly, lx
    return BigBound(1, log=lx + log2_interval(1 + pow2_interval(ly - lx)), polarity=pol)._normal()


def bb_mul(x: BigBound | int, y: BigBound | int) -> BigBound:
    x, y = _int(x), _int(y)
    pol = combine(x.polarity, y.polarity)
    if x.value is not None and y.value is not None:
        return BigBound.of_int(x.value * y.value, pol)
    if x.value == 0 or y.value == 0:
        return BigBound.of_int(0, pol)
    try:
        return BigBound(1, log=x.interval(1) + y.interval(1), polarity=pol)._normal()
    except OverflowError:
        # log2 log2 (XY) = log2(log2 X + log2 Y), one level up
        return BigBound(2, log=bb_add(bb_log2(x), bb_log2(y)).interval(1), polarity=pol)


def bb_pow2(e: BigBound | int) -> BigBound:
    """2 ** e."""
    e = _int(e)._normal()
    if e.value is not None and e.value <= INT_BITS_LIMIT:
        return BigBound.of_int(1 << e.value, e.polarity)
    if e.value is not None:
        return BigBound(1, log=IV.mpf(e.value), polarity=e.polarity)._normal()
    return BigBound(e.level + 1, log=e.log, polarity=e.polarity)._normal()


def bb_log2(x: BigBound | int) -> BigBound:
    """log2 of the number, exact when it is a power of two."""
    x = _int(x)
    if x.value is not None:
        v = x.value
        if v > 0 and v & (v - 1) == 0:
            return BigBound.of_int(v.bit_length() - 1, x.polarity)
        return BigBound(0, log=log2_interval(IV.mpf(v)), polarity=x.polarity)
    if x.level == 0:
        return BigBound(0, log=log2_interval(x.log), polarity=x.polarity)
    return BigBound(x.level - 1, log=x.log, polarity=x.polarity)._normal()


def bb_pow(base: BigBound | int, e: BigBound | int) -> BigBound:
    """base ** e for base >= 1."""
    base, e = _int(base), _int(e)
    pol = combine(base.polarity, e.polarity)
    if base.value is not None and e.value is not None:
        if e.value * max(base.value.bit_length(), 1) <= INT_BITS_LIMIT:
            return BigBound.of_int(base.value ** e.value, pol)
    if base.value == 1 or e.value == 0:
        return BigBound.of_int(1, pol)
    # log2(base^e) = e * log2(base)
    return bb_pow2(bb_mul(e, bb_log2(base))).with_polarity(pol)
