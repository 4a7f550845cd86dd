"""Multicolour Ramsey numbers: brute force, exact small values, recurrence bounds.

Only values this module can re-derive by brute force go into the exact
table: any target of size 1 gives 1, colours asking for 2 can be dropped,
a single colour asking for s gives s, and R(3,3) = 6.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from functools import lru_cache
from itertools import combinations
from math import factorial, prod

from .bigbound import BigBound, bb_add, bb_log2, bb_mul, bb_pow2, combine
from .errors import Budget, BudgetExhausted, InputError, Refusal, as_budget
from .graph import bits

Size = int | BigBound

#: default node budget for brute force
BRUTE_FORCE_BUDGET = 5_000_000
#: recurrence is memoised only while the product of the sizes stays below this
RECURRENCE_STATES = 200_000
#: above this total the multinomial is replaced by S ** r'
MULTINOMIAL_LIMIT = 4000


def check_sizes(sizes: Sequence[Size]) -> tuple[Size, ...]:
    sizes = tuple(sizes)
    if not sizes:
        raise InputError("need at least one colour")
    for s in sizes:
        if isinstance(s, BigBound):
            continue
        if not isinstance(s, int) or s < 1:
            raise InputError(f"clique sizes must be integers >= 1, got {s!r}")
    return sizes


def _has_clique(adj: list[int], cand: int, need: int) -> bool:
    if need <= 0:
        return True
    if cand.bit_count() < need:
        return False
    for v in bits(cand):
        cand &= ~(1 << v)
        if _has_clique(adj, cand & adj[v], need - 1):
            return True
    return False


def brute_force_ramsey_holds(sizes: Sequence[int], m: int, budget: Budget | int | None = BRUTE_FORCE_BUDGET) -> bool:
    """Does every colouring of K_m contain a colour-i clique of size sizes[i] for some i?

    Backtracks over edge colourings (edges ordered so that each new vertex is
    completed before the next), pruning a branch as soon as it creates a
    forced clique. Among colours with equal targets the first edge only takes
    the lowest, since swapping such colours maps avoiding colourings to
    avoiding colourings.
    """
    sizes = check_sizes(sizes)
    if any(isinstance(s, BigBound) for s in sizes):
        raise InputError("brute force needs integer sizes")
    if m < 1:
        raise InputError("m must be >= 1")
    if min(sizes) == 1:
        return True
    budget = as_budget(budget)
    k = len(sizes)
    edges = [(u, v) for v in range(m) for u in range(v)]
    first_colours = [c for c in range(k) if sizes[c] not in sizes[:c]]
    adj = [[0] * m for _ in range(k)]

    def avoid(e: int) -> bool:
        if e == len(edges):
            return True
        budget.tick()
        u, v = edges[e]
        for c in first_colours if e == 0 else range(k):
            a = adj[c]
            if _has_clique(a, a[u] & a[v], sizes[c] - 2):
                continue
            a[u] |= 1 << v
            a[v] |= 1 << u
            ok = avoid(e + 1)
            a[u] &= ~(1 << v)
            a[v] &= ~(1 << u)
            if ok:
                return True
        return False

    try:
        return not avoid(0)
    except BudgetExhausted:
        raise Refusal(f"brute force for R{tuple(sizes)} at m={m} exceeds the budget") from None


def _normalise(sizes: tuple[int, ...]) -> tuple[int, ...] | int:
    """Sorted sizes with 2s dropped, or the answer itself when it is immediate."""
    if min(sizes) == 1:
        return 1
    rest = tuple(sorted((s for s in sizes if s != 2), reverse=True))
    if not rest:
        return 2
    if len(rest) == 1:
        return rest[0]
    return rest


def ramsey_exact(sizes: Sequence[int]) -> int | None:
    """The exact Ramsey number when it is in the self-verified table, else None."""
    sizes = check_sizes(sizes)
    if any(isinstance(s, BigBound) for s in sizes):
        return None
    r = _normalise(sizes)
    if isinstance(r, int):
        return r
    if r == (3, 3):
        return 6
    return None


@lru_cache(maxsize=None)
def _recurrence(sizes: tuple[int, ...]) -> int:
    r = _normalise(sizes)
    if isinstance(r, int):
        return r
    if r == (3, 3):
        return 6
    k = len(r)
    total = 2 - k
    for i in range(k):
        total += _recurrence(r[:i] + (r[i] - 1,) + r[i + 1:])
    return total


def _multinomial(parts: Sequence[int]) -> int:
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


def ramsey_upper(sizes: Sequence[Size]) -> BigBound:
    """An upper bound on R(sizes), exact where the table applies.

    Regimes, in order of growing sizes: the table; the recurrence
    R(s) <= 2 - k + sum_i R(s - e_i); the multinomial S! / prod (s_i - 1)!
    with S = sum (s_i - 1); and S ** (S - max_i (s_i - 1)). Each regime
    dominates the previous one, so the result is monotone in every size.
    Astronomical sizes may be passed as BigBounds; they are then replaced by
    s itself rather than s - 1, which only loosens the bound.
    """
    sizes = check_sizes(sizes)
    ints = []
    big = []
    for s in sizes:
        if isinstance(s, BigBound):
            if s.is_int:
                ints.append(s.as_int())
                big.append(None)
                continue
            big.append(s)
        else:
            ints.append(s)
    big = [b for b in big if b is not None]
    pol = combine(*(b.polarity for b in sizes if isinstance(b, BigBound)))
    if pol == "lower":
        raise InputError("an upper bound cannot be built from lower-bounded sizes")
    if not big:
        return _upper_int(tuple(ints), pol)
    if ints and min(ints) == 1:
        return BigBound.of_int(1, pol)
    # S ** r' with r' = S - (largest part); the largest part is taken to be a
    # certainly-largest BigBound when there is one, else r' is replaced by S
    parts_int = [s - 1 for s in ints if s != 2]
    total: BigBound = BigBound.of_int(sum(parts_int))
    for b in big:
        total = bb_add(total, b)
    largest = None
    for b in big:
        if all(b is o or o.certainly_le(b) for o in big) and all(BigBound.of_int(p).certainly_le(b) for p in parts_int):
            largest = b
            break
    if largest is None:
        rest = total
    else:
        rest = BigBound.of_int(sum(parts_int))
        for b in big:
            if b is not largest:
                rest = bb_add(rest, b)
    if rest.is_int and rest.as_int() == 0:
        # one colour left: R(s) = s
        return total.with_polarity(pol if largest is None else largest.polarity)
    return bb_pow2(bb_mul(rest, bb_log2(total))).with_polarity("upper")


def _upper_int(sizes: tuple[int, ...], pol: str) -> BigBound:
    exact = ramsey_exact(sizes)
    if exact is not None:
        return BigBound.of_int(exact, pol)
    r = _normalise(sizes)
    assert isinstance(r, tuple)
    parts = [s - 1 for s in r]
    total = sum(parts)
    if total <= MULTINOMIAL_LIMIT and prod(r) <= RECURRENCE_STATES:
        return BigBound.of_int(_recurrence(r), "upper")
    if total <= MULTINOMIAL_LIMIT:
        return BigBound.of_int(_multinomial(parts), "upper")
    rest = total - max(parts)
    return bb_pow2(bb_mul(rest, bb_log2(total))).with_polarity("upper")


Colouring = Callable[[int, int], int]


def find_mono_clique(t: int, coloring: Colouring, sizes: Sequence[int]) -> tuple[int, list[int]] | None:
    """A colour c and sizes[c] indices in range(t) whose pairs all have colour c.

    ``coloring(i, j)`` is queried for i < j. Every colour class is searched
    exhaustively (lowest colour first, lexicographically least set), so None
    means no colour class contains a large enough clique; at t >= R(sizes)
    that cannot happen.
    """
    sizes = check_sizes(sizes)
    if t < 0:
        raise InputError("t must be >= 0")
    k = len(sizes)
    adj = [[0] * t for _ in range(k)]
    for i, j in combinations(range(t), 2):
        c = coloring(i, j)
        if not 0 <= c < k:
            raise InputError(f"colour {c!r} of pair {(i, j)} out of range")
        adj[c][i] |= 1 << j
        adj[c][j] |= 1 << i
    for c in range(k):
        found = _first_clique(adj[c], (1 << t) - 1, sizes[c])
        if found is not None:
            return c, found
    return None


def _first_clique(adj: list[int], cand: int, need: int) -> list[int] | None:
    if need == 0:
        return []
    for v in bits(cand):
        if (cand >> v).bit_count() < need:
            return None
        rest = _first_clique(adj, cand & adj[v] & ~((2 << v) - 1), need - 1)
        if rest is not None:
            return [v] + rest
    return None
