"""Classification of interval tuples (stable / connected / prime) and the
greedy decomposition of a stable tuple into prime factors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Interval, Snake, is_trivial
from .errors import FalsifiedInvariantError, NotAlternatingError, PreconditionError


@lru_cache(maxsize=None)
def epsilon_sequence(s: Snake) -> tuple[int, ...]:
    """The alternation bits, one per position.

    At each adjacent pair either both endpoints drop (bit 0) or both rise
    (bit 1); the final bit is forced by alternation.  A single interval gets
    bit 0 by convention.
    """
    if s.r == 1:
        return (0,)
    eps = []
    for p in range(1, s.r):
        a, b = s.iv(p), s.iv(p + 1)
        if b.i < a.i and b.j < a.j:
            eps.append(0)
        elif a.i < b.i and a.j < b.j:
            eps.append(1)
        else:
            raise NotAlternatingError(
                "no alternation bit at position %d of %s" % (p, s))
    for p in range(len(eps) - 1):
        if eps[p] + eps[p + 1] != 1:
            raise NotAlternatingError("alternation breaks at position %d of %s" % (p + 1, s))
    eps.append(1 - eps[-1])
    return tuple(eps)


@dataclass(frozen=True)
class SnakeClassification:
    stable: bool
    connected: bool
    prime: bool
    eps: tuple[int, ...] | None


@lru_cache(maxsize=None)
def classify(s: Snake) -> SnakeClassification:
    n, r = s.n, s.r
    # degenerate members would be invisible in the monoid, so they are
    # rejected outright
    if any(is_trivial(iv, n) for iv in s.intervals):
        return SnakeClassification(False, False, False, None)
    if len(set(s.intervals)) != r:
        return SnakeClassification(False, False, False, None)
    try:
        eps = epsilon_sequence(s)
    except NotAlternatingError:
        return SnakeClassification(False, False, False, None)
    for p in range(1, r - 1):
        for t in range(p + 2, r + 1):
            a, b = s.iv(p), s.iv(t)
            if not (a.i <= b.i < b.j <= a.j):
                return SnakeClassification(False, False, False, None)
    connected = True
    for p in range(1, r):
        e = eps[p - 1]
        lo, hi = s.iv(p + 1 - e), s.iv(p + e)
        if not (lo.i < hi.i <= lo.j < hi.j and hi.j - lo.i <= n + 1):
            connected = False
            break
    prime = connected and all(
        s.iv(t).i != s.iv(t + 2).i and s.iv(t).j != s.iv(t + 2).j
        for t in range(1, r - 1))
    return SnakeClassification(True, connected, prime, eps)


def is_stable(s: Snake) -> bool:
    return classify(s).stable


def is_connected(s: Snake) -> bool:
    return classify(s).connected


def is_prime(s: Snake) -> bool:
    return classify(s).prime


def require_prime(s: Snake) -> SnakeClassification:
    c = classify(s)
    if not c.prime:
        raise PreconditionError("snake is not prime: %s" % s)
    return c


def _cut_qualifies(s: Snake, p: int) -> bool:
    """Whether the prefix ending at position p splits off as a prime factor."""
    eps = epsilon_sequence(s)
    e = eps[p - 1]
    pair = Snake(s.n, (s.iv(p), s.iv(p + 1)))
    if not classify(pair).connected:
        return True
    iv = s.iv

    def a(t, which):
        return iv(t).i if which == "i" else iv(t).j

    if p - 1 >= 1 and p + 1 <= s.r:
        for x, y in (("i", "j"), ("j", "i")):
            if a(p - 1, x) == a(p + 1, x) and a(p + 1 - 2 * e, y) < a(p - 1 + 2 * e, y):
                return True
    if p + 2 <= s.r:
        for x, y in (("i", "j"), ("j", "i")):
            if a(p, x) == a(p + 2, x) and a(p + 2 - 2 * e, y) < a(p + 2 * e, y):
                return True
    return False


def prime_factor_decomposition(s: Snake) -> list[Snake]:
    """Greedy left-to-right split into prime factors; concatenation recovers s."""
    c = classify(s)
    if not c.stable:
        raise PreconditionError("snake is not stable: %s" % s)
    out = []
    rest = s
    while True:
        cut = None
        for p in range(1, rest.r):
            if classify(rest.subsnake(1, p)).prime and _cut_qualifies(rest, p):
                cut = p
                break
        if cut is None:
            if not classify(rest).prime:
                raise FalsifiedInvariantError(
                    "no qualifying cut in non-prime snake %s" % rest)
            out.append(rest)
            break
        out.append(rest.subsnake(1, cut))
        rest = rest.subsnake(cut + 1, rest.r)
    assert Snake(s.n, sum((f.intervals for f in out), ())) == s
    return out


def check_enumeration(s: Snake) -> bool:
    """Verify the interleaving chains and the four extremal positions."""
    require_prime(s)
    r = s.r
    if r == 1:
        return True
    eps = epsilon_sequence(s)
    iv = s.iv

    def ok(chain, chain_val):
        # comparisons between positions three apart are non-strict, all
        # others strict
        for p, q in zip(chain, chain[1:]):
            if not (1 <= p <= r and 1 <= q <= r):
                continue
            lhs, rhs = chain_val(p), chain_val(q)
            if abs(q - p) == 3:
                if not lhs <= rhs:
                    return False
            elif not lhs < rhs:
                return False
        return True

    for t in range(1, r + 1):
        e = eps[t - 1]
        chain = (t + 1 - e, t + 2 * e, t + 3 - 2 * e, t + 2 + 2 * e)
        if not ok(chain, lambda p: iv(p).i):
            return False
        chain = (t + 4 - 2 * e, t + 1 + 2 * e, t + 2 - 2 * e, t + e)
        if not ok(chain, lambda p: iv(p).j):
            return False

    imin_pos, jmax_pos = 2 - eps[0], 1 + eps[0]
    imax_pos, jmin_pos = r - eps[-1], r - 1 + eps[-1]
    for p in range(1, r + 1):
        if p != imin_pos and not iv(imin_pos).i < iv(p).i:
            return False
        if p != imax_pos and not iv(p).i < iv(imax_pos).i:
            return False
        if p != jmax_pos and not iv(p).j < iv(jmax_pos).j:
            return False
        if p != jmin_pos and not iv(jmin_pos).j < iv(p).j:
            return False
    return True
