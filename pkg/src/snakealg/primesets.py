"""Interval sets attached to a prime snake, window snakes, and the prime and
distinguished descriptor sets used as the factorization alphabet."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Interval, MonoidElement, Snake, is_trivial
from .errors import FalsifiedInvariantError, PreconditionError
from .snakes import classify, epsilon_sequence, require_prime


def _gen(iv, n):
    return MonoidElement.generator(iv, n)


@lru_cache(maxsize=None)
def tilde_interval_set(s: Snake) -> frozenset[Interval]:
    """All [i_p, j_q] with q in the four-position window around p."""
    require_prime(s)
    if s.r < 3:
        raise PreconditionError("interval windows need length >= 3")
    eps = epsilon_sequence(s)
    out = set()
    for p in range(1, s.r + 1):
        e = eps[p - 1]
        for q in (p - 1 - e, p - e, p + 1 - e, p + 2 - e):
            if not 1 <= q <= s.r:
                continue
            iv = Interval(s.iv(p).i, s.iv(q).j)
            if 0 <= iv.j - iv.i <= s.n + 1:
                out.add(iv)
    return frozenset(out)


@lru_cache(maxsize=None)
def interval_set(s: Snake) -> frozenset[Interval]:
    tilde = tilde_interval_set(s)
    out = frozenset(iv for iv in tilde if not is_trivial(iv, s.n))
    if s.j_max - s.i_min == s.n + 1 and s.j_min == s.i_max:
        expected = tilde - {Interval(s.i_max, s.j_min), Interval(s.i_min, s.j_max)}
        if out != expected:
            raise FalsifiedInvariantError(
                "boundary interval set mismatch for %s: %s vs %s"
                % (s, sorted(out), sorted(expected)))
    return out


@lru_cache(maxsize=None)
def generator_intervals(s: Snake) -> frozenset[Interval]:
    """The generator alphabet of the submonoid attached to s, for any length."""
    require_prime(s)
    if s.r >= 3:
        return interval_set(s)
    if s.r == 2:
        a, b = s.iv(1), s.iv(2)
        cands = (a, b, Interval(a.i, b.j), Interval(b.i, a.j))
        return frozenset(iv for iv in cands if not is_trivial(iv, s.n))
    return frozenset({s.iv(1)})


def submonoid_member(w: MonoidElement, s: Snake) -> bool:
    gens = generator_intervals(s)
    return all(iv in gens for iv in w.support)


def closure_check(s: Snake) -> bool:
    """Connected pairs inside the set exchange endpoints within the set."""
    ivs = interval_set(s)
    tilde = tilde_interval_set(s)
    for big in ivs:
        for small in ivs:
            # connected pair with small strictly below big
            if not (small.i < big.i <= small.j < big.j and big.j - small.i <= s.n + 1):
                continue
            if Interval(big.i, small.j) not in tilde:
                return False
            if Interval(small.i, big.j) not in tilde:
                return False
    return True


@dataclass(frozen=True)
class WindowSnake:
    base: Snake
    p: int
    l: int
    e: int
    e2: int
    snake: Snake

    @property
    def weight(self) -> MonoidElement:
        return self.snake.weight


def window_admissible(s: Snake, e: int, e2: int, p: int, l: int) -> bool:
    """Side-term admissibility for membership in the prime descriptor set."""
    eps = epsilon_sequence(s)
    iv = s.iv
    # a side condition whose reference position falls off the snake forbids
    # the side term; such windows duplicate frozen pairs weight-for-weight
    if e == 1:
        if p < 1 or p + 3 > s.r:
            return False
        ep = eps[p - 1]
        if iv(p + ep).i == iv(p + 3).i or iv(p + 1 - ep).j == iv(p + 3).j:
            return False
    if e2 == 1:
        if l > s.r - 2 or l < 2:
            return False
        el = eps[l - 1]
        if iv(l - 1).i == iv(l + 1 + el).i or iv(l - 1).j == iv(l + 2 - el).j:
            return False
    return True


def window_snake(s: Snake, e: int, e2: int, p: int, l: int) -> WindowSnake:
    """The slice at positions p+2..l, optionally extended by one synthetic
    interval on each side.  The result is always prime."""
    require_prime(s)
    if not (-1 <= p and p + 2 <= l <= s.r):
        raise PreconditionError("bad window cuts p=%d l=%d for r=%d" % (p, l, s.r))
    if not window_admissible(s, e, e2, p, l):
        raise PreconditionError(
            "inadmissible window e=%d e2=%d p=%d l=%d for %s" % (e, e2, p, l, s))
    eps = epsilon_sequence(s)
    parts = []
    if e == 1:
        ep = eps[p - 1]
        parts.append(Interval(s.iv(p + ep).i, s.iv(p + 1 - ep).j))
    parts.extend(s.intervals[p + 1:l])
    if e2 == 1:
        el = eps[l - 1]
        parts.append(Interval(s.iv(l + 1 + el).i, s.iv(l + 2 - el).j))
    snake = Snake(s.n, tuple(parts))
    if not classify(snake).prime:
        raise FalsifiedInvariantError(
            "window e=%d e2=%d p=%d l=%d of %s materialized non-prime %s"
            % (e, e2, p, l, s, snake))
    return WindowSnake(s, p, l, e, e2, snake)


@dataclass(frozen=True)
class PrimeDescriptor:
    kind: str  # generator | window | pair | extremal
    payload: object
    weight: MonoidElement

    def intervals(self) -> tuple[Interval, ...]:
        if self.kind == "window":
            return self.payload.snake.intervals
        if self.kind == "pair":
            return self.payload
        return (self.payload,)

    def __str__(self):
        body = ",".join(str(iv) for iv in self.intervals())
        return "%s[%s]" % (self.kind, body)


def _descriptor(kind, payload, weight):
    return PrimeDescriptor(kind, payload, weight)


@lru_cache(maxsize=None)
def pr_set(s: Snake) -> tuple[PrimeDescriptor, ...]:
    require_prime(s)
    n = s.n
    out = []
    seen = set()

    def add(kind, payload, weight):
        if weight.is_one or weight in seen:
            return
        seen.add(weight)
        out.append(_descriptor(kind, payload, weight))

    if s.r <= 2:
        for iv in s.intervals:
            add("generator", iv, _gen(iv, n))
        return tuple(out)
    for iv in sorted(interval_set(s)):
        add("generator", iv, _gen(iv, n))
    for p in range(-1, s.r - 1):
        for l in range(p + 2, s.r + 1):
            for e in (0, 1):
                if e == 1 and p < 1:
                    continue
                for e2 in (0, 1):
                    if e2 == 1 and l > s.r - 2:
                        continue
                    if not window_admissible(s, e, e2, p, l):
                        continue
                    w = window_snake(s, e, e2, p, l)
                    add("window", w, w.weight)
    return tuple(out)


@lru_cache(maxsize=None)
def fr_set(s: Snake) -> tuple[PrimeDescriptor, ...]:
    require_prime(s)
    n, r = s.n, s.r
    iv = s.iv
    out = []
    seen = set()

    def add_pair(a, b):
        w = _gen(a, n) * _gen(b, n)
        if w.is_one or w in seen:
            return
        seen.add(w)
        out.append(_descriptor("pair", (a, b), w))

    def add_single(a):
        w = _gen(a, n)
        if w.is_one or w in seen:
            return
        seen.add(w)
        out.append(_descriptor("extremal", a, w))

    if r == 1:
        return ()
    if r == 2:
        add_pair(iv(1), iv(2))
        add_single(Interval(iv(1).i, iv(2).j))
        add_single(Interval(iv(2).i, iv(1).j))
        return tuple(out)
    eps = epsilon_sequence(s)
    add_single(Interval(s.i_min, s.j_max))
    add_single(Interval(s.i_max, s.j_min))
    e1, er = eps[0], eps[-1]
    add_pair(iv(1), Interval(iv(2 + e1).i, iv(3 - e1).j))
    for t in range(2, r):
        e = eps[t - 1]
        add_pair(iv(t), Interval(iv(t + 1 - 2 * e).i, iv(t - 1 + 2 * e).j))
    add_pair(iv(r), Interval(iv(r - 2 + er).i, iv(r - 1 - er).j))
    for t in range(2, r - 1):
        if iv(t - 1).i == iv(t + 2).i or iv(t - 1).j == iv(t + 2).j:
            continue
        e = eps[t - 1]
        add_pair(
            Interval(iv(t - e).i, iv(t - 1 + e).j),
            Interval(iv(t + 1 + e).i, iv(t + 2 - e).j))
    return tuple(out)


@lru_cache(maxsize=None)
def descriptor_index(s: Snake) -> dict:
    """Weight to descriptor over the full alphabet; identity is the weight."""
    index = {}
    for d in pr_set(s) + fr_set(s):
        index.setdefault(d.weight, d)
    return index


def lookup_descriptor(w: MonoidElement, s: Snake) -> PrimeDescriptor:
    d = descriptor_index(s).get(w)
    if d is None:
        raise FalsifiedInvariantError(
            "weight %s is not a prime descriptor of %s" % (w, s))
    return d
