"""Canonical factorization of monoid elements into prime descriptors.

The engine below is a case ledger.  It is written for snakes whose first
alternation bit is 0; the other orientation is handled by conjugating with
the coordinate reflection, which is an involution on everything in sight.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Interval, MonoidElement, Snake, is_trivial
from .errors import FalsifiedInvariantError, PreconditionError
from .primesets import (PrimeDescriptor, descriptor_index, generator_intervals,
                        lookup_descriptor, submonoid_member, window_admissible,
                        window_snake)
from .snakes import epsilon_sequence, require_prime


def canonical_order(w: MonoidElement) -> list[Interval]:
    """Word ordering with weakly decreasing endpoint sums, ties lexicographic."""
    word = []
    for iv, e in w.exps:
        word.extend([iv] * e)
    word.sort(key=lambda iv: (-(iv.i + iv.j), iv.i, iv.j))
    return word


@dataclass(frozen=True)
class Profile:
    a1: int
    a2: int
    a3: int
    b: int
    rest: MonoidElement


def _profile_generators(s: Snake) -> tuple[Interval, Interval, Interval, Interval]:
    e1 = epsilon_sequence(s)[0]
    iv = s.iv
    return (iv(1),
            Interval(iv(1 + e1).i, iv(2 - e1).j),
            Interval(iv(1 + 2 * e1).i, iv(3 - 2 * e1).j),
            Interval(iv(2 - e1).i, iv(1 + e1).j))


def extract_profile(w: MonoidElement, s: Snake) -> Profile:
    """Split off the exponents of the four head generators; any generator that
    also belongs to the tail alphabet counts toward the remainder instead."""
    require_prime(s)
    if s.r < 3:
        raise PreconditionError("profiles need length >= 3")
    if not submonoid_member(w, s):
        raise PreconditionError("element %s is outside the submonoid of %s" % (w, s))
    tail_gens = generator_intervals(s.subsnake(2, s.r))
    if all(iv in tail_gens for iv in w.support):
        raise PreconditionError("element %s already lives over the tail of %s" % (w, s))
    gs = _profile_generators(s)
    exps = []
    rest = w
    for g in gs:
        if g in tail_gens or is_trivial(g, s.n):
            exps.append(0)
            continue
        e = w.exponent(g)
        exps.append(e)
        if e:
            rest = rest.quotient(MonoidElement.generator(g, s.n).pow(e))
    if not submonoid_member(rest, s.subsnake(2, s.r)):
        raise FalsifiedInvariantError(
            "profile remainder %s of %s escapes the tail alphabet" % (rest, s))
    return Profile(exps[0], exps[1], exps[2], exps[3], rest)


@dataclass(frozen=True)
class Factorization:
    factors: tuple[PrimeDescriptor, ...]

    @property
    def weight(self) -> MonoidElement:
        if not self.factors:
            raise PreconditionError("empty factorization has no intrinsic rank")
        w = MonoidElement.one(self.factors[0].weight.n)
        for d in self.factors:
            w = w * d.weight
        return w

    def weight_multiset(self) -> tuple[MonoidElement, ...]:
        return tuple(sorted((d.weight for d in self.factors),
                            key=lambda x: x.exps))

    def __len__(self):
        return len(self.factors)


def _sorted_factors(ds):
    return tuple(sorted(ds, key=lambda d: (-d.weight.ht, d.weight.exps)))


def _lift(weights, s):
    return [lookup_descriptor(w, s) for w in weights]


@lru_cache(maxsize=None)
def factor(w: MonoidElement, s: Snake) -> Factorization:
    """The canonical prime factorization of w over s."""
    require_prime(s)
    if not submonoid_member(w, s):
        raise PreconditionError("element %s is outside the submonoid of %s" % (w, s))
    factors = _factor(w, s)
    total = MonoidElement.one(s.n)
    for d in factors:
        total = total * d.weight
    if total != w:
        raise FalsifiedInvariantError(
            "weight recovery failed for %s over %s: got %s" % (w, s, total))
    return Factorization(_sorted_factors(factors))


def _gen(iv, n):
    return MonoidElement.generator(iv, n)


def _factor(w: MonoidElement, s: Snake) -> list[PrimeDescriptor]:
    if w.is_one:
        return []
    n = s.n
    if s.r == 1:
        return [lookup_descriptor(_gen(s.iv(1), n), s)] * w.ht
    if s.r == 2:
        return _factor_rank2(w, s)
    if epsilon_sequence(s)[0] == 1:
        mirrored = factor(w.reflect(), s.reflect())
        return _lift([d.weight.reflect() for d in mirrored.factors], s)
    return _factor_head(w, s)


def _factor_rank2(w, s):
    n = s.n
    a, b = s.iv(1), s.iv(2)
    cross1, cross2 = Interval(a.i, b.j), Interval(b.i, a.j)
    e11, e22 = w.exponent(a), w.exponent(b)
    pairs = min(e11, e22)
    out = []
    if pairs:
        out += [lookup_descriptor(_gen(a, n) * _gen(b, n), s)] * pairs
    out += [lookup_descriptor(_gen(a, n), s)] * (e11 - pairs)
    out += [lookup_descriptor(_gen(b, n), s)] * (e22 - pairs)
    for cross in (cross1, cross2):
        e = 0 if is_trivial(cross, n) else w.exponent(cross)
        if e:
            out += [lookup_descriptor(_gen(cross, n), s)] * e
    return out


def _factor_head(w, s):
    """The main ledger; assumes r >= 3 and first alternation bit 0."""
    n = s.n
    tail = s.subsnake(2, s.r)
    tail_gens = generator_intervals(tail)
    if all(iv in tail_gens for iv in w.support):
        return _lift([d.weight for d in factor(w, tail).factors], s)

    iv = s.iv
    g1 = iv(1)
    g2 = Interval(iv(1).i, iv(2).j)
    g3 = Interval(iv(1).i, iv(3).j)
    g4 = Interval(iv(2).i, iv(1).j)
    g22 = iv(2)
    g23 = Interval(iv(2).i, iv(3).j)
    w1, w2, w3 = _gen(g1, n), _gen(g2, n), _gen(g3, n)
    w22, w23 = _gen(g22, n), _gen(g23, n)

    # anti-connected extremal generator splits off freely
    if not is_trivial(g4, n):
        b = w.exponent(g4)
        if b:
            d = lookup_descriptor(_gen(g4, n), s)
            return [d] * b + _factor(w.quotient(_gen(g4, n).pow(b)), s)

    # the long head generator: alone, or paired with the second interval
    q = w.quotient(w3)
    if q is not None:
        if q.quotient(w22) is not None:
            return [lookup_descriptor(w3 * w22, s)] + _factor(w.quotient(w3 * w22), s)
        return [lookup_descriptor(w3, s)] + _factor(q, s)

    # the deep cross generator: paired with the head interval when present
    if not is_trivial(g23, n):
        q = w.quotient(w23)
        if q is not None:
            if w.exponent(g1) >= 1:
                return [lookup_descriptor(w1 * w23, s)] + _factor(w.quotient(w1 * w23), s)
            return [lookup_descriptor(w23, s)] + _factor(q, s)

    a1 = w.exponent(g1)
    a2 = 0 if g2 in tail_gens else w.exponent(g2)
    c = w.exponent(g22)

    if a1 > c:
        d = lookup_descriptor(w1, s)
        return [d] * (a1 - c) + _factor(w.quotient(w1.pow(a1 - c)), s)

    if a2 > 0:
        # peel the slanted prefix through the extended snake of length r-1
        shat = Snake(n, (g2,) + s.intervals[2:])
        what = w.quotient(w1.pow(a1) * w22.pow(c) * w2.pow(a2)) * w2.pow(a2)
        inner = factor(what, shat)
        special = [d for d in inner.factors if d.weight.exponent(g2) >= 1]
        if not special:
            raise FalsifiedInvariantError(
                "no prefix-bearing factor for %s over %s" % (what, shat))
        emitted = MonoidElement.one(n)
        for d in special:
            emitted = emitted * d.weight
        out = _lift([d.weight for d in special], s)
        return out + _factor(w.quotient(emitted), s)

    # final case: push everything through the tail and re-read the factors
    # that carry the second interval as prefix windows of s
    if c == 0:
        raise FalsifiedInvariantError("ledger exhausted for %s over %s" % (w, s))
    wtil = w.quotient(w1.pow(a1))
    inner = factor(wtil, tail)
    table = {}
    for l in range(2, s.r + 1):
        for e2 in (0, 1):
            if e2 == 1 and l > s.r - 2:
                continue
            if not window_admissible(s, 0, e2, 0, l):
                continue
            win = window_snake(s, 0, e2, 0, l)
            table[win.weight] = (l, e2)
    special, rest = [], []
    for d in inner.factors:
        (special if d.weight.exponent(g22) >= 1 else rest).append(d)
    if len(special) != c:
        raise FalsifiedInvariantError(
            "expected %d prefix-window factors for %s over %s, found %d"
            % (c, w, s, len(special)))
    annotated = []
    for d in special:
        le = table.get(d.weight)
        if le is None:
            raise FalsifiedInvariantError(
                "factor %s of %s is not a prefix window of %s" % (d.weight, wtil, s))
        annotated.append((le, d))
    # compatibility ordering: even-parity windows ascending, then odd-parity
    # windows descending
    annotated.sort(key=lambda item: (
        (0, 2 * item[0][0] + item[0][1]) if (item[0][0] + item[0][1]) % 2 == 0
        else (1, -(2 * item[0][0] + item[0][1]))))
    out = []
    for k, (_, d) in enumerate(annotated):
        if k < a1:
            out.append(lookup_descriptor(w1 * d.weight, s))
        else:
            out.append(lookup_descriptor(d.weight, s))
    out += _lift([d.weight for d in rest], s)
    return out


def compatible_product(f1: Factorization, f2: Factorization, s: Snake) -> bool:
    """Whether the two factorizations stay intact under multiplication."""
    if not f1.factors:
        return True
    if not f2.factors:
        return True
    combined = factor(f1.weight * f2.weight, s)
    merged = tuple(sorted(f1.weight_multiset() + f2.weight_multiset(),
                          key=lambda x: x.exps))
    return combined.weight_multiset() == merged
