"""Monoid isomorphisms between the submonoids of two equal-length snakes.

Two snakes of the same length induce a generator-wise isomorphism exactly
when their first alternation bit, their endpoint coincidence pattern, and
their generator membership pattern agree.  The map sends the generator with
endpoints taken at positions (m, l) of one snake to the generator with the
same positions in the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Interval, MonoidElement, Snake, is_trivial
from .errors import FalsifiedInvariantError, PreconditionError
from .factorizer import factor
from .primesets import generator_intervals, interval_set, submonoid_member
from .snakes import epsilon_sequence, require_prime


def check_iso_conditions(s: Snake, t: Snake) -> bool:
    require_prime(s)
    require_prime(t)
    if s.r != t.r:
        return False
    r = s.r
    if r == 1:
        return True
    if epsilon_sequence(s)[0] != epsilon_sequence(t)[0]:
        return False
    if r == 2:
        for m, l in ((1, 1), (2, 2), (1, 2), (2, 1)):
            a = Interval(s.iv(m).i, s.iv(l).j)
            b = Interval(t.iv(m).i, t.iv(l).j)
            if is_trivial(a, s.n) != is_trivial(b, t.n):
                return False
        return True
    for m in range(2, r - 1):
        if (s.iv(m - 1).i == s.iv(m + 2).i) != (t.iv(m - 1).i == t.iv(m + 2).i):
            return False
        if (s.iv(m - 1).j == s.iv(m + 2).j) != (t.iv(m - 1).j == t.iv(m + 2).j):
            return False
    ivs, ivt = interval_set(s), interval_set(t)
    for m in range(1, r + 1):
        for l in range(1, r + 1):
            a = Interval(s.iv(m).i, s.iv(l).j)
            b = Interval(t.iv(m).i, t.iv(l).j)
            if (a in ivs) != (b in ivt):
                return False
    return True


@dataclass(frozen=True)
class SnakeIso:
    source: Snake
    target: Snake
    pairs: tuple[tuple[Interval, Interval], ...]

    @property
    def mapping(self) -> dict:
        return dict(self.pairs)

    def eta(self, w: MonoidElement) -> MonoidElement:
        """Generator-wise image of a submonoid element."""
        if not submonoid_member(w, self.source):
            raise PreconditionError(
                "element %s is outside the submonoid of %s" % (w, self.source))
        m = self.mapping
        exps: dict[Interval, int] = {}
        for iv, e in w.exps:
            img = m[iv]
            exps[img] = exps.get(img, 0) + e
        return MonoidElement.from_exponents(self.target.n, exps)

    def inverse(self) -> "SnakeIso":
        return SnakeIso(self.target, self.source,
                        tuple(sorted((b, a) for a, b in self.pairs)))


def build_iso(s: Snake, t: Snake) -> SnakeIso:
    """The index-wise generator bijection; fails loudly if any generator has
    conflicting images across its position representations."""
    if not check_iso_conditions(s, t):
        raise PreconditionError(
            "snakes %s and %s do not satisfy the matching conditions" % (s, t))
    gens_s = generator_intervals(s)
    gens_t = generator_intervals(t)
    m: dict[Interval, Interval] = {}
    for p in range(1, s.r + 1):
        for q in range(1, s.r + 1):
            a = Interval(s.iv(p).i, s.iv(q).j)
            if a not in gens_s:
                continue
            b = Interval(t.iv(p).i, t.iv(q).j)
            if b not in gens_t:
                raise FalsifiedInvariantError(
                    "image %s of %s at positions (%d,%d) is not a generator of %s"
                    % (b, a, p, q, t))
            prev = m.get(a)
            if prev is not None and prev != b:
                raise FalsifiedInvariantError(
                    "generator %s has conflicting images %s and %s" % (a, prev, b))
            m[a] = b
    if set(m) != set(gens_s) or set(m.values()) != set(gens_t):
        raise FalsifiedInvariantError(
            "generator map between %s and %s is not a bijection" % (s, t))
    if len(set(m.values())) != len(m):
        raise FalsifiedInvariantError(
            "generator map between %s and %s is not injective" % (s, t))
    return SnakeIso(s, t, tuple(sorted(m.items())))


def transport_check(iso: SnakeIso, w: MonoidElement) -> bool:
    """Factorization commutes with the isomorphism on w."""
    fs = factor(w, iso.source)
    ft = factor(iso.eta(w), iso.target)
    image = sorted((iso.eta(d.weight) for d in fs.factors), key=lambda x: x.exps)
    direct = sorted((d.weight for d in ft.factors), key=lambda x: x.exps)
    return image == direct
