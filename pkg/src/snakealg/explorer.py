"""Corpus generation: exhaustive enumeration of small snakes, a rejection
sampler, and a brute-force factorization oracle used as an independent
check on the canonical factorizer."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .core import Interval, MonoidElement, Snake
from .errors import PreconditionError
from .primesets import descriptor_index
from .snakes import classify

SPAN_CAP = 12
R_CAP = 7


@dataclass(frozen=True)
class CorpusSpec:
    r_max: int
    span: int
    n_range: tuple[int, int] | None = None
    translation_normalized: bool = True
    filters: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.span > SPAN_CAP or self.r_max > R_CAP:
            raise PreconditionError(
                "corpus bounds r_max=%d span=%d exceed the hard cap"
                % (self.r_max, self.span))
        bad = set(self.filters) - {"stable", "connected", "prime", "boundary"}
        if bad:
            raise PreconditionError("unknown filters: %s" % sorted(bad))


def _prefix_ok(ivs: tuple[Interval, ...], filters) -> bool:
    """Rank-free necessary conditions on a prefix; used to prune the search."""
    r = len(ivs)
    if len(set(ivs)) != r:
        return False
    eps = []
    for p in range(r - 1):
        a, b = ivs[p], ivs[p + 1]
        if b.i < a.i and b.j < a.j:
            eps.append(0)
        elif a.i < b.i and a.j < b.j:
            eps.append(1)
        else:
            return False
    for p in range(len(eps) - 1):
        if eps[p] + eps[p + 1] != 1:
            return False
    for p in range(r - 2):
        a = ivs[p]
        for b in ivs[p + 2:]:
            if not (a.i <= b.i < b.j <= a.j):
                return False
    if filters & {"connected", "prime", "boundary"}:
        for p in range(r - 1):
            e = eps[p]
            lo, hi = ivs[p + 1 - e], ivs[p + e]
            if not (lo.i < hi.i <= lo.j < hi.j):
                return False
    if filters & {"prime", "boundary"}:
        for p in range(r - 2):
            if ivs[p].i == ivs[p + 2].i or ivs[p].j == ivs[p + 2].j:
                return False
    return True


def _candidate_ranks(ivs: tuple[Interval, ...], spec: CorpusSpec) -> list[int]:
    n_min = max(iv.length for iv in ivs)
    if spec.filters & {"connected", "prime", "boundary"}:
        for p in range(len(ivs) - 1):
            a, b = ivs[p], ivs[p + 1]
            n_min = max(n_min, max(a.j, b.j) - min(a.i, b.i) - 1)
    if spec.n_range is not None:
        lo, hi = spec.n_range
        return [n for n in range(max(lo, n_min), hi + 1)]
    j_max = max(iv.j for iv in ivs)
    j_min = min(iv.j for iv in ivs)
    i_max = max(iv.i for iv in ivs)
    out = [n_min]
    if j_min == i_max and j_max - 1 > n_min:
        out.append(j_max - 1)
    if "boundary" in spec.filters:
        out = [n for n in out if n == j_max - 1]
    return out


def _passes(s: Snake, filters) -> bool:
    c = classify(s)
    if "stable" in filters and not c.stable:
        return False
    if "connected" in filters and not c.connected:
        return False
    if "prime" in filters and not c.prime:
        return False
    if "boundary" in filters:
        if s.j_max - s.i_min != s.n + 1 or s.j_min != s.i_max:
            return False
    return c.stable


def enumerate_snakes(spec: CorpusSpec) -> Iterator[Snake]:
    """Every snake meeting the spec, translation-normalized, exactly once,
    in deterministic order."""
    alphabet = [Interval(i, j)
                for i in range(0, spec.span + 1)
                for j in range(i + 1, spec.span + 1)]

    def walk(prefix: tuple[Interval, ...]) -> Iterator[tuple[Interval, ...]]:
        if prefix:
            yield prefix
        if len(prefix) == spec.r_max:
            return
        for iv in alphabet:
            cand = prefix + (iv,)
            if _prefix_ok(cand, spec.filters):
                yield from walk(cand)

    for ivs in walk(()):
        if spec.translation_normalized and min(iv.i for iv in ivs) != 0:
            continue
        for n in _candidate_ranks(ivs, spec):
            s = Snake(n, ivs)
            if _passes(s, spec.filters):
                yield s


def oracle_factorizations(w: MonoidElement, s: Snake, cap: int = 4):
    """All multisets of descriptor weights multiplying to w, by backtracking."""
    if w.ht > cap:
        raise PreconditionError("height %d exceeds oracle cap %d" % (w.ht, cap))
    weights = sorted(descriptor_index(s).keys(), key=lambda x: x.exps)

    def rec(rem: MonoidElement, start: int):
        if rem.is_one:
            yield ()
            return
        for k in range(start, len(weights)):
            q = rem.quotient(weights[k])
            if q is None:
                continue
            for rest in rec(q, k):
                yield (weights[k],) + rest

    return [tuple(sol) for sol in rec(w, 0)]


def random_snake(seed: int, spec: CorpusSpec, budget: int = 20000) -> Snake:
    """Deterministic rejection sampler over the spec."""
    rng = random.Random(seed)
    alphabet = [Interval(i, j)
                for i in range(0, spec.span + 1)
                for j in range(i + 1, spec.span + 1)]
    for _ in range(budget):
        r = rng.randint(1, spec.r_max)
        ivs: tuple[Interval, ...] = ()
        ok = True
        for _ in range(r):
            extensions = [iv for iv in alphabet
                          if _prefix_ok(ivs + (iv,), spec.filters)]
            if not extensions:
                ok = False
                break
            ivs = ivs + (rng.choice(extensions),)
        if not ok:
            continue
        if spec.translation_normalized:
            shift = -min(iv.i for iv in ivs)
            ivs = tuple(iv.translate(shift) for iv in ivs)
            if max(iv.j for iv in ivs) > spec.span:
                continue
        ranks = _candidate_ranks(ivs, spec)
        if not ranks:
            continue
        s = Snake(rng.choice(ranks), ivs)
        if _passes(s, spec.filters):
            return s
    raise PreconditionError("rejection budget exhausted for %s" % (spec,))
