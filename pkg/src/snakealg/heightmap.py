"""Translation of a prime snake into a height function on a larger rank,
the induced interval set and prime/frozen index sets, and the snake it
defines back again.

All maps are verified constructively: the height property, the final
position identity p_r = N, primality of the induced snake, the interval-set
identity, and the bijection onto the prime descriptors of the original
snake each raise with a witness if they fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Interval, MonoidElement, Snake
from .errors import FalsifiedInvariantError, PreconditionError
from .isomorph import SnakeIso, build_iso, check_iso_conditions
from .primesets import interval_set, pr_set, window_snake
from .snakes import classify, epsilon_sequence, require_prime


def n_of(s: Snake) -> int:
    """Target rank: r plus one for every interior position whose distance-3
    neighbours differ on both endpoints."""
    require_prime(s)
    if s.r < 3:
        raise PreconditionError("height translation needs length >= 3")
    r = s.r
    return r + sum(
        1 for t in range(2, r - 1)
        if s.iv(t - 1).i != s.iv(t + 2).i and s.iv(t - 1).j != s.iv(t + 2).j)


def p_sequence(s: Snake) -> tuple[int, ...]:
    require_prime(s)
    r = s.r
    if r < 3:
        raise PreconditionError("height translation needs length >= 3")
    p = [1, 2]
    for m in range(2, r - 1):
        step = 2 if (s.iv(r - m + 2).i != s.iv(r - m - 1).i
                     and s.iv(r - m + 2).j != s.iv(r - m - 1).j) else 1
        p.append(p[-1] + step)
    p.append(p[-1] + 1)
    if p[-1] != n_of(s):
        raise FalsifiedInvariantError(
            "final position %d differs from target rank %d for %s"
            % (p[-1], n_of(s), s))
    return tuple(p)


@dataclass(frozen=True)
class HeightProfile:
    snake: Snake
    N: int
    p_seq: tuple[int, ...]
    xi: tuple[int, ...]  # xi[t-1] is the value at t, 1 <= t <= N

    def xi_at(self, t: int) -> int:
        if not 1 <= t <= self.N:
            raise PreconditionError("height position %d out of 1..%d" % (t, self.N))
        return self.xi[t - 1]

    def i_xi(self, t: int) -> int:
        return (self.xi_at(t) - t) // 2

    def j_xi(self, t: int) -> int:
        return (self.xi_at(t) + t) // 2


@lru_cache(maxsize=None)
def height_profile(s: Snake) -> HeightProfile:
    N = n_of(s)
    p = p_sequence(s)
    eps = epsilon_sequence(s)
    r = s.r
    vals: dict[int, int] = {p[r - 1]: p[r - 1]}
    for m in range(r - 1, 0, -1):
        e = eps[r - m - 1]
        gap = p[m] - p[m - 1]
        vals[p[m - 1]] = vals[p[m]] + (gap if e else -gap)
    for g in range(N, 0, -1):
        if g not in vals:
            vals[g] = vals[g + 2]
    xi = tuple(vals[t] for t in range(1, N + 1))
    for t in range(1, N):
        if abs(xi[t] - xi[t - 1]) != 1:
            raise FalsifiedInvariantError(
                "height step %d at position %d for %s" % (xi[t] - xi[t - 1], t, s))
    for t in range(1, N + 1):
        if (xi[t - 1] - t) % 2:
            raise FalsifiedInvariantError(
                "parity failure at position %d for %s" % (t, s))
    return HeightProfile(s, N, p, xi)


def require_boundary(s: Snake) -> None:
    """The translation back to a snake needs the extremal coincidences; the
    induced snake always has them, so the matching conditions force them on
    the source as well."""
    if s.j_max - s.i_min != s.n + 1 or s.j_min != s.i_max:
        raise PreconditionError(
            "snake %s does not have the boundary shape required here" % s)


def interval_set_xi(h: HeightProfile) -> frozenset[Interval]:
    out = set()
    for t in range(1, h.N + 1):
        out.add(Interval(h.i_xi(t), h.j_xi(t)))
        out.add(Interval(h.i_xi(t) - 1, h.j_xi(t) - 1))
    return frozenset(out)


@lru_cache(maxsize=None)
def snake_of_xi(s: Snake) -> Snake:
    """The snake of rank N read off the height profile, position by position."""
    require_boundary(s)
    h = height_profile(s)
    eps = epsilon_sequence(s)
    r = s.r
    parts = []
    for m in range(1, r + 1):
        t = h.p_seq[r - m]
        e = eps[m - 1]
        parts.append(Interval(h.i_xi(t) - e, h.j_xi(t) - e))
    out = Snake(h.N, tuple(parts))
    if not classify(out).prime:
        raise FalsifiedInvariantError("induced snake %s of %s is not prime" % (out, s))
    if out.j_min != out.i_max or out.j_max - out.i_min != h.N + 1:
        raise FalsifiedInvariantError("induced snake %s misses the boundary shape" % out)
    if not check_iso_conditions(s, out):
        raise FalsifiedInvariantError(
            "induced snake %s fails the matching conditions against %s" % (out, s))
    if interval_set(out) != interval_set_xi(h):
        raise FalsifiedInvariantError(
            "interval sets disagree for %s: %s vs %s"
            % (s, sorted(interval_set(out)), sorted(interval_set_xi(h))))
    return out


def _omega_pp(h: HeightProfile, m: int, l: int) -> MonoidElement:
    eps = epsilon_sequence(h.snake)
    r = h.snake.r
    w = MonoidElement.one(h.N)
    for k in range(m, l + 1):
        e = eps[r - k]
        t = h.p_seq[k - 1]
        w = w * MonoidElement.generator(
            Interval(h.i_xi(t) - e, h.j_xi(t) - e), h.N)
    return w


def _pgen(h: HeightProfile, a_idx: int, b_idx: int) -> MonoidElement:
    """Boundary correction generator: endpoints read at two positions, each
    shifted by the alternation bit of its own position."""
    eps = epsilon_sequence(h.snake)
    r = h.snake.r
    if not (1 <= a_idx <= r and 1 <= b_idx <= r):
        raise FalsifiedInvariantError(
            "correction position (%d,%d) out of range for %s" % (a_idx, b_idx, h.snake))
    ta, tb = h.p_seq[a_idx - 1], h.p_seq[b_idx - 1]
    iv = Interval(h.i_xi(ta) - eps[r - a_idx], h.j_xi(tb) - eps[r - b_idx])
    return MonoidElement.generator(iv, h.N)


def omega_pair(h: HeightProfile, t: int, t2: int) -> MonoidElement:
    """The indexing element attached to a pair of height positions t < t2."""
    if not 1 <= t < t2 <= h.N:
        raise PreconditionError("bad position pair (%d,%d)" % (t, t2))
    eps = epsilon_sequence(h.snake)
    r = h.snake.r
    p = h.p_seq
    m = next(k for k in range(1, r + 1) if (p[k - 2] if k >= 2 else 0) < t <= p[k - 1])
    l = max(k for k in range(1, r + 1) if p[k - 1] <= t2)
    if m > l or not p[l - 1] <= t2 or (l < r and not t2 < p[l]):
        raise FalsifiedInvariantError(
            "no bracketing positions for (%d,%d) in %s" % (t, t2, h.snake))
    w = _omega_pp(h, m, l)
    if t != p[m - 1]:
        e = eps[r - m]
        w = w * _pgen(h, m - 1 - e, m - 2 + e)
    if t2 != p[l - 1]:
        e = eps[r - l]
        w = w * _pgen(h, l + 2 - e, l + 1 + e)
    return w


def window_image(s: Snake, t: int, t2: int) -> MonoidElement:
    """The window of s matched to the pair element at positions (t, t2)."""
    h = height_profile(s)
    p = h.p_seq
    r = s.r
    m = next(k for k in range(1, r + 1) if (p[k - 2] if k >= 2 else 0) < t <= p[k - 1])
    l = max(k for k in range(1, r + 1) if p[k - 1] <= t2)
    e = 0 if t2 == p[l - 1] else 1
    e2 = 0 if t == p[m - 1] else 1
    return window_snake(s, e, e2, r - l - 1, r - m + 1).weight


@lru_cache(maxsize=None)
def pr_xi(s: Snake) -> frozenset[MonoidElement]:
    h = height_profile(s)
    out = set()
    for t in range(1, h.N + 1):
        for d in (0, 1):
            w = MonoidElement.generator(
                Interval(h.i_xi(t) - d, h.j_xi(t) - d), h.N)
            if not w.is_one:
                out.add(w)
    for t in range(1, h.N + 1):
        for t2 in range(t + 1, h.N + 1):
            w = omega_pair(h, t, t2)
            if not w.is_one:
                out.add(w)
    return frozenset(out)


@lru_cache(maxsize=None)
def fr_xi(s: Snake) -> frozenset[MonoidElement]:
    h = height_profile(s)
    out = set()
    for t in range(1, h.N + 1):
        w = (MonoidElement.generator(Interval(h.i_xi(t), h.j_xi(t)), h.N)
             * MonoidElement.generator(Interval(h.i_xi(t) - 1, h.j_xi(t) - 1), h.N))
        if not w.is_one:
            out.add(w)
    return frozenset(out)


def height_iso(s: Snake) -> SnakeIso:
    return build_iso(snake_of_xi(s), s)


def pr_bijection(s: Snake) -> dict[MonoidElement, MonoidElement]:
    """Map the height-side prime elements onto the prime descriptor weights."""
    iso = height_iso(s)
    image = {}
    for w in pr_xi(s):
        img = iso.eta(w)
        if img in image.values():
            raise FalsifiedInvariantError(
                "prime element image collision at %s for %s" % (w, s))
        image[w] = img
    targets = {d.weight for d in pr_set(s)}
    got = set(image.values())
    if got != targets:
        raise FalsifiedInvariantError(
            "prime element images of %s mismatch: missing %s, extra %s"
            % (s, sorted(map(str, targets - got)), sorted(map(str, got - targets))))
    return image


def cluster_export(s: Snake) -> dict:
    """JSON-ready summary of the induced cluster structure."""
    require_prime(s)
    if s.r < 3:
        raise PreconditionError("height translation needs length >= 3")
    require_boundary(s)
    h = height_profile(s)
    bij = pr_bijection(s)
    iso = height_iso(s)
    return {
        "type": "A_%d" % h.N,
        "N": h.N,
        "snake": str(s),
        "height_snake": str(snake_of_xi(s)),
        "xi": list(h.xi),
        "p_seq": list(h.p_seq),
        "exchangeable": sorted(str(w) for w in pr_xi(s)),
        "frozen": sorted(str(w) for w in fr_xi(s)),
        "frozen_images": sorted(str(iso.eta(w)) for w in fr_xi(s)),
        "correspondence": sorted(
            [str(w), str(img)] for w, img in bij.items()),
    }
