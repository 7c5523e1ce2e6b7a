"""Command-line interface.

One JSON document per invocation on stdout.  Exit codes: 0 success, 2 bad
input, 3 precondition violation, 4 falsified invariant (with witness).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import explorer, factorizer, grothendieck, heightmap, isomorph, primesets, snakes
from .core import parse_monoid_element, parse_snake
from .errors import FalsifiedInvariantError, ParseError, PreconditionError


def _emit(doc) -> int:
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def _descriptor_doc(d: primesets.PrimeDescriptor) -> dict:
    return {
        "kind": d.kind,
        "intervals": [[iv.i, iv.j] for iv in d.intervals()],
        "weight": str(d.weight),
    }


def _cmd_validate(args) -> int:
    s = parse_snake(args.snake)
    c = snakes.classify(s)
    return _emit({
        "snake": str(s),
        "stable": c.stable,
        "connected": c.connected,
        "prime": c.prime,
        "eps": list(c.eps) if c.eps is not None else None,
    })


def _cmd_sets(args) -> int:
    s = parse_snake(args.snake)
    doc = {
        "snake": str(s),
        "generators": sorted([iv.i, iv.j] for iv in primesets.generator_intervals(s)),
        "pr": [_descriptor_doc(d) for d in primesets.pr_set(s)],
        "fr": [_descriptor_doc(d) for d in primesets.fr_set(s)],
    }
    if s.r >= 3:
        doc["tilde"] = sorted([iv.i, iv.j] for iv in primesets.tilde_interval_set(s))
        doc["intervals"] = sorted([iv.i, iv.j] for iv in primesets.interval_set(s))
    return _emit(doc)


def _cmd_factor(args) -> int:
    s = parse_snake(args.snake)
    w = parse_monoid_element(args.omega, s.n)
    f = factorizer.factor(w, s)
    return _emit({
        "snake": str(s),
        "omega": str(w),
        "factors": [_descriptor_doc(d) for d in f.factors],
        "count": len(f),
    })


def _cmd_exchange(args) -> int:
    s = parse_snake(args.snake)
    t = grothendieck.exchange_triple(s)
    return _emit({
        "snake": str(s),
        "left": [str(c.omega) for c in t.left],
        "term1": str(t.term1.omega),
        "term2": str(t.term2.omega),
        "term2_components": [str(c.omega) for c in t.term2_components],
    })


def _cmd_iso(args) -> int:
    s = parse_snake(args.source)
    t = parse_snake(args.target)
    ok = isomorph.check_iso_conditions(s, t)
    doc = {"source": str(s), "target": str(t), "conditions": ok}
    if ok:
        iso = isomorph.build_iso(s, t)
        doc["map"] = sorted(
            [[a.i, a.j], [b.i, b.j]] for a, b in iso.pairs)
        if args.omega is not None:
            w = parse_monoid_element(args.omega, s.n)
            doc["omega"] = str(w)
            doc["eta"] = str(iso.eta(w))
            doc["transport"] = isomorph.transport_check(iso, w)
    return _emit(doc)


def _cmd_height(args) -> int:
    s = parse_snake(args.snake)
    h = heightmap.height_profile(s)
    return _emit({
        "snake": str(s),
        "N": h.N,
        "p_seq": list(h.p_seq),
        "xi": list(h.xi),
        "interval_set_xi": sorted(
            [iv.i, iv.j] for iv in heightmap.interval_set_xi(h)),
        "snake_of_xi": str(heightmap.snake_of_xi(s)),
        "pr_xi": sorted(str(w) for w in heightmap.pr_xi(s)),
        "fr_xi": sorted(str(w) for w in heightmap.fr_xi(s)),
    })


def _cmd_cluster(args) -> int:
    s = parse_snake(args.snake)
    return _emit(heightmap.cluster_export(s))


def _cmd_enumerate(args) -> int:
    if (args.n_lo is None) != (args.n_hi is None):
        raise ParseError("--n-lo and --n-hi must be given together")
    spec = explorer.CorpusSpec(
        r_max=args.r_max,
        span=args.span,
        n_range=(args.n_lo, args.n_hi) if args.n_lo is not None else None,
        filters=frozenset(args.filter or ()),
    )
    out = []
    for s in explorer.enumerate_snakes(spec):
        out.append(str(s))
        if args.limit and len(out) >= args.limit:
            break
    return _emit({"count": len(out), "snakes": out})


def _cmd_selftest(args) -> int:
    spec = explorer.CorpusSpec(r_max=3, span=5, filters=frozenset({"prime"}))
    checks = {"classified": 0, "enumeration": 0, "closure": 0, "factored": 0,
              "exchange": 0, "height": 0}
    for s in explorer.enumerate_snakes(spec):
        checks["classified"] += 1
        if not snakes.check_enumeration(s):
            raise FalsifiedInvariantError("enumeration sweep failed on %s" % s)
        checks["enumeration"] += 1
        if s.r >= 3:
            if not primesets.closure_check(s):
                raise FalsifiedInvariantError("closure failed on %s" % s)
            checks["closure"] += 1
            if s.j_max - s.i_min == s.n + 1 and s.j_min == s.i_max:
                heightmap.pr_bijection(s)
                checks["height"] += 1
        for d in primesets.pr_set(s) + primesets.fr_set(s):
            f = factorizer.factor(d.weight, s)
            if f.weight_multiset() != (d.weight,):
                raise FalsifiedInvariantError(
                    "descriptor %s of %s is not a factorization fixed point"
                    % (d, s))
            checks["factored"] += 1
        if s.r >= 2:
            grothendieck.exchange_triple(s)
            checks["exchange"] += 1
    return _emit({"level": args.level, "passed": checks})


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="snakealg")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate")
    p.add_argument("snake")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("sets")
    p.add_argument("snake")
    p.set_defaults(func=_cmd_sets)

    p = sub.add_parser("factor")
    p.add_argument("--snake", required=True)
    p.add_argument("--omega", required=True)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("exchange")
    p.add_argument("snake")
    p.set_defaults(func=_cmd_exchange)

    p = sub.add_parser("iso")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--omega")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("height")
    p.add_argument("snake")
    p.set_defaults(func=_cmd_height)

    p = sub.add_parser("cluster")
    p.add_argument("snake")
    p.set_defaults(func=_cmd_cluster)

    p = sub.add_parser("enumerate")
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--span", type=int, required=True)
    p.add_argument("--n-lo", type=int)
    p.add_argument("--n-hi", type=int)
    p.add_argument("--filter", action="append",
                   choices=["stable", "connected", "prime", "boundary"])
    p.add_argument("--limit", type=int, default=0)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("selftest")
    p.add_argument("--level", default="desk")
    p.set_defaults(func=_cmd_selftest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.func(args)
    except ParseError as exc:
        _emit({"error": "parse", "message": str(exc)})
        return 2
    except PreconditionError as exc:
        _emit({"error": "precondition", "message": str(exc)})
        return 3
    except FalsifiedInvariantError as exc:
        _emit({"error": "falsified-invariant", "witness": str(exc)})
        return 4


if __name__ == "__main__":
    sys.exit(main())
