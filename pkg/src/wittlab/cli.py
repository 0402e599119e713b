"""Command-line front end.

Subcommands: classical, mackey, box, norm, eqwitt, check.  All numeric
output is exact; JSON objects are emitted with divisor keys as decimal
strings in ascending numeric order, so identical flags and inputs give
byte-identical output.  Exit codes: 0 success, 1 computation or
validation failure, 2 usage errors (including missing files).
"""

import argparse
import json
import random
import sys

from . import abgroups, eqwitt, mackey, tambara, wittcomplex
from .errors import WittlabError
from .mackey import MackeyFunctor, divisors
from .rings import parse_ring
from .witt import WittRing


def _emit(obj, fmt="json"):
    if fmt == "table":
        for line in _tabulate(obj):
            print(line)
    else:
        print(json.dumps(obj, indent=2))


def _tabulate(obj, prefix=""):
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)):
                yield "%s%s:" % (prefix, key)
                yield from _tabulate(val, prefix + "  ")
            else:
                yield "%s%s: %s" % (prefix, key, val)
    elif isinstance(obj, list):
        yield "%s%s" % (prefix, obj)
    else:
        yield "%s%s" % (prefix, obj)


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SystemExit(2)
    except json.JSONDecodeError as exc:
        print(json.dumps({"error": "invalid JSON in %s: %s" % (path, exc)}),
              file=sys.stderr)
        raise SystemExit(2)


def _parse_coords(text, ring, expected):
    parts = [p for p in text.split(",") if p != ""]
    if len(parts) != expected:
        raise ValueError("expected %d coordinates, got %d"
                         % (expected, len(parts)))
    return [ring.from_int(int(p)) for p in parts]


# ---------------------------------------------------------------------------
# classical


def _cmd_classical(args):
    ring = parse_ring(args.ring)
    wr = WittRing(args.p, args.k, ring)
    op = args.op
    result = None
    if op in ("add", "sub", "mul"):
        x = wr.vector(_parse_coords(args.x, ring, args.k))
        y = wr.vector(_parse_coords(args.y, ring, args.k))
        result = getattr(wr, op)(x, y)
    elif op == "neg":
        result = wr.neg(wr.vector(_parse_coords(args.x, ring, args.k)))
    elif op == "R":
        result = wr.restriction(wr.vector(_parse_coords(args.x, ring,
                                                        args.k)))
    elif op == "F":
        result = wr.frobenius(wr.vector(_parse_coords(args.x, ring,
                                                      args.k)))
    elif op == "V":
        shorter = WittRing(args.p, args.k - 1, ring)
        result = wr.verschiebung(
            shorter.vector(_parse_coords(args.x, ring, args.k - 1)))
    elif op == "FV":
        # F(V(x)) = p.x, through length k + 1
        x = wr.vector(_parse_coords(args.x, ring, args.k))
        longer = WittRing(args.p, args.k + 1, ring)
        result = longer.frobenius(longer.verschiebung(x))
    elif op == "teichmuller":
        a = _parse_coords(args.x, ring, 1)[0]
        result = wr.teichmuller(a)
    elif op == "norm":
        x = wr.vector(_parse_coords(args.x, ring, args.k))
        result = wr.norm(x)
    elif op == "ghost":
        x = wr.vector(_parse_coords(args.x, ring, args.k))
        ghost = wr.ghost(x)
        _emit({"p": args.p, "k": args.k, "ring": args.ring, "op": op,
               "coords": [repr_el(c) for c in x.coords],
               "ghost": [repr_el(g) for g in ghost]}, args.format)
        return 0
    else:
        raise ValueError("unknown op %r" % op)
    out_ring = WittRing(result.params.p, result.params.k, ring)
    _emit({"p": args.p, "k": result.params.k, "ring": args.ring, "op": op,
           "coords": [repr_el(c) for c in result.coords],
           "ghost": [repr_el(g) for g in out_ring.ghost(result)]},
          args.format)
    return 0


def repr_el(x):
    return x if isinstance(x, int) else repr(x)


# ---------------------------------------------------------------------------
# mackey / box


def _cmd_mackey(args):
    data = _load_json(args.file)
    m = MackeyFunctor.from_json(data)
    m.validate()
    _emit(m.to_json(), args.format)
    return 0


def _cmd_box(args):
    a = MackeyFunctor.from_json(_load_json(args.a))
    b = MackeyFunctor.from_json(_load_json(args.b))
    a.validate()
    b.validate()
    box = mackey.box_product(a, b)
    box.validate()
    _emit(box.to_json(), args.format)
    return 0


# ---------------------------------------------------------------------------
# tambara inputs


def _tambara_from_json(data):
    tag = data.get("norm_class")
    N = int(data["N"])
    if tag == "burnside":
        return tambara.burnside_tambara(N)
    if isinstance(tag, str) and tag.startswith("constant:"):
        spec = parse_ring(tag.split(":", 1)[1])
        return tambara.constant_tambara(spec, N)
    raise WittlabError("unsupported norm_class %r" % tag)


def _cmd_norm(args):
    data = _load_json(args.input)
    R = _tambara_from_json(data)
    rng = random.Random(args.seed)
    out = tambara.norm_functor(R, args.p, args.k)
    out.green.validate_green(rng)
    out.validate_tambara(rng)
    _emit(out.to_json(), args.format)
    return 0


# ---------------------------------------------------------------------------
# equivariant Witt vectors


def _cmd_eqwitt(args):
    if args.input:
        R = _tambara_from_json(_load_json(args.input))
    elif args.ring:
        spec = parse_ring(args.ring)
        R = tambara.constant_tambara(spec, args.n)
    else:
        raise ValueError("eqwitt needs --input or --ring")
    W = eqwitt.equivariant_witt(R, args.p, args.k)
    group_order = W.group.N
    out = {
        "group": "C%d" % group_order,
        "params": {"n": W.n, "p": W.p, "k": W.k, "nu": W.nu},
        "levels": {},
        "F": {},
        "V": {},
        "lift": {},
    }
    for d in W.group.divisors:
        out["levels"][W.orbit_label(d)] = W.level(d).to_json()
    for d in W.group.divisors:
        if d % W.p == 0:
            out["F"][str(d)] = W.frobenius_map(d).to_json()
            out["V"][str(d)] = W.verschiebung_map(d).to_json()
    for m in divisors(W.n):
        base_level = R.green.level(m)
        if base_level.order() is not None and base_level.order() <= 256:
            table = []
            for a in base_level.elements():
                lift = eqwitt.multiplicative_lift(W, a, m)
                table.append({"input": list(a), "output": list(lift)})
            out["lift"][str(m)] = table
    if args.oracle:
        comparison = eqwitt.nerve_comparison(R, args.p, args.k)
        out["oracle"] = {W.orbit_label(d): ("PASS" if ok else "FAIL")
                         for d, ok in sorted(comparison.items())}
        if not all(comparison.values()):
            _emit(out, args.format)
            return 1
    _emit(out, args.format)
    return 0


# ---------------------------------------------------------------------------
# witt-complex checking


def _hom_json(hom):
    return {"matrix": [list(r) for r in hom.matrix]}


def family_to_json(data):
    """Serialize a degree-zero Witt complex family."""
    if data.D != 0:
        raise WittlabError("only degree-zero families serialize to JSON")
    out = {
        "p": data.p, "n": data.n, "S": data.S, "D": 0,
        "base": {"norm_class": data.base.kind_label(), "N": data.n},
        "E": {}, "d": {}, "r": {}, "lambda": {}, "compat": {},
    }
    for s in range(data.S + 1):
        out["E"][str(s)] = {"degrees": {
            "0": data.towers[s].green0.to_json()}}
        out["lambda"][str(s)] = {
            str(d): _hom_json(data.lam[s][d])
            for d in data.towers[s].group.divisors}
    for s in sorted(data.r_maps):
        out["r"][str(s)] = {"0": {
            str(d): _hom_json(h)
            for d, h in sorted(data.r_maps[s][0].items())}}
    for (s, smaller), per_degree in sorted(data.compat.items()):
        key = "%d,%d" % (s, smaller)
        out["compat"][key] = {"0": {
            str(d): _hom_json(h)
            for d, h in sorted(per_degree[0].items())}}
    for (s, q), maps in sorted(data.d_maps.items()):
        entries = {str(d): _hom_json(h) for d, h in sorted(maps.items())
                   if not h.is_zero_hom()}
        if entries:
            out["d"]["%d,%d" % (s, q)] = entries
    return out


def witt_complex_from_json(obj):
    """Rebuild checker input from a file; the Witt towers themselves
    are reconstructed from the base tag."""
    base = _tambara_from_json(obj["base"])
    p = int(obj["p"])
    S = int(obj["S"])
    if int(obj.get("D", 0)) != 0:
        raise WittlabError("only degree-zero families load from JSON")
    if "E" not in obj:
        return wittcomplex.degree_zero_family(base, p, S)
    witt_tower = [eqwitt.equivariant_witt(base, p, s) for s in range(S + 1)]
    towers = []
    for s in range(S + 1):
        green = tambara.green_from_json(obj["E"][str(s)]["degrees"]["0"])
        towers.append(wittcomplex.GradedTower(green))
    n = base.group.N
    lam = {}
    for s in range(S + 1):
        lam[s] = {}
        for d in towers[s].group.divisors:
            mat = obj["lambda"][str(s)][str(d)]["matrix"]
            lam[s][d] = abgroups.AbHom(witt_tower[s].green.level(d),
                                       towers[s].level(0, d), mat,
                                       check=False)
    r_maps = {}
    nu = eqwitt.multiplicative_order(p, n)
    for s_str, per_degree in obj.get("r", {}).items():
        s = int(s_str)
        comps = {}
        for d_str, hom in per_degree["0"].items():
            d = int(d_str)
            comps[d] = abgroups.AbHom(
                towers[s].level(0, d * p ** nu),
                towers[s - nu].level(0, d), hom["matrix"], check=False)
        r_maps[s] = {0: comps}
    compat = {}
    for key, per_degree in obj.get("compat", {}).items():
        s, smaller = (int(x) for x in key.split(","))
        comps = {}
        for d_str, hom in per_degree["0"].items():
            d = int(d_str)
            comps[d] = abgroups.AbHom(towers[s].level(0, d),
                                      towers[smaller].level(0, d),
                                      hom["matrix"], check=False)
        compat[(s, smaller)] = {0: comps}
    d_maps = {}
    for key, maps in obj.get("d", {}).items():
        s, q = (int(x) for x in key.split(","))
        d_maps[(s, q)] = {
            int(d): abgroups.AbHom(towers[s].level(q, int(d)),
                                   towers[s].level(q + 1, int(d)),
                                   hom["matrix"], check=False)
            for d, hom in maps.items()}
    bridge = None
    if n == 1:
        theta = {s: wittcomplex._classical_theta(witt_tower[s])
                 for s in range(S + 1)}
        from .rings import IntegerRing
        spec = (base.payload["ring_spec"] if base.kind == "constant"
                else IntegerRing())
        bridge = wittcomplex.ClassicalBridge(spec, theta)
    return wittcomplex.WittComplexData(base, p, S, 0, towers, witt_tower,
                                       d_maps=d_maps, r_maps=r_maps,
                                       lam=lam, compat=compat,
                                       classical_base=bridge)


def _cmd_check(args):
    if args.target != "witt-complex":
        raise ValueError("unknown check target %r" % args.target)
    obj = _load_json(args.file)
    data = witt_complex_from_json(obj)
    report = wittcomplex.check_equivariant(data)
    out = report.to_json()
    if data.n == 1 and data.classical_base is not None and report.passed:
        classical = wittcomplex.check_classical(
            wittcomplex.specialize_n1(data))
        out["classical"] = classical.to_json()
        if not classical.passed:
            _emit(out, args.format)
            return 1
    _emit(out, args.format)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wittlab",
        description="Exact computations with p-typical and equivariant "
                    "Witt vectors over cyclic groups.")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for property sampling")
    parser.add_argument("--format", choices=("json", "table"),
                        default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classical", help="classical p-typical Witt vectors")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--ring", default="Z")
    c.add_argument("--op", required=True,
                   choices=("add", "sub", "mul", "neg", "R", "F", "V",
                            "FV", "teichmuller", "norm", "ghost"))
    c.add_argument("--x", required=True)
    c.add_argument("--y")
    c.set_defaults(func=_cmd_classical)

    m = sub.add_parser("mackey", help="inspect a Mackey functor file")
    msub = m.add_subparsers(dest="mackey_command", required=True)
    show = msub.add_parser("show")
    show.add_argument("--file", required=True)
    show.set_defaults(func=_cmd_mackey)

    b = sub.add_parser("box", help="box product of two Mackey functors")
    b.add_argument("--a", required=True)
    b.add_argument("--b", required=True)
    b.set_defaults(func=_cmd_box)

    n = sub.add_parser("norm", help="norm a supported Tambara functor")
    n.add_argument("--input", required=True)
    n.add_argument("--p", type=int, required=True)
    n.add_argument("--k", type=int, required=True)
    n.set_defaults(func=_cmd_norm)

    e = sub.add_parser("eqwitt", help="equivariant Witt vectors")
    e.add_argument("--input")
    e.add_argument("--ring")
    e.add_argument("--n", type=int, default=1)
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--oracle", action="store_true",
                   help="compare against the twisted-nerve H0 oracle")
    e.set_defaults(func=_cmd_eqwitt)

    k = sub.add_parser("check", help="axiom checkers")
    k.add_argument("target", choices=("witt-complex",))
    k.add_argument("--file", required=True)
    k.set_defaults(func=_cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    except (WittlabError, ValueError, AssertionError, KeyError) as exc:
        print(json.dumps({"error": "%s: %s" % (type(exc).__name__, exc)}),
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
