"""Command-line front end.

Exit status: 0 on success, 1 on bad input, 2 when a structural cross-check
fails (TheoremViolation), which always indicates a bug in the engine.

Environment overrides (flags win): MONLC_CHAR, MONLC_MAX_T, MONLC_SEED,
MONLC_PARALLEL, MONLC_GEN_CAP, MONLC_JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from dataclasses import dataclass

import numpy as np

from . import _fp
from .degree_complex import enumeration_box, neg_mask
from .errors import ParseError, TheoremViolation
from .local_cohomology import depth_and_cm, lc_piece, ses_consistency
from .simplicial import (RelativePair, SimplicialComplex, is_matroid, is_pure,
                         relative_cohomology_dims)
from .symbolic import (cm_edge_report, discrepancy_report, locally_matroidal,
                       nonmatroid_witness, symbolic_quotient_report)
from .textio import format_complex, parse_complex, parse_graph, parse_ideal, parse_input

SES_SAMPLES = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    p: int = 2
    t_max: int = 5
    gen_cap: int = 50_000
    json: bool = False
    seed: int = 0
    parallel: int = 1


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _config(args):
    p = args.char if args.char is not None else _env_int("MONLC_CHAR", 2)
    if not _fp.is_prime(p):
        raise UsageError(f"--char must be a prime, got {p}")
    t_max = args.max_t if args.max_t is not None else _env_int("MONLC_MAX_T", 5)
    if t_max < 1:
        raise UsageError("--max-t must be at least 1")
    seed = args.seed if args.seed is not None else _env_int("MONLC_SEED", 0)
    par = args.parallel if args.parallel is not None else _env_int("MONLC_PARALLEL", 1)
    as_json = args.json or os.environ.get("MONLC_JSON", "") not in ("", "0")
    cap = _env_int("MONLC_GEN_CAP", 50_000)
    return RunConfig(p, t_max, cap, as_json, seed, max(1, par))


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _vector(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"not an integer vector: {text!r}") from None


def _pair_of_ideals(args):
    J = parse_ideal(_read(args.J))
    I = parse_ideal(_read(args.I))
    if J.ring != I.ring:
        if J.n != I.n:
            raise UsageError("J and I live in rings of different sizes")
        I = type(I)(J.ring, I.gens)
    return J, I


def _complex_label(D):
    if D.is_void():
        return "VOID"
    if D.is_empty():
        return "{∅}"
    return format_complex(D)


# ---------------------------------------------------------------- subcommands

def cmd_homology(args, cfg):
    if (args.complex is None) == (args.pair is None):
        raise UsageError("give exactly one of --complex or --pair")
    if args.complex is not None:
        D = parse_complex(_read(args.complex))
        pair = RelativePair(D, SimplicialComplex.void(D.n))
    else:
        pair = parse_input(_read(args.pair))
        if not isinstance(pair, RelativePair):
            raise UsageError("--pair expects a 'big: ... small: ...' file")
    dims = relative_cohomology_dims(pair, cfg.p)
    out = {"characteristic": cfg.p, "big": _complex_label(pair.big),
           "small": _complex_label(pair.small),
           "reduced_cohomology": [{"j": j, "dim": h} for j, h in sorted(dims.items())]}
    lines = [f"big:   {out['big']}", f"small: {out['small']}", f"over F_{cfg.p}:"]
    lines += [f"  H~^{j} = {h}" for j, h in sorted(dims.items())] or ["  (void complex: no cohomology)"]
    return out, lines


def cmd_degree_complex(args, cfg):
    from .degree_complex import degree_complex, g_set
    I = parse_ideal(_read(args.ideal))
    a = _vector(args.multidegree)
    if len(a) != I.n:
        raise UsageError(f"multidegree has {len(a)} entries, ring has {I.n} variables")
    D = degree_complex(I, a)
    kind = "void" if D.is_void() else "empty" if D.is_empty() else "complex"
    out = {"multidegree": list(a), "g_set": sorted(g_set(a)), "kind": kind,
           "facets": [list(f) for f in D.facet_sets()], "dim": D.dim}
    label = {"void": "VOID (no faces at all)", "empty": "{∅} (only the empty face)"}.get(kind)
    lines = [f"a = {a}, G_a = {sorted(g_set(a))}",
             label if label else "facets: " + " ".join("{" + ",".join(map(str, f)) + "}"
                                                      for f in D.facet_sets())]
    return out, lines


def _ses_audit(J, I, cfg, extra=()):
    """Long-exact-sequence check on a seeded sample of box degrees."""
    box = enumeration_box(I, J)
    rng = np.random.default_rng(cfg.seed)
    pts = list(extra)
    ranges = np.array(box.ranges)
    for _ in range(SES_SAMPLES):
        a = rng.integers(0, ranges)
        a[rng.random(box.n) < 0.25] = -1
        pts.append(tuple(int(x) for x in a))
    for a in pts:
        if not ses_consistency(J, I, None, a, cfg.p):
            raise TheoremViolation(f"long exact sequence check fails at a = {a}")


def cmd_lc(args, cfg):
    J, I = _pair_of_ideals(args)
    if args.piece is not None:
        i = int(args.piece)
        a = _vector(args.piece_degree)
        if len(a) != I.n:
            raise UsageError(f"multidegree has {len(a)} entries, ring has {I.n} variables")
        h = lc_piece(J, I, i, a, cfg.p)
        _ses_audit(J, I, cfg, extra=[a])
        out = {"i": i, "a": list(a), "h": h, "characteristic": cfg.p,
               "g_set_size": bin(neg_mask(a)).count("1")}
        return out, [f"dim H^{i}_m(I/J)_{a} over F_{cfg.p} = {h}"]
    prof = depth_and_cm(J, I, cfg.p, full=args.full, parallel=cfg.parallel, seed=cfg.seed)
    if not prof.zero_module:
        _ses_audit(J, I, cfg)
    out = prof.to_json()
    lines = [f"dim = {prof.dim}   depth = {prof.depth}   CM = {prof.is_CM}   gCM = {prof.is_gCM}"
             + ("   (zero module)" if prof.zero_module else ""),
             f"rigidity witness: {prof.rigidity_witness}",
             f"nonzero pieces ({out['table_scope']}): {len(prof.table)}"]
    for (i, a), h in prof.nonzero()[:40]:
        lines.append(f"  i={i}  a={a}  h={h}")
    if len(prof.table) > 40:
        lines.append(f"  ... {len(prof.table) - 40} more (use --json)")
    return out, lines


def cmd_cm_check(args, cfg):
    J, I = _pair_of_ideals(args)
    prof = depth_and_cm(J, I, cfg.p, parallel=cfg.parallel, seed=cfg.seed)
    out = {"dim": prof.dim, "depth": prof.depth, "is_CM": prof.is_CM, "is_gCM": prof.is_gCM,
           "zero_module": prof.zero_module, "characteristic": cfg.p,
           "link_criterion_agrees": prof.reisner_agrees}
    return out, [f"dim {prof.dim}, depth {prof.depth}: "
                 + ("Cohen-Macaulay" if prof.is_CM else "not Cohen-Macaulay")
                 + (" (zero module)" if prof.zero_module else "")]


def cmd_symbolic(args, cfg):
    D = parse_complex(_read(args.complex))
    ts = _vector(args.t_range) if args.t_range else tuple(range(1, min(cfg.t_max, 3) + 1))
    rep = symbolic_quotient_report(D, ts, cfg.p, parallel=cfg.parallel)
    out = rep.to_json()
    out["characteristic"] = cfg.p
    lines = [f"matroid: {rep.is_matroid}   locally matroidal: {rep.locally_matroidal}   "
             f"dim S/I = {rep.dim_ring}",
             " t  dim  depth  CM     gCM"]
    lines += [f"{r.t:2d}  {r.dim:3d}  {r.depth:5d}  {str(r.is_CM):5s}  {r.is_gCM}" for r in rep.rows]
    return out, lines


def cmd_discrepancy(args, cfg):
    G = parse_graph(_read(args.graph))
    rep = discrepancy_report(G, max(cfg.t_max, 2), cfg.p, cm=not args.no_cm,
                             ratliff=True, parallel=cfg.parallel)
    out = rep.to_json()
    out["characteristic"] = cfg.p
    lines = [f"observed stabilization t = {rep.observed_t} (verified up to {rep.t_max}), c(G) = {rep.c}",
             " t  dim  zero   CM"]
    lines += [f"{r.t:2d}  {r.dim:3d}  {str(r.zero):5s}  {r.is_CM}" for r in rep.rows]
    return out, lines


def cmd_cm_edge(args, cfg):
    G = parse_graph(_read(args.graph))
    rep = cm_edge_report(G, cfg.t_max if args.max_t is not None else 4, cfg.p,
                         parallel=cfg.parallel)
    out = rep.to_json()
    out["characteristic"] = cfg.p
    lines = [f"N[C] = [n] for every induced odd cycle: {rep.condition4}",
             f"dims {list(rep.dims)}   CM {list(rep.cm)}",
             f"conditions agree on the computed range: {rep.equivalent_on_range}"]
    return out, lines


def cmd_matroid(args, cfg):
    D = parse_complex(_read(args.complex))
    w = nonmatroid_witness(D)
    out = {"is_matroid": is_matroid(D), "is_pure": is_pure(D),
           "locally_matroidal": locally_matroidal(D),
           "witness": None if w is None else {"u": w[0], "vw": list(w[1]), "U": list(w[2]),
                                              "multidegree_t2": list(w[3])}}
    return out, [f"matroid: {out['is_matroid']}   pure: {out['is_pure']}   "
                 f"locally matroidal: {out['locally_matroidal']}"]


COMMANDS = {
    "homology": cmd_homology,
    "degree-complex": cmd_degree_complex,
    "lc": cmd_lc,
    "cm-check": cmd_cm_check,
    "symbolic": cmd_symbolic,
    "discrepancy": cmd_discrepancy,
    "cm-edge": cmd_cm_edge,
    "matroid": cmd_matroid,
}


def schema_for(command, piece=False):
    """The JSON schema documenting a subcommand's --json output."""
    from importlib import resources
    name = "lc-piece" if command == "lc" and piece else "lc-profile" if command == "lc" else command
    text = resources.files("monlc").joinpath("schemas", f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--char", type=int, default=None, help="prime characteristic (default 2)")
    common.add_argument("--max-t", dest="max_t", type=int, default=None, help="largest power (default 5)")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled audits (default 0)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("--parallel", type=int, default=None, metavar="N", help="worker processes")

    ap = _Parser(prog="monlc", description="Local cohomology of monomial ideal quotients.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("homology", parents=[common], help="reduced (relative) cohomology")
    s.add_argument("--complex")
    s.add_argument("--pair")

    s = sub.add_parser("degree-complex", parents=[common], help="the degree complex at a multidegree")
    s.add_argument("--ideal", required=True)
    s.add_argument("--multidegree", required=True)

    s = sub.add_parser("lc", parents=[common], help="local cohomology of I/J")
    s.add_argument("--J", required=True)
    s.add_argument("--I", required=True)
    s.add_argument("--piece", default=None, metavar="i")
    s.add_argument("--piece-degree", dest="piece_degree", default=None, help=argparse.SUPPRESS)
    s.add_argument("--profile", action="store_true")
    s.add_argument("--full", action="store_true", help="tabulate every i, not only i < dim")

    s = sub.add_parser("cm-check", parents=[common], help="Cohen-Macaulay test for I/J")
    s.add_argument("--J", required=True)
    s.add_argument("--I", required=True)

    s = sub.add_parser("symbolic", parents=[common], help="symbolic quotients of a complex")
    s.add_argument("--complex", required=True)
    s.add_argument("--t-range", dest="t_range", default=None, help="comma list, e.g. 1,2,3")

    s = sub.add_parser("discrepancy", parents=[common], help="I^(t)/I^t for an edge ideal")
    s.add_argument("--graph", required=True)
    s.add_argument("--no-cm", dest="no_cm", action="store_true")

    s = sub.add_parser("cm-edge", parents=[common], help="CM classification of I^(t)/I^t")
    s.add_argument("--graph", required=True)

    s = sub.add_parser("matroid", parents=[common], help="matroid tests for a complex")
    s.add_argument("--complex", required=True)
    return ap


def _normalize_argv(argv):
    # vectors may start with '-', which argparse would read as an option
    out = []
    k = 0
    while k < len(argv):
        tok = argv[k]
        if tok == "--piece" and k + 2 < len(argv):
            out += [f"--piece={argv[k + 1]}", f"--piece-degree={argv[k + 2]}"]
            k += 3
        elif tok == "--multidegree" and k + 1 < len(argv):
            out.append(f"--multidegree={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_normalize_argv(argv))
        cfg = _config(args)
        if args.command == "lc" and args.piece is None and not args.profile:
            raise UsageError("lc needs --piece i a or --profile")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            out, lines = COMMANDS[args.command](args, cfg)
        for w in caught:
            print(f"warning: {w.message}", file=stderr)
    except AssertionError as exc:  # TheoremViolation and failed certificates
        print(f"cross-check failed: {exc}", file=stderr)
        return 2
    except (UsageError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if cfg.json:
        print(json.dumps(out, sort_keys=True, indent=2, ensure_ascii=False), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return 0


def main(argv=None):
    sys.exit(run(argv))
