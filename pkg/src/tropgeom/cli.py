"""Command-line front end.

Each subcommand reads one JSON document (``--input``, default stdin),
writes a JSON result (or SVG for ``render``) and exits with 0 on success,
1 on a domain error (the body is ``{"error": ..., "message": ...}``) and 2
on malformed input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .arith import Flavor, semiring
from .collineation import (
    CollineationOracle,
    SemilinearMap,
    coordinate_permutation,
    induced_collineation,
    random_monomial_map,
    reconstruct_semilinear,
    tp2_automorphism_suite,
    DEFAULT_SAMPLES,
)
from .crossratio import cross_ratio, find_noninvariance_witness, matrix_transform
from .errors import ConventionMismatch, TropicalError
from .linalg import is_tropically_singular, tdet
from .pencils import construct_from_pencils, perspectivity_apply, reduce_pencil
from .plane import (
    general_position,
    incidence,
    is_coaxial_lines,
    is_coaxial_points,
    line_intersection,
    stable_intersect,
    stable_line,
)
from .render import render_document
from .serialize import (
    SCHEMA,
    MalformedInput,
    dec_fraction,
    dec_line,
    dec_matrix,
    dec_pencil,
    dec_point,
    dec_scalar,
    dec_vector,
    enc_label,
    enc_line,
    enc_matrix,
    enc_pencil,
    enc_point,
    enc_projectivity,
    enc_scalar,
    enc_vector,
)

EXIT_OK, EXIT_DOMAIN, EXIT_MALFORMED = 0, 1, 2


def _field(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedInput(f"missing field {key!r}")
    return doc[key]


def _pair(doc, key, decode):
    items = _field(doc, key)
    if not isinstance(items, list) or len(items) != 2:
        raise MalformedInput(f"{key!r} must hold exactly two entries")
    return [decode(x) for x in items]


def _plane_only(args):
    if args.sr.flavor is not Flavor.MAX_PLUS:
        raise ConventionMismatch("plane geometry is implemented for the max-plus convention")


def cmd_line(doc, args):
    _plane_only(args)
    L = dec_line(_field(doc, "line"))
    return {"line": enc_line(L), "canonical": enc_vector(L.canonical())}


def cmd_incidence(doc, args):
    _plane_only(args)
    L, p = dec_line(_field(doc, "line")), dec_point(_field(doc, "point"))
    inc = incidence(p, L)
    return {"on": inc.on, "ray": enc_label(inc.label)}


def cmd_stable_line(doc, args):
    _plane_only(args)
    p, q = _pair(doc, "points", dec_point)
    L = stable_line(p, q)
    return {"line": enc_line(L), "vertex": enc_point(L.vertex), "coaxial": is_coaxial_points(p, q)}


def cmd_intersect(doc, args):
    _plane_only(args)
    L1, L2 = _pair(doc, "lines", dec_line)
    meet = line_intersection(L1, L2)
    return {
        "stable": enc_point(stable_intersect(L1, L2)),
        "general_position": general_position(L1, L2),
        "points": [enc_point(p) for p in meet.points],
        "rays": [{"start": enc_point(s), "direction": list(d)} for s, d in meet.rays],
    }


def cmd_coaxial(doc, args):
    _plane_only(args)
    if "lines" in doc:
        L1, L2 = _pair(doc, "lines", dec_line)
        return {"coaxial": is_coaxial_lines(L1, L2)}
    p, q = _pair(doc, "points", dec_point)
    return {"coaxial": is_coaxial_points(p, q)}


def cmd_pencil(doc, args):
    _plane_only(args)
    P = dec_pencil(_field(doc, "pencil") if "pencil" in doc else doc)
    R = reduce_pencil(P)
    return {
        "pencil": enc_pencil(P),
        "counts": {"p": P.p, "q": P.q, "r": P.r},
        "reduced": {label.value: enc_point(pt) for label, pt in R.reps.items()},
    }


def cmd_perspectivity(doc, args):
    _plane_only(args)
    center = dec_point(_field(doc, "center"))
    src, dst = dec_line(_field(doc, "source")), dec_line(_field(doc, "target"))
    pts = [dec_point(p) for p in _field(doc, "points")]
    return {
        "center": enc_point(center),
        "images": [enc_point(perspectivity_apply(center, src, dst, X)) for X in pts],
    }


def _choice(doc):
    choice = doc.get("choice", 0)
    if isinstance(choice, bool) or not isinstance(choice, int) or choice < 0:
        raise MalformedInput(f"choice must be a nonnegative integer, got {choice!r}")
    return choice


def cmd_projectivity(doc, args):
    _plane_only(args)
    P1, P2 = dec_pencil(_field(doc, "source")), dec_pencil(_field(doc, "target"))
    f = construct_from_pencils(P1, P2, _choice(doc))
    probes = [dec_point(p) for p in doc.get("apply", [])] or list(P1.points)
    return {
        "projectivity": enc_projectivity(f),
        "images": [[enc_point(X), enc_point(f(X))] for X in probes],
    }


def cmd_tdet(doc, args):
    M = dec_matrix(_field(doc, "matrix"))
    return {"tdet": enc_scalar(tdet(M, args.sr)), "singular": is_tropically_singular(M, args.sr)}


def cmd_singular(doc, args):
    M = dec_matrix(_field(doc, "matrix"))
    return {"singular": is_tropically_singular(M, args.sr), "tdet": enc_scalar(tdet(M, args.sr))}


def cmd_crossratio(doc, args):
    quad = _field(doc, "quadruple")
    if not isinstance(quad, list) or len(quad) != 4:
        raise MalformedInput("a quadruple has four vectors")
    quad = [dec_vector(v) for v in quad]
    res = cross_ratio(*quad, sr=args.sr)
    out = {"value": enc_scalar(res.value), "numer": enc_scalar(res.numer), "denom": enc_scalar(res.denom)}
    if "scalings" in doc:
        scalings = [dec_scalar(t) for t in doc["scalings"]]
        if len(scalings) != 4:
            raise MalformedInput("need four scalings")
        scaled = [tuple(args.sr.mul(t, x) for x in v) for t, v in zip(scalings, quad)]
        after = cross_ratio(*scaled, sr=args.sr).value
        out.update({"scaled_value": enc_scalar(after), "invariant": after == res.value})
    if "matrix" in doc:
        M = dec_matrix(doc["matrix"])
        after = cross_ratio(*(matrix_transform(M, v, args.sr) for v in quad), sr=args.sr).value
        out.update({"transformed_value": enc_scalar(after), "invariant": after == res.value})
    return out


def cmd_witness(doc, args):
    w = find_noninvariance_witness(seed=args.seed, budget=args.budget, sr=args.sr)
    return {
        "seed": args.seed,
        "budget": args.budget,
        "tried": w.tried,
        "matrix": enc_matrix(w.M),
        "quadruple": [enc_vector(v) for v in w.quadruple],
        "value_before": enc_scalar(w.value_before),
        "value_after": enc_scalar(w.value_after),
    }


def _oracle(doc, args) -> tuple[CollineationOracle, dict]:
    if "permutation" in doc:
        perm = doc["permutation"]
        if not isinstance(perm, list) or sorted(perm) != list(range(len(perm))):
            raise MalformedInput(f"not a permutation: {perm!r}")
        return coordinate_permutation(perm, args.sr), {"permutation": perm}
    if "matrix" in doc:
        f = SemilinearMap(dec_matrix(doc["matrix"]), dec_fraction(doc.get("mu_scale", "1")))
    else:
        n = doc.get("n", 3)
        if isinstance(n, bool) or not isinstance(n, int):
            raise MalformedInput("n must be an integer")
        f = random_monomial_map(random.Random(args.seed), n)
    return induced_collineation(f, args.sr), {"matrix": enc_matrix(f.matrix), "mu_scale": enc_scalar(f.mu_scale)}


def cmd_reconstruct(doc, args):
    doc = doc or {}
    sigma, source = _oracle(doc, args)
    samples = [dec_scalar(c) for c in doc["samples"]] if "samples" in doc else DEFAULT_SAMPLES
    rec = reconstruct_semilinear(sigma, sigma.n, samples, dec_scalar(doc.get("v1_offset", 0)), args.sr)
    return {
        "source": source,
        "v1": enc_vector(rec.basis_images[0]),
        "basis_images": [enc_vector(v) for v in rec.basis_images],
        "gammas": [enc_scalar(g) for g in rec.gammas],
        "mu_table": [[enc_scalar(c), enc_scalar(m)] for c, m in rec.mu_table],
        "fitted_scale": None if rec.fitted_scale is None else enc_scalar(rec.fitted_scale),
        "checks": rec.checks,
        "queries": rec.queries,
        "ok": rec.ok,
    }


def cmd_check_tp2(doc, args):
    report = tp2_automorphism_suite(sr=args.sr)
    return {
        "classes": report.classes,
        "coaxial_triples": report.triples,
        "passed": report.passed,
        "permutations": [
            {"perm": list(r.perm), "preserves_coaxiality": r.preserves,
             "monomial": r.reconstructed_monomial, "mu_identity": r.mu_identity, "passed": r.passed}
            for r in report.results
        ],
    }


COMMANDS = {
    "line": cmd_line,
    "incidence": cmd_incidence,
    "stable-line": cmd_stable_line,
    "intersect": cmd_intersect,
    "coaxial": cmd_coaxial,
    "pencil": cmd_pencil,
    "perspectivity": cmd_perspectivity,
    "projectivity": cmd_projectivity,
    "tdet": cmd_tdet,
    "singular": cmd_singular,
    "crossratio": cmd_crossratio,
    "witness": cmd_witness,
    "reconstruct": cmd_reconstruct,
    "check-tp2": cmd_check_tp2,
    "render": None,
}
# subcommands that run without an input document unless --input is given
NO_INPUT = {"witness", "check-tp2", "reconstruct"}


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tropgeom", description="Exact tropical plane geometry.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", default=None, help="JSON file, or - for stdin")
    parser.add_argument("--output", default="-", help="output file, or - for stdout")
    parser.add_argument("--convention", choices=["max", "min"], default=None)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--budget", type=int, default=10 ** 5)
    return parser


def _read(path, stdin):
    if path in (None, "-"):
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text, path, stdout):
    if path in (None, "-"):
        stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _reject_floats(text):
    raise MalformedInput(f"floating point literal {text}; write it as a string such as \"1/2\"")


def run(argv=None, stdin=None, stdout=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
    except _Usage as exc:
        _write(_dumps({"error": "usage", "message": str(exc)}), "-", stdout)
        return EXIT_MALFORMED

    try:
        if args.command in NO_INPUT and args.input is None:
            doc = {}
        else:
            doc = json.loads(_read(args.input, stdin), parse_float=_reject_floats)
        convention = args.convention or (doc.get("convention", "max") if isinstance(doc, dict) else "max")
        args.sr = semiring(convention)
        if args.budget < 1:
            raise MalformedInput("budget must be at least 1")
        if args.command == "render":
            text = render_document(doc)
        else:
            result = COMMANDS[args.command](doc, args)
            text = _dumps({"schema": SCHEMA, "command": args.command, **result})
    except TropicalError as exc:
        _write(_dumps({"error": type(exc).__name__, "message": str(exc)}), "-", stdout)
        return EXIT_DOMAIN
    except (MalformedInput, json.JSONDecodeError, KeyError, TypeError, ValueError, OSError) as exc:
        _write(_dumps({"error": "malformed", "message": str(exc)}), "-", stdout)
        return EXIT_MALFORMED
    _write(text, args.output, stdout)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
