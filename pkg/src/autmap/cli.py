"""Batch command line.

Every command writes JSON to stdout (or ``--out``) and a one-line summary to
stderr. Exit codes: 0 success, 1 no witness found or a check came out
negative, 2 parse or precondition error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .elliptic import CURVE_37A1, P_37A1, infinite_order_sanity, multiples_table, on_curve
from .errors import AutmapError, CSearchExhausted, EquivalenceViolation, PreconditionError, ResourceCap
from .groebner import DEFAULT_MAX_PAIRS
from .lattice import build_S, stabilizer_bruteforce
from .oracle import DEFAULT_BOUND, DEFAULT_EVAL_CAP, check_equivalence, check_instance
from .polyring import homogenize, parse_auto, render_poly, total_degree
from .reducer import HOMOGENIZING_NAME, compile_instance, four_squares_transform
from .serialize import (
    SCHEMA_VERSION,
    descriptor_from_json,
    descriptor_to_json,
    dumps,
    g_to_json,
    point_to_json,
    poly_to_json,
    report_to_json,
    smoothing_to_json,
)
from .smoothing import DEFAULT_C_MAX, smooth_lift

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    expression: str | None = None
    file: str | None = None
    instance: str | None = None
    bound: int = DEFAULT_BOUND
    c_max: int = DEFAULT_C_MAX
    mode: str = "Z"
    order: str = "grevlex"
    eval_cap: int = DEFAULT_EVAL_CAP
    max_pairs: int = DEFAULT_MAX_PAIRS
    out: str | None = None
    n: int = 3
    k: int = 12
    var: str = HOMOGENIZING_NAME

    def __post_init__(self):
        for name in ("c_max", "eval_cap", "max_pairs"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"--{name.replace('_', '-')} must be positive")
        if self.bound < 0:
            raise PreconditionError("--bound must be nonnegative")


def read_expression_file(path: str) -> str:
    """One polynomial per file; ``#`` starts a comment."""
    with open(path, encoding="utf-8") as fh:
        lines = [line.split("#", 1)[0] for line in fh]
    text = " ".join(line.strip() for line in lines).strip()
    if not text:
        raise PreconditionError(f"{path} contains no expression")
    return text


def _input_poly(cfg: RunConfig):
    if (cfg.expression is None) == (cfg.file is None):
        raise PreconditionError("give exactly one of --f or --file")
    text = cfg.expression if cfg.expression is not None else read_expression_file(cfg.file)
    return parse_auto(text)


def _envelope(command: str, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **body}


def cmd_smooth(cfg):
    res = smooth_lift(_input_poly(cfg), c_max=cfg.c_max, order=cfg.order, max_pairs=cfg.max_pairs)
    summary = f"c = {res.c}, certificate {{1}}, deg {res.degree_in} -> {res.degree_out}"
    return _envelope("smooth", smoothing_to_json(res)), summary, EXIT_OK


def cmd_homog(cfg):
    f = _input_poly(cfg)
    name = f.registry.fresh_name(cfg.var)
    F = homogenize(f, name)
    body = {"input": poly_to_json(f), "homogenizing_variable": name, "output": poly_to_json(F)}
    return _envelope("homog", body), f"homogenized with {name}: {render_poly(F)}", EXIT_OK


def cmd_foursq(cfg):
    f = _input_poly(cfg)
    g = four_squares_transform(f)
    m, d = f.registry.arity, total_degree(f)
    body = {
        "input": poly_to_json(f),
        "output": poly_to_json(g),
        "variables_in": m, "degree_in": d,
        "variables_out": g.registry.arity, "degree_out": total_degree(g),
    }
    return _envelope("foursq", body), f"(m, d) = ({m}, {d}) -> ({g.registry.arity}, {total_degree(g)})", EXIT_OK


def cmd_lattice_s(cfg):
    S = build_S(cfg.n)
    body = {"n": cfg.n, "S": [list(s) for s in S.points]}
    return _envelope("lattice-s", body), f"|S| = {len(S)} in Z^{cfg.n}", EXIT_OK


def cmd_stab_check(cfg):
    maps = stabilizer_bruteforce(cfg.n, cfg.bound, cap=cfg.eval_cap)
    all_g = all(m.is_g_form() for m in maps)
    body = {
        "n": cfg.n,
        "entry_bound": cfg.bound,
        "count": len(maps),
        "all_g_form": all_g,
        "maps": [g_to_json(m.to_g_element()) if m.is_g_form() else {"A": m.A, "b": m.b} for m in maps],
    }
    summary = f"{len(maps)} maps preserve S, all of G-form: {all_g}"
    return _envelope("stab-check", body), summary, EXIT_OK if all_g else EXIT_NEGATIVE


def cmd_ec_mul(cfg):
    E, P = CURVE_37A1, P_37A1
    table = multiples_table(P, cfg.k, E)
    sane = infinite_order_sanity(P, E)
    body = {
        "curve": "37A1",
        "P": point_to_json(P),
        "multiples": [{"k": k, "point": point_to_json(pt), "on_curve": on_curve(pt, E)}
                      for k, pt in table.items()],
        "infinite_order_sanity": sane,
    }
    summary = f"k*P for |k| <= {cfg.k} on 37A1; infinite order sanity: {sane}"
    return _envelope("ec-mul", body), summary, EXIT_OK if sane else EXIT_NEGATIVE


def cmd_compile(cfg):
    desc = compile_instance(_input_poly(cfg), mode=cfg.mode, c_max=cfg.c_max, order=cfg.order,
                            max_pairs=cfg.max_pairs)
    summary = f"n = {desc.n}, c = {desc.smoothing.c}, Z: {render_poly(desc.Z_equation)} = 0"
    return descriptor_to_json(desc), summary, EXIT_OK


def cmd_verify(cfg):
    if cfg.instance is not None:
        if cfg.expression is not None or cfg.file is not None:
            raise PreconditionError("--instance excludes --f and --file")
        with open(cfg.instance, encoding="utf-8") as fh:
            desc = descriptor_from_json(json.load(fh))
        report = check_instance(desc, cfg.bound, cfg.eval_cap)
    else:
        report = check_equivalence(_input_poly(cfg), cfg.bound, c_max=cfg.c_max, mode=cfg.mode,
                                   cap=cfg.eval_cap, order=cfg.order, max_pairs=cfg.max_pairs)
    summary = (f"consistent: {report.consistent}; {len(report.f_zeros)} zero(s), "
               f"{report.verdict}")
    code = EXIT_OK if report.sigma_witnesses else EXIT_NEGATIVE
    return report_to_json(report), summary, code


COMMANDS = {
    "smooth": cmd_smooth,
    "homog": cmd_homog,
    "foursq": cmd_foursq,
    "lattice-s": cmd_lattice_s,
    "stab-check": cmd_stab_check,
    "ec-mul": cmd_ec_mul,
    "compile": cmd_compile,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="autmap", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, poly=True):
        if poly:
            p.add_argument("--f", dest="expression", help="polynomial expression")
            p.add_argument("--file", help="file holding one polynomial expression")
        p.add_argument("--out", help="write JSON here instead of stdout")

    def pipeline(p):
        p.add_argument("--c-max", type=int, default=DEFAULT_C_MAX)
        p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
        p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)

    p = sub.add_parser("smooth", help="least c making c(y^2-y)+f^2 smooth, with certificate")
    common(p)
    pipeline(p)
    p = sub.add_parser("homog", help="homogenize a polynomial")
    common(p)
    p.add_argument("--var", default=HOMOGENIZING_NAME)
    p = sub.add_parser("foursq", help="replace each variable by a sum of four squares")
    common(p)
    p = sub.add_parser("lattice-s", help="the lattice set S in Z^n")
    common(p, poly=False)
    p.add_argument("--n", type=int, default=3)
    p = sub.add_parser("stab-check", help="bounded search for affine maps preserving S")
    common(p, poly=False)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--bound", type=int, default=1)
    p.add_argument("--eval-cap", type=int, default=DEFAULT_EVAL_CAP)
    p = sub.add_parser("ec-mul", help="multiples of P = (0, 0) on 37A1")
    common(p, poly=False)
    p.add_argument("--k", type=int, default=12)
    p = sub.add_parser("compile", help="compile f into an automorphism-problem instance")
    common(p)
    pipeline(p)
    p.add_argument("--mode", choices=("Z", "N"), default="Z")
    p = sub.add_parser("verify", help="bounded check of the zero/witness equivalence")
    common(p)
    pipeline(p)
    p.add_argument("--mode", choices=("Z", "N"), default="Z")
    p.add_argument("--instance", help="instance JSON written by 'compile'")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--eval-cap", type=int, default=DEFAULT_EVAL_CAP)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fields = {k: v for k, v in vars(args).items() if v is not None and k in RunConfig.__dataclass_fields__}
    try:
        cfg = RunConfig(**fields)
        payload, summary, code = COMMANDS[cfg.command](cfg)
    except (ResourceCap, CSearchExhausted) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CAP
    except EquivalenceViolation as exc:
        print(f"equivalence violated: {exc}", file=stderr)
        return EXIT_NEGATIVE
    except (PreconditionError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except AutmapError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NEGATIVE
    text = dumps(payload)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    print(summary, file=stderr)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
