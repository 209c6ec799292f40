"""Command-line surface: build algebras, emit matrices, run exact checks.

Commands
    taft             Taft Hopf algebra reports, and R-matrices of its double
    uqsl2            spin-1/2 / spin-1 R-matrices
    double           algebraic Yang-Baxter checks inside D(T_N)
    baxterize        graded decomposition of the canonical element, with mu
    verify           re-check a serialized matrix (JSON) exactly
    all-regressions  the full twelve-item acceptance ladder

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.
Matrices go to stdout or --output (resolved against $HOPFBAX_OUTPUT_DIR
when relative); check reports go to stderr so JSON output stays clean.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .baxterize import baxterize, baxterize_zn, decompose_graded, evaluate_at_one
from .double import CONVENTIONS, DEFAULT_CONVENTION, build_double, canonical_r, \
    check_constant_ybe_algebraic, check_parametric_ybe_algebraic, double_grading
from .hopf import check_coproduct_grading, check_grading, check_hopf_axioms
from .matrices import ParametricMatrix
from .scalars import cyclotomic, parse_scalar
from .taft import build_taft, rep_indecomposable, rep_irreducible, \
    taft_r_matrix, x_degree_grading
from .uqsl2 import spin_half, spin_one, uqsl2_r_matrix
from .ybe import braid_check, check_constant_ybe, check_parametric_ybe

OUTPUT_DIR_ENV = "HOPFBAX_OUTPUT_DIR"


class UsageError(ValueError):
    pass


@dataclass
class JobConfig:
    command: str
    fmt: str = "text"
    output: str | None = None
    parametric: bool = False
    verify: bool = False
    N: int = 0
    q: str | None = None
    rep: tuple | None = None          # (n, l) for the irreducible module
    alpha: str | None = None          # indecomposable wrap parameter
    l: int | None = None
    spin: str | None = None
    convention: str = DEFAULT_CONVENTION
    zn: bool = False
    input_path: str | None = None
    kind: str = "auto"
    raw: bool = False
    extra: dict = field(default_factory=dict)


def _parse_rep(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--rep expects 'n,l', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"--rep expects two integers, got {text!r}") from None


def _emit(text: str, config: JobConfig):
    if config.output:
        path = config.output
        base = os.environ.get(OUTPUT_DIR_ENV)
        if base and not os.path.isabs(path):
            path = os.path.join(base, path)
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit_matrix(m: ParametricMatrix, config: JobConfig):
    if config.fmt == "json":
        _emit(m.to_json().rstrip("\n"), config)
    elif config.fmt == "latex":
        _emit(m.to_latex(), config)
    else:
        _emit(m.to_text(), config)


def _report_out(report, config: JobConfig) -> int:
    text = json.dumps(report.to_dict(), indent=2, sort_keys=True) \
        if config.fmt == "json" else report.summary()
    print(text, file=sys.stderr)
    return 0 if report.passed else 1


def _taft_q(config: JobConfig):
    domain = cyclotomic(config.N)
    if config.q is None:
        return domain.q()
    return parse_scalar(config.q, domain)


def run_taft(config: JobConfig) -> int:
    if config.N < 2:
        raise UsageError("--N must be at least 2")
    h = build_taft(config.N, _taft_q(config))
    if config.rep is None and config.alpha is None:
        status = 0
        reports = [check_hopf_axioms(h),
                   check_grading(h.algebra, x_degree_grading(h)),
                   check_coproduct_grading(h, x_degree_grading(h))]
        for r in reports:
            print(r.summary(), file=sys.stderr)
            status |= 0 if r.passed else 1
        return status
    d = build_double(h, config.convention)
    if config.rep is not None:
        n, l = config.rep
        if not (1 <= n <= config.N and 1 <= l <= config.N):
            raise UsageError(f"--rep indices must lie in 1..{config.N}")
        rep = rep_irreducible(d, n, l)
    else:
        if config.l is None:
            raise UsageError("--indecomposable needs --l")
        alpha = parse_scalar(config.alpha, h.domain)
        rep = rep_indecomposable(d, alpha, config.l)
    normalize = (config.rep is not None) and not config.raw
    m = taft_r_matrix(rep, parametric=config.parametric, normalize=normalize)
    _emit_matrix(m, config)
    if config.verify:
        report = check_parametric_ybe(m) if config.parametric \
            else check_constant_ybe(m)
        return _report_out(report, config)
    return 0


def run_uqsl2(config: JobConfig) -> int:
    if config.spin not in ("1/2", "1"):
        raise UsageError("--spin must be 1/2 or 1")
    rep = spin_half() if config.spin == "1/2" else spin_one()
    m = uqsl2_r_matrix(rep, parametric=config.parametric)
    _emit_matrix(m, config)
    if config.verify:
        report = check_parametric_ybe(m) if config.parametric \
            else check_constant_ybe(m)
        return _report_out(report, config)
    return 0


def run_double(config: JobConfig) -> int:
    if config.N < 2:
        raise UsageError("--N must be at least 2")
    d = build_double(build_taft(config.N, _taft_q(config)), config.convention)
    r = canonical_r(d)
    status = _report_out(check_constant_ybe_algebraic(d, r), config)
    if config.parametric:
        grading = double_grading(d, x_degree_grading(d.h))
        r_mu = baxterize(decompose_graded(r.tensor(), grading, grading))
        status |= _report_out(check_parametric_ybe_algebraic(d, r_mu), config)
    return status


def run_baxterize(config: JobConfig) -> int:
    if config.N < 2:
        raise UsageError("--N must be at least 2")
    d = build_double(build_taft(config.N, _taft_q(config)), config.convention)
    r = canonical_r(d).tensor()
    grading = double_grading(d, x_degree_grading(d.h))
    if config.zn:
        lifted = grading.lift_zn(lambda j: (j, 0))
        graded = decompose_graded(r, lifted, lifted)
        r_mu = baxterize_zn(graded, (1, 1))
    else:
        graded = decompose_graded(r, grading, grading)
        r_mu = baxterize(graded)
    if evaluate_at_one(r_mu) != r:
        print("FAIL  mu=1 does not recover the constant element",
              file=sys.stderr)
        return 1
    if config.fmt == "json":
        payload = {"degrees": [str(k) for k in graded.degrees],
                   "terms": str(r_mu)}
        _emit(json.dumps(payload, indent=2, sort_keys=True), config)
    else:
        _emit(str(r_mu), config)
    return 0


def run_verify(config: JobConfig) -> int:
    try:
        with open(config.input_path, encoding="utf-8") as fh:
            m = ParametricMatrix.from_json(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load matrix: {exc}") from exc
    kind = config.kind
    if kind == "auto":
        kind = "parametric" if m.uses_parameters() else "constant"
    if kind == "parametric":
        report = check_parametric_ybe(m)
    elif kind == "braid":
        report = braid_check(m)
    else:
        report = check_constant_ybe(m.at_one())
    return _report_out(report, config)


def run_regressions(config: JobConfig) -> int:
    from .regressions import run_all
    results = run_all()
    if config.fmt == "json":
        _emit(json.dumps([r.to_dict() for r in results], indent=2,
                         sort_keys=True), config)
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


_RUNNERS = {"taft": run_taft, "uqsl2": run_uqsl2, "double": run_double,
            "baxterize": run_baxterize, "verify": run_verify,
            "all-regressions": run_regressions}


def run(config: JobConfig) -> int:
    return _RUNNERS[config.command](config)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopfbax",
        description="Exact Yang-Baxter solutions from graded Hopf algebras")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "latex", "text"),
                        default="text", dest="fmt")
        sp.add_argument("--output", default=None,
                        help=f"file path; relative paths resolve against "
                             f"${OUTPUT_DIR_ENV} when it is set")

    sp = sub.add_parser("taft", help="Taft algebra checks and R-matrices")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--q", default=None,
                    help="primitive N-th root as a scalar string "
                         "(default: the canonical generator)")
    sp.add_argument("--rep", type=str, default=None, metavar="n,l",
                    help="irreducible module indices")
    sp.add_argument("--indecomposable", dest="alpha", default=None,
                    metavar="ALPHA", help="wrap parameter (scalar string)")
    sp.add_argument("--l", type=int, default=None)
    sp.add_argument("--parametric", action="store_true")
    sp.add_argument("--raw", action="store_true",
                    help="emit the unnormalized canonical-element image")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--convention", choices=CONVENTIONS,
                    default=DEFAULT_CONVENTION)
    common(sp)

    sp = sub.add_parser("uqsl2", help="spin-1/2 and spin-1 R-matrices")
    sp.add_argument("--spin", required=True)
    sp.add_argument("--parametric", action="store_true")
    sp.add_argument("--verify", action="store_true")
    common(sp)

    sp = sub.add_parser("double", help="algebraic YBE checks in D(T_N)")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--q", default=None)
    sp.add_argument("--parametric", action="store_true",
                    help="also check the mu,nu identity")
    sp.add_argument("--convention", choices=CONVENTIONS,
                    default=DEFAULT_CONVENTION)
    common(sp)

    sp = sub.add_parser("baxterize",
                        help="graded decomposition of the canonical element")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--q", default=None)
    sp.add_argument("--zn", action="store_true",
                    help="route through the Z^2 lift with coordinate-sum tau")
    sp.add_argument("--convention", choices=CONVENTIONS,
                    default=DEFAULT_CONVENTION)
    common(sp)

    sp = sub.add_parser("verify", help="re-check a serialized matrix")
    sp.add_argument("--input", required=True, dest="input_path")
    sp.add_argument("--kind", choices=("auto", "constant", "parametric",
                                       "braid"), default="auto")
    common(sp)

    sp = sub.add_parser("all-regressions", help="run the acceptance ladder")
    common(sp)
    return p


def _config_from_args(args) -> JobConfig:
    cfg = JobConfig(command=args.command,
                    fmt=getattr(args, "fmt", "text"),
                    output=getattr(args, "output", None),
                    parametric=getattr(args, "parametric", False),
                    verify=getattr(args, "verify", False),
                    N=getattr(args, "N", 0) or 0,
                    q=getattr(args, "q", None),
                    alpha=getattr(args, "alpha", None),
                    l=getattr(args, "l", None),
                    spin=getattr(args, "spin", None),
                    convention=getattr(args, "convention", DEFAULT_CONVENTION),
                    zn=getattr(args, "zn", False),
                    input_path=getattr(args, "input_path", None),
                    kind=getattr(args, "kind", "auto"))
    rep = getattr(args, "rep", None)
    if rep is not None:
        cfg.rep = _parse_rep(rep)
    if cfg.rep is not None and cfg.alpha is not None:
        raise UsageError("--rep and --indecomposable are mutually exclusive")
    cfg.raw = getattr(args, "raw", False)
    return cfg


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _config_from_args(args)
        return run(config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
