"""Command-line interface: ``glmy {analyze,qsim,encode,oracle-check}``.

Exit codes: 0 success, 1 verification disagreement, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .chain import build_complex, complex_to_json
from .digraph import Digraph, GraphError, max_allowed_path_length, parse_digraph
from .oracle import betti_omega
from .paths import DEFAULT_MAX_REGULAR_PATHS, SizeLimitError, enumerate_allowed
from .qsim import (
    DegenerateInputError,
    EncodingError,
    PhaseEstimationConfig,
    QubitEncoding,
    complexity_report,
    run_phase_estimation,
)
from .spectral import betti_numbers

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_graph(path: str) -> Digraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_digraph(text)


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _labels(g: Digraph) -> list:
    return list(g.labels)


def cmd_analyze(args) -> int:
    g = _read_graph(args.input)
    cx = build_complex(g, args.max_dim)
    report = betti_numbers(cx)
    zetas = [complexity_report(cx, k).zeta for k in cx.degrees]
    if args.format == "json":
        out = {
            "vertices": _labels(g),
            "edge_count": len(g.edges),
            "duplicate_edges": g.duplicate_edges,
            "top_degree": cx.top_degree,
            **report.to_json(),
            "zeta": [str(z) for z in zetas],
        }
        if args.emit_matrices:
            out["complex"] = complex_to_json(cx, emit_matrices=True)
        _emit(out)
        return EXIT_OK
    print(f"vertices: {g.n}  edges: {len(g.edges)}  top degree: {cx.top_degree}")
    if g.duplicate_edges:
        print(f"duplicate edges collapsed: {g.duplicate_edges}")
    print(f"{'k':>3} {'gamma':>6} {'betti':>6}  zeta")
    for d, z in zip(report.degrees, zetas):
        print(f"{d.degree:>3} {d.gamma_dim:>6} {d.betti:>6}  {z}")
    print(f"euler characteristic: {report.euler}")
    if args.emit_matrices:
        print(json.dumps(complex_to_json(cx, emit_matrices=True), indent=2))
    return EXIT_OK


def _phase_bits(text: str) -> int | None:
    if text == "exact":
        return None
    try:
        t = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer or 'exact'") from None
    if t < 1:
        raise argparse.ArgumentTypeError("phase bits must be >= 1")
    return t


def cmd_qsim(args) -> int:
    g = _read_graph(args.input)
    cx = build_complex(g, args.max_dim)
    if args.degree is None or not 0 <= args.degree <= cx.top_degree:
        raise InputError(f"--degree must be in 0..{cx.top_degree}")
    try:
        cfg = PhaseEstimationConfig(
            degree=args.degree,
            shots=args.shots,
            phase_bits=args.phase_bits,
            seed=args.seed,
            rescale=not args.no_rescale,
            hamiltonian=args.hamiltonian,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        rep = run_phase_estimation(cx, cfg, cap=args.max_regular_paths)
    except DegenerateInputError as exc:
        raise InputError(str(exc)) from None
    exact = betti_numbers(cx).betti[args.degree] if args.verify else None
    status = EXIT_OK if exact is None or exact == rep.betti_hat else EXIT_MISMATCH
    if args.format == "json":
        out = rep.to_json()
        if exact is not None:
            out["verify"] = {"betti_exact": exact, "agree": exact == rep.betti_hat}
        _emit(out)
        return status
    print(f"k={rep.degree} shots={rep.shots} seed={rep.seed} hamiltonian={rep.hamiltonian}")
    print(f"gamma_dim={rep.gamma_dim} zeta={rep.zeta} qubits={rep.qubits}")
    print(f"{'lambda':>14} {'prob':>12} {'mult':>5}")
    for s in rep.spectrum:
        print(f"{s.value:>14.8f} {s.prob:>12.8f} {s.multiplicity:>5}{'  zero' if s.is_zero else ''}")
    print(f"c_hat={rep.c_hat:.6f} betti_hat={rep.betti_hat} (exact zero mass {rep.zero_mass:.12f})")
    if exact is not None:
        print(f"verify: exact betti={exact} {'agree' if status == EXIT_OK else 'DISAGREE'}")
    return status


def _parse_path_token(tok: str, resolve) -> tuple[int, ...]:
    parts = tok.split(",") if "," in tok else list(tok)
    try:
        return tuple(resolve(p.strip()) for p in parts if p.strip())
    except (KeyError, ValueError):
        raise InputError(f"cannot parse path {tok!r}") from None


def cmd_encode(args) -> int:
    rows = []
    if args.n is not None:
        if args.d is None or not args.path:
            raise InputError("--n requires --d and at least one --path")
        enc = QubitEncoding(args.n, args.d)
        paths = [_parse_path_token(t, int) for t in args.path]
        names = ["".join(map(str, p)) if all(v < 10 for v in p) else ",".join(map(str, p)) for p in paths]
    else:
        g = _read_graph(args.input)
        d = max_allowed_path_length(g)
        enc = QubitEncoding(g.n, d if args.d is None else args.d)

        def resolve(tok):
            return g.index[int(tok) if tok.lstrip("-").isdigit() else tok]

        if args.path:
            paths = [_parse_path_token(t, resolve) for t in args.path]
        else:
            top = d if args.degree is None else args.degree
            paths = [p for k in range(top + 1) for p in enumerate_allowed(g, k)]
        names = [g.label_path(p) for p in paths]
    for name, p in zip(names, paths):
        try:
            regs = enc.registers(p)
        except EncodingError as exc:
            raise InputError(f"path {name}: {exc}") from None
        rows.append({"path": name, "registers": enc.format_registers(regs), "bits": enc.encode(p)})
    if args.format == "json":
        _emit({"n": enc.n, "d": enc.d, "bits_per_register": enc.bits, "qubits": enc.total_qubits, "paths": rows})
    else:
        for r in rows:
            print(f"{r['path']}  {' '.join(r['registers'])}  {r['bits']}")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    g = _read_graph(args.input)
    cx = build_complex(g, args.max_dim)
    emb = betti_numbers(cx).betti
    omg = betti_omega(g, args.max_dim)
    rows = [{"k": k, "betti_embedded": a, "betti_omega": b, "equal": a == b}
            for k, (a, b) in enumerate(zip(emb, omg))]
    ok = len(emb) == len(omg) and all(r["equal"] for r in rows)
    if args.format == "json":
        _emit({"degrees": rows, "agree": ok})
    else:
        print(f"{'k':>3} {'embedded':>9} {'omega':>6}")
        for r in rows:
            print(f"{r['k']:>3} {r['betti_embedded']:>9} {r['betti_omega']:>6}{'' if r['equal'] else '  MISMATCH'}")
        print("all degrees agree" if ok else "DISAGREEMENT")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", metavar="FILE|-", help="edge list or JSON digraph (default: stdin)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--max-dim", type=int, default=None, metavar="K", help="highest degree to report")
    common.add_argument("--max-regular-paths", type=int, default=DEFAULT_MAX_REGULAR_PATHS, metavar="N")

    p = argparse.ArgumentParser(prog="glmy", description="Path homology of acyclic digraphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="exact Betti numbers")
    a.add_argument("--emit-matrices", action="store_true")
    a.set_defaults(func=cmd_analyze)

    q = sub.add_parser("qsim", parents=[common], help="simulate the phase-estimation estimator")
    q.add_argument("--degree", type=int, required=True, metavar="K")
    q.add_argument("--shots", type=int, default=10_000, metavar="M")
    q.add_argument("--phase-bits", type=_phase_bits, default=None, metavar="T|exact")
    q.add_argument("--seed", type=int, default=0, metavar="S")
    q.add_argument("--verify", action="store_true", help="compare with the exact Betti number")
    q.add_argument("--hamiltonian", choices=("dirac", "laplacian"), default="dirac")
    q.add_argument("--no-rescale", action="store_true")
    q.set_defaults(func=cmd_qsim)

    e = sub.add_parser("encode", parents=[common], help="print qubit encodings of paths")
    e.add_argument("--n", type=int, default=None, help="vertex count (no digraph input)")
    e.add_argument("--d", type=int, default=None, help="maximal path length for register width")
    e.add_argument("--path", action="append", default=[], help="e.g. 024 or 3,2,0,1,4,5")
    e.add_argument("--degree", type=int, default=None, metavar="K")
    e.set_defaults(func=cmd_encode)

    o = sub.add_parser("oracle-check", parents=[common], help="compare with the Omega complex")
    o.set_defaults(func=cmd_oracle_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (GraphError, InputError, SizeLimitError, EncodingError, ValueError) as exc:
        print(f"glmy: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
