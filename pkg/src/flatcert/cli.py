"""Command-line front end.

Subcommands: ``family``, ``cycles``, ``bohme-check``, ``sphere-check``,
``cert verify``, ``cert search``, ``linking omega``, ``export dot``.
Graphs are given either as JSON files or as bundled family names, so the
shipped results reproduce with zero input files.  Exit codes: 0 for
success or a verified check, 1 for a failed check (with a witness
printed), 2 for usage or file-format errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import certificates as certs
from . import cycles as cyc
from . import graphs as gr
from . import linking as lnk
from . import spheres as sph


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _mark(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if _color_enabled():
        code = "32" if ok else "31"
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def _load_graph(spec: str) -> gr.Graph:
    upper = spec.upper()
    if upper in gr.FAMILY_NAMES:
        return gr.named_graph(upper)
    path = Path(spec)
    if not path.exists():
        raise gr.GraphError(
            f"{spec!r} is neither a bundled family name {gr.FAMILY_NAMES} nor a file"
        )
    return gr.graph_from_json(json.loads(path.read_text("utf-8")))


def _load_json(path: str):
    return json.loads(Path(path).read_text("utf-8"))


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_family(args) -> int:
    members = gr.generate_petersen_family()
    payload = [
        {
            "name": m.name,
            "vertices": len(m.graph.vertices),
            "edges": len(m.graph.edges),
            "provenance": list(m.provenance),
        }
        for m in members
    ]
    lines = [
        f"{m.name:12s} {len(m.graph.vertices):2d} vertices  {len(m.graph.edges)} edges  "
        + (" -> ".join(["K6"] + list(m.provenance)) if m.provenance else "seed graph")
        for m in members
    ]
    _emit(args, {"family": payload}, lines)
    return 0


def _cmd_cycles(args) -> int:
    G = _load_graph(args.graph)
    found = cyc.enumerate_cycles(G, max_len=args.max_len, induced_only=args.induced)
    payload = {"count": len(found), "cycles": [list(c.seq) for c in found]}
    lines = [" ".join(c.seq) for c in found] + [f"total: {len(found)}"]
    _emit(args, payload, lines)
    return 0


def _cmd_bohme_check(args) -> int:
    G = _load_graph(args.graph)
    cycles = cyc.cycle_set_from_json(_load_json(args.cycles))
    verdict = cyc.is_bohme_system(cycles, G)
    witness = (
        [list(verdict.witness[0].seq), list(verdict.witness[1].seq)]
        if verdict.witness
        else None
    )
    payload = {"ok": verdict.ok, "witness": witness}
    lines = [f"bohme-system: {_mark(verdict.ok)}"]
    if witness:
        lines.append(f"witness: {witness[0]} and {witness[1]} intersect in >= 2 components")
    _emit(args, payload, lines)
    return 0 if verdict.ok else 1


def _cmd_sphere_check(args) -> int:
    G = _load_graph(args.graph)
    system = sph.system_from_json(G, _load_json(args.system))
    verdict = sph.is_combinatorial_sphere(system)
    payload = {
        "is_closed_surface": verdict.is_closed_surface,
        "is_sphere": verdict.is_sphere,
        "euler_characteristic": verdict.euler_characteristic,
        "failures": [{"kind": f.kind, "detail": f.detail} for f in verdict.failures],
    }
    lines = [
        f"closed surface: {_mark(verdict.is_closed_surface)}",
        f"euler characteristic: {verdict.euler_characteristic}",
        f"sphere: {_mark(verdict.is_sphere)}",
    ] + [f"failure[{f.kind}]: {f.detail}" for f in verdict.failures]
    _emit(args, payload, lines)
    return 0 if verdict.is_sphere else 1


def _cmd_cert_verify(args) -> int:
    G = _load_graph(args.graph)
    if args.bundled:
        name = args.graph.upper()
        if name not in gr.FAMILY_NAMES:
            raise certs.MalformedCertificateError(
                "--bundled needs the graph given as a family name"
            )
        cert = certs.bundled_certificate(name)
    else:
        if not args.cert:
            raise certs.MalformedCertificateError("give a certificate file or --bundled")
        cert = certs.certificate_from_json(_load_json(args.cert))
    report = certs.verify_certificate(G, cert)
    payload = certs.report_to_json(report)
    lines = [
        f"{c.name:24s} {_mark(c.passed)}" + (f"  ({c.witness})" if c.witness else "")
        for c in report.checks
    ]
    lines.append(f"certificate: {_mark(report.passed)}")
    _emit(args, payload, lines)
    return 0 if report.passed else 1


def _cmd_cert_search(args) -> int:
    G = _load_graph(args.graph)
    found = certs.search_certificates(
        G,
        max_base_len=args.max_base_len,
        schemas=tuple(args.schema) if args.schema else None,
        max_results=args.max_results,
    )
    payload = {
        "count": len(found),
        "certificates": [certs.certificate_to_json(c) for c in found],
    }
    lines = [
        f"{c.schema:20s} base={'-'.join(c.base.vertices)} "
        f"connectors={['-'.join(p) for p in c.connectors]}"
        for c in found
    ] + [f"total: {len(found)}"]
    _emit(args, payload, lines)
    return 0 if found else 1


def _cmd_linking_omega(args) -> int:
    G = _load_graph(args.graph)
    mode = lnk.TRIANGLES_ONLY if args.mode == "triangles" else lnk.ALL_DISJOINT_CYCLES
    radius = args.radius if args.radius is not None else max(100, len(G.vertices))
    trials = []
    histogram = {0: 0, 1: 0}
    for k in range(args.trials):
        seed = args.seed + k
        E = lnk.random_embedding(G, seed, radius)
        report = lnk.omega(G, E, mode)
        histogram[report.parity] += 1
        trials.append((seed, report))
    payload = {
        "mode": mode,
        "parity_histogram": {str(k): v for k, v in histogram.items()},
        "trials": [
            {"seed": seed, **lnk.omega_to_json(report)} for seed, report in trials
        ],
    }
    lines = []
    for seed, report in trials:
        nonzero = sum(1 for _, _, lk in report.pairs if lk != 0)
        lines.append(
            f"seed {seed}: parity {report.parity}  "
            f"({len(report.pairs)} disjoint pairs, {nonzero} with lk != 0)"
        )
    lines.append(f"parity histogram: 0 -> {histogram[0]}, 1 -> {histogram[1]}")
    _emit(args, payload, lines)
    return 0 if histogram[0] == 0 else 1


def _cmd_export_dot(args) -> int:
    G = _load_graph(args.graph)
    sys.stdout.write(gr.graph_to_dot(G))
    return 0


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flatcert",
        description="Petersen-family non-flatness certificates and linking checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="list the seven family members")
    _add_format(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("cycles", help="enumerate simple cycles of a graph")
    p.add_argument("graph")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--induced", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_cycles)

    p = sub.add_parser("bohme-check", help="pairwise-connected-intersection check")
    p.add_argument("graph")
    p.add_argument("cycles")
    _add_format(p)
    p.set_defaults(func=_cmd_bohme_check)

    p = sub.add_parser("sphere-check", help="combinatorial 2-sphere check")
    p.add_argument("graph")
    p.add_argument("system")
    _add_format(p)
    p.set_defaults(func=_cmd_sphere_check)

    cert = sub.add_parser("cert", help="verify or search certificates")
    cert_sub = cert.add_subparsers(dest="cert_command", required=True)

    p = cert_sub.add_parser("verify", help="verify a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("cert", nargs="?", default=None)
    p.add_argument("--bundled", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_cert_verify)

    p = cert_sub.add_parser("search", help="search a graph for certificates")
    p.add_argument("graph")
    p.add_argument("--max-base-len", type=int, default=None)
    p.add_argument("--schema", action="append", choices=certs.SCHEMAS)
    p.add_argument("--max-results", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_cert_search)

    linking = sub.add_parser("linking", help="linking-number computations")
    linking_sub = linking.add_subparsers(dest="linking_command", required=True)

    p = linking_sub.add_parser("omega", help="sum of linking numbers mod 2")
    p.add_argument("graph")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--mode", choices=("triangles", "all"), default="all")
    p.add_argument("--radius", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_linking_omega)

    export = sub.add_parser("export", help="export a graph")
    export_sub = export.add_subparsers(dest="export_command", required=True)

    p = export_sub.add_parser("dot", help="Graphviz DOT output")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (
        gr.GraphError,
        cyc.CycleError,
        certs.MalformedCertificateError,
        certs.SearchBoundsError,
        lnk.EmbeddingError,
        lnk.ProjectionError,
        OSError,
        json.JSONDecodeError,
        KeyError,
        TypeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())
