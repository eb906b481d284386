"""Command-line front end.

Verbs:
  goeritz      print the pre-Goeritz and Goeritz matrices of a diagram
  embed        enumerate canonical embedding classes of a Gram form
  equivariant  test each embedding class for an equivariant intertwiner
  obstruct     run the full obstruction pipeline on a knot certificate
  family       print the built-in K_n / 12a1019 fixtures

Inputs come from --input FILE (JSON) or --preset NAME (k_n:3, 12a1019).
Exit status: 0 conclusive, 1 input error, 2 inconclusive (budget exhausted).

JSON schemas:
  diagram      {"regions": n+1, "crossings": [[i, j, eta], ...], "label": "..."}
  form         {"matrix": [[...], ...]}   (embed / equivariant; equivariant
               additionally takes {"action": [[...]] or [images...]})
  certificate  {"name", "goeritz_minus", "goeritz_plus", "action_minus",
                "action_plus", "period", "signature", "arf", "known_gamma4"?}
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import _intlinalg as la
from . import family
from .diagram import diagram_from_json, goeritz, pre_goeritz
from .equivariance import find_equivariant_witness
from .lattice import GramLattice, SearchIncomplete, enumerate_embeddings
from .obstruction import (
    KnotCertificate,
    certificate_from_json,
    gamma4p_lower_bound,
    report_to_json,
    report_to_text,
)

DEFAULT_BUDGET = 10**8


class InputError(Exception):
    pass


def _parse_preset(name: str) -> KnotCertificate:
    if name == "12a1019":
        return family.fixture_12a1019()
    if name.startswith("k_n:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad preset {name!r}: expected k_n:<integer>")
        if n < 2:
            raise InputError("k_n preset needs n >= 2")
        return family.make_certificate_Kn(n)
    raise InputError(f"unknown preset {name!r} (try k_n:3 or 12a1019)")


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}")


def _matrix_rows(mat) -> list[list[int]]:
    return [list(row) for row in mat]


def _form_text(label: str, mat) -> str:
    width = max(len(str(x)) for row in mat for x in row)
    lines = [label]
    for row in mat:
        lines.append("  [" + " ".join(str(x).rjust(width) for x in row) + "]")
    return "\n".join(lines)


def _emit(args, payload_json: dict, payload_text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload_json, indent=2, sort_keys=True))
    else:
        print(payload_text)


def _resolve_form(args) -> tuple[GramLattice, la.IntMatrix | None]:
    """Gram form plus (for presets) the matching action, honoring --sign."""
    if args.preset:
        cert = _parse_preset(args.preset)
        if args.sign == "-":
            return cert.goeritz_minus, cert.action_minus
        return cert.goeritz_plus, cert.action_plus
    obj = _load_json(args.input)
    try:
        lat = GramLattice(la.freeze(obj["matrix"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad form input: {exc}")
    action = None
    if "action" in obj:
        action = _parse_action(obj["action"], lat.rank)
    return lat, action


def _parse_action(value, n: int) -> la.IntMatrix:
    if value and isinstance(value[0], list):
        return la.freeze(value)
    images = [int(x) for x in value]
    if sorted(images) != list(range(n)):
        raise InputError("action permutation list is not a permutation")
    mat = [[0] * n for _ in range(n)]
    for i, img in enumerate(images):
        mat[img][i] = 1
    return la.freeze(mat)


def cmd_goeritz(args) -> int:
    d = diagram_from_json(_load_json(args.input))
    pg = pre_goeritz(d)
    g = goeritz(d)
    _emit(
        args,
        {
            "label": d.label,
            "pre_goeritz": _matrix_rows(pg),
            "goeritz": _matrix_rows(g.matrix),
        },
        _form_text("pre-Goeritz:", pg) + "\n" + _form_text("Goeritz:", g.matrix),
    )
    return 0


def cmd_embed(args) -> int:
    lat, _ = _resolve_form(args)
    sign = -1 if args.sign == "-" else 1
    classes = enumerate_embeddings(lat, args.corank, sign, max_nodes=args.budget)
    _emit(
        args,
        {
            "source": _matrix_rows(lat.matrix),
            "target": {"rank": lat.rank + args.corank, "sign": sign},
            "canonical": True,
            "classes": [_matrix_rows(e.matrix) for e in classes],
        },
        "\n".join(
            [f"{len(classes)} canonical embedding class(es)"]
            + [_form_text(f"class {k + 1}:", e.matrix) for k, e in enumerate(classes)]
        ),
    )
    return 0


def cmd_equivariant(args) -> int:
    lat, action = _resolve_form(args)
    if action is None:
        raise InputError("equivariant needs an action (preset or \"action\" key)")
    sign = -1 if args.sign == "-" else 1
    classes = enumerate_embeddings(lat, args.corank, sign, max_nodes=args.budget)
    verdicts = [find_equivariant_witness(e, action) for e in classes]
    out_json = []
    out_text = [f"{len(classes)} canonical embedding class(es)"]
    for k, (emb, v) in enumerate(zip(classes, verdicts)):
        entry = {"class": _matrix_rows(emb.matrix), "outcome": v.outcome}
        if v.witness is not None:
            entry["witness"] = _matrix_rows(v.witness.matrix())
        if v.certificate:
            entry["certificate"] = [
                {"row": i, "col": j, "num": x.numerator, "den": x.denominator}
                for i, j, x in v.certificate
            ]
        out_json.append(entry)
        line = f"class {k + 1}: {v.outcome}"
        if v.certificate:
            i, j, x = v.certificate[0]
            line += f" (entry ({i + 1},{j + 1}) = {x})"
        out_text.append(line)
    _emit(args, {"classes": out_json}, "\n".join(out_text))
    return 0


def cmd_obstruct(args) -> int:
    if args.preset:
        cert = _parse_preset(args.preset)
    else:
        cert = certificate_from_json(_load_json(args.input))
    report = gamma4p_lower_bound(cert, max_nodes=args.budget)
    _emit(args, report_to_json(report), report_to_text(report))
    conclusive = report.mobius.certifying and (
        report.klein is None or report.klein.certifying
    )
    return 0 if conclusive else 2


def cmd_family(args) -> int:
    cert = _parse_preset(args.preset or "k_n:2")
    payload = {
        "name": cert.name,
        "goeritz_minus": _matrix_rows(cert.goeritz_minus.matrix),
        "goeritz_plus": _matrix_rows(cert.goeritz_plus.matrix),
        "action_minus": _matrix_rows(cert.action_minus),
        "period": cert.period,
        "signature": cert.signature,
        "arf": cert.arf,
        "known_gamma4": cert.known_gamma4,
    }
    text = [
        f"knot {cert.name}: period {cert.period}, signature {cert.signature}, "
        f"Arf {cert.arf}, known gamma_4 {cert.known_gamma4}",
        _form_text("G_-:", cert.goeritz_minus.matrix),
    ]
    if cert.name.startswith("K_"):
        n = cert.period
        embeddings = family.family_embeddings(n)
        payload["closed_form_embeddings"] = [
            _matrix_rows(e.matrix) for e in embeddings
        ]
        text.append(f"{len(embeddings)} closed-form embedding(s)")
    _emit(args, payload, "\n".join(text))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goeritz",
        description="Equivariant non-orientable 4-genus obstructions "
        "from Goeritz forms and definite lattice embeddings.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, corank_default=1):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", metavar="FILE", help="JSON input file")
        src.add_argument("--preset", help="built-in fixture (k_n:3, 12a1019)")
        p.add_argument("--corank", type=int, default=corank_default)
        p.add_argument("--sign", choices=["+", "-"], default="-")
        p.add_argument(
            "--budget",
            type=int,
            default=int(os.environ.get("GO_BUDGET", DEFAULT_BUDGET)),
            help="search node budget (env GO_BUDGET)",
        )
        p.add_argument(
            "--jobs",
            type=int,
            default=int(os.environ.get("GO_JOBS", os.cpu_count() or 1)),
            help="parallel worker cap (env GO_JOBS); output is "
            "byte-deterministic regardless",
        )
        p.add_argument("--format", choices=["json", "text"], default="text")

    p = sub.add_parser("goeritz", help="pre-Goeritz and Goeritz matrices")
    p.add_argument("--input", metavar="FILE", required=True)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_goeritz)

    p = sub.add_parser("embed", help="canonical embedding classes")
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("equivariant", help="equivariance verdict per class")
    common(p)
    p.set_defaults(func=cmd_equivariant)

    p = sub.add_parser("obstruct", help="full obstruction report")
    common(p)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("family", help="built-in fixtures")
    p.add_argument("--preset", required=True)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb in ("embed", "equivariant", "obstruct"):
        if args.corank < 0:
            print("error: corank must be >= 0", file=sys.stderr)
            return 1
        if args.budget <= 0:
            print("error: budget must be positive", file=sys.stderr)
            return 1
    try:
        return args.func(args)
    except SearchIncomplete as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 2
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
