"""Command-line entry point: ``semiring-ideals <command> ...``.

Exit status: 0 when every statement holds or is vacuous, 1 when a violation
is found, 2 on capacity or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import ideals as ie
from .core import AxiomError, CapacityError, MalformedTableError, units
from .enumeration import DEFAULT_MAX_ORDER, build_corpus, canonical_form, enumerate_semirings, load_corpus, save_corpus
from .fileformat import parse_semiring_file, semiring_id
from .harness.runner import verify_corpus
from .harness.search import search_counterexample, write_certificate
from .harness.statements import OUT_OF_SCOPE, REGISTRY, statement_ids
from .models import (FiniteModel, MinPlusModel, minplus_classification, minplus_ideal_family,
                     minplus_predicate, get_model, minplus_arith)

CORPUS_ENV = "SEMIRING_IDEALS_CORPUS"

EXIT_OK, EXIT_VIOLATION, EXIT_CONFIG = 0, 1, 2

PREDICATE_COLUMNS = ("prime", "maximal", "primary", "two_absorbing", "subtractive", "divided")


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    models: list = field(default_factory=list)
    order: int | None = None
    statements: list | None = None
    fmt: str = "md"
    workers: int = 1
    corpus_dir: str | None = None

    @classmethod
    def from_args(cls, args):
        cfg = cls(
            command=args.command,
            inputs=[args.file] if getattr(args, "file", None) else [],
            models=list(getattr(args, "model", None) or []),
            order=getattr(args, "order", None),
            statements=_split_ids(getattr(args, "statements", None)),
            fmt=getattr(args, "format", "md") or "md",
            workers=getattr(args, "workers", 1),
            corpus_dir=getattr(args, "corpus", None),
        )
        if cfg.inputs and cfg.models:
            raise ConfigError("give either a semiring file or --model, not both")
        if cfg.workers < 1:
            raise ConfigError("--workers must be at least 1")
        return cfg


def _split_ids(raw):
    if raw is None:
        return None
    ids = [s.strip() for s in raw.split(",") if s.strip()]
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise ConfigError(f"unknown statement ids: {', '.join(unknown)}")
    return ids


# -- check -------------------------------------------------------------------

def _finite_rows(S):
    rows = []
    for a in ie.all_ideals(S):
        prime = bool(ie.is_prime(a))
        rows.append({
            "ideal": "{" + ",".join(a.names()) + "}",
            "prime": prime,
            "maximal": ie.is_maximal(a),
            "primary": bool(ie.is_primary(a)),
            "two_absorbing": bool(ie.is_two_absorbing(a)),
            "subtractive": bool(ie.is_subtractive_ideal(a)),
            "divided": ie.is_divided_prime(a) if prime else False,
            "radical": "{" + ",".join(ie.radical(a).names()) + "}",
        })
    return rows


def _minplus_rows(K=6):
    rows = []
    for a in minplus_ideal_family(K):
        prime = bool(minplus_predicate("prime", a))
        row = {"ideal": repr(a)}
        for p in PREDICATE_COLUMNS:
            row[p] = bool(minplus_predicate(p, a)) if p != "divided" else (
                bool(minplus_predicate("divided", a)) if prime else False)
        row["radical"] = repr(minplus_arith("radical", a))
        rows.append(row)
    return rows


def _check_payload(target):
    if isinstance(target, MinPlusModel):
        cls = minplus_classification(target.family_cap)
        return {
            "semiring": "minplus",
            "classification": cls["flags"],
            "witnesses": {k: repr(v) for k, v in cls["witnesses"].items()},
            "ideals": _minplus_rows(target.family_cap),
        }
    S = target.semiring if isinstance(target, FiniteModel) else target
    cls = ie.classify_semiring(S)

    def show(w):
        if isinstance(w, ie.Ideal):
            return "{" + ",".join(w.names()) + "}"
        if isinstance(w, int):
            return S.name(w)
        if isinstance(w, tuple):
            return "(" + ", ".join(show(x) for x in w) + ")"
        return str(w)

    return {
        "semiring": semiring_id(S),
        "elements": list(S.element_names),
        "units": sorted(S.name(x) for x in units(S)),
        "classification": cls.flags(),
        "witnesses": {k: show(v) for k, v in sorted(cls.witnesses.items())},
        "ideals": _finite_rows(S),
    }


def _render_check(payload, fmt):
    cols = ["ideal", *PREDICATE_COLUMNS, "radical"]
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for row in payload["ideals"]:
            w.writerow(row)
        return buf.getvalue()
    lines = [f"# semiring {payload['semiring']}", ""]
    if "units" in payload:
        lines += [f"elements: {', '.join(payload['elements'])}", f"units: {', '.join(payload['units'])}", ""]
    lines += ["| flag | value |", "|---|---|"]
    lines += [f"| {k} | {v} |" for k, v in payload["classification"].items()]
    lines += ["", "| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for row in payload["ideals"]:
        lines.append("| " + " | ".join(str(row[c]) for c in cols) + " |")
    if payload["witnesses"]:
        lines += ["", "witnesses:"] + [f"- {k}: {v}" for k, v in payload["witnesses"].items()]
    return "\n".join(lines) + "\n"


def cmd_check(cfg, out):
    if cfg.inputs:
        target = parse_semiring_file(cfg.inputs[0])
    elif cfg.models:
        target = get_model(cfg.models[0])
    else:
        raise ConfigError("check needs a semiring file or --model")
    out.write(_render_check(_check_payload(target), cfg.fmt))
    return EXIT_OK


# -- enumerate ---------------------------------------------------------------

def cmd_enumerate(cfg, args, out):
    n = cfg.order
    if args.save:
        corpus = build_corpus(range(2, n + 1), max_order=args.max_order)
        save_corpus(corpus, args.save)
        out.write(json.dumps({"orders": list(corpus.orders), "counts": corpus.counts}, sort_keys=True) + "\n")
        return EXIT_OK
    found = list(enumerate_semirings(n, args.iso, max_order=args.max_order))
    if cfg.fmt == "json":
        out.write(json.dumps({"order": n, "up_to_iso": args.iso, "count": len(found),
                              "keys": [canonical_form(S).key_hex for S in found]}, indent=2) + "\n")
    else:
        out.write(f"order {n}{' up to isomorphism' if args.iso else ' (labelled, 0 and 1 pinned)'}: "
                  f"{len(found)} semirings\n")
        for S in found:
            out.write(canonical_form(S).key_hex + "\n")
    return EXIT_OK


# -- verify / search ---------------------------------------------------------

def _instances(cfg, max_order):
    inst = []
    for sel in cfg.models:
        inst.append(get_model(sel))
    corpus_dir = cfg.corpus_dir or os.environ.get(CORPUS_ENV)
    if cfg.order is not None:
        if corpus_dir and os.path.exists(os.path.join(corpus_dir, "manifest.json")):
            corpus = load_corpus(corpus_dir)
            missing = [n for n in range(2, cfg.order + 1) if n not in corpus.counts]
            if missing:
                raise ConfigError(f"corpus at {corpus_dir} lacks orders {missing}")
            inst += [c.semiring for c in corpus.entries if c.semiring.order <= cfg.order]
        else:
            for n in range(2, cfg.order + 1):
                inst += list(enumerate_semirings(n, True, max_order))
    if not inst:
        raise ConfigError("nothing to scan: give --order and/or --model")
    return inst


def cmd_verify(cfg, args, out):
    report = verify_corpus(_instances(cfg, args.max_order), cfg.statements, workers=cfg.workers)
    if cfg.fmt == "json":
        text = report.to_json()
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["statement", "instance_class", "verdict", "held", "examined"])
        for sid, row in report.matrix().items():
            for cls, cell in sorted(row.items()):
                w.writerow([sid, cls, cell["verdict"], cell["held"], cell["examined"]])
        text = buf.getvalue()
    else:
        text = report.to_markdown()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_search(cfg, args, out):
    report = search_counterexample(args.question, _instances(cfg, args.max_order))
    if cfg.fmt == "json":
        out.write(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    else:
        out.write(report.to_text())
    if report.found and args.certificate_dir:
        path = write_certificate(report, args.certificate_dir)
        out.write(f"certificate written to {path}\n")
    return EXIT_OK


def cmd_info(cfg, out):
    if cfg.fmt == "json":
        data = {sid: {"anchor": REGISTRY[sid].anchor, "claim": REGISTRY[sid].claim,
                      "hypotheses": list(REGISTRY[sid].hypotheses)} for sid in statement_ids()}
        out.write(json.dumps({"statements": data, "out_of_scope": OUT_OF_SCOPE}, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    for sid in statement_ids():
        s = REGISTRY[sid]
        hyps = ", ".join(s.hypotheses) or "none"
        out.write(f"{sid:4} [{s.anchor}] hypotheses: {hyps}\n     {s.claim}\n")
    out.write("\nnot registered:\n")
    for k, v in sorted(OUT_OF_SCOPE.items()):
        out.write(f"  {k}: {v}\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="semiring-ideals", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("md", "json", "csv")):
        sp.add_argument("--format", choices=formats, default="md")
        sp.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help="enumeration cap (default %(default)s, hard limit 6)")

    c = sub.add_parser("check", help="classify one semiring and tabulate its ideals")
    c.add_argument("file", nargs="?")
    c.add_argument("--model", action="append", help="boolean, f2, paper3, chain:N or minplus")
    common(c)

    e = sub.add_parser("enumerate", help="enumerate semirings of one order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    e.add_argument("--save", metavar="DIR", help="write the corpus of orders 2..N to DIR")
    common(e, ("md", "json"))

    v = sub.add_parser("verify", help="check registered statements over a corpus and/or models")
    v.add_argument("--order", type=int)
    v.add_argument("--model", action="append")
    v.add_argument("--statements", help="comma separated ids (default: all)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--corpus", help=f"saved corpus directory (default ${CORPUS_ENV})")
    v.add_argument("--out")
    common(v)

    s = sub.add_parser("search", help="counterexample search for an open question")
    s.add_argument("--question", choices=("q1", "q2"), required=True)
    s.add_argument("--order", type=int)
    s.add_argument("--model", action="append")
    s.add_argument("--corpus")
    s.add_argument("--certificate-dir")
    common(s, ("md", "json"))

    i = sub.add_parser("info", help="list registered statements")
    i.add_argument("--statements", action="store_true")
    i.add_argument("--format", choices=("md", "json"), default="md")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    try:
        if args.command == "info":
            args.statements = None
        cfg = RunConfig.from_args(args)
        if args.command == "check":
            return cmd_check(cfg, out)
        if args.command == "enumerate":
            return cmd_enumerate(cfg, args, out)
        if args.command == "verify":
            return cmd_verify(cfg, args, out)
        if args.command == "search":
            return cmd_search(cfg, args, out)
        return cmd_info(cfg, out)
    except (ConfigError, CapacityError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except MalformedTableError as e:
        print(f"format error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except AxiomError as e:
        for v in e.violations:
            print(f"axiom violation: {v}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
