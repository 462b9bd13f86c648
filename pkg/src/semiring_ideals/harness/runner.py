"""Run registered statements over semirings and models; build aggregate reports."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from ..core import FiniteSemiring
from .statements import OUT_OF_SCOPE, REGISTRY, statement_ids
from .structures import FiniteStructure, MinPlusStructure, structure_for

HOLDS, VIOLATED, VACUOUS = "holds", "violated", "vacuous"


@dataclass
class StatementReport:
    statement: str
    instance: str
    instance_class: str
    examined: int = 0
    held: int = 0
    violations: list = field(default_factory=list)
    checked: list = field(default_factory=list)

    @property
    def verdict(self):
        if self.violations:
            return VIOLATED
        return HOLDS if self.held else VACUOUS

    def to_json(self):
        d = asdict(self)
        d["verdict"] = self.verdict
        return d


def check_statement(structure, statement_id: str, ignore_hypotheses: bool = False) -> StatementReport:
    """Evaluate one statement exhaustively on one semiring or model.

    With ``ignore_hypotheses`` the semiring-level hypotheses are dropped
    (instance-level quantifier restrictions stay), which shows whether a
    hypothesis is doing any work.
    """
    if statement_id not in REGISTRY:
        raise KeyError(f"unknown statement id {statement_id!r}")
    st = structure_for(structure)
    stmt = REGISTRY[statement_id]
    report = StatementReport(stmt.id, st.label, st.instance_class)
    active = ignore_hypotheses or all(st.flags[h] for h in stmt.hypotheses)
    for label, hyp_ok, concl in stmt.checker(st):
        report.examined += 1
        if not (active and hyp_ok):
            continue
        report.held += 1
        report.checked.append(label)
        witness = concl()
        if witness is not None:
            report.violations.append({"semiring": st.key, "instance": label, "witness": witness})
    return report


def _run_one(task):
    kind, payload, label, ids = task
    st = FiniteStructure(payload, label) if kind == "finite" else MinPlusStructure(payload)
    return [check_statement(st, i).to_json() for i in ids]


def _task(obj, ids):
    st = structure_for(obj)
    if isinstance(st, FiniteStructure):
        return ("finite", st.S, st.label, ids)
    return ("minplus", st.K, st.label, ids)


@dataclass
class AggregateReport:
    statements: list
    reports: list

    @property
    def violations(self):
        return [v for r in self.reports for v in r["violations"]]

    @property
    def ok(self):
        return not self.violations

    def summary(self):
        """Per statement: examined, held, verdict over the whole corpus."""
        out = {}
        for sid in self.statements:
            rs = [r for r in self.reports if r["statement"] == sid]
            examined = sum(r["examined"] for r in rs)
            held = sum(r["held"] for r in rs)
            viol = [v for r in rs for v in r["violations"]]
            verdict = VIOLATED if viol else (HOLDS if held else VACUOUS)
            out[sid] = {"examined": examined, "held": held, "verdict": verdict, "violations": viol}
        return out

    def matrix(self):
        """statement -> instance class -> {"verdict", "held", "examined", "instances"}."""
        m = {}
        for r in self.reports:
            cell = m.setdefault(r["statement"], {}).setdefault(
                r["instance_class"], {"examined": 0, "held": 0, "instances": 0, "violations": 0})
            cell["examined"] += r["examined"]
            cell["held"] += r["held"]
            cell["instances"] += 1
            cell["violations"] += len(r["violations"])
        for row in m.values():
            for cell in row.values():
                cell["verdict"] = VIOLATED if cell["violations"] else (HOLDS if cell["held"] else VACUOUS)
        return m

    def to_json(self) -> str:
        data = {
            "statements": [
                {"id": sid, "anchor": REGISTRY[sid].anchor, "claim": REGISTRY[sid].claim,
                 "hypotheses": list(REGISTRY[sid].hypotheses)}
                for sid in self.statements
            ],
            "summary": self.summary(),
            "matrix": self.matrix(),
            "out_of_scope": OUT_OF_SCOPE,
            "reports": self.reports,
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    def to_markdown(self) -> str:
        matrix = self.matrix()
        classes = sorted({c for row in matrix.values() for c in row}, key=_class_order)
        lines = ["# Statement verification", ""]
        lines.append("| statement | anchor | hypotheses | " + " | ".join(classes) + " | overall |")
        lines.append("|" + "---|" * (len(classes) + 4))
        summary = self.summary()
        for sid in self.statements:
            stmt = REGISTRY[sid]
            cells = []
            for c in classes:
                cell = matrix.get(sid, {}).get(c)
                cells.append("-" if cell is None else f"{cell['verdict']} ({cell['held']}/{cell['examined']})")
            hyps = ", ".join(stmt.hypotheses) or "none"
            lines.append(f"| {sid} | {stmt.anchor} | {hyps} | " + " | ".join(cells) + f" | {summary[sid]['verdict']} |")
        lines += ["", "Cells show verdict (instances with hypotheses satisfied / instances examined).", ""]
        lines += ["## Not registered", ""]
        lines += [f"- {k}: {v}" for k, v in sorted(OUT_OF_SCOPE.items())]
        viol = self.violations
        lines += ["", f"## Violations: {len(viol)}", ""]
        lines += [f"- `{json.dumps(v, sort_keys=True)}`" for v in viol]
        return "\n".join(lines) + "\n"


def _class_order(c):
    if c.startswith("order "):
        return (0, int(c.split()[1]), c)
    return (1, 0, c)


def verify_corpus(instances, ids=None, workers: int = 1) -> AggregateReport:
    """Check every statement in ``ids`` on every instance.

    ``instances`` may mix FiniteSemirings, catalog models and structures.
    Reports are sorted by (statement, instance) so output does not depend on
    ``workers``.
    """
    ids = list(ids) if ids is not None else statement_ids()
    for i in ids:
        if i not in REGISTRY:
            raise KeyError(f"unknown statement id {i!r}")
    tasks = [_task(obj, ids) for obj in instances]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_one, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        chunks = [_run_one(t) for t in tasks]
    order = {sid: k for k, sid in enumerate(ids)}
    reports = sorted((r for chunk in chunks for r in chunk), key=lambda r: (order[r["statement"]], r["instance"]))
    return AggregateReport(ids, reports)


def is_finite(obj):
    return isinstance(obj, FiniteSemiring)
