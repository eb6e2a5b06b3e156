"""Whole-map analysis reports and DOT export."""

from __future__ import annotations

from dataclasses import dataclass

from .category import cycle_congruence, quotient
from .core import Endofunction, classify
from .factorization import (
    GeneratorWord,
    Move,
    forest_on_cycle_factors,
    moves_transpositions,
    sign,
)
from .relations import preorder_kind, to_preord
from .structure import components, cyclic_core, is_forest, level_partition


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyzers can say about one map, in one place."""

    endofunction: Endofunction
    classification: str
    sign: int
    forest: bool
    height: int
    core: tuple[int, ...]
    levels: tuple[tuple[int, ...], ...]
    components: tuple[tuple[int, ...], ...]
    factors: tuple[Endofunction, ...]
    word: GeneratorWord
    quotient_class_count: int
    quotient_class_sizes: tuple[int, ...]
    preorder_kind: str


def analyze(f: Endofunction) -> AnalysisReport:
    """Run every analyzer over one map and bundle the results."""
    lp = level_partition(f)
    cong = cycle_congruence(f)
    return AnalysisReport(
        endofunction=f,
        classification=classify(f),
        sign=sign(f),
        forest=is_forest(f),
        height=lp.height,
        core=cyclic_core(f),
        levels=lp.levels,
        components=components(f).components,
        factors=forest_on_cycle_factors(f),
        word=moves_transpositions(f),
        quotient_class_count=len(cong.classes),
        quotient_class_sizes=tuple(len(cls) for cls in cong.classes),
        preorder_kind=preorder_kind(to_preord(f)),
    )


def word_json_dict(word: GeneratorWord) -> dict:
    factors = []
    for factor in word.factors:
        if isinstance(factor, Move):
            factors.append(
                {"kind": "move", "source": factor.source, "target": factor.target}
            )
        else:
            factors.append({"kind": "transposition", "a": factor.a, "b": factor.b})
    return {
        "core_size": word.core_size,
        "move_count": word.move_count,
        "transposition_count": word.transposition_count,
        "factors": factors,
    }


def report_json_dict(report: AnalysisReport) -> dict:
    """The report as plain JSON data; vertex sets become sorted lists."""
    return {
        "n": report.endofunction.n,
        "endofunction": list(report.endofunction.images),
        "classification": report.classification,
        "sign": report.sign,
        "forest": report.forest,
        "height": report.height,
        "core": list(report.core),
        "levels": [list(level) for level in report.levels],
        "components": [list(comp) for comp in report.components],
        "factors": [list(factor.images) for factor in report.factors],
        "generator_word": word_json_dict(report.word),
        "quotient": {
            "class_count": report.quotient_class_count,
            "class_sizes": list(report.quotient_class_sizes),
        },
        "preorder_kind": report.preorder_kind,
    }


def _set_text(values) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def word_text(word_data: dict) -> str:
    if not word_data["factors"]:
        return "(empty)"
    bits = []
    for factor in word_data["factors"]:
        if factor["kind"] == "move":
            bits.append(f"m({factor['source']},{factor['target']})")
        else:
            bits.append(f"({factor['a']} {factor['b']})")
    return " ".join(bits)


def render_report_text(data: dict) -> str:
    """Stable plain-text rendering of the JSON report (golden-testable)."""
    table = f"{data['n']}: " + " ".join(str(v) for v in data["endofunction"])
    lines = [
        f"endofunction  : {table}",
        f"classification: {data['classification']}",
        f"sign          : {data['sign']:+d}" if data["sign"] else "sign          : 0",
        f"forest        : {'yes' if data['forest'] else 'no'}",
        f"height        : {data['height']}",
        f"core          : {_set_text(data['core'])}",
        "levels        : "
        + " / ".join(f"[{i}] {_set_text(level)}" for i, level in enumerate(data["levels"])),
        "components    : " + " ".join(_set_text(c) for c in data["components"]),
        "factors       : "
        + (
            " | ".join(
                f"{data['n']}: " + " ".join(str(v) for v in factor)
                for factor in data["factors"]
            )
            if data["factors"]
            else "(none)"
        ),
        f"word          : {word_text(data['generator_word'])}"
        f"  [core={data['generator_word']['core_size']},"
        f" moves={data['generator_word']['move_count']},"
        f" transpositions={data['generator_word']['transposition_count']}]",
        f"quotient      : {data['quotient']['class_count']} classes,"
        f" sizes {data['quotient']['class_sizes']}",
        f"preorder      : {data['preorder_kind']}",
    ]
    return "\n".join(lines)


def report_text(report: AnalysisReport) -> str:
    return render_report_text(report_json_dict(report))


DOT_FLAVORS = ("directed", "undirected", "quotient")


def export_dot(f: Endofunction, flavor: str = "directed") -> str:
    """Graphviz text for the functional graph.

    directed: all n arrows, loops included.  undirected: loop-free simple
    graph, transposition pairs merged into one edge.  quotient: the forest
    of cycle classes, nodes labeled by their members, root loops omitted.
    Output is deterministic for a given input.
    """
    if flavor == "directed":
        lines = ["digraph {"]
        lines += [f"  {x};" for x in range(1, f.n + 1)]
        lines += [f"  {x} -> {y};" for x, y in enumerate(f.images, start=1)]
        lines.append("}")
    elif flavor == "undirected":
        lines = ["graph {"]
        lines += [f"  {x};" for x in range(1, f.n + 1)]
        edges = sorted(
            {(min(x, y), max(x, y)) for x, y in enumerate(f.images, start=1) if x != y}
        )
        lines += [f"  {a} -- {b};" for a, b in edges]
        lines.append("}")
    elif flavor == "quotient":
        cong = cycle_congruence(f)
        induced, _ = quotient(f, cong)
        lines = ["digraph {"]
        for i, cls in enumerate(cong.classes, start=1):
            lines.append(f'  {i} [label="{_set_text(cls)}"];')
        for i, v in enumerate(induced.images, start=1):
            if i != v:
                lines.append(f"  {i} -> {v};")
        lines.append("}")
    else:
        raise ValueError(f"unknown flavor {flavor!r}; expected one of {DOT_FLAVORS}")
    return "\n".join(lines) + "\n"
