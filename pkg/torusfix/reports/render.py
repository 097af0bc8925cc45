"""
Plain-text rendering of report documents.

The text form is derived from the same dict as the JSON form, so both carry the
same verdicts: a headline per command followed by every field of the document.
"""

"""
Copyright (c) 2025 Firefly Software Solutions Inc.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at:

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import json
from typing import Any, Callable, Dict, List, Mapping

INDENT = "  "


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def _is_flat(values: List[Any]) -> bool:
    return all(not isinstance(v, (dict, list)) for v in values)


def _lines(value: Any, depth: int) -> List[str]:
    pad = INDENT * depth
    out: List[str] = []
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, dict) and item:
                out.append(f"{pad}{key}:")
                out.extend(_lines(item, depth + 1))
            elif isinstance(item, list) and item and not _is_flat(item):
                out.append(f"{pad}{key}:")
                out.extend(_lines(item, depth + 1))
            elif isinstance(item, list):
                out.append(f"{pad}{key}: [" + ", ".join(_scalar(v) for v in item) + "]")
            elif isinstance(item, dict):
                out.append(f"{pad}{key}: {{}}")
            else:
                out.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for index, item in enumerate(value):
            if isinstance(item, (dict, list)):
                out.append(f"{pad}- [{index}]")
                out.extend(_lines(item, depth + 1))
            else:
                out.append(f"{pad}- {_scalar(item)}")
    else:
        out.append(pad + _scalar(value))
    return out


def _cycle_text(report: Mapping[str, Any]) -> List[str]:
    out = []
    for witness in report.get("witnesses", []):
        if not witness["forest"]:
            direction = ",".join(str(v) for v in witness["direction"])
            edges = ", ".join(str(e) for e in witness["cycle"])
            out.append(f"cycle in class ({direction}): edges {edges}")
    return out


def _graph_headline(report: Mapping[str, Any]) -> List[str]:
    lines = []
    if "hilbert" in report:
        lines.append("hilbert: " + " ".join(str(v) for v in report["hilbert"]))
        lines.append(f"freeness: {report['freeness']['verdict']}")
    lines.append(f"realizable: {_scalar(report['realizable'])}")
    return lines + _cycle_text(report)


def _gkm_headline(report: Mapping[str, Any]) -> List[str]:
    if report["ok"]:
        return ["gkm: ok"]
    edges = ", ".join(str(e) for e in report["edges"])
    return [f"gkm: dependent labels at {report['vertex']} (edges {edges})"]


def _circle_headline(report: Mapping[str, Any]) -> List[str]:
    verdict = report["verdict"]
    if verdict == "realizable":
        return [f"realizable: {report['fixed_points']} fixed points"]
    if verdict == "not-realizable":
        return [f"not realizable: field extension {report.get('witness', '')}".rstrip()]
    witness = f" ({report['witness']})" if "witness" in report else ""
    return [f"hypothesis violated: {report['reason']}{witness}"]


def _verdict_line(verdict: Mapping[str, Any]) -> str:
    line = f"{verdict['condition']} {verdict['location']}: {verdict['verdict']}"
    if verdict["verdict"] == "fails":
        line += f" at degree {verdict['degree']} (defect {verdict['defect']})"
    elif verdict["verdict"] == "inconclusive":
        line += f" ({len(verdict['survivors'])} surviving classes)"
    else:
        line += f" {verdict['degree_bound']}"
    return line


def _system_headline(report: Mapping[str, Any]) -> List[str]:
    lines = []
    for key in ("triviality", "surjectivity", "localization"):
        for verdict in report.get(key, []):
            lines.append(_verdict_line(verdict))
    hypotheses = report.get("hypotheses")
    if hypotheses:
        lines.append(f"infinite complex hypotheses: {hypotheses['infinite_complex']['status']}")
        lines.append(f"finite complex hypotheses: {hypotheses['finite_complex']['status']}")
    return lines


def _criterion_headline(report: Mapping[str, Any]) -> List[str]:
    conditions = report["conditions"]
    lines = [
        f"sum closure: {conditions['sum_closure']}",
        f"algebras: {conditions['algebras']}",
        f"localization: {conditions['localization']}",
    ]
    return lines + [_verdict_line(v) for v in report["localization"]]


def _fixtures_headline(report: Mapping[str, Any]) -> List[str]:
    return [f"wrote {path}" for path in report["written"]]


HEADLINES: Dict[str, Callable[[Mapping[str, Any]], List[str]]] = {
    "graph-cohomology": _graph_headline,
    "graph-realizable": _graph_headline,
    "gkm-validate": _gkm_headline,
    "circle-realizable": _circle_headline,
    "system-check": _system_headline,
    "criterion-check": _criterion_headline,
    "fixtures": _fixtures_headline,
}


def render_text(report: Mapping[str, Any]) -> str:
    """Headline verdicts, a blank line, then every field of the report."""
    headline = HEADLINES[report["command"]](report)
    details = {k: v for k, v in report.items() if k not in ("schema", "command")}
    body = [f"# {report['command']} ({report['schema']})", *headline]
    if report["command"] != "fixtures":
        body += ["", *_lines(details, 0)]
    return "\n".join(body) + "\n"


def render_json(report: Mapping[str, Any]) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render(report: Mapping[str, Any], output_format: str) -> str:
    if output_format == "json":
        return render_json(report)
    return render_text(report)
