"""Plain-text serializations of a LabeledGraph: DOT, JSON and a TSV edge list."""

from __future__ import annotations

import json

from .closed_forms import FamilyParams
from .graph_core import LabeledGraph


def params_dict(params: FamilyParams | None) -> dict:
    if params is None:
        return {"n": None, "k": None, "p": None, "q": None}
    valid = params.valid
    return {
        "n": params.n,
        "k": params.k,
        "p": params.p if valid else None,
        "q": params.q if valid else None,
    }


def _header(g: LabeledGraph) -> str:
    fields = " ".join(f"{key}={value}" for key, value in params_dict(g.params).items())
    return f"family={g.family} {fields}"


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: LabeledGraph) -> str:
    lines = [f"// {_header(g)}", f"graph {_quote(g.family)} {{"]
    lines += [f"  {_quote(v)};" for v in g.vertices]
    lines += [f"  {_quote(g.vertices[i])} -- {_quote(g.vertices[j])};" for i, j in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: LabeledGraph) -> str:
    doc = {
        "family": g.family,
        "params": params_dict(g.params),
        "vertices": list(g.vertices),
        "edges": [list(e) for e in sorted(g.edges())],
    }
    return json.dumps(doc) + "\n"


def from_json(text: str) -> LabeledGraph:
    doc = json.loads(text)
    p = doc["params"]
    params = None
    if p.get("n") is not None:
        params = FamilyParams.from_nk(p["n"], p["k"], strict=False)
    return LabeledGraph.from_edges(doc["vertices"], [tuple(e) for e in doc["edges"]], doc["family"], params)


def to_edgelist(g: LabeledGraph) -> str:
    lines = sorted(f"{g.vertices[i]}\t{g.vertices[j]}" for i, j in g.edges())
    return "".join(line + "\n" for line in lines)


FORMATS = {"dot": to_dot, "json": to_json, "edgelist": to_edgelist}
