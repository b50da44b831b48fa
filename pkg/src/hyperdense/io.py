"""Reading and writing instance files.

Text format (line based, ``#`` starts a comment)::

    n m
    k v1 ... vk SPEC        # one line per edge

with ``SPEC`` one of ``table w0 .. wk``, ``linear w``, ``allornothing w`` or
``power w a``. Weights are decimal or ``num/den`` strings.

The JSON mirror is ``{"n": 3, "edges": [{"vertices": [0, 1, 2], "kind":
"table", "params": ["0", "1", "3", "6"]}]}``; ``"m"`` is optional and
checked when present.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import IO, Union

from .errors import ParseError, ValidationError
from .hypergraph import Hypergraph, WeightedHypergraph, WeightFn, as_fraction

KINDS = ("table", "linear", "allornothing", "power")


def _weight(token, where: str) -> Fraction:
    try:
        return as_fraction(token)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(f"{where}: bad weight {token!r}") from exc


def make_weight(kind: str, params, size: int, where: str = "edge") -> WeightFn:
    kind = kind.lower()
    if kind == "table":
        if len(params) != size + 1:
            raise ValidationError(
                f"{where}: table needs {size + 1} values, got {len(params)}"
            )
        return WeightFn.table([_weight(p, where) for p in params])
    if kind == "linear":
        _arity(params, 1, kind, where)
        return WeightFn.linear(_weight(params[0], where), size)
    if kind == "allornothing":
        _arity(params, 1, kind, where)
        return WeightFn.all_or_nothing(_weight(params[0], where), size)
    if kind == "power":
        _arity(params, 2, kind, where)
        a = _weight(params[1], where)
        if a.denominator != 1:
            raise ValidationError(f"{where}: power exponent must be an integer")
        return WeightFn.power(_weight(params[0], where), int(a), size)
    raise ParseError(f"{where}: unknown weight spec {kind!r} (expected one of {', '.join(KINDS)})")


def _arity(params, k, kind, where):
    if len(params) != k:
        raise ParseError(f"{where}: '{kind}' takes {k} parameter(s), got {len(params)}")


def _edge(verts, n: int, where: str) -> tuple[int, ...]:
    if not verts:
        raise ParseError(f"{where}: empty edge")
    for v in verts:
        if v < 0 or v >= n:
            raise ParseError(f"{where}: vertex {v} out of range [0, {n})")
    srt = tuple(sorted(verts))
    if len(set(srt)) != len(srt):
        raise ParseError(f"{where}: duplicate vertex in edge")
    return srt


def _int(token: str, where: str) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise ParseError(f"{where}: expected an integer, got {token!r}") from exc


def parse_text(text: str) -> WeightedHypergraph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise ParseError("empty instance")
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m'")
    n, m = _int(head[0], f"line {lineno}"), _int(head[1], f"line {lineno}")
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: n and m must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    edges, weights = [], []
    for j, (lineno, tok) in enumerate(body):
        where = f"line {lineno} (edge {j})"
        k = _int(tok[0], where)
        if k < 1:
            raise ParseError(f"{where}: edge size must be >= 1")
        if len(tok) < k + 2:
            raise ParseError(f"{where}: expected {k} vertices and a weight spec")
        verts = [_int(t, where) for t in tok[1:k + 1]]
        e = _edge(verts, n, where)
        try:
            w = make_weight(tok[k + 1], tok[k + 2:], k, where)
        except ValidationError as exc:
            if where in str(exc):
                raise
            raise ValidationError(f"{where}: {exc}") from exc
        edges.append(e)
        weights.append(w)
    return WeightedHypergraph(Hypergraph(n, tuple(edges)), tuple(weights))


def parse_json(text: str) -> WeightedHypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError("JSON instance needs 'n' and 'edges'")
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError("'n' must be a non-negative integer")
    raw_edges = doc["edges"]
    if "m" in doc and doc["m"] != len(raw_edges):
        raise ParseError(f"'m' is {doc['m']} but {len(raw_edges)} edges are listed")
    edges, weights = [], []
    for j, item in enumerate(raw_edges):
        where = f"edge {j}"
        try:
            verts = [int(v) for v in item["vertices"]]
            kind = item["kind"]
            params = list(item.get("params", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"{where}: needs 'vertices', 'kind' and 'params'") from exc
        e = _edge(verts, n, where)
        try:
            w = make_weight(kind, params, len(e), where)
        except ValidationError as exc:
            if where in str(exc):
                raise
            raise ValidationError(f"{where}: {exc}") from exc
        edges.append(e)
        weights.append(w)
    return WeightedHypergraph(Hypergraph(n, tuple(edges)), tuple(weights))


def load_instance(data: Union[str, bytes, IO], format: str = "text") -> WeightedHypergraph:
    """Parse an instance from a string, bytes or an open file.

    ``format`` is ``"text"``, ``"json"`` or ``"auto"`` (JSON when the first
    non-blank character is ``{``).
    """
    if hasattr(data, "read"):
        data = data.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("instance is not valid UTF-8") from exc
    fmt = format.lower()
    if fmt == "auto":
        fmt = "json" if data.lstrip().startswith("{") else "text"
    if fmt == "text":
        return parse_text(data)
    if fmt == "json":
        return parse_json(data)
    raise ValueError(f"unknown format {format!r}")


def _spec_tokens(w: WeightFn) -> list[str]:
    kind = w.source[0]
    if kind == "linear":
        return ["linear", str(w.source[1])]
    if kind == "allornothing":
        return ["allornothing", str(w.source[1])]
    if kind == "power":
        return ["power", str(w.source[1]), str(w.source[2])]
    return ["table", *(str(v) for v in w.values)]


def dumps_text(H: WeightedHypergraph) -> str:
    out = [f"{H.n} {H.m}"]
    for e, w in zip(H.edges, H.weights):
        out.append(" ".join([str(len(e)), *map(str, e), *_spec_tokens(w)]))
    return "\n".join(out) + "\n"


def dumps_json(H: WeightedHypergraph) -> str:
    edges = []
    for e, w in zip(H.edges, H.weights):
        tok = _spec_tokens(w)
        edges.append({"vertices": list(e), "kind": tok[0], "params": tok[1:]})
    return json.dumps({"n": H.n, "m": H.m, "edges": edges})
