"""Algebra documents: a line-oriented text format and an equivalent JSON body.

Text form::

    # comments start with '#'
    field: GF(3)
    dim: 2
    basis: e1 e2          (optional; default names are e1..en)
    e1*e1 = 1 e2
    x*e1 = 2 e2 + 1/2 y   (terms are [coefficient] name, joined by + or -)

Basis vectors may also be referred to by 1-based index.  Products that are
not listed are zero.
"""

from __future__ import annotations

import json
import re

from .algebra import Algebra
from .errors import DocumentError, FieldError
from .exactfield import parse_field
from .linalg import Subspace

_NUM = re.compile(r"^\d+(?:/\d+)?$")
_TOKEN = re.compile(r"[+-]|[^\s+*-]+|\*")


def _names(dim, basis):
    return list(basis) if basis else [f"e{i + 1}" for i in range(dim)]


def _resolver(dim, basis):
    names = _names(dim, basis)
    lookup = {n: i for i, n in enumerate(names)}

    def resolve(tok):
        tok = str(tok).strip()
        if tok in lookup:
            return lookup[tok]
        if tok.isdigit():
            idx = int(tok)
            if 1 <= idx <= dim:
                return idx - 1
            raise DocumentError(f"basis index {idx} out of range 1..{dim}")
        raise DocumentError(f"unknown basis name {tok!r}")

    return resolve


def _parse_coef(field, text):
    try:
        return field.parse(text)
    except FieldError as exc:
        raise DocumentError(str(exc)) from None


def _parse_result(text, field, resolve):
    """Terms of a right-hand side as a list of (coefficient, index)."""
    toks = _TOKEN.findall(text)
    if toks == ["0"]:
        return []
    terms = []
    i = 0
    while i < len(toks):
        sign = 1
        while i < len(toks) and toks[i] in "+-":
            if toks[i] == "-":
                sign = -sign
            i += 1
        if i >= len(toks):
            raise DocumentError(f"dangling operator in {text!r}")
        tok = toks[i]
        nxt = toks[i + 1] if i + 1 < len(toks) else None
        if nxt == "*":
            nxt = toks[i + 2] if i + 2 < len(toks) else None
            skip = 3
        else:
            skip = 2
        if _NUM.match(tok) and nxt is not None and nxt not in "+-*":
            coef, name = tok, nxt
            i += skip
        else:
            coef, name = "1", tok
            i += 1
        c = _parse_coef(field, coef)
        terms.append((field.mul(c, field.norm(sign)), resolve(name)))
    return terms


def _assemble(field, dim, basis, entries):
    if dim < 0:
        raise DocumentError("negative dimension")
    if basis is not None and len(basis) != dim:
        raise DocumentError(f"basis lists {len(basis)} names for dim {dim}")
    if basis is not None and len(set(basis)) != len(basis):
        raise DocumentError("duplicate basis names")
    resolve = _resolver(dim, basis)
    products = {}
    for left, right, terms in entries:
        key = (resolve(left), resolve(right))
        if key in products:
            raise DocumentError(f"duplicate product entry {left}*{right}")
        out = {}
        for c, k in terms(resolve) if callable(terms) else terms:
            out[k] = field.add(out.get(k, field.zero), c)
        products[key] = out
    return Algebra.from_products(field, dim, products, basis)


def parse_text(text):
    field = dim = basis = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        key = head.strip().lower()
        if sep and key in ("field", "dim", "basis"):
            if key == "field":
                try:
                    field = parse_field(rest.strip())
                except FieldError as exc:
                    raise DocumentError(str(exc)) from None
            elif key == "dim":
                try:
                    dim = int(rest.strip())
                except ValueError:
                    raise DocumentError(f"line {lineno}: bad dimension {rest.strip()!r}") from None
            else:
                basis = rest.split()
            continue
        lhs, eq, rhs = line.partition("=")
        if not eq or "*" not in lhs:
            raise DocumentError(f"line {lineno}: expected 'a*b = ...', got {raw!r}")
        left, _, right = lhs.partition("*")
        if field is None or dim is None:
            raise DocumentError("field and dim must precede products")
        f = field
        entries.append((left.strip(), right.strip(),
                        lambda resolve, rhs=rhs, f=f: _parse_result(rhs, f, resolve)))
    if field is None or dim is None:
        raise DocumentError("document needs 'field:' and 'dim:' lines")
    return _assemble(field, dim, basis, entries)


def parse_json(data):
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
    if "document" in data and isinstance(data["document"], dict):
        data = data["document"]
    try:
        field = parse_field(str(data["field"]))
        dim = int(data["dim"])
    except (KeyError, ValueError, FieldError) as exc:
        raise DocumentError(f"bad JSON document header: {exc}") from None
    basis = data.get("basis")
    entries = []
    for e in data.get("products", []):
        try:
            left, right, result = e["left"], e["right"], e["result"]
        except (KeyError, TypeError):
            raise DocumentError(f"bad product entry {e!r}") from None

        def terms(resolve, result=result):
            out = []
            for item in result:
                coef, name = item
                out.append((_parse_coef(field, coef), resolve(name)))
            return out

        entries.append((left, right, terms))
    return _assemble(field, dim, basis, entries)


def parse_algebra(text, json_body=None):
    """Parse a document; JSON is used when asked for or when the text starts with '{'."""
    if json_body is None:
        json_body = text.lstrip().startswith("{")
    return parse_json(text) if json_body else parse_text(text)


def _terms(alg, vec):
    f = alg.field
    return [(f.format(c), _names(alg.dim, alg.labels)[k]) for k, c in enumerate(vec) if c]


def to_json_document(alg):
    names = _names(alg.dim, alg.labels)
    doc = {"field": str(alg.field), "dim": alg.dim}
    if alg.labels:
        doc["basis"] = list(alg.labels)
    doc["products"] = [
        {"left": names[i], "right": names[j], "result": [list(t) for t in _terms(alg, v)]}
        for i, j, v in alg.nonzero_products()]
    return doc


def serialize_algebra(alg, json_body=False, header=()):
    if json_body:
        return json.dumps(to_json_document(alg), indent=2) + "\n"
    names = _names(alg.dim, alg.labels)
    lines = [f"# {h}" for h in header]
    lines += [f"field: {alg.field}", f"dim: {alg.dim}"]
    if alg.labels:
        lines.append("basis: " + " ".join(alg.labels))
    for i, j, v in alg.nonzero_products():
        rhs = " + ".join(f"{c} {n}" for c, n in _terms(alg, v))
        lines.append(f"{names[i]}*{names[j]} = {rhs}")
    return "\n".join(lines) + "\n"


def parse_subspace(text, alg):
    """Spanning vectors, one per line (or a JSON list of rows), as a subspace of ``alg``."""
    f = alg.field
    stripped = text.strip()
    if stripped.startswith("["):
        rows = json.loads(stripped)
    else:
        rows = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].replace(",", " ").strip()
            if line:
                rows.append(line.split())
    vecs = []
    for r in rows:
        if len(r) != alg.dim:
            raise DocumentError(f"vector {r!r} does not have {alg.dim} coordinates")
        vecs.append(tuple(_parse_coef(f, str(x)) for x in r))
    return Subspace.span(f, alg.dim, vecs)
