"""JSON algebra documents.

A document describes one finite algebra::

    {
      "format_version": 1,
      "kind": "domain_free" | "labeled",
      "name": "...",
      "lattice": {"elements": [...], "leq": [[a, b], ...], "top": "..."},
      "carrier": [...],
      "combine": {"dense": [[...], ...]}      or {"triples": [[a, b, c], ...]},
      "focus": {x: {phi: result}}             (domain_free)
      "neutral": "..."                         (domain_free)
      "label": {phi: x}                        (labeled)
      "marginalize": {x: {phi: result}}        (labeled, only x <= d(phi))
      "neutrals": {x: phi}                     (labeled)
      "bases": [...],                          optional
      "analytic": {...},                       optional annotation
      "metadata": {...}                        optional
    }

``leq`` lists strict pairs; reflexive pairs are accepted and dropped.
Output is canonical (dense combine, carrier and lattice order preserved),
so ``dumps(loads(text)) == text`` for any document this module wrote.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .domain_free import Basis, DomainFreeAlgebra
from .errors import MalformedInputError
from .labeled import LabeledAlgebra, LocalBasisFamily
from .order import FiniteLattice

FORMAT_VERSION = 1
KINDS = ("domain_free", "labeled")


@dataclass(frozen=True)
class DocBasis:
    """A basis block; ``expect`` lists flags a checker should confirm."""

    name: str
    members: tuple[str, ...] | Mapping[str, tuple[str, ...]]
    expect: Mapping[str, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"name": self.name}
        if isinstance(self.members, tuple):
            out["members"] = list(self.members)
        else:
            out["members"] = {x: list(v) for x, v in self.members.items()}
        if self.expect:
            out["expect"] = dict(self.expect)
        return out


@dataclass(frozen=True)
class Document:
    algebra: DomainFreeAlgebra | LabeledAlgebra
    bases: tuple[DocBasis, ...] = ()
    analytic: Mapping[str, Any] | None = None
    metadata: Mapping[str, Any] | None = None

    @property
    def kind(self) -> str:
        return "labeled" if isinstance(self.algebra, LabeledAlgebra) else "domain_free"

    def df_basis(self, b: DocBasis) -> Basis:
        if not isinstance(self.algebra, DomainFreeAlgebra) or not isinstance(b.members, tuple):
            raise MalformedInputError(f"basis {b.name!r} does not match a domain-free document")
        return Basis.verified(self.algebra, b.members, b.name)

    def labeled_basis(self, b: DocBasis) -> LocalBasisFamily:
        if not isinstance(self.algebra, LabeledAlgebra) or isinstance(b.members, tuple):
            raise MalformedInputError(f"basis {b.name!r} does not match a labeled document")
        return LocalBasisFamily(dict(b.members), b.name)


# --- encoding ---------------------------------------------------------------


def _lattice_json(lat: FiniteLattice) -> dict:
    return {"elements": list(lat.elements), "leq": [list(p) for p in lat.strict_pairs()], "top": lat.top}


def to_json(doc: Document) -> dict:
    a = doc.algebra
    out: dict[str, Any] = {"format_version": FORMAT_VERSION, "kind": doc.kind, "name": a.name}
    out["lattice"] = _lattice_json(a.lattice)
    out["carrier"] = list(a.carrier)
    out["combine"] = {"dense": [[a.combine(p, q) for q in a.carrier] for p in a.carrier]}
    if isinstance(a, DomainFreeAlgebra):
        out["focus"] = {x: {p: a.focus(p, x) for p in a.carrier} for x in a.lattice.elements}
        out["neutral"] = a.neutral
    else:
        out["label"] = {p: a.d(p) for p in a.carrier}
        out["marginalize"] = {
            x: {p: a.marginal_table[p, x] for p in a.carrier if (p, x) in a.marginal_table}
            for x in a.lattice.elements
        }
        out["neutrals"] = {x: a.neutrals[x] for x in a.lattice.elements}
    if doc.bases:
        out["bases"] = [b.to_json() for b in doc.bases]
    if doc.analytic is not None:
        out["analytic"] = doc.analytic
    if doc.metadata is not None:
        out["metadata"] = doc.metadata
    return out


def dumps(doc: Document | DomainFreeAlgebra | LabeledAlgebra) -> str:
    if not isinstance(doc, Document):
        doc = Document(doc)
    return json.dumps(to_json(doc), indent=2, ensure_ascii=False) + "\n"


# --- decoding ---------------------------------------------------------------


def _need(obj: Mapping, key: str, kind: type | tuple[type, ...], where: str = "document"):
    if key not in obj:
        raise MalformedInputError(f"{where} is missing {key!r}")
    val = obj[key]
    if not isinstance(val, kind):
        raise MalformedInputError(f"{where}.{key} has the wrong type")
    return val


def _str_list(val, where: str) -> list[str]:
    if not isinstance(val, list) or not all(isinstance(v, str) for v in val):
        raise MalformedInputError(f"{where} must be a list of strings")
    return val


def _lattice(block: Mapping) -> FiniteLattice:
    elements = _str_list(_need(block, "elements", list, "lattice"), "lattice.elements")
    pairs = []
    for p in _need(block, "leq", list, "lattice"):
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(v, str) for v in p)):
            raise MalformedInputError("lattice.leq entries must be [a, b] pairs of element ids")
        if p[0] not in elements or p[1] not in elements:
            raise MalformedInputError(f"lattice.leq mentions an unknown element in {p}")
        if p[0] != p[1]:
            pairs.append((p[0], p[1]))
    lat = FiniteLattice(elements, pairs)
    if "top" in block and block["top"] != lat.top:
        raise MalformedInputError(f"declared top {block['top']!r} is not the lattice top {lat.top!r}")
    return lat


def _combine(block: Mapping, carrier: list[str]) -> dict[tuple[str, str], str]:
    if not isinstance(block, dict) or len(block) != 1:
        raise MalformedInputError("combine must have exactly one of 'dense' or 'triples'")
    known = set(carrier)
    table: dict[tuple[str, str], str] = {}
    if "dense" in block:
        rows = block["dense"]
        if not isinstance(rows, list) or len(rows) != len(carrier):
            raise MalformedInputError("combine.dense needs one row per carrier element")
        for p, row in zip(carrier, rows):
            row = _str_list(row, "combine.dense row")
            if len(row) != len(carrier):
                raise MalformedInputError("combine.dense rows need one entry per carrier element")
            for q, r in zip(carrier, row):
                table[p, q] = r
    elif "triples" in block:
        for t in block["triples"]:
            if not (isinstance(t, list) and len(t) == 3 and all(isinstance(v, str) for v in t)):
                raise MalformedInputError("combine.triples entries must be [a, b, result]")
            if t[0] not in known or t[1] not in known:
                raise MalformedInputError(f"combine.triples mentions an unknown element in {t}")
            if (t[0], t[1]) in table and table[t[0], t[1]] != t[2]:
                raise MalformedInputError(f"combine.triples gives two results for ({t[0]!r}, {t[1]!r})")
            table[t[0], t[1]] = t[2]
    else:
        raise MalformedInputError("combine must have exactly one of 'dense' or 'triples'")
    return table


def _per_domain(block, lat: FiniteLattice, carrier: list[str], what: str) -> dict[tuple[str, str], str]:
    if not isinstance(block, dict):
        raise MalformedInputError(f"{what} must map domain ids to element maps")
    known = set(carrier)
    table = {}
    for x, m in block.items():
        if x not in lat:
            raise MalformedInputError(f"{what} mentions unknown domain {x!r}")
        if not isinstance(m, dict):
            raise MalformedInputError(f"{what}.{x} must map element ids to results")
        for p, r in m.items():
            if p not in known or not isinstance(r, str):
                raise MalformedInputError(f"{what}.{x} has an invalid entry for {p!r}")
            table[p, x] = r
    return table


def _bases(raw, kind: str) -> tuple[DocBasis, ...]:
    if not isinstance(raw, list):
        raise MalformedInputError("bases must be a list")
    out = []
    for i, b in enumerate(raw):
        if not isinstance(b, dict):
            raise MalformedInputError(f"bases[{i}] must be an object")
        name = b.get("name", f"basis{i}")
        members = b.get("members")
        if kind == "domain_free":
            members = tuple(_str_list(members, f"bases[{i}].members"))
        elif isinstance(members, dict):
            members = {x: tuple(_str_list(v, f"bases[{i}].members.{x}")) for x, v in members.items()}
        else:
            raise MalformedInputError(f"bases[{i}].members must map domains to element lists")
        expect = b.get("expect", {})
        if not isinstance(expect, dict) or not all(isinstance(v, bool) for v in expect.values()):
            raise MalformedInputError(f"bases[{i}].expect must map flag names to booleans")
        out.append(DocBasis(str(name), members, expect))
    return tuple(out)


def from_json(obj: Any) -> Document:
    if not isinstance(obj, dict):
        raise MalformedInputError("a document must be a JSON object")
    version = _need(obj, "format_version", int)
    if version != FORMAT_VERSION:
        raise MalformedInputError(f"unsupported format_version {version}")
    kind = _need(obj, "kind", str)
    if kind not in KINDS:
        raise MalformedInputError(f"kind must be one of {KINDS}")
    name = obj.get("name", "")
    lat = _lattice(_need(obj, "lattice", dict))
    carrier = _str_list(_need(obj, "carrier", list), "carrier")
    ct = _combine(_need(obj, "combine", dict), carrier)
    if kind == "domain_free":
        ft = _per_domain(_need(obj, "focus", dict), lat, carrier, "focus")
        alg: DomainFreeAlgebra | LabeledAlgebra = DomainFreeAlgebra(
            tuple(carrier), lat, ct, ft, _need(obj, "neutral", str), name
        )
    else:
        label = _need(obj, "label", dict)
        mt = _per_domain(_need(obj, "marginalize", dict), lat, carrier, "marginalize")
        for (p, x) in mt:
            if p in label and label[p] in lat and not lat.leq(x, label[p]):
                raise MalformedInputError(f"marginalize entry for {p!r} onto {x!r} lies outside d({p!r})")
        neutrals = _need(obj, "neutrals", dict)
        alg = LabeledAlgebra(tuple(carrier), lat, label, ct, mt, neutrals, name)
    bases = _bases(obj["bases"], kind) if "bases" in obj else ()
    doc = Document(alg, bases, obj.get("analytic"), obj.get("metadata"))
    for b in bases:
        if kind == "domain_free":
            doc.df_basis(b)
        else:
            for x, ms in b.members.items():
                if x not in lat or any(m not in set(carrier) for m in ms):
                    raise MalformedInputError(f"basis {b.name!r} names unknown ids")
    return doc


def loads(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"not valid JSON: {exc}") from None
    return from_json(obj)


def load(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)
