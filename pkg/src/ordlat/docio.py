"""JSON poset documents and Graphviz DOT export."""

from __future__ import annotations

import json

from .errors import ParseError
from .poset import Poset, down_masks, poset_new

SCHEMA_VERSION = "1"
KINDS = ("poset", "lattice")


def poset_to_document(P: Poset, kind: str = "poset") -> dict:
    """Document with strict generating pairs; closing them reproduces P."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "size": P.n,
        "labels": list(P.labels),
        "leq_pairs": [[i, j] for i, j in P.pairs() if i != j],
    }


def document_to_poset(doc) -> tuple[str, Poset]:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(
            f"unsupported schema_version {doc.get('schema_version')!r}"
        )
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {KINDS}, got {kind!r}")
    size = doc.get("size")
    if not isinstance(size, int) or size < 0:
        raise ParseError("size must be a nonnegative integer")
    pairs = doc.get("leq_pairs")
    if not isinstance(pairs, list):
        raise ParseError("leq_pairs must be a list of [i, j] pairs")
    clean = []
    for p in pairs:
        if (
            not isinstance(p, (list, tuple))
            or len(p) != 2
            or not all(isinstance(x, int) for x in p)
        ):
            raise ParseError(f"bad pair entry {p!r}")
        if not all(0 <= x < size for x in p):
            raise ParseError(f"pair {p!r} out of range for size {size}")
        clean.append((p[0], p[1]))
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != size:
            raise ParseError("labels must list one name per element")
        labels = [str(x) for x in labels]
    return kind, poset_new(size, clean, labels)


def parse_document(text: str) -> tuple[str, Poset]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return document_to_poset(doc)


def dot_export(P: Poset, target: str = "hasse") -> str:
    """Graphviz text; hasse mode keeps only cover edges and groups elements
    by longest-chain height for bottom-up ranking."""
    if target not in ("order", "hasse"):
        raise ValueError(f"unknown dot target {target!r}")
    lines = ["digraph poset {", "  rankdir=BT;"]
    for i in range(P.n):
        label = P.labels[i].replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}"];')
    if target == "order":
        edges = [(i, j) for i, j in P.pairs() if i != j]
    else:
        edges = P.covers()
        down = down_masks(P)
        height = [0] * P.n
        for i in sorted(range(P.n), key=lambda x: down[x].bit_count()):
            below = [j for j in range(P.n) if (down[i] >> j) & 1 and j != i]
            height[i] = 1 + max((height[j] for j in below), default=-1)
        for level in sorted(set(height)):
            members = " ".join(f"n{i};" for i in range(P.n) if height[i] == level)
            lines.append(f"  {{rank=same; {members}}}")
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
