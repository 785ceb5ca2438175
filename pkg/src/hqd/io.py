"""Certificate files: the hqd-cert-v1 JSON format, a plain text listing and
a Graphviz DOT rendering.

The JSON writer puts one cycle record per line so large certificates diff
well; the output is plain JSON either way.
"""

from __future__ import annotations

import colorsys
import json
from typing import Any

from .certificates import PartitionedDecomposition
from .core import cycle_edges, from_bitstring, to_bitstring
from .errors import CertificateParseError

FORMAT_TAG = "hqd-cert-v1"
LABEL_MODES = ("int", "binary")
DOT_STYLES = ("solid", "dashed", "dotted", "bold")


def _label(v: int, n: int, labels: str):
    if labels not in LABEL_MODES:
        raise ValueError(f"labels must be one of {LABEL_MODES}")
    return v if labels == "int" else to_bitstring(v, n)


def dumps(d: PartitionedDecomposition, labels: str = "int") -> str:
    head = {"format": FORMAT_TAG, "n": d.host_n, "cycle_length": d.cycle_length}
    if labels != "int":
        head["labels"] = labels
    lines = [json.dumps(head)[:-1] + ', "cycles": [']
    recs = []
    for idx, (c, s) in enumerate(zip(d.cycles, d.set_of)):
        rec = {"id": idx, "partition_set": s, "vertices": [_label(v, d.host_n, labels) for v in c]}
        recs.append("  " + json.dumps(rec, separators=(",", ":")))
    lines.append(",\n".join(recs))
    lines.append("]}")
    return "\n".join(lines) + "\n"


def _int(obj: dict, key: str, where: str) -> int:
    val = obj.get(key)
    if not isinstance(val, int) or isinstance(val, bool):
        raise CertificateParseError(f"{where}: '{key}' must be an integer")
    return val


def _vertex(v: Any, n: int, where: str) -> int:
    if isinstance(v, bool):
        raise CertificateParseError(f"{where}: vertex {v!r} is not a label")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        if len(v) != n:
            raise CertificateParseError(f"{where}: bit string {v!r} does not have {n} bits")
        try:
            return from_bitstring(v)
        except ValueError as exc:
            raise CertificateParseError(f"{where}: {exc}") from None
    raise CertificateParseError(f"{where}: vertex {v!r} is not a label")


def loads(text: str) -> PartitionedDecomposition:
    """Parse a certificate. Vertices may be integers or bit strings.

    Only the shape is checked here; whether the cycles decompose Q_n is left
    to the verifier, so broken-but-well-formed files still load.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateParseError(f"not JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CertificateParseError("top level must be an object")
    if obj.get("format") != FORMAT_TAG:
        raise CertificateParseError(f"format tag must be {FORMAT_TAG!r}")
    n = _int(obj, "n", "header")
    length = _int(obj, "cycle_length", "header")
    if n < 1:
        raise CertificateParseError("header: n must be positive")
    recs = obj.get("cycles")
    if not isinstance(recs, list) or not recs:
        raise CertificateParseError("header: 'cycles' must be a non-empty list")
    cycles, set_of, ids = [], [], set()
    for pos, rec in enumerate(recs):
        where = f"cycle #{pos}"
        if not isinstance(rec, dict):
            raise CertificateParseError(f"{where}: record must be an object")
        cid = _int(rec, "id", where)
        if cid in ids:
            raise CertificateParseError(f"{where}: duplicate id {cid}")
        ids.add(cid)
        verts = rec.get("vertices")
        if not isinstance(verts, list) or not verts:
            raise CertificateParseError(f"{where}: 'vertices' must be a non-empty list")
        cycles.append(tuple(_vertex(v, n, where) for v in verts))
        set_of.append(_int(rec, "partition_set", where))
    return PartitionedDecomposition(n, length, tuple(cycles), tuple(set_of))


def read_certificate(path) -> PartitionedDecomposition:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise CertificateParseError(f"cannot read {path}: {exc}") from None
    return loads(text)


def to_text(d: PartitionedDecomposition, labels: str = "int") -> str:
    """One line per cycle: ``<id> set=<s>: v v v ...``."""
    out = [f"# {FORMAT_TAG} n={d.host_n} cycle_length={d.cycle_length} cycles={len(d.cycles)} sets={d.num_sets}"]
    for idx, (c, s) in enumerate(zip(d.cycles, d.set_of)):
        out.append(f"{idx} set={s}: " + " ".join(str(_label(v, d.host_n, labels)) for v in c))
    return "\n".join(out) + "\n"


def cycle_colour(idx: int, total: int) -> str:
    """Graphviz HSV colour, evenly spaced hues."""
    r, g, b = colorsys.hsv_to_rgb(idx / max(total, 1), 0.85, 0.85)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def to_dot(d: PartitionedDecomposition, labels: str = "int") -> str:
    """Undirected graph: every vertex of Q_n, every cycle edge coloured by its
    cycle and styled by its partition set (styles repeat past four sets)."""
    n = d.host_n
    sets = sorted(set(d.set_of))
    style = {s: DOT_STYLES[k % len(DOT_STYLES)] for k, s in enumerate(sets)}
    out = [f'graph "Q{n}" {{', "  node [shape=circle, fontsize=10];"]
    for v in range(1 << n):
        out.append(f'  {v} [label="{_label(v, n, labels)}"];')
    for idx, (c, s) in enumerate(zip(d.cycles, d.set_of)):
        col = cycle_colour(idx, len(d.cycles))
        for u, w in cycle_edges(c):
            out.append(f'  {u} -- {w} [color="{col}", style={style[s]}, cycle={idx}, set={s}];')
    out.append("}")
    return "\n".join(out) + "\n"
