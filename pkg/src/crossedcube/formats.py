"""Text formats: edge lists, DOT, vertex maps and orbit reports.

Edge list::

    # kind=crossed n=4
    0 1
    0 2
    ...

One ``u v`` line per edge, ``u < v``, in lexicographic order.  P4-graph
exports use the same layout with header ``# kind=p4 host=<kind> n=<n>
center=<v> vertices=<comma list>``.

Vertex map::

    # map n=<n> label=<label>
    0 2
    1 3
    ...

Several maps may follow each other in one file.

Orbit report: ``key=value`` lines in this order -- ``n``, ``kind``,
``method``, (``methods`` and one ``orbit_count.<method>`` per method when
several were compared), ``orbit_count``, then one
``block=<i> size=<s> representative=<r> signature=<bits>`` line per block
and, for comparisons, a final ``check=PASS|FAIL``.  The signature is the
bit string ``u_0 u_2 u_4 ...`` of the representative, ``-`` when empty or
not applicable.
"""

from __future__ import annotations

from io import StringIO
from typing import Iterable, TextIO

from .automorphism import VertexMap
from .orbits import OrbitPartition, signature, signature_string
from .topology import CROSSED, Graph


def _header(fields: dict) -> str:
    return "# " + " ".join(f"{k}={v}" for k, v in fields.items())


def _parse_header(line: str) -> dict[str, str]:
    if not line.startswith("#"):
        raise ValueError(f"expected a '#' header line, got {line!r}")
    out = {}
    for tok in line[1:].split():
        if "=" not in tok:
            out[tok] = ""
            continue
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def edge_list_text(edges: Iterable[tuple[int, int]], **header) -> str:
    lines = [_header(header)]
    lines += [f"{u} {v}" for u, v in sorted((min(e), max(e)) for e in edges)]
    return "\n".join(lines) + "\n"


def graph_edge_list(g: Graph) -> str:
    return edge_list_text(g.edges(), kind=g.kind, n=getattr(g, "n", g.order))


def read_edge_list(text: str) -> tuple[dict[str, str], list[tuple[int, int]]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = _parse_header(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = map(int, ln.split())
        edges.append((u, v))
    return header, edges


def dot_text(vertices: Iterable[int], edges: Iterable[tuple[int, int]], name: str, comment: str = "") -> str:
    lines = []
    if comment:
        lines.append(f"// {comment}")
    lines.append(f"graph {name} {{")
    lines += [f"  {v};" for v in sorted(vertices)]
    lines += [f"  {u} -- {v};" for u, v in sorted((min(e), max(e)) for e in edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dot(g: Graph) -> str:
    n = getattr(g, "n", g.order)
    name = {"crossed": f"CQ_{n}", "hypercube": f"Q_{n}"}.get(g.kind, "G")
    return dot_text(g.vertices(), g.edges(), name, f"kind={g.kind} n={n}")


def write_vertex_map(m: VertexMap, out: TextIO) -> None:
    out.write(f"# map n={m.n} label={m.label or '-'}\n")
    for u, x in enumerate(m.image):
        out.write(f"{u} {x}\n")


def vertex_map_text(maps: Iterable[VertexMap]) -> str:
    buf = StringIO()
    for m in maps:
        write_vertex_map(m, buf)
    return buf.getvalue()


def read_vertex_maps(text: str) -> list[VertexMap]:
    maps: list[VertexMap] = []
    header: dict[str, str] | None = None
    pairs: list[tuple[int, int]] = []

    def flush():
        if header is None:
            return
        n = int(header["n"])
        image = [-1] * (1 << n)
        for u, x in pairs:
            image[u] = x
        if -1 in image:
            raise ValueError(f"map {header.get('label')!r} is not total")
        label = header.get("label", "")
        maps.append(VertexMap(n, tuple(image), "" if label == "-" else label))

    for ln in text.splitlines():
        if not ln.strip():
            continue
        if ln.startswith("#"):
            flush()
            header, pairs = _parse_header(ln), []
            if "map" not in header:
                raise ValueError(f"not a vertex-map header: {ln!r}")
        else:
            if header is None:
                raise ValueError("map data before header")
            u, x = map(int, ln.split())
            pairs.append((u, x))
    flush()
    return maps


def block_lines(p: OrbitPartition, kind: str) -> list[str]:
    lines = []
    for i, block in enumerate(p.blocks):
        rep = block[0]
        if kind == CROSSED and p.n is not None and p.n >= 3:
            sig = signature_string(signature(rep, p.n))
        else:
            sig = "-"
        lines.append(f"block={i} size={len(block)} representative={rep} signature={sig}")
    return lines


def orbit_report(p: OrbitPartition, kind: str = CROSSED, method: str | None = None) -> str:
    lines = [
        f"n={p.n}",
        f"kind={kind}",
        f"method={method or p.method}",
        f"orbit_count={p.count}",
    ]
    lines += block_lines(p, kind)
    return "\n".join(lines) + "\n"


def comparison_report(partitions: dict[str, OrbitPartition], kind: str = CROSSED) -> tuple[str, bool]:
    """Report for several methods; PASS iff all partitions are identical."""
    names = list(partitions)
    first = partitions[names[0]]
    ok = all(partitions[m] == first for m in names[1:])
    lines = [
        f"n={first.n}",
        f"kind={kind}",
        "method=all",
        f"methods={','.join(names)}",
    ]
    lines += [f"orbit_count.{m}={partitions[m].count}" for m in names]
    lines.append(f"orbit_count={first.count}")
    lines += block_lines(first, kind)
    lines.append(f"check={'PASS' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n", ok


def parse_report(text: str) -> dict:
    """Parse an orbit report into a dict; block lines collect under ``blocks``."""
    out: dict = {"blocks": []}
    for ln in text.splitlines():
        if not ln.strip():
            continue
        if ln.startswith("block="):
            fields = dict(tok.split("=", 1) for tok in ln.split())
            out["blocks"].append(
                {
                    "index": int(fields["block"]),
                    "size": int(fields["size"]),
                    "representative": int(fields["representative"]),
                    "signature": fields["signature"],
                }
            )
        else:
            k, v = ln.split("=", 1)
            out[k] = v
    return out


def _p4_header(h) -> dict:
    return {
        "kind": "p4",
        "host": h.host.kind,
        "n": getattr(h.host, "n", h.host.order),
        "center": "-" if h.center is None else h.center,
        "vertices": ",".join(map(str, h.vertices)),
    }


def p4_edge_list(h) -> str:
    return edge_list_text(h.edges, **_p4_header(h))


def p4_dot(h) -> str:
    comment = " ".join(f"{k}={v}" for k, v in _p4_header(h).items())
    return dot_text(h.vertices, h.edges, "P4", comment)
