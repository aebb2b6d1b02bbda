"""SVG rendering of rank-2 dominant-chamber alcove pictures colored by cell.

Alcoves are drawn in the rho-shifted coordinates, where the alcove of w is
the image of the fundamental simplex under the p-dilated affine action of w.
The embedding into the plane is the exact Gram matrix of the fundamental
weights, factored once; every coordinate that reaches the SVG is formatted
with a fixed precision so that identical inputs give identical bytes.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .affine import AffineWeyl
from .cells import CellPartition

_PALETTE = [
    "#4e79a7",
    "#f28e2b",
    "#59a14f",
    "#e15759",
    "#b07aa1",
    "#edc948",
    "#76b7b2",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
]
_UNTRUSTED = "#d8d8d8"


def _embedding(datum):
    g11 = datum.inner((1, 0), (1, 0))
    g12 = datum.inner((1, 0), (0, 1))
    g22 = datum.inner((0, 1), (0, 1))
    a = math.sqrt(float(g11))
    b = float(g12) / a
    c = math.sqrt(float(g22) - b * b)

    def embed(x):
        return (float(x[0]) * a + float(x[1]) * b, float(x[1]) * c)

    return embed


def render_cell_diagram(
    aw: AffineWeyl, partition: CellPartition, p: int, bound: int, label_max: "int | None" = None
) -> str:
    """SVG document of the alcoves of fW up to the length bound.

    Alcoves near the origin carry their reduced-word labels; the cutoff is
    chosen so that at least 16 alcoves are labeled when that many exist.
    """
    datum = aw.datum
    if datum.rank != 2:
        raise ValueError("alcove diagrams are drawn for rank-2 types only")
    embed = _embedding(datum)
    if label_max is None:
        lengths = sorted(w.length for w in aw.enumerate_fW(bound))
        label_max = lengths[min(15, len(lengths) - 1)]

    # vertices of the closed fundamental simplex in rho-shifted coordinates
    at = datum.affine_root
    base = [(Fraction(0), Fraction(0))]
    for i in range(2):
        c = at.coroot[i]
        base.append(
            tuple(
                Fraction(p, c) if j == i else Fraction(0) for j in range(2)
            )
        )

    def alcove_vertices(w):
        # x -> u(x + p beta) for w = u t_beta
        out = []
        for x in base:
            shifted = tuple(x[j] + p * w.trans[j] for j in range(2))
            img = w.fin.apply(shifted)
            out.append(embed(img))
        return out

    elements = aw.enumerate_fW(bound)
    polys = []
    labels = []
    xs, ys = [], []
    for w in elements:
        verts = alcove_vertices(w)
        for vx, vy in verts:
            xs.append(vx)
            ys.append(vy)
        cid = partition.cell_index(w)
        if cid is not None and partition.trusted[cid]:
            color = _PALETTE[cid % len(_PALETTE)]
        else:
            color = _UNTRUSTED
        polys.append((verts, color))
        if w.length <= label_max:
            bx = sum(v[0] for v in verts) / 3.0
            by = sum(v[1] for v in verts) / 3.0
            labels.append((bx, by, aw.to_word(w)))

    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    pad = 0.04 * max(maxx - minx, maxy - miny, 1.0)
    scale = 640.0 / max(maxx - minx, 1e-9)

    def tx(x):
        return (x - minx + pad) * scale

    def ty(y):
        return (maxy - y + pad) * scale

    width = tx(maxx + pad)
    height = ty(miny - pad)

    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.4f} {height:.4f}">'
    )
    out.append(
        f"<!-- antispherical cells, type {datum.cartan_type}, p={p}, "
        f"length bound {bound} -->"
    )
    for verts, color in polys:
        pts = " ".join(f"{tx(x):.4f},{ty(y):.4f}" for x, y in verts)
        out.append(
            f'<polygon class="alcove" points="{pts}" fill="{color}" '
            f'stroke="#222222" stroke-width="0.8"/>'
        )
    for bx, by, text in labels:
        out.append(
            f'<text x="{tx(bx):.4f}" y="{ty(by):.4f}" font-size="9" '
            f'text-anchor="middle" fill="#111111">{text}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
