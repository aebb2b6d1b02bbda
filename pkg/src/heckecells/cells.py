"""Right-cell preorder and partition on fW, plus the finite-generation toolkit.

The preorder is generated by single canonical-generator expansions: there is
an edge y -> w (with witness s) whenever the canonical basis element indexed
by w appears in N_y-bar . (H_s + v).  Cells are the strongly connected
components of that edge graph, computed on a length-truncated ball.

Truncation policy: edges are expanded from every source of length <= L, so
targets up to length L+1 are known exactly.  A component is *trusted* when it
reaches down to the core zone (some member of length <= L - margin) and no
member escaped the expanded ball.  The margin is an engineering contract, not
a theorem: it is the room we give merging paths near the boundary.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .affine import AffineElement, AffineWeyl


@dataclass(frozen=True)
class CellEdge:
    frm: AffineElement
    to: AffineElement
    witness: int  # generator index


@dataclass
class CellPartition:
    length_bound: int
    margin: int
    cells: list[frozenset[AffineElement]]
    trusted: list[bool]
    cell_of: dict[AffineElement, int]
    reach: list[frozenset[int]]  # cell ids reachable from each cell (incl. itself)
    basis_p: int = 0
    provenance: str = ""

    def cell_index(self, w: AffineElement) -> "int | None":
        return self.cell_of.get(w)

    def trusted_cells(self) -> list[int]:
        return [i for i, t in enumerate(self.trusted) if t]

    def members(self, i: int) -> frozenset[AffineElement]:
        return self.cells[i]


def cell_edges(aw: AffineWeyl, provider, bound: int) -> list[CellEdge]:
    """All single-generator expansion edges from sources of length <= bound.

    HECKE_CELLS_THREADS caps the expansion worker pool; results are collected
    per source, so the edge list is deterministic regardless of scheduling.
    """
    asph = provider.asph
    sources = aw.enumerate_fW(bound)

    def expand(y):
        out = []
        ny = provider.asph_canonical(y)
        for i in range(len(aw.gens)):
            prod = asph.mul_by_kl_gen(ny, i)
            if not prod:
                continue
            for w in provider.asph_to_canonical(prod):
                out.append(CellEdge(frm=y, to=w, witness=i))
        return out

    workers = max(1, int(os.environ.get("HECKE_CELLS_THREADS", "1")))
    if workers > 1:
        # canonical-basis recursion memoizes shared prefixes; warm it
        # sequentially so workers only read the caches
        for y in sources:
            provider.asph_canonical(y)
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(expand, sources))
    else:
        chunks = [expand(y) for y in sources]
    return [e for chunk in chunks for e in chunk]


def _strongly_connected_components(nodes, succ):
    """Iterative Tarjan; returns components as lists of nodes."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = [0]

    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ.get(root, ())))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter[0]
                    counter[0] += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(succ.get(nxt, ()))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    x = stack.pop()
                    on_stack.discard(x)
                    comp.append(x)
                    if x == node:
                        break
                comps.append(comp)
    return comps


def right_cells(
    aw: AffineWeyl, bound: int, margin: int, provider
) -> CellPartition:
    """Cell partition of the length-<=bound ball of fW under the given basis."""
    if not 0 <= margin <= bound:
        raise ValueError("need 0 <= margin <= length bound")
    edges = cell_edges(aw, provider, bound)
    succ: dict[AffineElement, set[AffineElement]] = {}
    nodes = set()
    for e in edges:
        nodes.add(e.frm)
        nodes.add(e.to)
        succ.setdefault(e.frm, set()).add(e.to)
    nodes.update(aw.enumerate_fW(bound))
    ordered_nodes = sorted(nodes, key=aw.sort_key)
    succ_sorted = {
        n: sorted(s, key=aw.sort_key) for n, s in succ.items()
    }

    comps = _strongly_connected_components(ordered_nodes, succ_sorted)
    comps = [sorted(c, key=aw.sort_key) for c in comps]
    comps.sort(key=lambda c: aw.sort_key(c[0]))

    cell_of = {}
    for i, comp in enumerate(comps):
        for w in comp:
            cell_of[w] = i

    core = bound - margin
    trusted = [
        comp[0].length <= core and comp[-1].length <= bound for comp in comps
    ]

    # condensation reachability
    cell_succ: list[set[int]] = [set() for _ in comps]
    for e in edges:
        a, b = cell_of[e.frm], cell_of[e.to]
        if a != b:
            cell_succ[a].add(b)
    order = _topological_order(len(comps), cell_succ)
    reach_sets: list[set[int]] = [set() for _ in comps]
    for i in reversed(order):
        acc = {i}
        for j in cell_succ[i]:
            acc |= reach_sets[j]
        reach_sets[i] = acc
    reach = [frozenset(s) for s in reach_sets]

    return CellPartition(
        length_bound=bound,
        margin=margin,
        cells=[frozenset(c) for c in comps],
        trusted=trusted,
        cell_of=cell_of,
        reach=reach,
        basis_p=provider.p,
        provenance=provider.provenance,
    )


def _topological_order(n, succ):
    seen = [False] * n
    out = []

    for root in range(n):
        if seen[root]:
            continue
        stack = [(root, iter(sorted(succ[root])))]
        seen[root] = True
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append((nxt, iter(sorted(succ[nxt]))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            out.append(node)
    out.reverse()
    return out


def leq_R(
    w: AffineElement, y: AffineElement, partition: CellPartition
) -> "bool | None":
    """Whether w <=_R y in the computed preorder; None when untrusted."""
    cw = partition.cell_index(w)
    cy = partition.cell_index(y)
    if cw is None or cy is None:
        return None
    if not (partition.trusted[cw] and partition.trusted[cy]):
        return None
    return cw in partition.reach[cy]


def export_partition_json(aw: AffineWeyl, partition: CellPartition) -> dict:
    cells = []
    for i, comp in enumerate(partition.cells):
        members = sorted(comp, key=aw.sort_key)
        cells.append(
            {
                "id": i,
                "trusted": partition.trusted[i],
                "size": len(members),
                "members": [aw.to_word(w) for w in members],
            }
        )
    n = len(partition.cells)
    matrix = [
        [1 if i in partition.reach[j] else 0 for j in range(n)] for i in range(n)
    ]
    return {
        "schema": 1,
        "type": str(aw.datum.cartan_type),
        "length_bound": partition.length_bound,
        "margin": partition.margin,
        "basis_p": partition.basis_p,
        "provenance": partition.provenance,
        "cells": cells,
        "preorder": matrix,
    }


# -- finite generation machinery ------------------------------------------------


@dataclass
class GenerationConstants:
    """Per-type constants for the translation semigroup acting on fW.

    varpi[i] is the minimal dominant root-lattice weight orthogonal to all
    simple coroots but the i-th; k_alpha[i] its pairing with that coroot.
    """

    varpi: list[tuple[int, ...]]
    k_alpha: list[int]
    k_phi: int
    y_zero: list[tuple[int, ...]]
    z_set: list[AffineElement]


def generation_constants(aw: AffineWeyl) -> GenerationConstants:
    d = aw.datum
    varpi = []
    k_alpha = []
    for i in range(d.rank):
        k = 1
        while True:
            cand = tuple(k if j == i else 0 for j in range(d.rank))
            if d.in_root_lattice(cand):
                break
            k += 1
        varpi.append(cand)
        k_alpha.append(k)
    k_phi = max(k_alpha)

    y_zero = []

    def boxes(i, acc):
        if i == d.rank:
            lam = tuple(acc)
            if d.in_root_lattice(lam):
                y_zero.append(lam)
            return
        for c in range(k_alpha[i] + 1):
            boxes(i + 1, acc + [c])

    boxes(0, [])
    y_zero.sort()

    z_set = []
    for v in d.generate_finite_weyl():
        for lam in y_zero:
            w = aw.mult(aw.translation(lam), aw.from_finite(v))
            if aw.in_fW(w):
                z_set.append(w)
    z_set = sorted(set(z_set), key=aw.sort_key)
    return GenerationConstants(
        varpi=varpi,
        k_alpha=k_alpha,
        k_phi=k_phi,
        y_zero=y_zero,
        z_set=z_set,
    )


def decompose_fW(
    aw: AffineWeyl, consts: GenerationConstants, w: AffineElement
) -> tuple[tuple[int, ...], AffineElement]:
    """Write w in fW as t_lambda . z with lambda dominant in Y and z in Z.

    Follows the reduction that peels varpi_alpha off the translation part
    while some pairing exceeds k_alpha.
    """
    if not aw.in_fW(w):
        raise ValueError("decompose_fW expects an element of fW")
    d = aw.datum
    lam = [0] * d.rank
    cur = w
    while True:
        # translation part mu of cur = t_mu v
        mu = cur.fin.apply(cur.trans)
        for i in range(d.rank):
            if mu[i] > consts.k_alpha[i]:
                shift = aw.translation(tuple(-c for c in consts.varpi[i]))
                cur = aw.mult(shift, cur)
                for j in range(d.rank):
                    lam[j] += consts.varpi[i][j]
                break
        else:
            break
    z = cur
    z_check = tuple(z.fin.apply(z.trans))
    if z_check not in set(consts.y_zero) or not aw.in_fW(z):
        raise AssertionError("decomposition left the finite set Z")
    return tuple(lam), z


def stabilization_n(
    aw: AffineWeyl,
    consts: GenerationConstants,
    partition: CellPartition,
    w: AffineElement,
    psi,
) -> "int | None":
    """Least n at which the chain t_{n x_psi} w becomes cell-stationary.

    Returns None when the chain leaves the trusted range before the repeat
    is observed and confirmed stationary within the range.
    """
    psi = sorted(set(psi))
    d = aw.datum
    x_psi = tuple(
        sum(consts.varpi[i][j] for i in psi) for j in range(d.rank)
    )
    if all(c == 0 for c in x_psi):
        return 0
    shift = aw.translation(x_psi)

    cells_seen = []
    cur = w
    while True:
        idx = partition.cell_index(cur)
        if idx is None or not partition.trusted[idx]:
            break
        cells_seen.append(idx)
        cur = aw.mult(shift, cur)
    if len(cells_seen) < 2:
        return None
    # first index from which every further observed cell is the same
    last = cells_seen[-1]
    n = len(cells_seen) - 1
    while n > 0 and cells_seen[n - 1] == last:
        n -= 1
    if n == len(cells_seen) - 1:
        # the repeat was never observed inside the trusted range
        return None
    return n


def observed_stabilization_bound(
    aw: AffineWeyl, consts: GenerationConstants, partition: CellPartition
) -> int:
    """Max observed n(w, x_psi) over trusted elements and all psi."""
    d = aw.datum
    core = partition.length_bound - partition.margin
    best = 0
    subsets = []
    for mask in range(1, 1 << d.rank):
        subsets.append([i for i in range(d.rank) if mask & (1 << i)])
    for i, comp in enumerate(partition.cells):
        if not partition.trusted[i]:
            continue
        for w in comp:
            if w.length > core:
                continue
            for psi in subsets:
                n = stabilization_n(aw, consts, partition, w, psi)
                if n is not None and n > best:
                    best = n
    return best


def cell_generators(
    aw: AffineWeyl,
    consts: GenerationConstants,
    partition: CellPartition,
    cell_id: int,
    bound: "int | None" = None,
) -> set[AffineElement]:
    """Finite generating set K for a trusted cell.

    K consists of the cell members of the form t_lambda z with all pairing
    ratios floor(<lambda, a^vee>/k_a) bounded by the stabilization constant.
    Every trusted member of the cell must factor as t_mu . v with v in K and
    mu dominant; a verification failure raises.
    """
    if not partition.trusted[cell_id]:
        raise ValueError("cell_generators needs a trusted cell")
    if bound is None:
        observed = observed_stabilization_bound(aw, consts, partition)
        bound = consts.k_phi * max(observed, 1)
    d = aw.datum
    members = partition.cells[cell_id]
    K = set()
    for w in members:
        lam, _ = decompose_fW(aw, consts, w)
        if all(lam[i] // consts.k_alpha[i] <= bound for i in range(d.rank)):
            K.add(w)
    by_fin = {}
    for v in K:
        by_fin.setdefault(v.fin, []).append(v)
    core = partition.length_bound - partition.margin
    for w in members:
        if w.length > core:
            continue
        ok = False
        for v in by_fin.get(w.fin, ()):
            mu = tuple(a - b for a, b in zip(w.fin.apply(w.trans), v.fin.apply(v.trans)))
            if all(c >= 0 for c in mu) and d.in_root_lattice(mu):
                ok = True
                break
        if not ok:
            raise AssertionError(
                f"cell member {aw.to_word(w)} does not factor through K"
            )
    return K
