"""Nilpotent orbit bookkeeping: Bala-Carter enumeration, closure order,
the cell-to-orbit dictionary, and the support-variety prediction records.

Orbits are enumerated as pairs (I, J) of simple-root subsets, J inside I,
such that the parabolic of the Levi on I determined by J is distinguished
(even-grading count criterion), taken up to simultaneous Weyl conjugacy.
Dimensions come from the grading cocharacter: dim = |Phi| minus the number
of roots pairing to 0 or 1.

The dictionary between antispherical cells and orbits is table-driven, with
three universal entries (identity cell -> regular, minimal cell -> zero,
the cell covered by the identity cell -> subregular); in rank <= 2 the
remaining cells are matched along the preorder chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .affine import AffineElement, AffineWeyl, UnsupportedRegimeError
from .cells import CellPartition


class UnsupportedTypeError(ValueError):
    """Raised when a table-driven operation has no data for the type."""


@dataclass(frozen=True)
class NilpotentOrbit:
    bala_carter: tuple[tuple[int, ...], tuple[int, ...]]
    dimension: int
    name: str


def _levi_roots(datum, I: frozenset[int]):
    """All roots (both signs) supported on the simple-root subset I."""
    out = []
    for r in datum.positive_roots:
        if all(c == 0 or i in I for i, c in enumerate(r.simple)):
            out.append(r)
    return out


def _is_distinguished(datum, I: frozenset[int], J: frozenset[int]) -> bool:
    """Even-grading criterion: #(degree 0 roots) + |I| == #(degree 2 roots)."""
    deg0 = 0
    deg2 = 0
    for r in _levi_roots(datum, I):
        deg = 2 * sum(c for i, c in enumerate(r.simple) if i in I - J)
        if deg == 0:
            deg0 += 2  # both signs
        elif deg == 2:
            deg2 += 1
    return deg0 + len(I) == deg2


def _grading_cocharacter(datum, I, J):
    """Coefficients x with h = sum x_i alpha_i^vee pairing 2 on I-J, 0 on J."""
    idx = sorted(I)
    k = len(idx)
    if k == 0:
        return {}
    C = datum.cartan
    # sum_i x_i C[i][j] = t_j for j in I
    A = [[Fraction(C[i][j]) for i in idx] for j in idx]
    t = [Fraction(0 if j in J else 2) for j in idx]
    # gaussian elimination
    for col in range(k):
        piv = next(r for r in range(col, k) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        t[col], t[piv] = t[piv], t[col]
        f = A[col][col]
        A[col] = [x / f for x in A[col]]
        t[col] = t[col] / f
        for r in range(k):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
                t[r] = t[r] - f * t[col]
    return {i: t[pos] for pos, i in enumerate(idx)}


def _orbit_dimension(datum, I, J) -> int:
    x = _grading_cocharacter(datum, I, J)
    nroots = 2 * len(datum.positive_roots)
    small = 0
    for r in datum.positive_roots:
        val = sum(x.get(i, Fraction(0)) * r.fund[i] for i in x)
        assert val.denominator == 1
        v = int(val)
        if v == 0:
            small += 2
        elif v in (1, -1):
            small += 1
    return nroots - small


def _conjugacy_classes(datum, pairs):
    """Group pairs (I, J) under simultaneous Weyl conjugacy (orbit BFS)."""
    n = datum.rank
    C = datum.cartan
    simple_fund = [tuple(C[i][j] for i in range(n)) for j in range(n)]

    def reflect(vec, k):
        pair = vec[k]
        return tuple(vec[i] - pair * simple_fund[k][i] for i in range(n))

    def state_of(pair):
        I, J = pair
        return (
            frozenset(simple_fund[i] for i in I),
            frozenset(simple_fund[j] for j in J),
        )

    targets = {state_of(p): p for p in pairs}
    assigned: dict = {}
    classes: list[list] = []
    for p in pairs:
        if p in assigned:
            continue
        cls = [p]
        start = state_of(p)
        seen = {start}
        frontier = [start]
        assigned[p] = len(classes)
        while frontier:
            nxt = []
            for (si, sj) in frontier:
                for k in range(n):
                    ni = frozenset(reflect(v, k) for v in si)
                    nj = frozenset(reflect(v, k) for v in sj)
                    st = (ni, nj)
                    if st in seen:
                        continue
                    seen.add(st)
                    nxt.append(st)
                    other = targets.get(st)
                    if other is not None and other not in assigned:
                        assigned[other] = len(classes)
                        cls.append(other)
            frontier = nxt
        classes.append(cls)
    return classes


def _partition_of_pair(datum, I) -> tuple[int, ...]:
    """Type A only: the partition attached to a Levi subset of the path graph."""
    n = datum.rank
    parts = []
    run = 0
    for i in range(n):
        if i in I:
            run += 1
        else:
            if run:
                parts.append(run + 1)
            run = 0
    if run:
        parts.append(run + 1)
    total = sum(parts)
    parts.extend([1] * (n + 1 - total))
    return tuple(sorted(parts, reverse=True))


def enumerate_orbits(datum) -> list[NilpotentOrbit]:
    """All nilpotent orbits of the type, via distinguished parabolic pairs."""
    n = datum.rank
    pairs = []
    for imask in range(1 << n):
        I = frozenset(i for i in range(n) if imask & (1 << i))
        sub = sorted(I)
        for jbits in range(1 << len(sub)):
            J = frozenset(sub[t] for t in range(len(sub)) if jbits & (1 << t))
            if _is_distinguished(datum, I, J):
                pairs.append((I, J))
    classes = _conjugacy_classes(datum, pairs)

    orbits = []
    for cls in classes:
        rep = min((tuple(sorted(I)), tuple(sorted(J))) for I, J in cls)
        dim = _orbit_dimension(datum, frozenset(rep[0]), frozenset(rep[1]))
        orbits.append((dim, rep))
    orbits.sort()

    named = []
    series = datum.cartan_type.series
    nroots = 2 * len(datum.positive_roots)
    count = len(orbits)
    for pos, (dim, rep) in enumerate(orbits):
        if series == "A":
            name = "[" + ",".join(str(p) for p in _partition_of_pair(datum, set(rep[0]))) + "]"
        elif datum.rank <= 2:
            ladder = {
                2: ["zero", "regular"],
                3: ["zero", "subregular", "regular"],
                4: ["zero", "minimal", "subregular", "regular"],
                5: ["zero", "minimal", "middle", "subregular", "regular"],
            }[count]
            name = ladder[pos]
        else:
            if dim == 0:
                name = "zero"
            elif dim == nroots:
                name = "regular"
            elif dim == nroots - 2:
                name = "subregular"
            else:
                name = f"bc:I={list(rep[0])};J={list(rep[1])}"
        named.append(NilpotentOrbit(bala_carter=rep, dimension=dim, name=name))
    return named


def closure_order(datum, orbits: list[NilpotentOrbit]):
    """Reflexive closure-order matrix leq[i][j] = (orbit i below orbit j).

    Available for rank <= 2 (dimensions force a chain) and for the A series
    (dominance order on partitions); other types raise.
    """
    n = len(orbits)
    if datum.cartan_type.series == "A":
        parts = [
            tuple(int(x) for x in o.name.strip("[]").split(",")) for o in orbits
        ]

        def dominated(a, b):
            sa = sb = 0
            for x, y in zip(_pad(a, len(b)), _pad(b, len(a))):
                sa += x
                sb += y
                if sa > sb:
                    return False
            return True

        return tuple(
            tuple(dominated(parts[i], parts[j]) for j in range(n)) for i in range(n)
        )
    if datum.rank <= 2:
        dims = [o.dimension for o in orbits]
        if len(set(dims)) != n:
            raise AssertionError("rank-2 orbit dimensions should be distinct")
        return tuple(
            tuple(dims[i] <= dims[j] for j in range(n)) for i in range(n)
        )
    raise UnsupportedTypeError(
        f"closure order unavailable for type {datum.cartan_type}"
    )


def _pad(t, n):
    return t + (0,) * max(0, n - len(t))


@dataclass
class OrbitTable:
    orbits: list[NilpotentOrbit]
    leq: "tuple[tuple[bool, ...], ...] | None"
    cell_map: dict[int, int]
    provenance: str = ""

    def orbit_of_cell(self, cell_id: int) -> "NilpotentOrbit | None":
        idx = self.cell_map.get(cell_id)
        return None if idx is None else self.orbits[idx]

    def closure_chain(self, idx: int) -> list[str]:
        if self.leq is None:
            return [self.orbits[idx].name]
        below = [
            (self.orbits[i].dimension, self.orbits[i].name)
            for i in range(len(self.orbits))
            if self.leq[i][idx]
        ]
        return [name for _dim, name in sorted(below)]


def build_orbit_table(aw: AffineWeyl, partition: CellPartition) -> OrbitTable:
    """Orbit list plus the cell-to-orbit dictionary for the partition.

    Universal entries are pinned in every type; in rank <= 2 the remaining
    trusted cells are matched along the preorder chain and the match is
    verified monotone against the closure order.
    """
    datum = aw.datum
    orbits = enumerate_orbits(datum)
    try:
        leq = closure_order(datum, orbits)
    except UnsupportedTypeError:
        leq = None

    trusted = partition.trusted_cells()
    trusted_set = set(trusted)
    cell_map: dict[int, int] = {}

    by_dim = {o.dimension: i for i, o in enumerate(orbits)}
    nroots = 2 * len(datum.positive_roots)
    regular_idx = by_dim[nroots]
    zero_idx = by_dim[0]
    subregular_idx = by_dim.get(nroots - 2)

    id_cell = partition.cell_index(aw.identity)
    if id_cell is not None and id_cell in trusted_set:
        cell_map[id_cell] = regular_idx

    # minimal trusted cell: reaches no other trusted cell
    minimal = [
        c for c in trusted if (partition.reach[c] & trusted_set) == {c}
    ]
    if len(minimal) == 1:
        cell_map[minimal[0]] = zero_idx

    # cell covered by the identity cell
    if id_cell in trusted_set and subregular_idx is not None:
        below_id = (partition.reach[id_cell] & trusted_set) - {id_cell}
        covers = [
            c
            for c in below_id
            if not any(
                c in partition.reach[c2] and c2 != c for c2 in below_id
            )
        ]
        if len(covers) == 1:
            cell_map[covers[0]] = subregular_idx

    if datum.rank <= 2:
        if len(trusted) != len(orbits):
            raise AssertionError(
                f"expected {len(orbits)} trusted cells, found {len(trusted)}"
            )
        remaining_cells = [c for c in trusted if c not in cell_map]
        remaining_orbits = sorted(
            (i for i in range(len(orbits)) if i not in cell_map.values()),
            key=lambda i: -orbits[i].dimension,
        )
        # order remaining cells from top (closest to identity) down
        remaining_cells.sort(
            key=lambda c: sum(
                1 for c2 in trusted if c in partition.reach[c2]
            )
        )
        if len(remaining_cells) != len(remaining_orbits):
            raise AssertionError("cell/orbit bookkeeping out of sync")
        for c, o in zip(remaining_cells, remaining_orbits):
            cell_map[c] = o
        # verify the chain match is consistent: cell preorder implies
        # closure order
        for a in trusted:
            for b in trusted:
                if b in partition.reach[a] and not leq[cell_map[b]][cell_map[a]]:
                    raise AssertionError(
                        "cell preorder inconsistent with orbit closure order"
                    )

    provenance = (
        f"universal entries plus rank-2 chain match (basis p={partition.basis_p})"
        if datum.rank <= 2
        else "universal entries only"
    )
    return OrbitTable(orbits=orbits, leq=leq, cell_map=cell_map, provenance=provenance)


def cell_to_orbit(
    cell_id: int, partition: CellPartition, table: OrbitTable
) -> NilpotentOrbit:
    """Orbit attached to a trusted cell; raises when unknown."""
    if cell_id < 0 or cell_id >= len(partition.cells):
        raise ValueError("no such cell")
    if not partition.trusted[cell_id]:
        raise UnsupportedTypeError("cell is untrusted; orbit unknown")
    orbit = table.orbit_of_cell(cell_id)
    if orbit is None:
        raise UnsupportedTypeError("no orbit entry for this cell in this type")
    return orbit


@dataclass
class PredictionRecord:
    cartan_type: str
    p: int
    mode: str
    lam: tuple[int, ...]
    w_word: str
    cell: "int | None"
    orbit: "NilpotentOrbit | None"
    closure_chain: list[str]
    status: str
    empty_variety: bool = False
    basis_p: int = 0

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "type": self.cartan_type,
            "p": self.p,
            "mode": self.mode,
            "lambda": list(self.lam),
            "w_reduced_word": self.w_word,
            "cell": self.cell,
            "orbit_name": None if self.orbit is None else self.orbit.name,
            "bala_carter": None
            if self.orbit is None
            else [list(self.orbit.bala_carter[0]), list(self.orbit.bala_carter[1])],
            "dimension": None if self.orbit is None else self.orbit.dimension,
            "closure_chain": self.closure_chain,
            "status": self.status,
            "empty_variety": self.empty_variety,
            "basis_p": self.basis_p,
        }


def _status_for(datum, p: int, orbit: "NilpotentOrbit | None") -> str:
    if orbit is None:
        return "unknown"
    if orbit.name in ("regular", "subregular", "zero"):
        return "theorem"
    ct = datum.cartan_type
    if ct.series == "A":
        # rank <= 2 type A orbits are all covered by the universal names;
        # larger ranks carry partition names and stay conjectural here
        nroots = 2 * len(datum.positive_roots)
        if orbit.dimension in (0, nroots, nroots - 2):
            return "theorem"
        return "conjectural"
    if str(ct) == "C2" and p > 5:
        return "theorem"
    if str(ct) == "G2" and p > 7 and orbit.name != "middle":
        return "theorem"
    return "conjectural"


def humphreys_predict(
    aw: AffineWeyl,
    partition: CellPartition,
    table: OrbitTable,
    lam,
    p: int,
    mode: str = "absolute",
) -> PredictionRecord:
    """Predicted support variety of the indecomposable tilting module at lam.

    The absolute mode returns the orbit closure attached to the cell of the
    alcove of lam; the relative mode additionally reports the empty variety
    off the double-coset representatives.  The status field records whether
    the predicted equality is proved or conjectural; the containment of the
    prediction in the actual variety is proved in all cases.
    """
    datum = aw.datum
    if mode not in ("absolute", "relative"):
        raise ValueError("mode must be absolute or relative")
    if p <= datum.coxeter_number:
        raise UnsupportedRegimeError("predictions need p > Coxeter number")
    lam = tuple(lam)
    if not datum.is_dominant(lam):
        raise ValueError("prediction needs a dominant weight")
    alc = aw.alcove_of(lam, p)
    w = alc.element
    w_word = aw.to_word(w)

    if mode == "relative":
        if aw.dot_action(w, (0,) * datum.rank, p) != lam:
            raise ValueError("relative mode needs lam = w ._p 0 exactly")
        if not aw.coset_minimality(w).in_fWf:
            return PredictionRecord(
                cartan_type=str(datum.cartan_type),
                p=p,
                mode=mode,
                lam=lam,
                w_word=w_word,
                cell=partition.cell_index(w),
                orbit=None,
                closure_chain=[],
                status="theorem",
                empty_variety=True,
                basis_p=partition.basis_p,
            )

    cell = partition.cell_index(w)
    orbit = None
    chain: list[str] = []
    if cell is not None and partition.trusted[cell]:
        idx = table.cell_map.get(cell)
        if idx is not None:
            orbit = table.orbits[idx]
            chain = table.closure_chain(idx)
    status = _status_for(datum, p, orbit)
    return PredictionRecord(
        cartan_type=str(datum.cartan_type),
        p=p,
        mode=mode,
        lam=lam,
        w_word=w_word,
        cell=cell,
        orbit=orbit,
        closure_chain=chain,
        status=status,
        empty_variety=False,
        basis_p=partition.basis_p,
    )
