import pytest

from heckecells.cells import right_cells
from heckecells.orbits import (
    UnsupportedTypeError,
    build_orbit_table,
    cell_to_orbit,
    closure_order,
    enumerate_orbits,
    humphreys_predict,
)
from heckecells.rootdata import build_root_datum


def partitions_of(n):
    def gen(n, mx):
        if n == 0:
            return 1
        return sum(gen(n - k, k) for k in range(min(n, mx), 0, -1))

    return gen(n, n)


def test_orbit_counts(ctx):
    assert len(enumerate_orbits(ctx("A1").datum)) == 2
    assert len(enumerate_orbits(ctx("C2").datum)) == 4
    assert len(enumerate_orbits(ctx("G2").datum)) == 5


def test_type_a_counts_match_partitions(ctx):
    for n in range(2, 7):
        d = build_root_datum(f"A{n - 1}")
        orbs = enumerate_orbits(d)
        assert len(orbs) == partitions_of(n)
        names = {o.name for o in orbs}
        assert len(names) == len(orbs)


def test_universal_orbits(ctx):
    for t in ("C2", "G2", "B3"):
        d = ctx(t).datum if t != "B3" else build_root_datum("B3")
        orbs = enumerate_orbits(d)
        dims = {o.dimension for o in orbs}
        nroots = 2 * len(d.positive_roots)
        assert 0 in dims and nroots in dims and nroots - 2 in dims
        reg = next(o for o in orbs if o.dimension == nroots)
        assert set(reg.bala_carter[0]) == set(range(d.rank))
        assert reg.bala_carter[1] == ()
        zero = next(o for o in orbs if o.dimension == 0)
        assert zero.bala_carter == ((), ())


def test_g2_orbit_ladder(ctx):
    orbs = enumerate_orbits(ctx("G2").datum)
    assert [(o.name, o.dimension) for o in orbs] == [
        ("zero", 0),
        ("minimal", 6),
        ("middle", 8),
        ("subregular", 10),
        ("regular", 12),
    ]


def test_c2_orbit_ladder(ctx):
    orbs = enumerate_orbits(ctx("C2").datum)
    assert [(o.name, o.dimension) for o in orbs] == [
        ("zero", 0),
        ("minimal", 4),
        ("subregular", 6),
        ("regular", 8),
    ]


def test_closure_order_chains(ctx):
    for t in ("C2", "G2"):
        d = ctx(t).datum
        orbs = enumerate_orbits(d)
        leq = closure_order(d, orbs)
        n = len(orbs)
        for i in range(n):
            for j in range(n):
                assert leq[i][j] == (orbs[i].dimension <= orbs[j].dimension)


def dominance_oracle(a, b):
    pa = list(a) + [0] * (len(b) - len(a))
    pb = list(b) + [0] * (len(a) - len(b))
    sa = sb = 0
    for x, y in zip(pa, pb):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def test_a3_closure_is_dominance(ctx):
    d = build_root_datum("A3")
    orbs = enumerate_orbits(d)
    leq = closure_order(d, orbs)
    parts = [tuple(int(x) for x in o.name.strip("[]").split(",")) for o in orbs]
    for i in range(len(orbs)):
        for j in range(len(orbs)):
            assert leq[i][j] == dominance_oracle(parts[i], parts[j])


def test_closure_order_unavailable(ctx):
    d = build_root_datum("B3")
    with pytest.raises(UnsupportedTypeError):
        closure_order(d, enumerate_orbits(d))


# -- cell dictionary and predictions ----------------------------------------------


def _table(c, L, m):
    part = right_cells(c.aw, L, m, c.provider)
    return part, build_orbit_table(c.aw, part)


def test_cell_map_a1(ctx):
    # type A orbits carry partition names: [2] is regular, [1,1] is zero
    c = ctx("A1")
    part, table = _table(c, 12, 3)
    id_cell = part.cell_index(c.aw.identity)
    reg = cell_to_orbit(id_cell, part, table)
    assert reg.name == "[2]" and reg.dimension == 2
    other = part.cell_index(c.aw.gens[0])
    zero = cell_to_orbit(other, part, table)
    assert zero.name == "[1,1]" and zero.dimension == 0


def test_cell_map_untrusted_raises(ctx):
    c = ctx("A1")
    part, table = _table(c, 12, 3)
    bad = [i for i, t in enumerate(part.trusted) if not t][0]
    with pytest.raises(UnsupportedTypeError):
        cell_to_orbit(bad, part, table)


def test_monotone_cell_map_c2_g2(ctx):
    # cell preorder implies orbit closure order on trusted cells
    for t, (L, m) in [("C2", (20, 6)), ("G2", (24, 8))]:
        c = ctx(t)
        part, table = _table(c, L, m)
        trusted = part.trusted_cells()
        assert len(trusted) == len(table.orbits)
        for a in trusted:
            for b in trusted:
                if b in part.reach[a]:
                    ia, ib = table.cell_map[a], table.cell_map[b]
                    assert table.leq[ib][ia]


def test_g2_middle_cell_double_coset_chain(ctx):
    # the double-coset minima of the middle cell form a single chain with
    # constant step z = s2 s1 s2 s1 s0; this pins the middle/minimal
    # assignment independently of the preorder match
    c = ctx("G2")
    aw = c.aw
    part, table = _table(c, 24, 8)
    mid = next(
        cid for cid, i in table.cell_map.items() if table.orbits[i].name == "middle"
    )
    fwf = sorted(
        (w for w in part.cells[mid] if aw.coset_minimality(w).in_fWf),
        key=aw.sort_key,
    )
    assert len(fwf) >= 2
    z = aw.from_word_str("s2.s1.s2.s1.s0")
    for a, b in zip(fwf, fwf[1:]):
        assert aw.mult(aw.inverse(a), b) == z
    # the minimal cell's minima do not follow that chain
    mn = next(
        cid for cid, i in table.cell_map.items() if table.orbits[i].name == "minimal"
    )
    fwf_min = sorted(
        (w for w in part.cells[mn] if aw.coset_minimality(w).in_fWf),
        key=aw.sort_key,
    )
    assert any(
        aw.mult(aw.inverse(a), b) != z for a, b in zip(fwf_min, fwf_min[1:])
    )


def test_predictions_universal_endpoints(ctx):
    for t, p in [("C2", 7), ("G2", 11)]:
        c = ctx(t)
        part, table = _table(c, *( (20, 6) if t == "C2" else (24, 8) ))
        rec = humphreys_predict(c.aw, part, table, (0, 0), p)
        assert rec.orbit.name == "regular"
        assert rec.status == "theorem"
        assert rec.closure_chain[-1] == "regular"
        lam = tuple(p - 1 for _ in range(2))
        rec = humphreys_predict(c.aw, part, table, lam, p)
        assert rec.orbit.name == "zero"
        assert rec.closure_chain == ["zero"]


def test_zero_cell_is_deep_corner(ctx):
    # independent validation of the zero pin: the alcoves of the minimal
    # cell are exactly those whose weights lie in (p-1)rho + dominant cone
    for t, (L, m, p) in [("C2", (20, 6, 7)), ("G2", (24, 8, 11))]:
        c = ctx(t)
        aw = c.aw
        part, table = _table(c, L, m)
        zero_cells = [
            cid
            for cid, i in table.cell_map.items()
            if table.orbits[i].dimension == 0
        ]
        assert len(zero_cells) == 1
        c0 = zero_cells[0]
        corner = tuple(p - 1 for _ in range(2))
        for w in part.cells[c0]:
            lam = aw.dot_action(w, (0, 0), p)
            assert all(a >= b for a, b in zip(lam, corner))
        # and conversely: corner weights land in c0 while others do not
        for shift in [(0, 0), (1, 0), (0, 1), (3, 2)]:
            lam = tuple(a + b for a, b in zip(corner, shift))
            assert part.cell_index(aw.alcove_of(lam, p).element) == c0
        assert part.cell_index(aw.alcove_of((p - 2, p - 1), p).element) != c0


def test_predictions_constant_on_cells(ctx):
    c = ctx("C2")
    p = 7
    part, table = _table(c, 20, 6)
    for i in part.trusted_cells():
        names = set()
        for w in sorted(part.cells[i], key=c.aw.sort_key)[:4]:
            lam = c.aw.dot_action(w, (0, 0), p)
            rec = humphreys_predict(c.aw, part, table, lam, p)
            names.add(rec.orbit.name if rec.orbit else None)
        assert len(names) == 1


def test_relative_mode(ctx):
    c = ctx("C2")
    p = 7
    part, table = _table(c, 20, 6)
    aw = c.aw
    # s0 is in fWf: genuine orbit prediction
    lam = aw.dot_action(aw.gens[0], (0, 0), p)
    rec = humphreys_predict(aw, part, table, lam, p, mode="relative")
    assert not rec.empty_variety and rec.orbit is not None
    # an fW element outside fWf: empty variety
    w = next(
        w
        for w in aw.enumerate_fW(6)
        if aw.in_fW(w) and not aw.coset_minimality(w).in_fWf
    )
    lam = aw.dot_action(w, (0, 0), p)
    rec = humphreys_predict(aw, part, table, lam, p, mode="relative")
    assert rec.empty_variety and rec.orbit is None and rec.status == "theorem"
    # relative mode requires lam = w . 0 exactly
    with pytest.raises(ValueError):
        humphreys_predict(aw, part, table, (1, 0), p, mode="relative")


def test_statuses(ctx):
    g2 = ctx("G2")
    part, table = _table(g2, 24, 8)
    mid_cell = next(
        cid for cid, i in table.cell_map.items() if table.orbits[i].name == "middle"
    )
    w = sorted(part.cells[mid_cell], key=g2.aw.sort_key)[0]
    lam = g2.aw.dot_action(w, (0, 0), 11)
    rec = humphreys_predict(g2.aw, part, table, lam, 11)
    assert rec.orbit.name == "middle" and rec.status == "conjectural"
    min_cell = next(
        cid for cid, i in table.cell_map.items() if table.orbits[i].name == "minimal"
    )
    w = sorted(part.cells[min_cell], key=g2.aw.sort_key)[0]
    lam = g2.aw.dot_action(w, (0, 0), 11)
    rec = humphreys_predict(g2.aw, part, table, lam, 11)
    assert rec.orbit.name == "minimal" and rec.status == "theorem"

    c2 = ctx("C2")
    part, table = _table(c2, 20, 6)
    min_cell = next(
        cid for cid, i in table.cell_map.items() if table.orbits[i].name == "minimal"
    )
    w = sorted(part.cells[min_cell], key=c2.aw.sort_key)[0]
    lam = c2.aw.dot_action(w, (0, 0), 7)
    rec = humphreys_predict(c2.aw, part, table, lam, 7)
    assert rec.status == "theorem"  # C2 proved for p > 5


def test_prediction_json_shape(ctx):
    c = ctx("C2")
    part, table = _table(c, 20, 6)
    rec = humphreys_predict(c.aw, part, table, (1, 1), 7)
    obj = rec.to_json()
    assert obj["schema"] == 1
    assert set(obj) >= {
        "type",
        "p",
        "lambda",
        "w_reduced_word",
        "cell",
        "orbit_name",
        "bala_carter",
        "dimension",
        "closure_chain",
        "status",
    }


def test_universal_entries_only_in_higher_rank(ctx):
    # A3: identity cell still maps to the regular orbit; other cells unknown
    c = ctx("A3")
    part = right_cells(c.aw, 8, 2, c.provider)
    table = build_orbit_table(c.aw, part)
    id_cell = part.cell_index(c.aw.identity)
    assert table.orbit_of_cell(id_cell).name == "[4]"
    rec = humphreys_predict(c.aw, part, table, (0, 0, 0), 7)
    assert rec.orbit.name == "[4]" and rec.status == "theorem"
