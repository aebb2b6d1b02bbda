import itertools
import random

import pytest

from heckecells.affine import UnsupportedRegimeError
from heckecells.cells import right_cells
from heckecells.tilting import (
    GroupAlgebraElt,
    MZeroElt,
    c_of_module,
    dot_orbit_element,
    fusion_multiplicity,
    in_fundamental_alcove,
    leq_T,
    mzero_act,
    summand_multiplicity,
    tensor_character,
    tensor_translate,
    tilting_class,
    wall_crossing,
    weyl_module_character,
)


def fusion_oracle(c, lam, mu, nu, p, length_cap=36):
    """Brute-force alternating sum over a long fW enumeration."""
    total = 0
    for w in c.aw.enumerate_fW(length_cap):
        eta = c.aw.dot_action(w, nu, p)
        if c.datum.is_dominant(eta):
            k = c.datum.tensor_multiplicity(lam, mu, eta)
            total += -k if w.length % 2 else k
    return total


def test_tilting_class_examples(ctx):
    c = ctx("A1")
    aw = c.aw
    assert tilting_class(c.provider, aw.identity) == MZeroElt({aw.identity: 1})
    s0 = aw.gens[0]
    assert tilting_class(c.provider, s0) == MZeroElt({s0: 1, aw.identity: 1})


def test_tilting_class_nonnegative(ctx):
    for t in ("A1", "C2"):
        c = ctx(t)
        for w in c.aw.enumerate_fW(8):
            assert all(v >= 0 for v in tilting_class(c.provider, w).terms.values())


def test_wall_crossing_examples(ctx):
    c = ctx("A1")
    aw = c.aw
    ne = tilting_class(c.provider, aw.identity)
    assert not wall_crossing(aw, ne, 1)  # finite wall kills the unit class
    assert wall_crossing(aw, ne, 0) == tilting_class(c.provider, aw.gens[0])
    assert not wall_crossing(aw, MZeroElt(), 0)


def test_c_of_module_examples(ctx):
    c = ctx("A1")
    aw = c.aw
    p = 5
    trivial = weyl_module_character(c.datum, (0,))
    assert c_of_module(aw, trivial, p) == GroupAlgebraElt({aw.identity: 1})
    # module with no weight on the orbit of zero
    off = {(4,): 1, (-4,): 1}
    assert c_of_module(aw, off, p) == GroupAlgebraElt()
    # Weyl module of highest weight 8: weights 0, 8, -2 meet the orbit
    cm = c_of_module(aw, weyl_module_character(c.datum, (8,)), p)
    s_alpha = aw.from_finite(c.datum.simple_reflections[0])
    assert cm == GroupAlgebraElt({aw.identity: 1, aw.gens[0]: 1, s_alpha: 1})


def test_dot_orbit_element(ctx):
    c = ctx("A1")
    aw = c.aw
    assert dot_orbit_element(aw, (8,), 5) == aw.gens[0]
    assert dot_orbit_element(aw, (10,), 5) == aw.translation((2,))
    assert dot_orbit_element(aw, (4,), 5) is None  # wall weight
    assert dot_orbit_element(aw, (6,), 5) is None


def test_tensor_translate_examples(ctx):
    c = ctx("A1")
    aw = c.aw
    p = 5
    ne = tilting_class(c.provider, aw.identity)
    trivial = weyl_module_character(c.datum, (0,))
    assert tensor_translate(aw, ne, trivial, p) == ne
    out = tensor_translate(aw, ne, weyl_module_character(c.datum, (8,)), p)
    assert out == MZeroElt({aw.gens[0]: 1})
    # bilinearity in the class
    x = MZeroElt({aw.gens[0]: 2, aw.identity: 3})
    m = weyl_module_character(c.datum, (2,))
    lhs = tensor_translate(aw, x, m, p)
    rhs = tensor_translate(aw, MZeroElt({aw.gens[0]: 2}), m, p) + tensor_translate(
        aw, MZeroElt({aw.identity: 3}), m, p
    )
    assert lhs == rhs


def test_translation_one_step_matches_character_oracle(ctx):
    # theta(pr0(M(w.0) (x) M)) computed by raw character arithmetic
    c = ctx("A1")
    aw = c.aw
    d = c.datum
    p = 5

    def oracle(w, m):
        # ch M(w.0) (x) M = sum_tau m_tau chi(w.0 + tau); a regular term in
        # the principal block contributes det(u) N(rep) where u.rep is the
        # coset factorization of the orbit element (the finite dot-reflection
        # sign); other terms vanish or sit in other blocks
        out = {}
        lam = aw.dot_action(w, (0,), p)
        for tau, mult in m.items():
            eta = (lam[0] + tau[0],)
            y = dot_orbit_element(aw, eta, p)
            if y is None:
                continue
            rep, u = aw.min_coset_rep(y)
            s2 = -1 if d.finite_length(u) % 2 else 1
            out[rep] = out.get(rep, 0) + mult * s2
        return MZeroElt(out)

    for w in aw.enumerate_fW(4):
        for hw in ((2,), (6,), (8,)):
            m = weyl_module_character(d, hw)
            assert tensor_translate(aw, MZeroElt({w: 1}), m, p) == oracle(w, m)


def test_iterated_translation_is_action_by_product(ctx):
    # acting twice equals acting by the group-algebra product; translating by
    # the tensor character in one step can differ (blocks re-enter), so only
    # the operator identity is asserted
    c = ctx("A1")
    aw = c.aw
    p = 5
    m1 = weyl_module_character(c.datum, (8,))
    m2 = weyl_module_character(c.datum, (2,))
    c1 = c_of_module(aw, m1, p)
    c2 = c_of_module(aw, m2, p)
    prod = GroupAlgebraElt()
    for g1, n1 in c1.terms.items():
        for g2, n2 in c2.terms.items():
            prod = prod + GroupAlgebraElt({aw.mult(g1, g2): n1 * n2})
    for w in aw.enumerate_fW(4):
        x = MZeroElt({w: 1})
        assert mzero_act(aw, mzero_act(aw, x, c1), c2) == mzero_act(aw, x, prod)


def test_one_step_two_step_counterexample(ctx):
    # fixed sample where the one-step translate by M (x) M' differs from the
    # two-step translate: the intermediate projection loses blocks that
    # return to the principal block
    c = ctx("A1")
    aw = c.aw
    p = 5
    m1 = weyl_module_character(c.datum, (8,))
    m2 = weyl_module_character(c.datum, (2,))
    m12 = tensor_character(m1, m2)
    x = tilting_class(c.provider, aw.gens[0])
    one = tensor_translate(aw, x, m12, p)
    two = tensor_translate(aw, tensor_translate(aw, x, m1, p), m2, p)
    assert one != two


# -- fusion ---------------------------------------------------------------------


def test_fusion_examples(ctx):
    c = ctx("A1")
    aw = c.aw
    assert fusion_multiplicity(aw, (1,), (1,), (0,), 5) == 1
    assert fusion_multiplicity(aw, (3,), (3,), (2,), 5) == 0
    assert fusion_multiplicity(aw, (3,), (3,), (0,), 5) == 1
    for lam in range(4):
        assert fusion_multiplicity(aw, (lam,), (0,), (lam,), 5) == 1


def test_fusion_rejects_wall_weights(ctx):
    c = ctx("A1")
    with pytest.raises(UnsupportedRegimeError):
        fusion_multiplicity(c.aw, (4,), (0,), (4,), 5)


def test_fusion_commutative_and_oracle_a1(ctx):
    c = ctx("A1")
    aw = c.aw
    p = 5
    alcove = [(k,) for k in range(p - 1)]
    for lam in alcove:
        for mu in alcove:
            for nu in alcove:
                val = fusion_multiplicity(aw, lam, mu, nu, p)
                assert val == fusion_multiplicity(aw, mu, lam, nu, p)
                assert val == fusion_oracle(c, lam, mu, nu, p)


def test_fusion_c2_spot_oracle(ctx):
    c = ctx("C2")
    aw = c.aw
    p = 7
    alcove = [
        lam
        for lam in itertools.product(range(p), repeat=2)
        if in_fundamental_alcove(c.datum, lam, p)
    ]
    rng = random.Random(2)
    for _ in range(5):
        lam, mu, nu = (rng.choice(alcove) for _ in range(3))
        assert fusion_multiplicity(aw, lam, mu, nu, p) == fusion_oracle(
            c, lam, mu, nu, p, length_cap=28
        )


def test_summand_multiplicity(ctx):
    c = ctx("A1")
    aw = c.aw
    p = 5
    assert summand_multiplicity(aw, tilting_class(c.provider, aw.identity), (0,), p) == 1
    assert summand_multiplicity(aw, tilting_class(c.provider, aw.gens[0]), (0,), p) == 0
    # non-principal fundamental-alcove weights see nothing in the class
    assert summand_multiplicity(aw, tilting_class(c.provider, aw.gens[0]), (1,), p) == 0


def test_alternating_sum_vanishes_off_fundamental_alcove(ctx):
    # the alternating sum of standard multiplicities of any non-unit tilting
    # class vanishes
    for t in ("A1", "C2"):
        c = ctx(t)
        aw = c.aw
        for w in aw.enumerate_fW(8):
            if w == aw.identity:
                continue
            total = sum(
                -v if x.length % 2 else v
                for x, v in tilting_class(c.provider, w).terms.items()
            )
            assert total == 0


def test_georgiev_mathieu_dimension_criterion(ctx):
    # weights in the fundamental alcove have Weyl dimension prime to p
    for t, ps in [("A1", (7, 11)), ("C2", (7, 11, 13))]:
        c = ctx(t)
        d = c.datum
        for p in ps:
            for lam in itertools.product(range(2 * p), repeat=d.rank):
                if in_fundamental_alcove(d, lam, p):
                    assert d.weyl_dimension(lam) % p != 0
                    cls = tilting_class(
                        c.provider, c.aw.alcove_of(lam, p).element
                    )
                    assert summand_multiplicity(c.aw, cls, (0,) * d.rank, p) == 1


def test_tilting_class_json_round_trip(ctx):
    import json

    from heckecells.tilting import tilting_class_from_json, tilting_class_json

    c = ctx("C2")
    aw = c.aw
    for w in aw.enumerate_fW(6):
        x = tilting_class(c.provider, w)
        obj = tilting_class_json(aw, x)
        assert obj["schema"] == 1
        text = json.dumps(obj, sort_keys=True)
        assert tilting_class_from_json(aw, json.loads(text)) == x


def test_leq_T_delegates(ctx):
    c = ctx("A1")
    aw = c.aw
    part = right_cells(aw, 12, 3, c.provider)
    assert leq_T(aw.gens[0], aw.identity, part) is True
    assert leq_T(aw.identity, aw.gens[0], part) is False
