"""Extended affine Weyl group arithmetic.

Elements are pairs ``w . t_lambda`` with ``w`` in the finite Weyl group and
``lambda`` in the weight lattice; this canonical form makes multiplication
exact and cheap, and reduced words are recovered on demand by greedy descent.
The length function is the Iwahori-Matsumoto hyperplane count

    l(w t_lambda) = sum_{a>0, w(a)>0} |<lambda, a^vee>|
                  + sum_{a>0, w(a)<0} |1 + <lambda, a^vee>|.

Generators are indexed ``0`` for the affine reflection ``s0`` and ``1..rank``
for the finite simple reflections, matching the word tokens ``s0, s1, ...``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .rootdata import FiniteWeylElement, RootDatum, Weight


class UnsupportedRegimeError(ValueError):
    """Raised when a computation is requested outside its valid regime."""


class AffineElement:
    """Element of the extended affine Weyl group, as (finite part, translation).

    Instances are immutable; equality and hashing use the canonical form, so
    elements are safe dictionary keys across any construction path.
    """

    __slots__ = ("fin", "trans", "length", "_hash")

    def __init__(self, fin: FiniteWeylElement, trans: Weight, length: int):
        self.fin = fin
        self.trans = trans
        self.length = length
        self._hash = hash((fin.mat, trans))

    def __eq__(self, other):
        return (
            isinstance(other, AffineElement)
            and self.fin.mat == other.fin.mat
            and self.trans == other.trans
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"AffineElement(trans={self.trans}, length={self.length})"


@dataclass(frozen=True)
class SimpleReflectionSet:
    finite_gens: tuple[AffineElement, ...]
    affine_gen: AffineElement

    @property
    def all(self) -> tuple[AffineElement, ...]:
        return (self.affine_gen,) + self.finite_gens


@dataclass(frozen=True)
class Alcove:
    """A dominant-chamber alcove: its minimal coset representative and the
    integer floor data (n_a per positive root, in datum root order)."""

    element: AffineElement
    floors: tuple[int, ...]


@dataclass(frozen=True)
class CosetMinimality:
    in_fW: bool
    in_fWf: bool


class AffineWeyl:
    """Arithmetic context for one affine Weyl group.

    All caches are append-only: concurrent readers always observe the same
    values, so instances may be shared across threads.
    """

    def __init__(self, datum: RootDatum):
        self.datum = datum
        d = datum
        self.identity = self.element(d.identity_finite, (0,) * d.rank)
        finite_gens = tuple(
            self.element(s, (0,) * d.rank) for s in d.simple_reflections
        )
        atilde = d.affine_root
        s0 = self.element(
            d.reflection(atilde), tuple(-c for c in atilde.fund)
        )
        if s0.length != 1:
            raise AssertionError("affine generator must have length 1")
        self.affine_gen = s0
        self.finite_gens = finite_gens
        self.gens: tuple[AffineElement, ...] = (s0,) + finite_gens
        self._word_cache: dict[AffineElement, tuple[int, ...]] = {}
        self._gen_prod: dict[tuple[AffineElement, int], AffineElement] = {}
        self._gen_prod_left: dict[tuple[int, AffineElement], AffineElement] = {}
        self.omega = self._build_omega()

    def simple_reflection_set(self) -> SimpleReflectionSet:
        return SimpleReflectionSet(self.finite_gens, self.affine_gen)

    # -- construction of elements ----------------------------------------

    def element(self, fin: FiniteWeylElement, trans) -> AffineElement:
        trans = tuple(trans)
        return AffineElement(fin, trans, self._length(fin, trans))

    def _length(self, fin: FiniteWeylElement, trans) -> int:
        d = self.datum
        total = 0
        for r in d.positive_roots:
            pair = sum(c * x for c, x in zip(r.coroot, trans))
            if fin.apply(r.fund) in d._posroot_fund:
                total += abs(pair)
            else:
                total += abs(1 + pair)
        return total

    def translation(self, lam) -> AffineElement:
        return self.element(self.datum.identity_finite, lam)

    def from_finite(self, fin: FiniteWeylElement) -> AffineElement:
        return self.element(fin, (0,) * self.datum.rank)

    # -- group operations -------------------------------------------------

    def mult(self, a: AffineElement, b: AffineElement) -> AffineElement:
        # (w t_lam)(w' t_mu) = w w' t_{w'^{-1}(lam) + mu}
        fin = a.fin * b.fin
        moved = b.fin.apply_inverse(a.trans)
        trans = tuple(x + y for x, y in zip(moved, b.trans))
        return self.element(fin, trans)

    def mult_gen(self, a: AffineElement, i: int) -> AffineElement:
        """Right multiplication by the i-th simple generator, cached."""
        key = (a, i)
        out = self._gen_prod.get(key)
        if out is None:
            out = self.mult(a, self.gens[i])
            self._gen_prod[key] = out
        return out

    def mult_gen_left(self, i: int, a: AffineElement) -> AffineElement:
        """Left multiplication by the i-th simple generator, cached."""
        key = (i, a)
        out = self._gen_prod_left.get(key)
        if out is None:
            out = self.mult(self.gens[i], a)
            self._gen_prod_left[key] = out
        return out

    def mult_all(self, *elems: AffineElement) -> AffineElement:
        out = self.identity
        for e in elems:
            out = self.mult(out, e)
        return out

    def inverse(self, a: AffineElement) -> AffineElement:
        fin = a.fin.inverse()
        trans = tuple(-c for c in a.fin.apply(a.trans))
        return self.element(fin, trans)

    def in_affine_weyl(self, a: AffineElement) -> bool:
        """True if the element lies in W (translation in the root lattice)."""
        return self.datum.in_root_lattice(a.trans)

    # -- descents, cosets, words -------------------------------------------

    def right_descents(self, a: AffineElement) -> list[int]:
        return [
            i for i in range(len(self.gens)) if self.mult_gen(a, i).length < a.length
        ]

    def left_descents(self, a: AffineElement) -> list[int]:
        return [
            i
            for i in range(len(self.gens))
            if self.mult_gen_left(i, a).length < a.length
        ]

    def min_coset_rep(self, a: AffineElement) -> tuple[AffineElement, FiniteWeylElement]:
        """Minimal representative of W_f a, with the finite prefix.

        Returns (rep, u) where a = u . rep and u is in W_f.
        """
        rep = a
        u = self.datum.identity_finite
        changed = True
        while changed:
            changed = False
            for i in range(len(self.finite_gens)):
                srep = self.mult_gen_left(i + 1, rep)
                if srep.length < rep.length:
                    rep = srep
                    u = u * self.datum.simple_reflections[i]
                    changed = True
                    break
        return rep, u

    def coset_minimality(self, a: AffineElement) -> CosetMinimality:
        nfin = len(self.finite_gens)
        in_fw = not any(
            self.mult_gen_left(i + 1, a).length < a.length for i in range(nfin)
        )
        in_fwf = in_fw and not any(
            self.mult_gen(a, i + 1).length < a.length for i in range(nfin)
        )
        return CosetMinimality(in_fw, in_fwf)

    def in_fW(self, a: AffineElement) -> bool:
        return self.coset_minimality(a).in_fW

    def w_lambda(self, lam) -> AffineElement:
        """The unique shortest element of the coset W_f t_lambda."""
        rep, _ = self.min_coset_rep(self.translation(lam))
        return rep

    def reduced_word(self, a: AffineElement) -> tuple[int, ...]:
        """Lexicographically smallest reduced word (generator indices).

        Only valid on W; elements with a nontrivial length-zero part keep
        that part out of the word (see :meth:`to_word`).
        """
        cached = self._word_cache.get(a)
        if cached is not None:
            return cached
        word = []
        cur = a
        while cur.length > 0:
            for i in range(len(self.gens)):
                nxt = self.mult_gen_left(i, cur)
                if nxt.length < cur.length:
                    word.append(i)
                    cur = nxt
                    break
            else:
                raise ValueError("element of positive length with no descent")
        if cur != self.identity:
            raise ValueError("element is not in W; use to_word for W_ext")
        out = tuple(word)
        self._word_cache[a] = out
        return out

    def sort_key(self, a: AffineElement):
        return (a.length, self.reduced_word(a))

    def from_word(self, word) -> AffineElement:
        out = self.identity
        for i in word:
            out = self.mult(out, self.gens[i])
        return out

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, a: AffineElement, b: AffineElement) -> bool:
        """Bruhat order on W via the one-sided descent recursion."""
        if not (self.in_affine_weyl(a) and self.in_affine_weyl(b)):
            raise ValueError("Bruhat order is only defined on W")
        y, w = a, b
        while True:
            if y.length > w.length:
                return False
            if y == w:
                return True
            if w == self.identity:
                return y == self.identity
            for i in range(len(self.gens)):
                ws = self.mult_gen(w, i)
                if ws.length < w.length:
                    ys = self.mult_gen(y, i)
                    if ys.length < y.length:
                        y = ys
                    w = ws
                    break

    # -- length-zero subgroup ------------------------------------------------

    def _build_omega(self) -> tuple[AffineElement, ...]:
        d = self.datum
        out = {self.identity}
        w0 = d.longest_element()
        for i in range(d.rank):
            if d.affine_root.coroot[i] != 1:
                continue
            others = [j for j in range(d.rank) if j != i]
            u = d.longest_element(others) * w0
            varpi = tuple(1 if k == i else 0 for k in range(d.rank))
            omega = self.mult(self.translation(varpi), self.from_finite(u))
            if omega.length != 0:
                raise AssertionError("constructed length-zero element has length > 0")
            out.add(omega)
        # close under products
        frontier = list(out)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(out):
                    for c in (self.mult(a, b), self.mult(b, a)):
                        if c not in out:
                            out.add(c)
                            nxt.append(c)
            frontier = nxt
        if len(out) != d.fundamental_group_order():
            raise AssertionError("length-zero subgroup has wrong order")
        return tuple(sorted(out, key=lambda a: (a != self.identity, a.trans)))

    def omega_part(self, a: AffineElement) -> tuple[int, AffineElement]:
        """Write a = omega . w with w in W; returns (omega index, w)."""
        for k, om in enumerate(self.omega):
            w = self.mult(self.inverse(om), a)
            if self.in_affine_weyl(w):
                return k, w
        raise ValueError("element has no length-zero decomposition")

    # -- serialization ---------------------------------------------------------

    def to_word(self, a: AffineElement) -> str:
        k, w = self.omega_part(a)
        tokens = [f"s{i}" for i in self.reduced_word(w)]
        if k:
            tokens.insert(0, f"omega:{k}")
        return ".".join(tokens) if tokens else "e"

    def from_word_str(self, s: str) -> AffineElement:
        s = s.strip()
        if s in ("", "e"):
            return self.identity
        out = self.identity
        for tok in s.split("."):
            tok = tok.strip()
            if tok.startswith("omega:"):
                out = self.mult(out, self.omega[int(tok[6:])])
            elif tok.startswith("s"):
                out = self.mult(out, self.gens[int(tok[1:])])
            else:
                raise ValueError(f"bad word token {tok!r}")
        return out

    def to_json_record(self, a: AffineElement) -> dict:
        # finite part as a word over the finite generators
        fin_word = []
        u = a.fin
        while self.datum.finite_length(u) > 0:
            for i, s in enumerate(self.datum.simple_reflections):
                if self.datum.finite_length(s * u) < self.datum.finite_length(u):
                    fin_word.append(i + 1)
                    u = s * u
                    break
        return {"finite_word": fin_word, "translation": list(a.trans)}

    def from_json_record(self, rec: dict) -> AffineElement:
        u = self.datum.identity_finite
        for i in rec["finite_word"]:
            u = u * self.datum.simple_reflections[i - 1]
        return self.mult(
            self.from_finite(u), self.translation(tuple(rec["translation"]))
        )

    # -- dot action and alcoves --------------------------------------------------

    def dot_action(self, a: AffineElement, mu, p: int) -> Weight:
        """p-dilated dot action: (w t_lam) ._p mu = w(mu + p lam + rho) - rho."""
        if p <= self.datum.coxeter_number:
            warnings.warn("dot action below the Coxeter number regime", stacklevel=2)
        d = self.datum
        shifted = tuple(
            m + p * t + r for m, t, r in zip(mu, a.trans, d.rho)
        )
        img = a.fin.apply(shifted)
        return tuple(x - r for x, r in zip(img, d.rho))

    def _dot_pair(self, a: AffineElement, pair, p: int):
        """Dot action on a perturbed point mu0 + eps*mu1 (eps infinitesimal)."""
        mu0, mu1 = pair
        d = self.datum
        shifted = tuple(m + p * t + r for m, t, r in zip(mu0, a.trans, d.rho))
        img0 = tuple(x - r for x, r in zip(a.fin.apply(shifted), d.rho))
        img1 = a.fin.apply(mu1)
        return (img0, img1)

    def alcove_of(self, lam, p: int) -> Alcove:
        """The alcove whose lower closure contains the dominant weight lam.

        Lower walls are included, upper walls excluded; ties are resolved by
        pushing lam infinitesimally in the rho direction, which keeps every
        comparison exact.
        """
        d = self.datum
        if p < d.coxeter_number:
            raise UnsupportedRegimeError(f"p={p} below the Coxeter number {d.coxeter_number}")
        if p == d.coxeter_number:
            warnings.warn("p equals the Coxeter number; alcove walk is degenerate", stacklevel=2)
        if not d.is_dominant(lam):
            raise ValueError("alcove_of expects a dominant weight")

        lam = tuple(lam)
        nu = (lam, d.rho)  # lam + eps * rho
        w = self.identity
        guard = 0
        while True:
            guard += 1
            if guard > 100000:
                raise AssertionError("alcove walk failed to terminate")
            moved = False
            for i in range(d.rank):
                c0 = nu[0][i] + 1
                c1 = nu[1][i]
                if (c0, c1) < (0, 0):
                    s = self.finite_gens[i]
                    nu = self._dot_pair(s, nu, p)
                    w = self.mult(w, s)
                    moved = True
                    break
            if moved:
                continue
            at = d.affine_root
            c0 = sum(c * (x + r) for c, x, r in zip(at.coroot, nu[0], d.rho))
            c1 = sum(c * x for c, x in zip(at.coroot, nu[1]))
            if (c0, c1) > (p, 0):
                nu = self._dot_pair(self.affine_gen, nu, p)
                w = self.mult(w, self.affine_gen)
                continue
            break

        floors = tuple(
            sum(c * (x + r) for c, x, r in zip(rt.coroot, lam, d.rho)) // p
            for rt in d.positive_roots
        )
        return Alcove(element=w, floors=floors)

    # -- enumeration ---------------------------------------------------------

    def enumerate_fW(self, bound: int) -> list[AffineElement]:
        """All elements of fW of length <= bound, sorted by (length, word)."""
        out = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                if w.length >= bound:
                    continue
                for i in range(len(self.gens)):
                    ws = self.mult_gen(w, i)
                    if ws.length == w.length + 1 and ws not in out:
                        if self.in_fW(ws):
                            out.add(ws)
                            nxt.append(ws)
            frontier = nxt
        return sorted(out, key=self.sort_key)

    def enumerate_W(self, bound: int) -> list[AffineElement]:
        """All elements of W of length <= bound, sorted by (length, word)."""
        out = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                if w.length >= bound:
                    continue
                for i in range(len(self.gens)):
                    ws = self.mult_gen(w, i)
                    if ws.length == w.length + 1 and ws not in out:
                        out.add(ws)
                        nxt.append(ws)
            frontier = nxt
        return sorted(out, key=self.sort_key)
