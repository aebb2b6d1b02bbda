"""Exact root-system and finite-Weyl-group arithmetic for the simple types.

Weights live in the fundamental-weight basis, so a weight is just a tuple of
integers of length ``rank`` and dominance means "all coordinates >= 0".  Roots
are particular integer vectors in that basis (the columns of the Cartan
matrix), carried around together with their expansion over simple roots and
the expansion of their coroot over simple coroots.  Everything is exact:
plain ints, with :class:`fractions.Fraction` for the few linear solves.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

Weight = tuple[int, ...]

_EXCEPTIONAL_WEYL_ORDER = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}

_TYPE_RE = re.compile(r"^([A-G])(\d+)$")


@dataclass(frozen=True)
class CartanType:
    """An irreducible Cartan type, e.g. ``CartanType("C", 2)``.

    >>> CartanType.from_string("G2")
    CartanType(series='G', rank=2)
    """

    series: str
    rank: int

    def __post_init__(self):
        series, rank = self.series, self.rank
        ok = (
            (series == "A" and rank >= 1)
            or (series in ("B", "C") and rank >= 2)
            or (series == "D" and rank >= 4)
            or (series == "E" and rank in (6, 7, 8))
            or (series == "F" and rank == 4)
            or (series == "G" and rank == 2)
        )
        if not ok:
            raise ValueError(f"invalid rank {rank} for series {series}")

    @classmethod
    def from_string(cls, s: str) -> "CartanType":
        m = _TYPE_RE.match(s.strip())
        if not m:
            raise ValueError(f"cannot parse Cartan type {s!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries C[i][j] = <alpha_j, alpha_i^vee>.

    Bourbaki numbering; for C2 and G2 the first simple root is short.
    """
    n = ct.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        # C[i][j] = <alpha_j, alpha_i^vee>
        C[i][j] = cij
        C[j][i] = cji

    if ct.series in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if ct.series == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            bond(n - 2, n - 1, cij=-1, cji=-2)
        if ct.series == "C" and n >= 2:
            # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            bond(n - 2, n - 1, cij=-2, cji=-1)
    elif ct.series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif ct.series == "E":
        # chain 1-3-4-5-...-n with 2 attached to 4 (Bourbaki)
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif ct.series == "F":
        bond(0, 1)
        # alpha_2 long, alpha_3 short: <alpha_2, alpha_3^vee> = -2
        bond(1, 2, cij=-1, cji=-2)
        bond(2, 3)
    elif ct.series == "G":
        # alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3
        bond(0, 1, cij=-3, cji=-1)
    return tuple(tuple(row) for row in C)


def _finite_weyl_order(ct: CartanType) -> int:
    n = ct.rank
    if ct.series == "A":
        return factorial(n + 1)
    if ct.series in ("B", "C"):
        return 2**n * factorial(n)
    if ct.series == "D":
        return 2 ** (n - 1) * factorial(n)
    return _EXCEPTIONAL_WEYL_ORDER[(ct.series, n)]


@dataclass(frozen=True)
class Root:
    """A root with its three coordinate systems.

    fund    -- coordinates in the fundamental-weight basis
    simple  -- expansion over the simple roots
    coroot  -- expansion of the associated coroot over simple coroots
    """

    fund: Weight
    simple: tuple[int, ...]
    coroot: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.simple)

    @property
    def coheight(self) -> int:
        return sum(self.coroot)


class FiniteWeylElement:
    """Element of the finite Weyl group as an integer matrix on weight coords.

    The inverse matrix is carried along so that products never need a linear
    solve.  Instances are immutable and hash on the matrix alone.
    """

    __slots__ = ("mat", "inv", "_hash")

    def __init__(self, mat, inv):
        self.mat = mat
        self.inv = inv
        self._hash = hash(mat)

    def __eq__(self, other):
        return isinstance(other, FiniteWeylElement) and self.mat == other.mat

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        return FiniteWeylElement(
            _mat_mul(self.mat, other.mat), _mat_mul(other.inv, self.inv)
        )

    def inverse(self) -> "FiniteWeylElement":
        return FiniteWeylElement(self.inv, self.mat)

    def apply(self, weight) -> Weight:
        return tuple(
            sum(row[j] * weight[j] for j in range(len(weight))) for row in self.mat
        )

    def apply_inverse(self, weight) -> Weight:
        return tuple(
            sum(row[j] * weight[j] for j in range(len(weight))) for row in self.inv
        )

    def __repr__(self):
        return f"FiniteWeylElement({self.mat})"


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


class RootDatum:
    """Root system data for one irreducible simply-connected type.

    All member structures are built once and never mutated afterwards; the
    internal memo caches only grow, so concurrent readers always see
    identical results.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.cartan = cartan_matrix(cartan_type)
        self.rho: Weight = (1,) * self.rank
        self.finite_weyl_order = _finite_weyl_order(cartan_type)

        self._build_roots()
        self._build_symmetrizer()
        self._build_inverse_cartan()
        self._build_reflections()
        self._freudenthal_cache: dict[Weight, dict[Weight, int]] = {}
        self._dim_cache: dict[Weight, int] = {}
        self._validate()

    # -- construction -------------------------------------------------

    def _build_roots(self):
        n = self.rank
        C = self.cartan
        simples = []
        for j in range(n):
            fund = tuple(C[i][j] for i in range(n))
            simples.append(
                Root(
                    fund=fund,
                    simple=tuple(1 if k == j else 0 for k in range(n)),
                    coroot=tuple(1 if k == j else 0 for k in range(n)),
                )
            )
        self.simple_roots: list[Root] = simples

        # Orbit of the simple roots under the simple reflections, tracking
        # simple-root and simple-coroot coordinates simultaneously.
        seen = {}
        frontier = list(simples)
        for r in simples:
            seen[r.fund] = r
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(n):
                    pair_i = r.fund[i]  # <beta, alpha_i^vee>
                    fund = tuple(
                        r.fund[k] - pair_i * C[k][i] for k in range(n)
                    )
                    if fund in seen:
                        continue
                    simple = tuple(
                        r.simple[k] - (pair_i if k == i else 0) for k in range(n)
                    )
                    co_pair = sum(r.coroot[k] * C[k][i] for k in range(n))
                    coroot = tuple(
                        r.coroot[k] - (co_pair if k == i else 0) for k in range(n)
                    )
                    new = Root(fund=fund, simple=simple, coroot=coroot)
                    seen[fund] = new
                    nxt.append(new)
            frontier = nxt

        positives = [r for r in seen.values() if all(c >= 0 for c in r.simple)]
        positives.sort(key=lambda r: (r.height, r.simple))
        self.positive_roots: list[Root] = positives
        self._posroot_fund = {r.fund: r for r in positives}
        self._negroot_fund = {
            tuple(-c for c in r.fund): r for r in positives
        }

        self.highest_root = max(positives, key=lambda r: r.height)
        # the root whose coroot is the highest coroot (affine wall data)
        self.affine_root = max(positives, key=lambda r: r.coheight)
        self.coxeter_number = 1 + self.highest_root.height
        if self.affine_root.coheight != self.coxeter_number - 1:
            raise AssertionError("coroot heights inconsistent with Coxeter number")

    def _build_symmetrizer(self):
        # minimal positive integers d with d_i * C[i][j] = d_j * C[j][i]
        n = self.rank
        C = self.cartan
        d = [Fraction(0)] * n
        d[0] = Fraction(1)
        todo = [0]
        while todo:
            i = todo.pop()
            for j in range(n):
                if i != j and C[i][j] != 0 and d[j] == 0:
                    d[j] = d[i] * C[i][j] / C[j][i]
                    todo.append(j)
        denom = 1
        for x in d:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        ints = [int(x * denom) for x in d]
        g = 0
        for x in ints:
            g = _gcd(g, x)
        self.symmetrizer: tuple[int, ...] = tuple(x // g for x in ints)

    def _build_inverse_cartan(self):
        # inv_cartan[i][j]: root coordinates of the fundamental weights,
        # i.e. varpi_j = sum_i inv_cartan[i][j] alpha_i.
        n = self.rank
        C = [[Fraction(self.cartan[i][j]) for j in range(n)] for i in range(n)]
        inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if C[r][col] != 0)
            C[col], C[piv] = C[piv], C[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            f = C[col][col]
            C[col] = [x / f for x in C[col]]
            inv[col] = [x / f for x in inv[col]]
            for r in range(n):
                if r != col and C[r][col] != 0:
                    f = C[r][col]
                    C[r] = [a - f * b for a, b in zip(C[r], C[col])]
                    inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
        # alpha_j = sum_i cartan[i][j] varpi_i, so a weight x has root
        # coordinates inv(cartan) @ x.
        self._inv_cartan = tuple(tuple(inv[i][j] for j in range(n)) for i in range(n))

    def _build_reflections(self):
        n = self.rank
        C = self.cartan
        self.identity_finite = FiniteWeylElement(
            _identity_matrix(n), _identity_matrix(n)
        )
        gens = []
        for i in range(n):
            mat = tuple(
                tuple(
                    (1 if k == m else 0) - (C[k][i] if m == i else 0)
                    for m in range(n)
                )
                for k in range(n)
            )
            gens.append(FiniteWeylElement(mat, mat))
        self.simple_reflections: list[FiniteWeylElement] = gens
        self._finite_length_cache: dict[FiniteWeylElement, int] = {
            self.identity_finite: 0
        }

    def _validate(self):
        for i in range(self.rank):
            if self.pairing(self.rho, i) != 1:
                raise AssertionError("rho pairing failed")
        if 2 * len(self.positive_roots) + self.rank != self.weyl_dimension(
            self.highest_root.fund
        ):
            raise AssertionError("positive-root count vs adjoint dimension")
        neg = {tuple(-c for c in r.fund) for r in self.positive_roots}
        pos = set(self._posroot_fund)
        for w in self.simple_reflections:
            for r in self.positive_roots:
                img = w.apply(r.fund)
                if img not in pos and img not in neg:
                    raise AssertionError("roots not closed under reflections")

    # -- basic linear data ---------------------------------------------

    def pairing(self, weight, coroot) -> int:
        """<weight, coroot> where coroot is a simple index or a Root."""
        if isinstance(coroot, int):
            return weight[coroot]
        return sum(c * x for c, x in zip(coroot.coroot, weight))

    def root_coords(self, weight) -> tuple[Fraction, ...]:
        """Expansion of a weight over the simple roots (rational in general)."""
        n = self.rank
        return tuple(
            sum(self._inv_cartan[i][j] * weight[j] for j in range(n))
            for i in range(n)
        )

    def in_root_lattice(self, weight) -> bool:
        return all(c.denominator == 1 for c in self.root_coords(weight))

    def is_dominant(self, weight) -> bool:
        return all(c >= 0 for c in weight)

    def fundamental_group_order(self) -> int:
        det = _int_det(self.cartan)
        return abs(det)

    def inner(self, x, y) -> Fraction:
        """W-invariant inner product with (alpha_i, alpha_i)/2 = symmetrizer d_i."""
        rc = self.root_coords(y)
        return sum(
            (rc[i] * x[i] * self.symmetrizer[i] for i in range(self.rank)),
            start=Fraction(0),
        )

    def root_half_norm(self, root: Root) -> int:
        """(beta, beta)/2 in the symmetrizer normalization."""
        for i in range(self.rank):
            if root.coroot[i] != 0:
                val = Fraction(root.simple[i] * self.symmetrizer[i], root.coroot[i])
                assert val.denominator == 1
                return int(val)
        raise AssertionError("zero root")

    # -- finite Weyl group ---------------------------------------------

    def finite_length(self, w: FiniteWeylElement) -> int:
        out = self._finite_length_cache.get(w)
        if out is None:
            out = sum(
                1
                for r in self.positive_roots
                if w.apply(r.fund) in self._negroot_fund
            )
            self._finite_length_cache[w] = out
        return out

    def reflection(self, root: Root) -> FiniteWeylElement:
        n = self.rank
        mat = tuple(
            tuple(
                (1 if k == m else 0) - root.fund[k] * root.coroot[m]
                for m in range(n)
            )
            for k in range(n)
        )
        return FiniteWeylElement(mat, mat)

    def dominant_representative(self, weight) -> tuple[Weight, int]:
        """The dominant W_f-conjugate of a weight and the sign (-1)^length.

        Returns ``(dominant, sign)``; ``sign`` is the determinant of the
        element used to move the weight into the dominant chamber.
        """
        w = tuple(weight)
        sign = 1
        while True:
            for i in range(self.rank):
                if w[i] < 0:
                    pair = w[i]
                    w = tuple(
                        w[k] - pair * self.cartan[k][i] for k in range(self.rank)
                    )
                    sign = -sign
                    break
            else:
                return w, sign

    def weyl_orbit(self, weight) -> set[Weight]:
        start = tuple(weight)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(self.rank):
                    pair = x[i]
                    y = tuple(
                        x[k] - pair * self.cartan[k][i] for k in range(self.rank)
                    )
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generate_finite_weyl(self) -> list[FiniteWeylElement]:
        """All elements of W_f (use with care in high rank)."""
        seen = {self.identity_finite}
        frontier = [self.identity_finite]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.simple_reflections:
                    ws = w * s
                    if ws not in seen:
                        seen.add(ws)
                        nxt.append(ws)
            frontier = nxt
        return list(seen)

    def longest_element(self, subset: "list[int] | None" = None) -> FiniteWeylElement:
        """Longest element of the parabolic generated by the given indices."""
        gens = (
            self.simple_reflections
            if subset is None
            else [self.simple_reflections[i] for i in subset]
        )
        w = self.identity_finite
        lw = 0
        while True:
            for s in gens:
                ws = w * s
                lws = self.finite_length(ws)
                if lws > lw:
                    w, lw = ws, lws
                    break
            else:
                return w

    # -- representation-theoretic quantities -----------------------------

    def weyl_dimension(self, lam) -> int:
        """Weyl dimension formula, exact."""
        lam = tuple(lam)
        if not self.is_dominant(lam):
            raise ValueError("weight not dominant")
        out = self._dim_cache.get(lam)
        if out is not None:
            return out
        num = Fraction(1)
        lr = tuple(a + b for a, b in zip(lam, self.rho))
        for r in self.positive_roots:
            num *= Fraction(self.pairing(lr, r), self.pairing(self.rho, r))
        assert num.denominator == 1
        self._dim_cache[lam] = int(num)
        return int(num)

    def dominant_weight_multiplicities(self, lam) -> dict[Weight, int]:
        """Multiplicities of the dominant weights of the Weyl module V(lam).

        Freudenthal recursion, memoized per highest weight.
        """
        lam = tuple(lam)
        if not self.is_dominant(lam):
            raise ValueError("weight not dominant")
        cached = self._freudenthal_cache.get(lam)
        if cached is not None:
            return cached

        # Dominant mu with lam - mu a nonnegative integer root combination;
        # the combination coefficients are bounded by the root coordinates
        # of lam (dominant weights have nonnegative root coordinates).
        lam_rc = self.root_coords(lam)
        bounds = [int(c) for c in lam_rc]
        candidates = []

        def descend(i, acc):
            if i == self.rank:
                mu = tuple(
                    lam[k]
                    - sum(acc[m] * self.cartan[k][m] for m in range(self.rank))
                    for k in range(self.rank)
                )
                if all(c >= 0 for c in mu):
                    candidates.append((sum(acc), mu))
                return
            for c in range(bounds[i] + 1):
                descend(i + 1, acc + [c])

        descend(0, [])
        candidates.sort()

        norm_lam = self.inner(lam, lam)
        rho = self.rho
        lam_rho = tuple(a + b for a, b in zip(lam, rho))
        norm_lam_rho = self.inner(lam_rho, lam_rho)
        mults: dict[Weight, int] = {lam: 1}
        for _depth, mu in candidates:
            if mu in mults:
                continue
            total = Fraction(0)
            for r in self.positive_roots:
                k = 1
                prev_norm = None
                while True:
                    nu = tuple(mu[j] + k * r.fund[j] for j in range(self.rank))
                    norm_nu = self.inner(nu, nu)
                    if norm_nu > norm_lam and (
                        prev_norm is not None and norm_nu >= prev_norm
                    ):
                        break
                    dom, _ = self.dominant_representative(nu)
                    m = mults.get(dom, 0)
                    if m:
                        total += m * self.inner(nu, r.fund)
                    prev_norm = norm_nu
                    k += 1
            mur = tuple(a + b for a, b in zip(mu, rho))
            denom = norm_lam_rho - self.inner(mur, mur)
            assert denom > 0
            val = 2 * total / denom
            assert val.denominator == 1
            if val:
                mults[mu] = int(val)
        self._freudenthal_cache[lam] = mults
        return mults

    def _below(self, lam, mu) -> bool:
        diff = self.root_coords(tuple(a - b for a, b in zip(lam, mu)))
        return all(c.denominator == 1 and c >= 0 for c in diff)

    def weight_multiplicity(self, lam, mu) -> int:
        """Multiplicity of mu in the Weyl module of highest weight lam."""
        dom, _ = self.dominant_representative(tuple(mu))
        return self.dominant_weight_multiplicities(lam).get(dom, 0)

    def all_weights(self, lam) -> dict[Weight, int]:
        """Full weight multiset of the Weyl module V(lam)."""
        out: dict[Weight, int] = {}
        for mu, m in self.dominant_weight_multiplicities(lam).items():
            for nu in self.weyl_orbit(mu):
                out[nu] = m
        return out

    def tensor_multiplicity(self, lam, mu, nu) -> int:
        """Multiplicity of V(nu) in V(lam) (x) V(mu), characteristic 0.

        Brauer-Klimyk: sum the dot-reflected shifts lam + tau over the
        weights tau of V(mu).
        """
        lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
        for x in (lam, mu, nu):
            if not self.is_dominant(x):
                raise ValueError("weights must be dominant")
        total = 0
        for tau, m in self.all_weights(mu).items():
            shifted = tuple(
                lam[i] + tau[i] + self.rho[i] for i in range(self.rank)
            )
            if any(c == 0 for c in shifted):
                continue
            dom, sign = self.dominant_representative(shifted)
            if any(c == 0 for c in dom):
                continue
            if tuple(a - b for a, b in zip(dom, self.rho)) == nu:
                total += sign * m
        return total


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _int_det(mat) -> int:
    n = len(mat)
    m = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        f = m[col][col]
        m[col] = [x / f for x in m[col]]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                g = m[r][col]
                m[r] = [a - g * b for a, b in zip(m[r], m[col])]
    assert det.denominator == 1
    return int(det)


def build_root_datum(t: "CartanType | str") -> RootDatum:
    """Build the root datum for a Cartan type given as object or string."""
    if isinstance(t, str):
        t = CartanType.from_string(t)
    return RootDatum(t)
