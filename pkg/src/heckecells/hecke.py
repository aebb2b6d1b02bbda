"""Affine Hecke algebra over Z[v, v^-1] and its antispherical module.

The algebra has standard basis {H_w} with H_s^2 = 1 + (v^-1 - v) H_s and
length-additive products.  The canonical basis elements are the unique
bar-self-dual elements that are unitriangular with off-diagonal coefficients
in v Z[v]; they are computed by the usual descent recursion with mu-term
corrections.  The antispherical module is sgn tensored over the finite Hecke
algebra, with standard basis N_w indexed by the minimal coset representatives
fW; finite simple reflections act on the sign line by -v.

Positive-characteristic canonical bases are never computed here: they are
ingested from :class:`CanonicalBasisTable` files and only validated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .affine import AffineElement, AffineWeyl
from .laurent import ONE, V, VINV, LaurentPoly


class BasisTableError(ValueError):
    """Malformed or inconsistent canonical-basis table data."""


@dataclass
class HeckeElt:
    """Finitely supported Z[v,v^-1]-combination of standard basis elements H_w."""

    terms: dict[AffineElement, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if c}

    def coeff(self, w: AffineElement) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly())

    def support(self):
        return self.terms.keys()

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        out = dict(self.terms)
        for w, c in other.terms.items():
            n = out.get(w)
            out[w] = c if n is None else n + c
        return HeckeElt(out)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        out = dict(self.terms)
        for w, c in other.terms.items():
            n = out.get(w)
            out[w] = -c if n is None else n - c
        return HeckeElt(out)

    def scale(self, p: LaurentPoly) -> "HeckeElt":
        return HeckeElt({w: c * p for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, HeckeElt) and self.terms == other.terms


@dataclass
class AsphElt:
    """Element of the antispherical module; support lies in fW."""

    terms: dict[AffineElement, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if c}

    def coeff(self, w: AffineElement) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly())

    def support(self):
        return self.terms.keys()

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "AsphElt") -> "AsphElt":
        out = dict(self.terms)
        for w, c in other.terms.items():
            n = out.get(w)
            out[w] = c if n is None else n + c
        return AsphElt(out)

    def __sub__(self, other: "AsphElt") -> "AsphElt":
        out = dict(self.terms)
        for w, c in other.terms.items():
            n = out.get(w)
            out[w] = -c if n is None else n - c
        return AsphElt(out)

    def scale(self, p: LaurentPoly) -> "AsphElt":
        return AsphElt({w: c * p for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, AsphElt) and self.terms == other.terms


def specialize_v1(x: "HeckeElt | AsphElt") -> dict[AffineElement, int]:
    """Specialize v to 1; returns the integer coefficient map."""
    out = {}
    for w, c in x.terms.items():
        n = c.at_one()
        if n:
            out[w] = n
    return out


class Hecke:
    """The affine Hecke algebra attached to an :class:`AffineWeyl` context."""

    def __init__(self, aw: AffineWeyl):
        self.aw = aw
        self._kl_cache: dict[AffineElement, HeckeElt] = {}
        self._bar_std_cache: dict[AffineElement, HeckeElt] = {}

    # -- standard basis ------------------------------------------------

    def unit(self) -> HeckeElt:
        return HeckeElt({self.aw.identity: ONE})

    def standard(self, w: AffineElement) -> HeckeElt:
        return HeckeElt({w: ONE})

    def mul_by_gen(self, h: HeckeElt, i: int) -> HeckeElt:
        """Right multiplication by the standard generator H_s."""
        out: dict[AffineElement, LaurentPoly] = {}

        def add(w, c):
            n = out.get(w)
            out[w] = c if n is None else n + c

        for w, c in h.terms.items():
            ws = self.aw.mult_gen(w, i)
            if ws.length > w.length:
                add(ws, c)
            else:
                add(ws, c)
                add(w, c * (VINV - V))
        return HeckeElt(out)

    def mul_by_word(self, h: HeckeElt, word) -> HeckeElt:
        for i in word:
            h = self.mul_by_gen(h, i)
        return h

    def mul(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        """Full product; the right factor is expanded along reduced words."""
        out = HeckeElt()
        for w, c in b.terms.items():
            out = out + self.mul_by_word(a, self.aw.reduced_word(w)).scale(c)
        return out

    # -- bar involution -----------------------------------------------------

    def bar_standard(self, w: AffineElement) -> HeckeElt:
        """bar(H_w) = (H_{w^{-1}})^{-1}, via H_s^{-1} = H_s + (v - v^{-1})."""
        cached = self._bar_std_cache.get(w)
        if cached is not None:
            return cached
        out = self.unit()
        for i in self.aw.reduced_word(w):
            out = self.mul_by_gen(out, i) + out.scale(V - VINV)
        self._bar_std_cache[w] = out
        return out

    def bar(self, h: HeckeElt) -> HeckeElt:
        out = HeckeElt()
        for w, c in h.terms.items():
            out = out + self.bar_standard(w).scale(c.bar())
        return out

    # -- canonical basis ------------------------------------------------------

    def kl_gen(self, i: int) -> HeckeElt:
        """The canonical generator H_s + v."""
        s = self.aw.gens[i]
        return HeckeElt({s: ONE, self.aw.identity: V})

    def mul_by_kl_gen(self, h: HeckeElt, i: int) -> HeckeElt:
        return self.mul_by_gen(h, i) + h.scale(V)

    def kl_basis(
        self, w: AffineElement, table: "CanonicalBasisTable | None" = None
    ) -> HeckeElt:
        """Canonical basis element; the 0-canonical one unless a table is given."""
        if table is not None:
            return table.entry(w)
        cached = self._kl_cache.get(w)
        if cached is not None:
            return cached
        if w.length == 0:
            out = self.standard(w)
            self._kl_cache[w] = out
            return out
        i = min(self.aw.right_descents(w))
        ws = self.aw.mult_gen(w, i)
        lower = self.kl_basis(ws)
        prod = self.mul_by_kl_gen(lower, i)
        acc = dict(prod.terms)
        for y, c in lower.terms.items():
            mu = c.coeff(1)
            if mu and self.aw.mult_gen(y, i).length < y.length:
                for z, cz in self.kl_basis(y).terms.items():
                    prev = acc.get(z)
                    delta = cz.scale(-mu)
                    acc[z] = delta if prev is None else prev + delta
        out = HeckeElt(acc)
        assert out.coeff(w) == ONE
        self._kl_cache[w] = out
        return out

    def bs_product(self, word) -> HeckeElt:
        """Product of canonical generators along a word (Bott-Samelson class)."""
        out = self.unit()
        for i in word:
            out = self.mul_by_kl_gen(out, i)
        return out

    def to_canonical(
        self, h: HeckeElt, table: "CanonicalBasisTable | None" = None
    ) -> dict[AffineElement, LaurentPoly]:
        """Expand in the canonical basis by leading-term subtraction."""
        rest = h
        out: dict[AffineElement, LaurentPoly] = {}
        while rest:
            w = max(rest.support(), key=self.aw.sort_key)
            c = rest.coeff(w)
            out[w] = c
            rest = rest - self.kl_basis(w, table).scale(c)
        return out

    # -- antispherical projection ----------------------------------------------

    def asph_project(self, h: HeckeElt) -> AsphElt:
        """Image of 1 (x) h in the antispherical module.

        Each stripped finite reflection contributes a factor -v.
        """
        out: dict[AffineElement, LaurentPoly] = {}
        for w, c in h.terms.items():
            rep, u = self.aw.min_coset_rep(w)
            k = self.aw.datum.finite_length(u)
            contrib = c * LaurentPoly.v(k, -1 if k % 2 else 1)
            n = out.get(rep)
            out[rep] = contrib if n is None else n + contrib
        return AsphElt(out)


class AsphModule:
    """The antispherical right module with its standard and canonical bases."""

    def __init__(self, hecke: Hecke):
        self.hecke = hecke
        self.aw = hecke.aw
        self._canon_cache: dict[AffineElement, AsphElt] = {}

    def standard(self, w: AffineElement) -> AsphElt:
        if not self.aw.in_fW(w):
            raise ValueError("standard basis of the antispherical module needs w in fW")
        return AsphElt({w: ONE})

    def mul_by_gen(self, n: AsphElt, i: int) -> AsphElt:
        """Right action of the standard generator H_s."""
        out: dict[AffineElement, LaurentPoly] = {}

        def add(w, c):
            prev = out.get(w)
            out[w] = c if prev is None else prev + c

        for w, c in n.terms.items():
            ws = self.aw.mult_gen(w, i)
            if ws.length > w.length:
                if self.aw.in_fW(ws):
                    add(ws, c)
                else:
                    add(w, c * LaurentPoly.v(1, -1))
            else:
                add(ws, c)
                add(w, c * (VINV - V))
        return AsphElt(out)

    def mul_by_kl_gen(self, n: AsphElt, i: int) -> AsphElt:
        """Right action of the canonical generator H_s + v."""
        out: dict[AffineElement, LaurentPoly] = {}

        def add(w, c):
            prev = out.get(w)
            out[w] = c if prev is None else prev + c

        for w, c in n.terms.items():
            ws = self.aw.mult_gen(w, i)
            if ws.length > w.length:
                if self.aw.in_fW(ws):
                    add(ws, c)
                    add(w, c * V)
                # ws outside fW: (-v + v) N_w = 0
            else:
                add(ws, c)
                add(w, c * VINV)
        return AsphElt(out)

    def mul_by_word(self, n: AsphElt, word) -> AsphElt:
        for i in word:
            n = self.mul_by_gen(n, i)
        return n

    def canonical(
        self, w: AffineElement, table: "CanonicalBasisTable | None" = None
    ) -> AsphElt:
        """Canonical basis element of the antispherical module.

        For the 0-canonical basis this uses the internal recursion; with a
        table it is the projection of the tabulated algebra element.  Both
        paths agree with asph_project(kl_basis(w)) (checked in the tests).
        """
        if not self.aw.in_fW(w):
            raise ValueError("canonical antispherical elements are indexed by fW")
        if table is not None:
            # callers that reuse one table should memoize on their side
            # (TableBasisProvider does); tables are not identity-tracked here
            return self.hecke.asph_project(table.entry(w))
        cached = self._canon_cache.get(w)
        if cached is not None:
            return cached
        if w.length == 0:
            out = AsphElt({w: ONE})
            self._canon_cache[w] = out
            return out
        i = min(self.aw.right_descents(w))
        ws = self.aw.mult_gen(w, i)
        lower = self.canonical(ws)
        prod = self.mul_by_kl_gen(lower, i)
        acc = dict(prod.terms)
        for y, c in lower.terms.items():
            mu = c.coeff(1)
            if mu and self.aw.mult_gen(y, i).length < y.length:
                for z, cz in self.canonical(y).terms.items():
                    prev = acc.get(z)
                    delta = cz.scale(-mu)
                    acc[z] = delta if prev is None else prev + delta
        out = AsphElt(acc)
        assert out.coeff(w) == ONE
        self._canon_cache[w] = out
        return out

    def to_canonical(
        self, n: AsphElt, table: "CanonicalBasisTable | None" = None
    ) -> dict[AffineElement, LaurentPoly]:
        rest = n
        out: dict[AffineElement, LaurentPoly] = {}
        while rest:
            w = max(rest.support(), key=self.aw.sort_key)
            c = rest.coeff(w)
            out[w] = c
            rest = rest - self.canonical(w, table).scale(c)
        return out


class CanonicalBasisTable:
    """Ingested canonical-basis table: w -> expansion of the basis element.

    The label p records which p-canonical basis the table claims to hold
    (0 means the ordinary Kazhdan-Lusztig basis); provenance is free text.
    Entries are validated to be unitriangular with diagonal coefficient 1.
    """

    def __init__(self, aw: AffineWeyl, p: int, entries: dict, provenance: str = ""):
        self.aw = aw
        self.p = p
        self.entries = entries
        self.provenance = provenance
        self._validate()

    def _validate(self):
        for w, h in self.entries.items():
            diag = h.coeff(w)
            if diag != ONE:
                raise BasisTableError(
                    f"diagonal coefficient of {self.aw.to_word(w)} is {diag}, not 1"
                )
            for y, c in h.terms.items():
                if y == w:
                    continue
                if y.length >= w.length or not self.aw.bruhat_leq(y, w):
                    raise BasisTableError(
                        f"entry {self.aw.to_word(w)} is not unitriangular: "
                        f"{self.aw.to_word(y)} appears"
                    )
                if self.p == 0 and not c.in_positive_part():
                    raise BasisTableError(
                        f"p=0 entry {self.aw.to_word(w)} has an off-diagonal "
                        "coefficient outside vZ[v]"
                    )

    def covers(self, w: AffineElement) -> bool:
        return w in self.entries

    def entry(self, w: AffineElement) -> HeckeElt:
        h = self.entries.get(w)
        if h is None:
            raise BasisTableError(f"element {self.aw.to_word(w)} missing from table")
        return h

    # -- wire formats --------------------------------------------------------

    def dump_text(self) -> str:
        lines = [f"p {self.p}"]
        if self.provenance:
            lines.append(f"provenance {self.provenance}")
        for w in sorted(self.entries, key=self.aw.sort_key):
            h = self.entries[w]
            terms = ", ".join(
                f"{self.aw.to_word(y)}:{h.terms[y].serialize()}"
                for y in sorted(h.support(), key=self.aw.sort_key)
            )
            lines.append(f"w={self.aw.to_word(w)} : {terms}")
        return "\n".join(lines) + "\n"

    def dump_json(self) -> str:
        obj = {
            "schema": 1,
            "p": self.p,
            "provenance": self.provenance,
            "entries": [
                {
                    "w": self.aw.to_word(w),
                    "terms": [
                        [self.aw.to_word(y), self.entries[w].terms[y].serialize()]
                        for y in sorted(self.entries[w].support(), key=self.aw.sort_key)
                    ],
                }
                for w in sorted(self.entries, key=self.aw.sort_key)
            ],
        }
        return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def parse(cls, aw: AffineWeyl, text: str) -> "CanonicalBasisTable":
        text = text.lstrip()
        if text.startswith("{"):
            return cls._parse_json(aw, text)
        return cls._parse_text(aw, text)

    @classmethod
    def _parse_text(cls, aw: AffineWeyl, text: str) -> "CanonicalBasisTable":
        p = None
        provenance = ""
        entries: dict[AffineElement, HeckeElt] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("p "):
                p = int(line[2:])
            elif line.startswith("provenance "):
                provenance = line[len("provenance "):]
            elif line.startswith("w="):
                head, _, body = line.partition(":")
                w = aw.from_word_str(head[2:].strip())
                terms = {}
                for item in body.split(","):
                    item = item.strip()
                    if not item:
                        continue
                    word, _, poly = item.rpartition(":")
                    terms[aw.from_word_str(word.strip())] = LaurentPoly.deserialize(
                        poly.strip()
                    )
                if w in entries:
                    raise BasisTableError(f"duplicate entry at line {lineno}")
                entries[w] = HeckeElt(terms)
            else:
                raise BasisTableError(f"unparseable line {lineno}: {line!r}")
        if p is None:
            raise BasisTableError("missing 'p <prime>' header")
        return cls(aw, p, entries, provenance)

    @classmethod
    def _parse_json(cls, aw: AffineWeyl, text: str) -> "CanonicalBasisTable":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise BasisTableError(f"bad JSON table: {e}") from e
        entries = {}
        for rec in obj.get("entries", []):
            w = aw.from_word_str(rec["w"])
            if w in entries:
                raise BasisTableError(f"duplicate entry {rec['w']}")
            entries[w] = HeckeElt(
                {
                    aw.from_word_str(word): LaurentPoly.deserialize(poly)
                    for word, poly in rec["terms"]
                }
            )
        if "p" not in obj:
            raise BasisTableError("missing p label")
        return cls(aw, int(obj["p"]), entries, obj.get("provenance", ""))


def load_basis_table(aw: AffineWeyl, path) -> CanonicalBasisTable:
    """Read and validate a canonical-basis table from a file path."""
    with open(path, "r", encoding="utf-8") as fh:
        return CanonicalBasisTable.parse(aw, fh.read())


def table_from_zero_basis(hecke: Hecke, bound: int, provenance: str = "self") -> CanonicalBasisTable:
    """Tabulate the computed 0-canonical basis up to a length bound."""
    entries = {
        w: hecke.kl_basis(w) for w in hecke.aw.enumerate_W(bound)
    }
    return CanonicalBasisTable(hecke.aw, 0, entries, provenance)


class ZeroBasisProvider:
    """Canonical-basis provider backed by the internal 0-basis recursion."""

    def __init__(self, hecke: Hecke, asph: AsphModule):
        self.hecke = hecke
        self.asph = asph
        self.p = 0
        self.provenance = "computed 0-canonical basis"

    def covers(self, w: AffineElement) -> bool:
        return True

    def hecke_canonical(self, w: AffineElement) -> HeckeElt:
        return self.hecke.kl_basis(w)

    def asph_canonical(self, w: AffineElement) -> AsphElt:
        return self.asph.canonical(w)

    def asph_to_canonical(self, n: AsphElt):
        return self.asph.to_canonical(n)


class TableBasisProvider:
    """Canonical-basis provider backed by an ingested table."""

    def __init__(self, hecke: Hecke, asph: AsphModule, table: CanonicalBasisTable):
        self.hecke = hecke
        self.asph = asph
        self.table = table
        self.p = table.p
        self.provenance = table.provenance or f"ingested p={table.p} table"
        self._canon: dict[AffineElement, AsphElt] = {}

    def covers(self, w: AffineElement) -> bool:
        return self.table.covers(w)

    def hecke_canonical(self, w: AffineElement) -> HeckeElt:
        return self.table.entry(w)

    def asph_canonical(self, w: AffineElement) -> AsphElt:
        out = self._canon.get(w)
        if out is None:
            out = self.asph.canonical(w, self.table)
            self._canon[w] = out
        return out

    def asph_to_canonical(self, n: AsphElt):
        sort_key = self.hecke.aw.sort_key
        rest = n
        out = {}
        while rest:
            w = max(rest.support(), key=sort_key)
            c = rest.coeff(w)
            out[w] = c
            rest = rest - self.asph_canonical(w).scale(c)
        return out
