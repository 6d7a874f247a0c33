"""Degree-zero presented rings Z[R^x]/I for a finite commutative ring R.

Basis vectors of the group ring Z[R^x] are written <a> for units a.  Two
presentations are built from the Grothendieck-Witt relation families

    (i)    <a b^2> = <a>
    (ii)   <a> + <-a> = <1> + <-1>
    (iii)  <a> + <b> = <a+b> + <(a+b) a b>     (a + b a unit)

The "hopf" kind imposes the ideal generated by families (ii) and (iii); the
"reduced" kind also imposes family (i).

The relation lattice is the subgroup generated by the *ideal* the families
generate, i.e. it is closed under multiplication by units.  Families (i) and
(ii) instance sets are already closed under unit translation, and for the
reduced kind family (iii) is as well (the translate of a (iii) row differs
from another (iii) row by an (i) row).  For the hopf kind the unit
translates of family (iii) genuinely enlarge the lattice and are generated
explicitly; without them multiplication would not descend to the quotient.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from . import presab
from .finring import Ring, RingElement, make_ring
from .presab import SnfPresentation, ZLattice


class PresentationKind(str, enum.Enum):
    HOPF = "hopf"
    REDUCED = "reduced"

    @classmethod
    def coerce(cls, kind) -> "PresentationKind":
        if isinstance(kind, cls):
            return kind
        return cls(str(kind).lower())


class GroupRingVector:
    """Finitely supported integer combination of unit basis vectors <u>."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Optional[dict] = None):
        self.ring = ring
        self.coeffs = {}
        if coeffs:
            for u, c in coeffs.items():
                if c:
                    self.coeffs[u] = c

    @classmethod
    def angle(cls, ring: Ring, u: RingElement) -> "GroupRingVector":
        u = ring.coerce(u)
        if not u.is_unit():
            raise ValueError(f"<{u}> requires a unit, got a non-unit of {ring.spec_string()}")
        return cls(ring, {u: 1})

    @classmethod
    def zero(cls, ring: Ring) -> "GroupRingVector":
        return cls(ring)

    @classmethod
    def one(cls, ring: Ring) -> "GroupRingVector":
        return cls(ring, {ring.one: 1})

    def _check(self, other: "GroupRingVector"):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other: "GroupRingVector") -> "GroupRingVector":
        self._check(other)
        out = dict(self.coeffs)
        for u, c in other.coeffs.items():
            out[u] = out.get(u, 0) + c
        return GroupRingVector(self.ring, out)

    def __neg__(self) -> "GroupRingVector":
        return GroupRingVector(self.ring, {u: -c for u, c in self.coeffs.items()})

    def __sub__(self, other: "GroupRingVector") -> "GroupRingVector":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "GroupRingVector":
        if not isinstance(scalar, int):
            return NotImplemented
        return GroupRingVector(self.ring, {u: scalar * c for u, c in self.coeffs.items()})

    def __mul__(self, other) -> "GroupRingVector":
        if isinstance(other, int):
            return self.__rmul__(other)
        self._check(other)
        out: dict = {}
        for u, cu in self.coeffs.items():
            for v, cv in other.coeffs.items():
                w = u * v
                out[w] = out.get(w, 0) + cu * cv
        return GroupRingVector(self.ring, out)

    def __eq__(self, other):
        if not isinstance(other, GroupRingVector):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def augmentation(self) -> int:
        return sum(self.coeffs.values())

    def to_dense(self, units: Sequence[RingElement]) -> tuple[int, ...]:
        index = {u: i for i, u in enumerate(units)}
        row = [0] * len(units)
        for u, c in self.coeffs.items():
            row[index[u]] += c
        return tuple(row)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for u, c in sorted(self.coeffs.items(), key=lambda t: str(t[0])):
            parts.append(f"{'+' if c >= 0 else '-'} {abs(c)}<{u}>")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    __repr__ = __str__


def _dense_row(index: dict, signed_units) -> tuple[int, ...]:
    row = [0] * len(index)
    for sign, u in signed_units:
        row[index[u]] += sign
    return tuple(row)


def build_relations(ring, kind) -> list[tuple[int, ...]]:
    """Generating rows of the relation lattice in Z^{units}, deduplicated.

    Rows are emitted in a fixed order: family (ii) over units, family (iii)
    over unordered unit pairs (with, for the hopf kind, all unit translates
    of each instance), then family (i) over ordered unit pairs for the
    reduced kind.  Zero rows and exact duplicates are dropped.
    """
    ring = make_ring(ring)
    kind = PresentationKind.coerce(kind)
    units = ring.units()
    index = {u: i for i, u in enumerate(units)}
    one = ring.one
    minus_one = ring.minus_one()

    rows: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def emit(signed_units):
        row = _dense_row(index, signed_units)
        if any(row) and row not in seen:
            seen.add(row)
            rows.append(row)

    for a in units:
        emit(((1, a), (1, -a), (-1, one), (-1, minus_one)))

    for i, a in enumerate(units):
        for b in units[i:]:
            s = a + b
            if not s.is_unit():
                continue
            sab = s * a * b
            if kind is PresentationKind.HOPF:
                for u in units:
                    emit(((1, u * a), (1, u * b), (-1, u * s), (-1, u * sab)))
            else:
                emit(((1, a), (1, b), (-1, s), (-1, sab)))

    if kind is PresentationKind.REDUCED:
        for a in units:
            for b in units:
                emit(((1, a * b * b), (-1, a)))

    return rows


@dataclass(frozen=True)
class SplitReport:
    """Invariants of the two eigenpieces after inverting 2."""

    plus_rank: int
    minus_rank: int
    plus_torsion_odd: tuple[int, ...]
    minus_torsion_odd: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "plus_rank": self.plus_rank,
            "minus_rank": self.minus_rank,
            "plus_torsion_odd": list(self.plus_torsion_odd),
            "minus_torsion_odd": list(self.minus_torsion_odd),
        }


def _odd_part(d: int) -> int:
    while d % 2 == 0:
        d //= 2
    return d


class GwPresentedRing:
    """The quotient Z[R^x] / (relation lattice) in canonical coordinates."""

    def __init__(self, ring: Ring, kind: PresentationKind):
        self.ring = ring
        self.kind = kind
        self.units = ring.units()
        self.unit_index = {u: i for i, u in enumerate(self.units)}
        self.relation_rows = build_relations(ring, kind)
        self.lattice = ZLattice(len(self.units), self.relation_rows)
        self.presentation: SnfPresentation = presab.quotient(
            len(self.units), self.lattice.basis()
        )

    @property
    def rank(self) -> int:
        return self.presentation.rank

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.presentation.torsion

    def angle(self, u) -> GroupRingVector:
        return GroupRingVector.angle(self.ring, self.ring.coerce(u))

    def dense(self, x: GroupRingVector) -> tuple[int, ...]:
        return x.to_dense(self.units)

    def class_equal(self, x: GroupRingVector, y: GroupRingVector) -> bool:
        return self.lattice.contains(self.dense(x - y))

    def torsion_exponent(self, x: GroupRingVector) -> Optional[int]:
        """Additive order of the class of x; None means infinite order."""
        return self.presentation.element_order(self.dense(x))

    def minus_one_is_one(self) -> bool:
        return self.class_equal(self.angle(self.ring.minus_one()), self.angle(self.ring.one))

    def _action_matrix(self) -> list[list[int]]:
        """Matrix of multiplication by <-1> on canonical coordinates."""
        n = len(self.units)
        s = [[0] * n for _ in range(n)]
        minus_one = self.ring.minus_one()
        for i, u in enumerate(self.units):
            s[i][self.unit_index[minus_one * u]] = 1
        pres = self.presentation
        return presab.mat_mul(
            presab.mat_mul([list(r) for r in pres.basis_change_inv], s),
            [list(r) for r in pres.basis_change],
        )

    def invert_two_split(self) -> SplitReport:
        """Split the presentation after inverting 2 by the <-1> involution.

        The free part splits by the trace of the induced involution; torsion
        is first reduced to its odd part (2-power invariant factors are
        discarded) and then split by the idempotents (1 +- <-1>)/2, which are
        defined once 2 is invertible.
        """
        pres = self.presentation
        a = self._action_matrix()
        free = list(pres.free_coords)
        trace = sum(a[i][i] for i in free)
        rank = pres.rank
        assert (rank + trace) % 2 == 0, "involution trace parity violated"
        plus_rank = (rank + trace) // 2
        minus_rank = (rank - trace) // 2

        odd_idx = [i for i in pres.torsion_coords if _odd_part(pres.diagonal[i]) >= 3]
        odd_mod = [_odd_part(pres.diagonal[i]) for i in odd_idx]
        t = len(odd_idx)
        if t == 0:
            return SplitReport(plus_rank, minus_rank, (), ())
        b = [[a[i][j] % odd_mod[jj] for jj, j in enumerate(odd_idx)]
             for i in odd_idx]
        plus_tors = self._odd_eigen_torsion(b, odd_mod, sign=+1)
        minus_tors = self._odd_eigen_torsion(b, odd_mod, sign=-1)
        return SplitReport(plus_rank, minus_rank, plus_tors, minus_tors)

    @staticmethod
    def _odd_eigen_torsion(b, mods, sign) -> tuple[int, ...]:
        """Invariant factors of T_odd/(1 -+ sigma), the +-1 eigenpiece."""
        t = len(mods)
        rows = []
        for j in range(t):
            row = [0] * t
            row[j] = mods[j]
            rows.append(row)
        for i in range(t):
            row = [(-sign) * b[i][j] for j in range(t)]
            row[i] += 1
            rows.append(row)
        pres = presab.quotient(t, rows)
        assert pres.rank == 0, "eigenpiece of a finite group must be finite"
        return pres.torsion

    def report(self, include_comparison: bool = True) -> dict:
        split = self.invert_two_split()
        out = {
            "ring": self.ring.spec_string(),
            "kind": self.kind.value,
            "n_units": len(self.units),
            "rank": self.rank,
            "torsion": list(self.torsion),
            "minus_one_is_one": self.minus_one_is_one(),
            "split": split.to_json(),
        }
        if include_comparison:
            out["presentation_comparison"] = compare_presentations(self.ring).extra_relations_implied
        return out


def present(ring, kind) -> GwPresentedRing:
    """Quotient Z^{R^x} by the chosen relation lattice."""
    return GwPresentedRing(make_ring(ring), PresentationKind.coerce(kind))


def mul(x: GroupRingVector, y: GroupRingVector) -> GroupRingVector:
    """Group ring product, the bilinear extension of <a><b> = <ab>."""
    return x * y


def class_equal(p: GwPresentedRing, x: GroupRingVector, y: GroupRingVector) -> bool:
    return p.class_equal(x, y)


def torsion_exponent(p: GwPresentedRing, x: GroupRingVector) -> Optional[int]:
    return p.torsion_exponent(x)


def invert_two_split(p: GwPresentedRing) -> SplitReport:
    return p.invert_two_split()


@dataclass(frozen=True)
class ComparisonReport:
    """Does the hopf lattice already contain every reduced-only relation?"""

    ring_spec: str
    extra_relations_implied: bool
    witness: Optional[tuple[int, ...]]
    units: tuple

    def witness_sparse(self) -> Optional[dict]:
        if self.witness is None:
            return None
        return {str(u): c for u, c in zip(self.units, self.witness) if c}

    def to_json(self) -> dict:
        return {
            "ring": self.ring_spec,
            "extra_relations_implied": self.extra_relations_implied,
            "witness": self.witness_sparse(),
        }


def compare_presentations(ring) -> ComparisonReport:
    """Check whether each reduced relation row lies in the hopf lattice."""
    ring = make_ring(ring)
    units = ring.units()
    index = {u: i for i, u in enumerate(units)}
    hopf = ZLattice(len(units), build_relations(ring, PresentationKind.HOPF))
    for a in units:
        for b in units:
            row = _dense_row(index, ((1, a * b * b), (-1, a)))
            if any(row) and not hopf.contains(row):
                return ComparisonReport(ring.spec_string(), False, row, tuple(units))
    return ComparisonReport(ring.spec_string(), True, None, tuple(units))
