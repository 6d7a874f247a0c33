"""Unit sums of squares in a finite ring, by monotone fixpoint.

A unit is a sum of squares of exponent 0 when it is the square of a unit,
and of exponent n >= 1 when it is b + c for units b, c of exponent at most
n - 1.  Over a finite ring the strata stabilize after at most |R^x| rounds,
so a breadth-first fixpoint computes the minimal exponent of every
reachable unit.  Nothing is special-cased: rings where the search dies out
(for example Z/2^k with k >= 2, where unit + unit is never a unit) simply
report those units as unreachable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .finring import Ring, RingElement, make_ring


@dataclass(frozen=True)
class SumSquareResult:
    ring: Ring
    exponent_of: dict  # unit -> minimal exponent
    witnesses: dict  # unit -> (b, c) for exponent >= 1, lexicographically least
    unreachable: frozenset
    rounds: int

    def exponent(self, u: RingElement) -> Optional[int]:
        return self.exponent_of.get(u)

    def to_json(self) -> dict:
        minus_one = self.ring.minus_one()
        exp = self.exponent_of.get(minus_one)
        return {
            "ring": self.ring.spec_string(),
            "minus_one_exponent": exp,
            "exponents": {str(u): self.exponent_of[u]
                          for u in self.ring.units() if u in self.exponent_of},
            "witnesses": {str(u): [str(b), str(c)]
                          for u, (b, c) in sorted(self.witnesses.items(),
                                                  key=lambda t: str(t[0]))},
            "unreachable": sorted(str(u) for u in self.unreachable),
        }


def unit_square_closure(ring) -> SumSquareResult:
    """Least fixpoint of S0 = unit squares, S_{k+1} = S_k + {b+c in R^x}."""
    ring = make_ring(ring)
    units = ring.units()
    exponent: dict = {}
    witnesses: dict = {}
    for u in units:
        sq = u * u
        if sq not in exponent:
            exponent[sq] = 0

    rounds = 0
    frontier = True
    while frontier:
        frontier = False
        rounds += 1
        reached = [u for u in units if u in exponent]
        new: dict = {}
        for b in reached:
            for c in reached:
                s = b + c
                if s in exponent or s in new:
                    continue
                if not s.is_unit():
                    continue
                new[s] = (b, c)
        if new:
            frontier = True
            for s, (b, c) in new.items():
                exponent[s] = rounds
                witnesses[s] = (b, c)
        else:
            rounds -= 1

    # lexicographically least witness pair by unit enumeration index, among
    # pairs whose exponents certify the recorded minimal exponent
    index = {u: i for i, u in enumerate(units)}
    for s in list(witnesses):
        n = exponent[s]
        best = None
        for b in units:
            if exponent.get(b, n) >= n:
                continue
            for c in units:
                if exponent.get(c, n) >= n:
                    continue
                if b + c == s:
                    key = (index[b], index[c])
                    if best is None or key < best[0]:
                        best = (key, (b, c))
        assert best is not None
        witnesses[s] = best[1]

    unreachable = frozenset(u for u in units if u not in exponent)
    return SumSquareResult(ring, exponent, witnesses, unreachable, rounds)


def minus_one_exponent(ring) -> Optional[int]:
    """Minimal sum-of-squares exponent of -1, or None when unreachable."""
    ring = make_ring(ring)
    return unit_square_closure(ring).exponent(ring.minus_one())
