"""Root multiplicities solved from the denominator identity.

The specialized numerator at highest weight zero equals the full product
over positive roots.  Working upward in height, the coefficient gap
between the partial product over lower roots and the numerator isolates
each multiplicity: both factor shapes contribute minus the multiplicity
at first order.  Distinct exponents at one height never interact, so the
recursion is triangular.  A negative gap aborts; it cannot happen for a
valid datum and clamping it would silently corrupt every later height.
"""
from __future__ import annotations

from dataclasses import dataclass

from .charformula import numerator_series
from .datum import OddCartanDatum, height
from .errors import NegativeMultiplicity
from .series import CharSeries, binomial_factor


@dataclass(frozen=True)
class RootEntry:
    mult: int
    parity: int
    is_real: bool


class RootTable:
    """Multiplicities of the positive roots up to a height bound."""

    __slots__ = ("rank", "height_bound", "entries")

    def __init__(self, rank, height_bound, entries):
        self.rank = rank
        self.height_bound = height_bound
        self.entries = dict(entries)

    def multiplicity(self, beta) -> int:
        entry = self.entries.get(tuple(beta))
        return entry.mult if entry else 0

    def items_sorted(self):
        return sorted(self.entries.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def truncate(self, height_bound) -> "RootTable":
        kept = {b: e for b, e in self.entries.items() if sum(b) <= height_bound}
        return RootTable(self.rank, min(self.height_bound, height_bound), kept)

    def __eq__(self, other):
        if not isinstance(other, RootTable):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.height_bound == other.height_bound
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"RootTable(H={self.height_bound}, {len(self.entries)} roots)"


def classify(datum: OddCartanDatum, beta) -> str:
    """A root is real exactly when its norm is positive."""
    return "real" if datum.root_bilinear(beta, beta) > 0 else "imaginary"


def _mult_from_gap(product_coef: int, rhs_coef: int, beta) -> int:
    m = product_coef - rhs_coef
    if m < 0:
        raise NegativeMultiplicity(f"gap {m} at exponent {beta}")
    return m


def solve_multiplicities(datum: OddCartanDatum, height_bound: int) -> RootTable:
    """Solve every multiplicity below the bound by height induction."""
    rhs = numerator_series(datum, datum.zero_weight(), height_bound)
    rank = datum.rank
    product = CharSeries.one(height_bound, rank)
    entries = {}
    for h in range(1, height_bound + 1):
        layer = {e for e in product.terms if sum(e) == h}
        layer.update(e for e in rhs.terms if sum(e) == h)
        found = []
        for beta in sorted(layer):
            m = _mult_from_gap(product.coefficient(beta), rhs.coefficient(beta), beta)
            if m:
                entries[beta] = RootEntry(m, datum.parity_of(beta), classify(datum, beta) == "real")
                found.append(beta)
        for beta in found:
            entry = entries[beta]
            if entry.parity == 0:
                factor = binomial_factor(beta, entry.mult, -1, 1, height_bound, rank)
            else:
                factor = binomial_factor(beta, entry.mult, 1, -1, height_bound, rank)
            product = product.mul(factor)
    return RootTable(rank, height_bound, entries)


def roots_to_json(table: RootTable) -> list:
    return [
        {
            "root": list(beta),
            "mult": entry.mult,
            "parity": "odd" if entry.parity else "even",
            "class": "real" if entry.is_real else "imaginary",
        }
        for beta, entry in table.items_sorted()
    ]
