"""Earlier lower bounds, the dominance chain, and the comparison table.

Three previously known lower bounds apply to the surfaces at hand, all of
the form (irrational constant) * sqrt(N):

    ssz_7_9      sqrt(7/9)*sqrt(N)  = (1/3)*sqrt(7N)   (any smooth surface,
                                      very general point)
    abelian_7_8  sqrt(7/8)*sqrt(N)  = (1/4)*sqrt(14N)  (abelian surfaces)
    hr_093       0.93*sqrt(N)                          (bielliptic surfaces)

Each is held as a RadicalBound with a single radicand so that all
comparisons stay exact.  The chain

    d_min(N,m)/m >= sqrt(N(2+m(m-1)))/m >= sqrt(14N)/4
                 >= 0.93*sqrt(N) > sqrt(7/9)*sqrt(N)

holds link by link for every m in 2..7 and every N >= 2 (the last link
strictly for every N >= 1); dominance_check verifies it in exact
arithmetic for a given N.

The eight-row comparison table is regenerated from the exact values.  Two
of the sixteen prior-bound cells as printed in the source table disagree
with their own defining formulas (both in the abelian column: N=5000
prints 66.1439 where sqrt(4375) rounds to 66.1438, and N=20000 prints
132.2676 where sqrt(17500) rounds to 132.2876).  These are recorded in
KNOWN_TABLE_ERRATA; regeneration reports them as documented discrepancies
rather than silently matching either side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import SMALL_MS, SmallBound, d_min, lower_bound_small
from .exactmath import RadicalBound, format_decimal

PRIOR_BOUND_NAMES = ("ssz_7_9", "abelian_7_8", "hr_093")


def prior_bound(name: str, n: int) -> RadicalBound:
    """The named earlier bound at self-intersection n, as an exact radical."""
    if n < 1:
        raise ValueError(f"self-intersection must be >= 1, got {n}")
    if name == "ssz_7_9":
        return RadicalBound(Fraction(1, 3), 7 * n)
    if name == "abelian_7_8":
        return RadicalBound(Fraction(1, 4), 14 * n)
    if name == "hr_093":
        return RadicalBound(Fraction(93, 100), n)
    raise ValueError(f"unknown prior bound {name!r}; expected one of {PRIOR_BOUND_NAMES}")


@dataclass(frozen=True)
class TableRow:
    n: int
    abelian_7_8: RadicalBound
    hr_093: RadicalBound
    new_bound: SmallBound


def comparison_table(ns: list[int], decimals: int = 4) -> list[TableRow]:
    """One row per n: the two prior bounds and the new minimum.

    The new bound is checked exactly (not at rendered precision) to
    dominate both prior columns; a violation would falsify the dominance
    chain and raises.
    """
    rows = []
    for n in ns:
        small = lower_bound_small(n)
        abelian = prior_bound("abelian_7_8", n)
        hr = prior_bound("hr_093", n)
        if abelian.cmp(small.value) > 0 or hr.cmp(small.value) > 0:
            raise AssertionError(f"dominance chain violated at n={n}")
        rows.append(TableRow(n, abelian, hr, small))
    return rows


def dominance_check(n: int) -> bool:
    """Every link of the chain, exactly, for all m in 2..7.

    f >= g is the ceiling property (d_min(n,m)^2 >= n*(2+m(m-1)));
    g >= sqrt(14N)/4 cross-multiplies to (m-4)^2 >= 0;
    sqrt(14N)/4 >= 0.93*sqrt(N) reduces to 14/16 >= 8649/10000;
    the final link is strict: 8649*9 > 7*10000.
    All are still evaluated per n through the exact comparisons.
    """
    if n < 2:
        raise ValueError(f"self-intersection must be >= 2, got {n}")
    abelian = prior_bound("abelian_7_8", n)
    hr = prior_bound("hr_093", n)
    ssz = prior_bound("ssz_7_9", n)
    for m in SMALL_MS:
        radicand = n * (m * (m - 1) + 2)
        g = RadicalBound(Fraction(1, m), radicand)
        if g.cmp(Fraction(d_min(n, m), m)) > 0:  # f >= g
            return False
        if g.cmp(abelian) < 0:  # g >= sqrt(14N)/4
            return False
    if abelian.cmp(hr) < 0:  # sqrt(14N)/4 >= 0.93 sqrt(N)
        return False
    return hr.cmp(ssz) > 0  # strict final link


#: the source table: columns (abelian_7_8, hr_093, new_bound), decimal
#: comma normalized to ".", at 4 digits with exact values printed minimally
PAPER_TABLE_NS = (2, 6, 8, 10, 50, 100, 5000, 20000)
PAPER_TABLE_PRINTED = {
    2: ("1.3229", "1.3152", "1.3333"),
    6: ("2.2913", "2.2780", "2.3333"),
    8: ("2.6458", "2.6304", "2.6667"),
    10: ("2.9580", "2.9409", "3"),
    50: ("6.6144", "6.5761", "6.6667"),
    100: ("9.3541", "9.3", "9.4"),
    5000: ("66.1439", "65.7609", "66.25"),
    20000: ("132.2676", "131.5219", "132.5"),
}

#: printed cells that provably contradict their own defining formula:
#: (n, column) -> (printed, exact rendering)
KNOWN_TABLE_ERRATA = {
    (5000, "abelian_7_8"): ("66.1439", "66.1438"),
    (20000, "abelian_7_8"): ("132.2676", "132.2876"),
}


@dataclass(frozen=True)
class CellDiscrepancy:
    n: int
    column: str
    printed: str
    computed: str
    documented: bool  # True when listed in KNOWN_TABLE_ERRATA


def table_vs_printed(decimals: int = 4) -> list[CellDiscrepancy]:
    """Regenerate the source table and diff it cell-by-cell.

    Returns the list of cells whose exact rendering differs from the
    printed value; entries found in KNOWN_TABLE_ERRATA are flagged as
    documented.  An empty list apart from documented entries means the
    regeneration byte-matches the source after separator normalization.
    """
    discrepancies = []
    for row in comparison_table(list(PAPER_TABLE_NS), decimals):
        printed = PAPER_TABLE_PRINTED[row.n]
        computed = (
            row.abelian_7_8.decimal(decimals),
            row.hr_093.decimal(decimals),
            format_decimal(row.new_bound.value, decimals),
        )
        for col, have, want in zip(
            ("abelian_7_8", "hr_093", "new_bound"), computed, printed
        ):
            if have != want:
                documented = KNOWN_TABLE_ERRATA.get((row.n, col)) == (want, have)
                discrepancies.append(CellDiscrepancy(row.n, col, want, have, documented))
    return discrepancies
