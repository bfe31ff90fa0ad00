"""Exact Gaussian elimination on sparse rational row vectors."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping


def echelon(rows: Iterable[Mapping[Hashable, Fraction]], order=None) -> list:
    """Reduced row echelon basis of the span of ``rows``.

    Rows are sparse dicts column -> value. ``order`` fixes the pivot column
    order (defaults to sorted column keys). Returns a list of (pivot, row)
    pairs with each pivot entry equal to 1.
    """
    rows = [{k: Fraction(v) for k, v in r.items() if v} for r in rows]
    if order is None:
        cols = sorted({k for r in rows for k in r})
    else:
        cols = list(order)
    rank_of = {c: i for i, c in enumerate(cols)}
    basis: dict = {}  # pivot column -> row
    for r in rows:
        r = dict(r)
        # basis rows are fully reduced, so one pass clears every pivot column
        for piv in [c for c in r if c in basis]:
            f = r[piv]
            for c, v in basis[piv].items():
                s = r.get(c, 0) - f * v
                if s:
                    r[c] = s
                else:
                    r.pop(c, None)
        if r:
            piv = min(r, key=rank_of.__getitem__)
            f = r[piv]
            r = {c: v / f for c, v in r.items()}
            # back-substitute into existing basis rows
            for row in basis.values():
                g = row.get(piv)
                if g:
                    for c, v in r.items():
                        s = row.get(c, 0) - g * v
                        if s:
                            row[c] = s
                        else:
                            row.pop(c, None)
            basis[piv] = r
    return sorted(basis.items(), key=lambda t: rank_of[t[0]])


def rank(rows: Iterable[Mapping[Hashable, Fraction]]) -> int:
    return len(echelon(rows))
