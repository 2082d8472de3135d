"""Crystal operators on primed tableaux.

The odd pair acts on the first row by explicit rules.  The even
lowering operator follows the ribbon procedure: locate the bold letter
through the reading word, then either trade a prime with the entry to
the east or walk the maximal south/west ribbon of letters i+1 and
reshape its head; a primed bold letter is handled on the conjugated
tableau.  The even raising operator, and any operator for an arbitrary
recording tableau, are transported through mixed insertion.  Signed
variants strip the diagonal primes, act, and restore them.
"""

from __future__ import annotations

from typing import Callable, Optional

from qcrystal import mixed, words
from qcrystal import tableaux as tb
from qcrystal.tableaux import Rows


# ---------------------------------------------------------------------------
# odd operators, first row only

def e_bar1_pt(t: Rows) -> Optional[Rows]:
    """
    >>> tb.fmt_primed(e_bar1_pt(tb.parse_primed("2 2 2 / 3")))
    '1 2 2 / 3'
    >>> e_bar1_pt(tb.parse_primed("1 1 1 / 2")) is None
    True
    """
    if not t:
        return None
    row = list(t[0])
    if row[0] == tb.code(2, False):
        row[0] = tb.code(1, False)
        return (tuple(row),) + t[1:]
    for j in range(1, len(row)):
        if row[j] == tb.code(2, True):
            row[j] = tb.code(1, False)
            return (tuple(row),) + t[1:]
    return None


def f_bar1_pt(t: Rows) -> Optional[Rows]:
    """
    >>> tb.fmt_primed(f_bar1_pt(tb.parse_primed("1 2 2 / 3")))
    '2 2 2 / 3'
    >>> tb.fmt_primed(f_bar1_pt(tb.parse_primed("1 1 1 / 2")))
    "1 1 2' / 2"
    >>> f_bar1_pt(tb.parse_primed("2 2 2 / 3")) is None
    True
    """
    if not t:
        return None
    row = list(t[0])
    one = tb.code(1, False)
    spots = [j for j, v in enumerate(row) if v == one]
    if not spots:
        return None
    j = spots[-1]
    if j + 1 < len(row) and row[j + 1] == tb.code(2, True):
        return None
    row[j] = tb.code(2, False) if j == 0 else tb.code(2, True)
    return (tuple(row),) + t[1:]


# ---------------------------------------------------------------------------
# even lowering operator: the ribbon rule

def _ribbon(cells: dict[tuple[int, int], int], x: tuple[int, int], i: int,
            allow_2b: bool) -> None:
    """Apply the lowering rewrite around the bold cell x, in place."""
    lo, hi = tb.code(i + 1, True), tb.code(i + 1, False)
    assert cells[x] == tb.code(i, False), "bold cell must hold plain i"
    r, c = x
    if cells.get((r, c + 1)) == lo:
        cells[x] = lo
        cells[(r, c + 1)] = hi
        return
    cur = x
    while True:
        r, c = cur
        south = (r + 1, c) if cells.get((r + 1, c)) in (lo, hi) else None
        west = (r, c - 1) if cells.get((r, c - 1)) in (lo, hi) else None
        assert south is None or west is None, "ribbon forks"
        nxt = south or west
        if nxt is None:
            break
        cur = nxt
    if cur == x:
        cells[x] = hi
    elif allow_2b and cur[0] == cur[1]:
        cells[x] = lo
    else:
        cells[x] = lo
        cells[cur] = hi


def _bold_letter(t: Rows, i: int) -> Optional[tuple[tuple[int, int], bool]]:
    """Cell and primality of the rightmost unbracketed letter i in rw(t)."""
    items = tb.rw_pt_cells(t)
    values = tuple(v for v, _, _ in items)
    _, closers = words.unbracketed(i, values)
    if not closers:
        return None
    _, primed, cell = items[closers[-1]]
    return cell, primed


def f_even_pt(i: int, t: Rows) -> Optional[Rows]:
    """
    >>> tb.fmt_primed(f_even_pt(1, tb.parse_primed("1 1 1 / 2")))
    '1 1 2 / 2'
    >>> tb.fmt_primed(f_even_pt(2, tb.parse_primed("1 1 1 / 2")))
    '1 1 1 / 3'
    >>> f_even_pt(1, tb.parse_primed("2")) is None
    True
    """
    bold = _bold_letter(t, i)
    if bold is None:
        return None
    cell, primed = bold
    if primed:
        cells = tb.conjugate(t)
        _ribbon(cells, (cell[1], cell[0]), i, allow_2b=False)
        out = tb.conjugate_inverse(cells)
    else:
        cells = {
            (r, r + j): v for r, row in enumerate(t) for j, v in enumerate(row)
        }
        _ribbon(cells, cell, i, allow_2b=True)
        rows = []
        for r, row in enumerate(t):
            rows.append(tuple(cells[(r, r + j)] for j in range(len(row))))
        out = tuple(rows)
    msg = tb.validate_pt(out)
    assert msg is None, f"ribbon produced an invalid tableau: {msg}"
    return out


# ---------------------------------------------------------------------------
# transport through mixed insertion

def transport_op(t: Rows, q: Rows,
                 word_op: Callable[[tuple[int, ...]], Optional[tuple]]
                 ) -> Optional[Rows]:
    """Conjugate a word operator by insertion with recording tableau q."""
    w = mixed.hm_inverse(t, q)
    w2 = word_op(w)
    if w2 is None:
        return None
    p2, q2 = mixed.hm(w2)
    assert q2 == q, "operator moved the recording tableau"
    return p2


def e_even_pt(i: int, t: Rows) -> Optional[Rows]:
    """Raising operator, transported with the canonical recording tableau.

    >>> tb.fmt_primed(e_even_pt(1, tb.parse_primed("1 1 2 / 2")))
    '1 1 1 / 2'
    """
    q = mixed.q_canon(tb.shape_of(t))
    return transport_op(t, q, lambda w: words.e_even(i, w))


# ---------------------------------------------------------------------------
# signed variants

def _signed(op: Callable[[Rows], Optional[Rows]], t: Rows) -> Optional[Rows]:
    plain, ptype = tb.dpr(t)
    out = op(plain)
    if out is None:
        return None
    return tb.pr(out, ptype)


def e_signed(i, t: Rows) -> Optional[Rows]:
    """Raising operator on signed primed tableaux; i is a color or "b1"."""
    if i == "b1":
        return _signed(e_bar1_pt, t)
    return _signed(lambda s: e_even_pt(i, s), t)


def f_signed(i, t: Rows) -> Optional[Rows]:
    if i == "b1":
        return _signed(f_bar1_pt, t)
    return _signed(lambda s: f_even_pt(i, s), t)


# ---------------------------------------------------------------------------
# extreme tableaux

def highest_pt(n: int, shape) -> Rows:
    """Row i filled with the letter i.

    >>> tb.fmt_primed(highest_pt(5, (5, 3, 1)))
    '1 1 1 1 1 / 2 2 2 / 3'
    """
    shape = tuple(shape)
    tb.check_strict(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    return tuple(
        (tb.code(r + 1, False),) * part for r, part in enumerate(shape)
    )


def lowest_pt(n: int, shape) -> Rows:
    """Nested border strips of the largest letters, primed where the strip
    climbs.

    >>> tb.fmt_primed(lowest_pt(5, (5, 3, 1)))
    "3 4' 4 5' 5 / 4 5' 5 / 5"
    >>> tb.fmt_primed(lowest_pt(3, (3, 1)))
    "2 3' 3 / 3"
    """
    shape = tuple(shape)
    tb.check_strict(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    cells: dict[tuple[int, int], int] = {}
    for k, strip in enumerate(tb.border_strips(shape)):
        value = n - k
        for (r, c), entered_north in strip:
            cells[(r, c)] = tb.code(value, entered_north)
    out = tuple(
        tuple(cells[(r, c)] for c in range(r, r + part))
        for r, part in enumerate(shape)
    )
    msg = tb.validate_pt(out, n=n)
    assert msg is None, msg
    return out
