"""Shifted shapes and tableau families.

A tableau is stored as a tuple of row tuples; row r occupies columns
r .. r+len(row)-1 of the shifted diagram (0-based internally).  Primed
families (PT, SPT) store letters as integer codes 2k-1 for k' and 2k
for k, so the total order 1' < 1 < 2' < 2 < ... is plain integer
comparison.  Plain families (SSDT, standard, decomposition tableaux)
store their letters directly.

Human-facing text renders rows separated by " / " with entries
space-separated and primes as apostrophes: "1 2' 2 / 2 3'".  Cell
coordinates in messages and public insertion results are 1-based.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Optional, Sequence

Rows = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# shapes and primed letter codes

def parse_shape(text: str) -> tuple[int, ...]:
    """Parse "5,3,1" into the strict partition (5, 3, 1)."""
    if not text.strip():
        return ()
    parts = tuple(int(p) for p in text.split(","))
    check_strict(parts)
    return parts


def check_strict(shape: Sequence[int]) -> None:
    if any(p <= 0 for p in shape):
        raise ValueError(f"parts must be positive: {shape}")
    if any(shape[i] <= shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"not a strict partition: {shape}")


def shape_of(rows: Rows) -> tuple[int, ...]:
    return tuple(len(r) for r in rows)


def strict_partitions(max_total: int) -> list[tuple[int, ...]]:
    """All strict partitions with 1 <= |shape| <= max_total, by size.

    >>> strict_partitions(3)
    [(1,), (2,), (2, 1), (3,)]
    """
    out = []

    def rec(prefix: tuple[int, ...], biggest: int, left: int):
        for part in range(min(biggest, left), 0, -1):
            rec(prefix + (part,), part - 1, left - part)
        if prefix:
            out.append(prefix)

    for total in range(1, max_total + 1):
        start = len(out)
        rec((), total, total)
        out[start:] = sorted(p for p in out[start:] if sum(p) == total)
    return out


def shape_cells(shape: Sequence[int]) -> Iterator[tuple[int, int]]:
    """Cells of S(shape) in row-major order, 0-based."""
    for r, length in enumerate(shape):
        for c in range(r, r + length):
            yield (r, c)


def code(value: int, primed: bool) -> int:
    return 2 * value - 1 if primed else 2 * value


def code_value(c: int) -> int:
    return (c + 1) // 2


def code_primed(c: int) -> bool:
    return c % 2 == 1


def get(rows: Rows, r: int, c: int):
    """Entry at 0-based cell (r, c), or None if outside the shape."""
    if 0 <= r < len(rows) and r <= c < r + len(rows[r]):
        return rows[r][c - r]
    return None


def set_cell(rows: list[list[int]], r: int, c: int, v: int) -> None:
    rows[r][c - r] = v


def freeze(rows: Iterable[Sequence[int]]) -> Rows:
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# text / JSON forms

PRIME_CHARS = ("'", "′")


def letter_str(c: int) -> str:
    return f"{code_value(c)}'" if code_primed(c) else str(code_value(c))


def fmt_primed(rows: Rows) -> str:
    return " / ".join(" ".join(letter_str(c) for c in row) for row in rows)


def fmt_plain(rows: Rows) -> str:
    return " / ".join(" ".join(str(v) for v in row) for row in rows)


def parse_primed(text: str) -> Rows:
    """Parse "1 2' 2 / 2 3'" (unicode primes accepted) into code rows."""
    rows = []
    text = text.strip()
    if not text:
        return ()
    for chunk in text.split("/"):
        row = []
        for tok in chunk.split():
            primed = tok[-1] in PRIME_CHARS
            if primed:
                tok = tok[:-1]
            row.append(code(int(tok), primed))
        rows.append(tuple(row))
    return tuple(rows)


def parse_plain(text: str) -> Rows:
    text = text.strip()
    if not text:
        return ()
    return tuple(
        tuple(int(tok) for tok in chunk.split()) for chunk in text.split("/")
    )


def to_json_obj(rows: Rows, primed: bool) -> dict:
    render = letter_str if primed else str
    return {
        "shape": list(shape_of(rows)),
        "rows": [[render(v) for v in row] for row in rows],
    }


# ---------------------------------------------------------------------------
# hook and unimodal words

def hook_split(w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split off the maximal weakly decreasing prefix.

    >>> hook_split((3, 2, 1, 2))
    ((3, 2, 1), (2,))
    >>> hook_split((3, 2, 2))
    ((3, 2, 2), ())
    """
    w = tuple(w)
    if not w:
        raise ValueError("hook_split of an empty word")
    k = 1
    while k < len(w) and w[k] <= w[k - 1]:
        k += 1
    return w[:k], w[k:]


def _strictly_increasing(w: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(w, w[1:]))


def is_hook(w: Sequence[int]) -> bool:
    """Weakly decreasing then strictly increasing; empty words rejected."""
    dec, inc = hook_split(w)
    return _strictly_increasing(inc)


def unimodal_split(w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split off the maximal strictly decreasing prefix (owns the minimum).

    >>> unimodal_split((2, 0, 1, 3))
    ((2, 0), (1, 3))
    """
    w = tuple(w)
    k = 1
    while k < len(w) and w[k] < w[k - 1]:
        k += 1
    return w[:k], w[k:]


def is_unimodal(w: Sequence[int]) -> bool:
    """Strictly decreasing then strictly increasing; empty words allowed.

    >>> is_unimodal((2, 0, 1, 3))
    True
    >>> is_unimodal((1, 1))
    False
    """
    if not w:
        return True
    dec, inc = unimodal_split(w)
    # the junction must rise strictly: dec owns the unique minimum
    if inc and inc[0] <= dec[-1]:
        return False
    return _strictly_increasing(inc)


def longest_hook_subword_len(w: Sequence[int]) -> int:
    """Length of the longest (not necessarily contiguous) hook subword."""
    return _longest_vee_len(w, strict_dec=False)


def longest_unimodal_subword_len(w: Sequence[int]) -> int:
    """Length of the longest subword that is a unimodal word."""
    return _longest_vee_len(w, strict_dec=True)


def _longest_vee_len(w: Sequence[int], strict_dec: bool) -> int:
    # dec[p]: longest (weakly/strictly) decreasing subword ending at p;
    # inc[p]: longest strictly increasing subword starting at p.
    w = tuple(w)
    m = len(w)
    if m == 0:
        return 0
    dec = [1] * m
    for p in range(m):
        for q in range(p):
            ok = w[q] > w[p] if strict_dec else w[q] >= w[p]
            if ok:
                dec[p] = max(dec[p], dec[q] + 1)
    inc = [1] * m
    for p in range(m - 1, -1, -1):
        for q in range(p + 1, m):
            if w[q] > w[p]:
                inc[p] = max(inc[p], inc[q] + 1)
    best = 0
    for p in range(m):
        tail = max(
            (inc[q] for q in range(p + 1, m) if w[q] > w[p]), default=0
        )
        best = max(best, dec[p] + tail)
    return best


# ---------------------------------------------------------------------------
# family validators

def _shape_ok(rows: Rows) -> Optional[str]:
    shape = shape_of(rows)
    if any(length == 0 for length in shape):
        return f"empty row in shape {shape}"
    try:
        check_strict(shape)
    except ValueError as exc:
        return str(exc)
    return None


def validate_pt(rows: Rows, n: Optional[int] = None,
                diagonal_unprimed: bool = True) -> Optional[str]:
    """First violation of the primed tableau rules, or None if valid.

    With diagonal_unprimed=False this validates signed primed tableaux.
    """
    msg = _shape_ok(rows)
    if msg:
        return msg
    for r, row in enumerate(rows):
        for j, c in enumerate(row):
            if c < 1 or (n is not None and code_value(c) > n):
                return f"entry {letter_str(c)} at {(r + 1, r + j + 1)} out of range"
    for r, row in enumerate(rows):
        if diagonal_unprimed and code_primed(row[0]):
            return f"primed diagonal entry {letter_str(row[0])} in row {r + 1}"
        if any(a > b for a, b in zip(row, row[1:])):
            return f"row {r + 1} not weakly increasing"
        primed_vals = [code_value(c) for c in row if code_primed(c)]
        if len(primed_vals) != len(set(primed_vals)):
            return f"row {r + 1} repeats a primed letter"
    ncols = max((r + len(row) for r, row in enumerate(rows)), default=0)
    for c in range(ncols):
        col = [get(rows, r, c) for r in range(len(rows))]
        col = [v for v in col if v is not None]
        if any(a > b for a, b in zip(col, col[1:])):
            return f"column {c + 1} not weakly increasing"
        unprimed_vals = [code_value(v) for v in col if not code_primed(v)]
        if len(unprimed_vals) != len(set(unprimed_vals)):
            return f"column {c + 1} repeats an unprimed letter"
    return None


def validate_st(rows: Rows) -> Optional[str]:
    """Standard shifted tableau: entries exactly 1..N, strictly increasing."""
    msg = _shape_ok(rows)
    if msg:
        return msg
    entries = sorted(v for row in rows for v in row)
    if entries != list(range(1, len(entries) + 1)):
        return f"entries are not 1..{len(entries)}"
    for r, row in enumerate(rows):
        if any(a >= b for a, b in zip(row, row[1:])):
            return f"row {r + 1} not strictly increasing"
    ncols = max((r + len(row) for r, row in enumerate(rows)), default=0)
    for c in range(ncols):
        col = [get(rows, r, c) for r in range(len(rows))]
        col = [v for v in col if v is not None]
        if any(a >= b for a, b in zip(col, col[1:])):
            return f"column {c + 1} not strictly increasing"
    return None


def validate_ssdt(rows: Rows, n: Optional[int] = None) -> Optional[str]:
    """Semistandard decomposition tableau: hook rows, each of maximal
    hook-subword length within (next row)(this row)."""
    msg = _shape_ok(rows)
    if msg:
        return msg
    for r, row in enumerate(rows):
        if n is not None and any(not 1 <= v <= n for v in row):
            return f"row {r + 1} letter out of range 1..{n}"
        if not is_hook(row):
            return f"row {r + 1} is not a hook word"
    for r in range(len(rows) - 1):
        cat = rows[r + 1] + rows[r]
        if longest_hook_subword_len(cat) != len(rows[r]):
            return (
                f"row {r + 1} is not a maximal hook subword in rows "
                f"{r + 2},{r + 1}"
            )
    return None


def validate(rows: Rows, family: str, n: Optional[int] = None) -> Optional[str]:
    """Dispatching validator; family in {pt, spt, st, ssdt, sdt}."""
    if family == "pt":
        return validate_pt(rows, n)
    if family == "spt":
        return validate_pt(rows, n, diagonal_unprimed=False)
    if family == "st":
        return validate_st(rows)
    if family == "ssdt":
        return validate_ssdt(rows, n)
    if family == "sdt":
        from qcrystal import kraskiewicz

        return kraskiewicz.validate_sdt(rows, n)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# reading words

def rw_pt_cells(rows: Rows) -> list[tuple[int, bool, tuple[int, int]]]:
    """Reading word of a primed tableau with provenance.

    Primed letters are read down columns, rightmost column first; then
    unprimed letters along rows, bottom row first.  Each item is
    (letter value, primed, cell).
    """
    out = []
    ncols = max((r + len(row) for r, row in enumerate(rows)), default=0)
    for c in range(ncols - 1, -1, -1):
        for r in range(len(rows)):
            v = get(rows, r, c)
            if v is not None and code_primed(v):
                out.append((code_value(v), True, (r, c)))
    for r in range(len(rows) - 1, -1, -1):
        for j, v in enumerate(rows[r]):
            if not code_primed(v):
                out.append((code_value(v), False, (r, r + j)))
    return out


def rw_pt(rows: Rows) -> tuple[int, ...]:
    """
    >>> rw_pt(parse_primed("1 2' 2 / 3"))
    (2, 3, 1, 2)
    """
    return tuple(v for v, _, _ in rw_pt_cells(rows))


def rw_ssdt(rows: Rows) -> tuple[int, ...]:
    """Rows read right to left, top row first.

    >>> rw_ssdt(((3, 2, 2), (2,)))
    (2, 2, 3, 2)
    """
    out = []
    for row in rows:
        out.extend(reversed(row))
    return tuple(out)


def ssdt_weight(rows: Rows, n: int) -> tuple[int, ...]:
    wt = [0] * n
    for row in rows:
        for v in row:
            wt[v - 1] += 1
    return tuple(wt)


def pt_weight(rows: Rows, n: int) -> tuple[int, ...]:
    wt = [0] * n
    for row in rows:
        for c in row:
            wt[code_value(c) - 1] += 1
    return tuple(wt)


# ---------------------------------------------------------------------------
# conjugation and diagonal primes

def conjugate(rows: Rows) -> dict[tuple[int, int], int]:
    """Reflect over the main diagonal, turning k' into k and k into (k+1)'.

    The result is not a shifted-shape tableau, so it is returned as a
    plain cell -> code mapping.

    >>> conjugate(parse_primed("1"))
    {(0, 0): 3}
    """
    return {
        (c, r): rows[r][c - r] + 1
        for r in range(len(rows))
        for c in range(r, r + len(rows[r]))
    }


def conjugate_inverse(cells: dict[tuple[int, int], int]) -> Rows:
    back: dict[tuple[int, int], int] = {
        (c, r): v - 1 for (r, c), v in cells.items()
    }
    nrows = max((r for r, _ in back), default=-1) + 1
    rows = []
    for r in range(nrows):
        cols = sorted(c for (rr, c) in back if rr == r)
        if cols != list(range(r, r + len(cols))):
            raise ValueError("conjugate image is not a shifted shape")
        rows.append(tuple(back[(r, c)] for c in cols))
    return tuple(rows)


def prime_type(rows: Rows) -> frozenset[int]:
    """1-based indexes i whose diagonal entry (i,i) is primed.

    >>> sorted(prime_type(parse_primed("1' 1 / 2")))
    [1]
    """
    return frozenset(
        r + 1 for r, row in enumerate(rows) if code_primed(row[0])
    )


def dpr(rows: Rows) -> tuple[Rows, frozenset[int]]:
    """Strip diagonal primes, remembering where they were."""
    ptype = prime_type(rows)
    out = []
    for r, row in enumerate(rows):
        if r + 1 in ptype:
            out.append((row[0] + 1,) + row[1:])
        else:
            out.append(row)
    return tuple(out), ptype


def pr(rows: Rows, ptype: Iterable[int]) -> Rows:
    """Re-prime the diagonal entries listed in ptype (1-based)."""
    ptype = frozenset(ptype)
    if any(i < 1 or i > len(rows) for i in ptype):
        raise ValueError(f"prime type {sorted(ptype)} outside shape {shape_of(rows)}")
    out = []
    for r, row in enumerate(rows):
        if r + 1 in ptype:
            if code_primed(row[0]):
                raise ValueError(f"diagonal entry in row {r + 1} already primed")
            out.append((row[0] - 1,) + row[1:])
        else:
            out.append(row)
    return tuple(out)


# ---------------------------------------------------------------------------
# border strips (used by extreme-weight constructors)

def border_strips(shape: Sequence[int]) -> list[list[tuple[tuple[int, int], bool]]]:
    """Partition S(shape) into rim strips, one per diagonal cell.

    Strips are produced for i = l(shape) down to 1; strip i starts at the
    diagonal cell (i-1, i-1) and repeatedly moves east if possible, else
    north, through cells not yet used.  Each strip is a list of
    (cell, entered_northward) pairs and strip i has size shape[l-i].
    """
    shape = tuple(shape)
    cellset = set(shape_cells(shape))
    used: set[tuple[int, int]] = set()
    l = len(shape)
    out = []
    for i in range(l, 0, -1):
        r, c = i - 1, i - 1
        strip = [((r, c), False)]
        used.add((r, c))
        while True:
            east, north = (r, c + 1), (r - 1, c)
            if east in cellset and east not in used:
                r, c = east
                strip.append(((r, c), False))
            elif north in cellset and north not in used:
                r, c = north
                strip.append(((r, c), True))
            else:
                break
            used.add((r, c))
        if len(strip) != shape[l - i]:
            raise AssertionError(
                f"border strip {i} of {shape} has size {len(strip)}, "
                f"expected {shape[l - i]}"
            )
        out.append(strip)
    return out


# ---------------------------------------------------------------------------
# enumeration

def enumerate_st(shape: Sequence[int]) -> list[Rows]:
    """All standard shifted tableaux of the given strict shape."""
    shape = tuple(shape)
    if shape:
        check_strict(shape)
    cells = list(shape_cells(shape))
    cellset = set(cells)
    filling: dict[tuple[int, int], int] = {}
    results: list[Rows] = []

    def ready(cell: tuple[int, int]) -> bool:
        r, c = cell
        for nb in ((r, c - 1), (r - 1, c)):
            if nb in cellset and nb not in filling:
                return False
        return True

    def rec(k: int):
        if k > len(cells):
            results.append(
                tuple(
                    tuple(filling[(r, c)] for c in range(r, r + shape[r]))
                    for r in range(len(shape))
                )
            )
            return
        for cell in cells:
            if cell not in filling and ready(cell):
                filling[cell] = k
                rec(k + 1)
                del filling[cell]

    rec(1)
    return sorted(results)


def enumerate_pt(n: int, shape: Sequence[int],
                 diagonal_unprimed: bool = True) -> list[Rows]:
    """All primed tableaux (or signed ones) of a shape over 1'..n."""
    shape = tuple(shape)
    if shape:
        check_strict(shape)
    cells = list(shape_cells(shape))
    results: list[Rows] = []
    grid: dict[tuple[int, int], int] = {}

    def ok(r: int, c: int, v: int) -> bool:
        if diagonal_unprimed and r == c and code_primed(v):
            return False
        left = grid.get((r, c - 1))
        if left is not None and left > v:
            return False
        up = grid.get((r - 1, c))
        if up is not None and up > v:
            return False
        if code_primed(v):
            if any(
                grid.get((r, cc)) == v for cc in range(r, c)
            ):
                return False
        else:
            if any(
                grid.get((rr, c)) == v for rr in range(0, r)
            ):
                return False
        return True

    def rec(k: int):
        if k == len(cells):
            rows = tuple(
                tuple(grid[(r, c)] for c in range(r, r + shape[r]))
                for r in range(len(shape))
            )
            results.append(rows)
            return
        r, c = cells[k]
        for v in range(1, 2 * n + 1):
            if ok(r, c, v):
                grid[(r, c)] = v
                rec(k + 1)
                del grid[(r, c)]

    rec(0)
    return results


def enumerate_ssdt(n: int, shape: Sequence[int]) -> list[Rows]:
    """All semistandard decomposition tableaux of a shape over 1..n."""
    shape = tuple(shape)
    if shape:
        check_strict(shape)
    if not shape:
        return [()]

    def hooks(length: int) -> list[tuple[int, ...]]:
        return [
            w
            for w in itertools.product(range(1, n + 1), repeat=length)
            if is_hook(w)
        ]

    layers = [hooks(length) for length in shape]
    results: list[Rows] = []
    acc: list[tuple[int, ...]] = []

    def rec(r: int):
        if r == len(shape):
            results.append(tuple(acc))
            return
        for row in layers[r]:
            if r == 0 or _ssdt_pair_ok(acc[-1], row):
                acc.append(row)
                rec(r + 1)
                acc.pop()

    rec(0)
    return results


def _ssdt_pair_ok(upper: Sequence[int], lower: Sequence[int]) -> bool:
    """The maximality condition coupling two consecutive rows."""
    return longest_hook_subword_len(tuple(lower) + tuple(upper)) == len(upper)
