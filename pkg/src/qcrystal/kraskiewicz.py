"""Insertion for reduced words of signed permutations.

A letter entering a row either extends it to a longer unimodal word or
bumps through it: the smallest entry of the increasing part that is not
smaller replaces (or, on equality, increments), then the result bumps
the decreasing part symmetrically, and the leftover letter falls to the
next row.  A letter 0 meeting a row containing the pattern 1 0 1
passes through unchanged.  The insertion tableau has unimodal rows
(standard decomposition tableau); the recording tableau is standard.

The primed variant records whole factors: the boxes created by one
unimodal factor form a vee, whose vertical arm is primed and whose
bottom box carries the factor's sign.

Reverse insertion reconstructs each bump chain by splitting a row into
its decreasing and increasing parts in every possible position and
forward-checking the local inverses; every extracted word is finally
re-inserted and compared.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Optional, Union

from qcrystal import tableaux as tb
from qcrystal import typeb
from qcrystal.tableaux import Rows


class InsertionError(ValueError):
    """The bump chain died; the input word was not reduced."""


class NotInImage(ValueError):
    """The tableau pair is not produced by the insertion."""


# ---------------------------------------------------------------------------
# decomposition tableaux

def rw_sdt(rows: Rows) -> tuple[int, ...]:
    """Reading word: bottom row first, each row left to right."""
    out = []
    for row in reversed(rows):
        out.extend(row)
    return tuple(out)


def validate_sdt(rows: Rows, n: Optional[int] = None) -> Optional[str]:
    """First violation of the standard decomposition tableau rules."""
    shape = tb.shape_of(rows)
    if any(part == 0 for part in shape):
        return "empty row"
    try:
        tb.check_strict(shape)
    except ValueError as exc:
        return str(exc)
    for r, row in enumerate(rows):
        if n is not None and any(not 0 <= a < n for a in row):
            return f"row {r + 1} letter out of range 0..{n - 1}"
        if not tb.is_unimodal(row):
            return f"row {r + 1} is not unimodal"
    for r in range(len(rows) - 1):
        cat = rows[r + 1] + rows[r]
        if tb.longest_unimodal_subword_len(cat) != len(rows[r]):
            return (
                f"row {r + 1} is not a maximal unimodal subword in rows "
                f"{r + 2},{r + 1}"
            )
    if not typeb.is_reduced(rw_sdt(rows)):
        return "reading word is not reduced"
    return None


# ---------------------------------------------------------------------------
# forward insertion

def _has_101(row) -> bool:
    state = 0  # letters of the pattern 1 0 1 matched so far
    for a in row:
        if state == 0 and a == 1:
            state = 1
        elif state == 1 and a == 0:
            state = 2
        elif state == 2 and a == 1:
            return True
    return False


def _row_step(row: tuple[int, ...], a: int):
    """Insert a into one row: ("append", row) or ("cont", row, out)."""
    if tb.is_unimodal(row + (a,)):
        return ("append", row + (a,))
    if a == 0 and _has_101(row):
        return ("cont", row, 0)
    dec, inc = tb.unimodal_split(row)
    j = bisect_left(inc, a)
    if j == len(inc):
        raise InsertionError(f"letter {a} exceeds the increasing part {inc}")
    b = inc[j]
    if b != a:
        inc = inc[:j] + (a,) + inc[j + 1:]
        c = b
    else:
        c = a + 1
    pos = next((k for k, d in enumerate(dec) if d <= c), None)
    if pos is None:
        raise InsertionError(f"letter {c} is below the decreasing part {dec}")
    d = dec[pos]
    if d != c:
        dec = dec[:pos] + (c,) + dec[pos + 1:]
        out = d
    else:
        out = c - 1
    return ("cont", dec + inc, out)


def _insert(rows: Rows, a: int) -> tuple[Rows, tuple[int, int]]:
    work = list(rows)
    r = 0
    while True:
        if r == len(work):
            work.append((a,))
            cell = (r, r)
            break
        step = _row_step(work[r], a)
        if step[0] == "append":
            work[r] = step[1]
            cell = (r, r + len(step[1]) - 1)
            break
        work[r], a = step[1], step[2]
        r += 1
    out = tuple(work)
    msg = validate_sdt(out)
    assert msg is None, f"insertion produced an invalid tableau: {msg}"
    return out, cell


def kr_insert(rows: Rows, a: int) -> tuple[Rows, tuple[int, int]]:
    """Public single-letter insertion; the reported cell is 1-based.

    >>> kr_insert((), 2)
    (((2,),), (1, 1))
    """
    out, (r, c) = _insert(rows, a)
    return out, (r + 1, c + 1)


def kr(w: Union[str, tuple]) -> tuple[Rows, Rows]:
    """Insertion and recording tableaux of a reduced word.

    >>> p, q = kr("0")
    >>> p, q
    (((0,),), ((1,),))
    """
    word = typeb.parse_word(w)
    if not typeb.is_reduced(word):
        raise ValueError(f"word {w!r} is not reduced")
    p: Rows = ()
    q_work: list[list[int]] = []
    for step, a in enumerate(word, start=1):
        p, (r, c) = _insert(p, a)
        if r == len(q_work):
            q_work.append([])
        assert len(q_work[r]) == c - r, "recording cell out of order"
        q_work[r].append(step)
    q = tb.freeze(q_work)
    msg = tb.validate_st(q)
    assert msg is None, f"recording tableau invalid: {msg}"
    return p, q


# ---------------------------------------------------------------------------
# reverse insertion

def _strictly_dec(w) -> bool:
    return all(a > b for a, b in zip(w, w[1:]))


def _strictly_inc(w) -> bool:
    return all(a < b for a, b in zip(w, w[1:]))


def _row_candidates(row: tuple[int, ...], out: int):
    """Possible (previous row, inserted letter) pairs for one reverse step."""
    cands = set()
    if out == 0 and _has_101(row):
        cands.add((row, 0))
    for k in range(1, len(row) + 1):
        dstar, istar = row[:k], row[k:]
        if not (_strictly_dec(dstar) and _strictly_inc(istar)):
            continue
        dphase = []
        bigger = [x for x in dstar if x > out]
        if bigger:
            c = min(bigger)
            pos = dstar.index(c)
            dphase.append((c, dstar[:pos] + (out,) + dstar[pos + 1:]))
        if out + 1 in dstar:
            dphase.append((out + 1, dstar))
        for c, dec_old in dphase:
            smaller = [x for x in istar if x < c]
            if smaller:
                a = max(smaller)
                pos = istar.index(a)
                cands.add((dec_old + istar[:pos] + (c,) + istar[pos + 1:], a))
            if c - 1 in istar:
                cands.add((dec_old + istar, c - 1))
    return cands


def _reverse_steps(rows: Rows, r_end: int, c_end: int) -> list:
    """All (rows', a) whose insertion chain appends the cell (r_end, c_end).

    A single row step is not injective -- e.g. inserting 1 into (0, 1)
    and into (0, 2) both leave the row (2, 1) and pass 0 down -- so a
    removal can have several local undoings.  The caller must try them
    all; only one leads back to a reduced word.
    """
    if not (0 <= r_end < len(rows)
            and c_end == r_end + len(rows[r_end]) - 1
            and (r_end == len(rows) - 1
                 or len(rows[r_end]) - 1 > len(rows[r_end + 1]))):
        return []
    work = list(rows)
    out = work[r_end][-1]
    if len(work[r_end]) == 1:
        work.pop()
    else:
        work[r_end] = work[r_end][:-1]
    solutions = []

    def rec(j: int, state: tuple, val: int):
        if j < 0:
            solutions.append((state, val))
            return
        for cand_row, cand_a in sorted(_row_candidates(state[j], val)):
            if not tb.is_unimodal(cand_row):
                continue
            try:
                step = _row_step(cand_row, cand_a)
            except InsertionError:
                continue
            if step == ("cont", state[j], val):
                rec(j - 1, state[:j] + (cand_row,) + state[j + 1:], cand_a)

    rec(r_end - 1, tuple(work), out)
    return solutions


def kr_inverse(p: Rows, q: Rows) -> tuple[int, ...]:
    """The reduced word w with kr(w) = (p, q); NotInImage otherwise."""
    msg = validate_sdt(p)
    if msg is not None:
        raise NotInImage(f"insertion tableau invalid: {msg}")
    msg = tb.validate_st(q)
    if msg is not None:
        raise NotInImage(f"recording tableau invalid: {msg}")
    if tb.shape_of(p) != tb.shape_of(q):
        raise NotInImage("shapes differ")
    order = sorted(
        ((q[r][c - r], r, c) for r, c in tb.shape_cells(tb.shape_of(q))),
        reverse=True,
    )
    survivors = []

    def rec(rows: Rows, i: int, letters: list):
        if i == len(order):
            word = tuple(reversed(letters))
            try:
                if kr(word) == (p, q):
                    survivors.append(word)
            except ValueError:
                pass
            return
        _, r, c = order[i]
        for new_rows, letter in _reverse_steps(rows, r, c):
            rec(new_rows, i + 1, letters + [letter])

    rec(p, 0, [])
    if not survivors:
        raise NotInImage("no reduced word inserts to the pair")
    assert len(survivors) == 1, f"insertion not injective: {survivors}"
    return survivors[0]


# ---------------------------------------------------------------------------
# vees

def vee_bottom_cells(cells) -> Optional[int]:
    """1-based index of the corner of a vee of cells, or None.

    The rows must rise strictly up to the bottom cell and then fall
    weakly; the columns fall weakly and then rise strictly.
    """
    xs = [r for r, _ in cells]
    ys = [c for _, c in cells]
    valid = []
    for k in range(1, len(cells) + 1):
        if (
            all(xs[t] < xs[t + 1] for t in range(k - 1))
            and all(xs[t] >= xs[t + 1] for t in range(k - 1, len(xs) - 1))
            and all(ys[t] >= ys[t + 1] for t in range(k - 1))
            and all(ys[t] < ys[t + 1] for t in range(k - 1, len(ys) - 1))
        ):
            valid.append(k)
    if not valid:
        return None
    assert len(valid) == 1, f"ambiguous vee corner: {valid}"
    return valid[0]


def vee_bottom(q: Rows, i: int, j: int) -> Optional[int]:
    """Corner index of the cells of entries i..j of a standard tableau."""
    where = {}
    for r, c in tb.shape_cells(tb.shape_of(q)):
        where[q[r][c - r]] = (r, c)
    cells = [where[k] for k in range(i, j + 1)]
    return vee_bottom_cells(cells)


# ---------------------------------------------------------------------------
# primed insertion of signed unimodal factorizations

def pkr(fact) -> tuple[Rows, Rows]:
    """Insert a factorization; records factor numbers, primed on the
    vertical arm of each factor's vee and signed at the corner."""
    if isinstance(fact, str):
        fact = typeb.parse_factorization(fact)
    else:
        fact = typeb.check_factorization(fact)
    word = typeb.fact_word(fact)
    if not typeb.is_reduced(word):
        raise ValueError("factor concatenation is not a reduced word")
    rows: Rows = ()
    t_cells: dict[tuple[int, int], int] = {}
    for fi, (sign, letters) in enumerate(fact, start=1):
        boxes = []
        for a in letters:
            rows, cell = _insert(rows, a)
            boxes.append(cell)
        if not boxes:
            continue
        k = vee_bottom_cells(boxes)
        assert k is not None, f"factor {fi} boxes do not form a vee: {boxes}"
        for idx, cell in enumerate(boxes, start=1):
            t_cells[cell] = tb.code(fi, idx < k or (idx == k and sign < 0))
    t = tuple(
        tuple(t_cells[(r, c)] for c in range(r, r + len(row)))
        for r, row in enumerate(rows)
    )
    msg = tb.validate_pt(t, diagonal_unprimed=False)
    assert msg is None, f"recording tableau invalid: {msg}"
    return rows, t


def pkr_inverse(p: Rows, t: Rows, m: Optional[int] = None):
    """The m-factor signed factorization inserting to (p, t)."""
    msg = validate_sdt(p)
    if msg is not None:
        raise NotInImage(f"insertion tableau invalid: {msg}")
    msg = tb.validate_pt(t, diagonal_unprimed=False)
    if msg is not None:
        raise NotInImage(f"recording tableau invalid: {msg}")
    if tb.shape_of(p) != tb.shape_of(t):
        raise NotInImage("shapes differ")
    values = [tb.code_value(v) for row in t for v in row]
    if m is None:
        m = max(values, default=0)
    elif values and max(values) > m:
        raise NotInImage(f"factor number {max(values)} exceeds m={m}")
    steps = []  # removal cells, last factor first, each arm end-to-corner
    factor_info = {}  # fi -> (sign, number of letters)
    for fi in range(m, 0, -1):
        marked = [
            ((r, r + jj), tb.code_primed(v))
            for r, row in enumerate(t)
            for jj, v in enumerate(row)
            if tb.code_value(v) == fi
        ]
        if not marked:
            factor_info[fi] = (0, 0)
            continue
        bottom = max((c for c, _ in marked), key=lambda rc: (rc[0], -rc[1]))
        primality = dict(marked)
        sign = -1 if primality[bottom] else 1
        vertical = sorted(
            c for c, pr in marked if pr and c != bottom
        )
        horizontal = sorted(
            (c for c, pr in marked if not pr and c != bottom),
            key=lambda rc: rc[1],
        )
        seq = vertical + [bottom] + horizontal
        factor_info[fi] = (sign, len(seq))
        steps.extend(reversed(seq))

    def assemble(letters: list):
        factors = []
        pos = 0
        for fi in range(m, 0, -1):
            sign, count = factor_info[fi]
            chunk = letters[pos:pos + count]
            pos += count
            factors.append((sign, tuple(reversed(chunk))))
        return tuple(reversed(factors))

    survivors = []

    def rec(rows: Rows, i: int, letters: list):
        if i == len(steps):
            fact = assemble(letters)
            try:
                if pkr(fact) == (p, t):
                    survivors.append(fact)
            except ValueError:
                pass
            return
        r, c = steps[i]
        for new_rows, letter in _reverse_steps(rows, r, c):
            rec(new_rows, i + 1, letters + [letter])

    rec(p, 0, [])
    if not survivors:
        raise NotInImage("no factorization inserts to the pair")
    assert len(survivors) == 1, f"insertion not injective: {survivors}"
    return survivors[0]
