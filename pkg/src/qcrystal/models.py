"""Ready-made CrystalModel instances for the five element types.

Words carry the primitive operators; decomposition tableaux inherit them
through their reading word; primed tableaux have native operators; the
signed variants and factorizations wrap those in sign bookkeeping and
insertion transport.  Each builder fixes n (the number of weight
coordinates) and a canonical text form for vertices.
"""

from . import factorization as fc
from . import ptops
from . import tableaux as tb
from . import typeb
from . import words
from .engine import CrystalModel

Rows = tb.Rows


def model_words(n: int) -> CrystalModel:
    """All words over the letters 1..n; odd operators included for n >= 2."""
    return CrystalModel(
        n=n,
        e=words.e_even,
        f=words.f_even,
        weight=lambda w: words.weight(w, n),
        e_bar=words.e_bar1 if n >= 2 else None,
        f_bar=words.f_bar1 if n >= 2 else None,
        fmt=str,
        name=f"words{n}",
    )


def _ssdt_recut(t: Rows, letters) -> Rows:
    out = []
    pos = 0
    for row in t:
        chunk = letters[pos:pos + len(row)]
        pos += len(row)
        out.append(tuple(reversed(chunk)))
    return tuple(out)


def _ssdt_op(op, t: Rows):
    out = op(tb.rw_ssdt(t))
    if out is None:
        return None
    t2 = _ssdt_recut(t, out)
    msg = tb.validate_ssdt(t2)
    assert msg is None, f"operator left the family: {msg}"
    return t2


def model_ssdt(n: int) -> CrystalModel:
    """Decomposition tableaux; operators act through the reading word."""
    return CrystalModel(
        n=n,
        e=lambda i, t: _ssdt_op(lambda w: words.e_even(i, w), t),
        f=lambda i, t: _ssdt_op(lambda w: words.f_even(i, w), t),
        weight=lambda t: tb.ssdt_weight(t, n),
        e_bar=(lambda t: _ssdt_op(words.e_bar1, t)) if n >= 2 else None,
        f_bar=(lambda t: _ssdt_op(words.f_bar1, t)) if n >= 2 else None,
        fmt=tb.fmt_plain,
        name=f"ssdt{n}",
    )


def model_pt(n: int) -> CrystalModel:
    """Primed tableaux with unprimed diagonal."""
    return CrystalModel(
        n=n,
        e=ptops.e_even_pt,
        f=ptops.f_even_pt,
        weight=lambda t: tb.pt_weight(t, n),
        e_bar=ptops.e_bar1_pt if n >= 2 else None,
        f_bar=ptops.f_bar1_pt if n >= 2 else None,
        fmt=tb.fmt_primed,
        name=f"pt{n}",
    )


def model_spt(m: int) -> CrystalModel:
    """Signed primed tableaux (free diagonal primes), entries up to m."""
    return CrystalModel(
        n=m,
        e=ptops.e_signed,
        f=ptops.f_signed,
        weight=lambda t: tb.pt_weight(t, m),
        e_bar=(lambda t: ptops.e_signed("b1", t)) if m >= 2 else None,
        f_bar=(lambda t: ptops.f_signed("b1", t)) if m >= 2 else None,
        fmt=tb.fmt_primed,
        name=f"spt{m}",
    )


def model_fact(m: int) -> CrystalModel:
    """Signed unimodal factorizations with m factors."""
    return CrystalModel(
        n=m,
        e=lambda i, x: fc.e_fact(x, i),
        f=lambda i, x: fc.f_fact(x, i),
        weight=typeb.fact_weight,
        e_bar=fc.e_bar1_fact if m >= 2 else None,
        f_bar=fc.f_bar1_fact if m >= 2 else None,
        fmt=typeb.fmt_factorization,
        name=f"fact{m}",
    )


def seed_factorization(perm: tuple, m: int):
    """A canonical element of U_m: the first reduced word greedily cut
    into maximal unimodal factors, all signed +, padded with empties."""
    for word in typeb.enumerate_reduced(perm):
        blocks: list[tuple[int, ...]] = []
        for a in word:
            if blocks and tb.is_unimodal(blocks[-1] + (a,)):
                blocks[-1] = blocks[-1] + (a,)
            else:
                blocks.append((a,))
        if len(blocks) <= m:
            factors = [(1, blk) for blk in blocks]
            factors += [(0, ())] * (m - len(blocks))
            return typeb.check_factorization(tuple(factors))
    raise ValueError(f"no factorization of {perm} into {m} unimodal factors")


# ---------------------------------------------------------------------------
# extreme decomposition tableaux

def highest_ssdt(n: int, shape) -> Rows:
    """Nested border strips, the outermost filled with 1.

    >>> tb.fmt_plain(highest_ssdt(4, (5, 3, 1)))
    '3 2 2 1 1 / 2 1 1 / 1'
    """
    shape = tuple(shape)
    tb.check_strict(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    cells: dict[tuple[int, int], int] = {}
    for k, strip in enumerate(tb.border_strips(shape)):
        for (r, c), _ in strip:
            cells[(r, c)] = k + 1
    out = tuple(
        tuple(cells[(r, c)] for c in range(r, r + part))
        for r, part in enumerate(shape)
    )
    msg = tb.validate_ssdt(out, n=n)
    assert msg is None, msg
    return out


def lowest_ssdt(n: int, shape) -> Rows:
    """Row i constant n - i.

    >>> tb.fmt_plain(lowest_ssdt(4, (5, 3, 1)))
    '4 4 4 4 4 / 3 3 3 / 2'
    """
    shape = tuple(shape)
    tb.check_strict(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    out = tuple((n - r,) * part for r, part in enumerate(shape))
    msg = tb.validate_ssdt(out, n=n)
    assert msg is None, msg
    return out
