"""Crystal operators on signed unimodal factorizations.

Elements are tuples of signed factors ``(sign, letters)`` whose
concatenation is a fixed reduced word; see ``typeb.check_factorization``.
The even operators move letters between factors by transport through the
primed insertion (the insertion tableau never changes, only the recording
tableau does).  The odd operators have a direct description on the first
two factors, implemented here; ``e_bar1_transport``/``f_bar1_transport``
compute the same maps the slow way for cross-checking.

All operators accept either a factorization tuple or its text form and
answer in kind.  ``None`` means the operator is undefined there.
"""

from . import kraskiewicz as kw
from . import ptops
from . import tableaux as tb
from . import typeb


def _coerce(fact):
    if isinstance(fact, str):
        return typeb.parse_factorization(fact), True
    return typeb.check_factorization(fact), False


def _like(as_str, result):
    if result is None:
        return None
    return typeb.fmt_factorization(result) if as_str else result


def e_bar1_fact(fact):
    """Odd raising operator: pulls a letter from factor two into factor one.

    >>> e_bar1_fact("(+201)(-2)()")
    '(+2012)()()'
    """
    fact, as_str = _coerce(fact)
    if len(fact) < 2:
        return None
    (s1, a1), (s2, a2) = fact[0], fact[1]
    concat = a1 + a2
    if concat and not tb.is_unimodal(concat):
        # a2 is nonempty here: a1 alone is unimodal
        new_a1 = a1 + (a2[0],)
        if not tb.is_unimodal(new_a1):
            return None
        # |a2| >= 2, else new_a1 would be the whole non-unimodal concat
        out = ((s1, new_a1), (s2, a2[1:])) + fact[2:]
        return _like(as_str, out)
    if not a2 or (s1 != 0 and s2 > 0):
        return None
    new_s1 = s1 if a1 else s2
    new_s2 = 1 if len(a2) > 1 else 0
    out = ((new_s1, a1 + (a2[0],)), (new_s2, a2[1:])) + fact[2:]
    return _like(as_str, out)


def f_bar1_fact(fact):
    """Odd lowering operator: pushes a letter from factor one into factor two.

    >>> f_bar1_fact("(+2012)()()")
    '(+201)(-2)()'
    >>> f_bar1_fact("(+0)(-1)(+21)") is None
    True
    """
    fact, as_str = _coerce(fact)
    if len(fact) < 2:
        return None
    (s1, a1), (s2, a2) = fact[0], fact[1]
    concat = a1 + a2
    if concat and not tb.is_unimodal(concat):
        # a1 is nonempty here: a2 alone is unimodal
        new_a2 = (a1[-1],) + a2
        if not tb.is_unimodal(new_a2):
            return None
        # |a1| >= 2, else new_a2 would be the whole non-unimodal concat
        out = ((s1, a1[:-1]), (s2, new_a2)) + fact[2:]
        return _like(as_str, out)
    if not a1 or (a2 and s2 < 0):
        return None
    if len(a1) > 1:
        new_s1, new_s2 = s1, -1
    else:
        new_s1, new_s2 = 0, s1
    out = ((new_s1, a1[:-1]), (new_s2, (a1[-1],) + a2)) + fact[2:]
    return _like(as_str, out)


# ---------------------------------------------------------------------------
# transport through the primed insertion

def _transport(fact, op):
    fact, as_str = _coerce(fact)
    p, t = kw.pkr(fact)
    t2 = op(t)
    if t2 is None:
        return None
    if any(tb.code_value(v) > len(fact) for row in t2 for v in row):
        # the tableau operator left the entries-<=-m family (only the
        # odd pair at m = 1 can do this); the factor operator is undefined
        return None
    return _like(as_str, kw.pkr_inverse(p, t2, m=len(fact)))


def e_fact(fact, i):
    """Raising operator of color i (an int, or "b1" for the odd one).

    >>> e_fact("(+02)(+12)()", 1)
    '(+012)(+1)()'
    """
    if i == "b1":
        return e_bar1_fact(fact)
    return _transport(fact, lambda t: ptops.e_signed(i, t))


def f_fact(fact, i):
    """Lowering operator of color i (an int, or "b1" for the odd one).

    >>> f_fact("(+012)(+1)()", 2)
    '(+012)()(+1)'
    """
    if i == "b1":
        return f_bar1_fact(fact)
    return _transport(fact, lambda t: ptops.f_signed(i, t))


def e_bar1_transport(fact):
    """The odd raising operator computed through the insertion."""
    return _transport(fact, lambda t: ptops.e_signed("b1", t))


def f_bar1_transport(fact):
    """The odd lowering operator computed through the insertion."""
    return _transport(fact, lambda t: ptops.f_signed("b1", t))
