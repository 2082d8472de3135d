"""Generic crystal machinery.

A crystal is described operationally by a CrystalModel: raising and
lowering maps e(i, b) / f(i, b) for the colors i = 1..n-1, a weight
function, and optionally the odd pair e_bar / f_bar (color "b1").
Elements may be any hashable values; fmt renders them canonically.

From these primitives the module derives string functions eps/phi, the
Weyl group action S_i, the remaining odd operators by conjugation,
component closure (BFS with a vertex cap), axiom checkers that report
every violation, highest/lowest element searches, and DOT/JSON export.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Optional, Sequence, Union

Element = Hashable
Color = Union[int, str]  # 1..n-1, or "b1" for the odd pair

DEFAULT_CAP = 10**6
_STEP_GUARD = 10**4


class CapExceeded(Exception):
    """Component closure touched more vertices than allowed."""

    def __init__(self, cap: int):
        super().__init__(f"component exceeded the vertex cap {cap}")
        self.cap = cap


@dataclass(frozen=True)
class CrystalModel:
    n: int
    e: Callable[[int, Element], Optional[Element]]
    f: Callable[[int, Element], Optional[Element]]
    weight: Callable[[Element], tuple[int, ...]]
    e_bar: Optional[Callable[[Element], Optional[Element]]] = None
    f_bar: Optional[Callable[[Element], Optional[Element]]] = None
    fmt: Callable[[Element], str] = field(default=str)
    name: str = "crystal"

    @property
    def colors(self) -> list[Color]:
        out: list[Color] = list(range(1, self.n))
        if self.e_bar is not None:
            out.append("b1")
        return out


def eps(model: CrystalModel, i: int, b: Element) -> int:
    """Number of times e(i, .) applies before vanishing."""
    k = 0
    while b is not None:
        b = model.e(i, b)
        k += 1
        if k > _STEP_GUARD:
            raise RuntimeError(f"e({i}, .) chain exceeded {_STEP_GUARD} steps")
    return k - 1


def phi(model: CrystalModel, i: int, b: Element) -> int:
    k = 0
    while b is not None:
        b = model.f(i, b)
        k += 1
        if k > _STEP_GUARD:
            raise RuntimeError(f"f({i}, .) chain exceeded {_STEP_GUARD} steps")
    return k - 1


def pairing(model: CrystalModel, i: int, b: Element) -> int:
    """<wt(b), h_i> = wt[i-1] - wt[i] (1-based color)."""
    wt = model.weight(b)
    return wt[i - 1] - wt[i]


def weyl_s(model: CrystalModel, i: int, b: Element) -> Element:
    """Weyl reflection S_i on crystal elements."""
    k = pairing(model, i, b)
    op = model.f if k >= 0 else model.e
    for _ in range(abs(k)):
        b = op(i, b)
        if b is None:
            raise RuntimeError(f"S_{i} ran off the crystal")
    return b


def weyl_w(model: CrystalModel, word: Sequence[int], b: Element) -> Element:
    """Apply S_{word[0]} S_{word[1]} ... as composition (rightmost first)."""
    for i in reversed(tuple(word)):
        b = weyl_s(model, i, b)
    return b


def w_word(i: int) -> list[int]:
    """Reduced word with S_w = S_2..S_i S_1..S_{i-1}, used for color i-bar."""
    return list(range(2, i + 1)) + list(range(1, i))


def w0_word(n: int) -> list[int]:
    """Long element word: (1..n-1)(1..n-2)...(1)."""
    return [i for k in range(n - 1, 0, -1) for i in range(1, k + 1)]


def odd_e_bar(model: CrystalModel, i: int, b: Element) -> Optional[Element]:
    """The raising operator of color i-bar, reduced to e_bar by Weyl moves."""
    if model.e_bar is None:
        raise ValueError(f"model {model.name} has no odd operators")
    if i == 1:
        return model.e_bar(b)
    word = w_word(i)
    c = weyl_w(model, word, b)
    c = model.e_bar(c)
    if c is None:
        return None
    return weyl_w(model, list(reversed(word)), c)


def odd_f_bar(model: CrystalModel, i: int, b: Element) -> Optional[Element]:
    if model.f_bar is None:
        raise ValueError(f"model {model.name} has no odd operators")
    if i == 1:
        return model.f_bar(b)
    word = w_word(i)
    c = weyl_w(model, word, b)
    c = model.f_bar(c)
    if c is None:
        return None
    return weyl_w(model, list(reversed(word)), c)


def is_q_highest(model: CrystalModel, b: Element) -> bool:
    """Killed by every even raising operator and every odd one."""
    for i in range(1, model.n):
        if model.e(i, b) is not None:
            return False
    for i in range(1, model.n):
        if odd_e_bar(model, i, b) is not None:
            return False
    return True


# ---------------------------------------------------------------------------
# component closure and the edge graph

@dataclass
class CrystalGraph:
    model: CrystalModel
    vertices: list[Element]
    index: dict[Element, int]
    # keyed by (color, source index); e_edges computed from model.e /
    # model.e_bar independently of f_edges, so mispaired arrows show up
    f_edges: dict[tuple[Color, int], int]
    e_edges: dict[tuple[Color, int], int]

    @property
    def colors(self) -> list[Color]:
        return self.model.colors

    def __len__(self) -> int:
        return len(self.vertices)


def _cap_from_env(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get("QCRYSTAL_MAX_VERTICES", DEFAULT_CAP))


def component(model: CrystalModel, seed: Element,
              cap: Optional[int] = None) -> CrystalGraph:
    """BFS closure of seed under all e/f arrows, as an explicit graph.

    Vertices are sorted by their canonical encoding, so two runs over the
    same component produce identical graphs.  Raises CapExceeded if the
    closure grows past the cap (QCRYSTAL_MAX_VERTICES or 10**6).
    """
    cap = _cap_from_env(cap)
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for b in frontier:
            for c in _neighbors(model, b):
                if c not in seen:
                    seen.add(c)
                    if len(seen) > cap:
                        raise CapExceeded(cap)
                    nxt.append(c)
        frontier = nxt
    vertices = sorted(seen, key=model.fmt)
    index = {b: k for k, b in enumerate(vertices)}
    f_edges: dict[tuple[Color, int], int] = {}
    e_edges: dict[tuple[Color, int], int] = {}
    for b in vertices:
        u = index[b]
        for i in range(1, model.n):
            c = model.f(i, b)
            if c is not None:
                f_edges[(i, u)] = index[c]
            c = model.e(i, b)
            if c is not None:
                e_edges[(i, u)] = index[c]
        if model.f_bar is not None:
            c = model.f_bar(b)
            if c is not None:
                f_edges[("b1", u)] = index[c]
        if model.e_bar is not None:
            c = model.e_bar(b)
            if c is not None:
                e_edges[("b1", u)] = index[c]
    return CrystalGraph(model, vertices, index, f_edges, e_edges)


def _neighbors(model: CrystalModel, b: Element):
    for i in range(1, model.n):
        for op in (model.e, model.f):
            c = op(i, b)
            if c is not None:
                yield c
    for op in (model.e_bar, model.f_bar):
        if op is not None:
            c = op(b)
            if c is not None:
                yield c


# ---------------------------------------------------------------------------
# axiom checking

def _alpha(n: int, i: int) -> tuple[int, ...]:
    a = [0] * n
    a[i - 1] += 1
    a[i] -= 1
    return tuple(a)


def _vec_add(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(u, v))


def _graph_string(graph: CrystalGraph, edges: dict, color: Color,
                  u: int) -> Optional[int]:
    """Length of the color chain from vertex u, or None if it loops."""
    k = 0
    seen = {u}
    while (color, u) in edges:
        u = edges[(color, u)]
        k += 1
        if u in seen:
            return None
        seen.add(u)
    return k


def check_gl_axioms(graph: CrystalGraph) -> dict:
    """Check the gl(n) crystal conditions on every vertex of the graph."""
    model = graph.model
    failures: list[dict] = []

    def fail(condition: str, color: Color, u: int, detail: str) -> None:
        failures.append(
            {
                "condition": condition,
                "color": color,
                "vertex": model.fmt(graph.vertices[u]),
                "detail": detail,
            }
        )

    even = [i for i in graph.colors if isinstance(i, int)]
    eps_g: dict[tuple[int, int], int] = {}
    phi_g: dict[tuple[int, int], int] = {}
    for u in range(len(graph.vertices)):
        for i in even:
            ke = _graph_string(graph, graph.e_edges, i, u)
            kf = _graph_string(graph, graph.f_edges, i, u)
            if ke is None or kf is None:
                fail("gl1", i, u, "operator chain loops")
                continue
            eps_g[(i, u)] = ke
            phi_g[(i, u)] = kf
            p = pairing(model, i, graph.vertices[u])
            if kf != ke + p:
                fail("gl1", i, u, f"phi={kf}, eps={ke}, pairing={p}")
    for (i, u), v in sorted(graph.e_edges.items(), key=_edge_key):
        if not isinstance(i, int):
            continue
        wu = model.weight(graph.vertices[u])
        wv = model.weight(graph.vertices[v])
        if wv != _vec_add(wu, _alpha(model.n, i)):
            fail("gl2", i, u, f"e shifts weight {wu} -> {wv}")
        if (i, u) in eps_g and (i, v) in eps_g:
            if eps_g[(i, v)] != eps_g[(i, u)] - 1:
                fail("gl2", i, u, "eps does not drop by 1 along e")
            if phi_g[(i, v)] != phi_g[(i, u)] + 1:
                fail("gl2", i, u, "phi does not rise by 1 along e")
    for (i, u), v in sorted(graph.f_edges.items(), key=_edge_key):
        if not isinstance(i, int):
            continue
        wu = model.weight(graph.vertices[u])
        wv = model.weight(graph.vertices[v])
        if _vec_add(wv, _alpha(model.n, i)) != wu:
            fail("gl3", i, u, f"f shifts weight {wu} -> {wv}")
        if (i, u) in eps_g and (i, v) in eps_g:
            if eps_g[(i, v)] != eps_g[(i, u)] + 1:
                fail("gl3", i, u, "eps does not rise by 1 along f")
            if phi_g[(i, v)] != phi_g[(i, u)] - 1:
                fail("gl3", i, u, "phi does not drop by 1 along f")
    for (i, u), v in sorted(graph.f_edges.items(), key=_edge_key):
        if not isinstance(i, int):
            continue
        if graph.e_edges.get((i, v)) != u:
            fail("gl4", i, u, "f-arrow without matching e-arrow")
    for (i, v), u in sorted(graph.e_edges.items(), key=_edge_key):
        if not isinstance(i, int):
            continue
        if graph.f_edges.get((i, u)) != v:
            fail("gl4", i, v, "e-arrow without matching f-arrow")
    return {
        "suite": "gl-axioms",
        "checked": len(graph.vertices),
        "failures": failures,
    }


def check_q_axioms(graph: CrystalGraph) -> dict:
    """Check the q(n) crystal conditions (includes the gl(n) ones)."""
    model = graph.model
    report = check_gl_axioms(graph)
    failures = report["failures"]

    def fail(condition: str, color: Color, u: int, detail: str) -> None:
        failures.append(
            {
                "condition": condition,
                "color": color,
                "vertex": model.fmt(graph.vertices[u]),
                "detail": detail,
            }
        )

    if model.e_bar is None or model.f_bar is None:
        fail("q0", "b1", 0, "model lacks odd operators")
        return {
            "suite": "q-axioms",
            "checked": len(graph.vertices),
            "failures": failures,
        }
    for u, b in enumerate(graph.vertices):
        if any(x < 0 for x in model.weight(b)):
            fail("q2", "b1", u, f"negative weight {model.weight(b)}")
    alpha1 = _alpha(model.n, 1)
    for (i, u), v in sorted(graph.e_edges.items(), key=_edge_key):
        if i != "b1":
            continue
        wu = model.weight(graph.vertices[u])
        wv = model.weight(graph.vertices[v])
        if wv != _vec_add(wu, alpha1):
            fail("q3", "b1", u, f"e_bar shifts weight {wu} -> {wv}")
    for (i, u), v in sorted(graph.f_edges.items(), key=_edge_key):
        if i != "b1":
            continue
        wu = model.weight(graph.vertices[u])
        wv = model.weight(graph.vertices[v])
        if _vec_add(wv, alpha1) != wu:
            fail("q3", "b1", u, f"f_bar shifts weight {wu} -> {wv}")
    for (i, u), v in sorted(graph.f_edges.items(), key=_edge_key):
        if i != "b1":
            continue
        if graph.e_edges.get(("b1", v)) != u:
            fail("q4", "b1", u, "f_bar-arrow without matching e_bar-arrow")
    for (i, v), u in sorted(graph.e_edges.items(), key=_edge_key):
        if i != "b1":
            continue
        if graph.f_edges.get(("b1", u)) != v:
            fail("q4", "b1", v, "e_bar-arrow without matching f_bar-arrow")

    def compose(first: tuple, second: tuple, u: int) -> Optional[int]:
        edges1, c1 = first
        edges2, c2 = second
        v = edges1.get((c1, u))
        if v is None:
            return None
        return edges2.get((c2, v))

    odd_pairs = [(graph.e_edges, "b1"), (graph.f_edges, "b1")]
    for i in range(3, model.n):
        even_pairs = [(graph.e_edges, i), (graph.f_edges, i)]
        for odd in odd_pairs:
            for ev in even_pairs:
                for u in range(len(graph.vertices)):
                    left = compose(odd, ev, u)
                    right = compose(ev, odd, u)
                    if left != right:
                        kind = "e" if odd[0] is graph.e_edges else "f"
                        ekind = "e" if ev[0] is graph.e_edges else "f"
                        fail(
                            "q5i",
                            i,
                            u,
                            f"{kind}_bar1 and {ekind}_{i} do not commute",
                        )
        for (c, u), v in sorted(graph.e_edges.items(), key=_edge_key):
            if c != "b1":
                continue
            bu, bv = graph.vertices[u], graph.vertices[v]
            if eps(model, i, bu) != eps(model, i, bv):
                fail("q5ii", i, u, f"eps_{i} changes along e_bar")
            if phi(model, i, bu) != phi(model, i, bv):
                fail("q5ii", i, u, f"phi_{i} changes along e_bar")
    return {
        "suite": "q-axioms",
        "checked": len(graph.vertices),
        "failures": failures,
    }


def _edge_key(item):
    (color, u), v = item
    return (u, _color_key(color), v)


def _color_key(color: Color):
    return (0, color) if isinstance(color, int) else (1, 0)


# ---------------------------------------------------------------------------
# extreme vertices

def find_highest(graph: CrystalGraph) -> Element:
    """The unique vertex killed by every raising operator."""
    model = graph.model
    found = []
    for u, b in enumerate(graph.vertices):
        if any((i, u) in graph.e_edges for i in range(1, model.n)):
            continue
        if model.e_bar is not None:
            if ("b1", u) in graph.e_edges:
                continue
            if any(
                odd_e_bar(model, i, b) is not None for i in range(2, model.n)
            ):
                continue
        found.append(b)
    if len(found) != 1:
        raise ValueError(
            f"expected one highest vertex, found {len(found)}: "
            f"{[model.fmt(b) for b in found]}"
        )
    return found[0]


def find_lowest(graph: CrystalGraph) -> Element:
    """The unique vertex carried to the highest one by S_{w_0}."""
    model = graph.model
    word = w0_word(model.n)
    found = [
        b
        for b in graph.vertices
        if is_q_highest(model, weyl_w(model, word, b))
    ]
    if len(found) != 1:
        raise ValueError(
            f"expected one lowest vertex, found {len(found)}: "
            f"{[model.fmt(b) for b in found]}"
        )
    return found[0]


# ---------------------------------------------------------------------------
# export

def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: CrystalGraph) -> str:
    """DOT text with one arrow per lowering operator, labeled by color."""
    model = graph.model
    lines = [f"digraph {model.name} {{", "  rankdir=TB;"]
    for b in graph.vertices:
        lines.append(f"  {_dot_quote(model.fmt(b))};")
    for (color, u), v in sorted(graph.f_edges.items(), key=_edge_key):
        src = _dot_quote(model.fmt(graph.vertices[u]))
        dst = _dot_quote(model.fmt(graph.vertices[v]))
        lines.append(f"  {src} -> {dst} [label=\"{color}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: CrystalGraph) -> dict:
    """Plain-dict form: vertices, f-arrows, and weights, all canonical."""
    model = graph.model
    names = [model.fmt(b) for b in graph.vertices]
    edges = [
        {"src": names[u], "color": color, "dst": names[v]}
        for (color, u), v in sorted(graph.f_edges.items(), key=_edge_key)
    ]
    return {
        "vertices": names,
        "edges": edges,
        "weights": {names[u]: list(model.weight(b)) for u, b in enumerate(graph.vertices)},
    }
