"""Pictures: the category-level diagrams and the two-panel image of Sz on one hom.

DOT is the general format.  TikZ output is meant to be pasted into a LaTeX
document with ``\\usepackage{tikz}``.
"""

from __future__ import annotations

from collections import defaultdict

from .categories import HomPoset, SubsetMorphism, category_dot
from .core import hin_vertex

__all__ = ["category_dot", "category_tikz", "sz_figure_dot", "sz_figure_tikz", "sz_image"]


def _tex(elem) -> str:
    if isinstance(elem, SubsetMorphism):
        return r"\{" + ",".join(map(str, elem.members)) + r"\}"
    return elem.pretty()


def sz_image(n: int, p: int, q: int):
    """Image of the nondegenerate 0- and 1-simplices of ``C(Delta^n)(p,q)``.

    Returns ``(c_edges, g_nodes, g_edges)`` where ``c_edges`` are all strict
    pairs ``U < V`` and the ``g`` parts are their images under Hin.
    """
    c = HomPoset("c", n, p, q)
    elems = c.elements()
    c_edges = [(a, b) for a in elems for b in elems if a < b]
    g_nodes = {hin_vertex(u) for u in elems}
    g_edges = {(hin_vertex(a), hin_vertex(b)) for a, b in c_edges}
    g_edges = {(a, b) for a, b in g_edges if a != b}
    return c_edges, g_nodes, g_edges


def _layout(elems, rank) -> dict:
    by_rank = defaultdict(list)
    for e in elems:
        by_rank[rank(e)].append(e)
    pos = {}
    for r, group in by_rank.items():
        for i, e in enumerate(group):
            pos[e] = (2.2 * r, 1.4 * (i - (len(group) - 1) / 2))
    return pos


def sz_figure_dot(n: int, p: int, q: int) -> str:
    c_edges, g_nodes, g_edges = sz_image(n, p, q)
    c_elems = HomPoset("c", n, p, q).elements()
    g_poset = HomPoset("g", n, p, q)
    g_elems = g_poset.elements()
    covers = set(g_poset.cover_pairs())
    lines = [f'digraph "Sz_Delta^{n}({p},{q})" {{', "  rankdir=LR;", "  node [shape=box];"]
    lines.append(f'  subgraph cluster_c {{ label="C(Delta^{n})({p},{q})";')
    for i, u in enumerate(c_elems):
        lines.append(f'    c{i} [label="{u}"];')
    lines.append("  }")
    lines.append(f'  subgraph cluster_g {{ label="G(Delta^{n})({p},{q})";')
    for i, g in enumerate(g_elems):
        color = ', color=red, fontcolor=red' if g in g_nodes else ""
        lines.append(f'    g{i} [label="{g}"{color}];')
    lines.append("  }")
    ci = {u: i for i, u in enumerate(c_elems)}
    gi = {g: i for i, g in enumerate(g_elems)}
    for a, b in c_edges:
        lines.append(f"  c{ci[a]} -> c{ci[b]};")
    for a, b in sorted(covers | g_edges, key=lambda e: (gi[e[0]], gi[e[1]])):
        style = " [color=red]" if (a, b) in g_edges else ""
        lines.append(f"  g{gi[a]} -> g{gi[b]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sz_figure_tikz(n: int = 3, p: int = 0, q: int = 3) -> str:
    """Two panels: the ``C`` hom on the left, the ``G`` hom on the right with the image in red."""
    c_edges, g_nodes, g_edges = sz_image(n, p, q)
    c_elems = HomPoset("c", n, p, q).elements()
    g_poset = HomPoset("g", n, p, q)
    g_elems = g_poset.elements()
    covers = set(g_poset.cover_pairs())
    c_pos = _layout(c_elems, lambda u: q - p + 1 - len(u.members))
    g_pos = _layout(g_elems, lambda g: sum(g.positions))
    offset = max(x for x, _ in c_pos.values()) + 4.0
    ci = {u: i for i, u in enumerate(c_elems)}
    gi = {g: i for i, g in enumerate(g_elems)}
    out = [r"\begin{tikzpicture}[>=stealth, every node/.style={font=\small}]"]
    for u, (x, y) in c_pos.items():
        out.append(f"  \\node (c{ci[u]}) at ({x:.2f},{y:.2f}) {{${_tex(u)}$}};")
    for g, (x, y) in g_pos.items():
        color = "[red] " if g in g_nodes else ""
        out.append(f"  \\node{color}(g{gi[g]}) at ({x + offset:.2f},{y:.2f}) {{${_tex(g)}$}};")
    for a, b in c_edges:
        out.append(f"  \\draw[->] (c{ci[a]}) -- (c{ci[b]});")
    for a, b in sorted(covers | g_edges, key=lambda e: (gi[e[0]], gi[e[1]])):
        style = "->, red" if (a, b) in g_edges else "->"
        out.append(f"  \\draw[{style}] (g{gi[a]}) -- (g{gi[b]});")
    out.append(r"\end{tikzpicture}")
    return "\n".join(out) + "\n"


def category_tikz(kind: str, n: int) -> str:
    """Objects ``0..n`` on a line, one labelled arc per hom poset."""
    out = [r"\begin{tikzpicture}[>=stealth, every node/.style={font=\small}]"]
    for obj in range(n + 1):
        out.append(f"  \\node (o{obj}) at ({4 * obj},0) {{${obj}$}};")
    for p in range(n + 1):
        for q in range(p + 1, n + 1):
            elems = HomPoset(kind, n, p, q).elements()
            sep = r" \leq " if all(a <= b for a, b in zip(elems, elems[1:])) else "; "
            label = sep.join(_tex(e) for e in elems)
            bend = 20 * (q - p)
            out.append(
                f"  \\draw[->] (o{p}) to[bend left={bend}] node[above, sloped] {{${label}$}} (o{q});"
            )
    out.append(r"\end{tikzpicture}")
    return "\n".join(out) + "\n"
