"""Deterministic generators for the six labeled graph families.

Each generator returns a :class:`FamilyInstance`: the graph plus two role
maps tying every vertex and edge back to its structural name (``u3``, the
rung at position 2, ...). All weights default to 1 so the max-membership
edge rule holds on every defined edge; the closed-form labelings treat
structure only, never weights.

Families and their defining edge sets (1-based indices):

    path       v1..vn          e_i = {v_i, v_{i+1}}              n-1 edges
    cycle      v1..vn          path edges plus e_n = {v_n, v_1}  n   edges
    star       u0, u1..ut      e_i = {u_0, u_i}                  t   edges
    comb       u1..un, v1..vn  spine {u_i, u_{i+1}}, pendant {u_i, v_i}
    ladder     u1..un, v1..vn  rails {u_i,u_{i+1}}, {v_i,v_{i+1}}, rungs {u_i,v_i}
    path_star  u,v,a,b 1..n    {u_i,u_{i+1}}, {u_i,v_i}, {v_i,a_i}, {v_i,b_i}
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .graph import Edge, RoughGraph

__all__ = [
    "FamilyInstance",
    "FAMILY_NAMES",
    "make_path",
    "make_cycle",
    "make_star",
    "make_comb",
    "make_ladder",
    "make_path_star",
    "make_family",
]

ONE = Fraction(1)

Role = tuple[str, int]  # (kind, index), e.g. ("u", 3) or ("uv", 2)


@dataclass(frozen=True)
class FamilyInstance:
    """A generated family member with structural role maps.

    ``vertex_roles`` covers every vertex exactly once; ``edge_roles`` keys
    every edge of the graph that carries a structural name (always all of
    them for these families).
    """

    family: str
    n: int
    graph: RoughGraph
    vertex_roles: dict[str, Role]
    edge_roles: dict[Edge, Role]

    def edge_by_role(self, kind: str, index: int) -> Edge:
        for edge, role in self.edge_roles.items():
            if role == (kind, index):
                return edge
        raise ParameterError(f"no edge with role ({kind!r}, {index})")


def _instance(family: str, n: int, vertices: list[tuple[str, Role]],
              edges: list[tuple[Edge, Role]]) -> FamilyInstance:
    g = RoughGraph.build([(vid, ONE) for vid, _ in vertices], [e for e, _ in edges])
    return FamilyInstance(
        family=family,
        n=n,
        graph=g,
        vertex_roles={vid: role for vid, role in vertices},
        edge_roles={g.canonical_edge(*e): role for e, role in edges},
    )


def make_path(n: int) -> FamilyInstance:
    """Path v1..vn."""
    if n < 2:
        raise ParameterError(f"path needs n >= 2, got {n}")
    vertices = [(f"v{i}", ("v", i)) for i in range(1, n + 1)]
    edges = [((f"v{i}", f"v{i+1}"), ("e", i)) for i in range(1, n)]
    return _instance("path", n, vertices, edges)


def make_cycle(n: int) -> FamilyInstance:
    """Cycle v1..vn; the closing edge {v_n, v_1} is e_n."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    vertices = [(f"v{i}", ("v", i)) for i in range(1, n + 1)]
    edges = [((f"v{i}", f"v{i+1}"), ("e", i)) for i in range(1, n)]
    edges.append(((f"v{n}", "v1"), ("e", n)))
    return _instance("cycle", n, vertices, edges)


def make_star(t: int) -> FamilyInstance:
    """Star with apex u0 and leaves u1..ut."""
    if t < 2:
        raise ParameterError(f"star needs t >= 2, got {t}")
    vertices = [("u0", ("u", 0))] + [(f"u{i}", ("u", i)) for i in range(1, t + 1)]
    edges = [(("u0", f"u{i}"), ("e", i)) for i in range(1, t + 1)]
    return _instance("star", t, vertices, edges)


def make_comb(n: int) -> FamilyInstance:
    """Spine u1..un with one pendant v_i per spine vertex; 2n-1 edges."""
    if n < 3:
        raise ParameterError(f"comb needs n >= 3, got {n}")
    vertices = [(f"u{i}", ("u", i)) for i in range(1, n + 1)]
    vertices += [(f"v{i}", ("v", i)) for i in range(1, n + 1)]
    edges = [((f"u{i}", f"u{i+1}"), ("uu", i)) for i in range(1, n)]
    edges += [((f"u{i}", f"v{i}"), ("uv", i)) for i in range(1, n + 1)]
    return _instance("comb", n, vertices, edges)


def make_ladder(n: int) -> FamilyInstance:
    """Two rails u1..un and v1..vn joined by n rungs; 3n-2 edges."""
    if n < 2:
        raise ParameterError(f"ladder needs n >= 2, got {n}")
    vertices = [(f"u{i}", ("u", i)) for i in range(1, n + 1)]
    vertices += [(f"v{i}", ("v", i)) for i in range(1, n + 1)]
    edges = [((f"u{i}", f"u{i+1}"), ("uu", i)) for i in range(1, n)]
    edges += [((f"v{i}", f"v{i+1}"), ("vv", i)) for i in range(1, n)]
    edges += [((f"u{i}", f"v{i}"), ("uv", i)) for i in range(1, n + 1)]
    return _instance("ladder", n, vertices, edges)


def make_path_star(n: int) -> FamilyInstance:
    """Path u1..un; each u_i carries v_i, which carries leaves a_i, b_i."""
    if n < 1:
        raise ParameterError(f"path_star needs n >= 1, got {n}")
    vertices = []
    for kind in ("u", "v", "a", "b"):
        vertices += [(f"{kind}{i}", (kind, i)) for i in range(1, n + 1)]
    edges = [((f"u{i}", f"u{i+1}"), ("uu", i)) for i in range(1, n)]
    edges += [((f"u{i}", f"v{i}"), ("uv", i)) for i in range(1, n + 1)]
    edges += [((f"v{i}", f"a{i}"), ("va", i)) for i in range(1, n + 1)]
    edges += [((f"v{i}", f"b{i}"), ("vb", i)) for i in range(1, n + 1)]
    return _instance("path_star", n, vertices, edges)


_GENERATORS = {
    "path": make_path,
    "cycle": make_cycle,
    "star": make_star,
    "comb": make_comb,
    "ladder": make_ladder,
    "path_star": make_path_star,
}

FAMILY_NAMES = tuple(_GENERATORS)


def make_family(family: str, n: int) -> FamilyInstance:
    """Dispatch by family name; ``n`` is the leaf count t for stars."""
    try:
        gen = _GENERATORS[family]
    except KeyError:
        raise ParameterError(
            f"unknown family {family!r}; choose from {', '.join(FAMILY_NAMES)}"
        ) from None
    return gen(n)
