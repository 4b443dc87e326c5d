"""Exact character tables for the built-in rank-two groups.

Constructed directly from the matrix groups: determinant powers and the
natural representation for the primitive group, torus characters and their
inductions for the imprimitive wreath group.  Row names follow the usual
conventions: ``phi_{d,b}`` (dimension and fake-degree valuation) for the
primitive group, multipartition strings for the wreath group.
"""

from __future__ import annotations

from .cyclotomic import Cyclo, zeta
from .orders import CharTable, cyclic_char_table, fake_degree_char
from .reflection import Matrix, ReflectionCoset

__all__ = ["char_table", "feg_map"]


def char_table(G: ReflectionCoset) -> CharTable:
    """Character table of a built-in group, verified for orthogonality."""
    if G.name.startswith("Z_"):
        return cyclic_char_table(G)
    if G.name == "G4":
        table = _table_g4(G)
    elif G.name == "G(3,1,2)":
        table = _table_g312(G)
    else:
        raise ValueError(f"no character table construction for {G.name!r}")
    table.verify_orthogonality()
    return table


def feg_map(table: CharTable) -> dict[str, "LaurentPoly"]:
    return {name: fake_degree_char(table, name) for name in table.names}


def _table_g4(G: ReflectionCoset) -> CharTable:
    reps = [G.elements[c.rep_index] for c in G.classes]
    dets = [g.det() for g in reps]
    traces = [g.trace() for g in reps]
    sym2 = [(g.trace() * g.trace() + (g @ g).trace()) / 2 for g in reps]
    rows: list[tuple[int, tuple[Cyclo, ...]]] = []
    for k in range(3):
        rows.append((1, tuple(d ** k for d in dets)))
        rows.append((2, tuple(t * d ** k for t, d in zip(traces, dets))))
    rows.append((3, tuple(sym2)))
    # name each row phi_{d,b} by its dimension and fake-degree valuation
    named: dict[str, tuple[Cyclo, ...]] = {}
    order: list[str] = []
    for dim, vals in rows:
        tmp = CharTable(G, ("x",), {"x": vals})
        b = fake_degree_char(tmp, "x").valuation()
        name = f"phi_{{{dim},{b}}}"
        named[name] = vals
        order.append(name)
    order.sort(key=_phi_key)
    return CharTable(G, tuple(order), named)


def _phi_key(name: str) -> tuple[int, int]:
    d, b = name[5:-1].split(",")
    return int(b), int(d)


def _monomial_data(g: Matrix) -> tuple[bool, int, int, int]:
    """(is_diagonal, exponent sum, diag exponent 0, diag exponent 1)."""
    diag = all(g.rows[i][j].is_zero() for i in range(2) for j in range(2) if i != j)
    exps = []
    for i in range(2):
        for j in range(2):
            c = g.rows[i][j]
            if not c.is_zero():
                d, a = c.root_of_unity_order()
                exps.append(a * (3 // d) % 3)
    return diag, sum(exps) % 3, exps[0], exps[1]


def _table_g312(G: ReflectionCoset) -> CharTable:
    reps = [G.elements[c.rep_index] for c in G.classes]
    data = [_monomial_data(g) for g in reps]
    names: list[str] = []
    values: dict[str, tuple[Cyclo, ...]] = {}

    def put(name, vals):
        names.append(name)
        values[name] = tuple(vals)

    for c in range(3):
        for eps in range(2):
            put(_mp_name_linear(c, eps),
                [zeta(3, c * s) * Cyclo.rational((-1) ** (eps * (0 if diag else 1)))
                 for diag, s, _, _ in data])
    for alpha, beta in ((0, 1), (0, 2), (1, 2)):
        vals = []
        for diag, _, a, b in data:
            if not diag:
                vals.append(Cyclo.rational(0))
            else:
                vals.append(zeta(3, alpha * a + beta * b) + zeta(3, alpha * b + beta * a))
        put(_mp_name_pair(alpha, beta), vals)
    return CharTable(G, tuple(names), values)


def _mp_name_linear(c: int, eps: int) -> str:
    slots = ["", "", ""]
    slots[c] = "11" if eps else "2"
    return ".".join(slots)


def _mp_name_pair(alpha: int, beta: int) -> str:
    slots = ["", "", ""]
    slots[alpha] = "1"
    slots[beta] = "1"
    return ".".join(slots)
