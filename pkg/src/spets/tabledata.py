"""Table file formats, reference-data access and the construction pipelines.

The canonical table file is plain UTF-8 text::

    group Z_3
    conductor 3
    order x^4 + ...
    family 0 a=0 A=0
    1 | 1 | 1 | special
    family 1 a=1 A=2
    rho_{1,0} | ... | 1 | special
    ...

Rows are ``name | degree | fr | marker`` with the polynomial and monomial
grammars of the core modules; ``fr`` is ``?`` when undetermined and the
marker is one of ``special``, ``cospecial``, ``none``.  The reference data
directory is resolved through the ``SPETS_DATA`` environment variable with
the packaged data as default.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .chartables import char_table, feg_map
from .cyclotomic import Cyclo, zeta
from .hecke import CyclicHeckeParams
from .laurent import FracExpMonomial, LaurentPoly
from .orders import order_poly, subcoset_order
from .reflection import Matrix, ReflectionCoset, SubCoset, build_group
from .uch import (Family, SeriesDetermination, UchTable, UnipotentCharacter,
                  assign_families, cyclic_uch, determine_parameters,
                  ennola_transform, hc_series, principal_series)

__all__ = [
    "data_dir",
    "parse_uch",
    "emit_uch",
    "diff_tables",
    "TableDiff",
    "is_spetsial",
    "load_schur_data",
    "load_reference",
    "construct_uch",
]

_DEFAULT_DATA = Path(__file__).parent / "data"


def data_dir() -> Path:
    return Path(os.environ.get("SPETS_DATA", str(_DEFAULT_DATA)))


# -- the table file format ---------------------------------------------------------


def emit_uch(table: UchTable) -> str:
    """Canonical text for a table whose group is a builtin."""
    if not table.rows:
        raise ValueError("cannot emit an empty table")
    G = build_group(table.group)
    lines = [f"group {table.group}",
             f"conductor {G.field.conductor}",
             f"order {order_poly(G).serialize()}"]
    families = table.families or [Family(0, table.names(),
                                         min(r.a_val for r in table.rows),
                                         max(r.big_a for r in table.rows))]
    for fam in families:
        lines.append(f"family {fam.index} a={fam.a} A={fam.A}")
        for name in fam.members:
            row = table.row(name)
            fr = row.fr.serialize() if row.fr is not None else "?"
            if name == fam.special:
                marker = "special"
            elif name == fam.cospecial:
                marker = "cospecial"
            else:
                marker = "none"
            lines.append(f"{name} | {row.degree.serialize()} | {fr} | {marker}")
    return "\n".join(lines) + "\n"


_FAMILY_RE = re.compile(r"family (\d+) a=(-?\d+) A=(-?\d+)")


def parse_uch(text: str) -> UchTable:
    """Parse the canonical table format; inverse of :func:`emit_uch`."""
    lines = text.splitlines()
    if len(lines) < 4 or not lines[0].startswith("group "):
        raise ValueError("malformed table file: missing header")
    group = lines[0][6:].strip()
    if not lines[1].startswith("conductor ") or not lines[2].startswith("order "):
        raise ValueError("malformed table file: missing conductor/order header")
    rows: list[UnipotentCharacter] = []
    families: list[Family] = []
    current: Family | None = None
    for lineno, line in enumerate(lines[3:], start=4):
        if not line.strip():
            continue
        m = _FAMILY_RE.fullmatch(line.strip())
        if m:
            current = Family(int(m.group(1)), [], int(m.group(2)), int(m.group(3)))
            families.append(current)
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 4 '|'-separated fields")
        if current is None:
            raise ValueError(f"line {lineno}: row before any family header")
        name, deg_s, fr_s, marker = parts
        try:
            deg = LaurentPoly.parse(deg_s)
            fr = None if fr_s == "?" else FracExpMonomial.parse(fr_s)
        except (ValueError, ArithmeticError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        if marker not in ("special", "cospecial", "none"):
            raise ValueError(f"line {lineno}: unknown marker {marker!r}")
        row = UnipotentCharacter(name, deg, fr, family=current.index,
                                 marker={"special": "*", "cospecial": "#",
                                         "none": ""}[marker])
        if marker == "special":
            current.special = name
        if marker == "cospecial":
            current.cospecial = name
        current.members.append(name)
        rows.append(row)
    for fam in families:
        if fam.special is None:
            raise ValueError(f"family {fam.index} lacks a special member")
        if fam.cospecial is None:
            fam.cospecial = fam.special
    if not rows:
        raise ValueError("empty table")
    return UchTable(group, rows, families)


def load_reference(name: str) -> UchTable:
    path = data_dir() / name
    return parse_uch(path.read_text(encoding="utf-8"))


# -- structured diff ---------------------------------------------------------------


@dataclass
class TableDiff:
    mismatches: list[str] = dc_field(default_factory=list)
    renames: list[tuple[str, str]] = dc_field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        if self.empty and not self.renames:
            return "tables identical"
        out = [f"MISMATCH {m}" for m in self.mismatches]
        out.extend(f"renamed {a} -> {b}" for a, b in self.renames)
        return "\n".join(out)


def diff_tables(a: UchTable, b: UchTable) -> TableDiff:
    """Match rows by degree and Fr; report sign flips, renames, families.

    Rows whose sign is unresolved on either side are matched up to sign
    silently; a sign flip between two resolved rows is a mismatch entry.
    """
    diff = TableDiff()
    pair: dict[str, str] = {}
    used: set[str] = set()

    def find(row, sign: int):
        for cand in b.rows:
            if cand.name in used or cand.degree != row.degree * sign:
                continue
            if row.fr is not None and cand.fr is not None and row.fr != cand.fr:
                continue
            return cand
        return None

    ordered = sorted(a.rows, key=lambda r: not r.sign_resolved)
    for row in ordered:
        cand = find(row, 1)
        flip = False
        if cand is None and not row.sign_resolved:
            cand = find(row, -1)
        if cand is None:
            other = find(row, -1)
            if other is not None and not other.sign_resolved:
                cand = other
            elif other is not None:
                cand = other
                flip = True
        if cand is None:
            diff.mismatches.append(f"unmatched row {row.name} in first table")
            continue
        used.add(cand.name)
        pair[row.name] = cand.name
        if flip:
            diff.mismatches.append(f"sign-only difference on {row.name}")
        if row.name != cand.name:
            diff.renames.append((row.name, cand.name))
    for cand in b.rows:
        if cand.name not in used:
            diff.mismatches.append(f"unmatched row {cand.name} in second table")
    # family structure on matched rows
    if a.families and b.families:
        fam_a = {r.name: r.family for r in a.rows}
        fam_b = {r.name: r.family for r in b.rows}
        blocks_a: dict[int, set[str]] = {}
        for n, f in fam_a.items():
            if n in pair:
                blocks_a.setdefault(f, set()).add(pair[n])
        blocks_b: dict[int, set[str]] = {}
        for n, f in fam_b.items():
            if n in used:
                blocks_b.setdefault(f, set()).add(n)
        if sorted(map(sorted, blocks_a.values())) != sorted(map(sorted, blocks_b.values())):
            diff.mismatches.append("family partitions differ")
        else:
            for fa, names in blocks_a.items():
                fb = fam_b[next(iter(names))]
                sp_a = next(f for f in a.families if f.index == fa).special
                sp_b = next(f for f in b.families if f.index == fb).special
                if sp_a in pair and pair[sp_a] != sp_b:
                    diff.mismatches.append(
                        f"special member differs in family {fa}")
    return diff


# -- the spetsial classification ------------------------------------------------------


# well-generated exceptionals generated by involutive reflections,
# plus the listed extra spetsial exceptionals
_SPETSIAL_GN = {23, 24, 27, 28, 29, 30, 33, 34, 35, 36, 37} | {4, 6, 8, 14,
                                                               25, 26, 32}


def is_spetsial(name: str) -> bool:
    """Whether a group is in the spetsial classification list.

    Covers ``G(d,1,r)``, ``G(e,e,r)``, the well-generated genuine-reflection
    exceptional groups, and G4, G6, G8, G14, G25, G26, G32.
    """
    key = name.replace(" ", "")
    m = re.fullmatch(r"Z_?(\d+)", key)
    if m:
        return True  # Z_e = G(e,1,1)
    m = re.fullmatch(r"G\((\d+),(\d+),(\d+)\)", key)
    if m:
        d, e, r = map(int, m.groups())
        return e == 1 or d == e
    m = re.fullmatch(r"G_?(\d+)", key)
    if m:
        n = int(m.group(1))
        if not 4 <= n <= 37:
            raise ValueError(f"unknown exceptional group: {name!r}")
        return n in _SPETSIAL_GN
    raise ValueError(f"cannot identify group {name!r}")


# -- Schur reference data --------------------------------------------------------------


def load_schur_data(filename: str) -> list[tuple[str, LaurentPoly, int]]:
    """Rows ``name | Schur element | character degree`` from a data file."""
    out = []
    for line in (data_dir() / filename).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, poly_s, dim_s = (p.strip() for p in line.split("|"))
        out.append((name, LaurentPoly.parse(poly_s), int(dim_s)))
    return out


# -- construction pipelines -------------------------------------------------------------


@dataclass(frozen=True)
class HCDatum:
    """A 1-cuspidal pair with cyclic relative algebra."""
    cusp_name: str
    levi_gen: int              # index of the generating reflection of W_L
    deg_lambda: LaurentPoly
    fr_lambda: FracExpMonomial
    rel_params: CyclicHeckeParams
    rel_names: tuple[str, ...]


@dataclass
class PipelineResult:
    table: UchTable
    specs: dict[tuple[int, int], SeriesDetermination]


def _levi_order(G: ReflectionCoset, gen_index: int) -> LaurentPoly:
    s = G.gens[gen_index]
    elems = []
    m = Matrix.identity(G.rank)
    while True:
        elems.append(m)
        m = m @ s
        if m == elems[0]:
            break
    sub = SubCoset(G, tuple(elems), Matrix.identity(G.rank), len(elems))
    return subcoset_order(sub, "compact")


def _sqrt_m3() -> Cyclo:
    return zeta(3) - zeta(3, 2)


def _g4_hc() -> HCDatum:
    x = LaurentPoly.x()
    return HCDatum(
        cusp_name="Z_3", levi_gen=0,
        deg_lambda=(x * (x - 1)) * (_sqrt_m3() / 3),
        fr_lambda=FracExpMonomial.of(zeta(3, 2)),
        rel_params=CyclicHeckeParams.of(["x^3", "-1"]),
        rel_names=("2", "11"))


def _g312_hc() -> HCDatum:
    x = LaurentPoly.x()
    return HCDatum(
        cusp_name="Z_3", levi_gen=0,
        deg_lambda=(x * (x - 1)) * (_sqrt_m3() / 3),
        fr_lambda=FracExpMonomial.of(zeta(3, 2)),
        rel_params=CyclicHeckeParams.of(["1", "(E(3,1))*x^2", "(E(3,2))*x^2"]),
        rel_names=("1", "zeta3", "zeta3^2"))


_PIPELINES: dict[str, dict] = {
    "G4": dict(
        schur_file="schur_g4.txt",
        hc=[_g4_hc()],
        ennola=[zeta(2)],
        cuspidal_names=["G_4"],
        zeta_series=[(4, 1), (3, 1)],
    ),
    "G(3,1,2)": dict(
        schur_file="schur_g312.txt",
        hc=[_g312_hc()],
        ennola=[zeta(3)],
        cuspidal_names=["G_{3,1,2}^{103}", "G_{3,1,2}^{130}"],
        zeta_series=[(6, 1), (6, 5), (2, 1)],
    ),
}


def construct_uch(name: str) -> PipelineResult:
    """Run the full construction pipeline for a builtin group.

    Stages: principal series from ingested Schur data; Harish-Chandra series
    above the shipped cuspidal data; Ennola closure under the center (new
    degrees become cuspidal characters); parameter determination of the
    regular eigenvalue series, fixing Frobenius eigenvalues; family
    partition.
    """
    key = name.replace(" ", "")
    m = re.fullmatch(r"Z_?(\d+)", key)
    if m:
        return PipelineResult(cyclic_uch(int(m.group(1))), {})
    G = build_group(name)
    if G.name not in _PIPELINES:
        raise ValueError(f"no construction pipeline for {name!r}")
    cfg = _PIPELINES[G.name]
    fm = feg_map(char_table(G))

    rows = principal_series(G, Matrix.identity(G.rank),
                            schur_data=load_schur_data(cfg["schur_file"]))
    table = UchTable(G.name, rows)

    for datum in cfg["hc"]:
        table.rows.extend(hc_series(
            G, _levi_order(G, datum.levi_gen), datum.deg_lambda,
            datum.fr_lambda, datum.cusp_name, datum.rel_params,
            datum.rel_names))

    pending = list(cfg["cuspidal_names"])

    def name_new(_src, _deg):
        return pending.pop(0) if pending else None

    for xi in cfg["ennola"]:
        while True:
            result = ennola_transform(table, xi, name_new)
            table = result.table
            if not result.new_names:
                break

    specs: dict[tuple[int, int], SeriesDetermination] = {}
    for d, a in cfg["zeta_series"]:
        det = determine_parameters(G, zeta(d, a), table)
        specs[(d, a)] = det
        for j, rname in det.assignment.items():
            if rname is None:
                continue
            row = table.row(rname)
            fr = det.frs[j]
            if fr is None:
                continue
            if row.fr is None:
                row.fr = fr
            elif row.fr != fr:
                raise ArithmeticError(
                    f"inconsistent Frobenius eigenvalue for {rname}")

    assign_families(table, fm)
    return PipelineResult(table, specs)
