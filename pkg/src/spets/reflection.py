"""Finite complex reflection groups as split reflection cosets.

Groups are given by exact generator matrices over a cyclotomic field and
enumerated explicitly (the built-ins are tiny).  The module computes
conjugacy classes, reflections and reflecting-hyperplane orbits, the
reflection degrees (via the Molien series), eigenspace data, regular
classes, centralizer cosets on maximal eigenspaces, and Sylow data for
K-cyclotomic polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .cyclotomic import Cyclo, CycloField, zeta
from .laurent import KCycloPoly, LaurentPoly

__all__ = [
    "Matrix",
    "ConjClass",
    "HyperplaneOrbit",
    "ReflectionCoset",
    "SubCoset",
    "build_group",
    "sylow_subcoset",
]


class Matrix:
    """Small immutable matrix over cyclotomic numbers."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Sequence[Sequence[Cyclo | int | Fraction]]):
        norm = tuple(
            tuple(c if isinstance(c, Cyclo) else Cyclo.rational(c) for c in row)
            for row in rows)
        object.__setattr__(self, "rows", norm)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(entries: Sequence[Cyclo | int]) -> "Matrix":
        n = len(entries)
        return Matrix([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        n = self.n
        return Matrix([
            [sum((self.rows[i][k] * other.rows[k][j] for k in range(n)),
                 Cyclo.rational(0)) for j in range(n)]
            for i in range(n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    def trace(self) -> Cyclo:
        return sum((self.rows[i][i] for i in range(self.n)), Cyclo.rational(0))

    def det(self) -> Cyclo:
        return self.charpoly().coeff(0) * ((-1) ** self.n)

    def charpoly(self) -> LaurentPoly:
        """det(x*I - M) as a polynomial in x."""
        n = self.n
        entries = [[LaurentPoly.constant(-self.rows[i][j]) +
                    (LaurentPoly.x() if i == j else LaurentPoly.zero())
                    for j in range(n)] for i in range(n)]
        return _poly_det(entries)

    def apply(self, vec: Sequence[Cyclo]) -> list[Cyclo]:
        return [sum((self.rows[i][j] * vec[j] for j in range(self.n)),
                    Cyclo.rational(0)) for i in range(self.n)]

    def scalar_mul(self, c: Cyclo) -> "Matrix":
        return Matrix([[c * v for v in row] for row in self.rows])

    def eigenspace(self, eigval: Cyclo) -> list[list[Cyclo]]:
        """Basis of ker(M - eigval*I) as a list of vectors."""
        n = self.n
        mat = [[self.rows[i][j] - (eigval if i == j else Cyclo.rational(0))
                for j in range(n)] for i in range(n)]
        return _kernel(mat)

    def fixed_space(self) -> list[list[Cyclo]]:
        return self.eigenspace(Cyclo.rational(1))

    def eigenvalues(self) -> list[Cyclo]:
        """Eigenvalues with multiplicity (elements have finite order)."""
        cp = self.charpoly()
        out: list[Cyclo] = []
        order = self.multiplicative_order()
        for k in range(order):
            lam = zeta(order, k)
            while cp.evaluate(lam).is_zero():
                cp = cp.exact_div(LaurentPoly.x() - LaurentPoly.constant(lam))
                out.append(lam)
                if cp == LaurentPoly.one():
                    return out
        return out

    def multiplicative_order(self) -> int:
        m = self
        ident = Matrix.identity(self.n)
        k = 1
        while m != ident:
            m = m @ self
            k += 1
            if k > 10000:  # pragma: no cover - defensive
                raise ArithmeticError("matrix does not have small finite order")
        return k

    def __repr__(self) -> str:
        rows = "; ".join(
            ", ".join(c.serialize() for c in row) for row in self.rows)
        return f"Matrix[{rows}]"


def _poly_det(entries: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    acc = LaurentPoly.zero()
    for j in range(n):
        if entries[0][j].is_zero():
            continue
        minor = [[entries[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = entries[0][j] * _poly_det(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def _kernel(mat: list[list[Cyclo]]) -> list[list[Cyclo]]:
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    aug = [list(r) for r in mat]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not aug[i][c].is_zero()), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Cyclo.rational(0)] * cols
        vec[fc] = Cyclo.rational(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -aug[ri][fc]
        basis.append(vec)
    return basis


def _solve_coords(basis: list[list[Cyclo]], target: list[Cyclo]) -> list[Cyclo]:
    """Coordinates of target in span(basis); raises when outside the span."""
    cols = len(basis)
    rows = len(target)
    aug = [[basis[j][i] for j in range(cols)] + [target[i]] for i in range(rows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not aug[i][c].is_zero()), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
    for i in range(r, rows):
        if not aug[i][cols].is_zero():
            raise ArithmeticError("vector not in span")
    sol = [Cyclo.rational(0)] * cols
    for ri, ci in pivots:
        sol[ci] = aug[ri][cols]
    return sol


@dataclass(frozen=True)
class ConjClass:
    rep_index: int
    rep_word: str
    size: int
    member_indices: tuple[int, ...]


@dataclass(frozen=True)
class HyperplaneOrbit:
    size: int          # nu_I: number of hyperplanes in the orbit
    e: int             # order of the cyclic pointwise fixator of a hyperplane
    rep_root_line: tuple[Cyclo, ...]  # canonical vector spanning a root line


class ReflectionCoset:
    """A split reflection coset: a finite reflection group with phi = 1."""

    def __init__(self, name: str, gens: Sequence[Matrix], field: CycloField,
                 order_bound: int = 20000):
        self.name = name
        self.field = field
        self.rank = gens[0].n if gens else 0
        self.gens = list(gens)
        self.elements, self.words = _enumerate(gens, order_bound)
        self.index = {m: i for i, m in enumerate(self.elements)}

    # -- group structure ------------------------------------------------
    @cached_property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def classes(self) -> list[ConjClass]:
        seen: set[int] = set()
        classes = []
        for i, g in enumerate(self.elements):
            if i in seen:
                continue
            members = sorted({self.index[h @ g @ _inverse_of(self, h)]
                              for h in self.elements})
            seen.update(members)
            rep = min(members, key=lambda j: (len(self.words[j]), self.words[j]))
            classes.append((rep, members))
        out = []
        for rep, members in classes:
            out.append(ConjClass(rep, self.words[rep], len(members), tuple(members)))
        return sorted(out, key=lambda c: self._class_key(c))

    def _class_key(self, c: ConjClass):
        g = self.elements[c.rep_index]
        eig = sorted(v.serialize() for v in g.eigenvalues())
        return (g.multiplicative_order(), c.size, eig, c.rep_word)

    def class_of(self, g: Matrix) -> int:
        i = self.index[g]
        for ci, c in enumerate(self.classes):
            if i in c.member_indices:
                return ci
        raise KeyError("element not classified")

    def centralizer(self, g: Matrix) -> list[Matrix]:
        return [h for h in self.elements if h @ g == g @ h]

    def inverse(self, g: Matrix) -> Matrix:
        return _inverse_of(self, g)

    # -- reflections and hyperplanes ---------------------------------------
    @cached_property
    def reflections(self) -> list[Matrix]:
        ident = Matrix.identity(self.rank)
        return [g for g in self.elements
                if g != ident and len(g.fixed_space()) == self.rank - 1]

    @property
    def n_ref(self) -> int:
        return len(self.reflections)

    @cached_property
    def _hyperplanes(self) -> dict[tuple, list[Matrix]]:
        """Root line (canonical) -> reflections fixing the complement."""
        out: dict[tuple, list[Matrix]] = {}
        for g in self.reflections:
            line = _canonical_line(_image_vector(g))
            out.setdefault(line, []).append(g)
        return out

    @property
    def n_hyp(self) -> int:
        return len(self._hyperplanes)

    @property
    def e_w(self) -> int:
        return self.n_ref + self.n_hyp

    @cached_property
    def hyperplane_orbits(self) -> list[HyperplaneOrbit]:
        lines = set(self._hyperplanes)
        orbits = []
        while lines:
            line = min(lines, key=lambda l: [c.serialize() for c in l])
            orbit = {line}
            frontier = [line]
            while frontier:
                l = frontier.pop()
                for g in self.gens:
                    img = _canonical_line(g.apply(list(l)))
                    if img not in orbit:
                        orbit.add(img)
                        frontier.append(img)
            lines -= orbit
            e = len(self._hyperplanes[line]) + 1
            orbits.append(HyperplaneOrbit(len(orbit), e, line))
        return sorted(orbits, key=lambda o: (-o.e, o.size))

    def fixator_of_line_complement(self, line: tuple[Cyclo, ...]) -> list[Matrix]:
        """Reflections (plus identity) fixing the hyperplane of a root line."""
        return [Matrix.identity(self.rank)] + self._hyperplanes[_canonical_line(list(line))]

    def pointwise_stabilizer(self, vectors: list[list[Cyclo]]) -> list[Matrix]:
        out = []
        for g in self.elements:
            if all(g.apply(v) == v for v in vectors):
                out.append(g)
        return out

    # -- degrees via Molien series ----------------------------------------
    @cached_property
    def degrees(self) -> list[tuple[int, Cyclo]]:
        """Pairs (d_i, zeta_i) from the coset Poincare polynomial."""
        return _molien_degrees([(self.elements[c.rep_index], c.size)
                                for c in self.classes], self.order, self.rank)

    # -- eigenspace data ------------------------------------------------------
    def max_eigenspace_dim(self, eigval: Cyclo) -> int:
        return max(len(self.elements[c.rep_index].eigenspace(eigval))
                   for c in self.classes)

    def regular_classes(self, eigval: Cyclo) -> list[int]:
        """Classes whose eigval-eigenspace has the maximal dimension."""
        best = self.max_eigenspace_dim(eigval)
        return [ci for ci, c in enumerate(self.classes)
                if len(self.elements[c.rep_index].eigenspace(eigval)) == best]

    def regular_element(self, eigval: Cyclo) -> Matrix:
        """A representative with maximal eigval-eigenspace, of maximal order."""
        cands = [self.elements[self.classes[ci].rep_index]
                 for ci in self.regular_classes(eigval)]
        return max(cands, key=lambda g: g.multiplicative_order())

    def centralizer_on_eigenspace(self, w: Matrix, eigval: Cyclo
                                  ) -> tuple["ReflectionCoset", dict[Matrix, Matrix]]:
        """The coset W(w*phi) acting on the eigenspace V(w, eigval).

        Returns the restricted group and the map from centralizer elements
        to their restricted matrices.
        """
        basis = w.eigenspace(eigval)
        if not basis:
            raise ValueError("empty eigenspace")
        cent = self.centralizer(w)
        mapping: dict[Matrix, Matrix] = {}
        restricted: list[Matrix] = []
        for v in cent:
            cols = [_solve_coords(basis, v.apply(b)) for b in basis]
            mat = Matrix([[cols[j][i] for j in range(len(basis))]
                          for i in range(len(basis))])
            mapping[v] = mat
            restricted.append(mat)
        gens = sorted(set(restricted), key=lambda m: _matrix_key(m))
        sub = ReflectionCoset(f"{self.name}|V(w)", gens, self.field)
        return sub, mapping


def _matrix_key(m: Matrix):
    return [c.serialize() for row in m.rows for c in row]


def _inverse_of(G: ReflectionCoset, g: Matrix) -> Matrix:
    k = g.multiplicative_order()
    out = Matrix.identity(g.n)
    for _ in range(k - 1):
        out = out @ g
    return out


def _enumerate(gens: Sequence[Matrix], bound: int) -> tuple[list[Matrix], list[str]]:
    if not gens:
        return [Matrix.identity(1)], [""]
    ident = Matrix.identity(gens[0].n)
    names = "stuvwabcdefghijklmnopqr"
    elements = [ident]
    seen = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for gen in gens:
                h = g @ gen
                if h not in seen:
                    seen[h] = len(elements)
                    elements.append(h)
                    nxt.append(h)
            if len(elements) > bound:
                raise ArithmeticError("group enumeration exceeded bound")
        frontier = nxt
    # assign breadth-first minimal words
    words = [""] * len(elements)
    done = {0}
    frontier_idx = [0]
    while frontier_idx:
        nxt_idx = []
        for i in frontier_idx:
            for gi, gen in enumerate(gens):
                j = seen[elements[i] @ gen]
                if j not in done:
                    done.add(j)
                    label = names[gi] if gi < len(names) else f"g{gi}."
                    words[j] = words[i] + label
                    nxt_idx.append(j)
        frontier_idx = nxt_idx
    return elements, words


def coset_poincare(class_reps: list[tuple[Matrix, int]], order: int, rank: int
                   ) -> LaurentPoly:
    """P = prod(1 - zeta_i x^{d_i}), the inverse of the coset Molien series."""
    # the sum of degrees is at most |W| * rank, a safe truncation bound
    bound = order * rank + 1
    acc = [Cyclo.rational(0)] * (bound + 1)
    for g, size in class_reps:
        cp = g.charpoly()  # det(xI - g)
        # det(1 - x g) = x^rank * cp(1/x) evaluated formally
        det = LaurentPoly([(rank - e, c) for e, c in cp.coeffs])
        inv = _series_invert(det, bound)
        for e, c in inv:
            acc[e] = acc[e] + c * size
    molien = [(e, c / order) for e, c in enumerate(acc)]
    poincare = _series_invert(LaurentPoly(
        [(e, c) for e, c in molien if not c.is_zero()]), bound)
    return LaurentPoly([(e, c) for e, c in poincare])


def _molien_degrees(class_reps: list[tuple[Matrix, int]], order: int, rank: int
                    ) -> list[tuple[int, Cyclo]]:
    P = coset_poincare(class_reps, order, rank)
    # P = prod (1 - zeta_i x^{d_i}); peel factors from the bottom
    out: list[tuple[int, Cyclo]] = []
    Q = P
    for _ in range(rank):
        nonconst = [(e, c) for e, c in Q.coeffs if e > 0]
        d, c = nonconst[0]
        z = -c
        out.append((d, z))
        Q = Q.exact_div(LaurentPoly({0: 1, d: -z}))
    assert Q == LaurentPoly.one()
    return sorted(out, key=lambda t: (t[0], t[1].serialize()))


def _series_invert(P: LaurentPoly, bound: int) -> list[tuple[int, Cyclo]]:
    """Coefficients of 1/P up to x^bound (P must have constant term 1)."""
    c0 = P.coeff(0)
    assert c0 == Cyclo.rational(1), "series inversion expects constant term 1"
    coeffs = dict(P.coeffs)
    inv = [Cyclo.rational(0)] * (bound + 1)
    inv[0] = Cyclo.rational(1)
    for e in range(1, bound + 1):
        s = Cyclo.rational(0)
        for k, c in coeffs.items():
            if 0 < k <= e:
                s = s + c * inv[e - k]
        inv[e] = -s
    return [(e, c) for e, c in enumerate(inv) if not c.is_zero()]


def _image_vector(g: Matrix) -> list[Cyclo]:
    """A vector spanning im(g - 1) for a reflection g."""
    n = g.n
    for j in range(n):
        col = [g.rows[i][j] - (Cyclo.rational(1) if i == j else Cyclo.rational(0))
               for i in range(n)]
        if any(not c.is_zero() for c in col):
            return col
    raise ValueError("identity passed to _image_vector")


def _canonical_line(vec: list[Cyclo]) -> tuple[Cyclo, ...]:
    lead = next(c for c in vec if not c.is_zero())
    inv = lead.inverse()
    return tuple(c * inv for c in vec)


# -- built-in groups ---------------------------------------------------------


def build_group(name: str) -> ReflectionCoset:
    """Construct a built-in split reflection coset by name.

    Supported: ``Z_e`` / ``Ze`` (cyclic, any e), ``G4``, ``G(3,1,2)``.
    """
    key = name.replace(" ", "")
    import re as _re
    m = _re.fullmatch(r"Z_?(\d+)", key)
    if m:
        e = int(m.group(1))
        fld = CycloField.cyclotomic(e)
        return ReflectionCoset(f"Z_{e}", [Matrix([[zeta(e)]])], fld)
    if key in ("G4", "G_4"):
        z = zeta(3)
        s = Matrix([[z, 0], [0, 1]])
        a = (1 - z ** 2) / 3
        t = Matrix([[a, Cyclo.rational(1)],
                    [-2 * z / 3, (2 * z + 1) / 3]])
        return ReflectionCoset("G4", [s, t], CycloField.cyclotomic(3))
    if key in ("G(3,1,2)", "G312", "G_{3,1,2}"):
        z = zeta(3)
        s = Matrix([[z, 0], [0, 1]])
        t = Matrix([[0, 1], [1, 0]])
        return ReflectionCoset("G(3,1,2)", [s, t], CycloField.cyclotomic(3))
    raise ValueError(f"unknown built-in group: {name!r}")


# -- Sylow data ----------------------------------------------------------------


@dataclass(frozen=True)
class SubCoset:
    """A sub-coset (V, W_L * w) of a split coset, e.g. a Sylow centralizer."""

    parent: ReflectionCoset
    group_elements: tuple[Matrix, ...]  # W_L
    twist: Matrix                       # w
    normalizer_order: int               # |N_W(L)|

    @property
    def relative_order(self) -> int:
        """|W_G(L)| = |N_W(L)| / |W_L|."""
        return self.normalizer_order // len(self.group_elements)

    def coset_matrices(self) -> list[Matrix]:
        return [g @ self.twist for g in self.group_elements]


def sylow_subcoset(G: ReflectionCoset, phi: KCycloPoly) -> tuple[int, SubCoset]:
    """The Phi-Sylow datum for a K-cyclotomic polynomial dividing |G|.

    Returns ``(a, L)`` where ``a`` is the exponent of Phi in a Sylow
    Phi-sub-coset and ``L`` describes the centralizer sub-coset.
    """
    d = phi.root_order
    k = min(phi.root_exponents) if phi.root_exponents else 0
    eigval = zeta(d, k) if d > 1 else Cyclo.rational(1)
    a = G.max_eigenspace_dim(eigval)
    if a == 0:
        raise ValueError("polynomial does not divide the group order polynomial")
    # among classes attaining the bound pick the representative of largest order
    w = G.regular_element(eigval)
    basis = w.eigenspace(eigval)
    w_l = G.pointwise_stabilizer(basis)
    w_l_set = set(w_l)
    coset = {g @ w for g in w_l}
    normalizer = 0
    for v in G.elements:
        vinv = G.inverse(v)
        if all((v @ g @ vinv) in w_l_set for g in w_l) and (v @ w @ vinv) in coset:
            normalizer += 1
    return a, SubCoset(G, tuple(w_l), w, normalizer)
