"""Leibniz algebras, their Lie quotients and representations.

Conventions used throughout the package:

* left Leibniz identity:   [[x,y],z] = [x,[y,z]] - [y,[x,z]]
* right Leibniz identity:  [x,[y,z]] = [[x,y],z] - [[x,z],y]

The pipeline works internally with the left convention; right-convention
input is converted through `opposite` at the boundary.  The two-sided
ideal spanned by squares [x,x] is computed from the polarized spanning
set [x,y] + [y,x], which is equivalent over a field of characteristic 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactla import (
    Matrix,
    ONE,
    Subspace,
    Vec,
    ZERO,
    add_vectors,
    is_zero_vector,
    quotient_projection,
    quotient_section,
    sub_vectors,
    zero_vector,
)

Tensor3 = tuple[tuple[Vec, ...], ...]


class IllDefinedQuotient(Exception):
    """The bracket does not descend to the requested quotient."""


def zero_tensor3(a: int, b: int, c: int) -> Tensor3:
    return tuple(tuple((ZERO,) * c for _ in range(b)) for _ in range(a))


def tensor3(a: int, b: int, c: int, entries: Mapping[tuple[int, int, int], object]) -> Tensor3:
    data = [[[ZERO] * c for _ in range(b)] for _ in range(a)]
    for (i, j, k), v in entries.items():
        data[i][j][k] = Fraction(v)
    return tuple(tuple(tuple(row) for row in plane) for plane in data)


def tensor3_from_vectors(a: int, b: int, c: int, fn) -> Tensor3:
    """fn(i, j) -> length-c vector."""
    return tuple(tuple(tuple(Fraction(x) for x in fn(i, j)) for j in range(b)) for i in range(a))


def bilinear(t: Tensor3, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    """Apply the bilinear map with structure tensor t to (u, v)."""
    if not t:
        return ()
    c = len(t[0][0]) if t[0] else 0
    out = [ZERO] * c
    for i, ui in enumerate(u):
        if not ui:
            continue
        plane = t[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            w = plane[j]
            f = ui * vj
            for k, wk in enumerate(w):
                if wk:
                    out[k] += f * wk
    return tuple(out)


@dataclass(frozen=True)
class LeibnizAlgebra:
    dim: int
    basis_names: tuple[str, ...]
    structure: Tensor3
    convention: str = "left"

    def __post_init__(self):
        if len(self.basis_names) != self.dim:
            raise ValueError("basis_names length does not match dim")
        if self.convention not in ("left", "right"):
            raise ValueError(f"unknown convention {self.convention!r}")

    def bracket_basis(self, i: int, j: int) -> Vec:
        return self.structure[i][j]

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
        return bilinear(self.structure, u, v)

    @staticmethod
    def from_brackets(names: Sequence[str], brackets: Mapping[tuple[int, int], Mapping[int, object]],
                      convention: str = "left") -> "LeibnizAlgebra":
        n = len(names)
        entries = {}
        for (i, j), val in brackets.items():
            for k, c in val.items():
                entries[(i, j, k)] = c
        return LeibnizAlgebra(n, tuple(names), tensor3(n, n, n, entries), convention)


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    basis_names: tuple[str, ...]
    structure: Tensor3

    def bracket_basis(self, i: int, j: int) -> Vec:
        return self.structure[i][j]

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
        return bilinear(self.structure, u, v)

    def as_leibniz(self, convention: str = "left") -> LeibnizAlgebra:
        return LeibnizAlgebra(self.dim, self.basis_names, self.structure, convention)

    @staticmethod
    def from_brackets(names: Sequence[str], brackets: Mapping[tuple[int, int], Mapping[int, object]]) -> "LieAlgebra":
        n = len(names)
        entries = {}
        for (i, j), val in brackets.items():
            for k, c in val.items():
                entries[(i, j, k)] = c
        return LieAlgebra(n, tuple(names), tensor3(n, n, n, entries))


def check_leibniz(g: LeibnizAlgebra) -> tuple[tuple[int, int, int], ...]:
    """All basis triples (i, j, k) violating the Leibniz identity of g's convention."""
    bad = []
    n = g.dim
    for i in range(n):
        for j in range(n):
            bij = g.bracket_basis(i, j)
            for k in range(n):
                if g.convention == "left":
                    # [[i,j],k] - [i,[j,k]] + [j,[i,k]]
                    defect = sub_vectors(g.bracket(bij, _unit(n, k)), g.bracket(_unit(n, i), g.bracket_basis(j, k)))
                    defect = add_vectors(defect, g.bracket(_unit(n, j), g.bracket_basis(i, k)))
                else:
                    # [i,[j,k]] - [[i,j],k] + [[i,k],j]
                    defect = sub_vectors(g.bracket(_unit(n, i), g.bracket_basis(j, k)), g.bracket(bij, _unit(n, k)))
                    defect = add_vectors(defect, g.bracket(g.bracket_basis(i, k), _unit(n, j)))
                if not is_zero_vector(defect):
                    bad.append((i, j, k))
    return tuple(bad)


def check_lie(h: LieAlgebra) -> tuple[tuple, ...]:
    """Antisymmetry and Jacobi violations, tagged per family."""
    bad = []
    n = h.dim
    for i in range(n):
        for j in range(n):
            if not is_zero_vector(add_vectors(h.bracket_basis(i, j), h.bracket_basis(j, i))):
                bad.append(("antisymmetry", i, j))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = h.bracket(_unit(n, i), h.bracket_basis(j, k))
                s = add_vectors(s, h.bracket(_unit(n, j), h.bracket_basis(k, i)))
                s = add_vectors(s, h.bracket(_unit(n, k), h.bracket_basis(i, j)))
                if not is_zero_vector(s):
                    bad.append(("jacobi", i, j, k))
    return tuple(bad)


def _unit(n: int, i: int) -> Vec:
    return tuple(ONE if t == i else ZERO for t in range(n))


def opposite(g: LeibnizAlgebra) -> LeibnizAlgebra:
    """Same space, arguments swapped; flips the convention."""
    opp = tuple(tuple(g.structure[j][i] for j in range(g.dim)) for i in range(g.dim))
    conv = "right" if g.convention == "left" else "left"
    return LeibnizAlgebra(g.dim, g.basis_names, opp, conv)


def kernel_ideal(g: LeibnizAlgebra) -> Subspace:
    """Span of squares [x,x], computed from the polarized generators [x,y]+[y,x]."""
    vecs = []
    for i in range(g.dim):
        for j in range(i, g.dim):
            v = add_vectors(g.bracket_basis(i, j), g.bracket_basis(j, i))
            if not is_zero_vector(v):
                vecs.append(v)
    return Subspace.from_spanning_columns(g.dim, vecs)


@dataclass(frozen=True)
class QuotientData:
    quotient: LieAlgebra
    projection: Matrix   # g -> g_Lie
    action_on_g: Tensor3  # g_Lie (x) g -> g, the left action through the projection
    ann: Subspace
    section: Matrix      # g_Lie -> g, canonical coordinate lift
    complement: tuple[int, ...]


def lie_quotient(g: LeibnizAlgebra) -> QuotientData:
    """Maximal Lie quotient g / span{[x,x]} together with its action on g.

    The quotient basis extends a column echelon basis of the square span
    to a basis of g and keeps the complementary coordinates.
    """
    if g.convention != "left":
        raise ValueError("lie_quotient expects the left convention; convert with opposite() first")
    ann = kernel_ideal(g)
    proj = quotient_projection(ann)
    sect = quotient_section(ann)
    comp = ann.complement
    r = len(comp)
    n = g.dim

    # the bracket must descend: ann has to be a two-sided ideal
    for t in range(ann.dim):
        col = ann.basis.column(t)
        for i in range(n):
            if not is_zero_vector(proj.apply(g.bracket(col, _unit(n, i)))):
                raise IllDefinedQuotient(f"[ann_{t}, e_{i}] leaves the square span")
            if not is_zero_vector(proj.apply(g.bracket(_unit(n, i), col))):
                raise IllDefinedQuotient(f"[e_{i}, ann_{t}] leaves the square span")

    structure = tensor3_from_vectors(
        r, r, r, lambda a, b: proj.apply(g.bracket_basis(comp[a], comp[b]))
    )
    names = tuple(f"{g.basis_names[c]}~" for c in comp)
    quotient = LieAlgebra(r, names, structure)

    action = tensor3_from_vectors(r, n, n, lambda a, j: g.bracket_basis(comp[a], j))

    # the action must factor the original left multiplication: pr(x).y == [x,y]
    for i in range(n):
        pi = proj.column(i)
        for j in range(n):
            got = bilinear(action, pi, _unit(n, j))
            if got != g.bracket_basis(i, j):
                raise IllDefinedQuotient(f"action through the projection disagrees with [e_{i}, e_{j}]")

    return QuotientData(quotient, proj, action, ann, sect, comp)


@dataclass(frozen=True)
class Representation:
    """Two-sided module over a Leibniz algebra: actions [x,m] and [m,x]."""

    dim: int
    basis_names: tuple[str, ...]
    left_action: Tensor3   # left_action[i][j] = [e_i, f_j], shape g.dim x dim x dim
    right_action: Tensor3  # right_action[j][i] = [f_j, e_i], shape dim x g.dim x dim

    def left(self, xvec: Sequence[Fraction], mvec: Sequence[Fraction]) -> Vec:
        return bilinear(self.left_action, xvec, mvec)

    def right(self, mvec: Sequence[Fraction], xvec: Sequence[Fraction]) -> Vec:
        return bilinear(self.right_action, mvec, xvec)


def trivial_representation(g: LeibnizAlgebra, dim: int = 1, names: Sequence[str] | None = None) -> Representation:
    if names is None:
        names = tuple(f"m{i}" for i in range(dim))
    return Representation(dim, tuple(names), zero_tensor3(g.dim, dim, dim), zero_tensor3(dim, g.dim, dim))


def adjoint_representation(g: LeibnizAlgebra) -> Representation:
    return Representation(g.dim, g.basis_names, g.structure, g.structure)


def check_representation(g: LeibnizAlgebra, m: Representation) -> tuple[tuple, ...]:
    """Violations of the three compatibility identities, tagged mxy/xmy/xym."""
    bad = []
    n, d = g.dim, m.dim
    gu = lambda i: _unit(n, i)
    mu = lambda a: _unit(d, a)
    for a in range(d):
        for i in range(n):
            for j in range(n):
                # [[m,x],y] = [m,[x,y]] - [x,[m,y]]
                lhs = m.right(m.right(mu(a), gu(i)), gu(j))
                rhs = sub_vectors(m.right(mu(a), g.bracket_basis(i, j)), m.left(gu(i), m.right(mu(a), gu(j))))
                if lhs != rhs:
                    bad.append(("mxy", a, i, j))
                # [[x,m],y] = [x,[m,y]] - [m,[x,y]]
                lhs = m.right(m.left(gu(i), mu(a)), gu(j))
                rhs = sub_vectors(m.left(gu(i), m.right(mu(a), gu(j))), m.right(mu(a), g.bracket_basis(i, j)))
                if lhs != rhs:
                    bad.append(("xmy", a, i, j))
                # [[x,y],m] = [x,[y,m]] - [y,[x,m]]
                lhs = m.left(g.bracket_basis(i, j), mu(a))
                rhs = sub_vectors(m.left(gu(i), m.left(gu(j), mu(a))), m.left(gu(j), m.left(gu(i), mu(a))))
                if lhs != rhs:
                    bad.append(("xym", i, j, a))
    return tuple(bad)


def opposite_representation(g: LeibnizAlgebra, m: Representation) -> Representation:
    """Module over opposite(g): the two actions trade places."""
    n, d = g.dim, m.dim
    left = tensor3_from_vectors(n, d, d, lambda i, j: m.right_action[j][i])
    right = tensor3_from_vectors(d, n, d, lambda j, i: m.left_action[i][j])
    return Representation(d, m.basis_names, left, right)


def symmetrization(m: Representation) -> tuple[Subspace, int, Matrix]:
    """(span of [x,m]+[m,x], dim of the quotient, projection matrix)."""
    d = m.dim
    vecs = []
    for i in range(len(m.left_action)):
        for j in range(d):
            v = add_vectors(m.left_action[i][j], m.right_action[j][i])
            if not is_zero_vector(v):
                vecs.append(v)
    anti = Subspace.from_spanning_columns(d, vecs)
    return anti, d - anti.dim, quotient_projection(anti)


@dataclass(frozen=True)
class LieModule:
    """Left module over a Lie algebra: action[a][j] = e_a . f_j."""

    dim: int
    action: Tensor3

    def act(self, xvec: Sequence[Fraction], mvec: Sequence[Fraction]) -> Vec:
        return bilinear(self.action, xvec, mvec)


def check_lie_module(h: LieAlgebra, mod: LieModule) -> tuple[tuple, ...]:
    bad = []
    n, d = h.dim, mod.dim
    for i in range(n):
        for j in range(n):
            for a in range(d):
                lhs = mod.act(h.bracket_basis(i, j), _unit(d, a))
                rhs = sub_vectors(
                    mod.act(_unit(n, i), mod.act(_unit(n, j), _unit(d, a))),
                    mod.act(_unit(n, j), mod.act(_unit(n, i), _unit(d, a))),
                )
                if lhs != rhs:
                    bad.append((i, j, a))
    return tuple(bad)


def adjoint_lie_module(h: LieAlgebra) -> LieModule:
    return LieModule(h.dim, h.structure)


def lie_module_lift(g: LeibnizAlgebra, qdata: QuotientData, mod: LieModule) -> Representation:
    """Representation of g induced by a module over its Lie quotient.

    [x, m] = pr(x).m and [m, x] = -pr(x).m, which satisfies all three
    compatibility identities.
    """
    n, d = g.dim, mod.dim
    left = tensor3_from_vectors(n, d, d, lambda i, j: mod.act(qdata.projection.column(i), _unit(d, j)))
    right = tensor3_from_vectors(d, n, d, lambda j, i: tuple(-x for x in mod.act(qdata.projection.column(i), _unit(d, j))))
    names = tuple(f"m{i}" for i in range(d))
    return Representation(d, names, left, right)
