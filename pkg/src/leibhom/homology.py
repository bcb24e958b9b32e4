"""Chain complexes for Leibniz algebras.

Four families live here:

* the tensor-module complex  m (x) g^{(x)n}  and its cochain version,
* the small complexes built from the enveloping DGLA of g (degree-wise
  spanned by normal monomials in the degree >= 1 letters),
* the classical exterior-power complexes of a Lie algebra, used as the
  comparison target and as an oracle,
* the subcomplex spanned by left-normed graded commutators, including
  its weight-graded blocks over a truncated free algebra.

All boundary maps are exact integer/rational matrices and every complex
is gated on d o d = 0 at construction.

The boundary of the tensor-module complex, written for m (x) x1 ... xn:

    d = sum_{1<=i<j<=n} (-1)^j  m (x) x1 ... [xj,xi]@i ... ^xj ... xn
      + sum_{j}        (-1)^{j+1} a_j(m) (x) x1 ... ^xj ... xn

For one-sided (Lie-module) coefficients a_j(m) = [m,xj] := -xj.m for
every j.  For two-sided coefficients the only action rules compatible
with d o d = 0 put the module's own right action in the first slot:
a_1(m) = -([m,x1] + [x1,m]) and a_j(m) = -[xj,m] for j >= 2.  Taking
the right action in every slot breaks d o d = 0; see REP_CHAIN_RULE
below and scripts/pin_chain_rule.py for the gate that pinned this.
The cochain differential mirrors the same shape with the action on the
value side; its j = 1 term is -[f(...),x1] in the two-sided case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .dgla import DGLieAlgebra, minimal_envelope
from .exactla import (
    Matrix,
    Subspace,
    Vec,
    ZERO,
    add_vectors,
    column_span,
    kernel_basis,
    quotient_projection,
    quotient_section,
    restrict_map,
)
from .freealg import (
    Element,
    FreeLeibnizTruncation,
    free_graded_lie_component,
    graded_commutator,
    tensor_word_index,
    witt_dim,
)
from .leibcore import (
    LeibnizAlgebra,
    LieAlgebra,
    LieModule,
    QuotientData,
    Representation,
    Tensor3,
    lie_quotient,
)
from .pbw import PBWAlgebra, Poly, Word


class DifferentialSquareNonzero(Exception):
    """Adjacent boundary maps do not compose to zero."""


class NotAChainMap(Exception):
    """A comparison map fails to commute with the differentials."""


# Action rules for two-sided module coefficients, pinned by the gate in
# scripts/pin_chain_rule.py.  Chain rules ("first" is the j = 1 slot):
#   corrected  first = -([m,x] + [x,m]),  later = -[x,m]   (canonical)
#   left       first = later = -[x,m]
#   right      first = later = [m,x]
#   naive      first = [m,x] + [x,m],     later = [m,x]
# "right" and "naive" fail d o d = 0 already for the adjoint module of
# the 2-dim algebra [e1,e2] = e2; "corrected" and "left" pass on the
# whole randomized corpus, and "corrected" is the one whose first slot
# degenerates to zero exactly on anti-symmetric (lifted) coefficients.
REP_CHAIN_RULE = "corrected"

# Cochain rules, acting on the value f(...):
#   corrected  first = -[f,x],            later = [x,f]    (canonical)
#   plain      first = later = [x,f]
#   naive      first = [x,f] + [f,x],     later = [x,f]
# "naive" fails d o d = 0 on the same adjoint witness; "corrected" and
# "plain" agree on lifted coefficients (there -[f,x] = [x,f]), which is
# what makes the two-sided branch collapse onto the one-sided one.
REP_COCHAIN_RULE = "corrected"


@dataclass(frozen=True)
class ChainComplex:
    """dims[i] is the dimension in degree offset+i.  For raising=False
    diffs[i] maps degree offset+i+1 to offset+i; for raising=True it maps
    offset+i to offset+i+1."""

    offset: int
    dims: tuple[int, ...]
    diffs: tuple[Matrix, ...]
    raising: bool = False

    def __post_init__(self):
        if len(self.diffs) != max(len(self.dims) - 1, 0):
            raise ValueError("expected one differential per adjacent pair of degrees")
        for i, d in enumerate(self.diffs):
            lo, hi = self.dims[i], self.dims[i + 1]
            want = (hi, lo) if self.raising else (lo, hi)
            if (d.rows, d.cols) != want:
                raise ValueError(f"differential {i} has shape {(d.rows, d.cols)}, expected {want}")
        for i in range(len(self.diffs) - 1):
            if self.raising:
                comp = self.diffs[i + 1] @ self.diffs[i]
            else:
                comp = self.diffs[i] @ self.diffs[i + 1]
            if not comp.is_zero():
                raise DifferentialSquareNonzero(
                    f"composition through degree {self.offset + i + 1} is nonzero")

    def degree_range(self) -> tuple[int, ...]:
        return tuple(self.offset + i for i in range(len(self.dims)))

    def _adjacent(self, k: int) -> tuple[Matrix | None, Matrix | None]:
        i = k - self.offset
        below = self.diffs[i - 1] if i - 1 >= 0 else None
        above = self.diffs[i] if i < len(self.diffs) else None
        return below, above

    def homology(self, k: int) -> int:
        i = k - self.offset
        if i < 0 or i >= len(self.dims):
            return 0
        below, above = self._adjacent(k)
        h = self.dims[i]
        if below is not None:
            h -= below.rank()
        if above is not None:
            h -= above.rank()
        return h

    def betti(self) -> tuple[int, ...]:
        return tuple(self.homology(k) for k in self.degree_range())

    def boundary_pair(self, k: int) -> tuple[Matrix | None, Matrix | None]:
        """(map out of degree k, map into degree k) for homology at k."""
        below, above = self._adjacent(k)
        if self.raising:
            return above, below
        return below, above

    def cycle_space(self, k: int) -> Subspace:
        i = k - self.offset
        out_map, _ = self.boundary_pair(k)
        if out_map is None:
            return Subspace.full(self.dims[i])
        return kernel_basis(out_map)

    def boundary_space(self, k: int) -> Subspace:
        i = k - self.offset
        _, in_map = self.boundary_pair(k)
        if in_map is None:
            return Subspace.zero(self.dims[i])
        return column_span(in_map)


# ---------------------------------------------------------------------------
# coefficient systems for the tensor-module complexes


@dataclass(frozen=True)
class TrivialCoefficients:
    dim: int = 1


@dataclass(frozen=True)
class LieModuleCoefficients:
    """Module over the maximal Lie quotient, acting through the projection:
    [x,m] = pr(x).m and [m,x] = -pr(x).m."""

    module: LieModule


@dataclass(frozen=True)
class RepresentationCoefficients:
    rep: Representation


Coefficients = TrivialCoefficients | LieModuleCoefficients | RepresentationCoefficients


def trivial_coefficients(dim: int = 1) -> TrivialCoefficients:
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"coefficient dimension must be a positive int, got {dim!r}")
    return TrivialCoefficients(dim)


def lie_coefficients(module: LieModule) -> LieModuleCoefficients:
    return LieModuleCoefficients(module)


def rep_coefficients(rep: Representation) -> RepresentationCoefficients:
    return RepresentationCoefficients(rep)


class _ActionTables:
    """Per-coefficient-system action vectors for the boundary builders.

    right(u, x)  = the m-vector [f_u, e_x]
    left(x, u)   = the m-vector [e_x, f_u]
    None tables mean the action is identically zero.
    """

    def __init__(self, g: LeibnizAlgebra, coefficients: Coefficients):
        self.is_rep = False
        if isinstance(coefficients, TrivialCoefficients):
            self.m_dim = coefficients.dim
            self.right = None
            self.left = None
        elif isinstance(coefficients, LieModuleCoefficients):
            mod = coefficients.module
            qdata = lie_quotient(g)
            if len(mod.action) != qdata.quotient.dim:
                raise ValueError(
                    f"module is over a {len(mod.action)}-dim Lie algebra, but the "
                    f"maximal Lie quotient has dimension {qdata.quotient.dim}")
            self.m_dim = mod.dim
            units = [tuple(Fraction(1) if t == u else ZERO for t in range(mod.dim))
                     for u in range(mod.dim)]
            left = [[mod.act(qdata.projection.column(x), units[u])
                     for u in range(mod.dim)] for x in range(g.dim)]
            self.left = left
            self.right = [[tuple(-c for c in left[x][u]) for x in range(g.dim)]
                          for u in range(mod.dim)]
        elif isinstance(coefficients, RepresentationCoefficients):
            rep = coefficients.rep
            if len(rep.left_action) != g.dim or len(rep.right_action) != rep.dim:
                raise ValueError("representation tensors do not match the algebra dimension")
            self.is_rep = True
            self.m_dim = rep.dim
            self.left = [[rep.left_action[x][u] for u in range(rep.dim)] for x in range(g.dim)]
            self.right = [[rep.right_action[u][x] for x in range(g.dim)] for u in range(rep.dim)]
        else:
            raise TypeError(f"unknown coefficient system {coefficients!r}")


def _neg(v: Vec) -> Vec:
    return tuple(-c for c in v)


def _chain_action(tables: _ActionTables, rule: str):
    """(first_term, later_term) callables u, x -> Vec, or (None, None)."""
    if tables.right is None:
        return None, None
    if not tables.is_rep:
        # the right table already holds [m,x] = -x.m
        first = later = lambda u, x: tables.right[u][x]
        return first, later
    if rule == "corrected":
        later = lambda u, x: _neg(tables.left[x][u])
        first = lambda u, x: _neg(add_vectors(tables.right[u][x], tables.left[x][u]))
    elif rule == "left":
        first = later = lambda u, x: _neg(tables.left[x][u])
    elif rule == "right":
        first = later = lambda u, x: tables.right[u][x]
    elif rule == "naive":
        later = lambda u, x: tables.right[u][x]
        first = lambda u, x: add_vectors(tables.right[u][x], tables.left[x][u])
    else:
        raise ValueError(f"unknown chain rule {rule!r}")
    return first, later


def _loday_boundary_matrix(g: LeibnizAlgebra, m_dim: int, first, later, n: int) -> Matrix:
    base = g.dim
    rows_w = base ** (n - 1)
    cols_w = base ** n
    entries: dict[tuple[int, int], Fraction] = {}

    def put(r: int, c: int, v: Fraction) -> None:
        if not v:
            return
        key = (r, c)
        cur = entries.get(key, ZERO) + v
        if cur:
            entries[key] = cur
        else:
            entries.pop(key, None)

    for widx, word in enumerate(itertools.product(range(base), repeat=n)):
        for j in range(1, n + 1):
            sj = Fraction(-1) ** j
            for i in range(1, j):
                br = g.bracket_basis(word[j - 1], word[i - 1])
                head, tail = word[:i - 1], word[i:j - 1] + word[j:]
                for k, c in enumerate(br):
                    if not c:
                        continue
                    r = tensor_word_index(head + (k,) + tail, base)
                    for u in range(m_dim):
                        put(u * rows_w + r, u * cols_w + widx, sj * c)
            if first is not None:
                sa = Fraction(-1) ** (j + 1)
                r = tensor_word_index(word[:j - 1] + word[j:], base)
                x = word[j - 1]
                for u in range(m_dim):
                    vec = first(u, x) if j == 1 else later(u, x)
                    for u2, c in enumerate(vec):
                        put(u2 * rows_w + r, u * cols_w + widx, sa * c)

    return Matrix.from_entries(m_dim * rows_w, m_dim * cols_w, entries)


def loday_complex(g: LeibnizAlgebra, coefficients: Coefficients, n_max: int,
                  _rep_rule: str | None = None) -> ChainComplex:
    """Tensor-module chain complex m (x) g^{(x)n} in degrees 0..n_max.

    Homology at the top stored degree is not meaningful (the next
    boundary map is not built); ask one degree higher than you need.
    """
    if g.convention != "left":
        raise ValueError("chain complexes expect the left convention; use opposite() first")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    tables = _ActionTables(g, coefficients)
    first, later = _chain_action(tables, _rep_rule or REP_CHAIN_RULE)
    dims = tuple(tables.m_dim * g.dim ** n for n in range(n_max + 1))
    diffs = tuple(
        _loday_boundary_matrix(g, tables.m_dim, first, later, n)
        for n in range(1, n_max + 1)
    )
    return ChainComplex(0, dims, diffs, raising=False)


def _loday_coboundary_matrix(g: LeibnizAlgebra, m_dim: int, first, later, n: int) -> Matrix:
    """d: Hom(g^{(x)n}, m) -> Hom(g^{(x)n+1}, m)."""
    base = g.dim
    rows_w = base ** (n + 1)
    cols_w = base ** n
    entries: dict[tuple[int, int], Fraction] = {}

    def put(r: int, c: int, v: Fraction) -> None:
        if not v:
            return
        key = (r, c)
        cur = entries.get(key, ZERO) + v
        if cur:
            entries[key] = cur
        else:
            entries.pop(key, None)

    for yidx, yword in enumerate(itertools.product(range(base), repeat=n + 1)):
        m = n + 1
        for j in range(1, m + 1):
            sj = Fraction(-1) ** j
            for i in range(1, j):
                br = g.bracket_basis(yword[j - 1], yword[i - 1])
                for k, c in enumerate(br):
                    if not c:
                        continue
                    w = yword[:i - 1] + (k,) + yword[i:j - 1] + yword[j:]
                    cidx = tensor_word_index(w, base)
                    for u in range(m_dim):
                        put(u * rows_w + yidx, u * cols_w + cidx, sj * c)
            if first is not None:
                sa = Fraction(-1) ** (j + 1)
                w = yword[:j - 1] + yword[j:]
                cidx = tensor_word_index(w, base)
                x = yword[j - 1]
                for u in range(m_dim):
                    vec = first(x, u) if j == 1 else later(x, u)
                    for u2, c in enumerate(vec):
                        put(u2 * rows_w + yidx, u * cols_w + cidx, sa * c)

    return Matrix.from_entries(m_dim * rows_w, m_dim * cols_w, entries)


def _cochain_action(tables: _ActionTables, rule: str):
    """(first_term, later_term) callables x, u -> Vec acting on the value."""
    if tables.left is None:
        return None, None
    later = lambda x, u: tables.left[x][u]
    if not tables.is_rep or rule == "plain":
        first = later
    elif rule == "corrected":
        first = lambda x, u: _neg(tables.right[u][x])
    elif rule == "naive":
        first = lambda x, u: add_vectors(tables.left[x][u], tables.right[u][x])
    else:
        raise ValueError(f"unknown cochain rule {rule!r}")
    return first, later


def loday_cochain_complex(g: LeibnizAlgebra, coefficients: Coefficients, n_max: int,
                          _rep_rule: str | None = None) -> ChainComplex:
    """Cochain complex Hom(g^{(x)n}, m) in degrees 0..n_max."""
    if g.convention != "left":
        raise ValueError("chain complexes expect the left convention; use opposite() first")
    tables = _ActionTables(g, coefficients)
    first, later = _cochain_action(tables, _rep_rule or REP_COCHAIN_RULE)
    dims = tuple(tables.m_dim * g.dim ** n for n in range(n_max + 1))
    diffs = tuple(
        _loday_coboundary_matrix(g, tables.m_dim, first, later, n)
        for n in range(0, n_max)
    )
    return ChainComplex(0, dims, diffs, raising=True)


# ---------------------------------------------------------------------------
# complexes from the enveloping DGLA


@dataclass
class CEData:
    g: LeibnizAlgebra
    qdata: QuotientData
    envelope: DGLieAlgebra
    pbw: PBWAlgebra
    m_dim: int
    action: Tensor3 | None  # degree-0 letters acting on m; None = zero action


def _ce_setup(g: LeibnizAlgebra, coefficients: Coefficients) -> CEData:
    if g.convention != "left":
        raise ValueError("chain complexes expect the left convention; use opposite() first")
    if isinstance(coefficients, RepresentationCoefficients):
        raise ValueError(
            "enveloping-algebra complexes take trivial or Lie-module coefficients")
    qdata = lie_quotient(g)
    envelope = minimal_envelope(g, qdata)
    if isinstance(coefficients, TrivialCoefficients):
        m_dim, action = coefficients.dim, None
    else:
        mod = coefficients.module
        if len(mod.action) != qdata.quotient.dim:
            raise ValueError(
                f"module is over a {len(mod.action)}-dim Lie algebra, but the "
                f"maximal Lie quotient has dimension {qdata.quotient.dim}")
        m_dim, action = mod.dim, mod.action
    return CEData(g, qdata, envelope, PBWAlgebra(envelope), m_dim, action)


def _ce_monomials(envelope: DGLieAlgebra, n: int) -> list[Word]:
    """Normal words of total degree n in the degree 1 and 2 letters,
    ordered by ascending hat count then lexicographically."""
    n1, n2 = envelope.dim(1), envelope.dim(2)
    out: list[Word] = []
    for q in range(n // 2 + 1):
        p = n - 2 * q
        for xs in itertools.combinations(range(n1), p):
            for ys in itertools.combinations_with_replacement(range(n2), q):
                out.append(tuple((1, i) for i in xs) + tuple((2, j) for j in ys))
    return out


def _derive_word(envelope: DGLieAlgebra, word: Word) -> Poly:
    """Graded-derivation image of a normal word, before normalization."""
    d1 = envelope.differential(1)
    d2 = envelope.differential(2)
    out: Poly = {}
    sign = Fraction(1)
    for t, (deg, idx) in enumerate(word):
        if deg == 1:
            images = [((0, a), d1.entries[a][idx]) for a in range(d1.rows)]
        else:
            images = [((1, b), d2.entries[b][idx]) for b in range(d2.rows)]
        for letter, c in images:
            if not c:
                continue
            w2 = word[:t] + (letter,) + word[t + 1:]
            cur = out.get(w2, ZERO) + sign * c
            if cur:
                out[w2] = cur
            else:
                out.pop(w2, None)
        if deg % 2:
            sign = -sign
    return out


def ce_chain(g: LeibnizAlgebra, coefficients: Coefficients, n_max: int) -> ChainComplex:
    """Chain complex m (x) (normal monomials of degree n) in degrees 0..n_max.

    The boundary applies the envelope differential as a graded derivation,
    normalizes, and folds a leading degree-0 letter onto the coefficient
    as m.xi = -xi.m (dropped entirely for trivial coefficients).
    """
    data = _ce_setup(g, coefficients)
    mons = [_ce_monomials(data.envelope, n) for n in range(n_max + 1)]
    index = [{w: i for i, w in enumerate(ws)} for ws in mons]
    m = data.m_dim
    diffs = []
    for n in range(1, n_max + 1):
        rows_w, cols_w = len(mons[n - 1]), len(mons[n])
        entries: dict[tuple[int, int], Fraction] = {}
        for widx, w in enumerate(mons[n]):
            nf = data.pbw.normal_form(_derive_word(data.envelope, w))
            for w2, c in nf.items():
                if w2 and w2[0][0] == 0:
                    if data.action is None:
                        continue
                    a = w2[0][1]
                    r = index[n - 1][w2[1:]]
                    for u in range(m):
                        for u2, cc in enumerate(data.action[a][u]):
                            if cc:
                                key = (u2 * rows_w + r, u * cols_w + widx)
                                cur = entries.get(key, ZERO) - c * cc
                                if cur:
                                    entries[key] = cur
                                else:
                                    entries.pop(key, None)
                else:
                    r = index[n - 1][w2]
                    for u in range(m):
                        key = (u * rows_w + r, u * cols_w + widx)
                        cur = entries.get(key, ZERO) + c
                        if cur:
                            entries[key] = cur
                        else:
                            entries.pop(key, None)
        diffs.append(Matrix.from_entries(m * rows_w, m * cols_w, entries))
    dims = tuple(m * len(mons[n]) for n in range(n_max + 1))
    return ChainComplex(0, dims, tuple(diffs), raising=False)


def ce_cochain(g: LeibnizAlgebra, coefficients: Coefficients, n_max: int) -> ChainComplex:
    """Cochain complex Hom(normal monomials, m); a leading degree-0 letter
    acts on the value with a plus sign."""
    data = _ce_setup(g, coefficients)
    mons = [_ce_monomials(data.envelope, n) for n in range(n_max + 1)]
    index = [{w: i for i, w in enumerate(ws)} for ws in mons]
    m = data.m_dim
    diffs = []
    for n in range(0, n_max):
        rows_w, cols_w = len(mons[n + 1]), len(mons[n])
        entries: dict[tuple[int, int], Fraction] = {}
        for yidx, y in enumerate(mons[n + 1]):
            nf = data.pbw.normal_form(_derive_word(data.envelope, y))
            for w2, c in nf.items():
                if w2 and w2[0][0] == 0:
                    if data.action is None:
                        continue
                    a = w2[0][1]
                    cidx = index[n][w2[1:]]
                    for u in range(m):
                        for u2, cc in enumerate(data.action[a][u]):
                            if cc:
                                key = (u2 * rows_w + yidx, u * cols_w + cidx)
                                cur = entries.get(key, ZERO) + c * cc
                                if cur:
                                    entries[key] = cur
                                else:
                                    entries.pop(key, None)
                else:
                    cidx = index[n][w2]
                    for u in range(m):
                        key = (u * rows_w + yidx, u * cols_w + cidx)
                        cur = entries.get(key, ZERO) + c
                        if cur:
                            entries[key] = cur
                        else:
                            entries.pop(key, None)
        diffs.append(Matrix.from_entries(m * rows_w, m * cols_w, entries))
    dims = tuple(m * len(mons[n]) for n in range(n_max + 1))
    return ChainComplex(0, dims, tuple(diffs), raising=True)


# ---------------------------------------------------------------------------
# classical exterior-power complexes of a Lie algebra (oracle + target)


def _wedge_insert(k: int, rest: tuple[int, ...]) -> tuple[Fraction, tuple[int, ...]] | None:
    if k in rest:
        return None
    pos = sum(1 for t in rest if t < k)
    return Fraction(-1) ** pos, rest[:pos] + (k,) + rest[pos:]


def classical_ce(h: LieAlgebra, module: LieModule | None, n_max: int,
                 m_dim: int | None = None) -> ChainComplex:
    """Exterior-power chain complex of a Lie algebra; module=None means
    trivial coefficients of dimension m_dim (default 1)."""
    m = module.dim if module is not None else (m_dim or 1)
    mons = [list(itertools.combinations(range(h.dim), n)) for n in range(n_max + 1)]
    index = [{w: i for i, w in enumerate(ws)} for ws in mons]
    units = [tuple(Fraction(1) if t == u else ZERO for t in range(m)) for u in range(m)]
    diffs = []
    for n in range(1, n_max + 1):
        rows_w, cols_w = len(mons[n - 1]), len(mons[n])
        entries: dict[tuple[int, int], Fraction] = {}

        def put(r, c, v):
            if not v:
                return
            key = (r, c)
            cur = entries.get(key, ZERO) + v
            if cur:
                entries[key] = cur
            else:
                entries.pop(key, None)

        for widx, xs in enumerate(mons[n]):
            if module is not None:
                for t in range(1, n + 1):
                    sign = Fraction(-1) ** t
                    rest = xs[:t - 1] + xs[t:]
                    r = index[n - 1][rest]
                    x = xs[t - 1]
                    for u in range(m):
                        vec = module.act(
                            tuple(Fraction(1) if i == x else ZERO for i in range(h.dim)),
                            units[u])
                        for u2, c in enumerate(vec):
                            put(u2 * rows_w + r, u * cols_w + widx, sign * c)
            for s in range(1, n + 1):
                for t in range(s + 1, n + 1):
                    sign = Fraction(-1) ** (s + t)
                    br = h.bracket_basis(xs[s - 1], xs[t - 1])
                    rest = tuple(v for idx, v in enumerate(xs) if idx not in (s - 1, t - 1))
                    for k, c in enumerate(br):
                        if not c:
                            continue
                        ins = _wedge_insert(k, rest)
                        if ins is None:
                            continue
                        wsign, word = ins
                        r = index[n - 1][word]
                        for u in range(m):
                            put(u * rows_w + r, u * cols_w + widx, sign * c * wsign)
        diffs.append(Matrix.from_entries(m * rows_w, m * cols_w, entries))
    dims = tuple(m * len(mons[n]) for n in range(n_max + 1))
    return ChainComplex(0, dims, tuple(diffs), raising=False)


def classical_ce_cochain(h: LieAlgebra, module: LieModule | None, n_max: int,
                         m_dim: int | None = None) -> ChainComplex:
    m = module.dim if module is not None else (m_dim or 1)
    mons = [list(itertools.combinations(range(h.dim), n)) for n in range(n_max + 1)]
    index = [{w: i for i, w in enumerate(ws)} for ws in mons]
    units = [tuple(Fraction(1) if t == u else ZERO for t in range(m)) for u in range(m)]
    diffs = []
    for n in range(0, n_max):
        rows_w, cols_w = len(mons[n + 1]), len(mons[n])
        entries: dict[tuple[int, int], Fraction] = {}

        def put(r, c, v):
            if not v:
                return
            key = (r, c)
            cur = entries.get(key, ZERO) + v
            if cur:
                entries[key] = cur
            else:
                entries.pop(key, None)

        for yidx, xs in enumerate(mons[n + 1]):
            if module is not None:
                for t in range(1, n + 2):
                    sign = Fraction(-1) ** (t + 1)
                    rest = xs[:t - 1] + xs[t:]
                    cidx = index[n][rest]
                    x = xs[t - 1]
                    for u in range(m):
                        vec = module.act(
                            tuple(Fraction(1) if i == x else ZERO for i in range(h.dim)),
                            units[u])
                        for u2, c in enumerate(vec):
                            put(u2 * rows_w + yidx, u * cols_w + cidx, sign * c)
            for s in range(1, n + 2):
                for t in range(s + 1, n + 2):
                    sign = Fraction(-1) ** (s + t)
                    br = h.bracket_basis(xs[s - 1], xs[t - 1])
                    rest = tuple(v for idx, v in enumerate(xs) if idx not in (s - 1, t - 1))
                    for k, c in enumerate(br):
                        if not c:
                            continue
                        ins = _wedge_insert(k, rest)
                        if ins is None:
                            continue
                        wsign, word = ins
                        cidx = index[n][word]
                        for u in range(m):
                            put(u * rows_w + yidx, u * cols_w + cidx, sign * c * wsign)
        diffs.append(Matrix.from_entries(m * rows_w, m * cols_w, entries))
    dims = tuple(m * len(mons[n]) for n in range(n_max + 1))
    return ChainComplex(0, dims, tuple(diffs), raising=True)


# ---------------------------------------------------------------------------
# comparison: projection from the tensor-module complex onto the small one


def _projection_blocks(data: CEData, n_max: int) -> list[Matrix]:
    """p_n: g^{(x)n} -> span of normal degree-n monomials, by normalizing
    the product of degree-1 letters.  Identity in degrees 0 and 1."""
    base = data.g.dim
    mons = [_ce_monomials(data.envelope, n) for n in range(n_max + 1)]
    index = [{w: i for i, w in enumerate(ws)} for ws in mons]
    out = []
    for n in range(n_max + 1):
        entries: dict[tuple[int, int], Fraction] = {}
        for widx, word in enumerate(itertools.product(range(base), repeat=n)):
            poly = {tuple((1, i) for i in word): Fraction(1)}
            for w2, c in data.pbw.normal_form(poly).items():
                r = index[n][w2]
                key = (r, widx)
                cur = entries.get(key, ZERO) + c
                if cur:
                    entries[key] = cur
                else:
                    entries.pop(key, None)
        out.append(Matrix.from_entries(len(mons[n]), base ** n, entries))
    return out


def _tensor_with_identity(block: Matrix, m: int) -> Matrix:
    entries = {}
    for (r, c), v in block.entries_dict().items():
        for u in range(m):
            entries[(u * block.rows + r, u * block.cols + c)] = v
    return Matrix.from_entries(m * block.rows, m * block.cols, entries)


def _induced_map(src: ChainComplex, dst: ChainComplex, f_k: Matrix, k: int) -> Matrix:
    """Map on homology at degree k induced by a chain map component f_k."""
    K, I = src.cycle_space(k), src.boundary_space(k)
    K2, I2 = dst.cycle_space(k), dst.boundary_space(k)
    IK = Subspace.from_spanning_columns(
        K.dim, [K.coords(I.basis.column(t)) for t in range(I.dim)])
    IK2 = Subspace.from_spanning_columns(
        K2.dim, [K2.coords(I2.basis.column(t)) for t in range(I2.dim)])
    pi2 = quotient_projection(IK2)
    sec = quotient_section(IK)
    cols = []
    for c in range(K.dim - IK.dim):
        v = K.basis.apply(sec.column(c))
        w = f_k.apply(v)
        cols.append(pi2.apply(K2.coords(w)))
    return Matrix.from_columns(K2.dim - IK2.dim, cols)


@dataclass(frozen=True)
class ComparisonReport:
    degrees: tuple[int, ...]
    loday_homology: tuple[int, ...]
    ce_homology: tuple[int, ...]
    loday_cohomology: tuple[int, ...]
    ce_cohomology: tuple[int, ...]
    chain_map_ranks: tuple[int, ...]
    cochain_map_ranks: tuple[int, ...]
    h0_iso: bool
    h1_iso: bool
    hl2_to_h2_surjective: bool | None
    h2_to_hl2_injective: bool | None


def ce_projection(g: LeibnizAlgebra, coefficients: Coefficients, n_max: int
                  ) -> tuple[tuple[Matrix, ...], tuple[Matrix, ...], ComparisonReport]:
    """Chain maps from the tensor-module complex onto the small complex,
    the dual cochain maps, and the homology comparison up to n_max - 1.

    Raises NotAChainMap when either family fails to commute with the
    differentials.
    """
    data = _ce_setup(g, coefficients)
    lod = loday_complex(g, coefficients, n_max)
    ce = ce_chain(g, coefficients, n_max)
    lodco = loday_cochain_complex(g, coefficients, n_max)
    ceco = ce_cochain(g, coefficients, n_max)
    blocks = _projection_blocks(data, n_max)
    m = data.m_dim
    P = [_tensor_with_identity(b, m) for b in blocks]
    Q = [_tensor_with_identity(b.transpose(), m) for b in blocks]

    for n in range(1, n_max + 1):
        lhs = P[n - 1] @ lod.diffs[n - 1]
        rhs = ce.diffs[n - 1] @ P[n]
        if lhs.entries != rhs.entries:
            raise NotAChainMap(f"projection fails to commute with the boundary at degree {n}")
    for n in range(0, n_max):
        lhs = lodco.diffs[n] @ Q[n]
        rhs = Q[n + 1] @ ceco.diffs[n]
        if lhs.entries != rhs.entries:
            raise NotAChainMap(f"pullback fails to commute with the coboundary at degree {n}")

    degrees = tuple(range(n_max))
    lod_b = tuple(lod.homology(k) for k in degrees)
    ce_b = tuple(ce.homology(k) for k in degrees)
    lodco_b = tuple(lodco.homology(k) for k in degrees)
    ceco_b = tuple(ceco.homology(k) for k in degrees)
    chain_ranks = tuple(_induced_map(lod, ce, P[k], k).rank() for k in degrees)
    cochain_ranks = tuple(_induced_map(ceco, lodco, Q[k], k).rank() for k in degrees)

    def iso(k: int) -> bool:
        return (lod_b[k] == ce_b[k] == chain_ranks[k]
                and ceco_b[k] == lodco_b[k] == cochain_ranks[k])

    h2_surj = None
    h2_inj = None
    if n_max >= 3:
        h2_surj = chain_ranks[2] == ce_b[2]
        h2_inj = cochain_ranks[2] == ceco_b[2]

    report = ComparisonReport(
        degrees=degrees,
        loday_homology=lod_b,
        ce_homology=ce_b,
        loday_cohomology=lodco_b,
        ce_cohomology=ceco_b,
        chain_map_ranks=chain_ranks,
        cochain_map_ranks=cochain_ranks,
        h0_iso=iso(0),
        h1_iso=iso(1) if n_max >= 2 else False,
        hl2_to_h2_surjective=h2_surj,
        h2_to_hl2_injective=h2_inj,
    )
    return tuple(P), tuple(Q), report


# ---------------------------------------------------------------------------
# the left-normed graded-commutator subcomplex


def fg_subcomplex(g: LeibnizAlgebra, n_max: int) -> ChainComplex:
    """Restriction of the trivial-coefficient boundary to the spans of
    left-normed graded commutators inside each tensor power.

    Raises NotInvariant (from the restriction) if a boundary were to leave
    the span, which does not happen for genuine Leibniz brackets.
    """
    if g.convention != "left":
        raise ValueError("chain complexes expect the left convention; use opposite() first")
    base = g.dim
    spans = [Subspace.full(1), Subspace.full(base)]
    for n in range(2, n_max + 1):
        comp = free_graded_lie_component(base, n)
        spans.append(comp.subspace)
    dims = tuple(spans[n].dim for n in range(n_max + 1))
    diffs = []
    for n in range(1, n_max + 1):
        ambient = _loday_boundary_matrix(g, 1, None, None, n)
        diffs.append(restrict_map(ambient, spans[n], spans[n - 1]))
    return ChainComplex(0, dims, tuple(diffs), raising=False)


def _weight_tuples(fl: FreeLeibnizTruncation, n: int, w: int) -> list[tuple]:
    if n == 0:
        return [()] if w == 0 else []
    out = []
    for v in range(1, w - n + 2):
        for word in fl.words(v):
            for rest in _weight_tuples(fl, n - 1, w - v):
                out.append((word,) + rest)
    return out


class _FGBlocks:
    """Triangle of graded-commutator spans inside the weight-graded tensor
    powers of a truncated free algebra.  blocks[(n, w)] is (index map,
    ambient basis list, span Subspace, span basis as dict elements)."""

    def __init__(self, fl: FreeLeibnizTruncation):
        self.fl = fl
        self._ambient: dict[tuple[int, int], tuple[list, dict]] = {}
        self._span: dict[tuple[int, int], tuple[Subspace, list[Element]]] = {}

    def ambient(self, n: int, w: int) -> tuple[list, dict]:
        key = (n, w)
        if key not in self._ambient:
            basis = _weight_tuples(self.fl, n, w)
            self._ambient[key] = (basis, {t: i for i, t in enumerate(basis)})
        return self._ambient[key]

    def _to_vector(self, elem: Element, n: int, w: int) -> Vec:
        basis, index = self.ambient(n, w)
        out = [ZERO] * len(basis)
        for t, c in elem.items():
            out[index[t]] = c
        return tuple(out)

    def _to_element(self, vec: Vec, n: int, w: int) -> Element:
        basis, _ = self.ambient(n, w)
        return {basis[i]: c for i, c in enumerate(vec) if c}

    def span(self, n: int, w: int) -> tuple[Subspace, list[Element]]:
        key = (n, w)
        if key in self._span:
            return self._span[key]
        basis, _ = self.ambient(n, w)
        if n == 1:
            sub = Subspace.full(len(basis))
            elems = [{t: Fraction(1)} for t in basis]
        else:
            spanning = []
            for v in range(1, w - n + 2):
                prev_sub, prev_elems = self.span(n - 1, w - v)
                for c in prev_elems:
                    for letter in self.fl.words(v):
                        br = graded_commutator(c, {(letter,): Fraction(1)})
                        if br:
                            spanning.append(self._to_vector(br, n, w))
            sub = Subspace.from_spanning_columns(len(basis), spanning)
            elems = [self._to_element(sub.basis.column(t), n, w) for t in range(sub.dim)]
        self._span[key] = (sub, elems)
        return self._span[key]

    def boundary(self, n: int, w: int) -> Matrix:
        """Trivial-coefficient boundary on the full weight-w block."""
        src, _ = self.ambient(n, w)
        dst, dst_index = self.ambient(n - 1, w)
        entries: dict[tuple[int, int], Fraction] = {}
        for col, tup in enumerate(src):
            for j in range(1, n + 1):
                sj = Fraction(-1) ** j
                for i in range(1, j):
                    # left-convention bracket of slots j and i
                    combo = self.fl.bracket_words(tup[i - 1], tup[j - 1])
                    for z, c in combo.items():
                        new = tup[:i - 1] + (z,) + tup[i:j - 1] + tup[j:]
                        key = (dst_index[new], col)
                        cur = entries.get(key, ZERO) + sj * c
                        if cur:
                            entries[key] = cur
                        else:
                            entries.pop(key, None)
        return Matrix.from_entries(len(dst), len(src), entries)


def fg_weight_complex(fl: FreeLeibnizTruncation, w: int,
                      blocks: _FGBlocks | None = None) -> ChainComplex:
    """Weight-w block of the graded-commutator subcomplex over the free
    algebra, in degrees 1..w.  The block is finite: no tensor degree
    above w carries weight w."""
    if w < 1 or w > fl.max_weight:
        raise ValueError(f"weight {w} outside the truncation 1..{fl.max_weight}")
    if blocks is None:
        blocks = _FGBlocks(fl)
    dims = []
    subs = []
    for n in range(1, w + 1):
        sub, _ = blocks.span(n, w)
        subs.append(sub)
        dims.append(sub.dim)
    diffs = []
    for n in range(2, w + 1):
        ambient_d = blocks.boundary(n, w)
        diffs.append(restrict_map(ambient_d, subs[n - 1], subs[n - 2]))
    return ChainComplex(1, tuple(dims), tuple(diffs), raising=False)


DEFAULT_WEIGHT_BUDGET = {1: 6, 2: 5}
FALLBACK_WEIGHT_BUDGET = 3


@dataclass(frozen=True)
class WeightVerdict:
    weight: int
    h1: int
    expected_h1: int
    higher: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.h1 == self.expected_h1 and all(h == 0 for h in self.higher)


@dataclass(frozen=True)
class ConjectureReport:
    num_generators: int
    max_weight: int
    weights: tuple[WeightVerdict, ...]

    @property
    def failures(self) -> tuple[WeightVerdict, ...]:
        return tuple(v for v in self.weights if not v.ok)

    @property
    def verdict(self) -> str:
        return "PASS" if not self.failures else "FALSIFICATION"


def conjecture_check(num_generators: int, max_weight: int | None = None) -> ConjectureReport:
    """Per-weight homology of the graded-commutator subcomplex over the
    free algebra: expects H_1 = necklace count and H_n = 0 for n >= 2.

    A failing weight is reported, not raised; the verdict string flags it.
    """
    if max_weight is None:
        max_weight = DEFAULT_WEIGHT_BUDGET.get(num_generators, FALLBACK_WEIGHT_BUDGET)
    fl = FreeLeibnizTruncation(num_generators, max_weight)
    blocks = _FGBlocks(fl)
    verdicts = []
    for w in range(1, max_weight + 1):
        cplx = fg_weight_complex(fl, w, blocks)
        betti = cplx.betti()
        verdicts.append(WeightVerdict(
            weight=w,
            h1=betti[0],
            expected_h1=witt_dim(num_generators, w),
            higher=tuple(betti[1:]),
        ))
    return ConjectureReport(num_generators, max_weight, tuple(verdicts))
