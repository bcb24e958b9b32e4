"""Free Leibniz algebras as truncated tensor modules, plus the graded-Lie
spans inside tensor powers and the necklace dimension count.

A word (i1, ..., iw) stands for the left-normed bracket
[[...[x_{i1}, x_{i2}], ...], x_{iw}] in the free right Leibniz algebra;
bracketing by a single generator on the right appends a letter, and the
general case unfolds through the right identity

    [a, [b, v]] = [[a, b], v] - [[a, v], b].

Everything is truncated at a maximum weight; brackets that would exceed
it raise WeightOverflow.  The free left Leibniz algebra is the opposite,
so [u, v] on the left is bracket(v, u) here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactla import ONE, Subspace, ZERO

Element = dict[tuple, Fraction]


class WeightOverflow(Exception):
    """A bracket left the weight truncation."""


def _add_into(acc: Element, word: tuple, coeff: Fraction) -> None:
    c = acc.get(word, ZERO) + coeff
    if c:
        acc[word] = c
    else:
        acc.pop(word, None)


def scale_element(elem: Element, c: Fraction) -> Element:
    if not c:
        return {}
    return {w: c * v for w, v in elem.items()}


def add_elements(u: Element, v: Element) -> Element:
    out = dict(u)
    for w, c in v.items():
        _add_into(out, w, c)
    return out


def graded_commutator(u: Element, v: Element) -> Element:
    """[u, v] = u(x)v - (-1)^{pq} v(x)u with p, q the key lengths.

    Both arguments must be homogeneous in key length; letters count as
    degree 1 each, so tensor degree is just the length.
    """
    if not u or not v:
        return {}
    p = len(next(iter(u)))
    q = len(next(iter(v)))
    sign = Fraction(-1) ** (p * q)
    out: Element = {}
    for wu, cu in u.items():
        if len(wu) != p:
            raise ValueError("left argument is not homogeneous")
        for wv, cv in v.items():
            if len(wv) != q:
                raise ValueError("right argument is not homogeneous")
            _add_into(out, wu + wv, cu * cv)
            _add_into(out, wv + wu, -sign * cu * cv)
    return out


def _mobius(n: int) -> int:
    val = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            val = -val
        p += 1
    if n > 1:
        val = -val
    return val


def _divisors(n: int) -> list[int]:
    out = [e for e in range(1, n + 1) if n % e == 0]
    return out


def witt_dim(d: int, w: int) -> int:
    """Dimension of the weight-w component of the free Lie algebra on d
    generators: (1/w) * sum over e | w of mobius(e) d^(w/e)."""
    total = sum(_mobius(e) * d ** (w // e) for e in _divisors(w))
    assert total % w == 0
    return total // w


@dataclass(frozen=True)
class GradedLieComponent:
    num_letters: int
    degree: int
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


def tensor_word_index(word: tuple[int, ...], base: int) -> int:
    idx = 0
    for i in word:
        idx = idx * base + i
    return idx


def _element_to_vector(elem: Element, base: int, degree: int) -> tuple[Fraction, ...]:
    out = [ZERO] * (base ** degree)
    for w, c in elem.items():
        out[tensor_word_index(w, base)] = c
    return tuple(out)


def _vector_to_element(vec, base: int, degree: int) -> Element:
    words = list(itertools.product(range(base), repeat=degree))
    return {w: c for w, c in zip(words, vec) if c}


def free_graded_lie_component(d: int, n: int) -> GradedLieComponent:
    """Span of left-normed degree-n commutators of d degree-1 letters,
    inside the n-th tensor power."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    letters = [{(i,): ONE} for i in range(d)]
    current = letters
    for length in range(2, n + 1):
        spanning = []
        for c in current:
            for x in letters:
                w = graded_commutator(c, x)
                if w:
                    spanning.append(_element_to_vector(w, d, length))
        span = Subspace.from_spanning_columns(d ** length, spanning)
        current = [
            _vector_to_element(span.basis.column(t), d, length)
            for t in range(span.dim)
        ]
    if n == 1:
        span = Subspace.full(d)
    return GradedLieComponent(d, n, span)


class FreeLeibnizTruncation:
    """Free right Leibniz algebra on num_generators generators, truncated
    above max_weight.  Elements are dicts word -> coefficient."""

    def __init__(self, num_generators: int, max_weight: int):
        if num_generators < 1 or max_weight < 1:
            raise ValueError("need at least one generator and weight 1")
        self.num_generators = num_generators
        self.max_weight = max_weight
        self._memo: dict[tuple[tuple, tuple], Element] = {}
        if max_weight >= 3:
            self._sanity_check()

    def words(self, weight: int) -> list[tuple[int, ...]]:
        if weight < 1 or weight > self.max_weight:
            return []
        return list(itertools.product(range(self.num_generators), repeat=weight))

    def all_words(self) -> list[tuple[int, ...]]:
        out = []
        for w in range(1, self.max_weight + 1):
            out.extend(self.words(w))
        return out

    def dim(self, weight: int) -> int:
        return self.num_generators ** weight

    def bracket_words(self, a: tuple[int, ...], b: tuple[int, ...]) -> Element:
        if len(a) + len(b) > self.max_weight:
            raise WeightOverflow(
                f"weight {len(a)} + {len(b)} exceeds the truncation {self.max_weight}")
        if len(b) == 1:
            return {a + b: ONE}
        key = (a, b)
        got = self._memo.get(key)
        if got is not None:
            return got
        head, last = b[:-1], b[-1:]
        # [a, [head, v]] = [[a, head], v] - [[a, v], head]
        t1 = self.bracket(self.bracket_words(a, head), {last: ONE})
        t2 = self.bracket(self.bracket_words(a, last), {head: ONE})
        out = add_elements(t1, scale_element(t2, Fraction(-1)))
        self._memo[key] = out
        return out

    def bracket(self, u: Element, v: Element) -> Element:
        out: Element = {}
        for wu, cu in u.items():
            for wv, cv in v.items():
                for w, c in self.bracket_words(wu, wv).items():
                    _add_into(out, w, cu * cv * c)
        return out

    def bracket_left(self, u: Element, v: Element) -> Element:
        """Bracket of the opposite (left-convention) free algebra."""
        return self.bracket(v, u)

    def _sanity_check(self) -> None:
        # right identity on all generator triples; cheap and catches any
        # slip in the unfolding recursion before it contaminates a run
        for i in range(self.num_generators):
            a = {(i,): ONE}
            for j in range(self.num_generators):
                b = {(j,): ONE}
                for k in range(self.num_generators):
                    c = {(k,): ONE}
                    lhs = self.bracket(a, self.bracket(b, c))
                    rhs = add_elements(
                        self.bracket(self.bracket(a, b), c),
                        scale_element(self.bracket(self.bracket(a, c), b), Fraction(-1)),
                    )
                    if lhs != rhs:
                        raise AssertionError(f"right identity fails on generators {i},{j},{k}")


def free_leibniz(num_generators: int, max_weight: int) -> FreeLeibnizTruncation:
    return FreeLeibnizTruncation(num_generators, max_weight)


def free_leibniz_bracket(fl: FreeLeibnizTruncation, u: Element, v: Element,
                         convention: str = "right") -> Element:
    if convention == "right":
        return fl.bracket(u, v)
    if convention == "left":
        return fl.bracket_left(u, v)
    raise ValueError(f"unknown convention {convention!r}")
