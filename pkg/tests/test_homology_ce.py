import random
from fractions import Fraction

import pytest

from leibhom.homology import (
    ce_chain,
    ce_cochain,
    ce_projection,
    classical_ce,
    classical_ce_cochain,
    lie_coefficients,
    rep_coefficients,
    trivial_coefficients,
)
from leibhom.leibcore import adjoint_representation, lie_quotient

from conftest import (
    CORPUS,
    LIE_CORPUS,
    character_module,
    conjugate,
    quotient_adjoint_module,
    unimodular,
)


def test_a2_small_complex_dims_and_betti():
    cx = ce_chain(CORPUS["A2"], trivial_coefficients(), 4)
    assert cx.dims == (1, 2, 2, 2, 2)
    assert cx.betti()[:4] == (1, 1, 0, 0)


def test_a2_small_complex_frozen_differentials():
    cx = ce_chain(CORPUS["A2"], trivial_coefficients(), 4)
    d1, d2, d3, d4 = cx.diffs
    assert d1.is_zero()
    # degree-2 basis [xy, y^]: only the hat generator maps down, to y
    assert d2.entries_dict() == {(1, 1): Fraction(1)}
    # degree-3 basis [x y^, y y^]: x y^ -> -xy
    assert d3.entries_dict() == {(0, 0): Fraction(-1)}
    # degree-4 basis [x y y^, y^ y^]: the doubled hat maps to 2 y y^
    assert d4.entries_dict() == {(1, 1): Fraction(2)}


def test_a2_small_cochain_betti():
    cx = ce_cochain(CORPUS["A2"], trivial_coefficients(), 4)
    assert cx.betti()[:4] == (1, 1, 0, 0)


def test_small_complex_equals_classical_for_lie_input():
    for name, h in LIE_CORPUS.items():
        g = h.as_leibniz()
        small = ce_chain(g, trivial_coefficients(), 4)
        classical = classical_ce(h, None, 4)
        assert small.dims == classical.dims, name
        for a, b in zip(small.diffs, classical.diffs):
            assert a.entries == b.entries, name
        smallco = ce_cochain(g, trivial_coefficients(), 4)
        classicalco = classical_ce_cochain(h, None, 4)
        assert smallco.dims == classicalco.dims, name
        for a, b in zip(smallco.diffs, classicalco.diffs):
            assert a.entries == b.entries, name


def test_small_complex_betti_equals_classical_of_quotient():
    rng = random.Random(11)
    cases = [CORPUS["A2"], CORPUS["r2"]]
    for _ in range(3):
        base = rng.choice([CORPUS["abelian3"], CORPUS["heis3"], CORPUS["A2+k"]])
        p, pinv = unimodular(rng, base.dim)
        cases.append(conjugate(base, p, pinv))
    for g in cases:
        qdata = lie_quotient(g)
        small = ce_chain(g, trivial_coefficients(), 4)
        classical = classical_ce(qdata.quotient, None, 4)
        assert small.betti()[:4] == classical.betti()[:4]
        mod = quotient_adjoint_module(qdata) or character_module(qdata)
        if mod is None:
            continue
        small_m = ce_chain(g, lie_coefficients(mod), 4)
        classical_m = classical_ce(qdata.quotient, mod, 4)
        assert small_m.betti()[:4] == classical_m.betti()[:4]


def test_enveloping_builders_reject_two_sided_coefficients():
    g = CORPUS["A2"]
    coeffs = rep_coefficients(adjoint_representation(g))
    with pytest.raises(ValueError):
        ce_chain(g, coeffs, 3)
    with pytest.raises(ValueError):
        ce_cochain(g, coeffs, 3)


def test_classical_heisenberg_betti():
    h = LIE_CORPUS["heis3"]
    cx = classical_ce(h, None, 3)
    assert cx.betti() == (1, 2, 2, 1)


def test_projection_report_for_a2():
    _, _, rep = ce_projection(CORPUS["A2"], trivial_coefficients(), 3)
    assert rep.degrees == (0, 1, 2)
    assert rep.loday_homology == (1, 1, 1)
    assert rep.ce_homology == (1, 1, 0)
    assert rep.loday_cohomology == (1, 1, 1)
    assert rep.ce_cohomology == (1, 1, 0)
    assert rep.chain_map_ranks == (1, 1, 0)
    assert rep.cochain_map_ranks == (1, 1, 0)
    assert rep.h0_iso and rep.h1_iso
    assert rep.hl2_to_h2_surjective and rep.h2_to_hl2_injective


def test_projection_verdicts_across_corpus():
    for name, g in CORPUS.items():
        qdata = lie_quotient(g)
        systems = [trivial_coefficients()]
        mod = quotient_adjoint_module(qdata)
        if mod is not None:
            systems.append(lie_coefficients(mod))
        ch = character_module(qdata)
        if ch is not None:
            systems.append(lie_coefficients(ch))
        for coeffs in systems:
            _, _, rep = ce_projection(g, coeffs, 3)
            assert rep.h0_iso, (name, coeffs)
            assert rep.h1_iso, (name, coeffs)
            assert rep.hl2_to_h2_surjective, (name, coeffs)
            assert rep.h2_to_hl2_injective, (name, coeffs)


def test_projection_shallow_run_leaves_degree_two_verdicts_open():
    _, _, rep = ce_projection(CORPUS["A2"], trivial_coefficients(), 2)
    assert rep.h0_iso is not None and rep.h1_iso is not None
    assert rep.hl2_to_h2_surjective is None
    assert rep.h2_to_hl2_injective is None
