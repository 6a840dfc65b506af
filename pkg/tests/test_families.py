from fractions import Fraction

import pytest

from eqdesign.families import (alpha_h, economy, economy_limits, gen_G, gen_H,
                               gen_M, gen_path, generate, leaf_counts,
                               min_size_oracle, predicted_size,
                               predicted_size_G, predicted_size_H,
                               predicted_size_M, q_min)
from eqdesign.poly import DesignPoly, mono_from_vars

from conftest import brute_edge_profile


def test_path():
    assert gen_path(1).terms == frozenset([0, 1])
    p3 = gen_path(3)
    assert p3.terms == frozenset([0b000, 0b001, 0b011, 0b111])
    assert brute_edge_profile(p3) == (1, 1, 1)
    for d in (1, 2, 5, 9):
        assert len(gen_path(d)) == d + 1
        assert gen_path(d).is_equitable() == 1


def test_gen_G_base_and_small():
    assert gen_G(3, 1).terms == frozenset([0, 0b001, 0b010, 0b100])
    assert gen_G(2, 2).terms == frozenset([0b00, 0b01, 0b10, 0b11])
    g44 = gen_G(4, 4)
    assert len(g44) == 12
    assert g44.is_equitable() == 4


def test_gen_G_range_errors():
    with pytest.raises(ValueError):
        gen_G(3, 5)
    with pytest.raises(ValueError):
        gen_G(3, 0)
    with pytest.raises(ValueError):
        gen_G(0, 1)


def test_predicted_size_G():
    assert predicted_size_G(7, 1) == 8
    assert predicted_size_G(19, 5) == 88
    assert predicted_size_G(4, 4) == 12


@pytest.mark.parametrize("d", range(1, 11))
def test_G_sweep_equitable_and_sized(d):
    for m in range(1, (1 << (d - 1)) + 1):
        g = gen_G(d, m)
        assert g.is_equitable() == m, (d, m)
        assert len(g) == predicted_size_G(d, m), (d, m)


def test_gen_H_examples():
    h53 = gen_H(5, 3)
    assert len(h53) == 11 == 1 + 2 * 5
    assert h53.is_equitable() == 3
    expected = {0, mono_from_vars(1, 5)}
    expected |= {mono_from_vars(k) for k in range(1, 6)}
    expected |= {mono_from_vars(j, j + 1) for j in range(1, 5)}
    assert h53.terms == frozenset(expected)

    h42 = gen_H(4, 2)
    assert len(h42) == 7
    assert brute_edge_profile(h42) == (2, 2, 2, 2)

    assert len(gen_H(4, 5)) == 13
    assert len(gen_H(19, 5)) == 65


def test_gen_H_range_errors():
    with pytest.raises(ValueError):
        gen_H(4, 1)
    with pytest.raises(ValueError):
        gen_H(2, 3)


@pytest.mark.parametrize("d", range(2, 11))
def test_H_sweep_equitable_and_sized(d):
    for m in range(2, (1 << (d - 1)) + 1):
        h = gen_H(d, m)
        assert h.is_equitable() == m, (d, m)
        assert len(h) == predicted_size_H(d, m).value, (d, m)


def test_leaf_counts():
    lc6 = leaf_counts(6)
    assert (lc6.p2, lc6.p3) == (0, 2)
    lc5 = leaf_counts(5)
    assert (lc5.p2, lc5.p3) == (1, 1)
    lc2 = leaf_counts(2)
    assert (lc2.p2, lc2.p3) == (1, 0)
    with pytest.raises(ValueError):
        leaf_counts(1)


@pytest.mark.parametrize("m", range(2, 130))
def test_leaf_counts_weighting(m):
    lc = leaf_counts(m)
    assert 2 * lc.p2 + 3 * lc.p3 == m
    assert -(1 << (lc.kappa - 1)) <= lc.i_offset < (1 << (lc.kappa - 1))


def test_predicted_size_H_closed_forms():
    for d in range(3, 15):
        assert predicted_size_H(d, 3).value == 1 + 2 * d
    for d in range(4, 15):
        assert predicted_size_H(d, 6).value == 4 * d - 2
    assert predicted_size_H(19, 5).value == 65
    assert predicted_size_H(19, 5).alpha == Fraction(7, 2)


def test_q_min():
    assert q_min(4) == 3
    assert q_min(1) == 1
    assert q_min(5) == 4
    assert q_min(2) == 2
    with pytest.raises(ValueError):
        q_min(0)


def test_gen_M_examples():
    m204 = gen_M(20, 4)
    assert len(m204) == 49
    assert m204.is_equitable() == 4

    m195 = gen_M(19, 5)
    assert len(m195) == 59 == predicted_size_M(19, 5)
    assert m195.is_equitable() == 5

    m62 = gen_M(6, 2)
    assert len(m62) == 10
    assert brute_edge_profile(m62) == (2,) * 6


def test_gen_M_requires_room():
    with pytest.raises(ValueError):
        gen_M(3, 4)
    with pytest.raises(ValueError):
        gen_M(5, 4)


def test_gen_M_blocks_share_only_origin():
    from eqdesign.families import _m_decomposition
    for (d, m) in [(6, 2), (20, 4), (12, 3), (19, 5)]:
        q, copies, t = _m_decomposition(d, m)
        blocks = [gen_H(q, m).shift(j * q, d) for j in range(copies)]
        blocks.append(gen_H(t, m).shift(copies * q, d))
        for a in range(len(blocks)):
            for b in range(a + 1, len(blocks)):
                assert blocks[a].terms & blocks[b].terms == {0}


def test_economy():
    for d in (3, 6, 10):
        assert economy(gen_path(d), 1) == Fraction(d, d + 1)
        assert DesignPoly.full(d).economy() == Fraction(d, 2)
    assert economy(gen_M(20, 4), 4) == Fraction(80, 49)
    with pytest.raises(ValueError):
        economy(DesignPoly.of(3, [0, 0b001, 0b010, 0b101, 0b110]))


def test_economy_limits():
    assert economy_limits(1)[0] == 1
    for m in (2, 3, 7, 12, 100):
        limit_g, (limit_h, h_bounds), m_bounds = economy_limits(m)
        assert limit_g == 1
        assert h_bounds[0] <= limit_h <= h_bounds[1]
        assert m_bounds == (Fraction(m * m, 2 * m - 1), Fraction(m * m, m - 1))
    assert economy_limits(2)[1][0] == Fraction(4, 3)
    assert economy_limits(3)[1][0] == Fraction(3, 2)


def test_alpha_h_matches_growth():
    # finite differences of the construction size confirm the slope
    for m in (2, 3, 4, 6, 11):
        sizes = [len(gen_H(d, m)) for d in range(8, 13)]
        alpha2 = alpha_h(m) * 2
        assert sizes[2] - sizes[0] == alpha2
        assert sizes[4] - sizes[2] == alpha2


def test_min_size_oracle():
    size, witness = min_size_oracle(2, 2)
    assert size == 4 and witness == DesignPoly.full(2)
    assert min_size_oracle(3, 2)[0] == 6 == len(gen_H(3, 2))
    size31, w31 = min_size_oracle(3, 1)
    assert size31 == 4
    assert brute_edge_profile(w31) == (1, 1, 1)
    with pytest.raises(ValueError):
        min_size_oracle(5, 2)


def test_generate_dispatch():
    assert generate("G", 3, 1) == gen_G(3, 1)
    assert generate("path", 4, 1) == gen_path(4)
    assert predicted_size("path", 4, 1) == 5
    with pytest.raises(ValueError):
        generate("Z", 3, 1)
    with pytest.raises(ValueError):
        generate("path", 4, 2)


def test_family_ordering_small():
    # |G| >= |H| >= |M| and economies reversed, on a small grid
    for d in range(4, 11):
        for m in range(2, min(1 << (d - 1), 17) + 1):
            sizes = {"G": len(gen_G(d, m)), "H": len(gen_H(d, m))}
            assert sizes["G"] >= sizes["H"], (d, m)
            if d >= 2 * q_min(m):
                sizes["M"] = len(gen_M(d, m))
                assert sizes["H"] >= sizes["M"], (d, m)
