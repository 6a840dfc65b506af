import json

import pytest

from eqdesign.poly import (DesignPoly, DimensionMismatch, design_from_dict,
                           design_to_dict, dumps_design, loads_design,
                           mono_from_vars, mono_mul, mono_name, mono_parse,
                           mono_str, to_dot)

X1, X2, X3, X4 = 0b0001, 0b0010, 0b0100, 0b1000


def test_mono_mul_involution_and_disjoint():
    assert mono_mul(X1, X1) == 0
    assert mono_mul(X1, X2) == X1 | X2
    assert mono_mul(0b011, 0b110) == 0b101  # X1X2 * X2X3 = X1X3


def test_mono_mul_dim_check():
    with pytest.raises(ValueError):
        mono_mul(0b100, 0b001, dim=2)


def test_mono_words():
    assert mono_str(X1, 3) == "100"
    assert mono_str(0, 3) == "000"
    assert mono_parse("101") == 0b101
    assert mono_name(0) == "1"
    assert mono_name(X1 | X3) == "X1X3"
    with pytest.raises(ValueError):
        mono_parse("10a")


def test_mirror_figure_example():
    # reflection of 1 + X1 + X2 + X1X3 + X2X3 along X1
    p = DesignPoly.of(3, [0, X1, X2, X1 | X3, X2 | X3])
    assert p.mirror(X1).terms == frozenset([X1, 0, X1 | X2, X3, X1 | X2 | X3])


def test_mirror_identity_and_involution():
    p = DesignPoly.of(3, [0, X1, X2 | X3])
    assert p.mirror(0) == p
    s = X1 | X3
    assert p.mirror(s).mirror(s) == p
    assert len(p.mirror(s)) == len(p)


def test_scalar_product():
    p = DesignPoly.of(2, [0, X1, X2])
    assert p.scalar(p) == 3
    q = DesignPoly.of(2, [X1, X1 | X2])
    assert DesignPoly.of(2, [0, X1]).scalar(q) == 1
    assert p.scalar(DesignPoly.zero(2)) == 0
    with pytest.raises(DimensionMismatch):
        p.scalar(DesignPoly.zero(3))


def test_edge_profile_examples():
    square = DesignPoly.of(2, [0b00, 0b01, 0b10, 0b11])
    assert square.edge_profile() == (2, 2)
    e42 = DesignPoly.of(4, [0, X1, X2, X1 | X2, X1 | X2 | X3, X1 | X2 | X4,
                            X1 | X2 | X3 | X4])
    assert e42.edge_profile() == (2, 2, 2, 2)
    lopsided = DesignPoly.of(3, [0, X1, X2, X1 | X3, X2 | X3])
    assert lopsided.edge_profile() == (1, 1, 2)


def test_is_equitable():
    square = DesignPoly.of(2, [0b00, 0b01, 0b10, 0b11])
    assert square.is_equitable() == 2
    lopsided = DesignPoly.of(3, [0, X1, X2, X1 | X3, X2 | X3])
    assert lopsided.is_equitable() is None


def test_complement():
    assert DesignPoly.full(3).complement() == DesignPoly.zero(3)
    star = DesignPoly.of(3, [0, X1, X2, X3])
    comp = star.complement()
    assert comp.terms == frozenset([X1 | X2, X1 | X3, X2 | X3, X1 | X2 | X3])
    assert comp.is_equitable() == (1 << 2) + 1 - 4  # = 1
    square = DesignPoly.of(2, [0b00, 0b01, 0b10, 0b11])
    assert square.complement().edge_profile() == (0, 0)


def test_permute():
    p = DesignPoly.of(2, [0, X1])
    assert p.permute([2, 1]).terms == frozenset([0, X2])
    assert p.permute([1, 2]) == p
    lopsided = DesignPoly.of(3, [0, X1, X2, X1 | X3, X2 | X3])
    # send direction 3 to 1
    rolled = lopsided.permute([2, 3, 1])
    assert sorted(rolled.edge_profile()) == sorted(lopsided.edge_profile())
    assert rolled.edge_profile()[0] == 2
    with pytest.raises(ValueError):
        p.permute([1, 1])


def test_shift():
    p = DesignPoly.of(1, [0, X1])
    assert p.shift(2, 3).terms == frozenset([0, X3])
    assert p.shift(0, 1) == p
    q = DesignPoly.of(2, [0, X1, X2])
    assert q.shift(3, 5).terms == frozenset([0, X4, 0b10000])
    with pytest.raises(ValueError):
        q.shift(4, 5)


def test_union_semantics():
    a = DesignPoly.of(2, [0, X1])
    b = DesignPoly.of(2, [X2])
    assert a.union_disjoint(b).terms == frozenset([0, X1, X2])
    with pytest.raises(ValueError):
        a.union_disjoint(DesignPoly.of(2, [X1]))
    c = DesignPoly.of(2, [0, X2])
    assert a.merge_shared_origin(c).terms == frozenset([0, X1, X2])
    with pytest.raises(ValueError):
        a.merge_shared_origin(DesignPoly.of(2, [0, X1]))


def test_invalid_construction():
    with pytest.raises(ValueError):
        DesignPoly.of(2, [0b100])
    with pytest.raises(ValueError):
        DesignPoly.of(0, [])
    with pytest.raises(ValueError):
        DesignPoly.of(63, [0])


def test_json_round_trip_byte_identical():
    p = DesignPoly.of(3, [X2, 0, X1 | X2 | X3, X1])
    text = dumps_design(p, family="G", m=1)
    design, meta = loads_design(text)
    assert design == p
    again = dumps_design(design, family=meta["family"], m=meta["m"])
    assert again == text
    obj = json.loads(text)
    assert obj["terms"] == ["000", "100", "010", "111"]  # graded-lex order


def test_design_from_dict_validation():
    with pytest.raises(ValueError):
        design_from_dict({"d": 3, "terms": ["10"]})
    with pytest.raises(ValueError):
        design_from_dict({"terms": []})


def test_dot_export():
    square = DesignPoly.of(2, [0b00, 0b01, 0b10, 0b11])
    dot = to_dot(square, name="sq")
    assert dot.startswith("graph sq {")
    assert '"00" -- "10" [dir=1];' in dot or '"00" -- "01" [dir=1];' in dot
    assert dot.count("--") == 4


def test_edges_listing():
    square = DesignPoly.of(2, [0b00, 0b01, 0b10, 0b11])
    assert set(square.edges()) == {(0b00, 0b01, 1), (0b10, 0b11, 1),
                                   (0b00, 0b10, 2), (0b01, 0b11, 2)}
