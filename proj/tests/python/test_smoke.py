import pytest

import smallcover as sc

HEXAGON_PAIR = ["101010101000", "111111000000", "000000101010", "000000111111"]


def test_hexagon_pair_invariants():
    lam = sc.CharMatrix([6, 6], HEXAGON_PAIR)
    assert lam.valid
    assert sc.orientable(lam)
    assert sc.factor_compatible(lam)
    assert sc.small_cover_betti(lam) == [1, 4, 10, 4, 1]
    assert sc.mod2_betti(lam) == [1, 8, 18, 8, 1]
    assert sc.sq1_e2_betti(lam) == [1, 4, 10, 4, 1]
    h = sc.hodge(lam)
    assert h["T"] == [1, 2, 2]
    assert h["t"] == [1, 0, 2, 2]
    assert h["hodge"] == [[1, 2, 2], [2, 6, 2], [2, 2, 1]]


def test_blockize_hexagon_pair():
    form = sc.blockize(sc.CharMatrix([6, 6], HEXAGON_PAIR))
    assert form["factor_order"] == [2, 1]
    assert form["rows"] == ["111111000000", "101010000000", "000000111111", "101000101010"]
    assert form["tower_genera"] == [2, 2]
    assert form["verified"]


def test_invalid_and_incompatible_raise():
    bad = sc.CharMatrix([4], ["1100", "0011"])
    assert not bad.valid
    assert bad.invalid_vertex == [1]
    with pytest.raises(sc.NotCharacteristic):
        sc.small_cover_betti(bad)
    klein = sc.CharMatrix([4], ["1011", "0101"])
    assert sc.small_cover_betti(klein) == [1, 1, 0]
    with pytest.raises(sc.NotFactorCompatible):
        sc.hodge(klein)


def test_enumeration_and_formulas():
    assert sc.enumerate_charmaps([4]) == [["1010", "0101"], ["1010", "0111"], ["1011", "0101"]]
    assert sc.enumerate_charmaps([4, 4], jobs=3) == sc.enumerate_charmaps([4, 4])
    assert sc.genus(6) == 17
    assert sc.rz_poincare([4, 6]) == [1, 36, 70, 36, 1]
    assert sc.recover_T([1, 4, 10, 4, 1], 2) == [1, 2, 2]
    with pytest.raises(ValueError):
        sc.recover_T([1, 0, 1, 0, 1], 2)
