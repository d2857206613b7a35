import pytest

import pyverlinde as pv


def test_alcove():
    assert pv.alcove(2, 2) == [[2, 0], [1, 0], [0, 0]]
    assert pv.alcove_size(6, 6) == 462


def test_verlinde_numbers():
    assert pv.verlinde(2, 2, 1) == 3
    assert pv.verlinde(2, 6, 2) == 84
    assert pv.verlinde(4, 4, 2) == 4680
    assert pv.pu_verlinde(4, 2, 1) == 5


def test_spin_refinement():
    assert pv.spin_admissible(2, 2) == (True, 1, 2)
    assert pv.spin_admissible(3, 3)[0] is False
    assert pv.spin_verlinde(2, 2, [(0, 0)]) == 1
    assert pv.spin_verlinde(2, 2, [(1, 1)]) == 0
    assert pv.spin_verlinde(4, 4, [(1, 0), (0, 0)]) == 18
    total = sum(pv.spin_verlinde(2, 6, [(a, b)]) for a in range(2) for b in range(2))
    assert total == pv.verlinde(2, 6, 1) == 7


def test_coho_and_pu_spin():
    assert pv.coho_admissible(2, 4)
    assert pv.coho_verlinde(2, 4, 1, [(0, 0)]) == 2
    assert pv.pu_spin_admissible(2, 2)
    assert pv.pu_spin_verlinde(2, 2, [(0, 0)]) == 1


def test_oracle_and_duality():
    assert pv.handle_trace(2, 2, 2) == 10
    assert pv.level_rank_ok(2, 6, 2)


def test_surfaces_and_surgery():
    assert pv.arf([(1, 1)]) == 1
    assert pv.arf([(1, 1), (1, 1)]) == 0
    assert pv.surgery_count([[0]], 2) == 2
    solvable, count, particular, _ = pv.surgery_solve([[1]], 4)
    assert solvable and count == 1 and particular == [2]


def test_errors():
    with pytest.raises(ValueError):
        pv.verlinde(1, 2, 1)
    with pytest.raises(ValueError):
        pv.spin_verlinde(3, 3, [(0, 0)])
