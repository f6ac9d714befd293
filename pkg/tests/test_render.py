import pytest

from qlgas import PositionDistribution, render_pgm, write_csv


def _dist(entries):
    d = PositionDistribution()
    for t, x, p in entries:
        d.add(t, x, p)
    return d


def test_pgm_single_full_pixel():
    data = render_pgm(_dist([(0, 0, 1.0)]), 1, 1)
    assert data == b"P2\n1 1\n255\n255\n"


def test_pgm_scales_by_frame_maximum():
    # 255 * 0.25 / 0.5 = 127.5 rounds half-up to 128
    data = render_pgm(_dist([(0, 0, 0.5), (0, 1, 0.25)]), 2, 1)
    assert data == b"P2\n2 1\n255\n255 128\n"


def test_pgm_empty_distribution_is_blank():
    data = render_pgm(_dist([]), 2, 2)
    assert data == b"P2\n2 2\n255\n0 0\n0 0\n"


def test_pgm_time_runs_upward():
    data = render_pgm(_dist([(0, 0, 1.0), (1, 1, 1.0)]), 2, 2)
    assert data == b"P2\n2 2\n255\n0 255\n255 0\n"


def test_pgm_rejects_out_of_grid():
    with pytest.raises(ValueError, match="outside"):
        render_pgm(_dist([(0, 5, 1.0)]), 2, 2)


def test_csv_single_entry():
    assert write_csv(_dist([(0, 0, 1.0)])) == b"t,x,p\n0,0,1\n"


def test_csv_empty():
    assert write_csv(_dist([])) == b"t,x,p\n"


def test_csv_sorted_by_t_then_x():
    data = write_csv(_dist([(1, 3, 0.5), (1, 1, 0.5)]))
    assert data == b"t,x,p\n1,1,0.5\n1,3,0.5\n"


def test_csv_17_significant_digits():
    data = write_csv(_dist([(0, 0, 1 / 3)]))
    assert data == b"t,x,p\n0,0,0.33333333333333331\n"


def test_renderers_are_pure():
    d = _dist([(0, 0, 0.3), (1, 1, 0.7), (2, 0, 0.1)])
    assert render_pgm(d, 2, 3) == render_pgm(d, 2, 3)
    assert write_csv(d) == write_csv(d)
