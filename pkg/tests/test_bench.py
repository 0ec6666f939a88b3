import numpy as np
import pytest

from sridge.bench import BenchRecord, loglog_slope, random_coeffs, read_csv, run_benchmark, write_csv
from sridge.core import lm_arrays


def test_random_coeffs_range_and_parity():
    c = random_coeffs(32, 1, rng=5)
    el, _ = lm_arrays(32)
    assert np.all(np.abs(c.data.real) <= 1) and np.all(np.abs(c.data.imag) <= 1)
    assert np.all(c.data[(el + 1) % 2 == 1] == 0)
    assert np.array_equal(c.data, random_coeffs(32, 1, rng=5).data)
    full = random_coeffs(8, 0, rng=1, antipodal=False)
    assert np.count_nonzero(full.data) == 64


def test_loglog_slope():
    L = np.array([16, 32, 64, 128])
    assert loglog_slope(L, 3.0 * L**2.5) == pytest.approx(2.5)


def test_run_and_csv_round_trip(tmp_path):
    seen = []
    records = run_benchmark([16, 32], trials=2, seed=3, progress=seen.append)
    assert [r.L for r in records] == [16, 32] and seen == records
    for r in records:
        assert r.trials == 2 and len(r.errors) == 2
        assert r.max_abs_error == pytest.approx(np.mean(r.errors))
        assert r.max_abs_error < 1e-12 and r.wall_seconds > 0
    path = tmp_path / "bench.csv"
    write_csv(path, records)
    assert path.read_text().splitlines()[0] == "L,max_abs_error,wall_seconds,trials"
    back = read_csv(path)
    assert back == records
    Ls = [r.L for r in records]
    assert loglog_slope(Ls, [r.wall_seconds for r in back]) == loglog_slope(Ls, [r.wall_seconds for r in records])


def test_errors_are_deterministic():
    a = run_benchmark([16], trials=3, seed=9)[0]
    b = run_benchmark([16], trials=3, seed=9)[0]
    assert a.errors == b.errors


def test_read_csv_rejects_bad_header(tmp_path):
    path = tmp_path / "x.csv"
    path.write_text("a,b\n")
    with pytest.raises(ValueError):
        read_csv(path)


def test_spin_benchmark():
    rec = run_benchmark([16], trials=1, s=2)[0]
    assert isinstance(rec, BenchRecord) and rec.max_abs_error < 1e-12
