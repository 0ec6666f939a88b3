import csv
import struct

import numpy as np
import pytest

from sridge import io
from sridge.core import HarmonicCoeffs
from sridge.errors import FormatError
from sridge.sht import SphereSignal, grid

from conftest import random_coeffs


def test_coeff_round_trip_bit_exact(tmp_path, rng):
    c = random_coeffs(rng, 21, -3)
    path = tmp_path / "c.sshc"
    io.write_coeffs(path, c)
    assert path.stat().st_size == 13 + 16 * 21 * 21
    back = io.read_coeffs(path)
    assert (back.L, back.s) == (21, -3)
    assert back.data.tobytes() == c.data.tobytes()


def test_map_round_trip_bit_exact(tmp_path, rng):
    L = 9
    samples = rng.normal(size=(L, 2 * L - 1)) + 1j * rng.normal(size=(L, 2 * L - 1))
    f = SphereSignal(L, 2, samples)
    path = tmp_path / "f.smap"
    io.write_map(path, f)
    assert path.stat().st_size == 13 + 16 * L * (2 * L - 1)
    back = io.read_map(path)
    assert back.s == 2 and back.samples.tobytes() == f.samples.tobytes()


def test_header_layout(tmp_path):
    path = tmp_path / "c.sshc"
    io.write_coeffs(path, HarmonicCoeffs.delta(2, 1, -1, value=3 - 4j))
    raw = path.read_bytes()
    assert raw[:5] == b"SSHC1"
    assert struct.unpack_from("<Ii", raw, 5) == (2, 0)
    # lm_index(1, -1) = 1: second (re, im) pair
    assert struct.unpack_from("<2d", raw, 13 + 16) == (3.0, -4.0)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda raw: raw[:10],
        lambda raw: b"XXXXX" + raw[5:],
        lambda raw: raw[:-8],
        lambda raw: raw + b"\0" * 16,
        lambda raw: raw[:5] + struct.pack("<Ii", 0, 0) + raw[13:],
        lambda raw: raw[:5] + struct.pack("<Ii", 4, 9) + raw[13:],
    ],
    ids=["short", "magic", "truncated", "trailing", "zero-L", "bad-spin"],
)
def test_malformed_coeff_files(tmp_path, rng, mutate):
    path = tmp_path / "c.sshc"
    io.write_coeffs(path, random_coeffs(rng, 4))
    path.write_bytes(mutate(path.read_bytes()))
    with pytest.raises(FormatError):
        io.read_coeffs(path)


def test_wrong_kind_rejected(tmp_path, rng):
    path = tmp_path / "c.sshc"
    io.write_coeffs(path, random_coeffs(rng, 4))
    with pytest.raises(FormatError):
        io.read_map(path)
    with pytest.raises(FormatError):
        io.read_coeffs(tmp_path / "missing")


def test_csv_dumps(tmp_path, rng):
    c = random_coeffs(rng, 5)
    io.write_coeffs_csv(tmp_path / "c.csv", c)
    rows = list(csv.reader(open(tmp_path / "c.csv")))
    assert rows[0] == ["l", "m", "re", "im"]
    assert len(rows) == 26
    l, m, re, im = rows[1 + 7]
    assert (int(l), int(m)) == (2, 1)
    assert complex(float(re), float(im)) == c[2, 1]

    L = 4
    f = SphereSignal(L, 0, np.arange(L * (2 * L - 1), dtype=float).reshape(L, -1))
    io.write_map_csv(tmp_path / "f.csv", f)
    rows = list(csv.reader(open(tmp_path / "f.csv")))
    theta, phi = grid(L)
    assert rows[0] == ["theta", "phi", "re", "im"]
    assert float(rows[1 + 8][0]) == theta[1] and float(rows[1 + 8][1]) == phi[1]
    assert float(rows[1 + 8][2]) == 8.0
