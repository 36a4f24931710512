import math
import random

import mpmath
import pytest

from rainbowconn.bounds import (
    CSV_HEADER,
    bounds_row,
    ceil_log2,
    floor_log2,
    lemma1_upper,
    lemma2_lower,
    ratio_table,
    rows_to_csv,
    sandwich_check,
)
from rainbowconn.errors import InvalidInputError

POWERS = [2 ** j for j in range(17, 31)]


@pytest.mark.parametrize("n,expected", [(8, 20), (20, 91), (2, 2), (3, 6), (1024, 10159)])
def test_lemma1_upper(n, expected):
    assert lemma1_upper(n) == expected


def _mp_logs(n):
    mpmath.mp.dps = 60
    x = mpmath.log(n, 2)
    r = mpmath.nint(x)
    if abs(x - r) < mpmath.mpf(10) ** -40:
        return int(r), int(r)
    return int(mpmath.floor(x)), int(mpmath.ceil(x))


def test_integer_logs_match_high_precision():
    rng = random.Random(40)
    ns = [2, 3]
    for j in range(2, 41):
        ns += [2 ** j - 1, 2 ** j, 2 ** j + 1]
    ns += [rng.randrange(2, 2 ** 40) for _ in range(300)]
    for n in ns:
        lo, hi = _mp_logs(n)
        assert (floor_log2(n), ceil_log2(n)) == (lo, hi)
        assert lemma1_upper(n) == n * hi - (lo - 1) ** 2


def test_lemma2_examples():
    assert lemma2_lower(1024) == (5120.0, None)
    lower_i, lower_ii = lemma2_lower(2 ** 17)
    assert lower_ii == 15 * 2 ** 17 == 1966080
    assert lemma2_lower(4) == (-8.0, None)


def test_ratio_examples():
    row = bounds_row(2 ** 20)
    assert row.lower_ratio == 0.9
    assert row.upper_ratio == pytest.approx(1 - 361 / (20 * 2 ** 20), abs=1e-15)
    assert bounds_row(10 ** 6).upper_ratio == pytest.approx(1.0034, abs=5e-5)
    assert bounds_row(2 ** 17).lower_ratio == pytest.approx(15 / 17, abs=1e-12)


def test_lower_below_upper():
    for n in list(range(3, 2000)) + POWERS:
        row = bounds_row(n)
        assert row.lower_i <= row.upper
        if row.lower_ii is not None:
            assert row.lower_ii <= row.upper


def test_sandwich():
    assert sandwich_check([2 ** 17, 2 ** 20, 10 ** 6, 2 ** 30])
    assert sandwich_check([2 ** 17])
    with pytest.raises(InvalidInputError):
        sandwich_check([2 ** 16, 2 ** 17])


def test_gaps_shrink_along_powers_of_two():
    rows = ratio_table(POWERS)
    low = [1 - r.lower_ratio for r in rows]
    up = [abs(r.upper_ratio - 1) for r in rows]
    assert all(a >= b for a, b in zip(low, low[1:]))
    assert all(a >= b for a, b in zip(up, up[1:]))
    assert low[-1] < low[0] and up[-1] < up[0]


def test_csv():
    text = rows_to_csv(ratio_table([8, 2 ** 17]))
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1].split(",")[3] == "NA"
    assert lines[2].split(",")[-1] == f"{15 / 17:.12f}"
    assert all(len(x.split(".")[1]) == 12 for x in lines[2].split(",")[-2:])


def test_bounds_reject_small_n():
    with pytest.raises(InvalidInputError):
        lemma1_upper(1)
    with pytest.raises(InvalidInputError):
        bounds_row(2)
    assert math.isfinite(lemma2_lower(2)[0])
