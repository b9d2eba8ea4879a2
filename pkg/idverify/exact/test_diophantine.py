# Copyright 2023 Julian Knutsen
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the “Software”), to deal in
# the Software without restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the
# Software, and to permit persons to whom the Software is furnished to do so,
# subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
import pytest

from idverify import exceptions
from idverify.exact import SearchKind, pair_families, search_diophantine


def test_factorial_power():
    assert search_diophantine("factorial_power_2117", 20) == [(1, 1), (1, 2), (2, 4)]


def test_quintuplet():
    assert search_diophantine(SearchKind.QUINTUPLET, 10**6) == [5]


def test_pow_square():
    assert search_diophantine("pow23_square_4803", 12) == [(2, 1, 2)]


def test_pair_matches_families():
    assert search_diophantine("pair_4855", 40) == pair_families(40)


def test_pair_families_small_bound():
    assert pair_families(2) == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_cube_square():
    assert search_diophantine("cube_square_4811", 10**6) == [2]


def test_norm():
    assert search_diophantine("norm_1447", 40) == [(0, 0)]


@pytest.mark.parametrize(
    "kind,small,large",
    [
        ("factorial_power_2117", 5, 30),
        ("pair_4855", 6, 25),
        ("quintuplet_108E", 1000, 100000),
    ],
)
def test_larger_bound_is_superset(kind, small, large):
    lo = search_diophantine(kind, small)
    hi = search_diophantine(kind, large)
    assert set(lo) <= set(hi)

    def in_range(s):
        return max(s) <= small if isinstance(s, tuple) else s <= small

    assert [s for s in hi if in_range(s)] == lo


def test_cap_exceeded():
    with pytest.raises(exceptions.ValidationError):
        search_diophantine("pow23_square_4803", 41)


def test_unknown_kind():
    with pytest.raises(exceptions.ValidationError):
        search_diophantine("fermat", 10)


def test_negative_bound():
    with pytest.raises(exceptions.ValidationError):
        search_diophantine("norm_1447", -1)
