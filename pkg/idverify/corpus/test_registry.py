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
# pylint: disable=redefined-outer-name

import fractions
import math

import pytest

from idverify import exceptions, types
from idverify.constants import closed_form as cf
from idverify.corpus import identity, registry
from idverify.corpus.identity_filter import IdentityFilter


def make(id, category=identity.Category.SERIES, rhs=fractions.Fraction(1)):
    return identity.Identity(
        id=id,
        source=identity.Source("AMM", id.split("-")[1]),
        category=category,
        statement="test",
        lhs=lambda ctx: types.NumericResult(1.0, 0.0),
        rhs=rhs,
        tol=1e-10,
        quote="q",
    )


@pytest.fixture(scope="module")
def builtin():
    return registry.builtin_manifest()


def test_builtin_is_cached(builtin):
    assert registry.builtin_manifest() is builtin


def test_builtin_size(builtin):
    assert len(builtin) > 100
    assert builtin.ids() == sorted(builtin.ids())
    assert [e.id for e in builtin] == builtin.ids()


def test_lookup_amm_12398(builtin):
    entry = builtin.get("amm-12398")
    assert entry.tol == 1e-10
    assert entry.expected().value == pytest.approx(2 / (math.e - 1), abs=1e-15)
    assert entry.quote == r"S=\frac{2}{e-1}"


def test_lookup_crux_4988(builtin):
    entry = builtin.get("crux-4988")
    assert entry.tol == 1e-9
    assert entry.rhs == fractions.Fraction(-1, 2)


def test_lookup_unknown(builtin):
    assert "nonexistent" not in builtin
    with pytest.raises(exceptions.UnknownNameError):
        builtin.get("nonexistent")
    # still a KeyError for callers that treat the registry as a mapping
    with pytest.raises(KeyError):
        builtin.get("amm-1")


def test_every_category_is_populated(builtin):
    present = {e.category for e in builtin}
    assert present == set(identity.Category)


def test_builtin_manifest_is_valid(builtin):
    registry.validate_manifest(builtin)


def test_select(builtin):
    products = builtin.select(IdentityFilter.parse("category=product"))
    assert products
    assert all(e.category == identity.Category.PRODUCT for e in products)
    assert builtin.select(IdentityFilter.parse("id=zzz-*")) == []


def test_select_unknown_exact_id(builtin):
    with pytest.raises(exceptions.UnknownNameError):
        builtin.select(IdentityFilter.parse("id=bogus"))


def test_duplicate_ids():
    with pytest.raises(exceptions.ValidationError):
        registry.Registry([make("amm-1"), make("amm-1")])


def test_validate_manifest_reports_bad_rhs():
    reg = registry.Registry([make("amm-1"), make("amm-2", rhs=cf.log(cf.num(-1)))])
    with pytest.raises(exceptions.ValidationError, match="amm-2"):
        registry.validate_manifest(reg)


def test_validate_manifest_skips_oracles():
    reg = registry.Registry([make("amm-1", rhs=lambda ctx: types.NumericResult(1.0, 0.0))])
    registry.validate_manifest(reg)
