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

import mock
import pytest

from idverify import exceptions, types
from idverify.corpus import identity, registry, verifier
from idverify.corpus.identity_filter import IdentityFilter
from idverify.corpus.report import Status


def make(id, value, err=0.0, tol=1e-10, rhs=fractions.Fraction(1)):
    def lhs(ctx):
        if isinstance(value, Exception):
            raise value
        return types.NumericResult(value, err)

    return identity.Identity(
        id=id,
        source=identity.Source("AMM", id.split("-")[1]),
        category=identity.Category.SERIES,
        statement="test",
        lhs=lhs,
        rhs=rhs,
        tol=tol,
        quote="q",
    )


@pytest.fixture
def small():
    return registry.Registry(
        [
            make("amm-3", 1.0 + 1e-12),
            make("amm-1", 1.0),
            make("amm-2", 1.1),
            make("amm-4", exceptions.ConvergenceError("no luck")),
            make("amm-5", 1.0, err=1e-6),
        ]
    )


def test_pass(ctx):
    outcome = verifier.evaluate(make("amm-1", 1.0 + 1e-12), ctx)
    assert outcome.status == Status.PASS
    assert outcome.passed
    assert outcome.abs_err == pytest.approx(1e-12, rel=1e-3)
    assert outcome.expected == 1.0
    assert outcome.tol == 1e-10


def test_fail(ctx):
    outcome = verifier.evaluate(make("amm-1", 1.1), ctx)
    assert outcome.status == Status.FAIL
    assert outcome.computed == 1.1


def test_kernel_bound_must_clear_the_tolerance(ctx):
    outcome = verifier.evaluate(make("amm-1", 1.0, err=1e-6), ctx)
    assert outcome.status == Status.FAIL
    assert outcome.abs_err == 0.0
    assert outcome.kernel_err == 1e-6


def test_kernel_error_is_recorded(ctx):
    outcome = verifier.evaluate(make("amm-1", exceptions.ConvergenceError("no luck")), ctx)
    assert outcome.status == Status.ERROR
    assert outcome.message == "ConvergenceError: no luck"
    assert math.isnan(outcome.computed)


def test_non_finite_value_is_an_error(ctx):
    outcome = verifier.evaluate(make("amm-1", math.inf), ctx)
    assert outcome.status == Status.ERROR


def test_profile_scales_tolerance(fast_ctx):
    outcome = verifier.evaluate(make("amm-1", 1.0 + 1e-9), fast_ctx)
    assert outcome.tol == pytest.approx(1e-8)
    assert outcome.status == Status.PASS


def test_oracle_rhs(ctx):
    entry = make("amm-1", 2.0, err=1e-12, rhs=lambda c: types.NumericResult(2.0, 1e-12))
    outcome = verifier.evaluate(entry, ctx)
    assert outcome.status == Status.PASS
    assert outcome.kernel_err == pytest.approx(2e-12)


def test_verify_all_orders_by_id(small, ctx, engine):
    rep = verifier.verify_all(ctx=ctx, registry=small, engine=engine)
    assert [o.id for o in rep.outcomes] == ["amm-1", "amm-2", "amm-3", "amm-4", "amm-5"]
    assert rep.counts == {"pass": 2, "fail": 2, "error": 1}
    assert not rep.ok
    assert rep.profile == "full"
    assert rep.seed == ctx.seed


def test_verify_all_filter(small, ctx, engine):
    flt = IdentityFilter.parse("id=amm-1")
    rep = verifier.verify_all(flt, ctx=ctx, registry=small, engine=engine)
    assert [o.id for o in rep.outcomes] == ["amm-1"]
    assert rep.ok


def test_verify_all_nothing_selected(small, ctx, engine):
    flt = IdentityFilter.parse("id=zzz-*")
    rep = verifier.verify_all(flt, ctx=ctx, registry=small, engine=engine)
    assert rep.outcomes == ()
    assert rep.counts == {"pass": 0, "fail": 0, "error": 0}


def test_custom_registry_stays_in_process(small, ctx, engine):
    with mock.patch("concurrent.futures.ProcessPoolExecutor") as pool:
        rep = verifier.verify_all(jobs=4, ctx=ctx, registry=small, engine=engine)
    pool.assert_not_called()
    assert len(rep.outcomes) == 5


def test_verify_by_id(engine):
    outcome = verifier.verify("crux-4988", profile="full", engine=engine)
    assert outcome.status == Status.PASS
    assert outcome.expected == -0.5


def test_verify_unknown_id(engine):
    with pytest.raises(exceptions.UnknownNameError):
        verifier.verify("nonexistent", engine=engine)


@pytest.mark.slow
def test_jobs_do_not_change_the_report(engine):
    flt = IdentityFilter.parse("category=root_sum,category=extremum")
    ctx = identity.EvalContext.from_engine(engine, profile="fast")
    serial = verifier.verify_all(flt, jobs=1, ctx=ctx, engine=engine)
    parallel = verifier.verify_all(flt, jobs=2, ctx=ctx, engine=engine)
    assert serial.to_dict()["outcomes"] == parallel.to_dict()["outcomes"]
    assert serial.ok
    assert registry.builtin_manifest().select(flt)
