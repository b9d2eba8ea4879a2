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
"""Runs identities and records how their two sides compare.

An outcome passes when |computed - expected| and the kernels' own error
bound both stay within the entry's (scaled) tolerance. Anything a kernel
raises is recorded as an error; verify_all never raises for a failing entry.
"""

import concurrent.futures
import logging
import math
import time
import typing

from idverify import config, types
from idverify.corpus import identity, report
from idverify.corpus.identity_filter import IdentityFilter
from idverify.corpus.registry import Registry, builtin_manifest
from idverify.corpus.report import Status, VerificationOutcome

logger = logging.getLogger(__name__)


def evaluate(entry: identity.Identity, ctx: identity.EvalContext) -> VerificationOutcome:
    """Evaluate both sides of one entry under ctx."""
    tol = ctx.scale_tol(entry.tol)
    local = ctx.for_tol(entry.tol)
    start = time.perf_counter()
    try:
        lhs = entry.lhs(local)
        rhs = entry.expected(local)
        computed = types.check_finite(lhs.value, f"{entry.id} computed value")
        expected = types.check_finite(rhs.value, f"{entry.id} expected value")
    except Exception as exc:  # pylint: disable=broad-except
        seconds = time.perf_counter() - start
        logger.warning("%s error after %.3fs: %s", entry.id, seconds, exc)
        return VerificationOutcome(
            entry.id,
            entry.category,
            Status.ERROR,
            math.nan,
            math.nan,
            math.nan,
            math.nan,
            tol,
            seconds,
            f"{type(exc).__name__}: {exc}",
        )

    seconds = time.perf_counter() - start
    abs_err = abs(computed - expected)
    kernel_err = lhs.err + rhs.err
    status = Status.PASS if abs_err <= tol and kernel_err <= tol else Status.FAIL
    outcome = VerificationOutcome(
        entry.id,
        entry.category,
        status,
        computed,
        expected,
        abs_err,
        kernel_err,
        tol,
        seconds,
    )
    if status == Status.PASS:
        logger.info("%s pass: %r (abs_err %.3g, tol %.3g)", entry.id, computed, abs_err, tol)
    else:
        logger.warning(
            "%s fail: computed %r, expected %r, abs_err %.3g, kernel_err %.3g, tol %.3g",
            entry.id,
            computed,
            expected,
            abs_err,
            kernel_err,
            tol,
        )
    return outcome


def make_context(
    profile: typing.Optional[str] = None,
    seed: typing.Optional[int] = None,
    tol_scale: float = 1.0,
    engine: typing.Optional[config.EngineConfig] = None,
) -> identity.EvalContext:
    engine = engine or config.load_config()
    return identity.EvalContext.from_engine(engine, profile, seed, tol_scale)


def verify(
    identity_id: str,
    profile: typing.Optional[str] = None,
    seed: typing.Optional[int] = None,
    tol_scale: float = 1.0,
    registry: typing.Optional[Registry] = None,
    engine: typing.Optional[config.EngineConfig] = None,
) -> VerificationOutcome:
    """Verify one registered identity.

    Raises:
        UnknownNameError: identity_id is not registered
    """
    registry = registry or builtin_manifest()
    entry = registry.get(identity_id)
    return evaluate(entry, make_context(profile, seed, tol_scale, engine))


def _evaluate_builtin(identity_id: str, ctx: identity.EvalContext) -> VerificationOutcome:
    return evaluate(builtin_manifest().get(identity_id), ctx)


def verify_all(
    flt: typing.Optional[IdentityFilter] = None,
    jobs: int = 1,
    ctx: typing.Optional[identity.EvalContext] = None,
    registry: typing.Optional[Registry] = None,
    engine: typing.Optional[config.EngineConfig] = None,
) -> report.Report:
    """Verify every entry selected by flt; the report lists outcomes by id.

    Worker processes look entries up in the built-in manifest, so a custom
    registry is always verified in this process.
    """
    engine = engine or config.load_config()
    ctx = ctx or identity.EvalContext.from_engine(engine)
    builtin = registry is None
    registry = registry or builtin_manifest()
    selected = registry.select(flt)
    logger.info("verifying %d entries with profile %s", len(selected), ctx.profile.name)

    if jobs > 1 and not builtin:
        logger.warning("custom registry, running %d entries in one process", len(selected))
        jobs = 1

    if jobs > 1 and len(selected) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(
                pool.map(_evaluate_builtin, [e.id for e in selected], [ctx] * len(selected))
            )
    else:
        outcomes = [evaluate(entry, ctx) for entry in selected]

    return report.Report.build(outcomes, engine.engine_version, ctx.profile.name, ctx.seed)
