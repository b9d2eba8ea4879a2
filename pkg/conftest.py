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

import pytest

from idverify.config import load_config
from idverify.corpus import identity


def pytest_addoption(parser):
    parser.addoption(
        "--fast-only",
        action="store_true",
        default=False,
        help="skip tests marked slow (the full-corpus acceptance runs)",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: runs a large part of the corpus")


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--fast-only"):
        return
    skip_slow = pytest.mark.skip(reason="--fast-only")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def engine():
    return load_config()


@pytest.fixture
def ctx(engine):
    return identity.EvalContext.from_engine(engine, profile="full")


@pytest.fixture
def fast_ctx(engine):
    return identity.EvalContext.from_engine(engine, profile="fast")
