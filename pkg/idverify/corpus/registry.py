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
"""The registry of identities, keyed by id.

Typical usage example::
    registry = builtin_manifest()
    entry = registry.get("amm-12398")
    series = registry.select(IdentityFilter.parse("category=series"))
"""

import functools
import logging
import math
import typing

from idverify import exceptions
from idverify.corpus import identity
from idverify.corpus.identity_filter import IdentityFilter

logger = logging.getLogger(__name__)


class Registry:
    """Immutable collection of identities; iteration is in id order."""

    _by_id: dict[str, identity.Identity]

    def __init__(self, entries: typing.Iterable[identity.Identity]):
        self._by_id = {}
        for entry in entries:
            if entry.id in self._by_id:
                raise exceptions.ValidationError(f"duplicate identity id {entry.id!r}")
            self._by_id[entry.id] = entry

    def __len__(self) -> int:
        return len(self._by_id)

    def __contains__(self, identity_id: object) -> bool:
        return identity_id in self._by_id

    def __iter__(self) -> typing.Iterator[identity.Identity]:
        return iter(self._by_id[key] for key in sorted(self._by_id))

    def ids(self) -> list[str]:
        return sorted(self._by_id)

    def get(self, identity_id: str) -> identity.Identity:
        if identity_id not in self._by_id:
            raise exceptions.UnknownNameError(f"unknown identity id {identity_id!r}")
        return self._by_id[identity_id]

    def select(self, flt: typing.Optional[IdentityFilter] = None) -> list[identity.Identity]:
        """Entries matching flt, in id order.

        Raises:
            UnknownNameError: flt names an id without wildcards that is not registered
        """
        flt = flt or IdentityFilter()
        for identity_id in flt.exact_ids:
            self.get(identity_id)
        return [entry for entry in self if flt.matches(entry)]


def validate_manifest(registry: Registry) -> None:
    """Check every entry's quote and closed-form rhs before any kernel runs.

    Oracle entries compute their rhs and are only checked for a quote.

    Raises:
        ValidationError: naming every offending entry
    """
    problems = []
    for entry in registry:
        if not entry.quote.strip():
            problems.append(f"{entry.id}: empty quote")
        if entry.is_oracle:
            continue
        try:
            value = entry.expected().value
        except (ArithmeticError, ValueError) as exc:
            problems.append(f"{entry.id}: rhs does not evaluate: {exc}")
            continue
        if not math.isfinite(value):
            problems.append(f"{entry.id}: rhs is not finite")

    if problems:
        raise exceptions.ValidationError("invalid manifest: " + "; ".join(problems))
    logger.debug("manifest of %d entries validated", len(registry))


@functools.lru_cache(maxsize=None)
def builtin_manifest() -> Registry:
    from idverify.corpus.entries import ALL_ENTRIES  # pylint: disable=import-outside-toplevel

    return Registry(ALL_ENTRIES)
