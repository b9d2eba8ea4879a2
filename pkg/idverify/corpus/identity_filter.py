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
"""Selection expressions for the corpus.

``key=value`` clauses are joined by commas. Different keys must all match;
a repeated key matches if any of its values does::

    category=series,category=product,tag=zeta

Keys are id, category, source and tag. id values may use shell-style
wildcards (``amm-124*``); source matches the journal name or the full
"journal problem" text, case-insensitively.
"""

import dataclasses
import fnmatch
import typing

from idverify import exceptions
from idverify.corpus import identity

FILTER_KEYS = ("id", "category", "source", "tag")


@dataclasses.dataclass(frozen=True)
class IdentityFilter:
    ids: typing.Tuple[str, ...] = ()
    categories: typing.Tuple[identity.Category, ...] = ()
    sources: typing.Tuple[str, ...] = ()
    tags: typing.Tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: typing.Optional[str]) -> "IdentityFilter":
        values: typing.Dict[str, typing.List[str]] = {key: [] for key in FILTER_KEYS}
        for clause in (text or "").split(","):
            clause = clause.strip()
            if not clause:
                continue
            key, sep, value = clause.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or not value:
                raise exceptions.ParseError(f"filter clause {clause!r} is not KEY=VALUE")
            if key not in values:
                raise exceptions.ParseError(
                    f"unknown filter key {key!r}, expected one of {FILTER_KEYS}"
                )
            values[key].append(value)

        categories = []
        for value in values["category"]:
            try:
                categories.append(identity.Category(value))
            except ValueError as exc:
                raise exceptions.ParseError(f"unknown category {value!r}") from exc

        return cls(
            ids=tuple(values["id"]),
            categories=tuple(categories),
            sources=tuple(v.lower() for v in values["source"]),
            tags=tuple(values["tag"]),
        )

    @property
    def exact_ids(self) -> typing.Tuple[str, ...]:
        """id values without wildcards; each must name a registered entry."""
        return tuple(i for i in self.ids if not any(c in i for c in "*?["))

    def matches(self, entry: identity.Identity) -> bool:
        if self.ids and not any(fnmatch.fnmatchcase(entry.id, pattern) for pattern in self.ids):
            return False
        if self.categories and entry.category not in self.categories:
            return False
        names = (entry.source.journal.lower(), str(entry.source).lower())
        if self.sources and not any(name in self.sources for name in names):
            return False
        if self.tags and not any(tag in entry.tags for tag in self.tags):
            return False
        return True
