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
"""Verification outcomes and the reports that collect them.

Two runs with the same profile and seed write identical outcome arrays once
the seconds field is left out.
"""

import dataclasses
import datetime
import enum
import itertools
import pathlib
import typing

from idverify import serialize
from idverify.corpus.identity import Category


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


@dataclasses.dataclass(frozen=True)
class VerificationOutcome:
    id: str
    category: Category
    status: Status
    computed: float
    expected: float
    abs_err: float
    kernel_err: float
    tol: float
    seconds: float
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "category": self.category.value,
            "status": self.status.value,
            "computed": self.computed,
            "expected": self.expected,
            "abs_err": self.abs_err,
            "kernel_err": self.kernel_err,
            "tol": self.tol,
            "seconds": self.seconds,
        }
        if self.message:
            out["message"] = self.message
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationOutcome":
        return cls(
            id=data["id"],
            category=Category(data["category"]),
            status=Status(data["status"]),
            computed=serialize.real_from_wire(data["computed"]),
            expected=serialize.real_from_wire(data["expected"]),
            abs_err=serialize.real_from_wire(data["abs_err"]),
            kernel_err=serialize.real_from_wire(data["kernel_err"]),
            tol=serialize.real_from_wire(data["tol"]),
            seconds=float(data.get("seconds", 0.0)),
            message=data.get("message", ""),
        )


@dataclasses.dataclass(frozen=True)
class Report:
    outcomes: typing.Tuple[VerificationOutcome, ...]
    engine_version: str
    profile: str
    seed: int
    timestamp: str

    @classmethod
    def build(
        cls,
        outcomes: typing.Iterable[VerificationOutcome],
        engine_version: str,
        profile: str,
        seed: int,
        timestamp: typing.Optional[str] = None,
    ) -> "Report":
        timestamp = timestamp or datetime.datetime.now(datetime.timezone.utc).isoformat(
            timespec="seconds"
        )
        ordered = tuple(sorted(outcomes, key=lambda o: o.id))
        return cls(ordered, engine_version, profile, seed, timestamp)

    @property
    def counts(self) -> dict[str, int]:
        counts = {status.value: 0 for status in Status}
        for outcome in self.outcomes:
            counts[outcome.status.value] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def summary_line(self) -> str:
        counts = self.counts
        return (
            f"{len(self.outcomes)} identities: {counts['pass']} pass, "
            f"{counts['fail']} fail, {counts['error']} error"
        )

    def to_dict(self) -> dict:
        return {
            "engine_version": self.engine_version,
            "profile": self.profile,
            "seed": self.seed,
            "timestamp": self.timestamp,
            "outcomes": [o.to_dict() for o in self.outcomes],
            "summary": self.counts,
        }

    def untimed_outcomes(self) -> list[dict]:
        """Outcome dicts without seconds, equal across runs with one profile and seed."""
        return [{k: v for k, v in o.to_dict().items() if k != "seconds"} for o in self.outcomes]

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        outcomes = tuple(VerificationOutcome.from_dict(o) for o in data["outcomes"])
        return cls(
            outcomes, data["engine_version"], data["profile"], data["seed"], data["timestamp"]
        )


def write_json(rep: Report, path: typing.Union[str, pathlib.Path]) -> None:
    serialize.write_json(path, rep.to_dict())


def read_json(path: typing.Union[str, pathlib.Path]) -> Report:
    return Report.from_dict(serialize.read_json(path))


def _cell(x: float) -> str:
    return format(x, ".12g")


def to_markdown(rep: Report) -> str:
    lines = [
        "# Verification report",
        "",
        f"engine {rep.engine_version}, profile {rep.profile}, seed {rep.seed}, {rep.timestamp}",
        "",
        rep.summary_line(),
    ]
    by_category = sorted(rep.outcomes, key=lambda o: (o.category.value, o.id))
    for category, group in itertools.groupby(by_category, key=lambda o: o.category):
        members = list(group)
        passed = sum(1 for o in members if o.passed)
        lines += [
            "",
            f"## {category.value} ({passed}/{len(members)} pass)",
            "",
            "| id | status | computed | expected | abs_err | tol | seconds |",
            "|---|---|---|---|---|---|---|",
        ]
        lines += [
            f"| {o.id} | {o.status.value} | {_cell(o.computed)} | {_cell(o.expected)} "
            f"| {o.abs_err:.2e} | {o.tol:.0e} | {o.seconds:.2f} |"
            for o in members
        ]
    return "\n".join(lines) + "\n"


def write_markdown(rep: Report, path: typing.Union[str, pathlib.Path]) -> None:
    pathlib.Path(path).write_text(to_markdown(rep), "utf-8")
