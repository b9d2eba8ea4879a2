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

"""Serialization utility for reports and closed-form payloads.

In general, no code should use the builtin json library explicitly in favor of
delegating to this utility module to handle the sharp edges: floats are written
with 17 significant digits so they read back to the same binary64 value, and
non-finite values are written as strings so the output stays strict JSON.

Example::

    report: dict

    back_and_forth = deserialize_str(serialize_as_str(report))
    assert report == back_and_forth
"""

import json
import math
import pathlib
import re
import typing

_NON_FINITE = {"nan": math.nan, "inf": math.inf, "-inf": -math.inf}

# finite floats travel through json.dumps as marked strings and are unquoted after
_REAL_MARK = "\x00real:"
_MARKED_REAL = re.compile(r'"\\u0000real:([^"]+)"')


def _to_wire(obj: typing.Any) -> typing.Any:
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return str(obj)
        text = format_real(obj)
        return _REAL_MARK + (text if any(c in text for c in ".en") else text + ".0")
    if isinstance(obj, dict):
        return {k: _to_wire(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_wire(v) for v in obj]
    return obj


def format_real(x: float) -> str:
    """Format a float with 17 significant digits, as reports write it

    Args:
        x (float): value to format

    Returns:
        str: 17 significant digit representation
    """
    return format(x, ".17g")


def serialize_as_str(obj: typing.Any, indent: typing.Optional[int] = None) -> str:
    """Serialize any python object as strict JSON

    Args:
        obj (typing.Any): any object, but typically a list or dict
        indent (int, optional): pretty-print indentation

    Returns:
        str: encoded string representation of obj
    """
    separators = (",", ":") if indent is None else (",", ": ")
    text = json.dumps(
        _to_wire(obj),
        separators=separators,
        ensure_ascii=False,
        allow_nan=False,
        indent=indent,
    )
    return _MARKED_REAL.sub(r"\1", text)


def deserialize_str(serialized_obj: str) -> typing.Any:
    """Deserialize a str into a Python object

    Args:
        serialized_obj (str): serialized object

    Returns:
        typing.Any: Python object
    """
    return json.loads(serialized_obj)


def real_from_wire(value: typing.Any) -> float:
    """Read back a float written by serialize_as_str, including non-finite strings

    Args:
        value (typing.Any): number or one of "nan", "inf", "-inf"

    Returns:
        float: the decoded value
    """
    if isinstance(value, str):
        if value not in _NON_FINITE:
            raise ValueError(f"not a serialized real: {value}")
        return _NON_FINITE[value]
    return float(value)


def write_json(path: typing.Union[str, pathlib.Path], obj: typing.Any) -> None:
    pathlib.Path(path).write_text(serialize_as_str(obj, indent=2) + "\n", "utf-8")


def read_json(path: typing.Union[str, pathlib.Path]) -> typing.Any:
    return deserialize_str(pathlib.Path(path).read_text("utf-8"))
