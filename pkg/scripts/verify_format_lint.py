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

import os
import subprocess
import sys

SOURCE_DIRS = ("idverify", "cli", "scripts", "spec_tests", "functional_tests")
ROOT_FILES = ("conftest.py", "testing_utils.py")


def _run_cmd(args: list[str]) -> bool:
    print(f"Running {args[:4]}{' ...' if len(args) > 4 else ''}")
    output = subprocess.run(args, capture_output=True, text=True, check=False)
    print(output.stdout)
    print(output.stderr)
    return bool(output.returncode)


def _python_files() -> list[str]:
    py_files = [f for f in ROOT_FILES if os.path.exists(f)]
    for source_dir in SOURCE_DIRS:
        for root, _, files in os.walk(source_dir):
            if "__pycache__" in root:
                continue
            py_files += [os.path.join(root, f) for f in sorted(files) if f.endswith(".py")]
    return py_files


def main():
    py_files = _python_files()
    failure = any(
        [
            _run_cmd(["poetry", "check"]),
            _run_cmd(["black", "--check"] + py_files),
            _run_cmd(["isort", "--check-only"] + py_files),
            _run_cmd(["pylint"] + py_files),
            _run_cmd(["mypy"] + py_files),
        ]
    )

    if not failure:
        print(f"[SUCCESS] {len(py_files)} files")
    else:
        print("[FAILURE]")
        sys.exit(1)


if __name__ == "__main__":
    main()
