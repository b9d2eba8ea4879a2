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
"""Brute-force sum of all invertible n x n matrices over the prime field F_q."""

import itertools
import logging
import typing

from idverify import exceptions
from idverify.exact import primes

logger = logging.getLogger(__name__)

MAX_MATRICES = 20000

Matrix = typing.Tuple[typing.Tuple[int, ...], ...]


def _sign(perm: typing.Tuple[int, ...]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def determinant_mod(matrix: Matrix, q: int) -> int:
    n = len(matrix)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = _sign(perm)
        for row, col in enumerate(perm):
            term *= matrix[row][col]
        total += term
    return total % q


def invertible_matrices(q: int, n: int) -> typing.Iterator[Matrix]:
    for entries in itertools.product(range(q), repeat=n * n):
        matrix = tuple(tuple(entries[r * n : (r + 1) * n]) for r in range(n))
        if determinant_mod(matrix, q):
            yield matrix


def gl_sum(q: int, n: int) -> Matrix:
    if n < 1:
        raise exceptions.ValidationError(f"n must be >= 1, got {n}")
    if q ** (n * n) > MAX_MATRICES:
        raise exceptions.ValidationError(
            f"{q}^{n * n} matrices exceed enumeration cap {MAX_MATRICES}"
        )
    if q < 2 or q not in primes.primes_upto(q):
        raise exceptions.ValidationError(f"q must be prime, got {q}")

    acc = [[0] * n for _ in range(n)]
    count = 0
    for matrix in invertible_matrices(q, n):
        count += 1
        for r in range(n):
            for c in range(n):
                acc[r][c] = (acc[r][c] + matrix[r][c]) % q
    logger.debug("summed %d invertible %dx%d matrices over F_%d", count, n, n, q)
    return tuple(tuple(row) for row in acc)
