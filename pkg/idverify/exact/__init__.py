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
from idverify.exact.diophantine import SearchKind, pair_families, search_diophantine
from idverify.exact.finite_difference import (
    CheckReport,
    euler_finite_difference,
    euler_finite_difference_suite,
    shifted_binomial,
)
from idverify.exact.gl_sum import gl_sum
from idverify.exact.gregory import gregory_bounds, gregory_coefficient
from idverify.exact.identities import binomial_identity_suite, discriminant_root_count
from idverify.exact.lagrange import lagrange_reciprocal_identity, lagrange_reciprocal_sides
from idverify.exact.multi_index import (
    MultiIndex,
    bell_cross_check,
    compose_derivative_check,
    mo_coefficients,
)
from idverify.exact.poly import Poly
from idverify.exact.primes import prime_mask, primes_upto

__all__ = [
    "CheckReport",
    "MultiIndex",
    "Poly",
    "SearchKind",
    "bell_cross_check",
    "binomial_identity_suite",
    "compose_derivative_check",
    "discriminant_root_count",
    "euler_finite_difference",
    "euler_finite_difference_suite",
    "gl_sum",
    "gregory_bounds",
    "gregory_coefficient",
    "lagrange_reciprocal_identity",
    "lagrange_reciprocal_sides",
    "mo_coefficients",
    "pair_families",
    "prime_mask",
    "primes_upto",
    "search_diophantine",
    "shifted_binomial",
]
