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

from idverify.specfun.chebyshev import chebyshev
from idverify.specfun.dilog import dilog
from idverify.specfun.gamma import beta, binomial_real, log_gamma
from idverify.specfun.harmonic import harmonic, harmonic_float
from idverify.specfun.polygamma import trigamma
from idverify.specfun.zeta import eta, power_tail, zeta

__all__ = [
    "beta",
    "binomial_real",
    "chebyshev",
    "dilog",
    "eta",
    "harmonic",
    "harmonic_float",
    "log_gamma",
    "power_tail",
    "trigamma",
    "zeta",
]
