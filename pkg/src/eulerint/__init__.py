"""
Exact arithmetic for Euler and Bernoulli numbers and polynomials.

The package computes integrals of products of these polynomials over [0, 1]
exactly, carries out integration-by-parts reductions as algorithms, and
audits a registry of printed identities against brute-force values.

Modules
-------
exactnum    rationals, factorials, binomials, Beta and Gamma at integers
sequences   Euler and Bernoulli number tables
poly        dense rational polynomials and the Euler/Bernoulli polynomials
oracle      product integrals and the by-parts chains
identities  the identity registry and the grid audit
expr        the product-expression parser used by the CLI
report      output formats and report destinations
"""

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as _get_version

try:
    __version__ = _get_version("eulerint")
except PackageNotFoundError:
    __version__ = "0.0.0"

from . import exactnum, expr, identities, models, oracle, poly, report, sequences

__all__ = [
    "__version__",
    "exactnum",
    "expr",
    "identities",
    "models",
    "oracle",
    "poly",
    "report",
    "sequences",
]
