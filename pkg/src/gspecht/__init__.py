"""gspecht: exact computations with graded Specht modules of cyclotomic
Hecke algebras at a root of unity over a prime field, plus the standalone
graded tableau combinatorics engine.
"""

__version__ = "0.1.0"

from gspecht.errors import ConventionError, ParameterError, ResourceLimitError

__all__ = ["ConventionError", "ParameterError", "ResourceLimitError", "__version__"]
