"""Exact arithmetic for U(W+), Zhang twists of k[x,y,z] and the graded
homomorphisms lambda_a and phi between them."""

__version__ = "0.1.0"

from .scalars import RATIONALS, RatFunc, ratfunc_field  # noqa: E402
from .envelope import WITT, WPLUS, EnvElement, env_gen, parse_env, parse_free  # noqa: E402
from .twisted import algebra_Q, algebra_R, algebra_S  # noqa: E402
from .morphlab import GENERIC, LAMBDA, PHI, EnvMorphism, kernel_at_degree  # noqa: E402

__all__ = [
    "__version__", "RATIONALS", "RatFunc", "ratfunc_field", "WITT", "WPLUS", "EnvElement",
    "env_gen", "parse_env", "parse_free", "algebra_Q", "algebra_R", "algebra_S", "GENERIC",
    "LAMBDA", "PHI", "EnvMorphism", "kernel_at_degree",
]
