"""Prime graphs and degree graphs of finite-group character degree sets."""

from .groupdata import DegreeSet, named_degrees, product_degrees, psl2_degrees
from .graphcore import PrimeGraph, build_degree_graph, build_prime_graph, find_triangle
from .numtheory import FactoredInteger, factor, prime_support

__all__ = [
    "DegreeSet",
    "FactoredInteger",
    "PrimeGraph",
    "build_degree_graph",
    "build_prime_graph",
    "factor",
    "find_triangle",
    "named_degrees",
    "prime_support",
    "product_degrees",
    "psl2_degrees",
]

__version__ = "0.1.0"
