"""Topological entropy: classification, Mahler measure oracles and periodic points."""

from zd_rigidity.entropy.classify import entropy_classify, generator_annihilators
from zd_rigidity.entropy.mahler import mahler_d1_exact, mahler_quadrature, mahler_roots_of_unity
from zd_rigidity.entropy.periodic import periodic_point_growth

__all__ = [
    "entropy_classify",
    "generator_annihilators",
    "mahler_d1_exact",
    "mahler_quadrature",
    "mahler_roots_of_unity",
    "periodic_point_growth",
]
