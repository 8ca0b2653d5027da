"""Toric ideals of stable set polytopes: orders, Groebner bases, fibers."""

from .fibers import fiber, fiber_components, is_quadratically_generated_oracle
from .groebner import (GroebnerBasis, initial_ideal_profile, is_quadratically_generated, normal_form,
                       quadratic_binomials, toric_groebner)
from .monomials import Binomial, ExponentVector, MonomialOrder
from .perfect_order import component_swap_binomials, greedy_binomial, greedy_stable_set, perfect_order_index

__all__ = ["fiber", "fiber_components", "is_quadratically_generated_oracle", "GroebnerBasis",
           "initial_ideal_profile", "is_quadratically_generated", "normal_form", "quadratic_binomials",
           "toric_groebner", "Binomial", "ExponentVector", "MonomialOrder", "component_swap_binomials",
           "greedy_binomial", "greedy_stable_set", "perfect_order_index"]
