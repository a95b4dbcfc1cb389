"""Symmetric tensors over Z and n-Engel tests for Lie rings."""
from .lattice import Lattice, contains, hnf, index, lattice_of_tensors, rank
from .lie_engel import (
    LieRing,
    brute_force_engel_test,
    cg_engel_test,
    cg_pm_engel_test,
    condition_count,
    load_ring,
    make_ring,
)
from .sym_modules import (
    basis_S_dprime,
    basis_S_prime,
    gaussian_example_check,
    generators_P,
    index_formula_S,
    oracle_P_lattice,
    prime_index_check,
)
from .tensor_core import (
    Tensor,
    commutative_image,
    modified_symmetrization,
    mobius_combination,
    subset_sum_tensor,
    symmetrize_word,
    tensor_power,
)

__version__ = "0.1.0"
