"""Locally biased and locally stable colorings of hypercubes, integer
lattices and Cayley graphs of Z, with exact scenery-word distributions."""

from .build import (base_h, biased_from_code, biased_m_over_n, h_k,
                    half_biased_from_signature, parity_g, product,
                    stable_extend, stable_from_biased, stable_parity,
                    tensor_lift)
from .census import (count_partitions, count_solutions_leq,
                     enumerate_locally_biased, enumerate_locally_stable,
                     half_biased_lower_bound, null_space_dimension,
                     permissible_p)
from .codes import (BinaryCode, hamming_code, is_perfect_radius1,
                    min_distance, rearrange_parity_right, xor_translate)
from .cube import (CubeAutomorphism, CubeFunction, WalshSpectrum,
                   apply_automorphism, are_isomorphic, canonical_form,
                   degree_weight, is_locally_biased, is_locally_stable,
                   local_profile, neighbors, walsh_inverse, walsh_transform)
from .lattice import (CayleyZFunction, PeriodicLatticeFunction, TreeLabeling,
                      cayley_half_biased, extend_to_lattice, search_cayley,
                      tree_greedy, verify_cayley_bias, verify_lattice_bias,
                      verify_tree_quota)
from .scenery import (SceneryDistribution, Walk, bernoulli_product,
                      chi_square_report, distributions_equal,
                      exact_scenery_distribution, random_walk,
                      sample_scenery_counts, scenery,
                      stability_pair_distribution)

__version__ = "0.1.0"
