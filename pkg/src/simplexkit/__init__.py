"""Exact tools for empty lattice simplices, Bernoulli character sums and
cyclic quotient singularities."""

from .cayley import CayleyDecomposition, cayley_build, cayley_decompose, delta_family, scramble, verify_decomposition
from .charsum import b1, b1_chi, characters, find_pairing, stickelberger, stickelberger_rank, verify_prop15
from .errors import SimplexKitError
from .quotsing import SingularityType, classify_singularity, mld, verify_thm18
from .simplex import LatticeSimplex, check_prop24, group_structure, h_star, load_simplex, par_points

__version__ = "0.1.0"
