"""Exact computations with finite-dimensional weak bialgebras and weak Hopf
algebras: example families, weak matched pairs, the smash product A##H, its
antipode and integrals."""
from .scalars import Field, Q, Scalar
from .linalg import Mat, Tensor
from .coreops import (CheckReport, WeakBialgebra, WeakHopfAlgebra, check_weak_bialgebra,
                      hopf_criterion, identity_suite, solve_antipode, verify_antipode)
from .matched import MatchedPairData, check_weak_matched_pair
from .smash import build_smash, build_antipode
from .integrals import integral_space, maschke_semisimple

__version__ = "0.1.0"
