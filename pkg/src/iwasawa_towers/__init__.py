"""Iwasawa invariants of abelian l-towers of bouquets.

The package computes the l-adic power series Q(T) attached to a tower of
Cayley-Serre multigraphs over a bouquet, reads mu and lambda off it, and
checks ord_l(kappa_n) = mu*l^n + lambda*n + nu against exact spanning-tree
counts at each level.
"""

from .cayley import Multigraph, bouquet, build_cayley_serre, is_connected, laplacian
from .chebyshev import (PadicSeries, coeff_closed, coeff_padic, p_recurrence, series_P,
                        series_Q)
from .invariants import (InvariantResult, extract_mu_lambda, fast_path, n0_sufficient,
                         predict_ord)
from .padic import PadicInt, ValuationResult, big_ord, hensel_sqrt, valuation
from .seeds import IntegerSeed, RationalSeed, SeedSpec, SqrtSeed, parse_seed
from .spanning import TreeCount, count_spanning_trees, ord_profile
from .tower import TowerReport, cross_check_differences, fit_nu, run_tower

__version__ = "0.1.0"
