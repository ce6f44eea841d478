"""Dehornoy order, fractional Dehn twist coefficients and homogenized Upsilon for braids."""

from .braid import (
    BraidWord, MarkovTrace, Perm, beta_nm, closure_components, concat, delta, delta_rev,
    disjoint_union, elrifai_K, elrifai_L, family, full_twist, inverse, knotting_suffix,
    markov_perturb, perm_of, power, torus_braid, writhe,
)
from .artin import artin_action, artin_equal, free_reduce
from .dehornoy import DehornoySign, Ordering, compare, dehornoy_floor, dehornoy_sign, handle_reduce
from .fdtc import Fdtc, OmegaBounds, fdtc, fdtc_properties_check, occurrence_bounds
from .upsilon import HUResult, PLFunction, homogenized_upsilon, pl_combine, pl_eval, torus_upsilon
from .braid_index import IndexCertificate, Rule, Verdict, full_twist_domination, index_certificate
from .parse import ParsedInput, parse_braid

__version__ = "0.1.0"
