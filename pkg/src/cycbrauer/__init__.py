"""Cyclotomic Brauer algebras B(m,p,n): diagrams, cell modules and
decomposition numbers computed in exact arithmetic over Q(xi_m)."""
from .cyclotomic import CycNumber, DeltaParams, cyclotomic_parameter, generic_delta, zeta
from .diagrams import (CapExceeded, DiagCombination, LabelledDiagram, compose, concatenate,
                       enumerate_basis, gen_e, gen_s, gen_s_star, gen_t, identity_diagram)
from .combinatorics import OrbitLabel, enumerate_lambda, m_partitions, orbit_representative
from .tangles import Tangle, act_on_tangle, enumerate_tangles
from .modules import (ProjectedModule, QuotientModule, StandardModule, simple_head,
                      standard_module)

__version__ = "0.1.0"
