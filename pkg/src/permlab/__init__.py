"""Finite permutation groups, permutizers and related subgroup properties.

Permutations compose left to right: ``(a * b)(x) == b(a(x))``, and
``H^g = g^-1 H g``.  Groups are fully enumerated with a dense
multiplication table; subgroups are bitsets over the parent's elements.
"""

from .catalog import CATALOG, build, corpus, corpus_members, load_group, parse_group_file, write_group_file
from .classify import (
    chief_series,
    classify,
    fitting,
    is_metanilpotent,
    is_ore_dispersive,
    is_p_closed,
    is_soluble,
    is_supersoluble,
    nilpotent_length,
    residual,
    wU_local_check,
)
from .group import (
    CapExceededError,
    FiniteGroup,
    SubgroupRef,
    center,
    centralizer,
    closure,
    conjugate_subgroup,
    core,
    normalizer,
    permutes,
    quotient_group,
    set_product,
)
from .perm import Permutation, compose, format_cycles, parse_cycles
from .permutizer import (
    carter_subgroups,
    is_abnormal,
    is_p_subnormal,
    is_permuteral,
    is_pronormal,
    is_strongly_permuteral,
    is_w_supersoluble,
    p_subnormal_chain,
    permutizer,
    strongly_permuteral_witness,
)
from .search import search_counterexamples
from .subgroups import all_subgroups, hall_subgroups, intermediate_subgroups, normal_subgroups, sylow_subgroups
from .verify import SuiteReport, VerifyOptions, run_suite

__version__ = "0.1.0"
