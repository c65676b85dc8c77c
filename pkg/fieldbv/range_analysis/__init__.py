from .range_analysis import *
from .helpers import (nat_view, hypothesis_bounds, RangeGoalSet, has_vars,
                      two_orig_vars, has_sub)
from .decompose import decompose
from .eliminate import eliminate
from .reasoning import eval_const, zero_atoms, case_split, xor_rewrite
