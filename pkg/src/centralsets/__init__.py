"""Exact desk-scale checkers for largeness notions, combinatorial
trees, Hales-Jewett machinery, and shift dynamics on finite semigroups
and bounded windows of the naturals."""

__version__ = "0.1.0"

from .semigroup import (  # noqa: F401
    ElementSet,
    FiniteSemigroup,
    IdealStructure,
    LargenessProfile,
    central_shift_spectrum,
    ideal_structure,
    is_central,
    largeness_profile,
    load_semigroup,
    shift_set,
)
from .windows import (  # noqa: F401
    Coloring,
    Verdict,
    WindowSet,
    bergelson_search,
    combination_closure,
    div_set,
    find_fs_basis,
    partition_scan,
    window_largeness,
)
from .trees import (  # noqa: F401
    FiniteTree,
    SetFamily,
    branch_and_products,
    build_fp_tree,
    classify_tree,
    cwpws_check,
    is_good_family,
)
from .halesjewett import (  # noqa: F401
    ChiArguments,
    JSearchBounds,
    VariableWord,
    WordColoring,
    build_gw,
    chi_eval,
    cset_recursion,
    find_j_witness,
    find_mono_line,
    hj_number_search,
    line,
    reduce_line_to_witness,
    verify_c_witness,
)
from .dynamics import (  # noqa: F401
    ShiftSystem,
    build_shift_system,
    dynamically_central,
    recurrence_and_proximality,
    return_set,
    window_dynamics,
)
