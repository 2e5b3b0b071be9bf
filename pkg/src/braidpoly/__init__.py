"""A coloring invariant of link diagrams built from HOMFLY-PT polynomials."""

from .braid import BraidError, BraidLetter, BraidWord, conjugate, parse, random_word, resolve_singular
from .coloring import class_sizes, enumerate_colorings, induced_diagram, max_color_bound
from .diagram import (
    ConwayTriple,
    Crossing,
    Diagram,
    DiagramError,
    canonical_key,
    closure,
    components,
    conway_triple,
    insert_kink,
    insert_r2,
    restrict,
    smooth,
    switch,
    unlink,
    writhe,
)
from .homfly import SkeinBudget, SkeinBudgetExceeded, SkeinCache, conway, homfly, homfly_da_at_one
from .invariant import (
    I,
    I_k,
    I_k_at_a1,
    I_slices,
    InvariantReport,
    check_theorem4,
    link_invariant_J,
    report,
    skein_check,
    vassiliev_eval,
)
from .laurent import LaurentPoly, monomial

__version__ = "0.1.0"
