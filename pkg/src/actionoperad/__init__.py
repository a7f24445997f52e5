"""Action operads: groups acting on operads through their underlying permutations.

The subpackage :mod:`actionoperad.instances` holds the concrete examples:
symmetric, trivial, abelian, braid, ribbon braid and cactus.
"""

from .aopcore import (
    ActionOperad,
    AxiomReport,
    Equality,
    SampleBudget,
    Status,
    check_derived_laws,
    check_nine_axioms,
    check_single_axiom,
    mu,
)
from .errors import (
    ActionOperadError,
    ArityError,
    BudgetError,
    CompositionError,
    InvariantError,
    ParseError,
    TermTypeError,
)
from .instances import get_instance
from .perm import Perm

__version__ = "0.1.0"

__all__ = [
    "ActionOperad",
    "AxiomReport",
    "Equality",
    "SampleBudget",
    "Status",
    "check_derived_laws",
    "check_nine_axioms",
    "check_single_axiom",
    "mu",
    "ActionOperadError",
    "ArityError",
    "BudgetError",
    "CompositionError",
    "InvariantError",
    "ParseError",
    "TermTypeError",
    "get_instance",
    "Perm",
]
