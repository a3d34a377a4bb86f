"""Term language, axiom catalogs and the law checker."""

from .terms import (
    Add, Err, Inv, Mul, Neg, NOf, One, Term, TermSyntaxError, UnboundVariable,
    Var, Zero, eval_term, format_term, free_vars, parse_term,
)
from .laws import (
    CATALOG_NAMES, Guard, Law, LawFileError, UnknownCatalog, all_laws, catalog,
    find_law, parse_law, parse_law_file,
)
from .checker import (
    MIN_EFFECTIVE, Counterexample, Exhaustive, Random, Report, check,
    check_suite, evaluate_law, sample_env,
)
