"""Classical and virtual knotoids: Gauss codes, moves, carrier genus,
planar closures, the bracket invariant and bounded equivalence search."""

from .errors import (
    CapExceededError,
    CodeSyntaxError,
    DiagramError,
    KnotoidError,
    NotClassicalError,
    RouteError,
    StaleSiteError,
    ValidationError,
)
from .gauss import (
    CyclicGaussCode,
    GaussEntry,
    OpenGaussCode,
    all_codes,
    canonicalize,
    parse_code,
    parse_cyclic,
    product,
    random_code,
    read_gko,
    serialize,
    validate,
    virtual_closure,
    write_gko,
)
from .invariants import bracket, f_polynomial, knotoid_f, writhe
from .laurent import LaurentPolynomial
from .moves import STANDARD, UNDER_CLOSURE, InsertionCaps, MoveSite, apply_move, enumerate_moves, find_inverse
from .planar import (
    PlanarDiagram,
    closure,
    face_routes,
    from_classical_code,
    overpass_closure,
    read_pkd,
    to_open_code,
    underpass_closure,
)
from .search import SearchBudget, equivalent, explore, min_genus_bound, tabulate
from .surface import carrier_genus, is_classical

__version__ = "0.1.0"


def fixture_path(name: str):
    """Path of a data file shipped with the package, e.g. ``fixture_path("fig5.pkd")``."""
    from importlib.resources import files

    return files(__name__).joinpath("data", name)
