"""Two-dimensional algebras and associative dialgebras over a field:
structure constants, axiom checks, brute-force isomorphism search over
finite fields and the classification catalogs."""
from .catalog import CanonicalLabel, Family, aut_shape, families, normalize_params, representatives, side_condition_ok
from .dialgebra import DiMSC, dia_axiom_verdicts, dia_check, dia_transform
from .field import FE, FieldCtx, FieldError, UnsupportedError, make_field
from .msc import GL2, MSC, assoc_matrix_check, aut_check, mul_vec, transform
from .search import ClassificationGap, automorphism_group, classify, dia_isomorphic, isomorphic, orbit, orbit_key

__version__ = "0.1.0"
