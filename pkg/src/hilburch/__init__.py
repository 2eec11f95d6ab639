"""Canonical Hilbert-Burch matrices and Groebner cells of zero-dimensional
ideals in k[[x, y]]."""

from .field import GF, QQ, Field
from .poly import DEGLEX, LEX, LOCAL, Poly, compare
from .parse import ParseError, format_poly, parse_poly, parse_poly_list
from .staircase import (Staircase, enumerate_staircases, lex_segment_of, parse_staircase,
                        staircase_from_generators)
from .localstd import (IdealPresentation, StandardBasis, grauert_divide, ideal,
                       lt_ideal_lex, lt_ideal_local, reduced_standard_basis, y_divide)
from .hbm import (CellPoint, Deformation, classify_deformation, decode_cellpoint,
                  encode_cellpoint, phi, signed_minors)
from .cells import (canonical_deformation, cell_dimension, conjecture_probe, inverse_phi,
                    membership, syzygy_deformation, truncate_deformation)
from .gorenstein import cover_search, gcl_bound, is_cover, is_gorenstein_point, rank_profile

__version__ = "0.1.0"
