"""Representations by sums of three generalized m-gonal numbers."""
from .class_numbers import class_number, hurwitz, hurwitz_3ellsq, kronecker, r3_via_class_number
from .coset_lattice import CosetZ3, automorph_count, coset_for, rep_count, theta_series
from .local_analysis import (locally_admissible, mod8_obstruction, polygonal_residues,
                             sum_residues, two_adic_surjective)
from .polygonal import (PolygonalFamily, classify_exception, ell_of, exceptional_set,
                        polygonal_number, representation_count)
from .qseries import QSeries, dilate, equal_up_to, sieve, theta_cube, unary_theta
from .spinor_m14 import (GENUS_M14, genus_theta, scan_3ell2, sieve_identity_probe,
                         spinor_theta, sturm_index, verify_siegel_weil)
from .witnesses import find_witnesses, survey, target_residue, witness_n

__version__ = "0.1.0"
