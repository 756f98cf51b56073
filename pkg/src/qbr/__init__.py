"""Exact verification of braid-group and q-Racah identities for U_q(sl2) spin representations."""

from .braidedr import braided_r, universal_r_rep, xi
from .centralizer import casimir_bundle, kappa, multiplicity_space, restricted_pair
from .exactlinalg import QMatrix, inverse, kron, spectral_idempotents
from .qnumbers import AdmissibilityError, QContext, chi, phi, qnumber, qpochhammer, qracah
from .qracah_braid import build_model, model_params, spins_for_model, transition_matrix
from .report import VerificationReport
from .uqsl2rep import decomposition_data, spin_rep

__all__ = [
    "AdmissibilityError", "QContext", "QMatrix", "VerificationReport",
    "braided_r", "build_model", "casimir_bundle", "chi", "decomposition_data",
    "inverse", "kappa", "kron", "model_params", "multiplicity_space", "phi",
    "qnumber", "qpochhammer", "qracah", "restricted_pair", "spectral_idempotents",
    "spin_rep", "spins_for_model", "transition_matrix", "universal_r_rep", "xi",
]
