"""Theta functions, q-products and the named identities between them."""
from .builders import b_series, eta_quotient, phi_series, pochhammer_series, psi_series, s_series
from .identities import FROBENIUS_PRIMES, IdentityId, identity_sides

__all__ = [
    "phi_series",
    "psi_series",
    "s_series",
    "pochhammer_series",
    "eta_quotient",
    "b_series",
    "IdentityId",
    "identity_sides",
    "FROBENIUS_PRIMES",
]
