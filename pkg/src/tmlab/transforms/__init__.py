"""Machine-to-machine reductions trading states for symbols and back."""

from tmlab.transforms.certificate import CERT_VERSION, Certificate, CertificateError
from tmlab.transforms.reduced import ReducedMachine
from tmlab.transforms.states import (reduce_states_2_empty, reduce_states_2_seeded, reduce_states_2b1,
                                     reduce_states_3)
from tmlab.transforms.symbols import reduce_symbols

__all__ = [
    "CERT_VERSION", "Certificate", "CertificateError", "ReducedMachine", "reduce_symbols",
    "reduce_states_3", "reduce_states_2b1", "reduce_states_2_seeded", "reduce_states_2_empty",
]
