"""Exact certificates that frame-spun knots are slice.

Build the Seifert matrix of a frame-spun knot from pairing data
(:mod:`slicecert.framespin`), then produce and independently check an
integral congruence exhibiting it as null-cobordant
(:mod:`slicecert.cobordism`, :mod:`slicecert.certificate`).
"""

from .certificate import SliceCertificate, first_violation, verify
from .cobordism import certify_frame_spin, make_tamper_evident
from .exactmat import IntMatrix
from .framespin import SpinInput, assemble
from .seifert import KnotDims, SeifertData

__all__ = [
    "IntMatrix",
    "KnotDims",
    "SeifertData",
    "SliceCertificate",
    "SpinInput",
    "assemble",
    "certify_frame_spin",
    "first_violation",
    "make_tamper_evident",
    "verify",
]
