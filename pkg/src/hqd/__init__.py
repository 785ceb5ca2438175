"""Partitionable decompositions of even hypercubes into cycles of length 2^i."""

from .certificates import PartitionedDecomposition, q4_certificate, q6_certificate
from .core import ProductEmbedding
from .drivers import DecompositionRequest, decompose, halfham_decompose, ham_decompose
from .errors import CertificateParseError, InvalidArgument, InvalidRecolor, UnsupportedInstance
from .verify import VerificationReport, brute_force_decompose, verify_partitionable

__all__ = [
    "CertificateParseError",
    "DecompositionRequest",
    "InvalidArgument",
    "InvalidRecolor",
    "PartitionedDecomposition",
    "ProductEmbedding",
    "UnsupportedInstance",
    "VerificationReport",
    "brute_force_decompose",
    "decompose",
    "halfham_decompose",
    "ham_decompose",
    "q4_certificate",
    "q6_certificate",
    "verify_partitionable",
]
