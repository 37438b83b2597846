"""Haar sampling, greedy packing, direct-sum assembly and certification."""

from .sampler import derive_seed, haar_unitary, random_tuple, splitmix64
from .models import CertificationReport, Marginal, PackingResult, Violation, ViolationKind
from .greedy import admission_sweep, gap_certificate, greedy_pack, reconstruct_kept
from .assembly import assemble_direct_sum, certify_family

__all__ = [
    "derive_seed",
    "haar_unitary",
    "random_tuple",
    "splitmix64",
    "CertificationReport",
    "Marginal",
    "PackingResult",
    "Violation",
    "ViolationKind",
    "admission_sweep",
    "gap_certificate",
    "greedy_pack",
    "reconstruct_kept",
    "assemble_direct_sum",
    "certify_family",
]
