"""Variable-exponent Lebesgue spaces over finite measured groups."""
from .algebra import (approximate_identity_convergence, approximate_identity_family, circle_chain,
                      convolve, find_identity, submultiplicativity_report, translate)
from .exponent import Exponent, conjugate, constant, sample_exponent
from .group import (MeasuredGroup, build_circle, build_cyclic, build_dihedral, build_product,
                    build_symmetric, validate)
from .modular import ModularKind, modular
from .norms import amemiya_norm, associate_norm, classical_norm, luxemburg_norm

__all__ = [
    "Exponent", "MeasuredGroup", "ModularKind", "amemiya_norm", "approximate_identity_convergence",
    "approximate_identity_family", "associate_norm", "build_circle", "build_cyclic", "build_dihedral",
    "build_product", "build_symmetric", "circle_chain", "classical_norm", "conjugate", "constant",
    "convolve", "find_identity", "luxemburg_norm", "modular", "sample_exponent",
    "submultiplicativity_report", "translate", "validate",
]
