"""Exact computations in the topological face ring of a nice manifold with corners."""

from .algebra import FieldSpec, GradedAlgebra, AlgebraMap, alg_mul, apply_map, validate_algebra
from .corners import Face, FaceComplex, components, face_of_label, restrict_coeff, validate_complex
from .facering import (
    FacePolynomial,
    RingElement,
    TorusData,
    decompose,
    eta,
    hilbert,
    homogeneous_component,
    is_face_element,
    linear_combine,
    make_face_element,
    multiply,
    phi,
    tau,
    theta,
)
from .charclass import CharClassData, pontrjagin_total, sw_total
from .models import build_builtin, load_model, save_model

__version__ = "0.1.0"
