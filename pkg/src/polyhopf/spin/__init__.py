"""Spin actions on spinors and the rotations of R + F they induce."""

from polyhopf.spin.cartan import reflection_normals, unitary_from_rotation, word_from_rotation
from polyhopf.spin.generators import (
    GeneratorWord,
    SpinGenerator,
    generator_apply,
    generator_matrix,
    generator_rotation,
    random_generator,
    random_word,
    word_apply,
    word_rotation,
)
from polyhopf.spin.rotation import Rotation, random_rotation
from polyhopf.spin.unitary import (
    SpecialUnitary2,
    adjoint_rotation,
    quaternion_complexify,
    su2_apply,
    su2_random,
)

__all__ = [
    "GeneratorWord",
    "Rotation",
    "SpecialUnitary2",
    "SpinGenerator",
    "adjoint_rotation",
    "generator_apply",
    "generator_matrix",
    "generator_rotation",
    "quaternion_complexify",
    "random_generator",
    "random_rotation",
    "random_word",
    "reflection_normals",
    "su2_apply",
    "su2_random",
    "unitary_from_rotation",
    "word_apply",
    "word_from_rotation",
    "word_rotation",
]
