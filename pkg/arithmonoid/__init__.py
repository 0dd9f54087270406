# arithmonoid/__init__.py

from .arith import (
    IDENTITY,
    ZERO,
    ArithElement,
    NormalForm,
    Zero,
    apply,
    compose,
    compose_all,
    dagger,
    dagger_generator,
    generator,
    normal_form,
)
from .numtheory import CongruenceClass, DomainError, intersect
from .oracle import InvariantViolation, check_chain

__all__ = [
    "IDENTITY",
    "ZERO",
    "ArithElement",
    "NormalForm",
    "Zero",
    "apply",
    "compose",
    "compose_all",
    "dagger",
    "dagger_generator",
    "generator",
    "normal_form",
    "CongruenceClass",
    "DomainError",
    "intersect",
    "InvariantViolation",
    "check_chain",
]
