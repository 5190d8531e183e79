from ._sleib import (
    SleibError,
    UncoveredInputError,
    NoRationalInverseError,
    canonical,
    class_count,
    classify,
    closed_transform,
    enumerate_classes,
    iso,
    random_point,
    subset_names,
    transform,
    verify,
    witness,
)

__all__ = [
    "SleibError",
    "UncoveredInputError",
    "NoRationalInverseError",
    "canonical",
    "class_count",
    "classify",
    "closed_transform",
    "enumerate_classes",
    "iso",
    "random_point",
    "subset_names",
    "transform",
    "verify",
    "witness",
]
