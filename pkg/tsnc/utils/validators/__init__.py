from tsnc.utils.validators.quantity import (
    validate_non_negative,
    validate_positive,
    validate_range,
)

__all__ = [
    "validate_non_negative",
    "validate_positive",
    "validate_range",
]
