from ..num_utils import misc_utils

__all__ = [
    "misc_utils",
]
