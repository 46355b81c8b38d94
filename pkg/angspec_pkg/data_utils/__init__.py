from ..data_utils import fixtures
from ..data_utils import io_utils

__all__ = [
    "fixtures",
    "io_utils",
]
