from angspec_pkg import angular, blockmat, commands, data_utils, num_utils, solvers

__all__ = ["angular", "blockmat", "commands", "data_utils", "num_utils", "solvers"]
