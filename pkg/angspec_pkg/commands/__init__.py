from ..commands.base import BASE, RunConfig, EXIT_OK, EXIT_USAGE, EXIT_SOLVER, EXIT_TABLE, EXIT_VERIFY
from ..commands.bounds import BOUNDS, bound_rows
from ..commands.spectrum import SPECTRUM, spectrum_rows
from ..commands.table import TABLE, table_report
from ..commands.verify import VERIFY, verify_instances
from ..commands.sweep import SWEEP, sweep_rows, FIGURES


COMMANDS = {
    "bounds": BOUNDS,
    "spectrum": SPECTRUM,
    "table": TABLE,
    "verify": VERIFY,
    "sweep": SWEEP,
}
__all__ = [
    "COMMANDS",
    "BASE",
    "RunConfig",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_SOLVER",
    "EXIT_TABLE",
    "EXIT_VERIFY",
    "BOUNDS",
    "bound_rows",
    "SPECTRUM",
    "spectrum_rows",
    "TABLE",
    "table_report",
    "VERIFY",
    "verify_instances",
    "SWEEP",
    "sweep_rows",
    "FIGURES",
]
