import argparse
import logging
import re
import sys

from angspec_pkg.commands import COMMANDS, EXIT_OK, EXIT_USAGE, EXIT_SOLVER
from angspec_pkg.errors import AngularError, BlockMatrixError
from angspec_pkg.num_utils.misc_utils import DEFAULT_SEED, seed_everything


logger = logging.getLogger("angspec")

VALUE_FLAGS = {"--k", "--n", "--am", "--aomega", "--a", "--m", "--omega", "--from", "--to", "--n0", "--dims"}
NEGATIVE_VALUE = re.compile(r"^-\d")


def normalize_argv(argv):
    """Glues negative values such as `-5..4` to their flag; argparse would read them as options."""
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in VALUE_FLAGS and i + 1 < len(argv) and NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def parse_args_angspec(argv=None):
    """Parses the command name, then that command's flags, then the shared output flags.

    Returns:
        argparse.Namespace: a namespace containing all args of the selected command.
    """
    argv = normalize_argv(list(sys.argv[1:] if argv is None else argv))
    parser = argparse.ArgumentParser(prog="angspec")

    # command
    parser.add_argument("command", choices=sorted(COMMANDS), type=str)

    # command specific args
    temp_args, _ = parser.parse_known_args(argv)
    parser = COMMANDS[temp_args.command].add_command_specific_args(parser)

    # output and run args
    parser.add_argument("--format", choices=["csv", "json"], type=str, default="csv")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--out", type=str, default=None)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--verbose", default=False, action="store_true")
    parser.add_argument("--unverified-refinements", dest="unverified_refinements", default=False,
                        action="store_true")

    return parser.parse_args(argv)


def main(argv=None):
    try:
        args = parse_args_angspec(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(asctime)s %(name)s %(levelname)s %(message)s", stream=sys.stderr)
    logger.info("args Report:\n%s", args)
    seed_everything(args.seed)

    command = COMMANDS[args.command](args)
    try:
        return command.run()
    except (ValueError, NotImplementedError) as err:
        logger.error("%s: %s", args.command, err)
        return EXIT_USAGE
    except (AngularError, BlockMatrixError) as err:
        logger.error("%s failed: %s: %s", args.command, type(err).__name__, err)
        return EXIT_SOLVER


def main_cli():
    sys.exit(main())


if __name__ == "__main__":
    main_cli()
