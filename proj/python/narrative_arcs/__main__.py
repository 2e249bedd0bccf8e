"""``python -m narrative_arcs`` — forwards to the in-process CLI."""

import sys

from narrative_arcs._core import cli_main


def main() -> int:
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
