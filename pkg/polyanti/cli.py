"""
Command-line interface parser and validation.
"""

import argparse

from .config import SearchLimits
from .harness import CLAIMS, DEFAULT_BOUND
from .render import FORMATS, OVERLAYS
from .report import CLASSES
from .utils import ValidationError, validate_non_negative_int, validate_positive_int

_DEFAULTS = SearchLimits()


class CLIParser:
    """Handles command-line argument parsing and validation."""

    def __init__(self, version, author, date):
        self.version = version
        self.author = author
        self.date = date

    def _common_parent(self):
        parent = argparse.ArgumentParser(add_help=False)
        group = parent.add_argument_group("general options")
        group.add_argument("--verbose", "-v", action="store_true",
                           help="Enable debug logging")
        group.add_argument("--config", type=str,
                           help="Load search limits from a JSON or YAML config file")
        group.add_argument("--save-config", type=str,
                           help="Save the effective search limits to a JSON or YAML config file")
        group.add_argument("--output", "-o", type=str,
                           help="Write the report or point file here instead of stdout")
        return parent

    def _limits_parent(self):
        parent = argparse.ArgumentParser(add_help=False)
        group = parent.add_argument_group("search limits")
        group.add_argument("--chain-cap", type=int, dest="chain_cap",
                           help=f"Maximal chains enumerated before giving an interval (default {_DEFAULTS.chain_cap})")
        group.add_argument("--subset-cap", type=int, dest="subset_cap",
                           help=f"Chain subsets tested before giving an interval (default {_DEFAULTS.subset_cap})")
        group.add_argument("--maximal-cuboid-cap", type=int, dest="maximal_cuboid_cap",
                           help=f"Maximal cuboids for the quick staircase pass "
                                f"(default {_DEFAULTS.maximal_cuboid_cap})")
        group.add_argument("--cuboid-cap", type=int, dest="cuboid_cap",
                           help=f"Sub-cuboids for the complete staircase pass (default {_DEFAULTS.cuboid_cap})")
        group.add_argument("--max-sequence-length", type=int, dest="max_sequence_length",
                           help=f"Longest cuboid sequence searched (default {_DEFAULTS.max_sequence_length})")
        group.add_argument("--node-cap", type=int, dest="node_cap",
                           help=f"Staircase search nodes per pass (default {_DEFAULTS.node_cap})")
        group.add_argument("--workers", type=int,
                           help=f"Worker processes for conjecture scans (default {_DEFAULTS.workers})")
        group.add_argument("--seed", type=int,
                           help=f"Seed for random generation and sampling (default {_DEFAULTS.seed})")
        return parent

    def create_parser(self):
        """Create and configure the argument parser."""
        parser = argparse.ArgumentParser(
            prog="polyanti",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
            description=f"Verify, decompose and search poly-antimatroid point sets. (v{self.version})",
            epilog=f"Created by {self.author}, {self.date}."
        )
        parser.add_argument("--version", action="version",
                            version=f"polyanti v{self.version} by {self.author} ({self.date})")

        common = self._common_parent()
        limits = self._limits_parent()
        fmt = argparse.ArgumentDefaultsHelpFormatter
        sub = parser.add_subparsers(dest="command", metavar="COMMAND")

        verify = sub.add_parser("verify", parents=[common], formatter_class=fmt,
                                help="Check the axioms and closure properties of a point file")
        verify.add_argument("input", help="Point file")
        verify.add_argument("--class", dest="point_class", choices=CLASSES, default="poly-antimatroid",
                            help="Class whose membership decides the exit code; antimatroidal-2d "
                                 "on 3D input is a usage error (exit 2)")

        boundary = sub.add_parser("boundary", parents=[common], formatter_class=fmt,
                                  help="Trace the lower and upper boundary chains of a 2D set")
        boundary.add_argument("input", help="Point file")
        boundary.add_argument("--check-join", action="store_true",
                              help="Check that the two boundaries join back to the set")
        boundary.add_argument("--render", type=str, metavar="FILE",
                              help="Also write a render with boundary marks to FILE")
        boundary.add_argument("--format", choices=FORMATS, default="ascii",
                              help="Render format for --render")

        cdim = sub.add_parser("cdim", parents=[common, limits], formatter_class=fmt,
                              help="Convex dimension bounds, exact value and witness chains")
        cdim.add_argument("input", help="Point file")
        cdim.add_argument("--brute-force", action="store_true",
                          help="Use the exact chain search even for 2D antimatroidal sets")

        self._add_staircase(sub, common, limits, fmt)

        conjecture = sub.add_parser("conjecture", parents=[common, limits], formatter_class=fmt,
                                    help="Search a small 3D box for counterexamples")
        conjecture.add_argument("--box", type=int, nargs=3, required=True, metavar=("X", "Y", "Z"),
                                help="Box corner; the box is [0..X]x[0..Y]x[0..Z]")
        conjecture.add_argument("--claim", choices=CLAIMS, default="staircase",
                                help="Claim to test on every poset poly-antimatroid")
        conjecture.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                                help="Convex dimension bound for --claim cdim")
        conjecture.add_argument("--random", type=int, metavar="N",
                                help="Test N seeded random samples instead of every subset")
        conjecture.add_argument("--save-counterexamples", type=str, metavar="DIR",
                                help="Write each counterexample as a point file into DIR")
        conjecture.add_argument("--timings", action="store_true",
                                help="Include the wall-clock duration in the report")
        conjecture.add_argument("--progress", action="store_true",
                                help="Show a progress bar")

        render = sub.add_parser("render", parents=[common], formatter_class=fmt,
                                help="Render a point set as a character grid or SVG")
        render.add_argument("input", help="Point file")
        render.add_argument("--format", choices=FORMATS, default="ascii", help="Output format")
        render.add_argument("--overlay", choices=OVERLAYS, action="append", default=[],
                            help="Overlay to draw (repeatable)")

        replay = sub.add_parser("replay", parents=[common, limits], formatter_class=fmt,
                                help="Re-verify a report or a saved counterexample file")
        replay.add_argument("input", help="Report file or counterexample point file")

        return parser

    def _add_staircase(self, sub, common, limits, fmt):
        staircase = sub.add_parser("staircase", formatter_class=fmt,
                                   help="Generate, check and trace 3D staircases")
        actions = staircase.add_subparsers(dest="staircase_command", metavar="ACTION")

        gen = actions.add_parser("gen", parents=[common, limits], formatter_class=fmt,
                                 help="Write the points of a regular cuboid sequence")
        gen.add_argument("--cuboid", type=int, nargs=6, action="append", metavar="N",
                         help="Cuboid as min and max corner: X0 Y0 Z0 X1 Y1 Z1 (repeat in order)")
        gen.add_argument("--random", action="store_true",
                         help="Generate a seeded random regular sequence instead")
        gen.add_argument("--max-steps", type=int, default=5, help="Longest random sequence")
        gen.add_argument("--max-coord", type=int, default=8, help="Largest random coordinate")

        check = actions.add_parser("check", parents=[common, limits], formatter_class=fmt,
                                   help="Check regularity and step-staircase membership")
        check.add_argument("input", nargs="?", help="Point file (defaults to the union of --cuboid)")
        check.add_argument("--cuboid", type=int, nargs=6, action="append", metavar="N",
                           help="Cuboid sequence whose regularity is checked")

        trace = actions.add_parser("trace", parents=[common, limits], formatter_class=fmt,
                                   help="Trace the three chains and check their join")
        trace.add_argument("input", help="Point file")
        trace.add_argument("--start-x", type=int, nargs=3, metavar="N",
                           help="Start of the x-face chain (default: the maximum point)")
        trace.add_argument("--start-y", type=int, nargs=3, metavar="N",
                           help="Start of the y-face chain (default: the maximum point)")
        trace.add_argument("--start-z", type=int, nargs=3, metavar="N",
                           help="Start of the z-face chain (default: the maximum point)")
        trace.add_argument("--random-starts", action="store_true",
                           help="Draw the three starts from the maximal faces with --seed")
        return staircase

    def parse_and_validate(self, argv=None):
        """Parse command line arguments and perform validation."""
        parser = self.create_parser()
        args = parser.parse_args(argv)

        if not args.command:
            parser.print_help()
            raise SystemExit(0)
        if args.command == "staircase" and not getattr(args, "staircase_command", None):
            parser.error("staircase needs an action: gen, check or trace")

        try:
            for name in SearchLimits.field_names():
                value = getattr(args, name, None)
                if value is None:
                    continue
                if name == "seed":
                    validate_non_negative_int(value, "--seed")
                else:
                    validate_positive_int(value, "--" + name.replace("_", "-"))
            if args.command == "conjecture":
                validate_non_negative_int(min(args.box), "--box coordinates")
                validate_positive_int(args.bound, "--bound")
                if args.random is not None:
                    validate_positive_int(args.random, "--random")
            if args.command == "staircase" and args.staircase_command == "gen":
                if bool(args.cuboid) == bool(args.random):
                    raise ValidationError("staircase gen needs either --cuboid or --random")
                validate_positive_int(args.max_steps, "--max-steps")
                validate_positive_int(args.max_coord, "--max-coord")
            if args.command == "staircase" and args.staircase_command == "check":
                if not args.input and not args.cuboid:
                    raise ValidationError("staircase check needs a point file or --cuboid")
        except ValidationError as e:
            parser.error(str(e))

        return args, parser
