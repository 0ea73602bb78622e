"""
Main application orchestrator for the command line.
"""

import logging
import sys
from pathlib import Path

import numpy as np

from .cdim import cdim_2d, convex_dimension_exact
from .cli import CLIParser
from .config import ConfigManager, SearchLimits
from .display import DisplayManager
from .harness import replay_counterexample, run_search
from .planar import boundary_decomposition, satisfies_def4
from .pointfile import PointFile
from .render import SetRenderer
from .report import (Report, boundary_report, cdim_report, conjecture_report, replay_report, report_summary,
                     run_checks, staircase_check_report, staircase_trace_report, verify_report)
from .staircase import (StaircaseSpec, h_chain_decomposition, is_step_staircase, random_face_starts,
                        random_regular_spec, staircase_points, three_chain_decomposition, validate_regular)
from .utils import SearchCapExceeded, ValidationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_INPUT = 2


class PolyAntiApp:
    """Main application class that dispatches subcommands and maps outcomes to exit codes."""

    def __init__(self, version, author, date, stdout=None, stderr=None):
        self.version = version
        self.author = author
        self.date = date
        self.stdout = stdout
        self.stderr = stderr

        self.cli_parser = CLIParser(version, author, date)
        self.config_manager = ConfigManager()
        self.display_manager = DisplayManager(stream=stderr)

    def run(self, argv=None) -> int:
        """Main execution method. Returns the exit code."""
        try:
            args, _ = self.cli_parser.parse_and_validate(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_INPUT

        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        try:
            limits = self._load_limits(args)
            if args.save_config:
                self.config_manager.save_config(limits, args.save_config)
                self.display_manager.print_written(args.save_config, "config")
            name = args.command if args.command != "staircase" else f"staircase_{args.staircase_command}"
            handler = getattr(self, f"cmd_{name}")
            logger.debug("running %s with %s", name, limits)
            return handler(args, limits)
        except (ValidationError, OSError, ImportError) as exc:
            self.display_manager.print_error(exc)
            return EXIT_INPUT

    def _load_limits(self, args) -> SearchLimits:
        if args.config:
            config = self.config_manager.load_config(args.config)
            result = self.config_manager.validate_config(config)
            for warning in result['warnings']:
                self.display_manager.print_warning(warning)
            if not result['valid']:
                raise ValidationError("invalid config: " + "; ".join(result['errors']))
            self.config_manager.apply_config_to_args(args, config)
        return SearchLimits.from_args(args)

    def _emit(self, args, text, what="report"):
        if args.output:
            Path(args.output).parent.mkdir(parents=True, exist_ok=True)
            with open(args.output, "w") as f:
                f.write(text)
            self.display_manager.print_written(args.output, what)
        else:
            (self.stdout or sys.stdout).write(text)

    def _emit_report(self, args, report: Report, title):
        self._emit(args, report.dumps())
        self.display_manager.print_summary(title, report_summary(report))

    def cmd_verify(self, args, limits):
        S = PointFile.load(args.input).points
        S.require_non_empty("verify")
        report, violation = verify_report(S, args.point_class, run_checks(S))
        self._emit_report(args, report, f"Verify {args.point_class}")
        if violation is not None:
            self.display_manager.print_verdict(False, violation.message)
            return EXIT_FAILS
        return EXIT_OK

    def cmd_boundary(self, args, limits):
        S = PointFile.load(args.input).points
        S.require_non_empty("boundary")
        if S.dim != 2:
            raise ValidationError("boundary needs a two-dimensional point file")
        decomposition = boundary_decomposition(S)
        report = boundary_report(S, decomposition.lower, decomposition.upper, args.check_join)
        self._emit_report(args, report, "Boundary chains")
        if args.render:
            text = SetRenderer(S, ("boundaries",)).render(args.format)
            Path(args.render).parent.mkdir(parents=True, exist_ok=True)
            with open(args.render, "w") as f:
                f.write(text)
            self.display_manager.print_written(args.render, "render")
        return EXIT_OK if report.get("join", "exact") == "exact" else EXIT_FAILS

    def cmd_cdim(self, args, limits):
        S = PointFile.load(args.input).points
        S.require_non_empty("cdim")
        if S.dim == 2 and not args.brute_force and satisfies_def4(S):
            result = cdim_2d(S)
        else:
            result = convex_dimension_exact(S, limits.chain_cap, limits.subset_cap)
        self._emit_report(args, cdim_report(S, result), "Convex dimension")
        if not result.is_exact:
            self.display_manager.print_warning(
                f"search cap reached; convex dimension lies in [{result.lower}, {result.upper}]")
        return EXIT_OK

    def _spec_from_args(self, cuboids) -> StaircaseSpec:
        return StaircaseSpec.from_corners((c[:3], c[3:]) for c in cuboids)

    def cmd_staircase_gen(self, args, limits):
        if args.random:
            spec = random_regular_spec(limits.seed, args.max_steps, args.max_coord)
        else:
            spec = self._spec_from_args(args.cuboid)
        S = staircase_points(spec)
        comments = [f"cuboid {i}: {c}" for i, c in enumerate(spec.cuboids, start=1)]
        self._emit(args, PointFile(S, comments).dumps(), "point file")
        self.display_manager.print_summary("Staircase", {"cuboids": len(spec), "points": len(S)})
        return EXIT_OK

    def cmd_staircase_check(self, args, limits):
        regular, violations = None, []
        spec = None
        if args.cuboid:
            spec = self._spec_from_args(args.cuboid)
            regular, violations = validate_regular(spec)
        if args.input:
            S = PointFile.load(args.input).points
        elif regular:
            S = staircase_points(spec)
        else:
            report = Report("staircase check").add("regular", False)
            report.add_list("violations", violations)
            self._emit_report(args, report, "Staircase check")
            return EXIT_FAILS
        if S.dim != 3:
            raise ValidationError("staircase check needs a three-dimensional point set")
        try:
            witness = is_step_staircase(S, **limits.staircase_kwargs())
            verdict = witness is not None
        except SearchCapExceeded as exc:
            self.display_manager.print_warning(str(exc))
            witness, verdict = None, None
        report = staircase_check_report(S, witness, verdict, regular, violations)
        self._emit_report(args, report, "Staircase check")
        return EXIT_OK if verdict and regular is not False else EXIT_FAILS

    def cmd_staircase_trace(self, args, limits):
        S = PointFile.load(args.input).points
        S.require_non_empty("staircase trace")
        if S.dim != 3:
            raise ValidationError("staircase trace needs a three-dimensional point set")
        starts = None
        if args.random_starts:
            starts = random_face_starts(S, np.random.default_rng(limits.seed))
        elif args.start_x or args.start_y or args.start_z:
            top = S.max_point
            starts = tuple(tuple(s) if s else top for s in (args.start_x, args.start_y, args.start_z))
        if starts is None:
            chains = three_chain_decomposition(S)
        else:
            chains = h_chain_decomposition(S, *starts)
        report = staircase_trace_report(S, chains, starts)
        self._emit_report(args, report, "Staircase chains")
        return EXIT_OK if report.get("join") == "exact" else EXIT_FAILS

    def cmd_conjecture(self, args, limits):
        search = run_search(tuple(args.box), args.claim, limits, bound=args.bound, samples=args.random,
                            save_dir=args.save_counterexamples, progress=args.progress)
        self._emit(args, conjecture_report(search, timings=args.timings).dumps())
        self.display_manager.print_search_summary(search)
        return EXIT_FAILS if search.counterexamples else EXIT_OK

    def cmd_render(self, args, limits):
        S = PointFile.load(args.input).points
        self._emit(args, SetRenderer(S, args.overlay).render(args.format), "render")
        return EXIT_OK

    def cmd_replay(self, args, limits):
        with open(args.input, "r") as f:
            text = f.read()
        first = next((line.strip() for line in text.splitlines()
                      if line.strip() and not line.startswith("#")), "")
        if first.startswith("dim"):
            ok = replay_counterexample(args.input, limits)
            self.display_manager.print_verdict(ok, "counterexample reproduces" if ok
                                               else "counterexample does not reproduce")
            return EXIT_OK if ok else EXIT_FAILS
        problems = replay_report(Report.parse(text), limits)
        for problem in problems:
            self.display_manager.print_verdict(False, problem)
        if not problems:
            self.display_manager.print_verdict(True, "report re-verifies")
        return EXIT_FAILS if problems else EXIT_OK


def main():
    """Entry point for the command line interface."""
    from . import __version__, __author__, __date__

    app = PolyAntiApp(__version__, __author__, __date__)
    sys.exit(app.run())


if __name__ == "__main__":
    main()
