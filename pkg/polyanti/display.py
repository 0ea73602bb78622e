"""
Display utilities for formatted console summaries.
"""

import sys

from .utils import ColorFormatter


class _Plain:
    BOLD = CYAN = GREEN = YELLOW = RED = MAGENTA = RESET = ""


class DisplayManager:
    """
    Human-readable summaries of command results. Reports and point files
    go to stdout or the output file; everything printed here goes to
    ``stream`` (stderr by default).
    """

    def __init__(self, stream=None, color=None):
        self.stream = stream if stream is not None else sys.stderr
        if color is None:
            color = hasattr(self.stream, "isatty") and self.stream.isatty()
        self.C = ColorFormatter if color else _Plain

    def _print(self, text=""):
        print(text, file=self.stream)

    def print_summary(self, title, entries):
        """Print a titled block of ``key: value`` pairs."""
        self._print(f"\n{self.C.BOLD}{self.C.CYAN}★ {title}{self.C.RESET}")
        for key, value in entries.items():
            self._print(f"  {self.C.GREEN}{key}:{self.C.RESET} {value}")
        self._print()

    def print_verdict(self, holds, message=""):
        if holds:
            self._print(f"{self.C.GREEN}✓ {message or 'holds'}{self.C.RESET}")
        else:
            self._print(f"{self.C.RED}✗ {message or 'fails'}{self.C.RESET}")

    def print_search_summary(self, search):
        """Counts, counterexamples and timing of a conjecture run."""
        mode = "Exhaustive" if search.mode == "exhaustive" else "Random"
        self._print(f"\n{self.C.BOLD}{self.C.CYAN}★ {mode} {search.claim} search{self.C.RESET}")
        for key, value in search.counts.items():
            self._print(f"  {self.C.MAGENTA}{key}:{self.C.RESET} {value}")
        colour = self.C.RED if search.counterexamples else self.C.GREEN
        self._print(f"  {colour}Counterexamples:{self.C.RESET} {len(search.counterexamples)}")
        if search.indeterminates:
            self._print(f"  {self.C.YELLOW}Indeterminate:{self.C.RESET} {len(search.indeterminates)}")
        self._print(f"  {self.C.GREEN}Duration:{self.C.RESET} {search.duration:.2f} s")
        self._print()

    def print_written(self, path, what="output"):
        self._print(f"✓ Wrote {what} → {path}")

    def print_warning(self, message):
        self._print(f"{self.C.YELLOW}⚠️  Warning: {message}{self.C.RESET}")

    def print_error(self, message):
        self._print(f"{self.C.RED}✗ Error: {message}{self.C.RESET}")
