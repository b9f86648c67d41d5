"""Operation counters used to substantiate the linear-time behaviour."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class Counters:
    """Exact event counts, deterministic for a given input.

    cursor_advances covers every pointer step in the sweeps, the seed search,
    and the batch unit scans; batch_scan_advances additionally tracks the
    batch scans alone (they have their own budget).
    """

    predicate_evals: int = 0
    cursor_advances: int = 0
    gadget_calls: int = 0
    batch_scan_advances: int = 0

    def bump(self, pe: int = 0, ca: int = 0) -> None:
        self.predicate_evals += pe
        self.cursor_advances += ca

    def bump_batch(self, steps: int) -> None:
        self.batch_scan_advances += steps
        self.cursor_advances += steps

    def report_dict(self) -> dict:
        return {
            "predicate_evals": self.predicate_evals,
            "cursor_advances": self.cursor_advances,
            "gadget_calls": self.gadget_calls,
        }
