"""Uniform check reporting.

Every verifiable claim in the package renders as one line
    CHECK (<id>) PASS|FAIL [witness <name>=<value> ...]
where the witness is the first counterexample in scan order.  Items can be
marked non-gating: those are reported but never turn the exit code red.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckItem:
    check_id: str
    passed: bool
    witness: tuple[tuple[str, str], ...] = ()
    gating: bool = True

    def line(self):
        out = "CHECK (%s) %s" % (self.check_id, "PASS" if self.passed else "FAIL")
        if self.witness:
            out += " witness " + " ".join("%s=%s" % kv for kv in self.witness)
        return out


def render(items):
    return "\n".join(item.line() for item in items)


def all_pass(items):
    return all(item.passed for item in items)


def exit_code(items):
    return 0 if all(item.passed or not item.gating for item in items) else 1
