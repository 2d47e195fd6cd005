"""
Reports produced by the command-line tools.
"""

from dataclasses import field
from typing import Any

# pylint: disable=no-name-in-module
from pydantic.dataclasses import dataclass

PASS = "PASS"
FAIL = "FAIL"


@dataclass
class Check:
    """
    Single expectation with its outcome.
    """

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize for reports.

        Returns:
            dict[str, Any]: Name, outcome and detail
        """
        return {"name": self.name, "passed": self.passed, "detail": self.detail}

    def render(self) -> str:
        """
        One line of text.

        Returns:
            str: "[PASS] name: detail"
        """
        line = f"[{PASS if self.passed else FAIL}] {self.name}"
        return f"{line}: {self.detail}" if self.detail else line


@dataclass
class Report:
    """
    Output of a command: inputs, computed sections, checks and summary lines.

    Values are exact: rationals are stored as "p/q" strings, never floats.
    """

    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    summary: list[str] = field(default_factory=list)

    def add_check(self, name: str, passed: bool, detail: str = "") -> bool:
        """
        Record an expectation.

        Args:
            name (str): What is checked
            passed (bool): Outcome
            detail (str): Values behind the outcome

        Returns:
            bool: The outcome, for chaining
        """
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self) -> bool:
        """
        Property for the overall outcome.

        Returns:
            bool: True when every check passed
        """
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize in a fixed key order.

        Returns:
            dict[str, Any]: Report content
        """
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": [check.to_dict() for check in self.checks],
            "passed": self.passed,
            "summary": list(self.summary),
        }

    def render(self) -> str:
        """
        Human readable text, the summary lines come last.

        Returns:
            str: Report text
        """
        lines = [f"command: {self.command}"]
        lines.extend(f"{name}: {_flatten(value)}" for name, value in self.inputs.items())
        lines.extend(check.render() for check in self.checks)
        lines.extend(self.summary)
        return "\n".join(lines)


def _flatten(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(str(item) for item in value)
    return str(value)
