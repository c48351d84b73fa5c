"""
Command outcomes and exit codes.
"""

from typing import Any, Dict, List, Optional

OK = 0
FAIL = 1
USAGE = 2


class Result:
    def __init__(self, code=OK, message="OK", report: Optional[Dict[str, Any]] = None):
        self.code = code
        self.message = message
        self.report = report


class Status:
    """Accumulated outcome of a command: the exit code and its messages."""

    def __init__(self):
        self.code = OK
        self.text: List[str] = []

    @property
    def message(self):
        """Result message."""
        message = ". ".join(self.text)
        if not message and self.code == OK:
            message = "OK"

        return message

    def set_code(self, new_code):
        """Set the code if it is greater than the current."""
        if new_code > self.code:
            self.code = new_code

    def append(self, new_text):
        """Accumulate the status text."""
        self.text.append(new_text)
