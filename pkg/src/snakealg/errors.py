"""Exception hierarchy shared by all modules.

The split matters for the CLI exit codes: user input that cannot be parsed
(2), a violated precondition (3), and a falsified internal invariant (4) are
reported differently.
"""


class SnakeAlgError(Exception):
    pass


class ParseError(SnakeAlgError):
    """Malformed textual input."""


class PreconditionError(SnakeAlgError):
    """An operation was called outside its stated domain."""


class NotAlternatingError(PreconditionError):
    """No valid alternation sequence exists for the given tuple."""


class FalsifiedInvariantError(SnakeAlgError):
    """A derived postcondition failed; carries a witness description."""
