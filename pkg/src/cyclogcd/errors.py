"""Exception types shared across the library.

Two failure classes are distinguished because the CLI maps them to different
exit codes: bad inputs (exit 1) versus a broken internal certificate (exit 2).
"""


class HypothesisError(ValueError):
    """An input violates a hypothesis required by the underlying theorems.

    The message names the violated hypothesis precisely, e.g. that a base is
    an l-th power in Q, or that the moduli M, N fail the gcd compatibility
    condition.
    """


class VerificationError(RuntimeError):
    """An internal certificate check failed.

    This is never a user error: it would mean a certified divisibility or a
    pigeonhole bound does not actually hold, i.e. an implementation bug (or a
    falsified lemma).  It must abort the run loudly and is never downgraded
    to a warning.
    """
