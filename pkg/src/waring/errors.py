"""Shared exception bases.

``ValidationError`` covers rejected inputs (bad syntax, wrong degree,
degenerate parameters); ``ComputationError`` covers failures inside an
otherwise valid computation (exhausted searches, ill-conditioned solves).
The CLI maps the former to exit code 2 and the latter to exit code 3.
"""


class ValidationError(ValueError):
    pass


class ComputationError(RuntimeError):
    pass
