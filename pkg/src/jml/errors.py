"""Error taxonomy mirrored by the CLI exit codes.

InputError -> exit 1 (malformed or inconsistent input data);
DisagreementError -> exit 2 (pipelines produced conflicting answers).
"""


class InputError(ValueError):
    pass


class DisagreementError(RuntimeError):
    pass
