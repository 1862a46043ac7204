"""Exception types shared across the package."""


class CactusError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class InputError(CactusError):
    """Malformed user input: system files, words, subset syntax (exit code 2)."""


class InfiniteGroupError(CactusError):
    """An operation that needs a finite (parabolic sub)group met an infinite one."""


class DegenerateFormError(CactusError):
    """A bilinear form restriction is singular at the requested parameter."""


class RelationApplicationError(CactusError):
    """A rewriting relation was requested at a position where it does not apply."""


class SubspaceError(CactusError):
    """A subspace needed to be invariant (or transverse) and is not."""
