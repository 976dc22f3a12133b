"""Exception hierarchy shared across the package.

``ValidationError`` covers malformed input values (bad letters, broken
tableau invariants, unparseable text); the CLI maps it to exit code 2.
``DomainError`` marks structurally valid input outside an operation's
domain, e.g. a non-fully-commutative factorization handed to a crystal
operator.  ``ReconstructionError`` is raised by inverse maps when the
given data has no preimage.
"""


class ValidationError(ValueError):
    """Input value violates a structural invariant."""


class DomainError(ValidationError):
    """Value is well-formed but outside the operation's domain."""


class ReconstructionError(ValidationError):
    """An inverse map was applied to something outside its image."""
