'''Exception types shared across the package.'''


class DucciError(Exception):
  '''Base class for every error raised by this package.'''


class ParameterError(DucciError, ValueError):
  '''A value outside an operation's documented domain.'''


class CapExceededError(DucciError, RuntimeError):
  '''An enumeration or orbit walk would pass its configured cap.

  Caps exist so that desk-scale tooling fails loudly instead of silently
  truncating a state-space sweep.  `required` is the size the operation
  would have needed, `cap` the configured limit.
  '''

  def __init__(self, message: str, *, required: int | None = None,
               cap: int | None = None):
    super().__init__(message)
    self.required = required
    self.cap = cap
