"""Error taxonomy shared across the package.

CLI exit codes: ConfigError maps to 2, everything else to 1.
"""


class InputError(ValueError):
    """Malformed or inconsistent data passed to an operation."""


class ParameterError(ValueError):
    """Hyperparameter or option outside its admissible range."""


class NumericError(ArithmeticError):
    """Non-finite values or failed convergence during computation."""


class ConfigError(ValueError):
    """Invalid experiment configuration (unknown keys, bad values)."""
