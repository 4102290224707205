"""Exception types shared across the package.

The CLI maps these onto exit codes: validation problems exit 2, IO and
file-format problems exit 3, failed verification checks exit 1.
"""


class SoftalignError(Exception):
    """Base class for all package errors."""


class ZeroNormError(SoftalignError):
    """A vector that must be normalized has (numerically) zero norm."""


class ShapeMismatchError(SoftalignError):
    """Array arguments disagree on shape."""


class BatchTooSmallError(SoftalignError):
    """Pairwise weighting needs at least two samples."""


class NegativeScoreError(SoftalignError):
    """Row normalization requires non-negative scores."""


class RowOrderViolationError(SoftalignError):
    """Streaming rows arrived out of index order or with the wrong count."""


class KTooLargeError(SoftalignError):
    """Recall cutoff K exceeds the candidate pool size."""


class PoolTooLargeError(SoftalignError):
    """Requested evaluation pool exceeds the available samples."""


class ConfigError(SoftalignError):
    """Invalid configuration value or unknown configuration key."""


class FileFormatError(SoftalignError):
    """A serialized file is truncated, corrupt, or has the wrong version."""
