"""Exception types shared across the package.

Each class corresponds to one failure mode named in a module contract; callers
match on the type, not on message text.
"""


class SkillIclError(Exception):
    """Base class for all package errors."""


# --- skill grammar ---

class MalformedLabel(SkillIclError):
    """Text does not match the Verb[obj] / Verb[obj1, obj2] grammar."""


class ArityMismatch(SkillIclError):
    """Relational verb with one argument, or non-relational with two."""


class NonMovableGrasp(SkillIclError):
    """Grasp/Release targets an object outside the movable category."""


# --- action codec ---

class IndexOutOfRange(SkillIclError):
    """Discrete index outside the configured bin range."""


class NonUnitQuaternion(SkillIclError):
    """Quaternion norm deviates from 1 beyond tolerance."""


# --- demo store ---

class EmptyTrajectory(SkillIclError):
    pass


class MissingManifest(SkillIclError):
    pass


class MalformedRecord(SkillIclError):
    """A demo record file is unreadable or missing required fields."""


class ValidationFailed(SkillIclError):
    """Aggregated validation violations for a library or demo."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


# --- skill collection ---

class NoMovableArgument(SkillIclError):
    """Forced Grasp/Release but no label argument is movable."""


class AnnotatorUnavailable(SkillIclError):
    pass


class UnparseableAnnotation(SkillIclError):
    """Both annotation attempts failed and no fallback object exists."""


# --- retrieval ---

class DimensionMismatch(SkillIclError):
    pass


class EmptyInput(SkillIclError):
    pass


class MissingEmbedding(SkillIclError):
    """One or more demos lack an embedding; message lists the ids."""


class ZeroVector(SkillIclError):
    """L2 normalization is undefined for the zero vector."""


# --- prompting ---

class NoActionsFound(SkillIclError):
    """Response text contains no parseable 7-integer tuple."""


class PromptTooLong(SkillIclError):
    """Assembled prompt exceeds the configured hard character cap."""


class ClippedValueError(SkillIclError):
    """Strict-mode parse: an out-of-range element would have been clipped."""


# --- providers ---

class TransportError(SkillIclError):
    pass


class AuthMissing(SkillIclError):
    """Configured auth environment variable is not set."""


class ContextOverflow(SkillIclError):
    pass


class MissingFile(SkillIclError):
    pass


# --- pipeline / cli ---

class ConfigError(SkillIclError):
    pass


class PipelinePhaseError(SkillIclError):
    """Wraps a failure with the pipeline phase it occurred in.

    ``partial`` carries whatever QueryResult provenance was accumulated
    before the failure (phases already completed stay inspectable).
    """

    def __init__(self, phase: str, cause: Exception, partial=None):
        self.phase = phase
        self.cause = cause
        self.partial = partial
        super().__init__(f"phase {phase}: {cause}")
