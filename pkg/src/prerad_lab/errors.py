"""Exception hierarchy for prerad-lab."""
from typing import List, Optional


class PreradLabError(Exception):
    """Base class for every error raised by prerad-lab."""


class RingAxiomError(PreradLabError):
    """Raised when explicit ring tables violate the ring axioms."""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        shown = "; ".join(self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        super().__init__(f"Ring axioms violated: {shown}{more}")


class RingMismatchError(PreradLabError):
    """Raised when two objects live over different rings."""


class ModuleActionError(PreradLabError):
    """Raised when a ring action on a group is not a module structure."""


class NotASubmoduleError(PreradLabError):
    """Raised when a subset is not a submodule of the expected parent."""


class SizeBoundError(PreradLabError):
    """Raised when a ring or module exceeds the supported size."""


class EnumerationCapError(PreradLabError):
    """Raised when an exhaustive enumeration would exceed its cap."""


class NotFullyInvariantError(PreradLabError):
    """Raised when alpha/omega are built on a submodule that is not fully invariant."""


class NotQuotientClosedError(PreradLabError):
    """Raised when a class operation needs a quotient-closed class."""


class UniverseError(PreradLabError):
    """Raised when a module universe cannot be built or queried."""


class SpecParseError(PreradLabError):
    """Raised for malformed ring, module or preradical specs."""


class ConfigError(PreradLabError):
    """Raised for configuration documents that violate the schema."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path or "$"
        super().__init__(f"{self.path}: {message}")
