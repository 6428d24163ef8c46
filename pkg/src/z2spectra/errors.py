"""Exception hierarchy. Input problems exit the CLI with code 2, numerical ones with 1."""


class Z2Error(Exception):
    """Base class for all package errors."""

    exit_code = 1


class InputError(Z2Error):
    """Unusable user input (files, configs, parameters)."""

    exit_code = 2


class AntipodalPoint(InputError):
    """Point coincides with the chart's projection point."""


class AntipodalPair(InputError):
    """First two configuration points are antipodal; gauge fixing is not unique."""


class SeparationViolation(InputError):
    """Two configuration points closer than the separation floor."""


class MatchingFailed(Z2Error):
    """No admissible non-crossing cut matching found."""


class QualityFailure(Z2Error):
    """Mesh generation produced triangles above the aspect-ratio threshold."""


class TwistInvalid(Z2Error):
    """Sign cochain violates the holonomy invariants."""


class SingularMass(Z2Error):
    """A degenerate triangle made the local mass matrix singular."""


class ShiftSingular(Z2Error):
    """Spectral shift landed on an eigenvalue; factorization failed."""


class NotConverged(Z2Error):
    """Eigensolver did not converge."""

    def __init__(self, msg, k=None):
        super().__init__(msg)
        self.k = k


class LiftInconsistent(Z2Error):
    """Sign continuation around an annulus disagrees with antiperiodicity."""


class AnnulusObstructed(InputError):
    """Sampling annulus overlaps another branch point or foreign cut."""


class PoorFit(Z2Error):
    """Local-expansion fit residual above tolerance."""

    def __init__(self, msg, residual=None, column=None):
        super().__init__(msg)
        self.residual = residual
        self.column = column


class DimensionMismatch(InputError):
    """Inconsistent array sizes between window, traces, and tangents."""


class RankDeficient(Z2Error):
    """A subspace basis has numerical rank below the required dimension."""


class FunctionalRankDeficient(Z2Error):
    """The 3x4 pairing matrix for the locked section lost rank."""


class NotFound(Z2Error):
    """Critical-configuration search exhausted its trust region."""


class WindowDrift(Z2Error):
    """Tracked eigenvalue cluster left the spectral window."""


class StepTooLarge(Z2Error):
    """Successive extrapolation levels disagree beyond tolerance."""


class CorruptStore(Z2Error):
    """Session store entry failed its content-hash check."""
