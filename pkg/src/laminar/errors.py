"""Exception hierarchy shared across the toolkit."""


class LaminarError(Exception):
    """Base class for all toolkit errors."""


class ModelMismatch(LaminarError):
    """Operands live in different circle coordinate models."""


class UnknownGenerator(LaminarError):
    """A word refers to a generator name that is not in the table."""


class LinkedPair(LaminarError):
    """Two leaves cross; carries the offending pair."""

    def __init__(self, leaf1, leaf2):
        super().__init__(f"linked leaves: {leaf1} and {leaf2}")
        self.leaf1 = leaf1
        self.leaf2 = leaf2


class FixedInterval(LaminarError):
    """A map agrees with the identity on a whole interval (or everywhere)."""


class IndifferentPoint(LaminarError):
    """An isolated fixed point with vanishing one-sided displacement.

    Cannot occur for exact PL or Moebius input; kept as a guard so a
    misclassification can never be silent.
    """


class NotPALike(LaminarError):
    """Polygon requested for a map that is not pseudo-Anosov-like."""


class CellsOverlap(LaminarError):
    """Ping-pong cells are not pairwise disjoint."""


class PeriodicSetsNotDisjoint(LaminarError):
    """Ping-pong search requires disjoint periodic sets."""


class UnclassifiableMap(LaminarError):
    """classify() returned Indeterminate where a definite class is needed."""


class IdentityPowerMap(LaminarError):
    """A power of the map is the identity, so its periodic set is all of S^1.

    Rejected by the periodic-set comparison: the equal-or-disjoint
    alternative concerns torsion-free dynamics only.
    """


class ArcIsFullCircle(LaminarError):
    """Degenerate arc covering the whole circle."""


class DepthTooShallow(LaminarError):
    """Construction depth too small for the requested operation."""


class PerNotInvariant(LaminarError):
    """A generator does not preserve the shared periodic set."""


class NotInvariant(LaminarError):
    """A map fails the lamination-invariance pre-check."""


class ConstructionError(LaminarError):
    """Internal consistency check of the lamination construction failed."""
