"""Exact circle points in two coordinate models, cyclic order, arcs, and
orientation-preserving circle maps (piecewise-linear and Moebius).

The two models never mix inside one container:

* angle model -- points are rational turn counts in [0, 1); maps are
  piecewise-linear homeomorphisms of degree 1 with rational data.
* projective model -- points are rational or real quadratic irrational
  numbers plus infinity, cyclically ordered as R union {inf}; maps are
  Moebius transformations with positive rational determinant.

All values are immutable; structural equality is semantic equality.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .errors import ArcIsFullCircle, ModelMismatch
from .exact import ONE, ZERO, QuadraticReal, radical_sign, rational_in, terms_add, terms_neg

ANGLE = "angle"
PROJECTIVE = "projective"

POSITIVE = 1
NEGATIVE = -1
DEGENERATE = 0


@dataclass(frozen=True)
class AnglePoint:
    """Point of S^1 as a rational number of turns in [0, 1)."""

    turns: Fraction

    def __post_init__(self):
        object.__setattr__(self, "turns", Fraction(self.turns) % 1)

    model = ANGLE

    def __repr__(self):
        return f"AnglePoint({self.turns})"


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of S^1 as an element of R union {inf}; value None means inf."""

    value: Optional[QuadraticReal]

    def __post_init__(self):
        if self.value is not None and not isinstance(self.value, QuadraticReal):
            object.__setattr__(self, "value", QuadraticReal(self.value))

    model = PROJECTIVE

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __repr__(self):
        return "ProjectivePoint(inf)" if self.is_infinity else f"ProjectivePoint({self.value})"


INFINITY = ProjectivePoint(None)

CirclePoint = Union[AnglePoint, ProjectivePoint]


def angle(x) -> AnglePoint:
    return AnglePoint(Fraction(x))


def proj(x) -> ProjectivePoint:
    return ProjectivePoint(x if isinstance(x, QuadraticReal) else QuadraticReal(x))


def check_same_model(*points: CirclePoint) -> str:
    models = {p.model for p in points}
    if len(models) != 1:
        raise ModelMismatch(f"mixed circle models: {sorted(models)}")
    return points[0].model


def chart(p: ProjectivePoint):
    """Exact order isomorphism R union {inf} -> [0, 1).

    inf -> 0 and x -> (1 + x/(1+|x|))/2; monotone on R, so the cyclic
    order of the projective line matches counterclockwise angle order.
    Values are Fractions for rational points and QuadraticReals otherwise.
    """
    if p.is_infinity:
        return ZERO
    x = p.value
    if x.sign() >= 0:
        y = x / (QuadraticReal(1) + x)
    else:
        y = x / (QuadraticReal(1) - x)
    half = (QuadraticReal(1) + y) / 2
    return half.as_fraction() if half.is_rational else half


def unchart(t) -> ProjectivePoint:
    """Inverse of chart on [0, 1): 0 -> inf, else y -> u/(1-|u|), u = 2t-1."""
    t_q = t if isinstance(t, QuadraticReal) else QuadraticReal(t)
    if t_q.sign() == 0:
        return INFINITY
    u = t_q * 2 - 1
    if u.sign() >= 0:
        return ProjectivePoint(u / (QuadraticReal(1) - u))
    return ProjectivePoint(u / (QuadraticReal(1) + u))


def position_key(p: CirclePoint):
    """Value realizing the counterclockwise cyclic order within one model."""
    if p.model == ANGLE:
        return p.turns
    return chart(p)


def position_terms(p: CirclePoint) -> Dict[int, Fraction]:
    """Radical-term dictionary of position_key(p), for length comparisons."""
    k = position_key(p)
    if isinstance(k, Fraction):
        return {1: k} if k else {}
    return k.terms()


def cyclic_order(a: CirclePoint, b: CirclePoint, c: CirclePoint) -> int:
    """POSITIVE iff b lies on the counterclockwise open arc from a to c.

    DEGENERATE iff any two of the points coincide.
    """
    check_same_model(a, b, c)
    ka, kb, kc = position_key(a), position_key(b), position_key(c)
    if ka == kb or kb == kc or ka == kc:
        return DEGENERATE
    if ka < kb:
        inside = ka < kc < kb
        return NEGATIVE if inside else POSITIVE
    inside = kb < kc < ka
    return POSITIVE if inside else NEGATIVE


def chords_cross(a: CirclePoint, b: CirclePoint, c: CirclePoint, d: CirclePoint) -> bool:
    """True iff the chord {a,b} crosses the chord {c,d}.

    Pairs sharing an endpoint do not cross.
    """
    check_same_model(a, b, c, d)
    if a == b or c == d:
        return False
    if a in (c, d) or b in (c, d):
        return False
    return cyclic_order(a, c, b) != cyclic_order(a, d, b)


@dataclass(frozen=True)
class Arc:
    """Open arc traversed counterclockwise from `start` to `end`."""

    start: CirclePoint
    end: CirclePoint

    def __post_init__(self):
        check_same_model(self.start, self.end)
        if self.start == self.end:
            raise ArcIsFullCircle("arc endpoints coincide")

    @property
    def model(self) -> str:
        return self.start.model

    def contains(self, p: CirclePoint) -> bool:
        return cyclic_order(self.start, p, self.end) == POSITIVE

    def contains_or_boundary(self, p: CirclePoint) -> bool:
        return p == self.start or p == self.end or self.contains(p)


def ccw_gap_terms(a: CirclePoint, b: CirclePoint) -> Dict[int, Fraction]:
    """Length of the counterclockwise arc from a to b, as radical terms."""
    diff = terms_add(position_terms(b), terms_neg(position_terms(a)))
    if radical_sign(diff) < 0:
        diff = terms_add(diff, {1: ONE})
    return diff


def _cmp_terms_to(t: Dict[int, Fraction], bound) -> int:
    return radical_sign(terms_add(t, {1: -Fraction(bound)}))


def ccw_gap_cmp(a: CirclePoint, b: CirclePoint, bound) -> int:
    """Sign of (ccw arc length from a to b) - bound."""
    return _cmp_terms_to(ccw_gap_terms(a, b), bound)


def dist_cmp(a: CirclePoint, b: CirclePoint, bound) -> int:
    """Sign of (shorter-arc distance between a and b) - bound."""
    if a == b:
        return _cmp_terms_to({}, bound)
    return min(ccw_gap_cmp(a, b, bound), ccw_gap_cmp(b, a, bound))


def midpoint_of_gap(a: CirclePoint, b: CirclePoint) -> AnglePoint:
    """Midpoint of the ccw arc from a to b (angle model only)."""
    if a.model != ANGLE or b.model != ANGLE:
        raise ModelMismatch("midpoint_of_gap requires the angle model")
    gap = (b.turns - a.turns) % 1
    if gap == 0:
        raise ArcIsFullCircle("degenerate gap")
    return AnglePoint(a.turns + gap / 2)


def rational_point_in_arc(arc: Arc) -> CirclePoint:
    """A point with rational data strictly inside the arc."""
    if arc.model == ANGLE:
        return midpoint_of_gap(arc.start, arc.end)
    ks, ke = chart(arc.start), chart(arc.end)
    qs = ks if isinstance(ks, QuadraticReal) else QuadraticReal(ks)
    qe = ke if isinstance(ke, QuadraticReal) else QuadraticReal(ke)
    if qs < qe:
        t = rational_in(qs, qe)
    elif qe.sign() > 0:
        t = rational_in(QuadraticReal(0), qe)  # arc wraps; take a point past inf
    else:
        t = rational_in(qs, QuadraticReal(1))
    return unchart(t)


# ---------------------------------------------------------------------------
# Piecewise-linear circle maps (angle model)
# ---------------------------------------------------------------------------


class PLMap:
    """Orientation-preserving PL homeomorphism of the circle, degree 1.

    Stored as breakpoints (input, output) of rational angles, sorted by
    input, with collinear breakpoints removed so that canonical equality
    is semantic equality. A pure rotation is stored as the single
    breakpoint (0, c).
    """

    __slots__ = ("breakpoints", "_xs", "_lifted")

    model = ANGLE

    def __init__(self, breakpoints: Iterable[Tuple[Fraction, Fraction]]):
        pts = sorted((Fraction(x) % 1, Fraction(y) % 1) for x, y in breakpoints)
        if not pts:
            raise ValueError("need at least one breakpoint")
        for (x1, _), (x2, _) in zip(pts, pts[1:]):
            if x1 == x2:
                raise ValueError(f"duplicate breakpoint input {x1}")
        n = len(pts)
        if n > 1:
            ys = [y for _, y in pts]
            if len(set(ys)) != n:
                raise ValueError("duplicate breakpoint output")
            descents = sum(1 for i in range(n) if ys[(i + 1) % n] < ys[i])
            if descents != 1:
                raise ValueError("outputs are not strictly increasing cyclically")
        pts = self._canonical(pts)
        object.__setattr__(self, "breakpoints", tuple(pts))
        object.__setattr__(self, "_xs", tuple(x for x, _ in pts))
        lifted = [pts[0][1]]
        for _, y in pts[1:]:
            lifted.append(y if y > lifted[-1] else y + 1)
        object.__setattr__(self, "_lifted", tuple(lifted))

    def __setattr__(self, *a):
        raise AttributeError("PLMap is immutable")

    @staticmethod
    def _canonical(pts: List[Tuple[Fraction, Fraction]]) -> List[Tuple[Fraction, Fraction]]:
        n = len(pts)
        if n == 1:
            x, y = pts[0]
            return [(ZERO, (y - x) % 1)]
        lifted = [pts[0][1]]
        for _, y in pts[1:]:
            lifted.append(y if y > lifted[-1] else y + 1)
        # Slope of segment i (from breakpoint i to i+1, cyclic).
        slopes = []
        for i in range(n):
            x0, y0 = pts[i][0], lifted[i]
            if i + 1 < n:
                x1, y1 = pts[i + 1][0], lifted[i + 1]
            else:
                x1, y1 = pts[0][0] + 1, lifted[0] + 1
            slopes.append((y1 - y0) / (x1 - x0))
        keep = [slopes[i - 1] != slopes[i] for i in range(n)]
        out = [pts[i] for i in range(n) if keep[i]]
        if not out:
            x, y = pts[0]
            return [(ZERO, (y - x) % 1)]
        return out

    # -- evaluation --------------------------------------------------------
    def _segment(self, t: Fraction) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        """Lifted segment (x0, y0, x1, y1) whose input interval contains t mod 1."""
        bps = self.breakpoints
        n = len(bps)
        if n == 1:
            x0, y0 = bps[0]
            return x0, y0, x0 + 1, y0 + 1
        i = bisect.bisect_right(self._xs, t) - 1
        if i < 0:
            i = n - 1
        x0, y0 = bps[i][0], self._lifted[i]
        if i + 1 < n:
            x1, y1 = bps[i + 1][0], self._lifted[i + 1]
        else:
            x1, y1 = bps[0][0] + 1, self._lifted[0] + 1
        if t < x0:  # wrapped segment, shift one period down
            x0, y0, x1, y1 = x0 - 1, y0 - 1, x1 - 1, y1 - 1
        return x0, y0, x1, y1

    def evaluate(self, p: AnglePoint) -> AnglePoint:
        if p.model != ANGLE:
            raise ModelMismatch("PL map needs an angle-model point")
        t = p.turns
        x0, y0, x1, y1 = self._segment(t)
        return AnglePoint((y0 + (t - x0) * (y1 - y0) / (x1 - x0)) % 1)

    def lift_value(self, t: Fraction) -> Fraction:
        """Canonical lift F with F(x) + 1 = F(x + 1); exact rational."""
        base = t % 1
        k = t - base
        x0, y0, x1, y1 = self._segment(base)
        return y0 + (base - x0) * (y1 - y0) / (x1 - x0) + k

    # -- algebra -----------------------------------------------------------
    def compose(self, other: "PLMap") -> "PLMap":
        """self after other (self o other)."""
        if not isinstance(other, PLMap):
            raise ModelMismatch("cannot compose PL with non-PL")
        inv = other.invert()
        xs = {x for x, _ in other.breakpoints}
        xs.update(inv.evaluate(AnglePoint(x)).turns for x, _ in self.breakpoints)
        pts = []
        for x in sorted(xs):
            mid = other.evaluate(AnglePoint(x))
            pts.append((x, self.evaluate(mid).turns))
        return PLMap(pts)

    def invert(self) -> "PLMap":
        return PLMap([(y, x) for x, y in self.breakpoints])

    def is_identity(self) -> bool:
        return self.breakpoints == ((ZERO, ZERO),)

    @classmethod
    def identity(cls) -> "PLMap":
        return cls([(ZERO, ZERO)])

    @classmethod
    def rotation(cls, c) -> "PLMap":
        return cls([(ZERO, Fraction(c) % 1)])

    def __eq__(self, other):
        return isinstance(other, PLMap) and self.breakpoints == other.breakpoints

    def __hash__(self):
        return hash(self.breakpoints)

    def __repr__(self):
        inside = ", ".join(f"{x}->{y}" for x, y in self.breakpoints[:6])
        more = "" if len(self.breakpoints) <= 6 else f", ... ({len(self.breakpoints)} bps)"
        return f"PLMap({inside}{more})"


# ---------------------------------------------------------------------------
# Moebius maps (projective model)
# ---------------------------------------------------------------------------


class MobiusMap:
    """x -> (p*x + q)/(r*x + s) with integer entries, det > 0, primitive,
    first nonzero entry positive. Acts on the projective model.
    """

    __slots__ = ("p", "q", "r", "s")

    model = PROJECTIVE

    def __init__(self, p, q, r, s):
        entries = [Fraction(v) for v in (p, q, r, s)]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if det <= 0:
            raise ValueError("determinant must be positive (orientation-preserving)")
        lcm = 1
        for e in entries:
            lcm = lcm * e.denominator // math.gcd(lcm, e.denominator)
        ints = [int(e * lcm) for e in entries]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        ints = [v // g for v in ints]
        for v in ints:
            if v != 0:
                if v < 0:
                    ints = [-w for w in ints]
                break
        object.__setattr__(self, "p", ints[0])
        object.__setattr__(self, "q", ints[1])
        object.__setattr__(self, "r", ints[2])
        object.__setattr__(self, "s", ints[3])

    def __setattr__(self, *a):
        raise AttributeError("MobiusMap is immutable")

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    def det(self) -> int:
        return self.p * self.s - self.q * self.r

    def trace(self) -> int:
        return self.p + self.s

    def evaluate(self, x: ProjectivePoint) -> ProjectivePoint:
        if x.model != PROJECTIVE:
            raise ModelMismatch("Moebius map needs a projective-model point")
        if x.is_infinity:
            if self.r == 0:
                return INFINITY
            return ProjectivePoint(QuadraticReal(Fraction(self.p, self.r)))
        v = x.value
        den = v * self.r + self.s
        if den.sign() == 0:
            return INFINITY
        return ProjectivePoint((v * self.p + self.q) / den)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """self after other (matrix product self * other)."""
        if not isinstance(other, MobiusMap):
            raise ModelMismatch("cannot compose Moebius with non-Moebius")
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MobiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def invert(self) -> "MobiusMap":
        return MobiusMap(self.s, -self.q, -self.r, self.p)

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    def __eq__(self, other):
        return isinstance(other, MobiusMap) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"MobiusMap{self.entries}"


CircleMap = Union[PLMap, MobiusMap]


def evaluate(f: CircleMap, p: CirclePoint) -> CirclePoint:
    """Exact image of p under f; models must match."""
    if f.model != p.model:
        raise ModelMismatch(f"map model {f.model} vs point model {p.model}")
    return f.evaluate(p)


def compose(f: CircleMap, g: CircleMap) -> CircleMap:
    """The map x -> f(g(x))."""
    if f.model != g.model:
        raise ModelMismatch(f"map models differ: {f.model} vs {g.model}")
    return f.compose(g)


def invert(f: CircleMap) -> CircleMap:
    return f.invert()


def identity_like(f: CircleMap) -> CircleMap:
    return PLMap.identity() if f.model == ANGLE else MobiusMap.identity()


def power(f: CircleMap, n: int) -> CircleMap:
    """n-th composition power; negative n uses the inverse."""
    if n < 0:
        f, n = f.invert(), -n
    out = identity_like(f)
    for _ in range(n):
        out = f.compose(out)
    return out
