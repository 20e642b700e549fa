"""Truncated formal power series, Newton polygons, and certified zero counts.

A ``TruncatedSeries`` stores exact coefficients c_0 .. c_{T-1} and means "the
series is known modulo t^T".  Arithmetic tracks precision: sums and products
hold the minimum of the operand truncations, differentiation loses one order,
formal integration gains one.  Coefficients are usually ``Fraction`` but any
field element with arithmetic dunders works (``quadext.QuadExt`` in
particular); valuation-dependent operations take a valuation callable for
that reason.

Newton polygons are lower convex hulls of the points (i, v(c_i)).  Because
only finitely many coefficients are known, the slope <= -1 part of the hull
is *certified* only when no hypothetical coefficient at index >= T with
valuation >= floor_val could alter it.  Writing (M, h) for the endpoint of
the slope <= -1 segment, the worst such point is (T, floor_val), and a short
convexity argument shows the segment survives every admissible tail exactly
when M + h < T + floor_val.  Exact polynomials certify with
floor_val = INFINITY.
"""

from fractions import Fraction

from .errors import (
    IndeterminatePolygonError,
    NonUnitError,
    PoleError,
    PrecisionError,
)
from .padics import INFINITY, as_prime, kappa, valuation


class TruncatedSeries:
    """Finite-precision formal power series; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_polynomial(cls, coeffs, truncation):
        """Series of a polynomial, padded with exact zeros up to truncation."""
        coeffs = list(coeffs)
        if len(coeffs) > truncation:
            coeffs = coeffs[:truncation]
        return cls([Fraction(c) if isinstance(c, int) else c for c in coeffs]
                   + [Fraction(0)] * (truncation - len(coeffs)))

    @classmethod
    def zero(cls, truncation):
        return cls([Fraction(0)] * truncation)

    @classmethod
    def one(cls, truncation):
        return cls.from_polynomial([1], truncation)

    # -- structure ------------------------------------------------------------

    @property
    def truncation(self):
        return len(self.coeffs)

    def coefficient(self, i):
        """c_i; raises PrecisionError when i is beyond the truncation order."""
        if i < 0:
            raise IndexError("negative coefficient index")
        if i >= len(self.coeffs):
            raise PrecisionError(
                f"coefficient {i} not known at truncation {len(self.coeffs)}",
                needed=i + 1,
            )
        return self.coeffs[i]

    def is_known_zero(self):
        return all(not c for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def agrees_with(self, other, upto=None):
        """Equality of the first ``upto`` coefficients (default: shared precision)."""
        n = min(self.truncation, other.truncation)
        if upto is not None:
            if upto > n:
                raise PrecisionError(f"only {n} shared coefficients known", needed=upto)
            n = upto
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n))

    def truncate(self, T):
        if T >= len(self.coeffs):
            return self
        return TruncatedSeries(self.coeffs[:T])

    # -- ring operations --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncatedSeries([self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            ca = a[i]
            if not ca:
                continue
            for j in range(n - i):
                cb = b[j]
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return TruncatedSeries(out)

    def scale(self, c):
        """Scalar multiple; c may be int, Fraction, or a QuadExt element."""
        return TruncatedSeries([c * x for x in self.coeffs])

    def shift_add(self, c):
        """self + c as series (adds to the constant term)."""
        if not self.coeffs:
            return self
        out = list(self.coeffs)
        out[0] = out[0] + c
        return TruncatedSeries(out)

    def derivative(self):
        if len(self.coeffs) < 1:
            raise PrecisionError("cannot differentiate a precision-0 series", needed=2)
        return TruncatedSeries([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def antiderivative(self, constant=0):
        out = [constant if not isinstance(constant, int) else Fraction(constant)]
        out.extend(self.coeffs[i] / (i + 1) for i in range(len(self.coeffs)))
        return TruncatedSeries(out)

    def inverse(self):
        """Multiplicative inverse; requires a nonzero constant term."""
        if not self.coeffs:
            raise PrecisionError("cannot invert a precision-0 series", needed=1)
        c0 = self.coeffs[0]
        if not c0:
            raise NonUnitError("series with zero constant term is not invertible")
        inv0 = 1 / c0
        out = [inv0]
        for n in range(1, len(self.coeffs)):
            acc = None
            for k in range(1, n + 1):
                t = self.coeffs[k] * out[n - k]
                acc = t if acc is None else acc + t
            out.append(-inv0 * acc)
        return TruncatedSeries(out)

    def compose(self, inner):
        """self(inner(t)); inner must have zero constant term."""
        if inner.coeffs and inner.coeffs[0]:
            raise PoleError("composition requires a series of positive order")
        n = min(len(self.coeffs), len(inner.coeffs))
        acc = TruncatedSeries.zero(n)
        inner = inner.truncate(n)
        for c in reversed(self.coeffs):
            acc = (acc * inner).shift_add(c)
        return acc

    def sqrt_unit(self):
        """Square root of a series with constant term exactly 1."""
        if not self.coeffs or self.coeffs[0] != 1:
            raise NonUnitError("sqrt_unit requires constant term 1")
        out = [self.coeffs[0]]
        for n in range(1, len(self.coeffs)):
            acc = self.coeffs[n]
            for k in range(1, n):
                acc = acc - out[k] * out[n - k]
            out.append(acc / 2)
        return TruncatedSeries(out)

    def __repr__(self):
        shown = []
        for i, c in enumerate(self.coeffs[:6]):
            if c:
                shown.append(f"{c}*t^{i}" if i else f"{c}")
        body = " + ".join(shown) if shown else "0"
        return f"TruncatedSeries({body} + O(t^{len(self.coeffs)}))"


class LaurentSeries:
    """t^order * (truncated series); finite-precision Laurent expansions.

    Used for expansions at infinite disks and for verifying pole orders; the
    pair (order, coeffs) represents coefficients of t^(order+i) known for
    0 <= i < T.
    """

    __slots__ = ("order", "series")

    def __init__(self, order, series):
        self.order = order
        self.series = series

    @classmethod
    def from_series(cls, s):
        return cls(0, s)

    @property
    def end(self):
        # first unknown exponent
        return self.order + self.series.truncation

    def normalized(self):
        """Strip leading known-zero coefficients, raising the order."""
        coeffs = self.series.coeffs
        j = 0
        while j < len(coeffs) and not coeffs[j]:
            j += 1
        if j == 0:
            return self
        return LaurentSeries(self.order + j, TruncatedSeries(coeffs[j:]))

    def t_order(self):
        """Exponent of the first nonzero coefficient (exact order when known)."""
        norm = self.normalized()
        if not norm.series.coeffs:
            raise PrecisionError(
                f"order not determined: zero to O(t^{self.end})", needed=self.series.truncation + 8
            )
        return norm.order

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            other = LaurentSeries.from_series(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        o = min(self.order, other.order)
        end = min(self.end, other.end)
        if end <= o:
            return LaurentSeries(o, TruncatedSeries(()))
        out = [Fraction(0)] * (end - o)
        for i, c in enumerate(self.series.coeffs):
            k = self.order + i - o
            if k < len(out):
                out[k] = out[k] + c
        for i, c in enumerate(other.series.coeffs):
            k = other.order + i - o
            if k < len(out):
                out[k] = out[k] + c
        return LaurentSeries(o, TruncatedSeries(out))

    def __neg__(self):
        return LaurentSeries(self.order, -self.series)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            other = LaurentSeries.from_series(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return LaurentSeries(a.order + b.order, a.series * b.series)

    def scale(self, c):
        return LaurentSeries(self.order, self.series.scale(c))

    def inverse(self):
        norm = self.normalized()
        if not norm.series.coeffs:
            raise NonUnitError(f"cannot invert: zero to O(t^{self.end})")
        return LaurentSeries(-norm.order, norm.series.inverse())

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            other = LaurentSeries.from_series(other)
        return self * other.inverse()

    def derivative(self):
        out = [(self.order + i) * c for i, c in enumerate(self.series.coeffs)]
        return LaurentSeries(self.order - 1, TruncatedSeries(out))

    def regular_part(self, context=""):
        """As a TruncatedSeries; PoleError when a known negative exponent survives."""
        if self.order >= 0:
            pad = [Fraction(0)] * self.order
            return TruncatedSeries(pad + list(self.series.coeffs))
        head = self.series.coeffs[: -self.order]
        if any(head):
            k = next(i for i, c in enumerate(head) if c)
            raise PoleError(
                f"pole of order {-(self.order + k)}{' on ' + context if context else ''}"
            )
        rest = self.series.coeffs[-self.order:]
        if not rest:
            raise PrecisionError("no regular coefficients known", needed=-self.order + 1)
        return TruncatedSeries(rest)

    def __repr__(self):
        return f"LaurentSeries(t^{self.order} * {self.series!r})"


# -- Newton polygons ----------------------------------------------------------


class NewtonPolygon:
    """Lower convex hull of (index, valuation) points with a certification flag.

    ``certified`` refers to the slope <= -1 part only: when True, revealing
    coefficients at indices >= truncation with valuation >= floor_val cannot
    change that segment.
    """

    __slots__ = ("vertices", "certified", "truncation", "floor_val")

    def __init__(self, vertices, certified, truncation, floor_val):
        self.vertices = tuple(vertices)
        self.certified = certified
        self.truncation = truncation
        self.floor_val = floor_val

    def slopes(self):
        out = []
        for (i1, v1), (i2, v2) in zip(self.vertices, self.vertices[1:]):
            out.append(Fraction(v2 - v1, i2 - i1))
        return out

    def __repr__(self):
        tag = "certified" if self.certified else "uncertified"
        return f"NewtonPolygon({list(self.vertices)}, {tag})"


def _lower_hull(points):
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop while the middle point is on or above the chord; keeps
            # endpoint-only vertices for collinear runs
            if (y2 - y1) * (pt[0] - x2) >= (pt[1] - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _le_minus_one_endpoint(vertices):
    """Endpoint (M, h_M) of the slope <= -1 part, measured from index 0."""
    i, v = vertices[0]
    # indices below the first finite point count as a slope -infinity edge
    idx = 0
    while idx + 1 < len(vertices):
        (i1, v1), (i2, v2) = vertices[idx], vertices[idx + 1]
        if v2 - v1 <= -(i2 - i1):
            idx += 1
        else:
            break
    return vertices[idx]


def newton_polygon(F, p, floor_val, val=None):
    """Newton polygon of F at p, certified against tails of valuation >= floor_val.

    ``floor_val`` is the caller-supplied lower bound on the valuations of the
    unknown coefficients at indices >= truncation (INFINITY for exact
    polynomials).  ``val`` overrides the valuation map (needed for QuadExt
    coefficients).
    """
    p = as_prime(p)
    if val is None:
        val = lambda c: valuation(c, p)
    points = [(i, val(c)) for i, c in enumerate(F.coeffs) if c]
    if not points:
        raise IndeterminatePolygonError(
            f"all known coefficients vanish to O(t^{F.truncation})",
            needed=F.truncation + 8,
        )
    vertices = _lower_hull(points)
    if floor_val == INFINITY:
        certified = True
    else:
        M, hM = _le_minus_one_endpoint(vertices)
        certified = M + hM < F.truncation + floor_val
    return NewtonPolygon(vertices, certified, F.truncation, floor_val)


def slope_le_minus_one_length(NP):
    """Length M of the slope <= -1 part (x-coordinate of its endpoint)."""
    if not NP.certified:
        raise PrecisionError(
            "Newton polygon slope <= -1 part not certified at this truncation",
            needed=2 * NP.truncation,
        )
    return _le_minus_one_endpoint(NP.vertices)[0]


def zero_count_bound(F, p, floor_val, val=None):
    """Upper bound for the number of zeros z with |z| <= |p| (i.e. v(z) >= 1)."""
    return slope_le_minus_one_length(newton_polygon(F, p, floor_val, val=val))


def min_valuation_index(F, p, floor_val, val=None):
    """Least index attaining the minimal coefficient valuation.

    Certified when the minimum over the known coefficients is <= floor_val:
    unknown tail coefficients (valuation >= floor_val, index >= T) can then
    tie but never undercut or precede it.  For an algebraic function regular
    on the disk this index equals the order of vanishing of the reduction,
    hence the number of C_p zeros on the whole residue disk.
    """
    p = as_prime(p)
    if val is None:
        val = lambda c: valuation(c, p)
    best_i, best_v = None, INFINITY
    for i, c in enumerate(F.coeffs):
        if c:
            v = val(c)
            if v < best_v:
                best_i, best_v = i, v
    if best_i is None:
        raise IndeterminatePolygonError(
            f"all known coefficients vanish to O(t^{F.truncation})",
            needed=F.truncation + 8,
        )
    if best_v > floor_val:
        raise PrecisionError(
            f"minimal valuation {best_v} exceeds the tail floor {floor_val}; "
            "a later coefficient could undercut it",
            needed=2 * F.truncation,
        )
    return best_i


def slope_transfer_check(G, DG, N, p, floor_G, floor_DG, val=None):
    """Check M(G) < kappa_p * (N + min S(D(G))) for a nice operator of order N.

    This is the slope-transfer inequality used as a fuzz oracle for the
    pipeline; it is never the reported bound itself.
    """
    p = as_prime(p)
    M = slope_le_minus_one_length(newton_polygon(G, p, floor_G, val=val))
    s = min_valuation_index(DG, p, floor_DG, val=val)
    return M < kappa(p) * (N + s)
