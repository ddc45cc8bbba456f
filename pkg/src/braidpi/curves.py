"""Exact verification of the conic/cubic tangency configuration.

All arithmetic happens in Q or a single real quadratic extension
Q(sqrt(d)): a ``QuadScalar`` is a + b sqrt(d) with Fraction coefficients,
normalized so that b = 0 forces d = 1.  Mixing two nontrivial radicals
is an error; each geometric check needs at most one of sqrt(2), sqrt(5),
sqrt(6), sqrt(10), and the slope sqrt(128/125) is rewritten as
(8 sqrt(10))/25 before use.

``HomogPoly`` is a homogeneous polynomial in 2 or 3 variables with
QuadScalar coefficients, supporting evaluation, partials, Hessians,
linear substitution, restriction to a line, and Sylvester resultants
with respect to one variable (cofactor expansion; the matrices here are
at most 5x5).

``verify_persson_configuration`` runs the ten exact checks on the
configuration: the conic x^2 + 2zy + z^2 with its tangents x = +-y and
z = 0, and the nodal cubic z^3 + 16 (x^2 + 2yz + z^2)(8y + 5z) meeting
the conic in a single point of multiplicity six.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class RadicalMismatchError(ValueError):
    """Arithmetic attempted between different quadratic extensions."""


def _squarefree(d: int) -> bool:
    if d <= 0:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class QuadScalar:
    """a + b sqrt(d) with rational a, b; d squarefree, d = 1 iff rational."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0 and self.d != 1:
            object.__setattr__(self, "d", 1)
        if self.d != 1 and not _squarefree(self.d):
            raise ValueError(f"radicand {self.d} is not squarefree")
        if self.d == 1 and self.b != 0:
            raise ValueError("rational scalar with nonzero radical part")

    _SCALARS = (int, Fraction)

    @staticmethod
    def of(x) -> "QuadScalar":
        if isinstance(x, QuadScalar):
            return x
        return QuadScalar(Fraction(x), Fraction(0), 1)

    @staticmethod
    def _coerce(x):
        if isinstance(x, QuadScalar):
            return x
        if isinstance(x, QuadScalar._SCALARS):
            return QuadScalar(Fraction(x), Fraction(0), 1)
        return None

    @staticmethod
    def root(d: int, coeff=1) -> "QuadScalar":
        """coeff * sqrt(d)."""
        return QuadScalar(Fraction(0), Fraction(coeff), d)

    def _join(self, other: "QuadScalar") -> int:
        if self.d == other.d:
            return self.d
        if self.d == 1:
            return other.d
        if other.d == 1:
            return self.d
        raise RadicalMismatchError(f"cannot mix sqrt({self.d}) with sqrt({other.d})")

    def __add__(self, other) -> "QuadScalar":
        o = QuadScalar._coerce(other)
        if o is None:
            return NotImplemented
        d = self._join(o)
        return QuadScalar(self.a + o.a, self.b + o.b, d if self.b + o.b else 1)

    __radd__ = __add__

    def __neg__(self) -> "QuadScalar":
        return QuadScalar(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "QuadScalar":
        o = QuadScalar._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QuadScalar":
        o = QuadScalar._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "QuadScalar":
        o = QuadScalar._coerce(other)
        if o is None:
            return NotImplemented
        d = self._join(o)
        a = self.a * o.a + d * self.b * o.b
        b = self.a * o.b + self.b * o.a
        return QuadScalar(a, b, d if b else 1)

    __rmul__ = __mul__

    def inverse(self) -> "QuadScalar":
        n = self.a * self.a - self.d * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("zero (or zero-norm) quadratic scalar")
        return QuadScalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other) -> "QuadScalar":
        return self * QuadScalar.of(other).inverse()

    def __rtruediv__(self, other) -> "QuadScalar":
        return QuadScalar.of(other) * self.inverse()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other) -> bool:
        o = QuadScalar._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d if self.b else 1))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        return f"{self.a} + {self.b}*sqrt({self.d})"

    __repr__ = __str__


ZERO = QuadScalar.of(0)
ONE = QuadScalar.of(1)

Exps = tuple[int, ...]


class HomogPoly:
    """Homogeneous polynomial: exponent tuple -> nonzero QuadScalar."""

    def __init__(self, nvars: int, terms: Mapping[Exps, QuadScalar | int | Fraction]):
        self.nvars = nvars
        clean: dict[Exps, QuadScalar] = {}
        degree = None
        for e, c in terms.items():
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent tuple {e}")
            c = QuadScalar.of(c)
            if c.is_zero():
                continue
            if e in clean:
                c = clean[e] + c
                if c.is_zero():
                    del clean[e]
                    continue
            clean[e] = c
            if degree is None:
                degree = sum(e)
            elif sum(e) != degree:
                raise ValueError("terms of different total degree")
        self.terms = clean
        self.degree = degree if degree is not None else 0

    @staticmethod
    def variable(i: int, nvars: int = 3) -> "HomogPoly":
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return HomogPoly(nvars, {e: ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomogPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, ZERO) + c
        return _inhomog(self.nvars, merged)

    def __neg__(self) -> "HomogPoly":
        return HomogPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        return self + (-other)

    def __mul__(self, other) -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            c = QuadScalar.of(other)
            return _inhomog(self.nvars, {e: x * c for e, x in self.terms.items()}) \
                if isinstance(self, _InhomogPoly) else \
                HomogPoly(self.nvars, {e: x * c for e, x in self.terms.items()})
        out: dict[Exps, QuadScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        # a product of inhomogeneous factors may mix total degrees
        return _inhomog(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomogPoly":
        out = HomogPoly(self.nvars, {(0,) * self.nvars: ONE})
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, point: Sequence) -> QuadScalar:
        if len(point) != self.nvars:
            raise ValueError("wrong number of coordinates")
        pt = [QuadScalar.of(x) for x in point]
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                for _ in range(k):
                    v = v * x
            total = total + v
        return total

    def partial(self, var: int) -> "HomogPoly":
        out: dict[Exps, QuadScalar] = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                continue
            e2 = tuple(x - 1 if i == var else x for i, x in enumerate(e))
            out[e2] = out.get(e2, ZERO) + c * e[var]
        return _inhomog(self.nvars, out)

    def substitute_linear(self, images: Sequence["HomogPoly"]) -> "HomogPoly":
        """Plug a linear form (degree-1 HomogPoly) in for each variable."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        out = HomogPoly(nv, {})
        for e, c in self.terms.items():
            term = HomogPoly(nv, {(0,) * nv: c})
            for img, k in zip(images, e):
                for _ in range(k):
                    term = term * img
            out = out + term
        return out

    def coefficients_in(self, var: int) -> list["HomogPoly"]:
        """Coefficients of var^0, var^1, ... as polynomials in the other variables
        (returned with the same variable slots, exponent 0 in ``var``)."""
        top = max((e[var] for e in self.terms), default=0)
        out = [dict() for _ in range(top + 1)]
        for e, c in self.terms.items():
            e2 = tuple(0 if i == var else x for i, x in enumerate(e))
            out[e[var]][e2] = c
        return [_inhomog(self.nvars, d) for d in out]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = "xyz" if self.nvars == 3 else "st"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i]
                            for i, k in enumerate(e) if k)
            c = str(self.terms[e])
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    __repr__ = __str__


class _InhomogPoly(HomogPoly):
    """Internal: relax the homogeneity check (resultants mix degrees)."""

    def __init__(self, nvars: int, terms):
        self.nvars = nvars
        clean: dict[Exps, QuadScalar] = {}
        for e, c in terms.items():
            c = QuadScalar.of(c)
            if not c.is_zero():
                clean[e] = clean.get(e, ZERO) + c
                if clean[e].is_zero():
                    del clean[e]
        self.terms = clean
        self.degree = max((sum(e) for e in clean), default=0)

    def __add__(self, other):
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, ZERO) + c
        return _InhomogPoly(self.nvars, merged)

    def __mul__(self, other):
        if not isinstance(other, HomogPoly):
            c = QuadScalar.of(other)
            return _InhomogPoly(self.nvars, {e: x * c for e, x in self.terms.items()})
        out: dict[Exps, QuadScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return _InhomogPoly(self.nvars, out)

    __rmul__ = __mul__

    def __neg__(self):
        return _InhomogPoly(self.nvars, {e: -c for e, c in self.terms.items()})


def _inhomog(nvars: int, terms) -> HomogPoly:
    try:
        return HomogPoly(nvars, terms)
    except ValueError:
        return _InhomogPoly(nvars, terms)


def poly3(terms: Mapping[Exps, QuadScalar | int | Fraction]) -> HomogPoly:
    return HomogPoly(3, terms)


def line(a, b, c) -> HomogPoly:
    return poly3({(1, 0, 0): QuadScalar.of(a), (0, 1, 0): QuadScalar.of(b),
                  (0, 0, 1): QuadScalar.of(c)})


@dataclass(frozen=True)
class ProjPoint:
    """Projective point; equality through vanishing 2x2 minors."""

    coords: tuple[QuadScalar, QuadScalar, QuadScalar]

    @staticmethod
    def of(x, y, z) -> "ProjPoint":
        p = (QuadScalar.of(x), QuadScalar.of(y), QuadScalar.of(z))
        if all(c.is_zero() for c in p):
            raise ValueError("(0:0:0) is not a projective point")
        return ProjPoint(p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        a, b = self.coords, other.coords
        for i in range(3):
            for j in range(i + 1, 3):
                if not (a[i] * b[j] - a[j] * b[i]).is_zero():
                    return False
        return True

    def __hash__(self) -> int:
        return 0  # projective equality is up to scale; hash cannot see it

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


def evaluate(f: HomogPoly, p: ProjPoint) -> QuadScalar:
    return f.evaluate(p.coords)


def partial(f: HomogPoly, var: int) -> HomogPoly:
    return f.partial(var)


def gradient(f: HomogPoly, p: ProjPoint) -> tuple[QuadScalar, QuadScalar, QuadScalar]:
    return tuple(f.partial(v).evaluate(p.coords) for v in range(3))


def cubic_discriminant(a0, a1, a2, a3):
    """Discriminant of a0 x^3 + a1 x^2 + a2 x + a3; works for scalars or
    polynomial coefficients (anything with + - * and integer scaling)."""
    return (a1 * a1 * (a2 * a2) - 4 * (a0 * (a2 * (a2 * a2)))
            - 4 * (a1 * (a1 * a1) * a3) - 27 * (a0 * a0 * (a3 * a3))
            + 18 * (a0 * a1 * (a2 * a3)))


def family_cubic(lam) -> HomogPoly:
    """z^3 + (x^2 + 2yz + z^2)(2 lam^3 y + (2 lam^3 - 3 lam^2) z)."""
    lam = QuadScalar.of(lam)
    l2 = lam * lam
    l3 = l2 * lam
    quad = poly3({(2, 0, 0): 1, (0, 1, 1): 2, (0, 0, 2): 1})
    lin = poly3({(0, 1, 0): 2 * l3, (0, 0, 1): 2 * l3 - 3 * l2})
    return poly3({(0, 0, 3): 1}) + quad * lin


def conic() -> HomogPoly:
    """x^2 + 2zy + z^2: tangent to x = +-y and to z = 0."""
    return poly3({(2, 0, 0): 1, (0, 1, 1): 2, (0, 0, 2): 1})


def nodal_cubic() -> HomogPoly:
    """z^3 + 16 (x^2 + 2yz + z^2)(8y + 5z): the family member at parameter 4."""
    return family_cubic(4)


def sylvester_matrix(f: HomogPoly, g: HomogPoly, var: int) -> list[list[HomogPoly]]:
    fc = f.coefficients_in(var)
    gc = g.coefficients_in(var)
    n, m = len(fc) - 1, len(gc) - 1
    if n < 1 or m < 1:
        raise ValueError("both inputs need positive degree in the chosen variable")
    size = n + m
    zero = _inhomog(f.nvars, {})
    mat = [[zero] * size for _ in range(size)]
    for i in range(m):
        for j, c in enumerate(reversed(fc)):
            mat[i][i + j] = c
    for i in range(n):
        for j, c in enumerate(reversed(gc)):
            mat[m + i][i + j] = c
    return mat


def _poly_det(mat) -> HomogPoly:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = None
    for i in range(n):
        c = mat[i][0]
        if c.is_zero():
            continue
        minor = [row[1:] for k, row in enumerate(mat) if k != i]
        term = c * _poly_det(minor)
        if i % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return _inhomog(mat[0][0].nvars, {})
    return total


def sylvester_resultant(f: HomogPoly, g: HomogPoly, var: int) -> HomogPoly:
    """Determinant of the Sylvester matrix in ``var`` (f's coefficients on top)."""
    return _poly_det(sylvester_matrix(f, g, var))


def hessian(f: HomogPoly) -> HomogPoly:
    """Determinant of the matrix of second partials."""
    if f.nvars != 3 or f.degree < 2:
        raise ValueError("Hessian needs a ternary form of degree >= 2")
    h = [[f.partial(i).partial(j) for j in range(3)] for i in range(3)]
    return (h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
            - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
            + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]))


# ---------------------------------------------------------------------------
# tangency

def _points_spanning(l: HomogPoly) -> tuple[ProjPoint, ProjPoint]:
    a = l.terms.get((1, 0, 0), ZERO)
    b = l.terms.get((0, 1, 0), ZERO)
    c = l.terms.get((0, 0, 1), ZERO)
    if not a.is_zero():
        return (ProjPoint.of(-b / a, 1, 0), ProjPoint.of(-c / a, 0, 1))
    if not b.is_zero():
        return (ProjPoint.of(1, -a / b, 0), ProjPoint.of(0, -c / b, 1))
    return (ProjPoint.of(1, 0, 0), ProjPoint.of(0, 1, 0))


def restrict_to_line(curve: HomogPoly, p1: ProjPoint, p2: ProjPoint) -> HomogPoly:
    """Binary form F(s, t) = curve(s p1 + t p2)."""
    images = []
    for i in range(3):
        images.append(HomogPoly(2, {(1, 0): p1.coords[i], (0, 1): p2.coords[i]}))
    return curve.substitute_linear(images)


def _line_parameter(p: ProjPoint, p1: ProjPoint, p2: ProjPoint):
    for i, j in ((0, 1), (0, 2), (1, 2)):
        det = p1.coords[i] * p2.coords[j] - p1.coords[j] * p2.coords[i]
        if not det.is_zero():
            s = (p.coords[i] * p2.coords[j] - p.coords[j] * p2.coords[i]) / det
            t = (p1.coords[i] * p.coords[j] - p1.coords[j] * p.coords[i]) / det
            combo = tuple(s * p1.coords[k] + t * p2.coords[k] for k in range(3))
            if ProjPoint(combo) == p:
                return s, t
            return None
    return None


def is_tangent_at(curve: HomogPoly, l: HomogPoly, p: ProjPoint) -> bool:
    """Does ``l`` meet ``curve`` at ``p`` with multiplicity at least two?

    The curve is restricted to a parametrization of the line; tangency
    means the binary form and both its partials vanish at p's parameter.
    Raises if p is not on both the line and the curve.
    """
    if l.degree != 1:
        raise ValueError("second argument must be a line")
    if not evaluate(l, p).is_zero():
        raise ValueError(f"point {p} not on the line")
    if not evaluate(curve, p).is_zero():
        raise ValueError(f"point {p} not on the curve")
    p1, p2 = _points_spanning(l)
    param = _line_parameter(p, p1, p2)
    if param is None:
        raise ValueError(f"point {p} not on the line")
    s, t = param
    f = restrict_to_line(curve, p1, p2)
    return (f.evaluate((s, t)).is_zero()
            and f.partial(0).evaluate((s, t)).is_zero()
            and f.partial(1).evaluate((s, t)).is_zero())


# ---------------------------------------------------------------------------
# univariate division for the parameter constraint (A-1)^2 (A-4)

def divide_univariate(f: HomogPoly, g: HomogPoly) -> tuple[HomogPoly, HomogPoly]:
    """Quotient and remainder of univariate polynomials (nvars = 1)."""
    if f.nvars != 1 or g.nvars != 1 or g.is_zero():
        raise ValueError("univariate division needs nvars == 1 and g != 0")
    dg = max(e[0] for e in g.terms)
    lead = g.terms[(dg,)]
    q: dict[Exps, QuadScalar] = {}
    r = dict(f.terms)
    while r:
        dr = max(e[0] for e in r)
        if dr < dg:
            break
        c = r[(dr,)] / lead
        q[(dr - dg,)] = c
        for e, gc in g.terms.items():
            k = (e[0] + dr - dg,)
            val = r.get(k, ZERO) - c * gc
            if val.is_zero():
                r.pop(k, None)
            else:
                r[k] = val
    return _inhomog(1, q), _inhomog(1, r)


def unipoly(coeffs: Sequence) -> HomogPoly:
    """Univariate polynomial from ascending coefficients."""
    return _inhomog(1, {(i,): QuadScalar.of(c) for i, c in enumerate(coeffs)})


# ---------------------------------------------------------------------------
# the configuration report

@dataclass(frozen=True)
class CheckResult:
    item: int
    title: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ConfigReport:
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self) -> str:
        lines = [f"[{'PASS' if c.passed else 'FAIL'}] ({c.item}) {c.title}: {c.detail}"
                 for c in self.checks]
        return "\n".join(lines)


def _proportional(f: HomogPoly, g: HomogPoly):
    """Nonzero constant c with f = c g, or None."""
    if set(f.terms) != set(g.terms) or f.is_zero():
        return None
    ratio = None
    for e, c in f.terms.items():
        r = c / g.terms[e]
        if ratio is None:
            ratio = r
        elif not (r - ratio).is_zero():
            return None
    return ratio


def verify_persson_configuration() -> ConfigReport:
    """Run the ten exact checks; failures are reported, never raised."""
    q = conic()
    c = nodal_cubic()
    l1 = line(1, -1, 0)
    lm1 = line(1, 1, 0)
    p = ProjPoint.of(0, 1, 0)
    node = ProjPoint.of(0, 9, -16)
    checks: list[CheckResult] = []

    def record(item: int, title: str, passed: bool, detail: str):
        checks.append(CheckResult(item, title, passed, detail))

    # (1) common tangents of the conic
    t1 = ProjPoint.of(1, 1, -1)
    t2 = ProjPoint.of(1, -1, 1)
    try:
        ok = is_tangent_at(q, l1, t1) and is_tangent_at(q, lm1, t2)
    except ValueError:
        ok = False
    record(1, "conic tangent to x=y at (1:1:-1) and to x=-y at (1:-1:1)", ok,
           "restriction has a double root at each point" if ok else "tangency fails")

    # (2) conic tangent to z = 0 at the base point
    try:
        ok = is_tangent_at(q, line(0, 0, 1), p)
    except ValueError:
        ok = False
    record(2, "conic tangent to z=0 at (0:1:0)", ok,
           "double contact at the base point" if ok else "tangency fails")

    # (3) single intersection point of multiplicity six
    res = sylvester_resultant(c, q, 2)
    ok = set(res.terms) == {(6, 0, 0)} and not res.is_zero()
    detail = (f"Res_z(cubic, conic) = ({res.terms.get((6, 0, 0))}) * x^6"
              if ok else f"resultant has support {sorted(res.terms)}")
    record(3, "cubic meets conic only at the base point (intersection 6P)", ok, detail)

    # (4) node location, distinct from every tangency point
    grad = gradient(c, node)
    on = evaluate(c, node).is_zero() and all(g.is_zero() for g in grad)
    tangencies = [t1, t2, ProjPoint.of(-3, -3, 4), ProjPoint.of(3, -3, 4), p]
    distinct = all(node != t for t in tangencies)
    record(4, "cubic is singular exactly at (0:9:-16), away from all tangency points",
           on and distinct,
           "gradient vanishes there; node differs from the six special points"
           if on and distinct else "singularity check fails")

    # (5) tangent cone at the node: 8x^2 + u^2 with u = 16y + 9z (no real factors)
    x_img = poly3({(1, 0, 0): 1})
    y_img = poly3({(0, 1, 0): Fraction(1, 16), (0, 0, 1): Fraction(-9, 16)})
    z_img = poly3({(0, 0, 1): 1})
    cu = c.substitute_linear([x_img, y_img, z_img])  # coordinates (x, u, z)
    cone = HomogPoly(3, {e: coeff for e, coeff in cu.terms.items() if e[0] + e[1] == 2})
    expected = poly3({(2, 0, 1): 8, (0, 2, 1): 1})
    ok = cone == expected
    # as binary quadratic 8x^2 + u^2: discriminant 0 - 4*8 < 0, so complex factors
    record(5, "tangent cone at the node is 8x^2 + u^2, an isolated real point", ok,
           "binary discriminant -32 < 0: complex conjugate tangents" if ok
           else f"cone is {cone}")

    # (6) pencil of tangent lines through (0:0:1): discriminant factorization.
    # Rescale z = 4w and divide by 4^3 (the substitution that makes the cubic
    # monic-free in w); the coefficient of w^k is then (z^k coefficient)/4^(3-k).
    zc = c.coefficients_in(2)
    wc = [zc[k] * Fraction(1, 4 ** (3 - k)) for k in range(4)]
    disc = cubic_discriminant(wc[3], wc[2], wc[1], wc[0])
    target = (poly3({(2, 0, 0): 1})
              * poly3({(2, 0, 0): 1, (0, 2, 0): -1})
              * poly3({(0, 2, 0): 128, (2, 0, 0): -125}))
    ratio = _proportional(disc, target)
    ok = ratio is not None and ratio == QuadScalar.of(324)
    record(6, "tangent-line discriminant is 324 * x^2 (x^2 - y^2)(128y^2 - 125x^2)",
           ok, f"constant factor {ratio}" if ratio is not None else "factorization fails")

    # (7) tangency points on the irrational tangents, plus the discarded candidate
    lp = line(25, QuadScalar.root(10, -8), 0)   # x = sqrt(128/125) y
    lm = line(25, QuadScalar.root(10, 8), 0)
    pp = ProjPoint.of(QuadScalar.root(10, -24), -75, 80)
    pm = ProjPoint.of(QuadScalar.root(10, 24), -75, 80)
    try:
        ok = is_tangent_at(c, lp, pp) and is_tangent_at(c, lm, pm)
    except ValueError:
        ok = False
    cand33 = ProjPoint.of(QuadScalar.root(10, -33 * 8), -25 * 33, 880)
    cand27 = ProjPoint.of(QuadScalar.root(10, -27 * 8), -25 * 27, 880)
    same33 = cand33 == pp
    off27 = not evaluate(c, cand27).is_zero()
    record(7, "tangency points on the sqrt(10)-lines are (-+24sqrt(10):-75:80)",
           ok and same33 and off27,
           "candidate with factor 33 is the tangency point itself; "
           "the factor-27 candidate does not even lie on the cubic"
           if ok and same33 and off27 else "tangency point analysis fails")

    # (8) parameter constraint factors as (A-1)^2 (A-4)
    constraint = unipoly([-4, 9, -6, 1])
    square = unipoly([1, -2, 1])
    quot, rem = divide_univariate(constraint, square)
    ok = rem.is_zero() and quot == unipoly([-4, 1])
    record(8, "parameter constraint A^3 - 6A^2 + 9A - 4 = (A-1)^2 (A-4)", ok,
           "division exact with quotient A - 4" if ok else f"remainder {rem}")

    # (9) flexes: (1:0:0) and the two points with x/y = +-sqrt(2/3) * 16/13
    h = hessian(c)
    f0 = ProjPoint.of(1, 0, 0)
    flex0 = (evaluate(c, f0).is_zero() and evaluate(h, f0).is_zero()
             and any(not g.is_zero() for g in gradient(c, f0)))
    fplus = ProjPoint.of(QuadScalar.root(6, 16), 39, -48)
    fminus = ProjPoint.of(QuadScalar.root(6, -16), 39, -48)
    flex_pm = all(evaluate(c, f).is_zero() and evaluate(h, f).is_zero()
                  and any(not g.is_zero() for g in gradient(c, f))
                  for f in (fplus, fminus))
    ratio_ok = all((f.coords[0] * QuadScalar.of(13)
                    - f.coords[1] * QuadScalar.root(6, s * Fraction(16, 3))).is_zero()
                   for f, s in ((fplus, 1), (fminus, -1)))
    record(9, "flexes at (1:0:0) and x/y = +-sqrt(2/3) * 16/13", flex0 and flex_pm and ratio_ok,
           "curve and Hessian vanish at all three smooth points"
           if flex0 and flex_pm and ratio_ok else "flex check fails")

    # (10) irreducibility witness: z = 0 is not a component
    restricted = HomogPoly(3, {e: coeff for e, coeff in c.terms.items() if e[2] == 0})
    ok = not restricted.is_zero()
    record(10, "z = 0 does not divide the cubic (so the cubic is irreducible)", ok,
           f"restriction to z=0 is {restricted}" if ok else "cubic vanishes on z=0")

    return ConfigReport(tuple(checks))
