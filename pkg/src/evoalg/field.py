"""Scalar arithmetic over the three supported coefficient fields.

A :class:`FieldSpec` picks the backend: exact rationals (``"Q"``), a prime
field (``"Fp"``), or floating-point reals compared against a fixed
tolerance (``"R"``).  Scalars are immutable and carry their spec, so mixing
values from different fields fails loudly instead of silently coercing.

The module also extracts the nonzero roots of polynomials of degree at
most three, which is all the root finding the subalgebra search needs:
rational-root candidates over Q, exhaustive evaluation over F_p, and
closed-form real roots polished by Newton steps over R.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IdenticallyZeroPolynomial,
    InversionOfZero,
    MalformedScalar,
    MixedFieldSpecs,
    NonFiniteValue,
    ZeroDenominator,
)

RATIONALS = "Q"
PRIME_FIELD = "Fp"
APPROX_REALS = "R"

_INT_RE = re.compile(r"[+-]?\d+\Z")
_FRACTION_RE = re.compile(r"([+-]?\d+)/(\d+)\Z")
_DECIMAL_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?\Z")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Identifies a field backend together with its parameters.

    ``kind`` is one of ``"Q"``, ``"Fp"``, ``"R"``.  ``p`` is the prime
    modulus (``Fp`` only), ``tol`` the absolute comparison tolerance
    (``R`` only).
    """

    kind: str
    p: int | None = None
    tol: float | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None or self.tol is not None:
                raise ValueError("rationals take no field parameters")
        elif self.kind == PRIME_FIELD:
            if self.tol is not None:
                raise ValueError("prime fields take no tolerance")
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"modulus must be prime, got {self.p!r}")
        elif self.kind == APPROX_REALS:
            if self.p is not None:
                raise ValueError("reals take no modulus")
            tol = self.tol
            if isinstance(tol, int):
                tol = float(tol)
                object.__setattr__(self, "tol", tol)
            if not isinstance(tol, float) or not math.isfinite(tol) or tol <= 0:
                raise ValueError(f"tolerance must be a positive finite float, got {self.tol!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(PRIME_FIELD, p=p)

    @classmethod
    def approx_reals(cls, tol: float = 1e-9) -> "FieldSpec":
        return cls(APPROX_REALS, tol=tol)

    @property
    def is_exact(self) -> bool:
        return self.kind != APPROX_REALS

    def zero(self) -> "FieldScalar":
        return FieldScalar(self, 0)

    def one(self) -> "FieldScalar":
        return FieldScalar(self, 1)

    def from_int(self, k: int) -> "FieldScalar":
        return FieldScalar(self, k)

    def describe(self) -> str:
        if self.kind == RATIONALS:
            return "Q"
        if self.kind == PRIME_FIELD:
            return f"F_{self.p}"
        return f"R(tol={self.tol:g})"


class FieldScalar:
    """One field element, tagged with its :class:`FieldSpec`.

    Values are canonical: reduced ``Fraction`` with positive denominator
    over Q, residue in ``[0, p)`` over F_p, finite ``float`` over R.
    Equality over R means ``|a - b| <= tol``.
    """

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        kind = spec.kind
        if kind == RATIONALS:
            if isinstance(value, float):
                raise TypeError("exact rational scalars do not accept floats")
            value = value if isinstance(value, Fraction) else Fraction(value)
        elif kind == PRIME_FIELD:
            value = int(value) % spec.p
        else:
            value = float(value)
            if not math.isfinite(value):
                raise NonFiniteValue(f"real scalar must be finite, got {value!r}")
        self.spec = spec
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            if other.spec != self.spec:
                raise MixedFieldSpecs(
                    f"operands from different fields: {self.spec.describe()} vs {other.spec.describe()}"
                )
            return other
        if isinstance(other, int):
            return FieldScalar(self.spec, other)
        return None

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        if self.spec.kind == APPROX_REALS:
            return abs(self.value) <= self.spec.tol
        return self.value == 0

    def is_one(self) -> bool:
        if self.spec.kind == APPROX_REALS:
            return abs(self.value - 1.0) <= self.spec.tol
        return self.value == 1

    def magnitude(self):
        """Absolute value of the underlying representation (pivoting aid)."""
        return abs(self.value)

    def sort_key(self):
        return self.value

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldScalar(self.spec, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldScalar(self.spec, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldScalar(self.spec, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldScalar(self.spec, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(self.spec, -self.value)

    def inv(self) -> "FieldScalar":
        if self.is_zero():
            raise InversionOfZero(f"cannot invert zero in {self.spec.describe()}")
        kind = self.spec.kind
        if kind == RATIONALS:
            return FieldScalar(self.spec, 1 / self.value)
        if kind == PRIME_FIELD:
            return FieldScalar(self.spec, pow(self.value, -1, self.spec.p))
        return FieldScalar(self.spec, 1.0 / self.value)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        if self.spec.kind == PRIME_FIELD:
            return FieldScalar(self.spec, pow(self.value, exponent, self.spec.p))
        out = self.spec.one()
        for _ in range(exponent):
            out = out * self
        return out

    # -- comparison and rendering --------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldScalar):
            return NotImplemented
        if other.spec != self.spec:
            return False
        if self.spec.kind == APPROX_REALS:
            return abs(self.value - other.value) <= self.spec.tol
        return self.value == other.value

    def __hash__(self):
        # Tolerance-based equality over R cannot hash by value; collapse to
        # the spec so the eq/hash contract still holds.
        if self.spec.kind == APPROX_REALS:
            return hash(self.spec)
        return hash((self.spec, self.value))

    def render(self) -> str:
        if self.spec.kind == APPROX_REALS:
            return format(self.value, ".17g")
        return str(self.value)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"FieldScalar({self.spec.describe()}, {self.render()})"


def scalar_parse(text: str, spec: FieldSpec) -> FieldScalar:
    """Parse scalar text under ``spec``.

    Exact fields accept an optional sign, digits, and an optional
    ``/digits`` fraction part; the real field accepts decimal and exponent
    syntax instead.  Results are canonical (reduced fraction, normalized
    residue).
    """
    t = text.strip()
    if spec.kind == APPROX_REALS:
        if _FRACTION_RE.match(t):
            raise MalformedScalar(f"fraction syntax is only for exact fields: {text!r}")
        if not _DECIMAL_RE.match(t):
            raise MalformedScalar(f"not a real scalar: {text!r}")
        try:
            return FieldScalar(spec, float(t))
        except NonFiniteValue as exc:
            raise MalformedScalar(f"real scalar overflows to infinity: {text!r}") from exc
    if _INT_RE.match(t):
        return FieldScalar(spec, int(t))
    m = _FRACTION_RE.match(t)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if spec.kind == RATIONALS:
            if den == 0:
                raise ZeroDenominator(f"zero denominator in {text!r}")
            return FieldScalar(spec, Fraction(num, den))
        if den % spec.p == 0:
            raise ZeroDenominator(f"denominator of {text!r} is zero in {spec.describe()}")
        return FieldScalar(spec, num * pow(den, -1, spec.p))
    if _DECIMAL_RE.match(t):
        raise MalformedScalar(f"decimal syntax requires the real field: {text!r}")
    raise MalformedScalar(f"not a scalar: {text!r}")


class LowDegreePoly:
    """Polynomial ``c3*x^3 + c2*x^2 + c1*x + c0`` over one field.

    Leading coefficients may be zero; degenerate polynomials are treated
    as genuine lower-degree ones.
    """

    __slots__ = ("spec", "c3", "c2", "c1", "c0")

    def __init__(self, c3: FieldScalar, c2: FieldScalar, c1: FieldScalar, c0: FieldScalar):
        spec = c3.spec
        for c in (c2, c1, c0):
            if c.spec != spec:
                raise MixedFieldSpecs("polynomial coefficients must share one field")
        self.spec = spec
        self.c3, self.c2, self.c1, self.c0 = c3, c2, c1, c0

    @classmethod
    def from_values(cls, spec: FieldSpec, c3, c2, c1, c0) -> "LowDegreePoly":
        return cls(*(FieldScalar(spec, v) for v in (c3, c2, c1, c0)))

    def coefficients(self) -> tuple[FieldScalar, FieldScalar, FieldScalar, FieldScalar]:
        return (self.c3, self.c2, self.c1, self.c0)

    def evaluate(self, x: FieldScalar) -> FieldScalar:
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients())

    def nonzero_roots(self) -> list[FieldScalar]:
        return nonzero_roots(self)

    def render(self, var: str = "x") -> str:
        parts: list[str] = []
        for coeff, power in ((self.c3, 3), (self.c2, 2), (self.c1, 1), (self.c0, 0)):
            if coeff.is_zero():
                continue
            negative, mag = _signed_render(coeff)
            if power == 0:
                term = mag
            else:
                xp = var if power == 1 else f"{var}^{power}"
                term = xp if mag == "1" else f"{mag}*{xp}"
            if not parts:
                parts.append(f"-{term}" if negative else term)
            else:
                parts.append(f"- {term}" if negative else f"+ {term}")
        if not parts:
            return "0"
        return " ".join(parts)

    def __eq__(self, other):
        if not isinstance(other, LowDegreePoly):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(tuple(hash(c) for c in self.coefficients()))

    def __repr__(self):
        return f"LowDegreePoly({self.render()} over {self.spec.describe()})"


def _signed_render(coeff: FieldScalar) -> tuple[bool, str]:
    """Split a coefficient into (is_negative, magnitude_text) for display."""
    if coeff.spec.kind == PRIME_FIELD:
        return False, coeff.render()
    if coeff.value < 0:
        return True, (-coeff).render()
    return False, coeff.render()


def nonzero_roots(poly: LowDegreePoly) -> list[FieldScalar]:
    """All roots ``x != 0`` of ``poly`` in its field, sorted ascending.

    Over Q the rational-root candidates of the reduced integer polynomial
    are tested exactly; over F_p every nonzero residue is evaluated; over R
    closed-form real roots are Newton-polished and kept when the residual
    ``|poly(x)|`` stays within ``tol * max|coefficient|``.

    Raises IdenticallyZeroPolynomial when every coefficient is zero, since
    then every scalar is a root and the caller must decide what that means.
    """
    if poly.is_zero():
        raise IdenticallyZeroPolynomial("every scalar is a root of the zero polynomial")
    spec = poly.spec
    if spec.kind == PRIME_FIELD:
        residues = [c.value for c in poly.coefficients()]
        p = spec.p
        found = []
        for x in range(1, p):
            acc = 0
            for c in residues:
                acc = (acc * x + c) % p
            if acc == 0:
                found.append(FieldScalar(spec, x))
        return found
    if spec.kind == RATIONALS:
        return [FieldScalar(spec, r) for r in _rational_nonzero_roots(poly)]
    roots = _real_nonzero_roots(
        poly.c3.value, poly.c2.value, poly.c1.value, poly.c0.value, spec.tol
    )
    return [FieldScalar(spec, r) for r in roots]


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _rational_nonzero_roots(poly: LowDegreePoly) -> list[Fraction]:
    fracs = [c.value for c in poly.coefficients()]
    den = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*ints)
    if g > 1:
        ints = [c // g for c in ints]
    while ints and ints[0] == 0:
        ints.pop(0)
    while ints and ints[-1] == 0:  # strip x^k factor; 0 is never reported
        ints.pop()
    if len(ints) <= 1:
        return []
    lead, const = abs(ints[0]), abs(ints[-1])
    found = set()
    for num in _divisors(const):
        for div in _divisors(lead):
            cand = Fraction(num, div)
            for x in (cand, -cand):
                acc = Fraction(0)
                for c in ints:
                    acc = acc * x + c
                if acc == 0:
                    found.add(x)
    return sorted(found)


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _horner4(c3: float, c2: float, c1: float, c0: float, x: float) -> float:
    return ((c3 * x + c2) * x + c1) * x + c0


def _newton_polish(c3: float, c2: float, c1: float, c0: float, x: float) -> float:
    for _ in range(50):
        fx = _horner4(c3, c2, c1, c0, x)
        if fx == 0.0:
            break
        dx = (3.0 * c3 * x + 2.0 * c2) * x + c1
        if dx == 0.0 or not math.isfinite(dx):
            break
        step = fx / dx
        x -= step
        if not math.isfinite(x):
            return math.inf
        if abs(step) <= 1e-18 * max(1.0, abs(x)):
            break
    return x


def _quadratic_real_roots(a: float, b: float, c: float) -> list[float]:
    disc = b * b - 4.0 * a * c
    eps = 1e-12 * max(1.0, b * b, abs(4.0 * a * c))
    if disc < -eps:
        return []
    if disc <= eps:
        return [-b / (2.0 * a)]
    sq = math.sqrt(disc)
    q = -(b + math.copysign(sq, b)) / 2.0 if b != 0.0 else sq / 2.0
    return [q / a, c / q]


def _cubic_real_roots(a: float, b: float, c: float, d: float) -> list[float]:
    # Depressed form t^3 + p t + q with x = t - b/(3a).
    b1, c1, d1 = b / a, c / a, d / a
    p = c1 - b1 * b1 / 3.0
    q = 2.0 * b1 ** 3 / 27.0 - b1 * c1 / 3.0 + d1
    shift = -b1 / 3.0
    disc = -4.0 * p ** 3 - 27.0 * q * q
    eps = 1e-12 * max(1.0, 4.0 * abs(p) ** 3, 27.0 * q * q)
    if abs(disc) <= eps:
        if abs(p) <= 1e-12 and abs(q) <= 1e-12:
            ts = [0.0]
        else:
            ts = [-3.0 * q / (2.0 * p), 3.0 * q / p]
    elif disc > 0.0:
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = max(-1.0, min(1.0, 3.0 * q / (p * m)))
        theta = math.acos(arg)
        ts = [m * math.cos((theta - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    else:
        rt = math.sqrt(-disc / 108.0)
        ts = [_cbrt(-q / 2.0 + rt) + _cbrt(-q / 2.0 - rt)]
    return [t + shift for t in ts]


def _real_nonzero_roots(c3: float, c2: float, c1: float, c0: float, tol: float) -> list[float]:
    scale = max(abs(c3), abs(c2), abs(c1), abs(c0))
    if abs(c3) > tol:
        candidates = _cubic_real_roots(c3, c2, c1, c0)
    elif abs(c2) > tol:
        candidates = _quadratic_real_roots(c2, c1, c0)
    elif abs(c1) > tol:
        candidates = [-c0 / c1]
    else:
        return []
    out: list[float] = []
    for x in sorted(_newton_polish(c3, c2, c1, c0, x) for x in candidates):
        if not math.isfinite(x) or abs(x) <= tol:
            continue
        if abs(_horner4(c3, c2, c1, c0, x)) > tol * scale:
            continue
        if out and abs(x - out[-1]) <= tol:
            continue
        out.append(x)
    return out
