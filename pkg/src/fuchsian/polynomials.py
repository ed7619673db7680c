"""Dense polynomials and local Laurent expansions over the Gaussian rationals.

A polynomial is a tuple of coefficients in ascending degree with trailing
zeros trimmed; the zero polynomial is the empty tuple and its degree is the
distinguished value -inf (never the -1 convention).  A Laurent series stores
a base point, the order of its first stored coefficient and a finite window
of coefficients; asking for a coefficient above the stored window is an
error, never a silent zero.

Expansions of rational functions num/den at a point are computed by exact
power-series inversion of the unit part of den, which works uniformly at
ordinary points and at poles and serves as the independent oracle for every
closed-form constant elsewhere in the package.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, ZERO, GaussianRational


class Polynomial:
    """Dense univariate polynomial with GaussianRational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        values = [GaussianRational.coerce(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.coeffs = tuple(values)

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    @classmethod
    def constant(cls, value) -> Polynomial:
        return cls((value,))

    @classmethod
    def from_roots(cls, roots) -> Polynomial:
        """Monic polynomial with exactly the given roots (with multiplicity)."""
        result = cls((1,))
        for root in roots:
            root = GaussianRational.coerce(root)
            result = result * cls((-root, 1))
        return result

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree as an int; -inf (float) for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def coefficient(self, k: int) -> GaussianRational:
        """Coefficient of z^k; zero beyond the stored degree."""
        if k < 0:
            raise ValueError("polynomial coefficient index must be >= 0")
        return self.coeffs[k] if k < len(self.coeffs) else ZERO

    def padded(self, length: int) -> tuple:
        """Coefficient tuple padded with zeros to exactly `length` entries."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} exceeds padded length {length}")
        return self.coeffs + (ZERO,) * (length - len(self.coeffs))

    def __call__(self, x) -> GaussianRational:
        x = GaussianRational.coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, k: int = 1) -> Polynomial:
        """Exact k-th derivative (k >= 1)."""
        if k < 1:
            raise ValueError("derivative order must be >= 1")
        coeffs = self.coeffs
        for _ in range(k):
            coeffs = tuple(coeffs[i] * i for i in range(1, len(coeffs)))
        return Polynomial(coeffs)

    def shift(self, a) -> Polynomial:
        """Taylor shift: the polynomial q with q(x) = p(x + a)."""
        a = GaussianRational.coerce(a)
        result = Polynomial.zero()
        step = Polynomial((a, 1))
        for c in reversed(self.coeffs):
            result = result * step + Polynomial((c,))
        return result

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            tuple(self.coefficient(i) - other.coefficient(i) for i in range(n))
        )

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            scalar = GaussianRational.coerce(other)
            return Polynomial(tuple(c * scalar for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Polynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                if c == ONE:
                    parts.append(z)
                else:
                    text = str(c)
                    if ("+" in text[1:]) or ("-" in text[1:]):
                        text = f"({text})"
                    parts.append(f"{text}*{z}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"


#: The identity polynomial z, convenient for building expressions.
Z = Polynomial((0, 1))


class LaurentSeries:
    """A finite window of an exact Laurent expansion at a base point.

    Coefficients cover orders min_order .. min_order + len(coeffs) - 1 in the
    local coordinate (z - base_point).  Orders below the window are truly
    zero and may be queried; orders above it are unknown and raise.
    """

    __slots__ = ("base_point", "min_order", "coeffs")

    def __init__(self, base_point, min_order: int, coeffs):
        values = [GaussianRational.coerce(c) for c in coeffs]
        while values and not values[0]:
            values.pop(0)
            min_order += 1
        self.base_point = base_point
        self.min_order = min_order
        self.coeffs = tuple(values)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_order(self) -> int:
        """Highest order carried by the stored window."""
        if not self.coeffs:
            raise ValueError("series is identically zero to the stored order")
        return self.min_order + len(self.coeffs) - 1

    def coefficient(self, order: int) -> GaussianRational:
        if not self.coeffs:
            return ZERO
        if order < self.min_order:
            return ZERO
        if order > self.max_order:
            raise ValueError(
                f"coefficient of order {order} is beyond the stored window "
                f"(max {self.max_order})"
            )
        return self.coeffs[order - self.min_order]

    @property
    def residue(self) -> GaussianRational:
        return self.coefficient(-1)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.base_point == other.base_point
            and self.min_order == other.min_order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.base_point, self.min_order, self.coeffs))

    def __repr__(self):
        terms = ", ".join(
            f"{self.min_order + k}: {c}" for k, c in enumerate(self.coeffs)
        )
        return f"LaurentSeries(at {self.base_point}; {terms})"


def laurent_expand(num: Polynomial, den: Polynomial, at, terms: int) -> LaurentSeries:
    """Exact Laurent expansion of num/den at a point, with `terms` coefficients.

    Writes den = (z-a)^m * u(z) with u(a) != 0; the expansion starts at
    min_order = ord_a(num) - m and is computed by power-series inversion of
    the shifted unit u.  A zero numerator yields the zero window at order 0.
    """
    if den.is_zero:
        raise ZeroDivisionError("denominator is the zero polynomial")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    at = GaussianRational.coerce(at)
    if num.is_zero:
        return LaurentSeries(at, 0, (ZERO,) * terms)

    num_local = num.shift(at).coeffs
    den_local = den.shift(at).coeffs
    k = next(i for i, c in enumerate(num_local) if c)
    m = next(i for i, c in enumerate(den_local) if c)
    v = num_local[k:]
    u = den_local[m:]

    inv_u0 = ONE / u[0]
    out = []
    for i in range(terms):
        acc = v[i] if i < len(v) else ZERO
        for j in range(1, min(i, len(u) - 1) + 1):
            acc = acc - u[j] * out[i - j]
        out.append(acc * inv_u0)
    return LaurentSeries(at, k - m, tuple(out))
