"""Problem and solution data for second-order equations with prescribed
singularity structure.

An instance fixes a finite point set with an exponent pair at each point and
at infinity, plus a disjoint set of apparent-singularity candidates each
carrying a prescribed momentum (the first Laurent coefficient of the w-term
at that point).  The admissibility requirement ties the exponent sum to the
point counts: sum over all prescribed pairs minus (n - N - 1) must vanish,
where n counts finite prescribed points and N the apparent ones.

Convention at infinity: the exponents (l1, l2) supplied for the infinite
point are the standard ones, i.e. the roots of l*(l+1) - g0*l + h0 = 0 where
g0 and h0 are the top coefficients of the two numerator polynomials.  With
this reading the admissibility target above holds literally and the
hypergeometric equation carries its textbook exponents at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import Polynomial
from .scalars import GaussianRational


class InvalidInstance(ValueError):
    """Structurally invalid instance or malformed instance JSON."""


class Infinity:
    """Singleton marker for the point at infinity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = Infinity()


class ExponentPair:
    """Unordered pair of exponents; {a, b} compares equal to {b, a}."""

    __slots__ = ("rho1", "rho2")

    def __init__(self, rho1, rho2):
        self.rho1 = GaussianRational.coerce(rho1)
        self.rho2 = GaussianRational.coerce(rho2)

    @property
    def sum(self) -> GaussianRational:
        return self.rho1 + self.rho2

    @property
    def product(self) -> GaussianRational:
        return self.rho1 * self.rho2

    def __eq__(self, other):
        if not isinstance(other, ExponentPair):
            return NotImplemented
        return (self.rho1 == other.rho1 and self.rho2 == other.rho2) or (
            self.rho1 == other.rho2 and self.rho2 == other.rho1
        )

    def __hash__(self):
        return hash(frozenset((self.rho1, self.rho2)))

    def __repr__(self):
        return f"{{{self.rho1}, {self.rho2}}}"

    def to_json_obj(self) -> list:
        return [self.rho1.to_pair(), self.rho2.to_pair()]

    @classmethod
    def from_json_obj(cls, obj) -> ExponentPair:
        if not isinstance(obj, (list, tuple)) or len(obj) != 2:
            raise InvalidInstance(f"exponent pair must be a 2-element list: {obj!r}")
        return cls(GaussianRational.from_pair(obj[0]), GaussianRational.from_pair(obj[1]))


def _as_pair(value) -> ExponentPair:
    if isinstance(value, ExponentPair):
        return value
    a, b = value
    return ExponentPair(a, b)


class FuchsianInstance:
    """Prescribed data: finite points with exponents, the pair at infinity,
    and apparent points with momenta."""

    __slots__ = ("finite_points", "infinity_exponents", "apparent_points", "_psi")

    def __init__(self, finite_points, infinity_exponents, apparent_points=()):
        self.finite_points = tuple(
            (GaussianRational.coerce(t), _as_pair(pair)) for t, pair in finite_points
        )
        self.infinity_exponents = _as_pair(infinity_exponents)
        self.apparent_points = tuple(
            (GaussianRational.coerce(q), GaussianRational.coerce(p))
            for q, p in apparent_points
        )
        self._psi = None

    @property
    def n(self) -> int:
        return len(self.finite_points)

    @property
    def num_apparent(self) -> int:
        return len(self.apparent_points)

    @property
    def finite_positions(self) -> tuple:
        return tuple(t for t, _ in self.finite_points)

    @property
    def apparent_positions(self) -> tuple:
        return tuple(q for q, _ in self.apparent_points)

    @property
    def momenta(self) -> tuple:
        return tuple(p for _, p in self.apparent_points)

    def with_momenta(self, momenta) -> FuchsianInstance:
        """Same points and exponents, different momenta."""
        momenta = tuple(GaussianRational.coerce(p) for p in momenta)
        if len(momenta) != self.num_apparent:
            raise ValueError(
                f"expected {self.num_apparent} momenta, got {len(momenta)}"
            )
        return FuchsianInstance(
            self.finite_points,
            self.infinity_exponents,
            tuple(zip(self.apparent_positions, momenta)),
        )

    def shifted(self, c) -> FuchsianInstance:
        """Translate every point by c, keeping exponents and momenta."""
        c = GaussianRational.coerce(c)
        return FuchsianInstance(
            tuple((t + c, pair) for t, pair in self.finite_points),
            self.infinity_exponents,
            tuple((q + c, p) for q, p in self.apparent_points),
        )

    def __repr__(self):
        finite = ", ".join(f"{t}: {pair}" for t, pair in self.finite_points)
        apparent = ", ".join(f"{q} (p={p})" for q, p in self.apparent_points)
        return (
            f"FuchsianInstance(finite=[{finite}], infinity={self.infinity_exponents}, "
            f"apparent=[{apparent}])"
        )


@dataclass(frozen=True)
class Violation:
    code: str  # duplicate-t | duplicate-q | q-in-P | n-too-small
    message: str


def validate(instance: FuchsianInstance) -> list:
    """Every structural violation of the instance; empty list means ok."""
    violations = []
    if instance.n < 2:
        violations.append(
            Violation("n-too-small", f"need at least 2 finite points, got {instance.n}")
        )
    ts = instance.finite_positions
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            if ts[i] == ts[j]:
                violations.append(
                    Violation("duplicate-t", f"finite points {i} and {j} coincide at {ts[i]}")
                )
    qs = instance.apparent_positions
    for i in range(len(qs)):
        for j in range(i + 1, len(qs)):
            if qs[i] == qs[j]:
                violations.append(
                    Violation("duplicate-q", f"apparent points {i} and {j} coincide at {qs[i]}")
                )
    for j, q in enumerate(qs):
        if any(q == t for t in ts):
            violations.append(
                Violation("q-in-P", f"apparent point {j} at {q} collides with a finite point")
            )
    return violations


def require_valid(instance: FuchsianInstance) -> None:
    violations = validate(instance)
    if violations:
        details = "; ".join(f"{v.code}: {v.message}" for v in violations)
        raise InvalidInstance(details)


def fuchs_defect(instance: FuchsianInstance) -> GaussianRational:
    """Sum of all prescribed exponent pairs minus (n - N - 1).

    Zero exactly when the instance is admissible; the value is the amount by
    which the dropped infinity condition of the first linear system fails.
    """
    total = instance.infinity_exponents.sum
    for _, pair in instance.finite_points:
        total = total + pair.sum
    target = instance.n - instance.num_apparent - 1
    return total - GaussianRational(target)


def psi(instance: FuchsianInstance) -> Polynomial:
    """The monic polynomial vanishing at every finite prescribed or apparent
    point; degree n + N.  Cached on the (immutable) instance."""
    if instance._psi is None:
        require_valid(instance)
        instance._psi = Polynomial.from_roots(
            instance.finite_positions + instance.apparent_positions
        )
    return instance._psi


class FuchsianEquation:
    """Coefficient data (g, h) of w'' + (g/psi) w' + (h/psi^2) w = 0 together
    with the instance it was built for."""

    __slots__ = ("g", "h", "instance")

    def __init__(self, g: Polynomial, h: Polynomial, instance: FuchsianInstance):
        d = instance.n + instance.num_apparent
        if g.degree > d - 1:
            raise ValueError(f"g has degree {g.degree}, bound is {d - 1}")
        if h.degree > 2 * (d - 1):
            raise ValueError(f"h has degree {h.degree}, bound is {2 * (d - 1)}")
        self.g = g
        self.h = h
        self.instance = instance

    def __repr__(self):
        return f"FuchsianEquation(g={self.g}, h={self.h})"


# -- JSON schemas -----------------------------------------------------------


def instance_to_json_obj(instance: FuchsianInstance) -> dict:
    """Instance as a JSON-ready dict with fixed key order."""
    return {
        "finite_points": [
            {"t": t.to_pair(), "exponents": pair.to_json_obj()}
            for t, pair in instance.finite_points
        ],
        "infinity_exponents": instance.infinity_exponents.to_json_obj(),
        "apparent": [
            {"q": q.to_pair(), "p": p.to_pair()} for q, p in instance.apparent_points
        ],
    }


def instance_from_json_obj(obj) -> FuchsianInstance:
    """Parse the instance schema; raises InvalidInstance on malformed data."""
    try:
        if not isinstance(obj, dict):
            raise InvalidInstance(f"instance must be an object, got {type(obj).__name__}")
        finite = []
        for entry in obj["finite_points"]:
            finite.append(
                (
                    GaussianRational.from_pair(entry["t"]),
                    ExponentPair.from_json_obj(entry["exponents"]),
                )
            )
        infinity = ExponentPair.from_json_obj(obj["infinity_exponents"])
        apparent = []
        for entry in obj.get("apparent", []):
            apparent.append(
                (
                    GaussianRational.from_pair(entry["q"]),
                    GaussianRational.from_pair(entry["p"]),
                )
            )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInstance):
            raise
        raise InvalidInstance(f"malformed instance JSON: {exc}") from exc
    return FuchsianInstance(finite, infinity, apparent)


def equation_to_json_obj(eq: FuchsianEquation) -> dict:
    """Equation as {"G": ..., "H": ...} with full-length coefficient arrays."""
    d = eq.instance.n + eq.instance.num_apparent
    return {
        "G": [c.to_pair() for c in eq.g.padded(d)],
        "H": [c.to_pair() for c in eq.h.padded(2 * d - 1)],
    }


def equation_from_json_obj(obj, instance: FuchsianInstance) -> FuchsianEquation:
    try:
        g = Polynomial([GaussianRational.from_pair(c) for c in obj["G"]])
        h = Polynomial([GaussianRational.from_pair(c) for c in obj["H"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInstance(f"malformed equation JSON: {exc}") from exc
    return FuchsianEquation(g, h, instance)
