"""Triangular fuzzy numbers and the linguistic judgment scale.

A TFN is an ordered triple (l, m, u) with a piecewise-linear membership
function peaking at m. All fuzzy arithmetic used by the engine
(componentwise add/mul, reversed-order inverse, graded-mean
defuzzification) lives here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DivisionByZeroComponent,
    NonPositiveComponent,
    UnknownTerm,
)


@dataclass(frozen=True)
class TFN:
    """Triangular fuzzy number (l, m, u).

    Ordering l <= m <= u is enforced on construction unless the triple is
    explicitly flagged `nonstandard` (subtraction and division can produce
    such triples; they are never consumed by extent analysis).
    """

    l: float
    m: float
    u: float
    nonstandard: bool = False

    def __post_init__(self):
        if not self.nonstandard and not (self.l <= self.m <= self.u):
            raise ValueError(
                f"TFN components must satisfy l <= m <= u, got "
                f"({self.l}, {self.m}, {self.u})"
            )

    # -- predicates ---------------------------------------------------

    @property
    def is_positive(self) -> bool:
        return self.l > 0

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l, self.m, self.u)

    # -- arithmetic (componentwise operational laws) -------------------

    def __add__(self, other: "TFN") -> "TFN":
        return TFN(self.l + other.l, self.m + other.m, self.u + other.u)

    def __sub__(self, other: "TFN") -> "TFN":
        l, m, u = self.l - other.l, self.m - other.m, self.u - other.u
        return TFN(l, m, u, nonstandard=not (l <= m <= u))

    def __mul__(self, other: "TFN") -> "TFN":
        return TFN(self.l * other.l, self.m * other.m, self.u * other.u)

    def __truediv__(self, other: "TFN") -> "TFN":
        if other.l == 0 or other.m == 0 or other.u == 0:
            raise DivisionByZeroComponent(
                f"cannot divide by TFN with zero component: {other.as_tuple()}"
            )
        l, m, u = self.l / other.l, self.m / other.m, self.u / other.u
        return TFN(l, m, u, nonstandard=not (l <= m <= u))

    def scale(self, k: float) -> "TFN":
        if k >= 0:
            return TFN(k * self.l, k * self.m, k * self.u)
        return TFN(k * self.l, k * self.m, k * self.u, nonstandard=True)

    def inverse(self) -> "TFN":
        """Reciprocal with reversed component order: (1/u, 1/m, 1/l)."""
        if self.l <= 0:
            raise NonPositiveComponent(
                f"inverse requires strictly positive components, got "
                f"{self.as_tuple()}"
            )
        return TFN(1.0 / self.u, 1.0 / self.m, 1.0 / self.l)

    # -- evaluation ----------------------------------------------------

    def membership(self, t: float) -> float:
        """Degree of membership of crisp value t, in [0, 1].

        Linear ramps on [l, m] and [m, u]; exactly 1 at m even when a
        segment is degenerate.
        """
        if t < self.l or t > self.u:
            return 0.0
        if t == self.m:
            return 1.0
        if t < self.m:
            return (t - self.l) / (self.m - self.l)
        return (self.u - t) / (self.u - self.m)

    def graded_mean(self) -> float:
        """Graded mean integration defuzzification: (4m + l + u) / 6."""
        return (4.0 * self.m + self.l + self.u) / 6.0


IDENTITY = TFN(1.0, 1.0, 1.0)


def combine(kind: str, a: TFN, b) -> TFN:
    """Dispatch one of the operational laws by name.

    kind: 'add', 'sub', 'mul', 'div' (b is a TFN) or 'scale' (b is a real).
    """
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "scale":
        return a.scale(float(b))
    raise ValueError(f"unknown combination kind: {kind!r}")


def membership(f: TFN, t: float) -> float:
    return f.membership(t)


def tfn_inverse(v: TFN) -> TFN:
    return v.inverse()


def defuzzify_graded_mean(v: TFN) -> float:
    return v.graded_mean()


# ---------------------------------------------------------------------
# Linguistic scale


@dataclass(frozen=True)
class LinguisticScale:
    """Ordered linguistic terms with their TFNs and reciprocal pairing.

    Must contain an identity term mapping to (1,1,1) whose reciprocal is
    itself.
    """

    terms: dict[str, TFN]
    reciprocals: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        identity = [n for n, t in self.terms.items() if t == IDENTITY]
        if not identity:
            raise ValueError("scale must contain an identity term (1,1,1)")
        for name in self.terms:
            rec = self.reciprocals.get(name)
            if rec is None or rec not in self.terms:
                raise ValueError(f"term {name!r} has no reciprocal term")
        ident = identity[0]
        if self.reciprocals[ident] != ident:
            raise ValueError("reciprocal of the identity term must be itself")

    @property
    def identity_term(self) -> str:
        for name, t in self.terms.items():
            if t == IDENTITY:
                return name
        raise AssertionError("unreachable: validated in __post_init__")

    def tfn(self, term: str, reciprocal: bool = False) -> TFN:
        if term not in self.terms:
            raise UnknownTerm(f"term {term!r} not in scale")
        if reciprocal:
            term = self.reciprocals[term]
        return self.terms[term]

    def reciprocal_term(self, term: str) -> str:
        if term not in self.terms:
            raise UnknownTerm(f"term {term!r} not in scale")
        return self.reciprocals[term]


def from_linguistic(scale: LinguisticScale, term: str, reciprocal: bool = False) -> TFN:
    return scale.tfn(term, reciprocal=reciprocal)


def default_scale() -> LinguisticScale:
    """Five-level preference scale with rounded reciprocal terms.

    The reciprocal TFNs are rounded, not exact inverses (e.g. weak pairs
    with (0.5, 0.6, 1)), so defuzzified products land near but not on 1.
    """
    terms = {
        "equal": TFN(1, 1, 1),
        "weak": TFN(1, 1.5, 2),
        "fair": TFN(1.5, 2, 2.5),
        "strong": TFN(2, 2.5, 3),
        "very-strong": TFN(2.5, 3, 3.5),
        "inverse-weak": TFN(0.5, 0.6, 1),
        "inverse-fair": TFN(0.4, 0.5, 0.6),
        "inverse-strong": TFN(0.3, 0.4, 0.5),
        "inverse-very-strong": TFN(0.2, 0.3, 0.4),
    }
    reciprocals = {"equal": "equal"}
    for name in ("weak", "fair", "strong", "very-strong"):
        reciprocals[name] = f"inverse-{name}"
        reciprocals[f"inverse-{name}"] = name
    return LinguisticScale(terms=terms, reciprocals=reciprocals)
