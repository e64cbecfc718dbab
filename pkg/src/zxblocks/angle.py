"""Spider phases as exact rational multiples of pi, with a float escape hatch."""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction

TWO_PI = 2.0 * math.pi

_EXACT_RE = re.compile(r"^(-)?(\d+)?pi(?:/(\d+))?$")
_RAD_RE = re.compile(r"^([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)rad$")


class AngleSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Angle:
    """Phase ``num/den * pi`` reduced into [0, 2pi).

    An inexact angle carries its value in ``rad`` (also reduced into
    [0, 2pi)) and leaves ``num``/``den`` at 0/1.
    """

    num: int = 0
    den: int = 1
    rad: float | None = None

    def __post_init__(self):
        if self.rad is not None:
            r = math.fmod(float(self.rad), TWO_PI)
            if r < 0:
                r += TWO_PI
            if r == TWO_PI:
                r = 0.0
            object.__setattr__(self, "rad", r + 0.0)
            object.__setattr__(self, "num", 0)
            object.__setattr__(self, "den", 1)
            return
        if self.den <= 0:
            raise ValueError(f"angle denominator must be positive, got {self.den}")
        g = math.gcd(abs(self.num), self.den)
        num, den = self.num // g, self.den // g
        object.__setattr__(self, "num", num % (2 * den))
        object.__setattr__(self, "den", den)

    @classmethod
    def pi(cls, frac: Fraction | int = 1) -> Angle:
        frac = Fraction(frac)
        return cls(frac.numerator, frac.denominator)

    @classmethod
    def radians(cls, value: float) -> Angle:
        return cls(rad=value)

    @property
    def exact(self) -> bool:
        return self.rad is None

    @property
    def value(self) -> float:
        if self.rad is not None:
            return self.rad
        return math.pi * self.num / self.den

    def phase(self) -> complex:
        """e^{i alpha}; quarter turns are returned exactly."""
        if self.exact and self.den <= 2:
            return (1, 1j, -1, -1j)[self.num * (2 // self.den) % 4]
        return cmath.exp(1j * self.value)

    def __add__(self, other: Angle) -> Angle:
        if self.exact and other.exact:
            f = Fraction(self.num, self.den) + Fraction(other.num, other.den)
            return Angle(f.numerator, f.denominator)
        return Angle(rad=self.value + other.value)

    def __neg__(self) -> Angle:
        if self.exact:
            return Angle(-self.num, self.den)
        return Angle(rad=-self.rad)

    def __sub__(self, other: Angle) -> Angle:
        return self + (-other)

    def __str__(self) -> str:
        if not self.exact:
            return f"{self.rad!r}rad"
        if self.num == 0:
            return "0"
        k = "" if self.num == 1 else str(self.num)
        if self.den == 1:
            return f"{k}pi"
        return f"{k}pi/{self.den}"

    def label(self) -> str:
        """Human-facing label using the pi glyph."""
        if not self.exact:
            return f"{self.rad:.4g}"
        return str(self).replace("pi", "π")


ZERO = Angle()
PI = Angle(1, 1)


def parse_angle(text: str) -> Angle:
    """Parse ``0``, ``pi``, ``-3pi/4``, ``pi / 2`` or ``1.5708rad``."""
    s = "".join(text.split())
    if s in ("0", "-0", "+0"):
        return ZERO
    m = _EXACT_RE.match(s)
    if m:
        sign, k, den = m.groups()
        num = int(k) if k is not None else 1
        if sign:
            num = -num
        d = int(den) if den is not None else 1
        if d == 0:
            raise AngleSyntaxError(f"zero denominator in angle {text!r}")
        return Angle(num, d)
    m = _RAD_RE.match(s)
    if m:
        return Angle(rad=float(m.group(1)))
    raise AngleSyntaxError(f"bad angle {text!r}")


def as_angle(value: Angle | str | int | Fraction) -> Angle:
    """Coerce a loosely typed angle; ints and Fractions are multiples of pi."""
    if isinstance(value, Angle):
        return value
    if isinstance(value, str):
        return parse_angle(value)
    if isinstance(value, (int, Fraction)):
        return Angle.pi(value)
    raise TypeError(f"cannot interpret {value!r} as an angle")
