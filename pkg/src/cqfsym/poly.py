"""Univariate polynomials in ``q`` with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable, Union


class QPoly:
    """Immutable polynomial ``sum(coeffs[i] * q**i)``.

    Trailing zeros are always trimmed, so the zero polynomial has
    ``coeffs == ()`` and structural equality is polynomial equality.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> QPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> QPoly:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [c])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (``-1`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == QPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(("QPoly", self.coeffs)))
        return self._hash

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = "q"
            else:
                mono = f"q^{i}"
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            elif mono:
                term = f"{c}*{mono}"
            else:
                term = str(c)
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def __add__(self, other: Union[QPoly, int]) -> QPoly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: Union[QPoly, int]) -> QPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Union[QPoly, int]) -> QPoly:
        return _coerce(other) - self

    def __mul__(self, other: Union[QPoly, int]) -> QPoly:
        if isinstance(other, int):
            return QPoly(c * other for c in self.coeffs)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, e: int) -> QPoly:
        """Multiply by ``q**e``."""
        if not self.coeffs or e == 0:
            return self
        return QPoly([0] * e + list(self.coeffs))

    def exact_div(self, d: int) -> QPoly:
        """Divide every coefficient by ``d``; raises if any is not divisible."""
        out = []
        for c in self.coeffs:
            quo, rem = divmod(c, d)
            if rem:
                raise ArithmeticError(f"{c} is not divisible by {d}")
            out.append(quo)
        return QPoly(out)

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def reflect(self, m: int) -> QPoly:
        """Return ``q**m * p(1/q)``; requires ``degree <= m``."""
        if self.degree > m:
            raise ValueError(f"degree {self.degree} exceeds window {m}")
        padded = list(self.coeffs) + [0] * (m + 1 - len(self.coeffs))
        return QPoly(reversed(padded))

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_palindromic(self, m: int) -> bool:
        """``coeff_i == coeff_{m-i}`` for all ``i``, with nothing above ``q**m``."""
        if self.degree > m:
            return False
        return self.reflect(m) == self

    def is_palindromic_on_support(self) -> bool:
        """Palindromic about the midpoint of its own support."""
        if not self.coeffs:
            return True
        lo = self.valuation
        core = self.coeffs[lo:]
        return core == core[::-1]


def _coerce(x: Union[QPoly, int]) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QPoly")


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))
