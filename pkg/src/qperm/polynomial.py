"""Exact dense univariate polynomial arithmetic over arbitrary-precision integers.

Every generating function in this package is an :class:`IntPolynomial`: a tuple
of integer coefficients in ascending degree with trailing zeros trimmed.  The
zero polynomial is the empty tuple, so structural equality is mathematical
equality.  Values are immutable and safe to share between threads.

Degrees reach C(n, 2) and coefficients grow super-polynomially with n, so
Python's native big integers are essential; fixed-width arithmetic would
overflow silently near n = 20.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


class IntPolynomial:
    """A polynomial in the indeterminate q with integer coefficients.

    >>> f = IntPolynomial([1, 2, 0, 1])
    >>> str(f)
    '1 + 2q + q^3'
    >>> f.degree, f(1), f(2)
    (3, 4, 13)
    >>> IntPolynomial([]).degree is None
    True
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        """coefficient * q**degree"""
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        if coefficient == 0:
            return cls()
        return cls((0,) * degree + (coefficient,))

    # -- structure ----------------------------------------------------

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial (never a sentinel int)."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def coefficient(self, i: int) -> int:
        """Coefficient of q^i (0 beyond the stored range)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coeffs!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return IntPolynomial(c * other for c in self._coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        # schoolbook convolution; iterate the shorter operand outside
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def times_q_power(self, k: int) -> "IntPolynomial":
        """Multiply by q^k (a degree shift)."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self._coeffs or k == 0:
            return self
        return IntPolynomial((0,) * k + self._coeffs)

    def evaluate(self, x: int) -> int:
        """Exact Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    # -- predicates and transforms -------------------------------------

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self._coeffs)

    def is_palindromic(self, d: int) -> bool:
        """True iff f(q) = q^d * f(1/q).

        Equivalently the coefficient of q^i equals that of q^(d-i) for all
        0 <= i <= d and everything above degree d vanishes.  A polynomial can
        be palindromic in degree d without having degree d (the zero
        polynomial is palindromic in every degree).
        """
        if d < 0:
            raise ValueError("degree must be nonnegative")
        if len(self._coeffs) - 1 > d:
            return False
        coeffs = self._coeffs
        m = len(coeffs)
        for i in range((d + 1) // 2 + 1):
            lo = coeffs[i] if i < m else 0
            hi = coeffs[d - i] if d - i < m else 0
            if lo != hi:
                return False
        return True

    def reversed_in_degree(self, d: int) -> "IntPolynomial":
        """q^d * f(1/q): coefficient of q^i moves to q^(d-i).  Needs deg f <= d."""
        deg = self.degree
        if deg is None:
            return ZERO
        if deg > d:
            raise ValueError(f"cannot reverse degree-{deg} polynomial in degree {d}")
        return IntPolynomial(self.coefficient(d - i) for i in range(d + 1))

    # -- canonical external forms --------------------------------------

    def to_text(self) -> str:
        """Canonical text form, ascending degree: '1 + 2q - q^2 + q^3'."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "q" if mag == 1 else f"{mag}q"
            else:
                body = f"q^{i}" if mag == 1 else f"{mag}q^{i}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def to_latex(self) -> str:
        """Fully expanded LaTeX form with braced exponents."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "q" if mag == 1 else f"{mag}q"
            else:
                body = f"q^{{{i}}}" if mag == 1 else f"{mag}q^{{{i}}}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        """Canonical JSON form with decimal-string coefficients."""
        return {"variable": "q", "coefficients": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "IntPolynomial":
        if data.get("variable") != "q":
            raise ValueError("polynomial JSON must declare variable 'q'")
        raw = data.get("coefficients")
        if not isinstance(raw, Sequence) or isinstance(raw, (str, bytes)):
            raise ValueError("polynomial JSON needs a coefficient list")
        try:
            coeffs = [int(c) for c in raw]
        except (TypeError, ValueError) as exc:
            raise ValueError(f"bad coefficient in polynomial JSON: {exc}") from None
        return cls(coeffs)


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
Q = IntPolynomial((0, 1))


def poly_sum(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    """Sum a stream of polynomials without quadratic re-trimming."""
    out: list[int] = []
    for p in polys:
        c = p.coefficients
        if len(c) > len(out):
            out.extend([0] * (len(c) - len(out)))
        for i, x in enumerate(c):
            out[i] += x
    return IntPolynomial(out)
