"""Exact scalar, polynomial, series and partial-fraction arithmetic over Q(i).

Everything downstream (trace spaces, degeneracy tests, Pade approximants,
module traces) runs on the types defined here.  All arithmetic is exact:
scalars are Gaussian rationals (a pair of ``fractions.Fraction``), and no
operation in this module ever touches floating point.

Serialization conventions shared across the package:

* scalars render as ``"p/q+r/si"`` with explicit denominators,
  e.g. ``"-3/2+0/1i"``;
* dense polynomials render as ascending coefficient arrays of scalar
  strings;
* factored polynomials render as ``[[root, multiplicity], ...]`` pairs.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple


class GaussianRational:
    """An exact complex number re + im*i with rational re, im.

    Instances are immutable and hashable; arithmetic never rounds, so
    ``(a + b) - b == a`` holds for all values.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def from_string(cls, s: str) -> "GaussianRational":
        """Parse ``p/q+r/si`` and the obvious shorthands (``2``, ``-3/2``, ``i``)."""
        text = s.strip().replace(" ", "")
        if not text:
            raise ValueError("empty scalar string")
        if text.endswith("i") or text.endswith("I"):
            body = text[:-1]
            # split the imaginary tail off at the last top-level sign
            cut = max(body.rfind("+", 1), body.rfind("-", 1))
            if cut > 0 and body[cut - 1] != "/":
                re_part, im_part = body[:cut], body[cut:]
            else:
                re_part, im_part = "", body
            if im_part in ("", "+"):
                im_part = "1"
            elif im_part == "-":
                im_part = "-1"
            re_val = Fraction(re_part) if re_part else Fraction(0)
            return cls(re_val, Fraction(im_part))
        return cls(Fraction(text), 0)

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        mag = -self.im if self.im < 0 else self.im
        return (
            f"{self.re.numerator}/{self.re.denominator}"
            f"{sign}{mag.numerator}/{mag.denominator}i"
        )

    def __repr__(self) -> str:
        return f"GaussianRational('{self}')"

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "GaussianRational":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GR_ONE / self ** (-n)
        out = GR_ONE
        base = self
        e = n
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)

_Scalarish = (int, Fraction, GaussianRational)


def _as_scalar(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    if isinstance(value, str):
        return GaussianRational.from_string(value)
    raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")


class DensePolynomial:
    """A polynomial over Q(i), dense ascending coefficients, no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("DensePolynomial is immutable")

    @classmethod
    def zero(cls) -> "DensePolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "DensePolynomial":
        return cls((GR_ONE,))

    @classmethod
    def x(cls) -> "DensePolynomial":
        return cls((GR_ZERO, GR_ONE))

    @classmethod
    def constant(cls, c) -> "DensePolynomial":
        return cls((_as_scalar(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GR_ZERO

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, DensePolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "DensePolynomial":
        return DensePolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, _Scalarish):
            other = DensePolynomial.constant(other)
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return DensePolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _Scalarish):
            other = DensePolynomial.constant(other)
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _Scalarish):
            c = _as_scalar(other)
            return DensePolynomial(ci * c for ci in self.coeffs)
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return DensePolynomial.zero()
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return DensePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "DensePolynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = DensePolynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, x) -> GaussianRational:
        x = _as_scalar(x)
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, h) -> "DensePolynomial":
        """Return q with q(x) = p(x + h)."""
        h = _as_scalar(h)
        if not h or not self.coeffs:
            return self
        # Horner in (x + h): fold coefficients from the top down
        acc = DensePolynomial.zero()
        xh = DensePolynomial((h, GR_ONE))
        for c in reversed(self.coeffs):
            acc = acc * xh + c
        return acc

    def compose(self, inner: "DensePolynomial") -> "DensePolynomial":
        acc = DensePolynomial.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self) -> "DensePolynomial":
        if not self.coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == GR_ONE:
            return self
        return DensePolynomial(c / lead for c in self.coeffs)

    def divmod(self, divisor: "DensePolynomial"):
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        quot = [GR_ZERO] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            factor = c / lead
            quot[k - dd] = factor
            for i, dc in enumerate(divisor.coeffs):
                rem[k - dd + i] = rem[k - dd + i] - factor * dc
        return DensePolynomial(quot), DensePolynomial(rem)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            parts.append(f"({c})" + ("*" + term if term else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"DensePolynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable) -> "DensePolynomial":
        return cls(_as_scalar(c) for c in data)


def poly_shift(p: DensePolynomial, h) -> DensePolynomial:
    """Shift the argument: returns q with q(x) = p(x + h)."""
    return p.shift(h)


def poly_gcd(a: DensePolynomial, b: DensePolynomial) -> DensePolynomial:
    """Monic gcd over Q(i) by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.monic()


class FactoredPolynomial:
    """A monic polynomial given by its distinct roots and multiplicities."""

    __slots__ = ("roots", "_expanded")

    def __init__(self, roots: Iterable = ()):
        seen = {}
        for root, mult in roots:
            root = _as_scalar(root)
            mult = int(mult)
            if mult < 1:
                raise ValueError("multiplicities must be >= 1")
            if root in seen:
                raise ValueError(f"duplicate root {root}")
            seen[root] = mult
        ordered = sorted(seen.items(), key=lambda rm: (rm[0].re, rm[0].im))
        object.__setattr__(self, "roots", tuple(ordered))
        object.__setattr__(self, "_expanded", None)

    def __setattr__(self, name, value):
        raise AttributeError("FactoredPolynomial is immutable")

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def multiplicity(self, a) -> int:
        a = _as_scalar(a)
        for root, mult in self.roots:
            if root == a:
                return mult
        return 0

    def expand(self) -> DensePolynomial:
        if self._expanded is None:
            out = DensePolynomial.one()
            for root, mult in self.roots:
                out = out * DensePolynomial((-root, GR_ONE)) ** mult
            object.__setattr__(self, "_expanded", out)
        return self._expanded

    def evaluate(self, x) -> GaussianRational:
        x = _as_scalar(x)
        acc = GR_ONE
        for root, mult in self.roots:
            acc = acc * (x - root) ** mult
        return acc

    def quotient_poly(self, a, k: int) -> DensePolynomial:
        """Expand self / (x - a)^k; requires k <= multiplicity of a."""
        a = _as_scalar(a)
        if self.multiplicity(a) < k:
            raise ValueError(f"(x - {a})^{k} does not divide")
        out = DensePolynomial.one()
        for root, mult in self.roots:
            eff = mult - (k if root == a else 0)
            if eff:
                out = out * DensePolynomial((-root, GR_ONE)) ** eff
        return out

    def remove(self, other: "FactoredPolynomial") -> "FactoredPolynomial":
        """Divide out another factored polynomial, root by root."""
        left = dict(self.roots)
        for root, mult in other.roots:
            if left.get(root, 0) < mult:
                raise ValueError(f"{other} does not divide {self}")
            left[root] -= mult
        return FactoredPolynomial((r, m) for r, m in left.items() if m)

    def __mul__(self, other: "FactoredPolynomial") -> "FactoredPolynomial":
        merged = dict(self.roots)
        for root, mult in other.roots:
            merged[root] = merged.get(root, 0) + mult
        return FactoredPolynomial(merged.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, FactoredPolynomial):
            return self.roots == other.roots
        return NotImplemented

    def __hash__(self):
        return hash(self.roots)

    def __str__(self) -> str:
        if not self.roots:
            return "1"
        parts = []
        for root, mult in self.roots:
            base = f"(x - ({root}))"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"FactoredPolynomial({list(self.roots)!r})"

    def to_json(self) -> list:
        return [[str(root), mult] for root, mult in self.roots]

    @classmethod
    def from_json(cls, data: Iterable) -> "FactoredPolynomial":
        return cls((item[0], item[1]) for item in data)


class TruncatedSeries:
    """A truncated series sum_{n<=N} c_n x^{-n-1} in x^{-1} C[[x^{-1}]]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        object.__setattr__(
            self, "coeffs", tuple(_as_scalar(c) for c in coeffs)
        )
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> GaussianRational:
        return self.coeffs[n]

    def __iter__(self) -> Iterator[GaussianRational]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def truncate(self, n: int) -> "TruncatedSeries":
        if n > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: n + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncatedSeries(
            self.coeffs[i] + other.coeffs[i] for i in range(n)
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncatedSeries(
            self.coeffs[i] - other.coeffs[i] for i in range(n)
        )

    def scale(self, c) -> "TruncatedSeries":
        c = _as_scalar(c)
        return TruncatedSeries(c * ci for ci in self.coeffs)

    def first_nonzero(self):
        """Index of the first nonzero coefficient, or None if all vanish."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def __repr__(self) -> str:
        c = ", ".join(str(ci) for ci in self.coeffs)
        return f"TruncatedSeries([{c}])"

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]


def series_of_rational(
    R: DensePolynomial, S: DensePolynomial, N: int
) -> TruncatedSeries:
    """Expand R/S at infinity: coefficients c_0..c_N of sum c_n x^{-n-1}.

    Requires deg R < deg S.  The expansion is obtained by matching the
    coefficients of R(x) = S(x) * sum c_n x^{-n-1}, which is triangular in
    the c_n with pivot the leading coefficient of S.
    """
    if S.is_zero():
        raise ValueError("denominator is zero")
    if not R.is_zero() and R.degree >= S.degree:
        raise ValueError("series expansion needs deg R < deg S")
    m = S.degree
    lead = S.coeffs[-1]
    out = []
    for n in range(N + 1):
        acc = R.coefficient(m - 1 - n)
        for r in range(n):
            acc = acc - S.coefficient(m - n + r) * out[r]
        out.append(acc / lead)
    return TruncatedSeries(out)


class PrincipalParts:
    """A finitely supported map pole -> coefficients [e^(1), ..., e^(m)].

    Represents the strictly proper rational function
    sum_a sum_k e_a^(k) / (x - a)^k; the top coefficient of every entry is
    nonzero.
    """

    __slots__ = ("entries",)

    def __init__(self, entries=()):
        if isinstance(entries, dict):
            entries = entries.items()
        cleaned = {}
        for location, coeffs in entries:
            location = _as_scalar(location)
            cs = [_as_scalar(c) for c in coeffs]
            while cs and not cs[-1]:
                cs.pop()
            if cs:
                cleaned[location] = tuple(cs)
        ordered = sorted(
            cleaned.items(), key=lambda lc: (lc[0].re, lc[0].im)
        )
        object.__setattr__(self, "entries", dict(ordered))

    def __setattr__(self, name, value):
        raise AttributeError("PrincipalParts is immutable")

    def support(self):
        return tuple(self.entries)

    def order_at(self, a) -> int:
        return len(self.entries.get(_as_scalar(a), ()))

    def coefficient(self, a, k: int) -> GaussianRational:
        """The coefficient of 1/(x - a)^k (zero when absent)."""
        coeffs = self.entries.get(_as_scalar(a), ())
        if 1 <= k <= len(coeffs):
            return coeffs[k - 1]
        return GR_ZERO

    def max_order(self) -> int:
        return max((len(c) for c in self.entries.values()), default=0)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if isinstance(other, PrincipalParts):
            return self.entries == other.entries
        return NotImplemented

    def __iter__(self):
        return iter(self.entries.items())

    def to_rational(self):
        """Recombine into (R, S) with S = prod (x - a)^{m_a}, monic."""
        S = DensePolynomial.one()
        for a, coeffs in self.entries.items():
            S = S * DensePolynomial((-a, GR_ONE)) ** len(coeffs)
        R = DensePolynomial.zero()
        for a, coeffs in self.entries.items():
            cof = S
            for _ in range(len(coeffs)):
                cof = cof.divmod(DensePolynomial((-a, GR_ONE)))[0]
            # cof = S/(x-a)^{m_a}; multiply back up order by order
            for k in range(len(coeffs), 0, -1):
                R = R + coeffs[k - 1] * cof
                if k > 1:
                    cof = cof * DensePolynomial((-a, GR_ONE))
        return R, S

    def series(self, N: int) -> TruncatedSeries:
        R, S = self.to_rational()
        if S.degree == 0:
            return TruncatedSeries([GR_ZERO] * (N + 1))
        return series_of_rational(R, S, N)

    def __repr__(self) -> str:
        items = ", ".join(
            f"{a}: [{', '.join(str(c) for c in cs)}]"
            for a, cs in self.entries.items()
        )
        return f"PrincipalParts({{{items}}})"

    def to_json(self) -> dict:
        return {str(a): [str(c) for c in cs] for a, cs in self.entries.items()}


def partial_fractions(
    R: DensePolynomial, P: FactoredPolynomial
) -> PrincipalParts:
    """Principal-parts expansion of R/P over the roots of P.

    Requires deg R < deg P.  At a root a of multiplicity m the coefficients
    come from the Taylor expansion of R/(P/(x-a)^m) around a, computed by
    exact power-series division after shifting the origin to a.
    """
    if P.degree == 0:
        raise ValueError("denominator must be nonconstant")
    if not R.is_zero() and R.degree >= P.degree:
        raise ValueError("partial fractions need deg R < deg P")
    entries = {}
    for a, m in P.roots:
        B = P.quotient_poly(a, m)
        # Taylor coefficients of R/B at x = a, to order m - 1
        r_loc = R.shift(a)
        b_loc = B.shift(a)
        inv0 = b_loc.coefficient(0)
        taylor = []
        for i in range(m):
            acc = r_loc.coefficient(i)
            for r in range(i):
                acc = acc - b_loc.coefficient(i - r) * taylor[r]
            taylor.append(acc / inv0)
        # c_i (x-a)^i / (x-a)^m contributes to order m - i
        entries[a] = tuple(reversed(taylor))
    return PrincipalParts(entries)


class CosetKey(NamedTuple):
    """Canonical label for a coset of Z inside Q(i).

    Two locations share a key exactly when their difference is an integer;
    the representative keeps the imaginary part and reduces the real part
    to its fractional part in [0, 1).
    """

    imag: Fraction
    real_frac: Fraction

    def representative(self) -> GaussianRational:
        return GaussianRational(self.real_frac, self.imag)

    def __str__(self) -> str:
        return (
            f"{self.real_frac.numerator}/{self.real_frac.denominator}/"
            f"{self.imag.numerator}/{self.imag.denominator}"
        )


def coset_key(a) -> CosetKey:
    """The coset of a modulo Z; keys agree iff a - a' is an integer."""
    a = _as_scalar(a)
    floor = a.re.numerator // a.re.denominator
    return CosetKey(imag=a.im, real_frac=a.re - floor)


def integer_offset(a, b) -> int | None:
    """Return the integer a - b if there is one, else None."""
    a = _as_scalar(a)
    b = _as_scalar(b)
    if a.im != b.im:
        return None
    diff = a.re - b.re
    if diff.denominator != 1:
        return None
    return diff.numerator


_TOKEN_RE = _re.compile(r"\s*(\(|\)|\^|\*|x|[+-]|\d+(?:/\d+)?|i)\s*")


def parse_factored(text: str) -> FactoredPolynomial:
    """Parse a restricted factored expression: a product of (x - root)^mult.

    Accepted grammar, with optional ``*`` between factors:
    ``factor ::= 'x' | '(' 'x' (('+'|'-') scalar)? ')'`` followed by an
    optional ``'^' integer``.  Roots are Gaussian rationals written like
    ``1/2``, ``3``, or ``1/3+1/2i``.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial expression")
    roots: dict[GaussianRational, int] = {}
    pos = 0
    n = len(s)

    def parse_power(idx):
        if idx < n and s[idx] == "^":
            j = idx + 1
            start = j
            while j < n and s[j].isdigit():
                j += 1
            if start == j:
                raise ValueError(f"bad exponent at {idx} in {text!r}")
            return int(s[start:j]), j
        return 1, idx

    while pos < n:
        if s[pos] == "*":
            pos += 1
            continue
        if s[pos] == "x":
            mult, pos = parse_power(pos + 1)
            root = GR_ZERO
        elif s[pos] == "(":
            close = s.find(")", pos)
            if close < 0:
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            inner = s[pos + 1 : close]
            if not inner.startswith("x"):
                raise ValueError(f"factor must start with x: {inner!r}")
            rest = inner[1:]
            if rest == "":
                root = GR_ZERO
            elif rest[0] in "+-":
                root = -GaussianRational.from_string(rest)
            else:
                raise ValueError(f"bad factor {inner!r}")
            mult, pos = parse_power(close + 1)
        else:
            raise ValueError(f"unexpected character {s[pos]!r} in {text!r}")
        roots[root] = roots.get(root, 0) + mult
    return FactoredPolynomial(roots.items())
