"""Exact scalars and polynomials.

Scalars are Gaussian rationals (complex numbers whose real and imaginary
parts are :class:`fractions.Fraction`).  :class:`MuPoly` is a dense
univariate polynomial in the indeterminate mu, :class:`MultiQPoly` a sparse
polynomial in q_1, ..., q_m.  Real-root counting uses Sturm sequences over
the rationals.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence

Rational = Fraction


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.  Floats are refused."""
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot read a rational from {type(text).__name__}")
    s = text.strip()
    if not s or any(c in s for c in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(s)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            self.re, self.im = re.re, re.im
            return
        if isinstance(re, (float, complex)) or isinstance(im, (float, complex)):
            raise TypeError("floating-point input is not exact")
        self.re = re if type(re) is Fraction else parse_rational(re)
        self.im = im if type(im) is Fraction else parse_rational(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(x)

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> "GaussianRational":
        return GaussianRational(self.re * self.re + self.im * self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, _RationalABC)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self) -> str:
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"({format_rational(self.re)}{sign}{format_rational(abs(self.im))}i)"

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re + other, self.im)
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re - other, self.im)
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re * other, self.im * other)
            return NotImplemented
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other) if isinstance(other, (int, Fraction)) else other
        if not isinstance(other, GaussianRational):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero")
        d = other.re * other.re + other.im * other.im
        num = self * other.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (ONE / self) ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gr(x) -> GaussianRational:
    """Shorthand coercion to :class:`GaussianRational`."""
    return GaussianRational.coerce(x)


# ---------------------------------------------------------------------------
# Univariate polynomials in mu


class MuPoly:
    """Dense polynomial in mu with Gaussian-rational coefficients.

    ``coeffs[k]`` is the coefficient of mu**k.  Trailing zeros are stripped so
    the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [gr(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> "MuPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c, degree: int) -> "MuPoly":
        c = gr(c)
        if not c:
            return cls()
        return cls([ZERO] * degree + [c])

    @classmethod
    def coerce(cls, x) -> "MuPoly":
        return x if isinstance(x, MuPoly) else cls.constant(x)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coeffs)

    def real_coeffs(self) -> list[Fraction]:
        if not self.is_real():
            raise ValueError("polynomial has non-real coefficients")
        return [c.re for c in self.coeffs]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, MuPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.coeffs == MuPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"MuPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str | None = None, unicode: bool = False) -> str:
        """Ascending-degree text; the variable defaults to "mu" (or "μ" with ``unicode``)."""
        var = var or ("μ" if unicode else "mu")
        if not self.coeffs:
            return "0"
        sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                mono = ""
            elif unicode:
                mono = var if k == 1 else var + str(k).translate(sup)
            else:
                mono = var if k == 1 else f"{var}^{k}"
            negative = c.im == 0 and c.re < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}" if unicode else f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __neg__(self) -> "MuPoly":
        return MuPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, MuPoly):
            if isinstance(other, (int, Fraction, GaussianRational)):
                other = MuPoly.constant(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return MuPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (MuPoly, int, Fraction, GaussianRational)):
            return NotImplemented
        return self + (-MuPoly.coerce(other))

    def __rsub__(self, other):
        return MuPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MuPoly):
            if isinstance(other, (int, Fraction, GaussianRational)):
                c = gr(other)
                return MuPoly([a * c for a in self.coeffs])
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return MuPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return MuPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MuPoly":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = MuPoly.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "MuPoly":
        """Multiply by mu**k."""
        if not self.coeffs or k == 0:
            return self
        return MuPoly([ZERO] * k + list(self.coeffs))

    def derivative(self) -> "MuPoly":
        return MuPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Horner evaluation.  ``x`` may be a scalar or another MuPoly."""
        if isinstance(x, MuPoly):
            acc = MuPoly()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = gr(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


MU = MuPoly((0, 1))


def poly_add(p: MuPoly, q) -> MuPoly:
    return p + q


def poly_mul(p: MuPoly, q) -> MuPoly:
    return p * q


def poly_scale(p: MuPoly, c) -> MuPoly:
    return p * gr(c)


def poly_derivative(p: MuPoly) -> MuPoly:
    return p.derivative()


def poly_eval(p: MuPoly, x) -> GaussianRational:
    return p.evaluate(x)


def poly_from_counts(counts: Mapping[int, GaussianRational] | Sequence) -> MuPoly:
    """Build a MuPoly from a degree->coefficient mapping or a dense list."""
    if isinstance(counts, Mapping):
        if not counts:
            return MuPoly()
        out = [ZERO] * (max(counts) + 1)
        for k, c in counts.items():
            out[k] = out[k] + gr(c)
        return MuPoly(out)
    return MuPoly(counts)


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials in q_1..q_m


class MultiQPoly:
    """Sparse polynomial in ``nvars`` indeterminates q_1..q_nvars.

    ``terms`` maps exponent tuples to nonzero Gaussian-rational coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], GaussianRational] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} has wrong length for {nvars} variables")
            c = gr(c)
            if c:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiQPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiQPoly":
        """The indeterminate q_i (1-based)."""
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    def _check(self, other: "MultiQPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiQPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __neg__(self) -> "MultiQPoly":
        return MultiQPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MultiQPoly):
            if isinstance(other, (int, Fraction, GaussianRational)):
                other = MultiQPoly.constant(self.nvars, other)
            else:
                return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return MultiQPoly(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiQPoly):
            if isinstance(other, (int, Fraction, GaussianRational)):
                c = gr(other)
                return MultiQPoly(self.nvars, {e: v * c for e, v in self.terms.items()})
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return MultiQPoly(self.nvars, out)

    __rmul__ = __mul__

    def coeff(self, exps: Sequence[int]) -> GaussianRational:
        return self.terms.get(tuple(exps), ZERO)

    def substitute_all(self, value) -> MuPoly:
        """Set every q_i to the same MuPoly (or scalar) ``value``."""
        value = MuPoly.coerce(value)
        out = MuPoly()
        for e, c in self.terms.items():
            out = out + (value ** sum(e)) * c
        return out

    def evaluate(self, point: Sequence) -> GaussianRational:
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        pt = [gr(x) for x in point]
        acc = ZERO
        for e, c in self.terms.items():
            term = c
            for x, k in zip(pt, e):
                if k:
                    term = term * x ** k
            acc = acc + term
        return acc

    def __repr__(self) -> str:
        return f"MultiQPoly({self.nvars}, {self.format()})"

    def format(self, var: str = "q") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(
                f"{var}{i + 1}" if k == 1 else f"{var}{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            negative = c.im == 0 and c.re < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    __str__ = format


# ---------------------------------------------------------------------------
# Sturm sequences over Q.  Polynomials here are plain lists of Fractions,
# lowest degree first, with no trailing zeros.


def _strip(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive(p: list[Fraction]) -> list[Fraction]:
    """Positive rational multiple of ``p`` with coprime integer coefficients."""
    if not p:
        return p
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [Fraction(v // g) for v in ints]


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for k, c in enumerate(b):
            r[shift + k] -= f * c
        r.pop()
        _strip(r)
    return _strip(q), r


def _derivative(p: list[Fraction]) -> list[Fraction]:
    return _strip([c * k for k, c in enumerate(p)][1:])


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, _primitive(r)
    if not a:
        return a
    return [c / a[-1] for c in a]


def _eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _real_poly(p: MuPoly | Sequence) -> list[Fraction]:
    if isinstance(p, MuPoly):
        return p.real_coeffs()
    out = []
    for c in p:
        if isinstance(c, GaussianRational):
            if c.im:
                raise ValueError("polynomial has non-real coefficients")
            c = c.re
        out.append(Fraction(c))
    return _strip(out)


def square_free_part(p: MuPoly | Sequence) -> list[Fraction]:
    """p / gcd(p, p') as a primitive integer-coefficient list."""
    q = _real_poly(p)
    if not q:
        raise ValueError("the zero polynomial has no square-free part")
    g = _gcd(q, _derivative(q))
    sf, rem = _divmod(q, g)
    assert not rem
    return _primitive(sf)


def sturm_chain(p: MuPoly | Sequence) -> list[list[Fraction]]:
    """Sturm sequence of the square-free part of ``p``.

    Each element is rescaled by a positive constant to keep coefficients
    small; this leaves all sign patterns unchanged.
    """
    p0 = square_free_part(p)
    chain = [p0]
    p1 = _primitive(_derivative(p0))
    while p1:
        chain.append(p1)
        _, r = _divmod(chain[-2], chain[-1])
        p1 = _primitive([-c for c in r])
    return chain


def _sign_at(p: list[Fraction], x) -> int:
    if x == math.inf:
        return _sign(p[-1])
    if x == -math.inf:
        return _sign(p[-1]) * (-1 if (len(p) - 1) % 2 else 1)
    return _sign(_eval(p, x))


def _variations(chain: list[list[Fraction]], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _bound(x):
    if x in (math.inf, -math.inf):
        return x
    return parse_rational(x) if isinstance(x, str) else Fraction(x)


def count_real_roots(p: MuPoly | Sequence, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    lo, hi = _bound(lo), _bound(hi)
    if lo >= hi:
        return 0
    chain = sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def is_strictly_positive_on(p: MuPoly | Sequence, lo=-math.inf, hi=math.inf) -> bool:
    """True iff ``p(x) > 0`` for every real x in ``[lo, hi]`` (open at infinite ends)."""
    q = _real_poly(p)
    if not q:
        raise ValueError("zero polynomial")
    lo, hi = _bound(lo), _bound(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if count_real_roots(q, lo, hi):
        return False
    if lo != -math.inf:
        return _eval(q, lo) > 0
    if hi != math.inf:
        return _eval(q, hi) > 0
    return _eval(q, Fraction(0)) > 0


def root_bound(p: MuPoly | Sequence) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    q = _real_poly(p)
    lead = abs(q[-1])
    return 1 + max((abs(c) / lead for c in q[:-1]), default=Fraction(0))


def isolate_largest_root(p: MuPoly | Sequence, width=Fraction(1, 10**6)) -> tuple[Fraction, Fraction] | None:
    """Interval ``(lo, hi]`` of width <= ``width`` containing the largest real root.

    Returns None when ``p`` has no real roots.
    """
    q = _real_poly(p)
    chain = sturm_chain(q)
    B = root_bound(q)
    lo, hi = -B, B
    if _variations(chain, lo) - _variations(chain, hi) == 0:
        return None
    width = Fraction(width)
    vhi = _variations(chain, hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _variations(chain, mid) - vhi > 0:
            lo = mid
        else:
            hi = mid
            vhi = _variations(chain, hi)
    return lo, hi


def refine_root(p: MuPoly | Sequence, lo: Fraction, hi: Fraction, below: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating ``(lo, hi]`` of a simple root known to be < ``below``
    until ``hi < below``."""
    chain = sturm_chain(p)
    while hi >= below:
        mid = (lo + hi) / 2
        if _variations(chain, mid) - _variations(chain, hi) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def square_free_decomposition(p: MuPoly | Sequence) -> tuple[Fraction, list[list[Fraction]]]:
    """Yun's algorithm: ``p = c * prod_k f_k**k`` with monic square-free f_k.

    Returns ``(c, [f_1, f_2, ...])``; unused multiplicities hold ``[1]``.
    """
    f = _real_poly(p)
    if not f:
        raise ValueError("zero polynomial")
    lead = f[-1]
    f = [c / lead for c in f]
    if len(f) == 1:
        return lead, []
    a = _gcd(f, _derivative(f))
    b, _ = _divmod(f, a)
    c, _ = _divmod(_derivative(f), a)
    d = _strip([x - y for x, y in _zip_pad(c, _derivative(b))])
    factors = []
    while len(b) > 1:
        g = _gcd(b, d) if d else list(b)
        factors.append(g)
        b, _ = _divmod(b, g)
        c, _ = _divmod(d, g) if d else ([], [])
        d = _strip([x - y for x, y in _zip_pad(c, _derivative(b))])
    return lead, factors


def _zip_pad(a: list[Fraction], b: list[Fraction]):
    n = max(len(a), len(b))
    return zip(a + [Fraction(0)] * (n - len(a)), b + [Fraction(0)] * (n - len(b)))


def _mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def find_negative_point(p: MuPoly | Sequence, lo, hi) -> Fraction | None:
    """A rational x in ``[lo, hi]`` with ``p(x) < 0``, or None if p >= 0 there.

    The sign of p can only change at roots of odd multiplicity; those are the
    roots of the product of the odd-indexed square-free factors.
    """
    q = _real_poly(p)
    if not q:
        return None
    lo, hi = _bound(lo), _bound(hi)
    B = root_bound(q) + 1 if len(q) > 1 else Fraction(1)
    a = -B if lo == -math.inf else lo
    b = B if hi == math.inf else hi
    if lo == -math.inf:
        a = min(a, b - 1)
    if hi == math.inf:
        b = max(b, a + 1)
    for x in (a, b):
        if _eval(q, x) < 0:
            return x
    if a == b:
        return None
    _, factors = square_free_decomposition(q)
    odd = [Fraction(1)]
    for k, f in enumerate(factors, start=1):
        if k % 2:
            odd = _mul(odd, f)
    if len(odd) > 1 and count_real_roots(odd, a, b) - (_eval(odd, b) == 0) > 0:
        # odd-multiplicity root strictly inside: shrink around it until an
        # endpoint lands on the negative side
        chain = sturm_chain(odd)
        lo_, hi_ = a, b
        vb = _variations(chain, hi_)
        if _eval(odd, hi_) == 0:
            hi_ = hi_ - (hi_ - lo_) / 2**20
            vb = _variations(chain, hi_)
        while True:
            mid = (lo_ + hi_) / 2
            for x in (lo_, mid, hi_):
                if _eval(q, x) < 0:
                    return x
            if _variations(chain, mid) - vb > 0:
                lo_ = mid
            else:
                hi_ = mid
                vb = _variations(chain, hi_)
    # constant sign between a and b apart from touching zeros
    k = 1
    while True:
        for j in range(1, 2**k, 2):
            x = a + (b - a) * Fraction(j, 2**k)
            v = _eval(q, x)
            if v:
                return x if v < 0 else None
        k += 1
