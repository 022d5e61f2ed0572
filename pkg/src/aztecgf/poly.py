"""Exact sparse bivariate Laurent polynomials over the rationals.

A ``LaurentPoly2`` is a finite map from exponent pairs ``(e_q, e_t)`` to
nonzero ``Fraction`` coefficients.  It is the single value type used by every
generating function in this package: ``q`` tracks the rank-like statistic and
``t`` the vertical-domino-like statistic, and weighted-graph computations keep
``q`` symbolic while soaking any other parameters into the coefficient field.

Exponents may be negative (Laurent), which intermediate prefactor assembly
needs, but user-facing generating functions are checked to be genuine
polynomials via :meth:`LaurentPoly2.require_polynomial`.

Coefficients are ``fractions.Fraction`` throughout (stored in lowest terms
with positive denominator, arithmetic exact by construction).  ``BigRat`` is
an alias for it.

Values are immutable and hashable; they can be shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from .errors import InexactDivision, NegativeExponent, PoleAtZero

BigRat = Fraction


def _coeff(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"coefficient must be an integer or Fraction, got {type(x).__name__}")


class LaurentPoly2:
    """Sparse Laurent polynomial in q and t with exact rational coefficients.

    Terms live in an internal dict ``{(e_q, e_t): Fraction}`` that never
    stores a zero coefficient, so two polynomials are equal iff their term
    maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (eq, et), c in terms.items():
                c = _coeff(c)
                if c:
                    clean[(int(eq), int(et))] = c
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def term(cls, c, q: int = 0, t: int = 0) -> "LaurentPoly2":
        """The monomial c * q**q * t**t."""
        return cls({(q, t): c})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def sorted_terms(self):
        """Terms as ((e_q, e_t), coeff), ordered lexicographically ascending.

        This is the canonical serialization order; all text/JSON output is
        derived from it, which is what makes CLI output bit-stable.
        """
        return sorted(self._terms.items())

    def coefficient(self, q: int = 0, t: int = 0) -> Fraction:
        return self._terms.get((q, t), Fraction(0))

    def is_polynomial(self) -> bool:
        """True when every exponent is non-negative in both variables."""
        return all(eq >= 0 and et >= 0 for eq, et in self._terms)

    def require_polynomial(self) -> "LaurentPoly2":
        if not self.is_polynomial():
            bad = min(self._terms)
            raise NegativeExponent(f"negative exponent in final result, e.g. term {bad}")
        return self

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly2):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly2.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly2({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly2()
        res._terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return LaurentPoly2.zero()
            return LaurentPoly2({e: cc * c for e, cc in self._terms.items()})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out = {}
        for (aq, at), ac in self._terms.items():
            for (bq, bt), bc in other._terms.items():
                e = (aq + bq, at + bt)
                s = out.get(e, 0) + ac * bc
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly2()
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LaurentPoly2.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def exact_div(self, d: "LaurentPoly2") -> "LaurentPoly2":
        """Return u with u * d == self, or raise :class:`InexactDivision`.

        Division runs in the Laurent ring: quotient exponents are allowed to
        be negative.  Candidate quotient exponents are confined to the box
        implied by degree arithmetic (the q- and t-degree spans of self minus
        those of d), so a failed division is detected, not looped on.
        """
        if isinstance(d, (int, Fraction)):
            d = LaurentPoly2.const(d)
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly2.zero()

        def spans(p):
            qs = [eq for eq, _ in p._terms]
            ts = [et for _, et in p._terms]
            return min(qs), max(qs), min(ts), max(ts)

        nq0, nq1, nt0, nt1 = spans(self)
        dq0, dq1, dt0, dt1 = spans(d)
        # exponent box any true quotient must live in
        uq0, uq1 = nq0 - dq0, nq1 - dq1
        ut0, ut1 = nt0 - dt0, nt1 - dt1
        if uq0 > uq1 or ut0 > ut1:
            raise InexactDivision("degree spans rule out any quotient")

        lead_d = max(d._terms)
        lead_dc = d._terms[lead_d]
        rem = dict(self._terms)
        quot = {}
        while rem:
            lead_r = max(rem)
            eq = lead_r[0] - lead_d[0]
            et = lead_r[1] - lead_d[1]
            if not (uq0 <= eq <= uq1 and ut0 <= et <= ut1):
                raise InexactDivision("remainder is not divisible")
            c = rem[lead_r] / lead_dc
            quot[(eq, et)] = c
            for (bq, bt), bc in d._terms.items():
                e = (eq + bq, et + bt)
                s = rem.get(e, 0) - c * bc
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        res = LaurentPoly2()
        res._terms = quot
        return res

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return LaurentPoly2({e: cc / c for e, cc in self._terms.items()})
        if isinstance(other, LaurentPoly2):
            return self.exact_div(other)
        return NotImplemented

    # -- substitutions -------------------------------------------------------

    def evaluate(self, q0, t0) -> Fraction:
        """Exact value at q=q0, t=t0; raises :class:`PoleAtZero` on 0**negative."""
        q0 = _coeff(q0)
        t0 = _coeff(t0)
        total = Fraction(0)
        for (eq, et), c in self._terms.items():
            if (eq < 0 and q0 == 0) or (et < 0 and t0 == 0):
                raise PoleAtZero(f"substituting 0 into exponent pair ({eq}, {et})")
            total += c * q0**eq * t0**et
        return total

    def invert_t(self) -> "LaurentPoly2":
        """Substitute t -> 1/t, i.e. negate every t-exponent."""
        return LaurentPoly2({(eq, -et): c for (eq, et), c in self._terms.items()})

    def shift(self, dq: int = 0, dt: int = 0) -> "LaurentPoly2":
        """Multiply by the monomial q**dq * t**dt."""
        return LaurentPoly2({(eq + dq, et + dt): c for (eq, et), c in self._terms.items()})

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        """Human-readable sorted term list, e.g. ``1 + 2*t*q + t^2*q^2``.

        Terms are ordered by (q-exponent, t-exponent); within a term the
        coefficient comes first (omitted when 1), then the t part, then the
        q part, joined by ``*``.
        """
        if self.is_zero:
            return "0"
        pieces = []
        for (eq, et), c in self.sorted_terms():
            parts = []
            mag = abs(c)
            if mag != 1 or (eq == 0 and et == 0):
                parts.append(_frac_text(mag))
            if et:
                parts.append("t" if et == 1 else f"t^{et}")
            if eq:
                parts.append("q" if eq == 1 else f"q^{eq}")
            body = "*".join(parts)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def to_json_obj(self) -> dict:
        """JSON form: {"terms": [{"q": .., "t": .., "coeff": ".."}, ...]}."""
        return {
            "terms": [
                {"q": eq, "t": et, "coeff": _frac_text(c)}
                for (eq, et), c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json_obj(cls, obj) -> "LaurentPoly2":
        terms = {}
        for item in obj["terms"]:
            terms[(int(item["q"]), int(item["t"]))] = Fraction(item["coeff"])
        return cls(terms)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly2({self.to_text()})"


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def q_power(k: int) -> LaurentPoly2:
    return LaurentPoly2.term(1, q=k)


def t_power(k: int) -> LaurentPoly2:
    return LaurentPoly2.term(1, t=k)


def as_poly(x) -> LaurentPoly2:
    """Coerce an int/Fraction/LaurentPoly2 into a LaurentPoly2."""
    if isinstance(x, LaurentPoly2):
        return x
    return LaurentPoly2.const(_coeff(x))


def q_ratio_product(s, alpha: int) -> LaurentPoly2:
    """prod_{i<j} (q^(alpha*s_j) - q^(alpha*s_i)) / (q^(alpha*j) - q^(alpha*i)).

    ``s`` must be strictly increasing with s_i >= i; the quotient is then a
    polynomial in q with non-negative integer coefficients (a q-analogue of
    prod (s_j - s_i)/(j - i)).  Numerator and denominator are each expanded
    fully and divided once; degrees stay at desk scale so this is cheap and
    keeps the code obvious.
    """
    s = tuple(s)
    if any(x <= 0 for x in s) or any(a >= b for a, b in zip(s, s[1:])):
        raise ValueError("s must be a strictly increasing sequence of positive integers")
    if any(x < i + 1 for i, x in enumerate(s)):
        raise ValueError("s must satisfy s_i >= i")
    m = len(s)
    num = LaurentPoly2.one()
    den = LaurentPoly2.one()
    for i in range(m):
        for j in range(i + 1, m):
            num = num * (q_power(alpha * s[j]) - q_power(alpha * s[i]))
            den = den * (q_power(alpha * (j + 1)) - q_power(alpha * (i + 1)))
    return num.exact_div(den)


def falling_ratio(s) -> Fraction:
    """prod_{i<j} (s_j - s_i)/(j - i) as an exact rational.

    Independent of :func:`q_ratio_product`; used to cross-check its value at
    q = 1 and as the closed-form tiling count of dented semihexagons.
    """
    s = tuple(s)
    m = len(s)
    num = prod(s[j] - s[i] for i in range(m) for j in range(i + 1, m))
    den = prod(j - i for i in range(m) for j in range(i + 1, m))
    return Fraction(num, den if den else 1)
