"""Multivariate Laurent polynomials with integer coefficients.

Terms are stored as ``{exponent tuple: coefficient}``.  Every iteration and
string form uses graded-lex order, descending (total degree first, then
lexicographic on the exponent tuple).
"""

from __future__ import annotations

import ast
from typing import Iterable, Iterator, Mapping

Monomial = tuple[int, ...]


class NonExactDivision(ArithmeticError):
    """Raised when a Laurent division leaves a remainder."""


def grlex_key(exps: Monomial) -> tuple[int, Monomial]:
    return (sum(exps), exps)


class LaurentPoly:
    __slots__ = ("n", "_terms", "_hash", "_sorted")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | None = None):
        self.n = n
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError(f"monomial {exps} has wrong length for n={n}")
                if c:
                    clean[tuple(exps)] = int(c)
        self._terms = clean
        self._hash = None
        self._sorted = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def constant(cls, c: int, n: int) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, i: int, n: int) -> "LaurentPoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.n, p._terms, p._hash, p._sorted = n, terms, None, None
        return p

    # -- basic protocol -----------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded-lex order."""
        if self._sorted is None:
            self._sorted = sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)
        return self._sorted

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.n)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.items()[0]

    def min_exponents(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial")
        return tuple(min(col) for col in zip(*self._terms))

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exps in self._terms for e in exps)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ValueError(f"ambient mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.n)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if _too_wide(self) or _too_wide(other):
            out_t: dict[Monomial, int] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out_t[e] = out_t.get(e, 0) + c1 * c2
            return LaurentPoly._raw(self.n, {e: c for e, c in out_t.items() if c})
        # exponent vectors packed into one integer so products are int additions
        b = [(_pack(e), c) for e, c in other._terms.items()]
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            k1 = _pack(e1)
            for k2, c2 in b:
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        n = self.n
        return LaurentPoly._raw(n, {_unpack(k, n): c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NonExactDivision("inverse of a non-unit monomial")
            return LaurentPoly._raw(self.n, {tuple(x * k for x in e): c ** (-k)})
        out = LaurentPoly.constant(1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exps: Monomial) -> "LaurentPoly":
        """Multiply by the monomial ``y^exps``."""
        return LaurentPoly._raw(
            self.n, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()}
        )

    def __truediv__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return exact_div(self, other)

    def evaluate(self, point: Iterable[int]) -> int:
        point = tuple(point)
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, x in zip(point, e):
                if x < 0:
                    raise ValueError("evaluate() takes polynomials with non-negative exponents")
                if x:
                    term *= v**x
            total += term
        return total

    # -- string forms -------------------------------------------------------

    def to_str(self, var: str = "y") -> str:
        """Polynomial display, e.g. ``y1^2 + 2*y1*y3 - y2^-1``."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = _monomial_str(e, var)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def fraction_str(self, var: str = "y") -> str:
        """Reduced-fraction display, e.g. ``(y1 + y2 + y3) / (y1*y2)``."""
        d = denominator_vector(self)
        den = tuple(max(x, 0) for x in d)
        num = self.shift(den)
        num_s = num.to_str(var)
        if not any(den):
            return num_s
        if len(num) > 1:
            num_s = f"({num_s})"
        den_s = _monomial_str(den, var)
        if sum(1 for x in den if x) > 1 or any(x > 1 for x in den):
            den_s = f"({den_s})"
        return f"{num_s} / {den_s}"

    def raw_str(self, var: str = "y") -> str:
        """Machine form ``y1^-1*y2^-1*(...)``: reduced monomial prefix times numerator."""
        f, d = reduced_form(self)
        prefix = _monomial_str(tuple(-x for x in d), var)
        if f == 1:
            return prefix or "1"
        body = f.to_str(var)
        if not prefix:
            return body
        return f"{prefix}*({body})"

    def __str__(self) -> str:
        return self.fraction_str()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.raw_str()!r})"


def _monomial_str(exps: Monomial, var: str) -> str:
    bits = []
    for i, x in enumerate(exps):
        if x == 1:
            bits.append(f"{var}{i + 1}")
        elif x:
            bits.append(f"{var}{i + 1}^{x}")
    return "*".join(bits)


def variables(n: int) -> tuple[LaurentPoly, ...]:
    return tuple(LaurentPoly.variable(i, n) for i in range(n))


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


_BASE = 1 << 32
_HALF = _BASE >> 1
_LIMIT = _BASE >> 2


def _too_wide(p: LaurentPoly) -> bool:
    # a product's exponents must stay inside one signed 32-bit digit
    return any(x >= _LIMIT or x <= -_LIMIT for e in p._terms for x in e)


def _pack(e: Monomial) -> int:
    v = 0
    for x in reversed(e):
        v = v * _BASE + x
    return v


def _unpack(v: int, n: int) -> Monomial:
    out = []
    for _ in range(n):
        d = v % _BASE
        if d >= _HALF:
            d -= _BASE
        out.append(d)
        v = (v - d) // _BASE
    return tuple(out)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``r * q == p`` or raise :class:`NonExactDivision`.

    Both operands are shifted to polynomials free of monomial factors, then
    ``P`` is long-divided by the graded-lex leading term of ``Q``.  With a
    single divisor the remainder vanishes exactly when ``Q`` divides ``P``.
    """
    if q.n != p.n:
        raise ValueError("ambient mismatch")
    if q.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if p.is_zero():
        return p
    n = p.n
    pm, qm = p.min_exponents(), q.min_exponents()
    shift = tuple(a - b for a, b in zip(pm, qm))
    if q.is_monomial():
        (qe, qc), = q._terms.items()
        out = {}
        for e, c in p._terms.items():
            if c % qc:
                raise NonExactDivision(f"coefficient {c} not divisible by {qc}")
            out[tuple(a - b for a, b in zip(e, qe))] = c // qc
        return LaurentPoly._raw(n, out)
    rem = {tuple(a - b for a, b in zip(e, pm)): c for e, c in p._terms.items()}
    Q = [(tuple(a - b for a, b in zip(e, qm)), c) for e, c in q._terms.items()]
    Q.sort(key=lambda t: grlex_key(t[0]), reverse=True)
    (lt_e, lt_c), rest = Q[0], Q[1:]
    quot = {}
    while rem:
        e = max(rem, key=grlex_key)
        c = rem[e]
        if not _divides(lt_e, e) or c % lt_c:
            raise NonExactDivision(
                f"{p.raw_str()} is not divisible by {q.raw_str()}"
            )
        m = tuple(a - b for a, b in zip(e, lt_e))
        qc = c // lt_c
        quot[m] = qc
        del rem[e]
        for fe, fc in rest:
            t = tuple(a + b for a, b in zip(fe, m))
            v = rem.get(t, 0) - qc * fc
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return LaurentPoly._raw(n, {tuple(a + b for a, b in zip(e, shift)): c for e, c in quot.items()})


def denominator_vector(p: LaurentPoly) -> tuple[int, ...]:
    """Exponents ``d`` with ``p = f / prod(y_i^d_i)`` and ``f`` free of every ``y_i``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no denominator vector")
    return tuple(-x for x in p.min_exponents())


def reduced_form(p: LaurentPoly) -> tuple[LaurentPoly, tuple[int, ...]]:
    """``(f, d)`` with ``p = f / y^d``; ``f`` is a polynomial with no monomial factor."""
    d = denominator_vector(p)
    return p.shift(d), d


def positivity_check(f: LaurentPoly) -> bool:
    """True iff ``f(e_i) > 0`` for every ``i``, ``e_i`` being all ones but a 0 at ``i``."""
    if not f.is_polynomial():
        raise ValueError("positivity is defined for polynomials only")
    n = f.n
    for i in range(n):
        point = [1] * n
        point[i] = 0
        if f.evaluate(point) <= 0:
            return False
    return True


# ---------------------------------------------------------------------------
# parsing display forms (golden files)


def _int_literal(node) -> int:
    sign = 1
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        sign, node = -1, node.operand
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return sign * node.value
    raise ValueError("exponents must be integer literals")


def parse_laurent(text: str, n: int, var: str = "y") -> LaurentPoly:
    """Parse expressions such as ``((y1+y3)^2 + y2)/(y1*y2*y3)``.

    Supports ``+ - * / ^`` (``**`` too), parentheses, integer constants and
    variables ``<var>1 .. <var>n``.  Every ``/`` is an exact Laurent division.
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None

    def ev(node) -> LaurentPoly:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return LaurentPoly.constant(node.value, n)
        if isinstance(node, ast.Name):
            name = node.id
            if name.startswith(var) and name[len(var):].isdigit():
                i = int(name[len(var):])
                if 1 <= i <= n:
                    return LaurentPoly.variable(i - 1, n)
            raise ValueError(f"unknown variable {name!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                return ev(node.left) ** _int_literal(node.right)
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return exact_div(a, b)
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)
