"""Exact integer polynomials in x1..xn and Laurent polynomials in v.

Every ring computation in the package runs through the two value types
defined here.  Coefficients are Python integers; nothing is ever divided
except by monic leading terms, so rationals never appear.

The monomial order is lexicographic with x_n > x_{n-1} > ... > x_1.  It is
implemented once, in :func:`monomial_key`, and every leading-term decision
elsewhere goes through it.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

Monomial = Tuple[int, ...]


def monomial_key(exponents: Sequence[int]) -> Tuple[int, ...]:
    """Sort key realising lex order with x_n largest."""
    return tuple(reversed(exponents))


def monomial_degree(exponents: Sequence[int]) -> int:
    """Polynomial degree of a monomial, with deg x_i = 2."""
    return 2 * sum(exponents)


class IntPolynomial:
    """Sparse polynomial with integer coefficients in ``n`` variables.

    Instances are immutable.  Terms are kept in a dict keyed by exponent
    tuples; zero coefficients are never stored.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | None = None):
        if n < 0:
            raise ValueError("variable count must be non-negative")
        clean: Dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} does not have {n} slots")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            if coeff:
                clean[mono] = clean.get(mono, 0) + int(coeff)
                if not clean[mono]:
                    del clean[mono]
        self.n = n
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, n: int) -> "IntPolynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "IntPolynomial":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def constant(cls, n: int, c: int) -> "IntPolynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> "IntPolynomial":
        exps = tuple(exponents)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def variable(cls, n: int, i: int) -> "IntPolynomial":
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"x{i} is not a variable of a ring in {n} variables")
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): 1})

    # access
    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        """Terms in ascending monomial order."""
        for mono in sorted(self._terms, key=monomial_key):
            yield mono, self._terms[mono]

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self._terms, key=monomial_key)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def degree(self) -> int:
        """Degree with deg x_i = 2; raises for non-homogeneous input."""
        degs = {monomial_degree(m) for m in self._terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else 0

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic
    def _check(self, other: "IntPolynomial") -> None:
        if not isinstance(other, IntPolynomial):
            raise TypeError("expected an IntPolynomial")
        if other.n != self.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial.constant(self.n, other)
        self._check(other)
        return other

    def __add__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return IntPolynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(self.n, {m: c * other for m, c in self._terms.items()})
        self._check(other)
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return IntPolynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial.one(self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(self.n, other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def swap(self, i: int) -> "IntPolynomial":
        """Apply s_i, exchanging x_i and x_{i+1}."""
        if not 1 <= i < self.n:
            raise ValueError(f"s_{i} is not a simple reflection for n={self.n}")
        out = {}
        for mono, coeff in self._terms.items():
            m = list(mono)
            m[i - 1], m[i] = m[i], m[i - 1]
            out[tuple(m)] = coeff
        return IntPolynomial(self.n, out)

    def divide_monomial(self, exponents: Sequence[int]) -> "IntPolynomial":
        """Exact division by a monomial; raises if some term is not divisible."""
        out = {}
        for mono, coeff in self._terms.items():
            q = tuple(a - b for a, b in zip(mono, exponents))
            if any(e < 0 for e in q):
                raise ValueError("monomial does not divide every term")
            out[q] = coeff
        return IntPolynomial(self.n, out)

    def evaluate_variables(self, targets: Sequence[int], n: int) -> "IntPolynomial":
        """Substitute x_i -> x_{targets[i-1]} in a ring of ``n`` variables."""
        if len(targets) != self.n:
            raise ValueError("need one target variable per source variable")
        out: Dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            new = [0] * n
            for e, t in zip(mono, targets):
                new[t - 1] += e
            key = tuple(new)
            out[key] = out.get(key, 0) + coeff
        return IntPolynomial(n, out)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.n}, {format_polynomial(self)!r})"


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


# text syntax --------------------------------------------------------------

def _format_monomial(mono: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_polynomial(p: IntPolynomial) -> str:
    """Render as e.g. ``3*x1^2*x2 - x4``, terms in ascending monomial order."""
    if p.is_zero():
        return "0"
    chunks = []
    for mono, coeff in p.items():
        body = _format_monomial(mono)
        mag = abs(coeff)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not chunks:
            chunks.append(text if coeff > 0 else f"-{text}")
        else:
            chunks.append(("+ " if coeff > 0 else "- ") + text)
    return " ".join(chunks)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, n: int) -> IntPolynomial:
    """Inverse of :func:`format_polynomial` for a ring in ``n`` variables."""
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial text")
    out: Dict[Monomial, int] = {}
    pos = 0
    while pos < len(src):
        match = _TERM.match(src, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse polynomial near {src[pos:]!r}")
        sign = -1 if match.group(1) == "-" else 1
        coeff = sign
        exps = [0] * n
        for factor in match.group(2).strip().split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r}")
            idx = int(fm.group(1))
            if not 1 <= idx <= n:
                raise ValueError(f"x{idx} out of range for n={n}")
            exps[idx - 1] += int(fm.group(2) or 1)
        key = tuple(exps)
        out[key] = out.get(key, 0) + coeff
        pos = match.end()
    return IntPolynomial(n, out)


# complete symmetric polynomials and Demazure operators --------------------

def complete_symmetric(j: int, variables: Sequence[int], n: int) -> IntPolynomial:
    """h_j in the listed variables (1-based indices) inside a ring of n variables.

    h_0 = 1 and h_j() = 0 for j >= 1; negative j gives 0.
    """
    if j < 0:
        return IntPolynomial.zero(n)
    if j == 0:
        return IntPolynomial.one(n)
    out: Dict[Monomial, int] = {}
    for combo in combinations_with_replacement(variables, j):
        exps = [0] * n
        for v in combo:
            exps[v - 1] += 1
        out[tuple(exps)] = 1
    return IntPolynomial(n, out)


def _demazure_monomial(mono: Monomial, i: int) -> Dict[Monomial, int]:
    """(m - s_i m)/(x_i - x_{i+1}) for a single monomial."""
    a, b = mono[i - 1], mono[i]
    if a == b:
        return {}
    sign = 1
    if a < b:
        a, b, sign = b, a, -1
    # (x^a y^b - x^b y^a)/(x - y) = (xy)^b * h_{a-b-1}(x, y)
    out = {}
    top = a - b - 1
    for t in range(top + 1):
        m = list(mono)
        m[i - 1] = b + top - t
        m[i] = b + t
        out[tuple(m)] = sign
    return out


def demazure(i: int, f: IntPolynomial) -> IntPolynomial:
    """The divided difference (f - s_i f)/(x_i - x_{i+1})."""
    if not 1 <= i < f.n:
        raise ValueError(f"demazure index {i} outside 1..{f.n - 1}")
    out: Dict[Monomial, int] = {}
    for mono, coeff in f._terms.items():
        for m, s in _demazure_monomial(mono, i).items():
            out[m] = out.get(m, 0) + s * coeff
    return IntPolynomial(f.n, out)


def p_operator(i: int, f: IntPolynomial) -> IntPolynomial:
    """P_i(f) = f - x_i * d_i(f); the result is s_i-invariant."""
    return f - IntPolynomial.variable(f.n, i) * demazure(i, f)


# Laurent polynomials in v ---------------------------------------------------

class LaurentV:
    """Integer Laurent polynomial in v; immutable, zero terms dropped."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentV":
        return cls({exponent: coeff})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "LaurentV":
        """Sum of v^e over the given exponents, with multiplicity."""
        out: Dict[int, int] = {}
        for e in exponents:
            out[e] = out.get(e, 0) + 1
        return cls(out)

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._coeffs)

    def items(self) -> Iterator[Tuple[int, int]]:
        for e in sorted(self._coeffs):
            yield e, self._coeffs[e]

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_degree(self) -> int:
        return min(self._coeffs)

    def max_degree(self) -> int:
        return max(self._coeffs)

    def at_one(self) -> int:
        return sum(self._coeffs.values())

    def _coerce(self, other) -> "LaurentV":
        if isinstance(other, int):
            return LaurentV({0: other})
        if not isinstance(other, LaurentV):
            raise TypeError("expected a LaurentV")
        return other

    def __add__(self, other) -> "LaurentV":
        other = self._coerce(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentV(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentV":
        return LaurentV({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other) -> "LaurentV":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentV":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentV":
        other = self._coerce(other)
        out: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentV(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentV":
        """Multiply by v^k."""
        return LaurentV({e + k: c for e, c in self._coeffs.items()})

    def substitute_square(self) -> "LaurentV":
        """f(v) -> f(v^2)."""
        return LaurentV({2 * e: c for e, c in self._coeffs.items()})

    def bar(self) -> "LaurentV":
        """The bar involution v -> v^{-1}."""
        return LaurentV({-e: c for e, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentV({0: other})
        if not isinstance(other, LaurentV):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentV({format_laurent(self)!r})"


def laurent_add(a: LaurentV, b: LaurentV) -> LaurentV:
    return a + b


def laurent_mul(a: LaurentV, b: LaurentV) -> LaurentV:
    return a * b


def laurent_bar(a: LaurentV) -> LaurentV:
    return a.bar()


def format_laurent(a: LaurentV) -> str:
    """Compact rendering such as ``v^-2+2+v^2`` (ascending exponents)."""
    if a.is_zero():
        return "0"
    out = []
    for e, c in a.items():
        if e == 0:
            body = str(abs(c))
        else:
            var = "v" if e == 1 else f"v^{e}"
            body = var if abs(c) == 1 else f"{abs(c)}*{var}"
        if out:
            out.append(("+" if c > 0 else "-") + body)
        else:
            out.append(body if c > 0 else "-" + body)
    return "".join(out)


_LTERM = re.compile(r"([+-]?)(?:(\d+)\*?)?(v(?:\^(-?\d+))?)?")


def parse_laurent(text: str) -> LaurentV:
    """Inverse of :func:`format_laurent`."""
    src = text.replace(" ", "")
    if not src:
        raise ValueError("empty Laurent polynomial text")
    out: Dict[int, int] = {}
    pos = 0
    while pos < len(src):
        m = _LTERM.match(src, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse Laurent polynomial near {src[pos:]!r}")
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coeff = -coeff
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exp = 0
        out[exp] = out.get(exp, 0) + coeff
        pos = m.end()
    return LaurentV(out)


def quantum_integer(m: int) -> LaurentV:
    """[m]_0 = 1 + v^2 + ... + v^{2(m-1)} = (v^{2m} - 1)/(v^2 - 1)."""
    return LaurentV({2 * i: 1 for i in range(m)})


def quantum_factorial(m: int) -> LaurentV:
    out = LaurentV({0: 1})
    for i in range(1, m + 1):
        out = out * quantum_integer(i)
    return out
