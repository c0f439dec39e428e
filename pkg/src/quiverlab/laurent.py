"""Exact integer-coefficient Laurent polynomials in n commuting variables.

This is the value type of every cluster variable and cluster character.
Terms are held sparsely as {exponent tuple: nonzero int}; all arithmetic is
exact, and rationals only ever appear in `eval_at`.  The canonical term order
is graded lexicographic (variable index ascending, larger terms first), which
makes `render` bit-stable across runs.
"""

import heapq
from fractions import Fraction

from quiverlab import termops
from quiverlab.errors import DimensionMismatch, NotDivisible, ParseError


def _grlex_key(exp):
    # Sort key for descending graded-lex: bigger grade first, then
    # lexicographically bigger exponent vector first.
    return (-sum(exp), tuple(-e for e in exp))


class LaurentPoly:
    """Immutable-by-convention sparse Laurent polynomial."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = dict(terms) if terms else {}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, c, n):
        return cls(n, {(0,) * n: c} if c else None)

    @classmethod
    def variable(cls, i, n):
        """The generator x_i (1-based)."""
        if not 1 <= i <= n:
            raise DimensionMismatch(f"variable index {i} outside 1..{n}")
        exp = tuple(1 if j == i - 1 else 0 for j in range(n))
        return cls(n, {exp: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        if coeff == 0:
            return cls(len(exp))
        return cls(len(exp), {tuple(exp): coeff})

    # -- ring ops ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} variables vs {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.n)
        self._check(other)
        return LaurentPoly(self.n, termops.add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.n, termops.scale_terms(self.terms, -1))

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.n)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.n, termops.scale_terms(self.terms, other))
        self._check(other)
        return LaurentPoly(self.n, termops.mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            if len(self.terms) != 1:
                raise NotDivisible("negative power of a non-monomial")
            ((exp, coeff),) = self.terms.items()
            if coeff not in (1, -1):
                raise NotDivisible(f"cannot invert coefficient {coeff}")
            inv = LaurentPoly(self.n, {tuple(-e for e in exp): coeff})
            return inv ** (-k)
        result = LaurentPoly.constant(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"

    # -- queries -----------------------------------------------------------

    def is_one(self):
        return self.terms == {(0,) * self.n: 1}

    def min_exponents(self):
        """Coordinatewise minimum exponent over all terms (0 if empty)."""
        if not self.terms:
            return (0,) * self.n
        mins = [0] * self.n
        first = True
        for exp in self.terms:
            if first:
                mins = list(exp)
                first = False
            else:
                for i, e in enumerate(exp):
                    if e < mins[i]:
                        mins[i] = e
        return tuple(mins)

    def coefficients(self):
        return list(self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    # -- exact division ----------------------------------------------------

    def div_exact(self, den):
        """Exact quotient self/den; raises NotDivisible on any remainder.

        Both operands are shifted by monomials until all exponents are
        nonnegative, reducing to ordinary multivariate division with
        graded-lex leading terms; the shift is undone on the quotient.
        """
        self._check(den)
        if not den.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return LaurentPoly.zero(self.n)

        shift_num = tuple(-e for e in self.min_exponents())
        shift_den = tuple(-e for e in den.min_exponents())
        num_terms = termops.shift_terms(self.terms, shift_num)
        den_terms = termops.shift_terms(den.terms, shift_den)

        den_lead = min(den_terms, key=_grlex_key)
        den_lead_coeff = den_terms[den_lead]

        quotient = {}
        rem = dict(num_terms)
        # Lazy max-heap of candidate leading exponents (smaller key = more
        # leading); stale entries are skipped when popped.
        heap = [(_grlex_key(e), e) for e in rem]
        heapq.heapify(heap)
        while rem:
            lead = heap[0][1]
            if lead not in rem:
                heapq.heappop(heap)
                continue
            lead_coeff = rem[lead]
            exp = tuple(a - b for a, b in zip(lead, den_lead))
            if any(e < 0 for e in exp) or lead_coeff % den_lead_coeff:
                raise NotDivisible(
                    f"{self.render()} is not divisible by {den.render()}"
                )
            c = lead_coeff // den_lead_coeff
            quotient[exp] = c
            for dexp, dcoeff in den_terms.items():
                target = tuple(a + b for a, b in zip(exp, dexp))
                old = rem.get(target)
                value = (old or 0) - c * dcoeff
                if value:
                    rem[target] = value
                    if old is None:
                        heapq.heappush(heap, (_grlex_key(target), target))
                elif old is not None:
                    del rem[target]
        # Undo the monomial shifts: quotient gains shift_den - shift_num.
        back = tuple(d - n_ for d, n_ in zip(shift_den, shift_num))
        return LaurentPoly(self.n, termops.shift_terms(quotient, back))

    # -- evaluation --------------------------------------------------------

    def eval_at(self, point):
        """Substitute a rational point with no zero coordinate."""
        if len(point) != self.n:
            raise DimensionMismatch(f"point has {len(point)} coordinates, need {self.n}")
        values = [Fraction(p) for p in point]
        if any(v == 0 for v in values):
            raise ZeroDivisionError("evaluation point has a zero coordinate")
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            term = Fraction(coeff)
            for v, e in zip(values, exp):
                if e:
                    term *= v**e
            total += term
        return total

    # -- text --------------------------------------------------------------

    def _render_monomial(self, exp, coeff, star_coeff=True):
        factors = []
        for i, e in enumerate(exp):
            if e == 0:
                continue
            factors.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
        mag = abs(coeff)
        if not factors:
            return str(mag)
        body = "*".join(factors)
        if mag != 1:
            return f"{mag}*{body}" if star_coeff else f"{mag}{body}"
        return body

    def _render_sum(self, terms):
        pieces = []
        for i, (exp, coeff) in enumerate(terms):
            mono = self._render_monomial(exp, coeff)
            if i == 0:
                pieces.append(f"-{mono}" if coeff < 0 else mono)
            else:
                pieces.append(f" - {mono}" if coeff < 0 else f" + {mono}")
        return "".join(pieces)

    def render(self, mode="canonical"):
        """Canonical mode is a flat Laurent sum; display mode pulls the
        minimal monomial denominator out front, e.g. (x2*x3 + 1)/x1."""
        if not self.terms:
            return "0"
        if mode == "canonical":
            return self._render_sum(self.sorted_terms())
        if mode != "display":
            raise ValueError(f"unknown render mode {mode!r}")
        mins = self.min_exponents()
        denom_exp = tuple(-min(0, m) for m in mins)
        if not any(denom_exp):
            return self._render_sum(self.sorted_terms())
        num = LaurentPoly(self.n, termops.shift_terms(self.terms, denom_exp))
        num_str = num._render_sum(num.sorted_terms())
        if len(num.terms) > 1:
            num_str = f"({num_str})"
        den_str = self._render_monomial(denom_exp, 1)
        if sum(1 for e in denom_exp if e) > 1:
            den_str = f"({den_str})"
        return f"{num_str}/{den_str}"

    @classmethod
    def parse(cls, text, n=None):
        return _parse(text, n)


# -- parser ----------------------------------------------------------------
#
# Grammar (whitespace free between tokens):
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := base ['^' int]
#   base   := INT | 'x' INT | '(' expr ')'
#
# '/' requires a single-term divisor; '^' with a negative exponent requires a
# monomial base.  Variable count defaults to the largest index seen.


class _Parser:
    def __init__(self, text, n):
        self.text = text
        self.pos = 0
        self.explicit_n = n
        self.max_index = 0

    def error(self, message):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def read_int(self):
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_expr(self):
        negate = False
        if self.peek() == "-":
            self.pos += 1
            negate = True
        result = self.parse_term()
        if negate:
            result = _apply_neg(result)
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                result = ("add", result, self.parse_term())
            elif ch == "-":
                self.pos += 1
                result = ("sub", result, self.parse_term())
            else:
                return result

    def parse_term(self):
        result = self.parse_factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                result = ("mul", result, self.parse_factor())
            elif ch == "/":
                self.pos += 1
                result = ("div", result, self.parse_factor())
            else:
                return result

    def parse_factor(self):
        base = self.parse_base()
        if self.peek() == "^":
            self.pos += 1
            return ("pow", base, self.read_int())
        return base

    def parse_base(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            if not self.take(")"):
                self.error("expected ')'")
            return inner
        if ch == "x":
            self.pos += 1
            idx = self.read_int()
            if idx < 1:
                self.error("variable index must be >= 1")
            self.max_index = max(self.max_index, idx)
            return ("var", idx)
        if ch.isdigit():
            return ("int", self.read_int())
        self.error("expected a number, variable, or '('")


def _apply_neg(node):
    return ("sub", ("int", 0), node)


def _eval_node(node, n):
    kind = node[0]
    if kind == "int":
        return LaurentPoly.constant(node[1], n)
    if kind == "var":
        return LaurentPoly.variable(node[1], n)
    if kind == "add":
        return _eval_node(node[1], n) + _eval_node(node[2], n)
    if kind == "sub":
        return _eval_node(node[1], n) - _eval_node(node[2], n)
    if kind == "mul":
        return _eval_node(node[1], n) * _eval_node(node[2], n)
    if kind == "div":
        num = _eval_node(node[1], n)
        den = _eval_node(node[2], n)
        if len(den.terms) != 1:
            raise ParseError("divisor must be a single term", 0)
        return num.div_exact(den)
    if kind == "pow":
        base = _eval_node(node[1], n)
        return base ** node[2]
    raise AssertionError(f"unknown node {kind}")


def _parse(text, n=None):
    parser = _Parser(text, n)
    tree = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input")
    var_count = n if n is not None else max(parser.max_index, 1)
    if parser.max_index > var_count:
        raise ParseError(
            f"variable x{parser.max_index} exceeds declared count {var_count}", 0
        )
    return _eval_node(tree, var_count)
