"""First-order arithmetic: syntax trees, parsing, printing, evaluation.

The language has function symbols 0, S, +, * , relation symbols = and >,
connectives ! (not), & (and), | (or), and the quantifiers forall/exists.
Implication is surface sugar only: ``A -> B`` parses to ``!A | B``.

Concrete ASCII grammar (documented bit-exact in docs/grammar.md):

    formula  := or_f ('->' formula)?          (right assoc, expands to !_|_)
    or_f     := and_f ('|' and_f)*            (left assoc)
    and_f    := unary ('&' unary)*            (left assoc)
    unary    := '!' unary | quantifier | atom | '(' formula ')'
    quantifier := ('forall'|'exists') var '.' formula   (body extends right)
    atom     := term ('='|'>') term
    term     := factor (('+'|'*') ...)        ('*' binds over '+', left assoc)
    factor   := '0' | digits | var | 'S' factor | '(' term ')'

Variables are lowercase identifiers ([a-z][a-z0-9_]*) other than the two
quantifier keywords; digit sequences are numeral sugar (2 == SS0).

Canonical printing parenthesizes every atom, binary node and quantifier,
so a formula's *symbol count* is well defined as the number of lexical
tokens of its canonical print.  All syntax values are immutable and
hashable.
"""

from dataclasses import dataclass
from typing import Iterator, Optional


# ---------------------------------------------------------------- syntax

class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Succ(Term):
    arg: Term


@dataclass(frozen=True)
class Plus(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Times(Term):
    left: Term
    right: Term


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Gt(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


ZERO = Zero()


def imp(a: Formula, b: Formula) -> Formula:
    """The expansion of a -> b."""
    return Or(Not(a), b)


def numeral(n: int) -> Term:
    """n applications of S to 0."""
    if n < 0:
        raise ValueError("numerals are non-negative")
    t: Term = ZERO
    for _ in range(n):
        t = Succ(t)
    return t


class CaptureError(ValueError):
    """Substitution would move a variable of the term under its binder."""


# ------------------------------------------------------------- traversal

def term_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Succ):
        return term_vars(t.arg)
    if isinstance(t, (Plus, Times)):
        return term_vars(t.left) | term_vars(t.right)
    return frozenset()


def free_vars(f: Formula) -> frozenset[str]:
    """Variables with at least one free occurrence."""
    if isinstance(f, (Eq, Gt)):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (And, Or)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (Forall, Exists)):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


def _subst_term(t: Term, x: str, r: Term) -> Term:
    if isinstance(t, Var):
        return r if t.name == x else t
    if isinstance(t, Succ):
        return Succ(_subst_term(t.arg, x, r))
    if isinstance(t, Plus):
        return Plus(_subst_term(t.left, x, r), _subst_term(t.right, x, r))
    if isinstance(t, Times):
        return Times(_subst_term(t.left, x, r), _subst_term(t.right, x, r))
    return t


def substitute_checked(f: Formula, x: str, t: Term) -> Formula:
    """Replace free occurrences of x by t, refusing variable capture."""
    tv = term_vars(t)

    def go(g: Formula) -> Formula:
        if isinstance(g, Eq):
            return Eq(_subst_term(g.left, x, t), _subst_term(g.right, x, t))
        if isinstance(g, Gt):
            return Gt(_subst_term(g.left, x, t), _subst_term(g.right, x, t))
        if isinstance(g, Not):
            return Not(go(g.body))
        if isinstance(g, And):
            return And(go(g.left), go(g.right))
        if isinstance(g, Or):
            return Or(go(g.left), go(g.right))
        if isinstance(g, (Forall, Exists)):
            if g.var == x:
                return g
            if g.var in tv and x in free_vars(g.body):
                raise CaptureError(f"substituting {print_term(t)} for {x} "
                                   f"captures {g.var}")
            return type(g)(g.var, go(g.body))
        raise TypeError(f"not a formula: {g!r}")

    return go(f)


def substitute(f: Formula, x: str, t: Term) -> Formula:
    """Replace free occurrences of x by the *closed* term t.

    Closedness rules out capture; open terms are rejected.
    """
    if term_vars(t):
        raise ValueError("substitute requires a closed term")
    return substitute_checked(f, x, t)


def nnf(f: Formula) -> Formula:
    """Negation normal form: push ! down to atoms, toggling &/| and
    forall/exists; idempotent and equivalent under standard semantics."""
    if isinstance(f, (Eq, Gt)):
        return f
    if isinstance(f, And):
        return And(nnf(f.left), nnf(f.right))
    if isinstance(f, Or):
        return Or(nnf(f.left), nnf(f.right))
    if isinstance(f, Forall):
        return Forall(f.var, nnf(f.body))
    if isinstance(f, Exists):
        return Exists(f.var, nnf(f.body))
    g = f.body
    if isinstance(g, (Eq, Gt)):
        return f
    if isinstance(g, Not):
        return nnf(g.body)
    if isinstance(g, And):
        return Or(nnf(Not(g.left)), nnf(Not(g.right)))
    if isinstance(g, Or):
        return And(nnf(Not(g.left)), nnf(Not(g.right)))
    if isinstance(g, Forall):
        return Exists(g.var, nnf(Not(g.body)))
    return Forall(g.var, nnf(Not(g.body)))


def is_nnf(f: Formula) -> bool:
    if isinstance(f, (Eq, Gt)):
        return True
    if isinstance(f, Not):
        return isinstance(f.body, (Eq, Gt))
    if isinstance(f, (And, Or)):
        return is_nnf(f.left) and is_nnf(f.right)
    return is_nnf(f.body)


# ------------------------------------------------------------ evaluation

def _eval_term(t: Term, env: dict[str, int]) -> int:
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Var):
        if t.name not in env:
            raise ValueError(f"open term: unbound variable {t.name}")
        return env[t.name]
    if isinstance(t, Succ):
        return _eval_term(t.arg, env) + 1
    if isinstance(t, Plus):
        return _eval_term(t.left, env) + _eval_term(t.right, env)
    return _eval_term(t.left, env) * _eval_term(t.right, env)


def eval_closed_term(t: Term) -> int:
    """Value of a closed term under the standard interpretation."""
    return _eval_term(t, {})


def eval_atomic(s: Formula) -> bool:
    """Truth of a closed atomic or negated-atomic sentence."""
    if isinstance(s, Not):
        return not eval_atomic(s.body)
    if isinstance(s, Eq):
        return _eval_term(s.left, {}) == _eval_term(s.right, {})
    if isinstance(s, Gt):
        return _eval_term(s.left, {}) > _eval_term(s.right, {})
    raise ValueError("eval_atomic needs an atomic or negated-atomic sentence")


@dataclass(frozen=True)
class TruthB:
    """Bounded-domain verdict: TrueAt(B), FalseAt(B), or Unknown.

    The bound is recorded for auditability.  The verdict is exact truth
    over the naturals whenever every quantifier of the sentence is
    semantically bounded by B, and a domain-B verdict otherwise.
    """

    value: Optional[bool]
    bound: Optional[int]

    @staticmethod
    def true_at(bound: int) -> "TruthB":
        return TruthB(True, bound)

    @staticmethod
    def false_at(bound: int) -> "TruthB":
        return TruthB(False, bound)

    def __str__(self) -> str:
        if self.value is None:
            return "UNKNOWN"
        return f"{'TRUE' if self.value else 'FALSE'}@{self.bound}"


#: Verdict for callers that skipped evaluation.
UNKNOWN = TruthB(None, None)


def eval_bounded(s: Formula, bound: int) -> TruthB:
    """Evaluate a sentence with every quantifier ranging over {0..bound}.

    Terms are evaluated exactly (their values may exceed the bound); only
    quantifier ranges are restricted.  Negation is handled at any depth,
    so the verdict is invariant under `nnf`.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if free_vars(s):
        raise ValueError("eval_bounded needs a sentence (no free variables)")

    def ev(f: Formula, env: dict[str, int]) -> bool:
        if isinstance(f, Eq):
            return _eval_term(f.left, env) == _eval_term(f.right, env)
        if isinstance(f, Gt):
            return _eval_term(f.left, env) > _eval_term(f.right, env)
        if isinstance(f, Not):
            return not ev(f.body, env)
        if isinstance(f, And):
            return ev(f.left, env) and ev(f.right, env)
        if isinstance(f, Or):
            return ev(f.left, env) or ev(f.right, env)
        if isinstance(f, Forall):
            return all(ev(f.body, {**env, f.var: n}) for n in range(bound + 1))
        return any(ev(f.body, {**env, f.var: n}) for n in range(bound + 1))

    return TruthB(ev(s, {}), bound)


# -------------------------------------------------------------- printing

def print_term(t: Term) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Succ):
        return "S" + print_term(t.arg)
    if isinstance(t, Plus):
        return f"({print_term(t.left)}+{print_term(t.right)})"
    return f"({print_term(t.left)}*{print_term(t.right)})"


def print_formula(f: Formula) -> str:
    """Canonical fully parenthesized print; parses back to the same tree."""
    if isinstance(f, Eq):
        return f"({print_term(f.left)}={print_term(f.right)})"
    if isinstance(f, Gt):
        return f"({print_term(f.left)}>{print_term(f.right)})"
    if isinstance(f, Not):
        return "!" + print_formula(f.body)
    if isinstance(f, And):
        return f"({print_formula(f.left)}&{print_formula(f.right)})"
    if isinstance(f, Or):
        return f"({print_formula(f.left)}|{print_formula(f.right)})"
    if isinstance(f, Forall):
        return f"(forall {f.var}.{print_formula(f.body)})"
    if isinstance(f, Exists):
        return f"(exists {f.var}.{print_formula(f.body)})"
    raise TypeError(f"not a formula: {f!r}")


def term_symbols(t: Term) -> int:
    if isinstance(t, (Zero, Var)):
        return 1
    if isinstance(t, Succ):
        return 1 + term_symbols(t.arg)
    return 3 + term_symbols(t.left) + term_symbols(t.right)


def symbol_count(f: Formula) -> int:
    """Number of lexical tokens in the canonical print of f."""
    if isinstance(f, (Eq, Gt)):
        return 3 + term_symbols(f.left) + term_symbols(f.right)
    if isinstance(f, Not):
        return 1 + symbol_count(f.body)
    if isinstance(f, (And, Or)):
        return 3 + symbol_count(f.left) + symbol_count(f.right)
    return 5 + symbol_count(f.body)


# --------------------------------------------------------------- parsing

class FormulaSyntaxError(ValueError):
    """Bad formula text; `position` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


_KEYWORDS = ("forall", "exists")
_PUNCT = ("->", "(", ")", "!", "&", "|", "=", ">", "+", "*", ".")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    # (kind, value, offset); kinds: punct, S, var, digits, keyword
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch in " \t\r\n":
            pos += 1
            continue
        if text.startswith("->", pos):
            tokens.append(("punct", "->", pos))
            pos += 2
            continue
        if ch in "()!&|=>+*.":
            tokens.append(("punct", ch, pos))
            pos += 1
            continue
        if ch == "S":
            tokens.append(("S", "S", pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(("digits", text[start:pos], start))
            continue
        if ch.islower():
            start = pos
            while pos < n and (text[pos].islower() or text[pos].isdigit() or text[pos] == "_"):
                pos += 1
            word = text[start:pos]
            tokens.append(("keyword" if word in _KEYWORDS else "var", word, start))
            continue
        raise FormulaSyntaxError(f"unknown symbol {ch!r}", pos)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error(self, message: str):
        tok = self.peek()
        offset = tok[2] if tok else len(self.text)
        raise FormulaSyntaxError(message, offset)

    def take_punct(self, value: str):
        tok = self.peek()
        if tok is None or tok[0] != "punct" or tok[1] != value:
            self.error(f"expected {value!r}")
        self.pos += 1

    def at_punct(self, *values: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "punct" and tok[1] in values

    def formula(self) -> Formula:
        left = self.or_f()
        if self.at_punct("->"):
            self.pos += 1
            return imp(left, self.formula())
        return left

    def or_f(self) -> Formula:
        left = self.and_f()
        while self.at_punct("|"):
            self.pos += 1
            left = Or(left, self.and_f())
        return left

    def and_f(self) -> Formula:
        left = self.unary()
        while self.at_punct("&"):
            self.pos += 1
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok is None:
            self.error("expected a formula")
        if tok[0] == "punct" and tok[1] == "!":
            self.pos += 1
            return Not(self.unary())
        if tok[0] == "keyword":
            self.pos += 1
            var = self.peek()
            if var is None or var[0] != "var":
                self.error("expected a variable after quantifier")
            self.pos += 1
            self.take_punct(".")
            body = self.formula()
            return Forall(var[1], body) if tok[1] == "forall" else Exists(var[1], body)
        # an atom (term rel term), possibly starting with '(' that may
        # instead open a grouped formula: try the atom reading first
        saved = self.pos
        try:
            return self.atom()
        except FormulaSyntaxError:
            self.pos = saved
        if tok[0] == "punct" and tok[1] == "(":
            self.pos += 1
            inner = self.formula()
            self.take_punct(")")
            return inner
        self.error("expected a formula")

    def atom(self) -> Formula:
        left = self.term()
        tok = self.peek()
        if tok is not None and tok[0] == "punct" and tok[1] in ("=", ">"):
            self.pos += 1
            right = self.term()
            return Eq(left, right) if tok[1] == "=" else Gt(left, right)
        self.error("expected '=' or '>'")

    def term(self) -> Term:
        left = self.mul()
        while self.at_punct("+"):
            self.pos += 1
            left = Plus(left, self.mul())
        return left

    def mul(self) -> Term:
        left = self.factor()
        while self.at_punct("*"):
            self.pos += 1
            left = Times(left, self.factor())
        return left

    def factor(self) -> Term:
        tok = self.peek()
        if tok is None:
            self.error("expected a term")
        if tok[0] == "S":
            self.pos += 1
            return Succ(self.factor())
        if tok[0] == "digits":
            self.pos += 1
            return numeral(int(tok[1]))
        if tok[0] == "var":
            self.pos += 1
            return Var(tok[1])
        if tok[0] == "punct" and tok[1] == "(":
            self.pos += 1
            inner = self.term()
            self.take_punct(")")
            return inner
        self.error("expected a term")


def parse_formula(text: str) -> Formula:
    """Parse the ASCII grammar; -> is expanded to !_|_ at parse time."""
    p = _Parser(text)
    f = p.formula()
    if p.peek() is not None:
        p.error("trailing input after formula")
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.peek() is not None:
        p.error("trailing input after term")
    return t


# ------------------------------------------------------------ generators

def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.body)
    elif isinstance(f, (And, Or)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, (Forall, Exists)):
        yield from subformulas(f.body)
