"""Hilbert-style proof checking, explosion, and contradiction search.

A proof is a sequence of steps, each a formula plus a justification:

* ``LogicalAxiom(schema, args)`` -- an instance of one of the documented
  logical schemas (propositional, quantifier, equality); the checker
  rebuilds the instance from the arguments and compares structurally.
* ``PAAxiom(index)`` -- the arithmetic axiom list of `peano.pa_axioms`,
  optionally extended by a profile's extra axioms (test harness hook).
* ``InductionAxiom(phi, var, params)`` -- an induction-schema instance.
* ``ModusPonens(i, j)`` -- step j must be ``(step i) -> (this formula)``
  pre-expansion, i.e. structurally ``!(step i) | (this formula)``.
* ``Generalization(i, var)`` -- this formula is ``forall var. (step i)``.

Proof length is the total symbol count of the step formulas in canonical
print (a per-profile switch selects step count instead).  The contradiction
search enumerates *every* checkable proof below a length bound in a fixed
canonical order and reports the first whose conclusion has the shape of a
formula conjoined with its own negation; an empty result is a
machine-checked verification of "no contradiction proof shorter than n"
for this calculus.
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from . import peano
from .formulas import (
    And,
    CaptureError,
    Eq,
    Exists,
    Forall,
    Formula,
    Gt,
    Not,
    Or,
    Plus,
    Succ,
    Term,
    Times,
    Var,
    ZERO,
    free_vars,
    imp,
    parse_formula,
    parse_term,
    print_formula,
    print_term,
    substitute_checked,
    symbol_count,
)

# ------------------------------------------------------------ structure


@dataclass(frozen=True)
class LogicalAxiom:
    schema: str
    args: tuple


@dataclass(frozen=True)
class PAAxiom:
    index: int


@dataclass(frozen=True)
class InductionAxiom:
    phi: Formula
    var: str
    params: tuple[str, ...] = ()


@dataclass(frozen=True)
class ModusPonens:
    antecedent: int  # 1-based earlier step proving A
    implication: int  # 1-based earlier step proving !A | B


@dataclass(frozen=True)
class Generalization:
    source: int
    var: str


Justification = Union[LogicalAxiom, PAAxiom, InductionAxiom, ModusPonens,
                      Generalization]


@dataclass(frozen=True)
class ProofStep:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    steps: tuple[ProofStep, ...]

    @property
    def conclusion(self) -> Optional[Formula]:
        return self.steps[-1].formula if self.steps else None


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    step: Optional[int] = None  # 1-based offending step
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


class SchemaError(ValueError):
    pass


# ------------------------------------------------------ logical schemas

def _need(kind, value, schema):
    types = {"formula": Formula, "term": Term, "var": str}
    if not isinstance(value, types[kind]):
        raise SchemaError(f"{schema} expects a {kind} argument")
    return value


def _subst(phi, x, t, schema):
    try:
        return substitute_checked(phi, x, t)
    except CaptureError as err:
        raise SchemaError(f"capture violation in {schema}: {err}") from err


def _build_inst(phi, x, t):
    return imp(Forall(x, phi), _subst(phi, x, t, "inst"))


def _build_wit(phi, x, t):
    return imp(_subst(phi, x, t, "wit"), Exists(x, phi))


def _build_vac(phi, x):
    if x in free_vars(phi):
        raise SchemaError(f"vac requires {x} not free in the formula")
    return imp(phi, Forall(x, phi))


#: schema id -> (argument kinds, instance builder)
SCHEMAS = {
    # propositional
    "k": (("formula", "formula"), lambda a, b: imp(a, imp(b, a))),
    "s": (("formula", "formula", "formula"),
          lambda a, b, c: imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c)))),
    "and_intro": (("formula", "formula"), lambda a, b: imp(a, imp(b, And(a, b)))),
    "and_left": (("formula", "formula"), lambda a, b: imp(And(a, b), a)),
    "and_right": (("formula", "formula"), lambda a, b: imp(And(a, b), b)),
    "or_left": (("formula", "formula"), lambda a, b: imp(a, Or(a, b))),
    "or_right": (("formula", "formula"), lambda a, b: imp(b, Or(a, b))),
    "or_elim": (("formula", "formula", "formula"),
                lambda a, b, c: imp(imp(a, c), imp(imp(b, c), imp(Or(a, b), c)))),
    "efq": (("formula", "formula"), lambda a, b: imp(Not(a), imp(a, b))),
    "dne": (("formula",), lambda a: imp(Not(Not(a)), a)),
    "raa": (("formula", "formula"),
            lambda a, b: imp(imp(a, b), imp(imp(a, Not(b)), Not(a)))),
    # quantifiers
    "inst": (("formula", "var", "term"), _build_inst),
    "wit": (("formula", "var", "term"), _build_wit),
    "dist": (("formula", "formula", "var"),
             lambda p, q, x: imp(Forall(x, imp(p, q)),
                                 imp(Forall(x, p), Forall(x, q)))),
    "vac": (("formula", "var"), _build_vac),
    # equality
    "eq_refl": (("term",), lambda t: Eq(t, t)),
    "eq_sym": (("term", "term"), lambda s, t: imp(Eq(s, t), Eq(t, s))),
    "eq_trans": (("term", "term", "term"),
                 lambda s, t, u: imp(Eq(s, t), imp(Eq(t, u), Eq(s, u)))),
    "eq_succ": (("term", "term"), lambda s, t: imp(Eq(s, t), Eq(Succ(s), Succ(t)))),
    "eq_plus_l": (("term", "term", "term"),
                  lambda s, t, u: imp(Eq(s, t), Eq(Plus(s, u), Plus(t, u)))),
    "eq_plus_r": (("term", "term", "term"),
                  lambda s, t, u: imp(Eq(s, t), Eq(Plus(u, s), Plus(u, t)))),
    "eq_times_l": (("term", "term", "term"),
                   lambda s, t, u: imp(Eq(s, t), Eq(Times(s, u), Times(t, u)))),
    "eq_times_r": (("term", "term", "term"),
                   lambda s, t, u: imp(Eq(s, t), Eq(Times(u, s), Times(u, t)))),
    "eq_gt_l": (("term", "term", "term"),
                lambda s, t, u: imp(Eq(s, t), imp(Gt(s, u), Gt(t, u)))),
    "eq_gt_r": (("term", "term", "term"),
                lambda s, t, u: imp(Eq(s, t), imp(Gt(u, s), Gt(u, t)))),
}


def build_logical_axiom(schema: str, args: tuple) -> Formula:
    if schema not in SCHEMAS:
        raise SchemaError(f"unknown schema {schema!r}")
    kinds, builder = SCHEMAS[schema]
    if len(args) != len(kinds):
        raise SchemaError(f"{schema} takes {len(kinds)} arguments")
    checked = [_need(kind, a, schema) for kind, a in zip(kinds, args)]
    return builder(*checked)


# -------------------------------------------------------------- profile

#: Largest max_length `search_contradiction` accepts by default: the full
#: enumeration at 30 takes ~2.5 minutes on a desk machine and roughly
#: 7x per +2 symbols beyond that, so 30 is the last value inside a
#: ten-minute budget.
SEARCH_CEILING = 30


@dataclass(frozen=True)
class CalculusProfile:
    """Documented knobs of the calculus and its enumeration.

    ``variable_pool`` fixes the canonical variable names the enumerator
    draws on (proof *checking* accepts any identifier).  ``extra_axioms``
    extends the arithmetic axiom list; the test harness uses it to make
    inconsistency reachable on purpose.  ``length_metric`` is "symbols"
    (canonical token count) or "steps".
    """

    variable_pool: tuple[str, ...] = ("x", "y")
    extra_axioms: tuple[Formula, ...] = ()
    length_metric: str = "symbols"
    search_ceiling: int = SEARCH_CEILING

    def axioms(self) -> list[Formula]:
        return peano.pa_axioms() + list(self.extra_axioms)


DEFAULT_PROFILE = CalculusProfile()


def proof_length(proof: Proof, metric: str = "symbols") -> int:
    """Symbol count of all step formulas (or step count per the metric)."""
    if metric == "steps":
        return len(proof.steps)
    if metric != "symbols":
        raise ValueError(f"unknown length metric {metric!r}")
    return sum(symbol_count(st.formula) for st in proof.steps)


# -------------------------------------------------------------- checking

def check_step(steps: tuple[ProofStep, ...], idx: int,
               profile: CalculusProfile = DEFAULT_PROFILE) -> Optional[str]:
    """Reason the 1-based step idx is unjustified, or None if it is fine."""
    step = steps[idx - 1]
    j = step.justification
    if isinstance(j, LogicalAxiom):
        try:
            expected = build_logical_axiom(j.schema, j.args)
        except SchemaError as err:
            return str(err)
        if expected != step.formula:
            return f"formula is not the stated {j.schema} instance"
        return None
    if isinstance(j, PAAxiom):
        axioms = profile.axioms()
        if not 0 <= j.index < len(axioms):
            return f"no arithmetic axiom with index {j.index}"
        if axioms[j.index] != step.formula:
            return f"formula differs from arithmetic axiom {j.index}"
        return None
    if isinstance(j, InductionAxiom):
        try:
            expected = peano.induction_instance(j.phi, j.var, list(j.params))
        except ValueError as err:
            return f"bad induction instance: {err}"
        if expected != step.formula:
            return "formula is not the stated induction instance"
        return None
    if isinstance(j, ModusPonens):
        if not (1 <= j.antecedent < idx and 1 <= j.implication < idx):
            return "modus ponens references a step that is not earlier"
        ant = steps[j.antecedent - 1].formula
        impl = steps[j.implication - 1].formula
        if impl != Or(Not(ant), step.formula):
            return "modus ponens shape mismatch"
        return None
    if isinstance(j, Generalization):
        if not 1 <= j.source < idx:
            return "generalization references a step that is not earlier"
        if step.formula != Forall(j.var, steps[j.source - 1].formula):
            return "formula is not the generalization of the cited step"
        return None
    return f"unknown justification {j!r}"


def check_proof(proof: Proof, profile: CalculusProfile = DEFAULT_PROFILE) -> CheckReport:
    """Verify every step; the final formula is the proof's conclusion."""
    for idx in range(1, len(proof.steps) + 1):
        reason = check_step(proof.steps, idx, profile)
        if reason is not None:
            return CheckReport(False, idx, reason)
    return CheckReport(True)


# ------------------------------------------------------------- explosion

def contradiction_part(f: Formula) -> Optional[Formula]:
    """The positive part P when f has the shape P & !P or !P & P."""
    if isinstance(f, And):
        if f.right == Not(f.left):
            return f.left
        if f.left == Not(f.right):
            return f.right
    return None


def explode(proof: Proof, target: Formula,
            profile: CalculusProfile = DEFAULT_PROFILE) -> Proof:
    """From a checked proof of a contradiction, a checked proof of target.

    Splices the contradiction proof with the and-projections and the
    ex-falso axiom !P -> (P -> target).
    """
    report = check_proof(proof, profile)
    if not report:
        raise ValueError(f"input proof does not check: step {report.step}: {report.reason}")
    conclusion = proof.conclusion
    p = contradiction_part(conclusion) if conclusion is not None else None
    if p is None:
        raise ValueError("conclusion is not of the shape P & !P")
    if free_vars(target):
        raise ValueError("explosion target must be a sentence")
    left, right = conclusion.left, conclusion.right
    k = len(proof.steps)
    pos_schema = "and_left" if left == p else "and_right"
    neg_schema = "and_right" if left == p else "and_left"
    steps = list(proof.steps) + [
        ProofStep(imp(conclusion, p), LogicalAxiom(pos_schema, (left, right))),
        ProofStep(p, ModusPonens(k, k + 1)),
        ProofStep(imp(conclusion, Not(p)), LogicalAxiom(neg_schema, (left, right))),
        ProofStep(Not(p), ModusPonens(k, k + 3)),
        ProofStep(imp(Not(p), imp(p, target)), LogicalAxiom("efq", (p, target))),
        ProofStep(imp(p, target), ModusPonens(k + 4, k + 5)),
        ProofStep(target, ModusPonens(k + 2, k + 6)),
    ]
    return Proof(tuple(steps))


# ------------------------------------------------------------ file format

PROOF_GRAMMAR = """\
one step per line:   <index>. <formula> ; <justification>
justifications:      logical <schema> <args>   (formula/term args in {...},
                                                variable args bare)
                     pa <index>
                     induction {<phi>} <x> <y1> <y2> ...
                     mp <antecedent> <implication>
                     gen <source> <var>
blank lines and lines starting with # are ignored
"""


def format_justification(j: Justification) -> str:
    if isinstance(j, LogicalAxiom):
        kinds, _ = SCHEMAS[j.schema]
        parts = [j.schema]
        for kind, arg in zip(kinds, j.args):
            if kind == "formula":
                parts.append("{" + print_formula(arg) + "}")
            elif kind == "term":
                parts.append("{" + print_term(arg) + "}")
            else:
                parts.append(arg)
        return "logical " + " ".join(parts)
    if isinstance(j, PAAxiom):
        return f"pa {j.index}"
    if isinstance(j, InductionAxiom):
        rest = (" " + " ".join(j.params)) if j.params else ""
        return "induction {" + print_formula(j.phi) + "} " + j.var + rest
    if isinstance(j, ModusPonens):
        return f"mp {j.antecedent} {j.implication}"
    return f"gen {j.source} {j.var}"


def format_proof(proof: Proof) -> str:
    lines = []
    for i, step in enumerate(proof.steps, start=1):
        lines.append(f"{i}. {print_formula(step.formula)} ; "
                     f"{format_justification(step.justification)}")
    return "\n".join(lines) + ("\n" if lines else "")


class ProofFormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _split_justification_args(text: str, lineno: int) -> list[str]:
    # brace-delimited chunks stay whole; everything else splits on spaces
    parts = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos] == " ":
            pos += 1
            continue
        if text[pos] == "{":
            end = text.find("}", pos)
            if end < 0:
                raise ProofFormatError("unterminated { argument", lineno)
            parts.append(text[pos + 1 : end])
            pos = end + 1
        else:
            end = pos
            while end < n and text[end] != " ":
                end += 1
            parts.append(text[pos:end])
            pos = end
    return parts


def _parse_justification(text: str, lineno: int) -> Justification:
    text = text.strip()
    head, _, rest = text.partition(" ")
    if head == "logical":
        args = _split_justification_args(rest, lineno)
        if not args:
            raise ProofFormatError("missing schema name", lineno)
        schema = args[0]
        if schema not in SCHEMAS:
            raise ProofFormatError(f"unknown schema {schema!r}", lineno)
        kinds, _ = SCHEMAS[schema]
        raw = args[1:]
        if len(raw) != len(kinds):
            raise ProofFormatError(f"{schema} takes {len(kinds)} arguments", lineno)
        parsed = []
        for kind, chunk in zip(kinds, raw):
            if kind == "formula":
                parsed.append(parse_formula(chunk))
            elif kind == "term":
                parsed.append(parse_term(chunk))
            else:
                parsed.append(chunk)
        return LogicalAxiom(schema, tuple(parsed))
    if head == "pa":
        return PAAxiom(int(rest.strip()))
    if head == "induction":
        args = _split_justification_args(rest, lineno)
        if len(args) < 2:
            raise ProofFormatError("induction needs a formula and a variable", lineno)
        return InductionAxiom(parse_formula(args[0]), args[1], tuple(args[2:]))
    if head == "mp":
        parts = rest.split()
        if len(parts) != 2:
            raise ProofFormatError("mp takes two step numbers", lineno)
        return ModusPonens(int(parts[0]), int(parts[1]))
    if head == "gen":
        parts = rest.split()
        if len(parts) != 2:
            raise ProofFormatError("gen takes a step number and a variable", lineno)
        return Generalization(int(parts[0]), parts[1])
    raise ProofFormatError(f"unknown justification tag {head!r}", lineno)


def parse_proof(text: str) -> Proof:
    steps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, dot, rest = line.partition(".")
        if not dot or not head.strip().isdigit():
            raise ProofFormatError("expected '<index>. <formula> ; <justification>'",
                                   lineno)
        if int(head) != len(steps) + 1:
            raise ProofFormatError(f"step index {head.strip()} out of order", lineno)
        formula_text, sep, just_text = rest.partition(";")
        if not sep:
            raise ProofFormatError("missing ';' before the justification", lineno)
        formula = parse_formula(formula_text.strip())
        steps.append(ProofStep(formula, _parse_justification(just_text, lineno)))
    return Proof(tuple(steps))


# ------------------------------------------------------------ enumeration

_term_cache: dict = {}
_formula_cache: dict = {}


def _terms_of_size(n: int, pool: tuple[str, ...]) -> list[Term]:
    key = (n, pool)
    if key in _term_cache:
        return _term_cache[key]
    out: list[Term] = []
    if n == 1:
        out.append(ZERO)
        out.extend(Var(v) for v in pool)
    if n >= 2:
        out.extend(Succ(t) for t in _terms_of_size(n - 1, pool))
    if n >= 5:
        for i in range(1, n - 3):
            for a in _terms_of_size(i, pool):
                for b in _terms_of_size(n - 3 - i, pool):
                    out.append(Plus(a, b))
                    out.append(Times(a, b))
    _term_cache[key] = out
    return out


def _formulas_of_size(n: int, pool: tuple[str, ...]) -> list[Formula]:
    key = (n, pool)
    if key in _formula_cache:
        return _formula_cache[key]
    out: list[Formula] = []
    if n >= 5:
        for i in range(1, n - 3):
            for a in _terms_of_size(i, pool):
                for b in _terms_of_size(n - 3 - i, pool):
                    out.append(Eq(a, b))
                    out.append(Gt(a, b))
    if n >= 6:
        out.extend(Not(f) for f in _formulas_of_size(n - 1, pool))
        for i in range(5, n - 7):
            for a in _formulas_of_size(i, pool):
                for b in _formulas_of_size(n - 3 - i, pool):
                    out.append(And(a, b))
                    out.append(Or(a, b))
        for v in pool:
            for f in _formulas_of_size(n - 5, pool):
                out.append(Forall(v, f))
                out.append(Exists(v, f))
    _formula_cache[key] = out
    return out


def _axiom_steps_within(budget: int, profile: CalculusProfile) -> list[ProofStep]:
    """Every axiom-justified step whose formula fits the symbol budget."""
    pool = profile.variable_pool
    steps: list[ProofStep] = []
    for index, axiom in enumerate(profile.axioms()):
        if symbol_count(axiom) <= budget:
            steps.append(ProofStep(axiom, PAAxiom(index)))
    for schema, (kinds, _) in SCHEMAS.items():
        for args in _schema_args_within(schema, kinds, budget, pool):
            try:
                formula = build_logical_axiom(schema, args)
            except SchemaError:
                continue
            if symbol_count(formula) <= budget:
                steps.append(ProofStep(formula, LogicalAxiom(schema, args)))
    # induction instances: the smallest (phi = (x=x)) already needs 43
    # symbols; enumerate them only when the budget can hold one
    if budget >= 43:
        for size in range(5, budget + 1):
            for phi in _formulas_of_size(size, pool):
                fv = free_vars(phi)
                for var in pool:
                    for params in _param_tuples(pool, var, fv - {var}):
                        try:
                            formula = peano.induction_instance(phi, var, list(params))
                        except ValueError:
                            continue
                        if symbol_count(formula) <= budget:
                            steps.append(ProofStep(formula,
                                                   InductionAxiom(phi, var, params)))
    steps.sort(key=_step_sort_key)
    return steps


def _param_tuples(pool, var, needed) -> Iterator[tuple[str, ...]]:
    # ordered tuples of distinct pool variables covering the needed set;
    # supersets build extra vacuous quantifiers, which are still instances
    from itertools import permutations

    others = [v for v in pool if v != var]
    if not needed <= set(others) and not needed <= set(pool):
        return
    for r in range(len(others) + 1):
        for combo in permutations(others, r):
            if needed <= set(combo):
                yield combo


def _occurrences(f: Formula, x: str) -> int:
    # free occurrences of x, for sizing phi[x := t]
    if isinstance(f, (Eq, Gt)):
        return _term_occurrences(f.left, x) + _term_occurrences(f.right, x)
    if isinstance(f, Not):
        return _occurrences(f.body, x)
    if isinstance(f, (And, Or)):
        return _occurrences(f.left, x) + _occurrences(f.right, x)
    if f.var == x:
        return 0
    return _occurrences(f.body, x)


def _term_occurrences(t: Term, x: str) -> int:
    if isinstance(t, Var):
        return 1 if t.name == x else 0
    if isinstance(t, Succ):
        return _term_occurrences(t.arg, x)
    if isinstance(t, (Plus, Times)):
        return _term_occurrences(t.left, x) + _term_occurrences(t.right, x)
    return 0


_PROBE_TERM_A = ZERO                      # size 1
_PROBE_TERM_B = Succ(Succ(ZERO))          # size 3
_PROBE_FORMULA_A = Eq(ZERO, ZERO)         # size 5
_PROBE_FORMULA_B = Not(Not(Eq(ZERO, ZERO)))  # size 7
_coeff_cache: dict = {}


def _schema_coefficients(schema: str):
    """(base size, per-argument multiplicity) for size-linear schemas.

    Every builder except inst/wit assembles its arguments into a fixed
    connective frame, so the instance size is an exact linear function of
    the argument sizes; the coefficients are recovered by probing.
    """
    if schema in _coeff_cache:
        return _coeff_cache[schema]
    kinds, _ = SCHEMAS[schema]
    base_args = tuple(_PROBE_TERM_A if k == "term" else
                      _PROBE_FORMULA_A if k == "formula" else "x"
                      for k in kinds)
    base = symbol_count(build_logical_axiom(schema, base_args))
    mults = []
    for i, kind in enumerate(kinds):
        if kind == "var":
            mults.append(0)
            continue
        bumped = list(base_args)
        bumped[i] = _PROBE_TERM_B if kind == "term" else _PROBE_FORMULA_B
        grown = symbol_count(build_logical_axiom(schema, tuple(bumped)))
        mults.append((grown - base) // 2)
    sizes = tuple(1 if k == "term" else 5 if k == "formula" else 0 for k in kinds)
    fixed = base - sum(m * s for m, s in zip(mults, sizes))
    result = (fixed, tuple(mults))
    _coeff_cache[schema] = result
    return result


def _schema_args_within(schema: str, kinds, budget: int,
                        pool: tuple[str, ...]) -> Iterator[tuple]:
    """All canonical argument tuples whose built instance fits the budget.

    inst and wit substitute into their formula argument, so their size is
    not linear; they are enumerated directly with the canonical-witness
    rule: when the quantified variable does not occur free, the witness
    term is canonically 0 (any other witness builds the same instance).
    Every other schema uses its exact linear size coefficients.
    """
    if schema in ("inst", "wit"):
        yield from _subst_schema_args(budget, pool)
        return
    fixed, mults = _schema_coefficients(schema)
    remaining = budget - fixed
    if remaining < 0:
        return

    def rec(i: int, chosen: list, left: int) -> Iterator[tuple]:
        if i == len(kinds):
            yield tuple(chosen)
            return
        kind, mult = kinds[i], mults[i]
        if kind == "var":
            for v in pool:
                chosen.append(v)
                yield from rec(i + 1, chosen, left)
                chosen.pop()
            return
        floor = 1 if kind == "term" else 5
        later = sum(mults[j] * (1 if kinds[j] == "term" else 5 if kinds[j] == "formula" else 0)
                    for j in range(i + 1, len(kinds)))
        for size in range(floor, (left - later) // mult + 1 if mult else floor + 1):
            values = (_terms_of_size(size, pool) if kind == "term"
                      else _formulas_of_size(size, pool))
            for value in values:
                chosen.append(value)
                yield from rec(i + 1, chosen, left - mult * size)
                chosen.pop()

    yield from rec(0, [], remaining)


def _subst_schema_args(budget: int, pool: tuple[str, ...]) -> Iterator[tuple]:
    # instance = 9 + |phi| + |phi[x:=t]|; |phi[x:=t]| = |phi| + occ*(|t|-1)
    for fsize in range(5, (budget - 9) // 2 + 1):
        for phi in _formulas_of_size(fsize, pool):
            for x in pool:
                occ = _occurrences(phi, x)
                if occ == 0:
                    yield (phi, x, ZERO)
                    continue
                max_t = (budget - 9 - 2 * fsize) // occ + 1
                for tsize in range(1, max_t + 1):
                    for t in _terms_of_size(tsize, pool):
                        yield (phi, x, t)


def _step_sort_key(step: ProofStep):
    return (symbol_count(step.formula), print_formula(step.formula),
            format_justification(step.justification))


def iter_proofs(max_length: int,
                profile: CalculusProfile = DEFAULT_PROFILE) -> Iterator[Proof]:
    """Every checkable proof with proof_length < max_length.

    Canonical order: depth-first extension, candidate steps sorted by
    (symbol count, printed formula, printed justification); every prefix
    of an emitted proof is emitted before it.
    """
    from bisect import bisect_right
    from heapq import merge

    if max_length < 1:
        return
    axiom_entries = [(_step_sort_key(s), symbol_count(s.formula), s)
                     for s in _axiom_steps_within(max_length - 1, profile)]
    axiom_sizes = [size for _, size, _ in axiom_entries]

    def extensions(steps: tuple[ProofStep, ...], budget: int):
        fits = axiom_entries[: bisect_right(axiom_sizes, budget)]
        derived = []
        for i, si in enumerate(steps, start=1):
            for j, sj in enumerate(steps, start=1):
                f = sj.formula
                if isinstance(f, Or) and isinstance(f.left, Not) \
                        and f.left.body == si.formula \
                        and symbol_count(f.right) <= budget:
                    step = ProofStep(f.right, ModusPonens(i, j))
                    derived.append((_step_sort_key(step),
                                    symbol_count(f.right), step))
            for var in profile.variable_pool:
                gen = Forall(var, si.formula)
                if symbol_count(gen) <= budget:
                    step = ProofStep(gen, Generalization(i, var))
                    derived.append((_step_sort_key(step),
                                    symbol_count(gen), step))
        derived.sort()
        return merge(fits, derived)

    def rec(steps: tuple[ProofStep, ...], used: int) -> Iterator[Proof]:
        for _, size, step in extensions(steps, max_length - 1 - used):
            extended = steps + (step,)
            yield Proof(extended)
            yield from rec(extended, used + size)

    yield from rec((), 0)


def count_proofs(max_length: int,
                 profile: CalculusProfile = DEFAULT_PROFILE) -> int:
    if profile.length_metric != "symbols":
        raise ValueError("counting is defined for the symbols metric")
    return sum(1 for _ in iter_proofs(max_length, profile))


def search_contradiction(max_length: int,
                         profile: CalculusProfile = DEFAULT_PROFILE
                         ) -> Optional[Proof]:
    """First enumerated proof (canonical order) of a contradiction.

    Scans every checkable proof with length below max_length; None means
    the whole space was exhausted, i.e. a machine-checked verification
    that this calculus derives no contradiction below that length.
    """
    if max_length > profile.search_ceiling:
        raise ValueError(
            f"max_length {max_length} exceeds the feasibility ceiling "
            f"{profile.search_ceiling}")
    if profile.length_metric == "steps":
        # step-metric search: iterative deepening over symbol budgets up
        # to the ceiling, filtering by step count; step-short proofs with
        # more symbols than the ceiling are out of reach (documented)
        for budget in range(1, profile.search_ceiling + 1):
            for proof in iter_proofs(budget, profile):
                if len(proof.steps) < max_length and \
                        contradiction_part(proof.conclusion) is not None:
                    return proof
        return None
    for proof in iter_proofs(max_length, profile):
        if contradiction_part(proof.conclusion) is not None:
            return proof
    return None
