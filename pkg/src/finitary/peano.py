"""The arithmetic axiom base and the induction schema.

The non-induction axioms are a fixed, documented list (see
docs/calculus.md): successor injectivity and non-surjectivity at zero, the
defining recursions for + and *, and the two directions of the defining
equivalence for > (x > y iff some z has x = y + Sz).  Implication below
always means its expansion !_|_.
"""

from .formulas import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Gt,
    Not,
    Plus,
    Succ,
    Times,
    Var,
    ZERO,
    free_vars,
    imp,
    substitute_checked,
)

_x, _y, _z = Var("x"), Var("y"), Var("z")


def pa_axioms() -> list[Formula]:
    """The fixed non-induction axiom list, in a stable documented order."""
    return [
        # 0: zero is no successor
        Forall("x", Not(Eq(Succ(_x), ZERO))),
        # 1: S is injective
        Forall("x", Forall("y", imp(Eq(Succ(_x), Succ(_y)), Eq(_x, _y)))),
        # 2, 3: recursion for +
        Forall("x", Eq(Plus(_x, ZERO), _x)),
        Forall("x", Forall("y", Eq(Plus(_x, Succ(_y)), Succ(Plus(_x, _y))))),
        # 4, 5: recursion for *
        Forall("x", Eq(Times(_x, ZERO), ZERO)),
        Forall("x", Forall("y", Eq(Times(_x, Succ(_y)), Plus(Times(_x, _y), _x)))),
        # 6, 7: both directions of the defining axiom for >
        Forall("x", Forall("y", imp(Gt(_x, _y),
                                    Exists("z", Eq(_x, Plus(_y, Succ(_z))))))),
        Forall("x", Forall("y", imp(Exists("z", Eq(_x, Plus(_y, Succ(_z)))),
                                    Gt(_x, _y)))),
    ]


def induction_instance(phi: Formula, x: str, ys: list[str]) -> Formula:
    """The induction axiom for phi(x, ys), universally closed over ys.

    Builds forall ys ((phi(0) & forall x (phi(x) -> phi(Sx))) -> forall x
    phi(x)) with every -> expanded.  phi may use exactly the variables in
    {x} | ys; anything else is rejected so the result is a sentence.
    """
    if x in ys or len(set(ys)) != len(ys):
        raise ValueError("parameter variables must be distinct and differ from x")
    allowed = {x, *ys}
    extra = free_vars(phi) - allowed
    if extra:
        raise ValueError(f"phi has unlisted free variables: {sorted(extra)}")
    base = substitute_checked(phi, x, ZERO)
    step = Forall(x, imp(phi, substitute_checked(phi, x, Succ(Var(x)))))
    body = imp(And(base, step), Forall(x, phi))
    for y in reversed(ys):
        body = Forall(y, body)
    return body
