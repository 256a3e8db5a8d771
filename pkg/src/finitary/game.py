"""The reduction game: boards of sentences, moves, strategy synthesis.

A board is a finite ordered sequence of closed NNF sentences with
duplicate suppression.  The proponent wins by reaching a board containing
a true atomic (or negated-atomic) sentence.  On the proponent's turn she
may, for any board sentence:

* pick one component of an |-sentence (it is appended, the sentence
  stays, she moves again);
* pick a witness n <= B for an exists-sentence (likewise);
* point at an &- or forall-sentence, handing the turn to the adversary,
  who then appends one component of the pointed sentence and *removes* it
  from the board.

Both players' numeral choices are limited to a shared bound B, which
makes the game finite and strategy existence decidable; this bounded
variant is the one implemented throughout.

`degree` assigns every sentence an ordinal measure under which each
component is strictly smaller, and synthesized strategy trees carry node
measures that strictly decrease along every edge.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .formulas import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Gt,
    Not,
    Or,
    eval_atomic,
    eval_bounded,
    free_vars,
    is_nnf,
    numeral,
    print_formula,
    substitute,
)
from .ordinals import (
    Ordinal,
    natural_sum,
    omega_power,
    render_brackets,
    render_cnf,
    successor,
)

PROPONENT = "proponent"
ADVERSARY = "adversary"


class IllegalMove(ValueError):
    pass


# ----------------------------------------------------------------- moves

@dataclass(frozen=True)
class PickOrLeft:
    index: int


@dataclass(frozen=True)
class PickOrRight:
    index: int


@dataclass(frozen=True)
class PickWitness:
    index: int
    value: int


@dataclass(frozen=True)
class PointAt:
    index: int


@dataclass(frozen=True)
class Answer:
    """Adversary reply to a pointed sentence: "left"/"right" for &,
    a witness value for forall."""

    component: Union[str, int]


Move = Union[PickOrLeft, PickOrRight, PickWitness, PointAt, Answer]


def move_to_payload(m: Move) -> dict:
    if isinstance(m, PickOrLeft):
        return {"type": "or_left", "index": m.index}
    if isinstance(m, PickOrRight):
        return {"type": "or_right", "index": m.index}
    if isinstance(m, PickWitness):
        return {"type": "witness", "index": m.index, "value": m.value}
    if isinstance(m, PointAt):
        return {"type": "point", "index": m.index}
    return {"type": "answer", "component": m.component}


def move_from_payload(payload: dict) -> Move:
    kind = payload.get("type")
    if kind == "or_left":
        return PickOrLeft(int(payload["index"]))
    if kind == "or_right":
        return PickOrRight(int(payload["index"]))
    if kind == "witness":
        return PickWitness(int(payload["index"]), int(payload["value"]))
    if kind == "point":
        return PointAt(int(payload["index"]))
    if kind == "answer":
        return Answer(payload["component"])
    raise ValueError(f"unknown move type: {kind!r}")


# ----------------------------------------------------------------- state

@dataclass(frozen=True)
class GameState:
    """Board, shared numeral bound, whose turn, and the pending index of
    the pointed &/forall sentence when it is the adversary's turn."""

    board: tuple[Formula, ...]
    bound: int
    turn: str = PROPONENT
    pending: Optional[int] = None


def initial_state(sentences: list[Formula], bound: int) -> GameState:
    if bound < 0:
        raise ValueError("bound must be >= 0")
    board: tuple[Formula, ...] = ()
    for s in sentences:
        if free_vars(s):
            raise ValueError(f"board sentences must be closed: {print_formula(s)}")
        if not is_nnf(s):
            raise ValueError(f"board sentences must be in NNF: {print_formula(s)}")
        board = _append(board, s)
    return GameState(board=board, bound=bound)


def _append(board: tuple[Formula, ...], s: Formula) -> tuple[Formula, ...]:
    # the board is read as a set: re-adding a sentence is a no-op
    return board if s in board else board + (s,)


def _is_atomic(s: Formula) -> bool:
    if isinstance(s, Not):
        return isinstance(s.body, (Eq, Gt))
    return isinstance(s, (Eq, Gt))


def instance(quantified: Formula, n: int) -> Formula:
    """The component phi(S^n 0) of a quantified sentence."""
    assert isinstance(quantified, (Forall, Exists))
    return substitute(quantified.body, quantified.var, numeral(n))


def win_check(state: GameState) -> Optional[int]:
    """Index of the first true atomic/negated-atomic board sentence."""
    for i, s in enumerate(state.board):
        if _is_atomic(s) and eval_atomic(s):
            return i
    return None


def legal_moves(state: GameState) -> list[Move]:
    """All legal moves in a fixed canonical order.

    Proponent: per board index, or-picks (left then right), witness picks
    in increasing order, or a point at an &/forall sentence.  Adversary:
    one answer per component of the pending sentence.
    """
    moves: list[Move] = []
    if state.turn == PROPONENT:
        for i, s in enumerate(state.board):
            if isinstance(s, Or):
                moves.append(PickOrLeft(i))
                moves.append(PickOrRight(i))
            elif isinstance(s, Exists):
                moves.extend(PickWitness(i, n) for n in range(state.bound + 1))
            elif isinstance(s, (And, Forall)):
                moves.append(PointAt(i))
    else:
        pointed = state.board[state.pending]
        if isinstance(pointed, And):
            moves.append(Answer("left"))
            moves.append(Answer("right"))
        else:
            moves.extend(Answer(n) for n in range(state.bound + 1))
    return moves


def apply_move(state: GameState, move: Move) -> GameState:
    """Next state; raises IllegalMove with a reason on a bad move."""
    board = state.board
    if isinstance(move, Answer):
        if state.turn != ADVERSARY or state.pending is None:
            raise IllegalMove("no pointed sentence to answer")
        pointed = board[state.pending]
        if isinstance(pointed, And):
            if move.component not in ("left", "right"):
                raise IllegalMove("an &-sentence takes a left/right answer")
            comp = pointed.left if move.component == "left" else pointed.right
        elif isinstance(pointed, Forall):
            if not isinstance(move.component, int):
                raise IllegalMove("a forall-sentence takes a witness answer")
            if not 0 <= move.component <= state.bound:
                raise IllegalMove(f"witness exceeds bound {state.bound}")
            comp = instance(pointed, move.component)
        else:
            raise IllegalMove("pending sentence is not & or forall")
        remaining = tuple(s for j, s in enumerate(board) if j != state.pending)
        return GameState(_append(remaining, comp), state.bound, PROPONENT, None)

    if state.turn != PROPONENT:
        raise IllegalMove("it is the adversary's turn")
    if not 0 <= move.index < len(board):
        raise IllegalMove(f"no board sentence at index {move.index}")
    s = board[move.index]
    if isinstance(move, (PickOrLeft, PickOrRight)):
        if not isinstance(s, Or):
            raise IllegalMove("or-pick on a non-| sentence")
        comp = s.left if isinstance(move, PickOrLeft) else s.right
        return GameState(_append(board, comp), state.bound, PROPONENT, None)
    if isinstance(move, PickWitness):
        if not isinstance(s, Exists):
            raise IllegalMove("witness pick on a non-exists sentence")
        if not 0 <= move.value <= state.bound:
            raise IllegalMove(f"witness exceeds bound {state.bound}")
        return GameState(_append(board, instance(s, move.value)),
                         state.bound, PROPONENT, None)
    if isinstance(move, PointAt):
        if not isinstance(s, (And, Forall)):
            raise IllegalMove("point at a non-&/forall sentence")
        return GameState(board, state.bound, ADVERSARY, move.index)
    raise IllegalMove(f"unknown move {move!r}")


# ---------------------------------------------------------------- degree

def degree(s: Formula) -> Ordinal:
    """Structural ordinal measure of an NNF sentence.

    Atoms measure zero; a binary connective measures one past the natural
    sum of its parts; a quantifier measures the omega-power of its body.
    Term contents are ignored, so every substitution instance of a
    quantified sentence shares the body's degree and each component of a
    sentence is strictly below the sentence.
    """
    if _is_atomic(s):
        return ()
    if isinstance(s, (Or, And)):
        return successor(natural_sum(degree(s.left), degree(s.right)))
    if isinstance(s, (Forall, Exists)):
        return omega_power(degree(s.body))
    raise ValueError(f"degree needs an NNF sentence: {print_formula(s)}")


# ------------------------------------------------------- strategy trees

@dataclass(frozen=True)
class WinLeaf:
    index: int
    measure: Ordinal = ()


@dataclass(frozen=True)
class ProponentNode:
    move: Move
    child: "StrategyNode"
    measure: Ordinal = ()


@dataclass(frozen=True)
class AdversaryNode:
    index: int
    children: tuple[tuple[Union[str, int], "StrategyNode"], ...]
    measure: Ordinal = ()


StrategyNode = Union[WinLeaf, ProponentNode, AdversaryNode]


def _proponent_node(move: Move, child: StrategyNode, acted: Formula) -> ProponentNode:
    measure = successor(natural_sum(child.measure, omega_power(degree(acted))))
    return ProponentNode(move, child, measure)


def _adversary_node(index: int, children, acted: Formula) -> AdversaryNode:
    total: Ordinal = ()
    for _, child in children:
        total = natural_sum(total, child.measure)
    measure = successor(natural_sum(total, omega_power(degree(acted))))
    return AdversaryNode(index, tuple(children), measure)


def _pick_expansions(s: Formula, bound: int):
    """The board sentences one pick on s can add, in canonical move order."""
    if isinstance(s, Or):
        return [s.left, s.right]
    if isinstance(s, Exists):
        return [instance(s, n) for n in range(bound + 1)]
    return []


def _answers_of(s: Formula, bound: int):
    if isinstance(s, And):
        return [("left", s.left), ("right", s.right)]
    return [(n, instance(s, n)) for n in range(bound + 1)]


def _sentence_solution(s: Formula, bound: int, memo: dict):
    """Winning solution of the bounded game on the single sentence s.

    The full board game reduces to this per-sentence recursion by two
    dominance facts about the move rules: picks only ever add sentences
    and their |-/exists sources are never removed, so extra board
    material never hurts the proponent; and a sentence with no reduction
    always has a component with no reduction (of the adversary's choosing
    for &/forall, of every kind for |/exists), so the adversary can keep
    an all-irreducible board irreducible forever.  Hence a board has a
    reduction exactly when one of its sentences does.

    Solutions are ("atomic", s) for a true atomic claim or
    ("point", s, [(answer, sub-solution), ...]); for |/exists the
    solution of the first winning component is inherited (the strategy
    picks into the component and keeps playing there).  None means no
    reduction exists for s at this bound, full stop.
    """
    if s in memo:
        return memo[s]
    if _is_atomic(s):
        solution = ("atomic", s) if eval_atomic(s) else None
    elif isinstance(s, (Or, Exists)):
        solution = None
        for component in _pick_expansions(s, bound):
            sub = _sentence_solution(component, bound, memo)
            if sub is not None:
                solution = sub
                break
    else:
        children = []
        for answer_key, component in _answers_of(s, bound):
            sub = _sentence_solution(component, bound, memo)
            if sub is None:
                children = None
                break
            children.append((answer_key, sub))
        solution = ("point", s, children) if children is not None else None
    memo[s] = solution
    return solution


def _pick_chain(state: GameState, target: Formula) -> list[Move]:
    """Canonical pick moves that put target on the board.

    Breadth-first over pick components from the current board; target must
    lie in the board's saturation.
    """
    if target in state.board:
        return []
    parents: dict[Formula, tuple[Formula, Move]] = {}
    queue = list(state.board)
    have = set(queue)
    cursor = 0
    while cursor < len(queue):
        source = queue[cursor]
        for position, comp in enumerate(_pick_expansions(source, state.bound)):
            if comp in have:
                continue
            if isinstance(source, Or):
                move: Move = PickOrLeft(0) if position == 0 else PickOrRight(0)
            else:
                move = PickWitness(0, position)
            parents[comp] = (source, move)
            have.add(comp)
            queue.append(comp)
        cursor += 1
    if target not in parents:
        raise ValueError("target is not pick-reachable from the board")
    chain = []
    node = target
    while node not in state.board:
        source, move = parents[node]
        chain.append((source, move))
        node = source
    chain.reverse()
    # move indices are placeholders; the caller resolves them against the
    # evolving board
    return chain


def synthesize_reduction(state: GameState, depth_budget: int) -> Optional[StrategyNode]:
    """Exhaustive search for a proponent winning strategy.

    Decides the game exactly via `_sentence_solution` (a None verdict
    means no reduction exists at this bound, full stop), then materializes
    a concrete strategy tree: canonical pick chains leading to the claimed
    atomic or to the sentence to point at, with one child per adversary
    answer.  Every play ends in a WinLeaf; node measures strictly
    decrease; identical inputs yield identical trees.

    ``depth_budget`` caps the synthesized strategy's longest play (in
    moves); a strategy whose canonical play would exceed it is reported
    as absent.
    """
    if depth_budget < 1:
        raise ValueError("depth_budget must be >= 1")
    memo: dict = {}
    solution = None
    for s in state.board:
        solution = _sentence_solution(s, state.bound, memo)
        if solution is not None:
            break
    if solution is None:
        return None

    def materialize(st: GameState, sol) -> tuple[StrategyNode, int]:
        w = win_check(st)
        if w is not None:
            return WinLeaf(w), 0
        kind, target = sol[0], sol[1]
        chain_states = []
        for source, move_shape in _pick_chain(st, target):
            index = st.board.index(source)
            if isinstance(move_shape, PickWitness):
                move: Move = PickWitness(index, move_shape.value)
            else:
                move = type(move_shape)(index)
            chain_states.append((st, move))
            st = apply_move(st, move)
            w = win_check(st)
            if w is not None:
                return _wrap_chain(chain_states, WinLeaf(w), 0)
        if kind == "atomic":
            w = win_check(st)
            assert w is not None, "true atomic must be on the board after its chain"
            return _wrap_chain(chain_states, WinLeaf(w), 0)
        index = st.board.index(target)
        mid = apply_move(st, PointAt(index))
        children = []
        deepest = 0
        for component_key, sub in sol[2]:
            child_state = apply_move(mid, Answer(component_key))
            child, plays = materialize(child_state, sub)
            children.append((component_key, child))
            deepest = max(deepest, plays)
        node = _adversary_node(index, children, target)
        # a point/answer round is two moves
        return _wrap_chain(chain_states, node, deepest + 2)

    def _wrap_chain(chain_states, node, depth_below):
        depth = depth_below
        for chain_state, move in reversed(chain_states):
            node = _proponent_node(move, node, chain_state.board[move.index])
            depth += 1
        return node, depth

    tree, longest = materialize(state, solution)
    if longest > depth_budget:
        return None
    return tree


def walk_strategy(state: GameState, tree: StrategyNode):
    """Yield (moves, leaf_state, leaf) for every adversary line of a tree.

    Verifies legality of every edge by replaying through `apply_move`;
    raises IllegalMove if the tree ever proposes an illegal move.
    """

    def go(st: GameState, node: StrategyNode, moves: tuple[Move, ...]):
        if isinstance(node, WinLeaf):
            yield moves, st, node
            return
        if isinstance(node, ProponentNode):
            yield from go(apply_move(st, node.move), node.child, moves + (node.move,))
            return
        mid = apply_move(st, PointAt(node.index))
        for component, child in node.children:
            answer = Answer(component)
            yield from go(apply_move(mid, answer), child,
                          moves + (PointAt(node.index), answer))

    yield from go(state, tree, ())


def strategy_measures(tree: StrategyNode):
    """Yield (parent_measure, child_measure) for every edge of the tree."""
    if isinstance(tree, WinLeaf):
        return
    if isinstance(tree, ProponentNode):
        yield tree.measure, tree.child.measure
        yield from strategy_measures(tree.child)
        return
    for _, child in tree.children:
        yield tree.measure, child.measure
        yield from strategy_measures(child)


# ------------------------------------------------------------------ play

Strategy = Callable[[GameState, Optional[Move]], Move]


@dataclass
class PlayResult:
    outcome: str  # "win" | "stuck" | "budget" | "forfeit"
    winning_index: Optional[int]
    moves: list[tuple[str, Move]]
    states: list[GameState]
    forfeited_by: Optional[str] = None
    reason: Optional[str] = None


def play(state: GameState, proponent: Strategy, adversary: Strategy,
         step_budget: int) -> PlayResult:
    """Alternate strategy moves until a win, a stall, or budget exhaustion.

    Strategies are called with the current state and the opponent's last
    move (None at the start).  A strategy returning an illegal move
    forfeits for its player.
    """
    if step_budget < 0:
        raise ValueError("step_budget must be >= 0")
    moves: list[tuple[str, Move]] = []
    states = [state]
    last: Optional[Move] = None
    for _ in range(step_budget):
        if state.turn == PROPONENT:
            w = win_check(state)
            if w is not None:
                return PlayResult("win", w, moves, states)
            if not legal_moves(state):
                return PlayResult("stuck", None, moves, states)
        player = state.turn
        strategy = proponent if player == PROPONENT else adversary
        move = strategy(state, last)
        try:
            state = apply_move(state, move)
        except IllegalMove as err:
            return PlayResult("forfeit", None, moves, states,
                              forfeited_by=player, reason=str(err))
        moves.append((player, move))
        states.append(state)
        last = move
    if state.turn == PROPONENT and win_check(state) is not None:
        return PlayResult("win", win_check(state), moves, states)
    return PlayResult("budget", None, moves, states)


def first_legal_strategy(state: GameState, _last: Optional[Move]) -> Move:
    moves = legal_moves(state)
    if not moves:
        raise IllegalMove("no legal moves")
    return moves[0]


def spoiler_adversary(state: GameState, _last: Optional[Move]) -> Move:
    """Answer with a bounded-false component when one exists.

    Under bounded semantics this is a perfect adversary: if any component
    of the pointed sentence is false at the bound, the proponent cannot
    win the bounded game from the resulting board alone.
    """
    moves = legal_moves(state)
    if not moves:
        raise IllegalMove("no legal moves")
    pointed = state.board[state.pending]
    for move in moves:
        if isinstance(pointed, And):
            comp = pointed.left if move.component == "left" else pointed.right
        else:
            comp = instance(pointed, move.component)
        if not eval_bounded(comp, state.bound).value:
            return move
    return moves[0]


def tree_strategy(tree: StrategyNode) -> Strategy:
    """Play a synthesized tree as the proponent.

    Tracks the current tree node; adversary answers select the matching
    child.  Raises IllegalMove if the play leaves the tree (which cannot
    happen against legal adversaries).
    """
    cursor = {"node": tree}

    def strategy(state: GameState, last: Optional[Move]) -> Move:
        node = cursor["node"]
        if isinstance(last, Answer):
            if not isinstance(node, AdversaryNode):
                raise IllegalMove("strategy tree out of sync")
            for component, child in node.children:
                if component == last.component:
                    node = child
                    break
            else:
                raise IllegalMove("adversary answer not covered by the tree")
            cursor["node"] = node
        if isinstance(node, WinLeaf):
            raise IllegalMove("game already won at the leaf")
        if isinstance(node, ProponentNode):
            cursor["node"] = node.child
            return node.move
        return PointAt(node.index)

    return strategy


# ------------------------------------------------------------- trace doc

def board_payload(state: GameState) -> dict:
    return {
        "sentences": [print_formula(s) for s in state.board],
        "degrees": [render_brackets(degree(s)) for s in state.board],
        "degrees_cnf": [render_cnf(degree(s)) for s in state.board],
        "turn": state.turn,
        "pending": state.pending,
    }


def trace_payload(result: PlayResult, bound: int) -> dict:
    return {
        "bound": bound,
        "outcome": result.outcome,
        "winning_index": result.winning_index,
        "forfeited_by": result.forfeited_by,
        "reason": result.reason,
        "moves": [{"player": p, "move": move_to_payload(m)} for p, m in result.moves],
        "boards": [[print_formula(s) for s in st.board] for st in result.states],
        "degrees": [[render_brackets(degree(s)) for s in st.board] for st in result.states],
    }
