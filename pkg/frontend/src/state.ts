// Pure view helpers.  The client never computes legality or game state
// itself; it only regroups what the server sent for display.

import type { GameView, MovePayload } from './api.js';

// the witness chooser gets unusable beyond this many buttons
export const MAX_UI_BOUND = 12;

export interface SentenceActions {
  index: number;
  text: string;
  degree: string;
  canClaimWin: boolean;
  orLeft?: MovePayload;
  orRight?: MovePayload;
  point?: MovePayload;
  witnesses: MovePayload[];
}

export function sentenceActions(view: GameView): SentenceActions[] {
  const rows: SentenceActions[] = view.board.map((text, index) => ({
    index,
    text,
    degree: view.degrees[index] ?? '',
    canClaimWin: view.outcome === 'won' && view.winning_index === index,
    witnesses: [],
  }));
  for (const move of view.legal_moves) {
    const row = rows[move.index];
    if (!row) continue;
    if (move.type === 'or_left') row.orLeft = move;
    else if (move.type === 'or_right') row.orRight = move;
    else if (move.type === 'point') row.point = move;
    else row.witnesses.push(move);
  }
  return rows;
}

export function outcomeBanner(view: GameView): string | null {
  if (view.outcome === 'won') return 'You win';
  if (view.outcome === 'dead') return 'No moves left: no reduction from here';
  return null;
}

export function describeMove(entry: {
  player: string;
  move: Record<string, unknown>;
}): string {
  const m = entry.move;
  const who = entry.player === 'proponent' ? 'you' : 'adversary';
  switch (m.type) {
    case 'or_left':
      return `${who}: left disjunct of #${m.index}`;
    case 'or_right':
      return `${who}: right disjunct of #${m.index}`;
    case 'witness':
      return `${who}: witness ${m.value} for #${m.index}`;
    case 'point':
      return `${who}: points at #${m.index}`;
    case 'answer':
      return `${who}: answers ${String(m.component)}`;
    default:
      return `${who}: ${JSON.stringify(m)}`;
  }
}

export function clampBound(bound: number): number {
  if (!Number.isFinite(bound) || bound < 0) return 0;
  return Math.min(Math.floor(bound), MAX_UI_BOUND);
}
