// Thin typed client for the game HTTP API.  The server is the single
// authority on rules: every view, including the list of legal moves,
// comes from it verbatim.

export type MovePayload =
  | { type: 'or_left'; index: number }
  | { type: 'or_right'; index: number }
  | { type: 'witness'; index: number; value: number }
  | { type: 'point'; index: number };

export interface HistoryEntry {
  player: 'proponent' | 'adversary';
  move: Record<string, unknown>;
}

export interface GameView {
  schema_version: number;
  game_id: string;
  bound: number;
  turn: string;
  board: string[];
  degrees: string[];
  legal_moves: MovePayload[];
  outcome: 'open' | 'won' | 'dead';
  winning_index: number | null;
  history: HistoryEntry[];
}

export type Hint =
  | { kind: 'win'; index: number; message: string }
  | { kind: 'move'; move: MovePayload; message: string }
  | { kind: 'none'; message: string };

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

async function checked<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      if (typeof body.detail === 'string') detail = body.detail;
      else if (body.detail) detail = JSON.stringify(body.detail);
    } catch {
      // keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return response.json() as Promise<T>;
}

export class GameApi {
  constructor(readonly baseUrl: string = '') {}

  newGame(sentence: string, bound: number): Promise<GameView> {
    return fetch(`${this.baseUrl}/api/game`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ sentence, bound }),
    }).then((r) => checked<GameView>(r));
  }

  getGame(gameId: string): Promise<GameView> {
    return fetch(`${this.baseUrl}/api/game/${gameId}`).then((r) =>
      checked<GameView>(r),
    );
  }

  postMove(gameId: string, move: MovePayload): Promise<GameView> {
    return fetch(`${this.baseUrl}/api/game/${gameId}/move`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ move }),
    }).then((r) => checked<GameView>(r));
  }

  getHint(gameId: string): Promise<Hint> {
    return fetch(`${this.baseUrl}/api/game/${gameId}/hint`).then((r) =>
      checked<Hint>(r),
    );
  }
}
