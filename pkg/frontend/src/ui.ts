// DOM wiring: one active game per tab, all transitions through server
// round-trips.  The board re-renders from scratch on every server view;
// the client never shows a state the server did not return.

import { ApiError, GameApi, GameView, MovePayload } from './api.js';
import {
  clampBound,
  describeMove,
  outcomeBanner,
  sentenceActions,
} from './state.js';

export interface UiHandles {
  root: HTMLElement;
  api: GameApi;
}

interface UiState {
  view: GameView | null;
  hintsEnabled: boolean;
  busy: boolean;
}

export function mount(handles: UiHandles): { newGame: (s: string, b: number) => Promise<void> } {
  const { root, api } = handles;
  const state: UiState = { view: null, hintsEnabled: false, busy: false };

  root.innerHTML = `
    <header>
      <h1>Reduction game</h1>
      <p class="tagline">Reach a true atomic sentence. Picks keep the
      sentence; pointing hands the choice to the adversary, who removes it.</p>
    </header>
    <form id="new-game-form">
      <input id="sentence-input" type="text" spellcheck="false"
             placeholder="exists x. x + x = SS0" />
      <label>bound B
        <input id="bound-input" type="number" min="0" max="12" value="2" />
      </label>
      <button type="submit">New game</button>
      <label class="hint-toggle">
        <input id="hint-toggle" type="checkbox" /> hints
      </label>
    </form>
    <div id="error" class="error" hidden></div>
    <div id="banner" class="banner" hidden></div>
    <section id="board"></section>
    <div id="hint" class="hint" hidden></div>
    <section id="history"><h2>Moves</h2><ul id="history-list"></ul></section>
  `;

  const el = <T extends HTMLElement>(selector: string): T => {
    const found = root.querySelector<T>(selector);
    if (!found) throw new Error(`missing element ${selector}`);
    return found;
  };

  const errorBox = el<HTMLDivElement>('#error');
  const banner = el<HTMLDivElement>('#banner');
  const boardBox = el<HTMLElement>('#board');
  const hintBox = el<HTMLDivElement>('#hint');
  const historyList = el<HTMLUListElement>('#history-list');
  const form = el<HTMLFormElement>('#new-game-form');
  const sentenceInput = el<HTMLInputElement>('#sentence-input');
  const boundInput = el<HTMLInputElement>('#bound-input');
  const hintToggle = el<HTMLInputElement>('#hint-toggle');

  function showError(message: string | null) {
    errorBox.hidden = message === null;
    errorBox.textContent = message ?? '';
  }

  function render() {
    const view = state.view;
    showError(null);
    hintBox.hidden = true;
    if (!view) {
      banner.hidden = true;
      boardBox.innerHTML = '';
      historyList.innerHTML = '';
      return;
    }
    const text = outcomeBanner(view);
    banner.hidden = text === null;
    banner.textContent = text ?? '';
    banner.className = `banner ${view.outcome}`;

    boardBox.innerHTML = '';
    for (const row of sentenceActions(view)) {
      const card = document.createElement('div');
      card.className = 'sentence' + (row.canClaimWin ? ' winning' : '');
      const head = document.createElement('div');
      head.className = 'sentence-head';
      const label = document.createElement('code');
      label.textContent = `#${row.index}  ${row.text}`;
      const degree = document.createElement('span');
      degree.className = 'degree';
      degree.textContent = `degree ${row.degree}`;
      head.append(label, degree);
      card.append(head);

      const actions = document.createElement('div');
      actions.className = 'actions';
      const button = (caption: string, move: MovePayload) => {
        const b = document.createElement('button');
        b.type = 'button';
        b.textContent = caption;
        b.dataset.move = JSON.stringify(move);
        b.addEventListener('click', () => submit(move));
        actions.append(b);
      };
      if (row.orLeft) button('left ∨', row.orLeft);
      if (row.orRight) button('right ∨', row.orRight);
      if (row.point) button('point', row.point);
      for (const w of row.witnesses) {
        if (w.type === 'witness') button(`x:=${w.value}`, w);
      }
      if (row.canClaimWin) {
        const won = document.createElement('span');
        won.className = 'won-note';
        won.textContent = 'true atomic: claimed';
        actions.append(won);
      }
      card.append(actions);
      boardBox.append(card);
    }

    historyList.innerHTML = '';
    for (const entry of view.history) {
      const item = document.createElement('li');
      item.textContent = describeMove(entry);
      historyList.append(item);
    }

    if (state.hintsEnabled && view.outcome === 'open') {
      void api
        .getHint(view.game_id)
        .then((hint) => {
          hintBox.hidden = false;
          hintBox.textContent = `hint: ${hint.message}`;
        })
        .catch(() => {
          hintBox.hidden = true;
        });
    }
  }

  async function submit(move: MovePayload) {
    const view = state.view;
    if (!view || state.busy) return;
    state.busy = true;
    try {
      state.view = await api.postMove(view.game_id, move);
      render();
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        // stale view: surface the reason and refresh from the server
        state.view = await api.getGame(view.game_id);
        render();
        showError(`move rejected: ${err.message}`);
      } else {
        showError(err instanceof Error ? err.message : String(err));
      }
    } finally {
      state.busy = false;
    }
  }

  async function newGame(sentence: string, bound: number) {
    state.busy = true;
    try {
      state.view = await api.newGame(sentence, clampBound(bound));
      render();
    } catch (err) {
      showError(err instanceof Error ? err.message : String(err));
    } finally {
      state.busy = false;
    }
  }

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    void newGame(sentenceInput.value, Number(boundInput.value));
  });
  hintToggle.addEventListener('change', () => {
    state.hintsEnabled = hintToggle.checked;
    render();
  });

  return { newGame };
}
