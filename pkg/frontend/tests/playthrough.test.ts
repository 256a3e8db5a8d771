// Scripted playthrough against the real server: the jsdom DOM runs the
// same client code the browser does, and every state change comes back
// over HTTP.

import { ChildProcess, spawn } from 'node:child_process';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { GameApi } from '../src/api.js';
import { mount } from '../src/ui.js';

const PORT = 8891;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function serverReady(): Promise<void> {
  for (let attempt = 0; attempt < 120; attempt += 1) {
    try {
      const r = await fetch(`${BASE}/api/game/probe`);
      if (r.status === 404) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error('server did not come up');
}

beforeAll(async () => {
  server = spawn(
    'python3',
    ['-c', `from finitary.server import serve; serve(port=${PORT})`],
    { stdio: 'ignore' },
  );
  await serverReady();
});

afterAll(() => {
  server?.kill();
});

function freshUi() {
  document.body.innerHTML = '<main id="app"></main>';
  const root = document.getElementById('app') as HTMLElement;
  return mount({ root, api: new GameApi(BASE) });
}

async function waitFor(predicate: () => boolean, what: string): Promise<void> {
  for (let attempt = 0; attempt < 200; attempt += 1) {
    if (predicate()) return;
    await new Promise((resolve) => setTimeout(resolve, 25));
  }
  throw new Error(`timed out waiting for ${what}`);
}

function moveButtons(): HTMLButtonElement[] {
  return Array.from(document.querySelectorAll<HTMLButtonElement>('.actions button'));
}

describe('playing the proponent in a real game', () => {
  it('wins exists x. x + x = SS0 with witness 1', async () => {
    const ui = freshUi();
    await ui.newGame('exists x. x + x = SS0', 2);
    await waitFor(() => moveButtons().length > 0, 'initial moves');

    const witness1 = moveButtons().find((b) => b.textContent === 'x:=1');
    expect(witness1).toBeDefined();
    witness1!.click();

    await waitFor(
      () => document.querySelector('#banner')?.textContent === 'You win',
      'the win banner',
    );
    const board = Array.from(document.querySelectorAll('.sentence code')).map(
      (el) => el.textContent,
    );
    expect(board.some((t) => t?.includes('((S0+S0)=SS0)'))).toBe(true);
  });

  it('pointing at an &-sentence shows the answer and removes the original', async () => {
    const ui = freshUi();
    await ui.newGame('(0 = 0) & (0 = S0)', 1);
    await waitFor(() => moveButtons().length > 0, 'initial moves');

    const boardTexts = () =>
      Array.from(document.querySelectorAll('.sentence code')).map(
        (el) => el.textContent ?? '',
      );
    expect(boardTexts()).toHaveLength(1);
    expect(boardTexts()[0]).toContain('((0=0)&(0=S0))');

    const point = moveButtons().find((b) => b.textContent === 'point');
    expect(point).toBeDefined();
    point!.click();

    await waitFor(
      () => boardTexts().length === 1 && !boardTexts()[0]!.includes('&'),
      'the adversary answer to replace the pointed sentence',
    );
    // the engine-adversary answered with the false component
    expect(boardTexts()[0]).toContain('(0=S0)');
    const history = Array.from(document.querySelectorAll('#history-list li')).map(
      (el) => el.textContent,
    );
    expect(history).toEqual(['you: points at #0', 'adversary: answers right']);
  });

  it('surfaces parse errors from the server inline', async () => {
    const ui = freshUi();
    await ui.newGame('forall x.', 1);
    const error = document.querySelector<HTMLDivElement>('#error');
    expect(error?.hidden).toBe(false);
    expect(error?.textContent).toMatch(/offset/);
  });

  it('rejects an out-of-bound witness with a conflict message', async () => {
    const ui = freshUi();
    await ui.newGame('exists x. x + x = SS0', 2);
    const api = new GameApi(BASE);
    await expect(
      api.postMove(
        (await api.newGame('exists x. x + x = SS0', 2)).game_id,
        { type: 'witness', index: 0, value: 5 },
      ),
    ).rejects.toMatchObject({ status: 409 });
  });
});
