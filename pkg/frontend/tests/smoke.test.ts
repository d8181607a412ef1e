/**
 * Scripted browser session against a live service instance.
 *
 * Spawns the Python service, loads the real page into jsdom, and drives the
 * UI by dispatching DOM events: new game at (1,2,5), human clicks square 3,
 * the engine answers.  The engine's reply must land in a position the
 * service itself confirms is losing for the mover, and the winner banner
 * must be right under both conventions.
 */

import assert from "node:assert/strict";
import { spawn, type ChildProcess } from "node:child_process";
import { readFile } from "node:fs/promises";
import { dirname, join } from "node:path";
import { after, before, test } from "node:test";
import { fileURLToPath } from "node:url";

import jsdomPackage from "jsdom";

import { ApiClient } from "../src/api.js";
import { initApp, type GameController } from "../src/app.js";

const { JSDOM } = jsdomPackage;

const PORT = 8400 + (process.pid % 500);
const BASE = `http://127.0.0.1:${PORT}`;
let service: ChildProcess;

async function waitForService(timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const probe = await fetch(`${BASE}/api/analyze?squares=0,1`);
      if (probe.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("service did not come up in time");
}

async function loadPage(): Promise<{ controller: GameController; document: Document }> {
  const here = dirname(fileURLToPath(import.meta.url));
  const html = await readFile(join(here, "../../index.html"), "utf8");
  const dom = new JSDOM(html, { url: BASE });
  const controller = initApp(dom.window.document, new ApiClient(BASE));
  return { controller, document: dom.window.document };
}

function clickSquare(document: Document, square: number): void {
  const cell = document.querySelector(`[data-square='${square}']`);
  assert.ok(cell, `square ${square} is not on the board`);
  assert.ok(cell!.classList.contains("selectable"), `square ${square} is not clickable`);
  cell!.dispatchEvent(new (document.defaultView as any).MouseEvent("click", { bubbles: true }));
}

before(async () => {
  service = spawn("python3", ["-m", "maxwelter.cli", "serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForService();
});

after(() => {
  service.kill();
});

test("normal game: engine answers into a service-confirmed losing position", async () => {
  const { controller, document } = await loadPage();
  await controller.newGame([1, 2, 5]);

  let state = controller.currentState()!;
  assert.deepEqual(state.squares, [1, 2, 5]);
  assert.equal(state.to_move, "human");
  assert.deepEqual(state.legal_targets, [0, 3, 4]);

  clickSquare(document, 3); // human: 5 -> 3
  await controller.lastTask;

  state = controller.currentState()!;
  // engine has moved; the position it left must be a P-position per the service
  const verdict = await new ApiClient(BASE).analyze(state.squares);
  assert.equal(verdict.grundy, 0);
  assert.equal(verdict.outcome, "P");

  // here perfect play ends the game outright: 5->3 left (1,2,3), engine takes 3->0
  assert.deepEqual(state.squares, [0, 1, 2]);
  assert.equal(state.terminal, true);
  assert.equal(state.winner, "engine");
  assert.equal(document.getElementById("banner")!.textContent, "Engine wins!");
});

test("misere game: same moves, opposite banner", async () => {
  const { controller, document } = await loadPage();
  await controller.newGame([1, 2, 5], "max-welter", "misere");

  clickSquare(document, 3);
  await controller.lastTask;

  const state = controller.currentState()!;
  assert.deepEqual(state.squares, [0, 1, 2]);
  assert.equal(state.terminal, true);
  // the engine made the last move, so under misere the human wins
  assert.equal(state.winner, "human");
  assert.equal(document.getElementById("banner")!.textContent, "You win!");
});

test("board only ever offers legal targets (server agrees end to end)", async () => {
  const { controller, document } = await loadPage();
  await controller.newGame([2, 5, 6, 8, 10]);

  for (let round = 0; round < 10; round++) {
    const state = controller.currentState()!;
    if (state.terminal) break;
    assert.equal(state.to_move, "human");
    const offered = [...document.querySelectorAll(".selectable")].map((cell) =>
      Number((cell as HTMLElement).dataset.square),
    );
    assert.deepEqual(offered.sort((a, b) => a - b), state.legal_targets);
    clickSquare(document, state.legal_targets[state.legal_targets.length - 1]);
    await controller.lastTask; // move + engine reply
  }
  assert.ok(controller.currentState()!.terminal);
});

test("analysis badge shows the value on demand", async () => {
  const { controller, document } = await loadPage();
  await controller.newGame([3, 4]);
  controller.setAnnotate(true);
  await controller.lastTask;
  assert.equal(document.getElementById("analysis-badge")!.textContent, "G=1");
});
