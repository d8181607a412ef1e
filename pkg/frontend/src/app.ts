/**
 * Game controller: wires the new-game form, the board, the banner, and the
 * analysis overlay to the service.
 *
 * Flow per human click: POST the move, then immediately ask the engine to
 * reply, then re-render from the final state.  Requests are serialized (one
 * chain in flight; clicks are ignored while busy), and a network failure
 * leaves a retry button that re-runs the failed step.
 */

import { ApiClient, ApiError } from "./api.js";
import type { Analysis, Convention, Ruleset, State } from "./api.js";
import { buildBoardView, renderBoard } from "./board.js";

interface Elements {
  board: HTMLElement;
  banner: HTMLElement;
  badge: HTMLElement;
  errorBox: HTMLElement;
  errorText: HTMLElement;
  retryButton: HTMLElement;
}

function requireElement(doc: Document, id: string): HTMLElement {
  const element = doc.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element;
}

export class GameController {
  private gameId: string | null = null;
  private state: State | null = null;
  private stripLength = 0;
  private lastMove: { from: number; to: number } | null = null;
  private ruleset: Ruleset = "max-welter";
  private convention: Convention = "normal";
  private annotate = false;
  private analysis: Analysis | null = null;
  private busy = false;
  private retryAction: (() => Promise<void>) | null = null;
  private elements: Elements;

  /** Last started action chain; tests await this to reach quiescence. */
  lastTask: Promise<void> = Promise.resolve();

  constructor(doc: Document, private api: ApiClient) {
    this.elements = {
      board: requireElement(doc, "board"),
      banner: requireElement(doc, "banner"),
      badge: requireElement(doc, "analysis-badge"),
      errorBox: requireElement(doc, "error-box"),
      errorText: requireElement(doc, "error-text"),
      retryButton: requireElement(doc, "retry-button"),
    };
    this.elements.retryButton.addEventListener("click", () => {
      const action = this.retryAction;
      if (action) {
        this.retryAction = null;
        this.run(action);
      }
    });
  }

  currentState(): State | null {
    return this.state;
  }

  setAnnotate(enabled: boolean): void {
    this.annotate = enabled;
    this.run(async () => {
      await this.refreshAnalysis();
      this.render();
    });
  }

  newGame(
    squares: number[],
    ruleset: Ruleset = "max-welter",
    convention: Convention = "normal",
    humanPlaysFirst = true,
  ): Promise<void> {
    return this.run(async () => {
      const created = await this.api.createGame({
        squares,
        ruleset,
        convention,
        human_plays_first: humanPlaysFirst,
      });
      this.gameId = created.id;
      this.ruleset = ruleset;
      this.convention = convention;
      this.state = created.state;
      this.stripLength = 0; // a new game may shrink the window
      this.lastMove = null;
      await this.refreshAnalysis();
      this.render();
      if (!created.state.terminal && created.state.to_move === "engine") {
        await this.engineReply();
      }
    });
  }

  /** Human plays the biggest coin to `target`; the engine answers. */
  humanMove(target: number): Promise<void> {
    return this.run(async () => {
      if (!this.gameId || !this.state) return;
      if (this.state.terminal || this.state.to_move !== "human") return;
      const moved = await this.api.humanMove(this.gameId, target);
      this.state = moved.state;
      this.lastMove = null;
      this.render();
      if (!moved.state.terminal) {
        await this.engineReply();
      } else {
        await this.refreshAnalysis();
        this.render();
      }
    });
  }

  private async engineReply(): Promise<void> {
    if (!this.gameId) return;
    const reply = await this.api.engineMove(this.gameId, this.annotate);
    this.state = reply.state;
    this.lastMove = reply.move;
    await this.refreshAnalysis();
    this.render();
  }

  private async refreshAnalysis(): Promise<void> {
    this.analysis = null;
    if (!this.annotate || !this.state) return;
    this.analysis = await this.api.analyze(
      this.state.squares,
      this.ruleset,
      this.convention,
    );
  }

  private run(action: () => Promise<void>): Promise<void> {
    if (this.busy) return this.lastTask;
    this.busy = true;
    this.hideError();
    const task = action()
      .catch((failure) => {
        if (failure instanceof ApiError) {
          // service errors are final: show the message verbatim
          this.showError(failure.detail, null);
        } else {
          // network trouble: offer to retry the same step
          this.showError(String(failure), action);
        }
      })
      .finally(() => {
        this.busy = false;
      });
    this.lastTask = task;
    return task;
  }

  private showError(message: string, retry: (() => Promise<void>) | null): void {
    this.elements.errorText.textContent = message;
    this.elements.errorBox.hidden = false;
    this.retryAction = retry;
    (this.elements.retryButton as HTMLButtonElement).hidden = retry === null;
  }

  private hideError(): void {
    this.elements.errorBox.hidden = true;
  }

  private render(): void {
    const state = this.state;
    if (!state) return;
    const view = buildBoardView(state, this.stripLength, this.lastMove);
    this.stripLength = view.stripLength;
    renderBoard(this.elements.board, view, {
      winningTargets: this.analysis ? new Set(this.analysis.winning_targets) : undefined,
      onSelect: (square) => void this.humanMove(square),
    });

    if (state.terminal) {
      this.elements.banner.textContent =
        state.winner === "human" ? "You win!" : "Engine wins!";
      this.elements.banner.className = `banner ${state.winner}-wins`;
    } else {
      this.elements.banner.textContent =
        state.to_move === "human" ? "Your move: pick a highlighted square." : "Engine is thinking...";
      this.elements.banner.className = "banner";
    }

    this.elements.badge.textContent = this.analysis ? `G=${this.analysis.grundy}` : "";
  }
}

function parseSquares(text: string): number[] {
  return text
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part !== "")
    .map(Number);
}

/** Hook the static page up; returns the controller for scripting. */
export function initApp(doc: Document, api: ApiClient = new ApiClient()): GameController {
  const controller = new GameController(doc, api);
  const form = requireElement(doc, "new-game-form") as HTMLFormElement;
  const squaresInput = requireElement(doc, "squares-input") as HTMLInputElement;
  const rulesetSelect = requireElement(doc, "ruleset-select") as HTMLSelectElement;
  const conventionSelect = requireElement(doc, "convention-select") as HTMLSelectElement;
  const humanFirst = requireElement(doc, "human-first") as HTMLInputElement;
  const annotateToggle = requireElement(doc, "annotate-toggle") as HTMLInputElement;

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void controller.newGame(
      parseSquares(squaresInput.value),
      rulesetSelect.value as Ruleset,
      conventionSelect.value as Convention,
      humanFirst.checked,
    );
  });
  annotateToggle.addEventListener("change", () => {
    controller.setAnnotate(annotateToggle.checked);
  });
  return controller;
}
