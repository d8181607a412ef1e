/**
 * Board rendering: a numbered strip of squares with coins.
 *
 * The view is a pure projection of the last server state -- the client never
 * computes game logic.  Empty squares left of the biggest coin are clickable
 * exactly when the server says it is the human's turn, so the UI can never
 * send a move the service would reject.
 */

import type { State } from "./api.js";

export interface BoardView {
  stripLength: number;
  coins: Set<number>;
  selectable: Set<number>;
  lastMove: { from: number; to: number } | null;
}

/**
 * Project a server state onto the strip.  `minStripLength` carries the
 * previous display window so the board can grow but never shrink mid-game.
 */
export function buildBoardView(
  state: State,
  minStripLength = 0,
  lastMove: { from: number; to: number } | null = null,
): BoardView {
  const maxSquare = Math.max(...state.squares);
  const selectable =
    state.to_move === "human" && !state.terminal ? state.legal_targets : [];
  return {
    stripLength: Math.max(minStripLength, maxSquare + 2),
    coins: new Set(state.squares),
    selectable: new Set(selectable),
    lastMove,
  };
}

export interface RenderOptions {
  /** Squares to decorate as winning targets (analysis overlay). */
  winningTargets?: Set<number>;
  onSelect?: (square: number) => void;
}

export function renderBoard(
  container: HTMLElement,
  view: BoardView,
  options: RenderOptions = {},
): void {
  const doc = container.ownerDocument;
  container.textContent = "";
  for (let index = 0; index < view.stripLength; index++) {
    const square = doc.createElement("div");
    square.className = "square";
    square.dataset.square = String(index);

    const label = doc.createElement("span");
    label.className = "label";
    label.textContent = String(index);
    square.appendChild(label);

    if (view.coins.has(index)) {
      const coin = doc.createElement("span");
      coin.className = "coin";
      square.appendChild(coin);
    }
    if (view.selectable.has(index)) {
      square.classList.add("selectable");
      if (options.onSelect) {
        const pick = options.onSelect;
        square.addEventListener("click", () => pick(index));
      }
    }
    if (view.lastMove && (index === view.lastMove.from || index === view.lastMove.to)) {
      square.classList.add(index === view.lastMove.to ? "moved-to" : "moved-from");
    }
    if (options.winningTargets?.has(index)) {
      square.classList.add("winning-target");
    }
    container.appendChild(square);
  }
}
