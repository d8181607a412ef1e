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
import { buildBoardView, renderBoard } from "./board.js";
function requireElement(doc, id) {
    const element = doc.getElementById(id);
    if (!element)
        throw new Error(`missing element #${id}`);
    return element;
}
export class GameController {
    constructor(doc, api) {
        this.api = api;
        this.gameId = null;
        this.state = null;
        this.stripLength = 0;
        this.lastMove = null;
        this.ruleset = "max-welter";
        this.convention = "normal";
        this.annotate = false;
        this.analysis = null;
        this.busy = false;
        this.retryAction = null;
        /** Last started action chain; tests await this to reach quiescence. */
        this.lastTask = Promise.resolve();
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
    currentState() {
        return this.state;
    }
    setAnnotate(enabled) {
        this.annotate = enabled;
        this.run(async () => {
            await this.refreshAnalysis();
            this.render();
        });
    }
    newGame(squares, ruleset = "max-welter", convention = "normal", humanPlaysFirst = true) {
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
    humanMove(target) {
        return this.run(async () => {
            if (!this.gameId || !this.state)
                return;
            if (this.state.terminal || this.state.to_move !== "human")
                return;
            const moved = await this.api.humanMove(this.gameId, target);
            this.state = moved.state;
            this.lastMove = null;
            this.render();
            if (!moved.state.terminal) {
                await this.engineReply();
            }
            else {
                await this.refreshAnalysis();
                this.render();
            }
        });
    }
    async engineReply() {
        if (!this.gameId)
            return;
        const reply = await this.api.engineMove(this.gameId, this.annotate);
        this.state = reply.state;
        this.lastMove = reply.move;
        await this.refreshAnalysis();
        this.render();
    }
    async refreshAnalysis() {
        this.analysis = null;
        if (!this.annotate || !this.state)
            return;
        this.analysis = await this.api.analyze(this.state.squares, this.ruleset, this.convention);
    }
    run(action) {
        if (this.busy)
            return this.lastTask;
        this.busy = true;
        this.hideError();
        const task = action()
            .catch((failure) => {
            if (failure instanceof ApiError) {
                // service errors are final: show the message verbatim
                this.showError(failure.detail, null);
            }
            else {
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
    showError(message, retry) {
        this.elements.errorText.textContent = message;
        this.elements.errorBox.hidden = false;
        this.retryAction = retry;
        this.elements.retryButton.hidden = retry === null;
    }
    hideError() {
        this.elements.errorBox.hidden = true;
    }
    render() {
        const state = this.state;
        if (!state)
            return;
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
        }
        else {
            this.elements.banner.textContent =
                state.to_move === "human" ? "Your move: pick a highlighted square." : "Engine is thinking...";
            this.elements.banner.className = "banner";
        }
        this.elements.badge.textContent = this.analysis ? `G=${this.analysis.grundy}` : "";
    }
}
function parseSquares(text) {
    return text
        .split(",")
        .map((part) => part.trim())
        .filter((part) => part !== "")
        .map(Number);
}
/** Hook the static page up; returns the controller for scripting. */
export function initApp(doc, api = new ApiClient()) {
    const controller = new GameController(doc, api);
    const form = requireElement(doc, "new-game-form");
    const squaresInput = requireElement(doc, "squares-input");
    const rulesetSelect = requireElement(doc, "ruleset-select");
    const conventionSelect = requireElement(doc, "convention-select");
    const humanFirst = requireElement(doc, "human-first");
    const annotateToggle = requireElement(doc, "annotate-toggle");
    form.addEventListener("submit", (event) => {
        event.preventDefault();
        void controller.newGame(parseSquares(squaresInput.value), rulesetSelect.value, conventionSelect.value, humanFirst.checked);
    });
    annotateToggle.addEventListener("change", () => {
        controller.setAnnotate(annotateToggle.checked);
    });
    return controller;
}
