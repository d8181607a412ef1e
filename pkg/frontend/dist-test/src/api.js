/**
 * Typed client for the game service JSON API.  All game logic lives on the
 * server; this module only moves the wire types back and forth.
 */
/** Service-reported failure; `detail` is shown to the user verbatim. */
export class ApiError extends Error {
    constructor(status, detail) {
        super(`${status}: ${detail}`);
        this.status = status;
        this.detail = detail;
    }
}
async function asJson(response) {
    if (!response.ok) {
        let detail = response.statusText;
        try {
            const body = (await response.json());
            if (body.detail)
                detail = body.detail;
        }
        catch {
            // non-JSON error body; keep the status text
        }
        throw new ApiError(response.status, detail);
    }
    return response.json();
}
export class ApiClient {
    constructor(baseUrl = "") {
        this.baseUrl = baseUrl;
    }
    async post(path, payload) {
        const response = await fetch(`${this.baseUrl}${path}`, {
            method: "POST",
            headers: payload === undefined ? undefined : { "Content-Type": "application/json" },
            body: payload === undefined ? undefined : JSON.stringify(payload),
        });
        return asJson(response);
    }
    createGame(request) {
        return this.post("/api/games", request);
    }
    async getState(gameId) {
        const response = await fetch(`${this.baseUrl}/api/games/${gameId}`);
        return (await asJson(response)).state;
    }
    humanMove(gameId, target) {
        return this.post(`/api/games/${gameId}/moves`, { target });
    }
    engineMove(gameId, annotate = false) {
        const query = annotate ? "?annotate=true" : "";
        return this.post(`/api/games/${gameId}/engine-move${query}`);
    }
    async analyze(squares, ruleset = "max-welter", convention = "normal") {
        const params = new URLSearchParams({
            squares: squares.join(","),
            ruleset,
            convention,
        });
        const response = await fetch(`${this.baseUrl}/api/analyze?${params}`);
        return asJson(response);
    }
}
