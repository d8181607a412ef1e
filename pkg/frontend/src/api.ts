/**
 * Typed client for the game service JSON API.  All game logic lives on the
 * server; this module only moves the wire types back and forth.
 */

export type Ruleset = "max-welter" | "welter";
export type Convention = "normal" | "misere";
export type Player = "human" | "engine";

export interface State {
  squares: number[];
  to_move: Player;
  terminal: boolean;
  legal_targets: number[];
  winner: Player | null;
}

export interface NewGameRequest {
  squares: number[];
  ruleset?: Ruleset;
  convention?: Convention;
  human_plays_first?: boolean;
}

export interface CreateResponse {
  id: string;
  state: State;
}

export interface MoveResponse {
  state: State;
}

export interface EngineMoveResponse {
  move: { from: number; to: number };
  state: State;
  annotation?: { grundy: number; outcome: "P" | "N" };
}

export interface Analysis {
  grundy: number;
  outcome: "P" | "N";
  winning_targets: number[];
  closed_form: {
    p_match: boolean | null;
    value1_match: boolean | null;
    corollary_value: number | null;
  };
  canonical_form: number[] | null;
}

/** Service-reported failure; `detail` is shown to the user verbatim. */
export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`${status}: ${detail}`);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return response.json() as Promise<T>;
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private async post<T>(path: string, payload?: unknown): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: payload === undefined ? undefined : { "Content-Type": "application/json" },
      body: payload === undefined ? undefined : JSON.stringify(payload),
    });
    return asJson<T>(response);
  }

  createGame(request: NewGameRequest): Promise<CreateResponse> {
    return this.post("/api/games", request);
  }

  async getState(gameId: string): Promise<State> {
    const response = await fetch(`${this.baseUrl}/api/games/${gameId}`);
    return (await asJson<MoveResponse>(response)).state;
  }

  humanMove(gameId: string, target: number): Promise<MoveResponse> {
    return this.post(`/api/games/${gameId}/moves`, { target });
  }

  engineMove(gameId: string, annotate = false): Promise<EngineMoveResponse> {
    const query = annotate ? "?annotate=true" : "";
    return this.post(`/api/games/${gameId}/engine-move${query}`);
  }

  async analyze(
    squares: number[],
    ruleset: Ruleset = "max-welter",
    convention: Convention = "normal",
  ): Promise<Analysis> {
    const params = new URLSearchParams({
      squares: squares.join(","),
      ruleset,
      convention,
    });
    const response = await fetch(`${this.baseUrl}/api/analyze?${params}`);
    return asJson<Analysis>(response);
  }
}
