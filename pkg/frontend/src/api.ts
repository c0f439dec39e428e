// Typed client for the exploration session service.  The UI never computes
// any algebra: every displayed value comes from one of these calls.

export interface QuiverInput {
  n: number;
  arrows: [number, number][];
}

export interface ClusterEntry {
  text: string;
  truncated: boolean;
}

export interface SessionState {
  id: string;
  n: number;
  arrows: [number, number][];
  green: number[];
  red: number[];
  cluster: ClusterEntry[];
  history: number[];
  mgs_done: boolean;
  green_move: boolean | null;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

export class ConnectionLost extends Error {}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, init);
  } catch (err) {
    throw new ConnectionLost(String(err));
  }
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const message =
      typeof body === "object" && body !== null && "error" in body
        ? String((body as { error: unknown }).error)
        : `HTTP ${response.status}`;
    throw new ApiError(response.status, message);
  }
  return body as T;
}

export class ExplorerClient {
  constructor(readonly base: string) {}

  createSession(quiver: QuiverInput): Promise<SessionState> {
    return request(`${this.base}/session`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(quiver),
    });
  }

  mutate(id: string, vertex: number): Promise<SessionState> {
    return request(`${this.base}/session/${id}/mutate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ vertex }),
    });
  }

  undo(id: string): Promise<SessionState> {
    return request(`${this.base}/session/${id}/undo`, { method: "POST" });
  }

  state(id: string): Promise<SessionState> {
    return request(`${this.base}/session/${id}`);
  }

  async hint(id: string): Promise<number[]> {
    const body = await request<{ green: number[] }>(
      `${this.base}/session/${id}/hint`,
    );
    return body.green;
  }

  async variable(id: string, k: number): Promise<string> {
    const body = await request<{ text: string }>(
      `${this.base}/session/${id}/variable/${k}`,
    );
    return body.text;
  }
}
