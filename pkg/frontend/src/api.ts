import type {
  ConsistencyReport,
  HierarchyResponse,
  JudgmentEcho,
  JudgmentInput,
  RankedReport,
  ScaleResponse,
} from './types';

export class EngineRequestError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`engine responded ${status}: ${detail}`);
    this.name = 'EngineRequestError';
  }
}

/**
 * Thin typed client over the engine's local HTTP protocol. No caching,
 * no retries — callers own staleness handling via the revision counter.
 */
export class EngineClient {
  constructor(private readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!res.ok) {
      let detail = res.statusText;
      try {
        const payload = (await res.json()) as { detail?: unknown };
        if (typeof payload.detail === 'string') detail = payload.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new EngineRequestError(res.status, detail);
    }
    return (await res.json()) as T;
  }

  hierarchy(): Promise<HierarchyResponse> {
    return this.request('GET', '/hierarchy');
  }

  scale(): Promise<ScaleResponse> {
    return this.request('GET', '/scale');
  }

  putJudgment(input: JudgmentInput): Promise<JudgmentEcho> {
    return this.request('PUT', '/judgment', input);
  }

  consistency(node: string): Promise<ConsistencyReport> {
    return this.request('GET', `/consistency?node=${encodeURIComponent(node)}`);
  }

  rank(method?: string): Promise<RankedReport> {
    const qs = method ? `?method=${encodeURIComponent(method)}` : '';
    return this.request('GET', `/rank${qs}`);
  }

  whatIf(overrides: JudgmentInput[], method?: string): Promise<RankedReport> {
    return this.request('POST', '/whatif', { overrides, method: method ?? null });
  }

  reset(): Promise<{ revision: number }> {
    return this.request('POST', '/session/reset');
  }
}
