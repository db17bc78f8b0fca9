// Thin fetch client for the review service endpoints.

import type { StoredResult } from "./types";

export class ApiError extends Error {
  constructor(
    public status: number,
    detail: string,
  ) {
    super(detail);
  }
}

async function fail(response: Response): Promise<never> {
  let detail = `${response.status} ${response.statusText}`;
  try {
    const body = await response.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, detail);
}

export function createClient(baseUrl = "") {
  const url = (path: string) => `${baseUrl}${path}`;

  return {
    async parseFile(file: Blob, filename: string): Promise<StoredResult> {
      const form = new FormData();
      form.append("file", file, filename);
      const response = await fetch(url("/v1/parse"), { method: "POST", body: form });
      if (!response.ok) return fail(response);
      return response.json();
    },

    async getResult(resultId: string): Promise<StoredResult> {
      const response = await fetch(url(`/v1/results/${resultId}`));
      if (!response.ok) return fail(response);
      return response.json();
    },

    async confirm(resultId: string, corrections: Record<string, number>): Promise<StoredResult> {
      const response = await fetch(url(`/v1/results/${resultId}/confirm`), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ corrections }),
      });
      if (!response.ok) return fail(response);
      return response.json();
    },

    async health(): Promise<{ status: string; version: string }> {
      const response = await fetch(url("/v1/health"));
      if (!response.ok) return fail(response);
      return response.json();
    },
  };
}

export type ApiClient = ReturnType<typeof createClient>;
