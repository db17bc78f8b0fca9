// Wire types mirroring the review service's JSON schema.

export interface MarkCandidate {
  value: number;
  source: "numeral" | "word";
  token_span: [number, number];
}

export interface MarkRecord {
  subject: string;
  final_mark: number | null;
  max_mark: number;
  resolution: "word-preferred" | "max-numeral" | "undetected";
  candidates: MarkCandidate[];
}

export interface Diagnostic {
  kind: string;
  message: string;
  detail: Record<string, unknown>;
}

export interface MarksheetResult {
  source_id: string;
  detected_state: string;
  records: MarkRecord[];
  diagnostics: Diagnostic[];
  stages: { preprocess: boolean; postprocess: boolean };
}

export interface StoredResult {
  result_id: string;
  status: "extracted" | "confirmed";
  result: MarksheetResult;
  corrections: Record<string, number>;
  created_at: string;
  confirmed_at: string | null;
}
