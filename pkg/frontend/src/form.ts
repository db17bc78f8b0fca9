// Review form state: rows, inline validation, auto-calculated totals.
//
// All functions are pure (state in, new state out) so the arithmetic is
// testable without a DOM. Percentage follows the printed-form rule:
// 100 * total / (100 * row count).

import type { Diagnostic, StoredResult } from "./types";

export interface MarkRow {
  subject: string;
  maxMark: number;
  extractedMark: number | null;
  currentMark: number | null;
  edited: boolean;
  badges: string[];
}

export interface FormState {
  resultId: string;
  detectedState: string;
  status: "extracted" | "confirmed";
  rows: MarkRow[];
  diagnostics: Diagnostic[];
}

export function buildFormState(stored: StoredResult): FormState {
  const rows = stored.result.records.map((record) => {
    const badges: string[] = [];
    if (record.final_mark === null) {
      badges.push("not detected");
    }
    return {
      subject: record.subject,
      maxMark: record.max_mark,
      extractedMark: record.final_mark,
      currentMark: record.final_mark,
      edited: false,
      badges,
    };
  });
  return {
    resultId: stored.result_id,
    detectedState: stored.result.detected_state,
    status: stored.status,
    rows,
    diagnostics: stored.result.diagnostics,
  };
}

export function parseMarkInput(text: string): number | null {
  const trimmed = text.trim();
  if (trimmed === "") return null;
  if (!/^\d{1,3}$/.test(trimmed)) {
    throw new RangeError("marks are whole numbers between 0 and 100");
  }
  const value = Number(trimmed);
  if (value < 0 || value > 100) {
    throw new RangeError("marks must be between 0 and 100");
  }
  return value;
}

export function editMark(state: FormState, rowIndex: number, value: number | null): FormState {
  if (rowIndex < 0 || rowIndex >= state.rows.length) {
    throw new RangeError(`no row ${rowIndex}`);
  }
  if (value !== null && (!Number.isInteger(value) || value < 0 || value > 100)) {
    throw new RangeError("marks must be whole numbers between 0 and 100");
  }
  const rows = state.rows.map((row, i) =>
    i === rowIndex
      ? { ...row, currentMark: value, edited: value !== row.extractedMark }
      : row,
  );
  return { ...state, rows };
}

export function computedTotal(state: FormState): number {
  return state.rows.reduce((sum, row) => sum + (row.currentMark ?? 0), 0);
}

export function computedPercentage(state: FormState): number {
  if (state.rows.length === 0) return 0;
  const maxTotal = state.rows.reduce((sum, row) => sum + row.maxMark, 0);
  return (100 * computedTotal(state)) / maxTotal;
}

export function corrections(state: FormState): Record<string, number> {
  const payload: Record<string, number> = {};
  for (const row of state.rows) {
    if (row.edited && row.currentMark !== null) {
      payload[row.subject] = row.currentMark;
    }
  }
  return payload;
}

export function canConfirm(state: FormState): boolean {
  return (
    state.status === "extracted" &&
    state.rows.length > 0 &&
    state.rows.every((row) => row.currentMark !== null)
  );
}
