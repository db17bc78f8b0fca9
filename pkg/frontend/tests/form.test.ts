import { describe, expect, it } from "vitest";

import {
  buildFormState,
  canConfirm,
  computedPercentage,
  computedTotal,
  corrections,
  editMark,
  parseMarkInput,
  type FormState,
} from "../src/form";
import type { StoredResult } from "../src/types";

const SAMPLE_ROWS: Array<[string, number | null]> = [
  ["ENGLISH", 63],
  ["LANGUAGE", 77],
  ["SOCIAL SCIENCE", 63],
  ["SCIENCE", 62],
  ["MATHS", 40],
];

function storedResult(rows: Array<[string, number | null]> = SAMPLE_ROWS): StoredResult {
  return {
    result_id: "abc123",
    status: "extracted",
    result: {
      source_id: "gujarat-sample",
      detected_state: "Gujarat",
      records: rows.map(([subject, mark]) => ({
        subject,
        final_mark: mark,
        max_mark: 100,
        resolution: mark === null ? "undetected" : "word-preferred",
        candidates: [],
      })),
      diagnostics: [],
      stages: { preprocess: false, postprocess: true },
    },
    corrections: {},
    created_at: "2025-01-01T00:00:00+00:00",
    confirmed_at: null,
  };
}

describe("buildFormState", () => {
  it("populates one row per record with extraction values", () => {
    const state = buildFormState(storedResult());
    expect(state.rows.map((r) => [r.subject, r.currentMark])).toEqual(SAMPLE_ROWS);
    expect(state.rows.every((r) => !r.edited)).toBe(true);
    expect(computedTotal(state)).toBe(305);
    expect(computedPercentage(state)).toBe(61);
  });

  it("renders undetected subjects as empty flagged rows", () => {
    const state = buildFormState(storedResult([...SAMPLE_ROWS.slice(0, 4), ["MATHS", null]]));
    const maths = state.rows[4];
    expect(maths.currentMark).toBeNull();
    expect(maths.badges).toContain("not detected");
    expect(canConfirm(state)).toBe(false);
  });
});

describe("editMark", () => {
  it("updates totals and percentage per the formula", () => {
    let state = buildFormState(storedResult());
    state = editMark(state, 4, 45); // MATHS 40 -> 45
    expect(computedTotal(state)).toBe(310);
    expect(computedPercentage(state)).toBe(62);
    expect(state.rows[4].edited).toBe(true);
    expect(corrections(state)).toEqual({ MATHS: 45 });
  });

  it("clears the edited flag when the original value is re-entered", () => {
    let state = buildFormState(storedResult());
    state = editMark(state, 4, 45);
    state = editMark(state, 4, 40);
    expect(state.rows[4].edited).toBe(false);
    expect(corrections(state)).toEqual({});
  });

  it("rejects out-of-range values and leaves state unchanged", () => {
    const state = buildFormState(storedResult());
    expect(() => editMark(state, 4, 150)).toThrow(RangeError);
    expect(() => editMark(state, 4, -1)).toThrow(RangeError);
    expect(() => editMark(state, 4, 40.5)).toThrow(RangeError);
    expect(state.rows[4].currentMark).toBe(40);
    expect(computedTotal(state)).toBe(305);
  });

  it("never produces a correction outside 0-100", () => {
    let state = buildFormState(storedResult());
    for (const value of [0, 100, 37]) {
      state = editMark(state, 2, value);
      const payload = corrections(state);
      for (const mark of Object.values(payload)) {
        expect(mark).toBeGreaterThanOrEqual(0);
        expect(mark).toBeLessThanOrEqual(100);
      }
    }
  });

  it("keeps percentage equal to the formula across random edit sequences", () => {
    // deterministic linear-congruential sequence, no seeded RNG in the stdlib
    let seed = 0x2025;
    const next = (bound: number) => {
      seed = (seed * 1103515245 + 12345) & 0x7fffffff;
      return seed % bound;
    };
    let state = buildFormState(storedResult());
    for (let step = 0; step < 300; step++) {
      const row = next(state.rows.length);
      const value = next(101);
      state = editMark(state, row, value);
      const expected =
        (100 * state.rows.reduce((sum, r) => sum + (r.currentMark ?? 0), 0)) /
        (100 * state.rows.length);
      expect(computedPercentage(state)).toBe(expected);
    }
  });
});

describe("parseMarkInput", () => {
  it("parses plain integers", () => {
    expect(parseMarkInput("63")).toBe(63);
    expect(parseMarkInput(" 0 ")).toBe(0);
    expect(parseMarkInput("100")).toBe(100);
  });

  it("treats empty input as no value", () => {
    expect(parseMarkInput("")).toBeNull();
    expect(parseMarkInput("   ")).toBeNull();
  });

  it("rejects out-of-range and non-numeric text", () => {
    expect(() => parseMarkInput("150")).toThrow(RangeError);
    expect(() => parseMarkInput("-5")).toThrow(RangeError);
    expect(() => parseMarkInput("12.5")).toThrow(RangeError);
    expect(() => parseMarkInput("abc")).toThrow(RangeError);
  });
});

describe("canConfirm", () => {
  it("requires every row to carry a value", () => {
    let state: FormState = buildFormState(
      storedResult([...SAMPLE_ROWS.slice(0, 4), ["MATHS", null]]),
    );
    expect(canConfirm(state)).toBe(false);
    state = editMark(state, 4, 40);
    expect(canConfirm(state)).toBe(true);
  });

  it("blocks re-confirmation of confirmed results", () => {
    const stored = storedResult();
    stored.status = "confirmed";
    expect(canConfirm(buildFormState(stored))).toBe(false);
  });
});
