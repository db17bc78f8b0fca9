// End-to-end review flow against the real service: upload the bundled
// sample dump, edit one mark, confirm, and check the stored state.

import { spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { createClient } from "../src/api";
import {
  buildFormState,
  canConfirm,
  computedPercentage,
  corrections,
  editMark,
} from "../src/form";

const PYTHON = process.env.PYTHON ?? "python3";
const PORT = 8750 + (process.pid % 200);
const BASE = `http://127.0.0.1:${PORT}`;
const HERE = dirname(fileURLToPath(import.meta.url));
const FIXTURE = join(HERE, "..", "..", "src", "markparse", "data", "gujarat_sample.ocr.json");

let server: ChildProcess;
const client = createClient(BASE);

async function waitForHealth(): Promise<void> {
  const deadline = Date.now() + 20000;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    try {
      const health = await client.health();
      if (health.status === "ok") return;
    } catch (error) {
      lastError = error;
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error(`service did not come up on ${BASE}: ${lastError}`);
}

beforeAll(async () => {
  const dataDir = mkdtempSync(join(tmpdir(), "markparse-ui-test-"));
  server = spawn(
    PYTHON,
    [
      "-c",
      "import uvicorn; from markparse.service import create_app; " +
        `uvicorn.run(create_app(), host='127.0.0.1', port=${PORT}, log_level='warning')`,
    ],
    { env: { ...process.env, DATA_DIR: dataDir }, stdio: ["ignore", "inherit", "inherit"] },
  );
  await waitForHealth();
});

afterAll(() => {
  server?.kill();
});

describe("review flow against the live service", () => {
  it("upload -> review -> edit -> confirm records exactly one correction", async () => {
    const dump = readFileSync(FIXTURE);
    const stored = await client.parseFile(
      new Blob([dump], { type: "application/json" }),
      "gujarat_sample.ocr.json",
    );
    expect(stored.status).toBe("extracted");

    let state = buildFormState(stored);
    expect(state.detectedState).toBe("Gujarat");
    expect(state.rows.map((r) => [r.subject, r.currentMark])).toEqual([
      ["ENGLISH", 63],
      ["LANGUAGE", 77],
      ["SOCIAL SCIENCE", 63],
      ["SCIENCE", 62],
      ["MATHS", 40],
    ]);
    expect(computedPercentage(state)).toBe(61);

    const mathsRow = state.rows.findIndex((r) => r.subject === "MATHS");
    state = editMark(state, mathsRow, 45);
    expect(computedPercentage(state)).toBe(62);
    expect(canConfirm(state)).toBe(true);
    expect(corrections(state)).toEqual({ MATHS: 45 });

    const confirmed = await client.confirm(state.resultId, corrections(state));
    expect(confirmed.status).toBe("confirmed");
    expect(confirmed.corrections).toEqual({ MATHS: 45 });

    const fetched = await client.getResult(state.resultId);
    expect(fetched.status).toBe("confirmed");
    expect(Object.keys(fetched.corrections)).toEqual(["MATHS"]);
    expect(fetched.result.records.map((r) => r.final_mark)).toEqual([63, 77, 63, 62, 40]);
  });

  it("unedited form confirms with empty corrections", async () => {
    const dump = readFileSync(FIXTURE);
    const stored = await client.parseFile(
      new Blob([dump], { type: "application/json" }),
      "gujarat_sample.ocr.json",
    );
    const state = buildFormState(stored);
    expect(corrections(state)).toEqual({});
    const confirmed = await client.confirm(state.resultId, corrections(state));
    expect(confirmed.status).toBe("confirmed");
    expect(confirmed.corrections).toEqual({});
  });

  it("surfaces conflicting re-confirmation as a 409", async () => {
    const dump = readFileSync(FIXTURE);
    const stored = await client.parseFile(
      new Blob([dump], { type: "application/json" }),
      "gujarat_sample.ocr.json",
    );
    await client.confirm(stored.result_id, { MATHS: 41 });
    await expect(client.confirm(stored.result_id, { MATHS: 42 })).rejects.toMatchObject({
      status: 409,
    });
  });

  it("rejects an out-of-range correction with a 422", async () => {
    const dump = readFileSync(FIXTURE);
    const stored = await client.parseFile(
      new Blob([dump], { type: "application/json" }),
      "gujarat_sample.ocr.json",
    );
    await expect(client.confirm(stored.result_id, { SCIENCE: 150 })).rejects.toMatchObject({
      status: 422,
    });
  });
});
