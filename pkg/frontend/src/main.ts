// Single-page flow: upload a marksheet, review the extracted marks,
// correct anything wrong, confirm.

import { ApiError, createClient } from "./api";
import {
  buildFormState,
  corrections,
  editMark,
  parseMarkInput,
  type FormState,
} from "./form";
import { renderDiagnostics, renderForm } from "./render";
import "./styles.css";

const client = createClient();

const app = document.getElementById("app")!;
app.innerHTML = `
  <h1>Marksheet review</h1>
  <section id="upload-section">
    <p>Upload a scanned marksheet image (PNG/PGM) or an OCR token dump (.ocr.json).</p>
    <input type="file" id="file-input" />
    <p id="upload-status" role="status"></p>
  </section>
  <section id="diagnostics"></section>
  <section id="form-section"></section>
`;

const fileInput = document.getElementById("file-input") as HTMLInputElement;
const uploadStatus = document.getElementById("upload-status")!;
const diagnosticsContainer = document.getElementById("diagnostics")!;
const formContainer = document.getElementById("form-section")!;

let state: FormState | null = null;
const inlineErrors = new Map<number, string>();

function redraw(): void {
  if (!state) return;
  renderDiagnostics(diagnosticsContainer, state);
  renderForm(formContainer, state, { onEdit, onConfirm }, inlineErrors);
}

function onEdit(rowIndex: number, rawValue: string): void {
  if (!state) return;
  try {
    const value = parseMarkInput(rawValue);
    state = editMark(state, rowIndex, value);
    inlineErrors.delete(rowIndex);
  } catch (error) {
    inlineErrors.set(rowIndex, error instanceof Error ? error.message : String(error));
  }
  redraw();
}

async function onConfirm(): Promise<void> {
  if (!state) return;
  try {
    const stored = await client.confirm(state.resultId, corrections(state));
    uploadStatus.textContent = "Marks confirmed.";
    const edits = state.rows;
    state = buildFormState(stored);
    // keep reviewer edits visible on the confirmation view
    state = edits.reduce(
      (s, row, i) => (row.edited ? editMark(s, i, row.currentMark) : s),
      state,
    );
    inlineErrors.clear();
    redraw();
  } catch (error) {
    if (error instanceof ApiError && error.status === 409) {
      uploadStatus.textContent = "Already confirmed with different marks; reload to review.";
    } else if (error instanceof ApiError && error.status === 422) {
      uploadStatus.textContent = `Server rejected a mark: ${error.message}`;
    } else {
      uploadStatus.textContent = `Confirmation failed: ${error instanceof Error ? error.message : error}`;
    }
  }
}

fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  uploadStatus.textContent = "Parsing…";
  try {
    const stored = await client.parseFile(file, file.name);
    state = buildFormState(stored);
    inlineErrors.clear();
    uploadStatus.textContent =
      state.rows.length > 0
        ? `Extracted ${state.rows.length} subject(s); review and confirm.`
        : "No subjects extracted; see diagnostics.";
    redraw();
  } catch (error) {
    if (error instanceof ApiError) {
      uploadStatus.textContent =
        error.status === 502
          ? `Recognition engine failed: ${error.message}`
          : `Upload rejected: ${error.message}`;
    } else {
      uploadStatus.textContent = `Upload failed: ${error instanceof Error ? error.message : error}`;
    }
  }
});
