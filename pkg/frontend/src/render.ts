// DOM rendering for the review form. Kept separate from the wiring in
// main.ts so it can be exercised under a test DOM.

import {
  canConfirm,
  computedPercentage,
  computedTotal,
  type FormState,
} from "./form";

export interface RenderHandlers {
  onEdit(rowIndex: number, rawValue: string): void;
  onConfirm(): void;
}

const PROMINENT_KINDS = new Set(["orientation-rejected", "grade-sheet-suspected"]);

function element<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  parent: Element,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  parent.appendChild(node);
  return node;
}

export function renderDiagnostics(container: HTMLElement, state: FormState): void {
  container.innerHTML = "";
  for (const diagnostic of state.diagnostics) {
    const banner = element(
      "div",
      container,
      PROMINENT_KINDS.has(diagnostic.kind) ? "diagnostic diagnostic-warning" : "diagnostic",
      `${diagnostic.kind}: ${diagnostic.message}`,
    );
    banner.dataset.kind = diagnostic.kind;
  }
}

export function renderForm(
  container: HTMLElement,
  state: FormState,
  handlers: RenderHandlers,
  inlineErrors: ReadonlyMap<number, string>,
): void {
  container.innerHTML = "";
  element("p", container, "detected-state", `State: ${state.detectedState}`);

  const table = element("table", container, "marks-table");
  const head = element("tr", element("thead", table));
  for (const label of ["Subject", "Max. mark", "Obtained mark", ""]) {
    element("th", head, undefined, label);
  }

  const body = element("tbody", table);
  state.rows.forEach((row, index) => {
    const tr = element("tr", body);
    tr.dataset.subject = row.subject;
    element("td", tr, undefined, row.subject);
    element("td", tr, undefined, String(row.maxMark));

    const markCell = element("td", tr);
    const input = element("input", markCell, "mark-input");
    input.type = "text";
    input.inputMode = "numeric";
    input.value = row.currentMark === null ? "" : String(row.currentMark);
    input.addEventListener("change", () => handlers.onEdit(index, input.value));
    const error = inlineErrors.get(index);
    if (error) {
      element("span", markCell, "inline-error", error);
    }

    const badgeCell = element("td", tr);
    const badges = [...row.badges];
    if (row.edited) badges.push("edited");
    for (const badge of badges) {
      element("span", badgeCell, "badge", badge);
    }
  });

  const foot = element("tfoot", table);
  const totalRow = element("tr", foot, "totals");
  element("td", totalRow, undefined, "Total");
  element("td", totalRow, undefined, String(state.rows.length * 100));
  element("td", totalRow, undefined, String(computedTotal(state)));
  element("td", totalRow);
  const pctRow = element("tr", foot, "percentage");
  element("td", pctRow, undefined, "% of marks (auto calculated)");
  const pctCell = element("td", pctRow, undefined, `${computedPercentage(state).toFixed(2)}%`);
  pctCell.colSpan = 2;
  element("td", pctRow);

  const confirm = element(
    "button",
    container,
    undefined,
    state.status === "confirmed" ? "Confirmed" : "Confirm marks",
  );
  confirm.id = "confirm-button";
  confirm.disabled = !canConfirm(state);
  confirm.addEventListener("click", handlers.onConfirm);

  if (!canConfirm(state) && state.status === "extracted") {
    element("p", container, "confirm-hint", "Fill every subject mark to confirm.");
  }
}
