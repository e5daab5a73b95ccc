/**
 * Pure renderers: SessionState in, HTML string out. No DOM reads, no
 * engine calls, no randomness — replaying a recorded response log
 * through the state reducers reproduces identical markup.
 */

import type { ConsistencyReport, RankedReport, ScaleResponse, Tfn } from './types';
import {
  badgeColor,
  gridCell,
  gridComplete,
  gridProgress,
  isStale,
  nextCell,
  rankDeltas,
  type GridState,
  type SessionState,
} from './state';

const esc = (s: string) =>
  s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;').replace(/"/g, '&quot;');

const fmtTfn = (t: Tfn) => `(${t.map((v) => trim(v)).join(', ')})`;

function trim(v: number): string {
  const s = v.toFixed(4);
  return s.replace(/\.?0+$/, '');
}

export function renderBadge(report: ConsistencyReport | undefined): string {
  if (!report) return `<span class="badge none">CR —</span>`;
  const color = badgeColor(report.cr);
  return `<span class="badge ${color}" data-cr="${report.cr}">CR ${report.cr.toFixed(4)}</span>`;
}

export function renderGrid(
  grid: GridState,
  report: ConsistencyReport | undefined,
  scale: ScaleResponse | null,
): string {
  const n = grid.items.length;
  const next = nextCell(grid);
  const worst = report && !report.consistent ? report.worst_cell : null;
  const { done, total } = gridProgress(grid);

  const head = grid.items.map((it) => `<th>${esc(it)}</th>`).join('');
  const rows: string[] = [];
  for (let i = 0; i < n; i++) {
    const tds: string[] = [];
    for (let j = 0; j < n; j++) {
      if (i === j) {
        tds.push(`<td class="diag">1</td>`);
        continue;
      }
      const entry = gridCell(grid, i, j);
      const classes: string[] = [];
      if (next && next[0] === i && next[1] === j) classes.push('next');
      if (entry?.autoFilled) classes.push('mirror');
      if (worst && worst[0] === i && worst[1] === j) classes.push('worst');
      const body = entry ? fmtTfn(entry.value) : '·';
      tds.push(
        `<td class="${classes.join(' ')}" data-cell="${i},${j}">${body}</td>`,
      );
    }
    rows.push(`<tr><th>${esc(grid.items[i]!)}</th>${tds.join('')}</tr>`);
  }

  const termButtons = (scale?.terms ?? [])
    .map((t) => `<button data-term="${esc(t.name)}">${esc(t.name)}</button>`)
    .join('');

  return [
    `<section class="grid" data-node="${esc(grid.node)}">`,
    `<header>${esc(grid.node)} ${renderBadge(report)} ` +
      `<span class="progress">${done}/${total}</span>` +
      (gridComplete(grid) ? ` <span class="complete">complete</span>` : '') +
      `</header>`,
    `<table><thead><tr><th></th>${head}</tr></thead><tbody>${rows.join('')}</tbody></table>`,
    next
      ? `<p class="prompt">Compare <b>${esc(grid.items[next[0]]!)}</b> against ` +
        `<b>${esc(grid.items[next[1]]!)}</b>: ${termButtons}</p>`
      : `<p class="prompt">All pairwise judgments entered.</p>`,
    `</section>`,
  ].join('\n');
}

export function renderRanking(state: SessionState): string {
  const report = state.rank;
  if (!report) return `<section class="ranking empty">No ranking yet.</section>`;
  const stale = isStale(state, report) ? ' stale' : '';
  // rows come out in the engine's global-rank order; never re-sorted here
  const rows = report.leaves
    .map(
      (l) =>
        `<tr data-leaf="${esc(l.id)}"><td>${l.global_rank}</td>` +
        `<td>${esc(l.id)}</td><td>${esc(l.label)}</td>` +
        `<td>${esc(l.category)}</td>` +
        `<td>${l.local_weight.toFixed(6)}</td><td>${l.local_rank}</td>` +
        `<td>${l.global_weight.toFixed(6)}</td></tr>`,
    )
    .join('');
  return [
    `<section class="ranking${stale}" data-revision="${report.revision}">`,
    `<header>${esc(report.goal)} — method: ${esc(report.method)}</header>`,
    `<table><thead><tr><th>#</th><th>Id</th><th>Label</th><th>Category</th>` +
      `<th>Local Weight</th><th>Local Rank</th><th>Global Weight</th></tr></thead>`,
    `<tbody>${rows}</tbody></table>`,
    `</section>`,
  ].join('\n');
}

function arrow(movement: number): string {
  if (movement > 0) return `<span class="up">▲${movement}</span>`;
  if (movement < 0) return `<span class="down">▼${-movement}</span>`;
  return `<span class="same">=</span>`;
}

const BAR_SCALE = 2400; // px per unit weight; weights are small fractions

function bar(weight: number, cls: string): string {
  const width = Math.max(1, Math.round(weight * BAR_SCALE));
  return `<span class="bar ${cls}" style="width:${width}px" title="${weight.toFixed(6)}"></span>`;
}

export function renderWhatIf(state: SessionState): string {
  if (!state.rank || !state.whatIf) {
    return `<section class="whatif empty">Run a what-if to compare.</section>`;
  }
  const deltas = rankDeltas(state.rank, state.whatIf);
  const identical = deltas.every(
    (d) => d.movement === 0 && d.baselineWeight === d.whatIfWeight,
  );
  const rows = deltas
    .map(
      (d) =>
        `<tr data-leaf="${esc(d.id)}"><td>${esc(d.id)}</td>` +
        `<td>${bar(d.baselineWeight, 'baseline')}${d.baselineWeight.toFixed(6)}</td>` +
        `<td>${bar(d.whatIfWeight, 'projected')}${d.whatIfWeight.toFixed(6)}</td>` +
        `<td>${d.baselineRank} → ${d.whatIfRank} ${arrow(d.movement)}</td></tr>`,
    )
    .join('');
  return [
    `<section class="whatif${identical ? ' identical' : ''}">`,
    `<header>What-if vs baseline${identical ? ' (no change)' : ''}</header>`,
    `<table><thead><tr><th>Leaf</th><th>Baseline GW</th><th>What-if GW</th>` +
      `<th>Rank</th></tr></thead><tbody>${rows}</tbody></table>`,
    `<p class="note">Nothing is persisted until you apply.</p>`,
    `</section>`,
  ].join('\n');
}

export function renderError(state: SessionState): string {
  return state.lastError
    ? `<div class="error" role="alert">${esc(state.lastError)}</div>`
    : '';
}

export function renderApp(state: SessionState): string {
  const parts: string[] = [renderError(state)];
  if (!state.hierarchy) {
    parts.push(`<p class="loading">Connecting to engine…</p>`);
    return parts.join('\n');
  }
  parts.push(`<h1>${esc(state.hierarchy.goal)}</h1>`);
  if (state.currentNode) {
    const grid = state.grids.get(state.currentNode);
    if (grid) {
      parts.push(renderGrid(grid, state.consistency.get(state.currentNode), state.scale));
    }
  }
  parts.push(renderRanking(state));
  parts.push(renderWhatIf(state));
  return parts.join('\n');
}
