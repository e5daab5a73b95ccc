import type {
  ConsistencyReport,
  HierarchyNode,
  HierarchyResponse,
  JudgmentEcho,
  RankedReport,
  ScaleResponse,
  Tfn,
} from './types';

/** Consistency badge color bands. */
export const GREEN_BELOW = 0.1;
export const AMBER_BELOW = 0.15;

export type BadgeColor = 'green' | 'amber' | 'red' | 'none';

export interface CellEntry {
  value: Tfn;
  /** true when the cell was filled as the mirror of the user's entry */
  autoFilled: boolean;
}

export interface GridState {
  node: string;
  items: string[];
  /** keyed "i,j"; diagonal never present */
  cells: Map<string, CellEntry>;
  /** upper-triangle elicitation order, row by row */
  plan: Array<[number, number]>;
  cursor: number;
}

export interface SessionState {
  hierarchy: HierarchyResponse | null;
  scale: ScaleResponse | null;
  currentNode: string | null;
  grids: Map<string, GridState>;
  consistency: Map<string, ConsistencyReport>;
  rank: RankedReport | null;
  whatIf: RankedReport | null;
  /** highest revision seen in any engine response */
  revision: number;
  lastError: string | null;
}

export function emptySession(): SessionState {
  return {
    hierarchy: null,
    scale: null,
    currentNode: null,
    grids: new Map(),
    consistency: new Map(),
    rank: null,
    whatIf: null,
    revision: 0,
    lastError: null,
  };
}

/** Row-by-row upper-triangle walk: n(n-1)/2 judgments per node. */
export function elicitationPlan(n: number): Array<[number, number]> {
  const plan: Array<[number, number]> = [];
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) plan.push([i, j]);
  }
  return plan;
}

export function newGrid(node: string, items: string[]): GridState {
  return {
    node,
    items,
    cells: new Map(),
    plan: elicitationPlan(items.length),
    cursor: 0,
  };
}

const key = (i: number, j: number) => `${i},${j}`;

export function gridCell(grid: GridState, i: number, j: number): CellEntry | undefined {
  return grid.cells.get(key(i, j));
}

/**
 * Fold a judgment echo into the grid: the entered cell plus its
 * engine-provided mirror. The cursor advances past every already-filled
 * planned pair so the walk resumes at the first open judgment.
 */
export function applyEcho(grid: GridState, echo: JudgmentEcho): GridState {
  const cells = new Map(grid.cells);
  cells.set(key(echo.i, echo.j), { value: echo.cell, autoFilled: false });
  cells.set(key(echo.j, echo.i), { value: echo.mirror, autoFilled: true });
  let cursor = 0;
  while (cursor < grid.plan.length) {
    const pair = grid.plan[cursor]!;
    if (!cells.has(key(pair[0], pair[1]))) break;
    cursor += 1;
  }
  return { ...grid, cells, cursor };
}

export function gridComplete(grid: GridState): boolean {
  return grid.cursor >= grid.plan.length;
}

export function gridProgress(grid: GridState): { done: number; total: number } {
  const done = grid.plan.filter(([i, j]) => grid.cells.has(key(i, j))).length;
  return { done, total: grid.plan.length };
}

export function nextCell(grid: GridState): [number, number] | null {
  return gridComplete(grid) ? null : grid.plan[grid.cursor]!;
}

export function badgeColor(cr: number | null | undefined): BadgeColor {
  if (cr === null || cr === undefined) return 'none';
  if (cr < GREEN_BELOW) return 'green';
  if (cr < AMBER_BELOW) return 'amber';
  return 'red';
}

/** Depth-first list of non-leaf nodes that accept judgments. */
export function editableNodes(root: HierarchyNode): HierarchyNode[] {
  const out: HierarchyNode[] = [];
  const walk = (node: HierarchyNode) => {
    if (node.children && node.children.length > 0) {
      if (node.has_matrix) out.push(node);
      node.children.forEach(walk);
    }
  };
  walk(root);
  return out;
}

export function findNode(root: HierarchyNode, id: string): HierarchyNode | null {
  if (root.id === id) return root;
  for (const child of root.children ?? []) {
    const hit = findNode(child, id);
    if (hit) return hit;
  }
  return null;
}

export interface RankDelta {
  id: string;
  label: string;
  baselineWeight: number;
  whatIfWeight: number;
  baselineRank: number;
  whatIfRank: number;
  /** positive = moved up (rank number decreased) */
  movement: number;
}

/**
 * Pair baseline and what-if leaves by id, in baseline rank order. The
 * ordering comes straight from the engine reports — never re-sorted by
 * weight on the client.
 */
export function rankDeltas(baseline: RankedReport, whatIf: RankedReport): RankDelta[] {
  const after = new Map(whatIf.leaves.map((l) => [l.id, l]));
  return baseline.leaves.map((leaf) => {
    const changed = after.get(leaf.id);
    if (!changed) {
      throw new Error(`what-if report is missing leaf ${leaf.id}`);
    }
    return {
      id: leaf.id,
      label: leaf.label,
      baselineWeight: leaf.global_weight,
      whatIfWeight: changed.global_weight,
      baselineRank: leaf.global_rank,
      whatIfRank: changed.global_rank,
      movement: leaf.global_rank - changed.global_rank,
    };
  });
}

/** A report is stale when the session has seen a newer revision. */
export function isStale(state: SessionState, reported: { revision: number }): boolean {
  return reported.revision < state.revision;
}

export function bumpRevision(state: SessionState, revision: number): void {
  if (revision > state.revision) state.revision = revision;
}
