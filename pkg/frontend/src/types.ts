/**
 * Wire types for the engine's serve-mode JSON protocol.
 *
 * Every response carries a monotonically increasing `revision`; the UI
 * never computes weights itself, it only displays engine numbers tagged
 * with a revision at least as new as the inputs shown.
 */

export type Tfn = [number, number, number];

export interface HierarchyNode {
  id: string;
  label: string;
  children?: HierarchyNode[];
  has_matrix?: boolean;
  has_weights?: boolean;
  items?: string[];
}

export interface HierarchyResponse {
  goal: string;
  root: HierarchyNode;
  revision: number;
}

export interface ScaleTerm {
  name: string;
  tfn: Tfn;
  reciprocal: string;
}

export interface ScaleResponse {
  terms: ScaleTerm[];
  identity: string;
  revision: number;
}

export interface JudgmentInput {
  node: string;
  i: number;
  j: number;
  term?: string;
  tfn?: Tfn;
}

export interface JudgmentEcho {
  node: string;
  i: number;
  j: number;
  cell: Tfn;
  mirror: Tfn;
  revision: number;
}

export interface ConsistencyReport {
  node: string;
  n: number;
  items: string[];
  crisp_matrix: number[][];
  column_sums: number[];
  priority: number[];
  lambda_max: number;
  ci: number;
  cr: number;
  consistent: boolean;
  worst_cell: [number, number] | null;
  threshold: number;
  revision: number;
}

export interface LeafRow {
  id: string;
  label: string;
  category: string;
  category_label: string;
  local_weight: number;
  local_rank: number;
  global_weight: number;
  global_rank: number;
}

export interface NodeRow {
  id: string;
  label: string;
  weight: number;
  global_weight: number;
  cr: number | null;
  consistent: boolean | null;
}

export interface RankedReport {
  goal: string;
  method: string;
  nodes: NodeRow[];
  leaves: LeafRow[];
  revision: number;
  transient?: boolean;
}

export interface EngineError {
  detail: string;
}
