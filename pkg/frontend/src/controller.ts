import { EngineClient, EngineRequestError } from './api';
import {
  applyEcho,
  bumpRevision,
  emptySession,
  findNode,
  isStale,
  newGrid,
  type SessionState,
} from './state';
import type { JudgmentInput, RankedReport } from './types';

/**
 * Orchestrates the engine client and the session state. The browser
 * shell and the headless tests drive exactly the same methods; all
 * numbers shown to the user come from engine responses stored here.
 */
export class SessionController {
  readonly state: SessionState = emptySession();

  constructor(private readonly client: EngineClient) {}

  async load(): Promise<void> {
    const [hierarchy, scale] = await Promise.all([
      this.client.hierarchy(),
      this.client.scale(),
    ]);
    this.state.hierarchy = hierarchy;
    this.state.scale = scale;
    bumpRevision(this.state, hierarchy.revision);
    await this.refreshRank();
  }

  /** Open (or resume) elicitation for a node with a judgment matrix. */
  async selectNode(nodeId: string): Promise<void> {
    if (!this.state.hierarchy) throw new Error('session not loaded');
    const node = findNode(this.state.hierarchy.root, nodeId);
    if (!node || !node.items) {
      throw new Error(`node ${nodeId} is not editable`);
    }
    if (!this.state.grids.has(nodeId)) {
      this.state.grids.set(nodeId, newGrid(nodeId, node.items));
    }
    this.state.currentNode = nodeId;
    await this.refreshConsistency(nodeId);
  }

  /**
   * Submit one judgment. The engine echoes the stored cell plus the
   * auto-filled mirror; the node's consistency badge and the ranking
   * refresh immediately.
   */
  async submitJudgment(input: JudgmentInput): Promise<void> {
    this.state.lastError = null;
    let echo;
    try {
      echo = await this.client.putJudgment(input);
    } catch (err) {
      if (err instanceof EngineRequestError) {
        this.state.lastError = `${input.node} (${input.i},${input.j}): ${err.detail}`;
        return;
      }
      throw err;
    }
    bumpRevision(this.state, echo.revision);
    const grid = this.state.grids.get(input.node);
    if (grid) this.state.grids.set(input.node, applyEcho(grid, echo));
    await this.refreshConsistency(input.node);
    await this.refreshRank();
  }

  async refreshConsistency(nodeId: string): Promise<void> {
    try {
      const report = await this.client.consistency(nodeId);
      bumpRevision(this.state, report.revision);
      this.state.consistency.set(nodeId, report);
    } catch (err) {
      if (err instanceof EngineRequestError && err.status === 400) {
        // node has no matrix yet (weights-only); nothing to show
        this.state.consistency.delete(nodeId);
        return;
      }
      throw err;
    }
  }

  async refreshRank(): Promise<void> {
    const report = await this.client.rank();
    bumpRevision(this.state, report.revision);
    this.state.rank = report;
  }

  /**
   * Transient what-if on an engine-side snapshot; a stale baseline is
   * refetched automatically so the comparison is like-for-like.
   */
  async runWhatIf(overrides: JudgmentInput[]): Promise<RankedReport> {
    if (!this.state.rank) await this.refreshRank();
    const projected = await this.client.whatIf(overrides);
    if (this.state.rank && isStale(this.state, this.state.rank)) {
      await this.refreshRank();
    }
    this.state.whatIf = projected;
    return projected;
  }

  async reset(): Promise<void> {
    const { revision } = await this.client.reset();
    bumpRevision(this.state, revision);
    this.state.grids.clear();
    this.state.consistency.clear();
    this.state.whatIf = null;
    await this.refreshRank();
    if (this.state.currentNode) {
      await this.selectNode(this.state.currentNode);
    }
  }
}
