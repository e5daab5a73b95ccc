import { EngineClient } from './api';
import { SessionController } from './controller';
import { editableNodes, nextCell } from './state';
import { renderApp } from './views';

const ENGINE_URL =
  new URLSearchParams(location.search).get('engine') ?? 'http://127.0.0.1:8642';

const controller = new SessionController(new EngineClient(ENGINE_URL));
const root = document.getElementById('app')!;

function draw() {
  root.innerHTML = renderApp(controller.state);
}

async function run(work: Promise<unknown>) {
  try {
    await work;
  } catch (err) {
    controller.state.lastError = err instanceof Error ? err.message : String(err);
  }
  draw();
}

root.addEventListener('click', (ev) => {
  const target = ev.target as HTMLElement;
  const term = target.dataset.term;
  const node = controller.state.currentNode;
  if (term && node) {
    const grid = controller.state.grids.get(node);
    const cell = grid && nextCell(grid);
    if (cell) {
      void run(controller.submitJudgment({ node, i: cell[0], j: cell[1], term }));
    }
    return;
  }
  if (target.dataset.action === 'reset') void run(controller.reset());
  if (target.dataset.action === 'whatif-baseline') void run(controller.runWhatIf([]));
  const pick = target.dataset.selectNode;
  if (pick) void run(controller.selectNode(pick));
});

void run(
  controller.load().then(() => {
    const hierarchy = controller.state.hierarchy;
    if (!hierarchy) return;
    const editable = editableNodes(hierarchy.root);
    const nav = document.getElementById('nav')!;
    nav.innerHTML = editable
      .map((n) => `<button data-select-node="${n.id}">${n.id}</button>`)
      .join(' ')
      .concat(
        ' <button data-action="whatif-baseline">what-if (no overrides)</button>',
        ' <button data-action="reset">reset session</button>',
      );
    if (editable.length > 0) return controller.selectNode(editable[0]!.id);
  }),
);
