import {
  applyResponse,
  hasStone,
  highlightKeys,
  initialState,
  issueQuery,
  placeStone,
  removeStone,
  setK,
} from './state';
import { fetchLocus } from './locusClient';
import type { BoardViewState, Cell } from './types';

const API_BASE = '';
const CELL = 30;
const MARGIN = 24;

let state: BoardViewState = initialState();

const boardSvg = document.getElementById('board') as unknown as SVGSVGElement;
const kSlider = document.getElementById('k-slider') as HTMLInputElement;
const kValue = document.getElementById('k-value') as HTMLSpanElement;
const status = document.getElementById('status') as HTMLDivElement;
const notice = document.getElementById('notice') as HTMLDivElement;

function px(coord: number): number {
  return MARGIN + coord * CELL;
}

/** Board y grows upward; screen y grows downward. */
function py(coord: number): number {
  return MARGIN + (state.boardSize - 1 - coord) * CELL;
}

function svgEl(tag: string, attrs: Record<string, string | number>): SVGElement {
  const el = document.createElementNS('http://www.w3.org/2000/svg', tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

function drawGrid(): void {
  const last = state.boardSize - 1;
  for (let i = 0; i < state.boardSize; i++) {
    boardSvg.appendChild(svgEl('line', {
      x1: px(0), y1: py(i), x2: px(last), y2: py(i),
      stroke: '#8a6d3b', 'stroke-width': 1,
    }));
    boardSvg.appendChild(svgEl('line', {
      x1: px(i), y1: py(0), x2: px(i), y2: py(last),
      stroke: '#8a6d3b', 'stroke-width': 1,
    }));
  }
  for (const x of [3, 9, 15]) {
    for (const y of [3, 9, 15]) {
      boardSvg.appendChild(svgEl('circle', {
        cx: px(x), cy: py(y), r: 3, fill: '#8a6d3b',
      }));
    }
  }
}

function render(): void {
  boardSvg.querySelectorAll('.dyn').forEach((el) => el.remove());
  const marked = highlightKeys(state);
  for (const key of marked) {
    const [x, y] = key.split(',').map(Number);
    const square = svgEl('rect', {
      x: px(x) - CELL * 0.34, y: py(y) - CELL * 0.34,
      width: CELL * 0.68, height: CELL * 0.68,
      rx: 4, fill: '#2e8b57', 'fill-opacity': 0.55,
    });
    square.classList.add('dyn');
    boardSvg.appendChild(square);
  }
  state.stones.forEach(([x, y], i) => {
    const stone = svgEl('circle', {
      cx: px(x), cy: py(y), r: CELL * 0.42,
      fill: '#111', stroke: '#555',
    });
    stone.classList.add('dyn');
    boardSvg.appendChild(stone);
    const label = svgEl('text', {
      x: px(x), y: py(y) + 4, 'text-anchor': 'middle',
      'font-size': 12, fill: '#fff',
    });
    label.textContent = String(i + 1);
    label.classList.add('dyn');
    boardSvg.appendChild(label);
  });

  kValue.textContent = String(state.k);
  if (state.doc) {
    status.textContent =
      `${state.doc.size} playable cells | ${state.doc.kind} ` +
      `diameter ${state.doc.diameter} | ${state.doc.exactness}`;
  } else {
    status.textContent = 'loading…';
  }
  notice.textContent = state.notice ?? '';
}

async function refreshLocus(): Promise<void> {
  const issued = issueQuery(state);
  state = issued.state;
  try {
    const doc = await fetchLocus(API_BASE, state.stones, state.k,
      state.boardSize);
    state = applyResponse(state, issued.token, doc);
  } catch (err) {
    if (issued.token === state.queryToken) {
      state = { ...state, notice: (err as Error).message };
    }
  }
  render();
}

function cellFromEvent(event: MouseEvent): Cell | null {
  const rect = boardSvg.getBoundingClientRect();
  const x = Math.round((event.clientX - rect.left - MARGIN) / CELL);
  const yScreen = Math.round((event.clientY - rect.top - MARGIN) / CELL);
  const y = state.boardSize - 1 - yScreen;
  if (x < 0 || x >= state.boardSize || y < 0 || y >= state.boardSize) {
    return null;
  }
  return [x, y];
}

boardSvg.addEventListener('click', (event) => {
  const cell = cellFromEvent(event);
  if (!cell) {
    return;
  }
  state = hasStone(state, cell)
    ? removeStone(state, cell)
    : placeStone(state, cell);
  render();
  void refreshLocus();
});

kSlider.addEventListener('input', () => {
  state = setK(state, Number(kSlider.value));
  render();
  void refreshLocus();
});

const side = 2 * MARGIN + (state.boardSize - 1) * CELL;
boardSvg.setAttribute('viewBox', `0 0 ${side} ${side}`);
boardSvg.setAttribute('width', String(side));
boardSvg.setAttribute('height', String(side));
drawGrid();
render();
void refreshLocus();
