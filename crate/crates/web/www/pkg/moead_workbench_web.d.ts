/* tslint:disable */
/* eslint-disable */

export class RunView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    archive(): Float64Array;
    front(): Float64Array;
    igdPopulation(): number;
    igdSelected(): number;
    population(): Float64Array;
    selected(): Float64Array;
}

/**
 * Scalarizer values on a `resolution` x `resolution` grid over
 * `[lo, hi]^2`, row-major with f2 increasing down the rows. The weight is
 * `(w1, 1 - w1)` and the reference point `(-eps, -eps)`.
 */
export function contourGrid(scalarizer: string, w1: number, eps: number, lo: number, hi: number, resolution: number): Float64Array;

/**
 * epsilon(t) for t = 1..=generations.
 */
export function epsilonSchedule(eps_ini: number, eps_end: number, generations: number): Float64Array;

/**
 * Runs MOEA/D with 91 subproblems for `generations` generations and keeps
 * both result frameworks side by side.
 */
export function runMoead(problem: string, scalarizer: string, eps_ini: number, eps_end: number, generations: number, seed: number): RunView;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_runview_free: (a: number, b: number) => void;
    readonly contourGrid: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly epsilonSchedule: (a: number, b: number, c: number) => [number, number, number, number];
    readonly runMoead: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
    readonly runview_archive: (a: number) => [number, number];
    readonly runview_front: (a: number) => [number, number];
    readonly runview_igdPopulation: (a: number) => number;
    readonly runview_igdSelected: (a: number) => number;
    readonly runview_population: (a: number) => [number, number];
    readonly runview_selected: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
