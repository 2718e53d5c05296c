/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_runview_free: (a: number, b: number) => void;
export const contourGrid: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
export const epsilonSchedule: (a: number, b: number, c: number) => [number, number, number, number];
export const runMoead: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
export const runview_archive: (a: number) => [number, number];
export const runview_front: (a: number) => [number, number];
export const runview_igdPopulation: (a: number) => number;
export const runview_igdSelected: (a: number) => number;
export const runview_population: (a: number) => [number, number];
export const runview_selected: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
