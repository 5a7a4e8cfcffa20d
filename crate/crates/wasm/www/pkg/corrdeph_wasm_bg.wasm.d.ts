/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curve_free: (a: number, b: number) => void;
export const __wbg_shorttime_free: (a: number, b: number) => void;
export const __wbg_sweep_free: (a: number, b: number) => void;
export const coherenceCurve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
export const curve_times: (a: number) => [number, number];
export const curve_values: (a: number) => [number, number];
export const scalingSweep: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number, k: number) => [number, number, number];
export const shortTimeComponents: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const shorttime_full: (a: number) => [number, number];
export const shorttime_quad: (a: number) => [number, number];
export const shorttime_quart: (a: number) => [number, number];
export const shorttime_times: (a: number) => [number, number];
export const sweep_deltaNu: (a: number) => [number, number];
export const sweep_n: (a: number) => [number, number];
export const sweep_regime: (a: number) => [number, number];
export const sweep_slope: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
