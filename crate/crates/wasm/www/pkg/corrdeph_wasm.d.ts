/* tslint:disable */
/* eslint-disable */

export class Curve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly times: Float64Array;
    readonly values: Float64Array;
}

export class ShortTime {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly full: Float64Array;
    readonly quad: Float64Array;
    readonly quart: Float64Array;
    readonly times: Float64Array;
}

export class Sweep {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly deltaNu: Float64Array;
    readonly n: Float64Array;
    readonly regime: string;
    readonly slope: number;
}

export function coherenceCurve(kind: string, a: number, c_plus: number, theta: number, omega_c: number, t_max: number, steps: number): Curve;

export function scalingSweep(kind: string, readout: string, a: number, c_plus: number, theta: number, n_min: number, n_max: number, per_decade: number, budget: number): Sweep;

export function shortTimeComponents(a: number, c_plus: number, theta: number, omega_c: number, n: number, t_max: number, steps: number): ShortTime;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curve_free: (a: number, b: number) => void;
    readonly __wbg_shorttime_free: (a: number, b: number) => void;
    readonly __wbg_sweep_free: (a: number, b: number) => void;
    readonly coherenceCurve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
    readonly curve_times: (a: number) => [number, number];
    readonly curve_values: (a: number) => [number, number];
    readonly scalingSweep: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number, k: number) => [number, number, number];
    readonly shortTimeComponents: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly shorttime_full: (a: number) => [number, number];
    readonly shorttime_quad: (a: number) => [number, number];
    readonly shorttime_quart: (a: number) => [number, number];
    readonly shorttime_times: (a: number) => [number, number];
    readonly sweep_deltaNu: (a: number) => [number, number];
    readonly sweep_n: (a: number) => [number, number];
    readonly sweep_regime: (a: number) => [number, number];
    readonly sweep_slope: (a: number) => number;
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
