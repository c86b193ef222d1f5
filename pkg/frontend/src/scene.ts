/** Backend-independent figure description shared by the SVG and PNG writers. */

export type RGB = [number, number, number];

export type Primitive =
  | { kind: "rect"; x: number; y: number; w: number; h: number; color: RGB; alpha?: number }
  | { kind: "polygon"; points: [number, number][]; color: RGB; alpha?: number }
  | { kind: "polyline"; points: [number, number][]; color: RGB; width?: number }
  | {
      kind: "text";
      x: number;
      y: number;
      text: string;
      color: RGB;
      size?: number;
      anchor?: "start" | "middle" | "end";
    };

export interface Scene {
  width: number;
  height: number;
  background: RGB;
  prims: Primitive[];
}

export const PALETTE: RGB[] = [
  [31, 119, 180],
  [255, 127, 14],
  [44, 160, 44],
  [214, 39, 40],
  [148, 103, 189],
  [140, 86, 75],
  [227, 119, 194],
  [127, 127, 127],
];

export const BLACK: RGB = [0, 0, 0];
export const GREY: RGB = [150, 150, 150];
