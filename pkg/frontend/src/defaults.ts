// Default payloads for the add panel.  These are parameters, not geometry
// math: the engine validates and owns everything that happens to them.

export const DEFAULT_PAYLOADS: Record<string, unknown> = {
  rect_plot: { x0: 80, y0: 80, x1: 300, y1: 220 },
  scale_strip: { x0: 100, x1: 320, y: 90 },
  skyscrapers: {
    origin_x: 480,
    origin_y: 420,
    axis_len: 6,
    scale: 24,
    towers: [[1, 1, 3], [2, 2, 5], [3, 1, 2], [4, 3, 4]],
  },
  ball_graph: {
    balls: [[420, 120, 12], [500, 90, 9], [560, 160, 11]],
    links: [[0, 1], [1, 2]],
  },
  tile: { vertices: [[400, 300], [470, 290], [500, 350], [430, 390]] },
  group_proxy: { x: 600, y: 300, width: 140, height: 90, payload: "group" },
};

export const OBJECT_TYPES = Object.keys(DEFAULT_PAYLOADS);
