// Generated coefficient tables: entry [a][b][k] multiplies nu^k for the
// nodal value at x-index a and y-index b of the cell.

use std::f64::consts::FRAC_1_PI;

use super::WedgeTable;

/// Right half-plane wedge at a vertical-edge midpoint.
pub(crate) const RIGHT_HALF: WedgeTable = WedgeTable {
    uu: [
        [
            [0.0, 0.0, 0.0, -1.0 / 2.0, 1.0 / 3.0],
            [1.0 / 2.0, -3.0 / 2.0, 1.0, 1.0, -2.0 / 3.0],
            [0.0, 0.0, 0.0, -1.0 / 2.0, 1.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 2.0 / 3.0, -2.0 / 3.0],
            [0.0, 2.0, -2.0, -4.0 / 3.0, 4.0 / 3.0],
            [0.0, 0.0, 0.0, 2.0 / 3.0, -2.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, -1.0 / 6.0, 1.0 / 3.0],
            [0.0, -1.0 / 2.0, 1.0, 1.0 / 3.0, -2.0 / 3.0],
            [0.0, 0.0, 0.0, -1.0 / 6.0, 1.0 / 3.0],
        ],
    ],
    uv: [
        [
            [0.0, -1.0 / 2.0, 3.0 / 4.0, -1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 1.0 / 2.0, -3.0 / 4.0, 1.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, -1.0, 2.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, -2.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, 1.0 / 4.0, -1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, -1.0 / 4.0, 1.0 / 3.0, 0.0],
        ],
    ],
    vu: [
        [
            [0.0, -1.0 / 2.0, 3.0 / 4.0, -1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 1.0 / 2.0, -3.0 / 4.0, 1.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, -1.0, 2.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, -2.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, 1.0 / 4.0, -1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, -1.0 / 4.0, 1.0 / 3.0, 0.0],
        ],
    ],
    vv: [
        [
            [0.0, 0.0, 1.0, -1.0, 1.0 / 3.0],
            [1.0 / 2.0, 0.0, -2.0, 2.0, -2.0 / 3.0],
            [0.0, 0.0, 1.0, -1.0, 1.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 4.0 / 3.0, -2.0 / 3.0],
            [0.0, 0.0, 0.0, -8.0 / 3.0, 4.0 / 3.0],
            [0.0, 0.0, 0.0, 4.0 / 3.0, -2.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, -1.0 / 3.0, 1.0 / 3.0],
            [0.0, 0.0, 0.0, 2.0 / 3.0, -2.0 / 3.0],
            [0.0, 0.0, 0.0, -1.0 / 3.0, 1.0 / 3.0],
        ],
    ],
    up: [
        [
            [0.0, 0.0, -1.0 / 2.0, 1.0, -1.0 / 2.0],
            [-1.0 / 2.0, 3.0 / 2.0, 0.0, -2.0, 1.0],
            [0.0, 0.0, -1.0 / 2.0, 1.0, -1.0 / 2.0],
        ],
        [
            [0.0, 0.0, 0.0, -4.0 / 3.0, 1.0],
            [0.0, -2.0, 2.0, 8.0 / 3.0, -2.0],
            [0.0, 0.0, 0.0, -4.0 / 3.0, 1.0],
        ],
        [
            [0.0, 0.0, 0.0, 1.0 / 3.0, -1.0 / 2.0],
            [0.0, 1.0 / 2.0, -1.0, -2.0 / 3.0, 1.0],
            [0.0, 0.0, 0.0, 1.0 / 3.0, -1.0 / 2.0],
        ],
    ],
    vp: [
        [
            [0.0, 1.0 / 2.0, -3.0 / 4.0, 1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, -1.0 / 2.0, 3.0 / 4.0, -1.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, 1.0, -2.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 2.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, -1.0 / 4.0, 1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0 / 4.0, -1.0 / 3.0, 0.0],
        ],
    ],
    pp: [
        [
            [0.0, 0.0, 1.0, -3.0 / 2.0, 2.0 / 3.0],
            [1.0 / 2.0, -3.0 / 2.0, -1.0, 3.0, -4.0 / 3.0],
            [0.0, 0.0, 1.0, -3.0 / 2.0, 2.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 2.0, -4.0 / 3.0],
            [0.0, 2.0, -2.0, -4.0, 8.0 / 3.0],
            [0.0, 0.0, 0.0, 2.0, -4.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, -1.0 / 2.0, 2.0 / 3.0],
            [0.0, -1.0 / 2.0, 1.0, 1.0, -4.0 / 3.0],
            [0.0, 0.0, 0.0, -1.0 / 2.0, 2.0 / 3.0],
        ],
    ],
};

/// Left half-plane wedge at a vertical-edge midpoint.
pub(crate) const LEFT_HALF: WedgeTable = WedgeTable {
    uu: [
        [
            [0.0, 0.0, 0.0, -1.0 / 6.0, 1.0 / 3.0],
            [0.0, -1.0 / 2.0, 1.0, 1.0 / 3.0, -2.0 / 3.0],
            [0.0, 0.0, 0.0, -1.0 / 6.0, 1.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 2.0 / 3.0, -2.0 / 3.0],
            [0.0, 2.0, -2.0, -4.0 / 3.0, 4.0 / 3.0],
            [0.0, 0.0, 0.0, 2.0 / 3.0, -2.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, -1.0 / 2.0, 1.0 / 3.0],
            [1.0 / 2.0, -3.0 / 2.0, 1.0, 1.0, -2.0 / 3.0],
            [0.0, 0.0, 0.0, -1.0 / 2.0, 1.0 / 3.0],
        ],
    ],
    uv: [
        [
            [0.0, 0.0, -1.0 / 4.0, 1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0 / 4.0, -1.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, 1.0, -2.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 2.0 / 3.0, 0.0],
        ],
        [
            [0.0, 1.0 / 2.0, -3.0 / 4.0, 1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, -1.0 / 2.0, 3.0 / 4.0, -1.0 / 3.0, 0.0],
        ],
    ],
    vu: [
        [
            [0.0, 0.0, -1.0 / 4.0, 1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0 / 4.0, -1.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, 1.0, -2.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 2.0 / 3.0, 0.0],
        ],
        [
            [0.0, 1.0 / 2.0, -3.0 / 4.0, 1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, -1.0 / 2.0, 3.0 / 4.0, -1.0 / 3.0, 0.0],
        ],
    ],
    vv: [
        [
            [0.0, 0.0, 0.0, -1.0 / 3.0, 1.0 / 3.0],
            [0.0, 0.0, 0.0, 2.0 / 3.0, -2.0 / 3.0],
            [0.0, 0.0, 0.0, -1.0 / 3.0, 1.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 4.0 / 3.0, -2.0 / 3.0],
            [0.0, 0.0, 0.0, -8.0 / 3.0, 4.0 / 3.0],
            [0.0, 0.0, 0.0, 4.0 / 3.0, -2.0 / 3.0],
        ],
        [
            [0.0, 0.0, 1.0, -1.0, 1.0 / 3.0],
            [1.0 / 2.0, 0.0, -2.0, 2.0, -2.0 / 3.0],
            [0.0, 0.0, 1.0, -1.0, 1.0 / 3.0],
        ],
    ],
    up: [
        [
            [0.0, 0.0, 0.0, -1.0 / 3.0, 1.0 / 2.0],
            [0.0, -1.0 / 2.0, 1.0, 2.0 / 3.0, -1.0],
            [0.0, 0.0, 0.0, -1.0 / 3.0, 1.0 / 2.0],
        ],
        [
            [0.0, 0.0, 0.0, 4.0 / 3.0, -1.0],
            [0.0, 2.0, -2.0, -8.0 / 3.0, 2.0],
            [0.0, 0.0, 0.0, 4.0 / 3.0, -1.0],
        ],
        [
            [0.0, 0.0, 1.0 / 2.0, -1.0, 1.0 / 2.0],
            [1.0 / 2.0, -3.0 / 2.0, 0.0, 2.0, -1.0],
            [0.0, 0.0, 1.0 / 2.0, -1.0, 1.0 / 2.0],
        ],
    ],
    vp: [
        [
            [0.0, 0.0, -1.0 / 4.0, 1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0 / 4.0, -1.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, 1.0, -2.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 2.0 / 3.0, 0.0],
        ],
        [
            [0.0, 1.0 / 2.0, -3.0 / 4.0, 1.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, -1.0 / 2.0, 3.0 / 4.0, -1.0 / 3.0, 0.0],
        ],
    ],
    pp: [
        [
            [0.0, 0.0, 0.0, -1.0 / 2.0, 2.0 / 3.0],
            [0.0, -1.0 / 2.0, 1.0, 1.0, -4.0 / 3.0],
            [0.0, 0.0, 0.0, -1.0 / 2.0, 2.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 2.0, -4.0 / 3.0],
            [0.0, 2.0, -2.0, -4.0, 8.0 / 3.0],
            [0.0, 0.0, 0.0, 2.0, -4.0 / 3.0],
        ],
        [
            [0.0, 0.0, 1.0, -3.0 / 2.0, 2.0 / 3.0],
            [1.0 / 2.0, -3.0 / 2.0, -1.0, 3.0, -4.0 / 3.0],
            [0.0, 0.0, 1.0, -3.0 / 2.0, 2.0 / 3.0],
        ],
    ],
};

/// North-east quadrant wedge at a vertex.
pub(crate) const NE_QUADRANT: WedgeTable = WedgeTable {
    uu: [
        [
            [1.0 / 4.0, -3.0 / 4.0, 1.0 / 2.0 + (9.0 / 4.0) * FRAC_1_PI, -3.0 / 4.0, 1.0 / 6.0],
            [0.0, 0.0, -3.0 * FRAC_1_PI, 7.0 / 6.0, -1.0 / 3.0],
            [0.0, 0.0, (3.0 / 4.0) * FRAC_1_PI, -5.0 / 12.0, 1.0 / 6.0],
        ],
        [
            [0.0, 1.0, -1.0 - 3.0 * FRAC_1_PI, 4.0 / 3.0, -1.0 / 3.0],
            [0.0, 0.0, 4.0 * FRAC_1_PI, -2.0, 2.0 / 3.0],
            [0.0, 0.0, -1.0 * FRAC_1_PI, 2.0 / 3.0, -1.0 / 3.0],
        ],
        [
            [0.0, -1.0 / 4.0, 1.0 / 2.0 + (3.0 / 4.0) * FRAC_1_PI, -7.0 / 12.0, 1.0 / 6.0],
            [0.0, 0.0, -1.0 * FRAC_1_PI, 5.0 / 6.0, -1.0 / 3.0],
            [0.0, 0.0, (1.0 / 4.0) * FRAC_1_PI, -1.0 / 4.0, 1.0 / 6.0],
        ],
    ],
    uv: [
        [
            [0.0, -3.0 / 4.0, 9.0 / 8.0 + 1.0 * FRAC_1_PI, -1.0, (2.0 / 3.0) * FRAC_1_PI],
            [0.0, 1.0, -3.0 / 2.0 - 2.0 * FRAC_1_PI, 5.0 / 3.0, (-4.0 / 3.0) * FRAC_1_PI],
            [0.0, -1.0 / 4.0, 3.0 / 8.0 + 1.0 * FRAC_1_PI, -2.0 / 3.0, (2.0 / 3.0) * FRAC_1_PI],
        ],
        [
            [0.0, 0.0, -3.0 / 2.0, 5.0 / 3.0, (-4.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, 2.0, -8.0 / 3.0, (8.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, -1.0 / 2.0, 1.0, (-4.0 / 3.0) * FRAC_1_PI],
        ],
        [
            [0.0, 0.0, 3.0 / 8.0, -2.0 / 3.0, (2.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, -1.0 / 2.0, 1.0, (-4.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, 1.0 / 8.0, -1.0 / 3.0, (2.0 / 3.0) * FRAC_1_PI],
        ],
    ],
    vu: [
        [
            [0.0, -3.0 / 4.0, 9.0 / 8.0 + 1.0 * FRAC_1_PI, -1.0, (2.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, -3.0 / 2.0, 5.0 / 3.0, (-4.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, 3.0 / 8.0, -2.0 / 3.0, (2.0 / 3.0) * FRAC_1_PI],
        ],
        [
            [0.0, 1.0, -3.0 / 2.0 - 2.0 * FRAC_1_PI, 5.0 / 3.0, (-4.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, 2.0, -8.0 / 3.0, (8.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, -1.0 / 2.0, 1.0, (-4.0 / 3.0) * FRAC_1_PI],
        ],
        [
            [0.0, -1.0 / 4.0, 3.0 / 8.0 + 1.0 * FRAC_1_PI, -2.0 / 3.0, (2.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, -1.0 / 2.0, 1.0, (-4.0 / 3.0) * FRAC_1_PI],
            [0.0, 0.0, 1.0 / 8.0, -1.0 / 3.0, (2.0 / 3.0) * FRAC_1_PI],
        ],
    ],
    vv: [
        [
            [1.0 / 4.0, -3.0 / 4.0, 1.0 / 2.0 + (9.0 / 4.0) * FRAC_1_PI, -3.0 / 4.0, 1.0 / 6.0],
            [0.0, 1.0, -1.0 - 3.0 * FRAC_1_PI, 4.0 / 3.0, -1.0 / 3.0],
            [0.0, -1.0 / 4.0, 1.0 / 2.0 + (3.0 / 4.0) * FRAC_1_PI, -7.0 / 12.0, 1.0 / 6.0],
        ],
        [
            [0.0, 0.0, -3.0 * FRAC_1_PI, 7.0 / 6.0, -1.0 / 3.0],
            [0.0, 0.0, 4.0 * FRAC_1_PI, -2.0, 2.0 / 3.0],
            [0.0, 0.0, -1.0 * FRAC_1_PI, 5.0 / 6.0, -1.0 / 3.0],
        ],
        [
            [0.0, 0.0, (3.0 / 4.0) * FRAC_1_PI, -5.0 / 12.0, 1.0 / 6.0],
            [0.0, 0.0, -1.0 * FRAC_1_PI, 2.0 / 3.0, -1.0 / 3.0],
            [0.0, 0.0, (1.0 / 4.0) * FRAC_1_PI, -1.0 / 4.0, 1.0 / 6.0],
        ],
    ],
    up: [
        [
            [0.0, 3.0 / 4.0, -13.0 / 8.0, 1.0 / 2.0 + 2.0 * FRAC_1_PI, -1.0 / 4.0],
            [0.0, 0.0, 3.0 / 2.0, -1.0 + (-8.0 / 3.0) * FRAC_1_PI, 1.0 / 2.0],
            [0.0, 0.0, -3.0 / 8.0, 1.0 / 2.0 + (2.0 / 3.0) * FRAC_1_PI, -1.0 / 4.0],
        ],
        [
            [0.0, -1.0, 5.0 / 2.0, -2.0 / 3.0 - 4.0 * FRAC_1_PI, 1.0 / 2.0],
            [0.0, 0.0, -2.0, 4.0 / 3.0 + (16.0 / 3.0) * FRAC_1_PI, -1.0],
            [0.0, 0.0, 1.0 / 2.0, -2.0 / 3.0 + (-4.0 / 3.0) * FRAC_1_PI, 1.0 / 2.0],
        ],
        [
            [0.0, 1.0 / 4.0, -7.0 / 8.0, 1.0 / 6.0 + 2.0 * FRAC_1_PI, -1.0 / 4.0],
            [0.0, 0.0, 1.0 / 2.0, -1.0 / 3.0 + (-8.0 / 3.0) * FRAC_1_PI, 1.0 / 2.0],
            [0.0, 0.0, -1.0 / 8.0, 1.0 / 6.0 + (2.0 / 3.0) * FRAC_1_PI, -1.0 / 4.0],
        ],
    ],
    vp: [
        [
            [0.0, 3.0 / 4.0, -13.0 / 8.0, 1.0 / 2.0 + 2.0 * FRAC_1_PI, -1.0 / 4.0],
            [0.0, -1.0, 5.0 / 2.0, -2.0 / 3.0 - 4.0 * FRAC_1_PI, 1.0 / 2.0],
            [0.0, 1.0 / 4.0, -7.0 / 8.0, 1.0 / 6.0 + 2.0 * FRAC_1_PI, -1.0 / 4.0],
        ],
        [
            [0.0, 0.0, 3.0 / 2.0, -1.0 + (-8.0 / 3.0) * FRAC_1_PI, 1.0 / 2.0],
            [0.0, 0.0, -2.0, 4.0 / 3.0 + (16.0 / 3.0) * FRAC_1_PI, -1.0],
            [0.0, 0.0, 1.0 / 2.0, -1.0 / 3.0 + (-8.0 / 3.0) * FRAC_1_PI, 1.0 / 2.0],
        ],
        [
            [0.0, 0.0, -3.0 / 8.0, 1.0 / 2.0 + (2.0 / 3.0) * FRAC_1_PI, -1.0 / 4.0],
            [0.0, 0.0, 1.0 / 2.0, -2.0 / 3.0 + (-4.0 / 3.0) * FRAC_1_PI, 1.0 / 2.0],
            [0.0, 0.0, -1.0 / 8.0, 1.0 / 6.0 + (2.0 / 3.0) * FRAC_1_PI, -1.0 / 4.0],
        ],
    ],
    pp: [
        [
            [1.0 / 4.0, -3.0 / 2.0, 1.0 + (9.0 / 2.0) * FRAC_1_PI, -3.0 / 2.0, 1.0 / 3.0],
            [0.0, 1.0, -1.0 - 6.0 * FRAC_1_PI, 5.0 / 2.0, -2.0 / 3.0],
            [0.0, -1.0 / 4.0, 1.0 / 2.0 + (3.0 / 2.0) * FRAC_1_PI, -1.0, 1.0 / 3.0],
        ],
        [
            [0.0, 1.0, -1.0 - 6.0 * FRAC_1_PI, 5.0 / 2.0, -2.0 / 3.0],
            [0.0, 0.0, 8.0 * FRAC_1_PI, -4.0, 4.0 / 3.0],
            [0.0, 0.0, -2.0 * FRAC_1_PI, 3.0 / 2.0, -2.0 / 3.0],
        ],
        [
            [0.0, -1.0 / 4.0, 1.0 / 2.0 + (3.0 / 2.0) * FRAC_1_PI, -1.0, 1.0 / 3.0],
            [0.0, 0.0, -2.0 * FRAC_1_PI, 3.0 / 2.0, -2.0 / 3.0],
            [0.0, 0.0, (1.0 / 2.0) * FRAC_1_PI, -1.0 / 2.0, 1.0 / 3.0],
        ],
    ],
};

/// Full disk at a cell center.
pub(crate) const FULL_DISK: WedgeTable = WedgeTable {
    uu: [
        [
            [0.0, 0.0, 0.0, 0.0, 2.0 / 3.0],
            [0.0, 0.0, 2.0, 0.0, -4.0 / 3.0],
            [0.0, 0.0, 0.0, 0.0, 2.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 0.0, -4.0 / 3.0],
            [1.0, 0.0, -4.0, 0.0, 8.0 / 3.0],
            [0.0, 0.0, 0.0, 0.0, -4.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 0.0, 2.0 / 3.0],
            [0.0, 0.0, 2.0, 0.0, -4.0 / 3.0],
            [0.0, 0.0, 0.0, 0.0, 2.0 / 3.0],
        ],
    ],
    uv: [
        [
            [0.0, 0.0, 1.0 / 2.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, -1.0 / 2.0, 0.0, 0.0],
        ],
        [
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
        [
            [0.0, 0.0, -1.0 / 2.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0 / 2.0, 0.0, 0.0],
        ],
    ],
    vu: [
        [
            [0.0, 0.0, 1.0 / 2.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, -1.0 / 2.0, 0.0, 0.0],
        ],
        [
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
        [
            [0.0, 0.0, -1.0 / 2.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0 / 2.0, 0.0, 0.0],
        ],
    ],
    vv: [
        [
            [0.0, 0.0, 0.0, 0.0, 2.0 / 3.0],
            [0.0, 0.0, 0.0, 0.0, -4.0 / 3.0],
            [0.0, 0.0, 0.0, 0.0, 2.0 / 3.0],
        ],
        [
            [0.0, 0.0, 2.0, 0.0, -4.0 / 3.0],
            [1.0, 0.0, -4.0, 0.0, 8.0 / 3.0],
            [0.0, 0.0, 2.0, 0.0, -4.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 0.0, 2.0 / 3.0],
            [0.0, 0.0, 0.0, 0.0, -4.0 / 3.0],
            [0.0, 0.0, 0.0, 0.0, 2.0 / 3.0],
        ],
    ],
    up: [
        [
            [0.0, 0.0, 0.0, 2.0 / 3.0, 0.0],
            [0.0, 1.0, 0.0, -4.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 2.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
        ],
        [
            [0.0, 0.0, 0.0, -2.0 / 3.0, 0.0],
            [0.0, -1.0, 0.0, 4.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, -2.0 / 3.0, 0.0],
        ],
    ],
    vp: [
        [
            [0.0, 0.0, 0.0, 2.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, -2.0 / 3.0, 0.0],
        ],
        [
            [0.0, 1.0, 0.0, -4.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 4.0 / 3.0, 0.0],
        ],
        [
            [0.0, 0.0, 0.0, 2.0 / 3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, -2.0 / 3.0, 0.0],
        ],
    ],
    pp: [
        [
            [0.0, 0.0, 0.0, 0.0, 4.0 / 3.0],
            [0.0, 0.0, 2.0, 0.0, -8.0 / 3.0],
            [0.0, 0.0, 0.0, 0.0, 4.0 / 3.0],
        ],
        [
            [0.0, 0.0, 2.0, 0.0, -8.0 / 3.0],
            [1.0, 0.0, -8.0, 0.0, 16.0 / 3.0],
            [0.0, 0.0, 2.0, 0.0, -8.0 / 3.0],
        ],
        [
            [0.0, 0.0, 0.0, 0.0, 4.0 / 3.0],
            [0.0, 0.0, 2.0, 0.0, -8.0 / 3.0],
            [0.0, 0.0, 0.0, 0.0, 4.0 / 3.0],
        ],
    ],
};
