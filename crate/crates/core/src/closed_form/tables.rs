// Generated coefficient tables. Each term is (coefficient, exponents).
// Two-source tables use exponents of (l1, l2, mu, s); the three-source
// tables use exponents of (l1, l2, l3).

use super::Term;

pub(crate) const SINGLE_SLEEP_GAMMA: &[&[Term<4>]] = &[
    &[
        (3, [1, 0, 2, 1]),
        (2, [1, 0, 1, 0]),
        (2, [0, 1, 2, 1]),
        (2, [0, 1, 1, 0]),
        (1, [0, 0, 2, 0]),
    ],
    &[
        (4, [1, 0, 2, 2]),
        (6, [1, 0, 1, 1]),
        (3, [0, 1, 2, 2]),
        (4, [0, 1, 1, 1]),
    ],
    &[
        (3, [1, 0, 2, 3]),
        (7, [1, 0, 1, 2]),
        (3, [1, 0, 0, 1]),
        (2, [0, 1, 2, 3]),
        (4, [0, 1, 1, 2]),
        (2, [0, 1, 0, 1]),
        (1, [0, 0, 0, 0]),
    ],
    &[
        (4, [1, 0, 1, 3]),
        (3, [1, 0, 0, 2]),
        (2, [0, 1, 1, 3]),
        (1, [0, 1, 0, 2]),
    ],
    &[
        (1, [1, 0, 1, 4]),
        (1, [1, 0, 0, 3]),
        (1, [0, 0, 2, 4]),
    ],
];

pub(crate) const SINGLE_SLEEP_ETA: &[&[Term<4>]] = &[
    &[
        (4, [1, 1, 3, 1]),
        (3, [0, 2, 3, 1]),
        (1, [0, 1, 3, 0]),
    ],
    &[
        (5, [3, 0, 3, 3]),
        (23, [2, 1, 3, 3]),
        (1, [2, 0, 4, 3]),
        (1, [2, 0, 3, 2]),
        (4, [2, 0, 2, 1]),
        (30, [1, 2, 3, 3]),
        (4, [1, 1, 4, 3]),
        (10, [1, 1, 3, 2]),
        (15, [1, 1, 2, 1]),
        (1, [1, 0, 2, 0]),
        (11, [0, 3, 3, 3]),
        (2, [0, 2, 4, 3]),
        (8, [0, 2, 3, 2]),
        (9, [0, 2, 2, 1]),
        (1, [0, 1, 4, 2]),
        (3, [0, 1, 2, 0]),
    ],
    &[
        (9, [3, 0, 3, 4]),
        (27, [2, 1, 3, 4]),
        (3, [2, 0, 4, 4]),
        (8, [2, 0, 2, 2]),
        (8, [2, 0, 1, 1]),
        (30, [1, 2, 3, 4]),
        (4, [1, 1, 4, 4]),
        (29, [1, 1, 2, 2]),
        (18, [1, 1, 1, 1]),
        (2, [1, 0, 1, 0]),
        (10, [0, 3, 3, 4]),
        (3, [0, 2, 4, 4]),
        (16, [0, 2, 2, 2]),
        (9, [0, 2, 1, 1]),
        (3, [0, 1, 1, 0]),
    ],
    &[
        (11, [2, 0, 2, 3]),
        (13, [2, 0, 1, 2]),
        (36, [1, 1, 2, 3]),
        (28, [1, 1, 1, 2]),
        (17, [0, 2, 2, 3]),
        (12, [0, 2, 1, 2]),
    ],
    &[
        (10, [2, 0, 2, 4]),
        (11, [2, 0, 1, 3]),
        (26, [1, 1, 2, 4]),
        (24, [1, 1, 1, 3]),
        (3, [1, 0, 4, 5]),
        (4, [1, 0, 0, 1]),
        (10, [0, 2, 2, 4]),
        (9, [0, 2, 1, 3]),
        (2, [0, 1, 4, 5]),
        (3, [0, 1, 0, 1]),
        (1, [0, 0, 0, 0]),
    ],
    &[
        (5, [2, 0, 2, 5]),
        (5, [2, 0, 1, 4]),
        (9, [1, 1, 2, 5]),
        (11, [1, 1, 1, 4]),
        (7, [1, 0, 3, 5]),
        (6, [1, 0, 0, 2]),
        (3, [0, 2, 2, 5]),
        (3, [0, 2, 1, 4]),
        (5, [0, 1, 3, 5]),
        (3, [0, 1, 0, 2]),
    ],
    &[
        (1, [2, 0, 1, 5]),
        (2, [1, 1, 1, 5]),
        (2, [1, 0, 3, 6]),
        (4, [1, 0, 0, 3]),
        (1, [0, 1, 3, 6]),
        (1, [0, 1, 0, 3]),
        (1, [0, 0, 4, 6]),
    ],
    &[
        (1, [1, 0, 2, 6]),
        (1, [1, 0, 0, 4]),
    ],
];

pub(crate) const MULTI_SLEEP_ETA: &[&[Term<4>]] = &[
    &[
        (1, [0, 1, 4, 1]),
        (1, [0, 1, 3, 0]),
    ],
    &[
        (6, [3, 0, 2, 2]),
        (27, [2, 1, 2, 2]),
        (4, [2, 0, 3, 2]),
        (4, [2, 0, 2, 1]),
        (30, [1, 2, 2, 2]),
        (16, [1, 1, 3, 2]),
        (16, [1, 1, 2, 1]),
        (1, [1, 0, 4, 2]),
        (1, [1, 0, 3, 1]),
        (1, [1, 0, 2, 0]),
        (10, [0, 3, 2, 2]),
        (10, [0, 2, 3, 2]),
        (10, [0, 2, 2, 1]),
        (3, [0, 1, 4, 2]),
        (6, [0, 1, 3, 1]),
        (3, [0, 1, 2, 0]),
    ],
    &[
        (5, [2, 0, 3, 3]),
        (5, [2, 0, 1, 1]),
        (12, [1, 1, 3, 3]),
        (12, [1, 1, 1, 1]),
        (2, [1, 0, 4, 3]),
        (2, [1, 0, 1, 0]),
        (6, [0, 2, 3, 3]),
        (6, [0, 2, 1, 1]),
        (3, [0, 1, 4, 3]),
        (3, [0, 1, 1, 0]),
    ],
    &[
        (4, [2, 0, 2, 3]),
        (4, [2, 0, 1, 2]),
        (9, [1, 1, 2, 3]),
        (9, [1, 1, 1, 2]),
        (3, [0, 2, 2, 3]),
        (3, [0, 2, 1, 2]),
    ],
    &[
        (1, [2, 0, 1, 3]),
        (2, [1, 1, 1, 3]),
        (2, [1, 0, 3, 4]),
        (2, [1, 0, 0, 1]),
        (1, [0, 1, 3, 4]),
        (1, [0, 1, 0, 1]),
        (1, [0, 0, 4, 4]),
        (1, [0, 0, 0, 0]),
    ],
    &[
        (1, [1, 0, 2, 4]),
        (1, [1, 0, 0, 2]),
    ],
];

pub(crate) const PREEMPT_WAIT_ETA: &[&[Term<3>]] = &[
    &[
        (3, [9, 1, 0]),
        (3, [9, 0, 1]),
        (12, [8, 2, 0]),
        (30, [8, 1, 1]),
        (12, [8, 0, 2]),
        (18, [7, 3, 0]),
        (85, [7, 2, 1]),
        (85, [7, 1, 2]),
        (18, [7, 0, 3]),
        (12, [6, 4, 0]),
        (105, [6, 3, 1]),
        (202, [6, 2, 2]),
        (105, [6, 1, 3]),
        (12, [6, 0, 4]),
        (3, [5, 5, 0]),
        (60, [5, 4, 1]),
        (218, [5, 3, 2]),
        (218, [5, 2, 3]),
        (60, [5, 1, 4]),
        (3, [5, 0, 5]),
        (13, [4, 5, 1]),
        (110, [4, 4, 2]),
        (208, [4, 3, 3]),
        (110, [4, 2, 4]),
        (13, [4, 1, 5]),
        (21, [3, 5, 2]),
        (92, [3, 4, 3]),
        (92, [3, 3, 4]),
        (21, [3, 2, 5]),
        (15, [2, 5, 3]),
        (34, [2, 4, 4]),
        (15, [2, 3, 5]),
        (4, [1, 5, 4]),
        (4, [1, 4, 5]),
    ],
    &[
        (1, [9, 0, 0]),
        (25, [8, 1, 0]),
        (25, [8, 0, 1]),
        (78, [7, 2, 0]),
        (200, [7, 1, 1]),
        (78, [7, 0, 2]),
        (94, [6, 3, 0]),
        (476, [6, 2, 1]),
        (476, [6, 1, 2]),
        (94, [6, 0, 3]),
        (49, [5, 4, 0]),
        (490, [5, 3, 1]),
        (979, [5, 2, 2]),
        (490, [5, 1, 3]),
        (49, [5, 0, 4]),
        (9, [4, 5, 0]),
        (227, [4, 4, 1]),
        (901, [4, 3, 2]),
        (901, [4, 2, 3]),
        (227, [4, 1, 4]),
        (9, [4, 0, 5]),
        (38, [3, 5, 1]),
        (377, [3, 4, 2]),
        (748, [3, 3, 3]),
        (377, [3, 2, 4]),
        (38, [3, 1, 5]),
        (57, [2, 5, 2]),
        (279, [2, 4, 3]),
        (279, [2, 3, 4]),
        (57, [2, 2, 5]),
        (36, [1, 5, 3]),
        (88, [1, 4, 4]),
        (36, [1, 3, 5]),
        (8, [0, 5, 4]),
        (8, [0, 4, 5]),
    ],
    &[
        (7, [8, 0, 0]),
        (87, [7, 1, 0]),
        (87, [7, 0, 1]),
        (210, [6, 2, 0]),
        (556, [6, 1, 1]),
        (210, [6, 0, 2]),
        (196, [5, 3, 0]),
        (1082, [5, 2, 1]),
        (1082, [5, 1, 2]),
        (196, [5, 0, 3]),
        (75, [4, 4, 0]),
        (885, [4, 3, 1]),
        (1861, [4, 2, 2]),
        (885, [4, 1, 3]),
        (75, [4, 0, 4]),
        (9, [3, 5, 0]),
        (306, [3, 4, 1]),
        (1374, [3, 3, 2]),
        (1374, [3, 2, 3]),
        (306, [3, 1, 4]),
        (9, [3, 0, 5]),
        (34, [2, 5, 1]),
        (428, [2, 4, 2]),
        (900, [2, 3, 3]),
        (428, [2, 2, 4]),
        (34, [2, 1, 5]),
        (42, [1, 5, 2]),
        (234, [1, 4, 3]),
        (234, [1, 3, 4]),
        (42, [1, 2, 5]),
        (16, [0, 5, 3]),
        (40, [0, 4, 4]),
        (16, [0, 3, 5]),
    ],
    &[
        (21, [7, 0, 0]),
        (165, [6, 1, 0]),
        (165, [6, 0, 1]),
        (300, [5, 2, 0]),
        (833, [5, 1, 1]),
        (300, [5, 0, 2]),
        (204, [4, 3, 0]),
        (1277, [4, 2, 1]),
        (1277, [4, 1, 2]),
        (204, [4, 0, 3]),
        (51, [3, 4, 0]),
        (780, [3, 3, 1]),
        (1762, [3, 2, 2]),
        (780, [3, 1, 3]),
        (51, [3, 0, 4]),
        (3, [2, 5, 0]),
        (182, [2, 4, 1]),
        (972, [2, 3, 2]),
        (972, [2, 2, 3]),
        (182, [2, 1, 4]),
        (3, [2, 0, 5]),
        (11, [1, 5, 1]),
        (200, [1, 4, 2]),
        (450, [1, 3, 3]),
        (200, [1, 2, 4]),
        (11, [1, 1, 5]),
        (10, [0, 5, 2]),
        (62, [0, 4, 3]),
        (62, [0, 3, 4]),
        (10, [0, 2, 5]),
    ],
    &[
        (35, [6, 0, 0]),
        (185, [5, 1, 0]),
        (185, [5, 0, 1]),
        (240, [4, 2, 0]),
        (725, [4, 1, 1]),
        (240, [4, 0, 2]),
        (106, [3, 3, 0]),
        (836, [3, 2, 1]),
        (836, [3, 1, 2]),
        (106, [3, 0, 3]),
        (13, [2, 4, 0]),
        (355, [2, 3, 1]),
        (890, [2, 2, 2]),
        (355, [2, 1, 3]),
        (13, [2, 0, 4]),
        (51, [1, 4, 1]),
        (339, [1, 3, 2]),
        (339, [1, 2, 3]),
        (51, [1, 1, 4]),
        (2, [0, 5, 1]),
        (38, [0, 4, 2]),
        (88, [0, 3, 3]),
        (38, [0, 2, 4]),
        (2, [0, 1, 5]),
    ],
    &[
        (35, [5, 0, 0]),
        (123, [4, 1, 0]),
        (123, [4, 0, 1]),
        (102, [3, 2, 0]),
        (369, [3, 1, 1]),
        (102, [3, 0, 2]),
        (22, [2, 3, 0]),
        (307, [2, 2, 1]),
        (307, [2, 1, 2]),
        (22, [2, 0, 3]),
        (87, [1, 3, 1]),
        (246, [1, 2, 2]),
        (87, [1, 1, 3]),
        (8, [0, 4, 1]),
        (54, [0, 3, 2]),
        (54, [0, 2, 3]),
        (8, [0, 1, 4]),
    ],
    &[
        (21, [4, 0, 0]),
        (45, [3, 1, 0]),
        (45, [3, 0, 1]),
        (18, [2, 2, 0]),
        (107, [2, 1, 1]),
        (18, [2, 0, 2]),
        (65, [1, 2, 1]),
        (65, [1, 1, 2]),
        (12, [0, 3, 1]),
        (34, [0, 2, 2]),
        (12, [0, 1, 3]),
    ],
    &[
        (7, [3, 0, 0]),
        (7, [2, 1, 0]),
        (7, [2, 0, 1]),
        (18, [1, 1, 1]),
        (8, [0, 2, 1]),
        (8, [0, 1, 2]),
    ],
    &[
        (1, [2, 0, 0]),
        (2, [0, 1, 1]),
    ],
];

pub(crate) const PREEMPT_WAIT_GAMMA: &[&[Term<3>]] = &[
    &[
        (2, [6, 1, 0]),
        (2, [6, 0, 1]),
        (6, [5, 2, 0]),
        (14, [5, 1, 1]),
        (6, [5, 0, 2]),
        (6, [4, 3, 0]),
        (26, [4, 2, 1]),
        (26, [4, 1, 2]),
        (6, [4, 0, 3]),
        (2, [3, 4, 0]),
        (18, [3, 3, 1]),
        (34, [3, 2, 2]),
        (18, [3, 1, 3]),
        (2, [3, 0, 4]),
        (4, [2, 4, 1]),
        (16, [2, 3, 2]),
        (16, [2, 2, 3]),
        (4, [2, 1, 4]),
        (2, [1, 4, 2]),
        (4, [1, 3, 3]),
        (2, [1, 2, 4]),
    ],
    &[
        (1, [6, 0, 0]),
        (14, [5, 1, 0]),
        (14, [5, 0, 1]),
        (30, [4, 2, 0]),
        (71, [4, 1, 1]),
        (30, [4, 0, 2]),
        (22, [3, 3, 0]),
        (103, [3, 2, 1]),
        (103, [3, 1, 2]),
        (22, [3, 0, 3]),
        (5, [2, 4, 0]),
        (55, [2, 3, 1]),
        (110, [2, 2, 2]),
        (55, [2, 1, 3]),
        (5, [2, 0, 4]),
        (9, [1, 4, 1]),
        (41, [1, 3, 2]),
        (41, [1, 2, 3]),
        (9, [1, 1, 4]),
        (4, [0, 4, 2]),
        (8, [0, 3, 3]),
        (4, [0, 2, 4]),
    ],
    &[
        (6, [5, 0, 0]),
        (40, [4, 1, 0]),
        (40, [4, 0, 1]),
        (60, [3, 2, 0]),
        (146, [3, 1, 1]),
        (60, [3, 0, 2]),
        (30, [2, 3, 0]),
        (152, [2, 2, 1]),
        (152, [2, 1, 2]),
        (30, [2, 0, 3]),
        (4, [1, 4, 0]),
        (52, [1, 3, 1]),
        (108, [1, 2, 2]),
        (52, [1, 1, 3]),
        (4, [1, 0, 4]),
        (4, [0, 4, 1]),
        (20, [0, 3, 2]),
        (20, [0, 2, 3]),
        (4, [0, 1, 4]),
    ],
    &[
        (15, [4, 0, 0]),
        (60, [3, 1, 0]),
        (60, [3, 0, 1]),
        (60, [2, 2, 0]),
        (151, [2, 1, 1]),
        (60, [2, 0, 2]),
        (18, [1, 3, 0]),
        (99, [1, 2, 1]),
        (99, [1, 1, 2]),
        (18, [1, 0, 3]),
        (1, [0, 4, 0]),
        (16, [0, 3, 1]),
        (34, [0, 2, 2]),
        (16, [0, 1, 3]),
        (1, [0, 0, 4]),
    ],
    &[
        (20, [3, 0, 0]),
        (50, [2, 1, 0]),
        (50, [2, 0, 1]),
        (30, [1, 2, 0]),
        (78, [1, 1, 1]),
        (30, [1, 0, 2]),
        (4, [0, 3, 0]),
        (24, [0, 2, 1]),
        (24, [0, 1, 2]),
        (4, [0, 0, 3]),
    ],
    &[
        (15, [2, 0, 0]),
        (22, [1, 1, 0]),
        (22, [1, 0, 1]),
        (6, [0, 2, 0]),
        (16, [0, 1, 1]),
        (6, [0, 0, 2]),
    ],
    &[
        (6, [1, 0, 0]),
        (4, [0, 1, 0]),
        (4, [0, 0, 1]),
    ],
    &[
        (1, [0, 0, 0]),
    ],
];
