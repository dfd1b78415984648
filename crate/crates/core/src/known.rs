//! Published values of `n_g`, the number of numerical semigroups of genus
//! `g` (OEIS A007323), for `g <= 60`.

pub const KNOWN_COUNTS: [u64; 61] = [
    1,
    1,
    2,
    4,
    7,
    12,
    23,
    39,
    67,
    118,
    204,
    343,
    592,
    1001,
    1693,
    2857,
    4806,
    8045,
    13467,
    22464,
    37396,
    62194,
    103246,
    170963,
    282828,
    467224,
    770832,
    1270267,
    2091030,
    3437839,
    5646773,
    9266788,
    15195070,
    24896206,
    40761087,
    66687201,
    109032500,
    178158289,
    290939807,
    474851445,
    774614284,
    1262992840,
    2058356522,
    3353191846,
    5460401576,
    8888486816,
    14463633648,
    23527845502,
    38260496374,
    62200036752,
    101090300128,
    164253200784,
    266815155103,
    433317458741,
    703569992121,
    1142140736859,
    1853737832107,
    3008140981820,
    4880606790010,
    7917344087695,
    12841603251351,
];
