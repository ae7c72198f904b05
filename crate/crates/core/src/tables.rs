//! Integer coefficient tables of the polynomials in (b, c) behind the
//! coefficient functions and the closed forms of D. Each term is
//! `(coefficient, power of b, power of c)`.

pub(crate) type Term = (i64, u32, u32);

/// Common denominator of E10, E01, E11; equals L1 * L2.
pub(crate) const Q: &[Term] = &[(1, 2, 2), (-3, 2, 1), (-1, 1, 2), (2, 2, 0), (2, 1, 0), (1, 0, 1)];

/// b c - 1 - b.
pub(crate) const L1: &[Term] = &[(1, 1, 1), (-1, 1, 0), (-1, 0, 0)];

/// b c - c - 2 b.
pub(crate) const L2: &[Term] = &[(1, 1, 1), (-2, 1, 0), (-1, 0, 1)];

/// Quartic factor shared by E30, E03, E21, E12.
pub(crate) const R: &[Term] = &[(1, 2, 4), (-6, 2, 3), (13, 2, 2), (-12, 2, 1), (4, 2, 0), (1, 0, 2)];

/// Numerator of E10 over Q.
pub(crate) const E10_NUM: &[Term] = &[(-1, 2, 2), (3, 2, 1), (-2, 2, 0), (1, 0, 1)];

/// Numerator of E01 over Q.
pub(crate) const E01_NUM: &[Term] = &[(-1, 1, 2), (2, 1, 1), (-2, 1, 0)];

/// Numerator of E11 over Q.
pub(crate) const E11_NUM: &[Term] = &[(-1, 1, 2), (4, 1, 1), (-2, 1, 0)];

/// Twice the numerator of E20 over L1^2 L2^2.
pub(crate) const E20_NUM: &[Term] = &[
    (2, 3, 4),
    (-6, 3, 3),
    (-1, 2, 4),
    (-4, 2, 3),
    (12, 3, 1),
    (16, 2, 2),
    (2, 1, 3),
    (-8, 3, 0),
    (-8, 2, 1),
    (-4, 2, 0),
    (-4, 1, 1),
];

/// Twice the numerator of E02 over L1^2 L2^2.
pub(crate) const E02_NUM: &[Term] = &[
    (-2, 4, 4),
    (12, 4, 3),
    (4, 3, 4),
    (-26, 4, 2),
    (-12, 3, 3),
    (-1, 2, 4),
    (24, 4, 1),
    (-8, 2, 3),
    (-8, 4, 0),
    (24, 3, 1),
    (28, 2, 2),
    (4, 1, 3),
    (-16, 3, 0),
    (-16, 2, 1),
    (-4, 2, 0),
    (-8, 1, 1),
    (-2, 0, 2),
];

/// Numerator of E30 over R L1^2 L2^2.
pub(crate) const E30_NUM: &[Term] = &[
    (-2, 4, 7),
    (18, 4, 6),
    (1, 3, 7),
    (-66, 4, 5),
    (-7, 3, 6),
    (126, 4, 4),
    (14, 3, 5),
    (-132, 4, 3),
    (2, 2, 5),
    (72, 4, 2),
    (-28, 3, 3),
    (-6, 2, 4),
    (-16, 4, 1),
    (28, 3, 2),
    (4, 2, 3),
    (-8, 3, 1),
];

/// Twice the numerator of E03 over R L1^2 L2^2.
pub(crate) const E03_NUM: &[Term] = &[
    (2, 5, 8),
    (-22, 5, 7),
    (-1, 4, 8),
    (106, 5, 6),
    (6, 4, 7),
    (-294, 5, 5),
    (-13, 4, 6),
    (2, 3, 7),
    (516, 5, 4),
    (12, 4, 5),
    (-6, 3, 6),
    (-588, 5, 3),
    (-4, 3, 5),
    (-3, 2, 6),
    (424, 5, 2),
    (-24, 4, 3),
    (24, 3, 4),
    (8, 2, 5),
    (-176, 5, 1),
    (52, 4, 2),
    (-8, 3, 3),
    (2, 1, 5),
    (32, 5, 0),
    (-48, 4, 1),
    (-24, 3, 2),
    (-16, 2, 3),
    (-4, 1, 4),
    (16, 4, 0),
    (16, 3, 1),
    (12, 2, 2),
    (4, 1, 3),
];

/// The long factor of the E21 numerator, without the -4c^3 term.
pub(crate) const E21_CORE: &[Term] = &[
    (2, 4, 8),
    (-26, 4, 7),
    (-1, 3, 8),
    (142, 4, 6),
    (14, 3, 7),
    (-426, 4, 5),
    (-61, 3, 6),
    (-2, 2, 7),
    (768, 4, 4),
    (100, 3, 5),
    (-2, 2, 6),
    (-852, 4, 3),
    (52, 2, 5),
    (5, 1, 6),
    (568, 4, 2),
    (-200, 3, 3),
    (-128, 2, 4),
    (-16, 1, 5),
    (-208, 4, 1),
    (244, 3, 2),
    (104, 2, 3),
    (-2, 0, 5),
    (32, 4, 0),
    (-112, 3, 1),
    (-8, 2, 2),
    (32, 1, 3),
    (8, 0, 4),
    (16, 3, 0),
    (-16, 2, 1),
    (-20, 1, 2),
];

/// Numerator of E12 over R L1^2 L2^2.
pub(crate) const E12_NUM: &[Term] = &[
    (1, 6, 8),
    (-12, 6, 7),
    (-2, 5, 8),
    (62, 6, 6),
    (18, 5, 7),
    (1, 4, 8),
    (-180, 6, 5),
    (-62, 5, 6),
    (-6, 4, 7),
    (321, 6, 4),
    (90, 5, 5),
    (8, 4, 6),
    (-1, 3, 7),
    (-360, 6, 3),
    (18, 4, 5),
    (7, 3, 6),
    (248, 6, 2),
    (-180, 5, 3),
    (-57, 4, 4),
    (-14, 3, 5),
    (-96, 6, 1),
    (248, 5, 2),
    (36, 4, 3),
    (-6, 2, 5),
    (16, 6, 0),
    (-144, 5, 1),
    (32, 4, 2),
    (28, 3, 3),
    (17, 2, 4),
    (2, 1, 5),
    (32, 5, 0),
    (-48, 4, 1),
    (-28, 3, 2),
    (-12, 2, 3),
    (16, 4, 0),
    (8, 3, 1),
    (-4, 1, 3),
    (-1, 0, 4),
];

/// Squared numerator factor of D1.
pub(crate) const P1: &[Term] = &[
    (4, 8, 10),
    (-60, 8, 9),
    (-18, 7, 10),
    (400, 8, 8),
    (216, 7, 9),
    (9, 6, 10),
    (-1560, 8, 7),
    (-1080, 7, 8),
    (51, 6, 9),
    (3940, 8, 6),
    (2808, 7, 7),
    (-1319, 6, 8),
    (-162, 5, 9),
    (-6732, 8, 5),
    (-3546, 7, 6),
    (7905, 6, 7),
    (1494, 5, 8),
    (45, 4, 9),
    (7880, 8, 4),
    (-24186, 6, 6),
    (-5238, 5, 7),
    (-231, 4, 8),
    (-6240, 8, 3),
    (7092, 7, 4),
    (43740, 6, 5),
    (7686, 5, 6),
    (-300, 4, 7),
    (-36, 3, 8),
    (3200, 8, 2),
    (-11232, 7, 3),
    (-48372, 6, 4),
    (3906, 4, 6),
    (378, 3, 7),
    (-960, 8, 1),
    (8640, 7, 2),
    (31620, 6, 3),
    (-15372, 5, 4),
    (-8904, 4, 5),
    (-882, 3, 6),
    (-13, 2, 7),
    (128, 8, 0),
    (-3456, 7, 1),
    (-10552, 6, 2),
    (20952, 5, 3),
    (7812, 4, 4),
    (-108, 2, 6),
    (576, 7, 0),
    (816, 6, 1),
    (-11952, 5, 2),
    (-1200, 4, 3),
    (1764, 3, 4),
    (380, 2, 5),
    (18, 1, 6),
    (288, 6, 0),
    (2592, 5, 1),
    (-1848, 4, 2),
    (-1512, 3, 3),
    (-216, 2, 4),
    (720, 4, 1),
    (288, 3, 2),
    (-52, 2, 3),
    (-36, 1, 4),
    (-4, 0, 5),
];

/// Cube factor of D1.
pub(crate) const C1: &[Term] = &[
    (2, 4, 4),
    (-12, 4, 3),
    (-6, 3, 4),
    (26, 4, 2),
    (18, 3, 3),
    (3, 2, 4),
    (-24, 4, 1),
    (8, 2, 3),
    (8, 4, 0),
    (-36, 3, 1),
    (-36, 2, 2),
    (-6, 1, 3),
    (24, 3, 0),
    (16, 2, 1),
    (12, 2, 0),
    (12, 1, 1),
    (2, 0, 2),
];

/// Squared numerator factor of D2.
pub(crate) const P2: &[Term] = &[
    (36, 6, 10),
    (-504, 6, 9),
    (-45, 5, 10),
    (3168, 6, 8),
    (441, 5, 9),
    (14, 4, 10),
    (-11808, 6, 7),
    (-1809, 5, 8),
    (-6, 4, 9),
    (28980, 6, 6),
    (3951, 5, 7),
    (-322, 4, 8),
    (-45, 3, 9),
    (-49032, 6, 5),
    (-4410, 5, 6),
    (758, 4, 7),
    (-9, 3, 8),
    (57960, 6, 4),
    (404, 4, 6),
    (1044, 3, 7),
    (104, 2, 8),
    (-47232, 6, 3),
    (8820, 5, 4),
    (-2464, 4, 5),
    (-2394, 3, 6),
    (-210, 2, 7),
    (25344, 6, 2),
    (-15804, 5, 3),
    (808, 4, 4),
    (-720, 2, 6),
    (-99, 1, 7),
    (-8064, 6, 1),
    (14472, 5, 2),
    (3032, 4, 3),
    (4788, 3, 4),
    (2288, 2, 5),
    (252, 1, 6),
    (1152, 6, 0),
    (-7056, 5, 1),
    (-2576, 4, 2),
    (-4176, 3, 3),
    (-1440, 2, 4),
    (36, 0, 6),
    (1440, 5, 0),
    (-96, 4, 1),
    (72, 3, 2),
    (-840, 2, 3),
    (-504, 1, 4),
    (-72, 0, 5),
    (448, 4, 0),
    (720, 3, 1),
    (832, 2, 2),
    (396, 1, 3),
    (72, 0, 4),
];

/// Cube factor of D2.
pub(crate) const C2: &[Term] = &[
    (6, 4, 4),
    (-36, 4, 3),
    (-12, 3, 4),
    (78, 4, 2),
    (36, 3, 3),
    (5, 2, 4),
    (-72, 4, 1),
    (16, 2, 3),
    (24, 4, 0),
    (-72, 3, 1),
    (-68, 2, 2),
    (-12, 1, 3),
    (48, 3, 0),
    (32, 2, 1),
    (20, 2, 0),
    (24, 1, 1),
    (6, 0, 2),
];
