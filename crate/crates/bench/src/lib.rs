//! Inputs shared by the benchmarks.

use compoly::{BivariatePoly, Field};

fn poly(k: &Field, terms: &[(i64, u32, i64)]) -> BivariatePoly {
    BivariatePoly::from_terms(k, terms.iter().map(|&(i, j, c)| (i, j, k.from_i64(c)))).unwrap()
}

/// y⁴ − 2x³y² − 4x⁵y + x⁶ − x⁷
pub fn quartic(k: &Field) -> BivariatePoly {
    poly(k, &[(0, 4, 1), (3, 2, -2), (5, 1, -4), (6, 0, 1), (7, 0, -1)])
}

/// y⁶ − 3x³y⁴ − 2x⁵y³ + 3x⁶y² − 6x⁸y − x⁹ + x¹⁰
pub fn sextic(k: &Field) -> BivariatePoly {
    poly(k, &[(0, 6, 1), (3, 4, -3), (5, 3, -2), (6, 2, 3), (8, 1, -6), (9, 0, -1), (10, 0, 1)])
}
