//! Built-in algebras used by the command line tool and the test suites.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;

/// Catalog entries as listed by `ado catalog list`.
pub const NAMES: [&str; 10] =
    ["abelian:N", "heisenberg", "heisenberg5", "solv2", "jordan3", "rot3", "sl2", "gl2", "t3", "n3"];

/// Every concrete catalog algebra exercised by the end-to-end suite.
pub const END_TO_END: [&str; 12] = [
    "abelian:1",
    "abelian:2",
    "abelian:3",
    "abelian:4",
    "heisenberg",
    "heisenberg5",
    "solv2",
    "jordan3",
    "rot3",
    "sl2",
    "gl2",
    "t3",
];

pub fn lookup(name: &str) -> Result<LieAlgebra> {
    if let Some(n) = name.strip_prefix("abelian:") {
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad abelian dimension in {name:?}")))?;
        return Ok(LieAlgebra::abelian(n));
    }
    Ok(match name {
        "heisenberg" => heisenberg(),
        "n3" => heisenberg().with_name("n3"),
        "heisenberg5" => heisenberg5(),
        "solv2" => solv2(),
        "jordan3" => jordan3(),
        "rot3" => rot3(),
        "sl2" => sl2(),
        "gl2" => gl2(),
        "t3" => t3(),
        _ => return Err(Error::Parse(format!("unknown catalog algebra {name:?}"))),
    })
}

fn build(name: &str, labels: &[&str], terms: &[(usize, usize, usize, i64)]) -> LieAlgebra {
    LieAlgebra::from_terms(name, labels, terms).expect("catalog entries are valid Lie algebras")
}

/// `[x, y] = z`.
pub fn heisenberg() -> LieAlgebra {
    build("heisenberg", &["x", "y", "z"], &[(0, 1, 2, 1)])
}

/// `[x1, y1] = [x2, y2] = z`.
pub fn heisenberg5() -> LieAlgebra {
    build("heisenberg5", &["x1", "x2", "y1", "y2", "z"], &[(0, 2, 4, 1), (1, 3, 4, 1)])
}

/// `[e1, e2] = e2`.
pub fn solv2() -> LieAlgebra {
    build("solv2", &["e1", "e2"], &[(0, 1, 1, 1)])
}

/// `[e1, e2] = e2`, `[e1, e3] = e2 + e3`.
pub fn jordan3() -> LieAlgebra {
    build("jordan3", &["e1", "e2", "e3"], &[(0, 1, 1, 1), (0, 2, 1, 1), (0, 2, 2, 1)])
}

/// `[e1, e2] = e3`, `[e1, e3] = -e2`.
pub fn rot3() -> LieAlgebra {
    build("rot3", &["e1", "e2", "e3"], &[(0, 1, 2, 1), (0, 2, 1, -1)])
}

/// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebra {
    build("sl2", &["h", "e", "f"], &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

/// 2x2 matrices on the matrix units `E11, E12, E21, E22`.
pub fn gl2() -> LieAlgebra {
    build(
        "gl2",
        &["E11", "E12", "E21", "E22"],
        &[(0, 1, 1, 1), (0, 2, 2, -1), (1, 2, 0, 1), (1, 2, 3, -1), (1, 3, 1, 1), (2, 3, 2, -1)],
    )
}

/// Upper-triangular 3x3 matrices on `E11, E12, E13, E22, E23, E33`.
pub fn t3() -> LieAlgebra {
    // [Eij, Ekl] = δjk Eil − δli Ekj
    let units = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];
    let index = |a: usize, b: usize| units.iter().position(|&u| u == (a, b));
    let mut terms = Vec::new();
    for (p, &(i, j)) in units.iter().enumerate() {
        for (r, &(k, l)) in units.iter().enumerate().skip(p + 1) {
            if j == k {
                terms.push((p, r, index(i, l).unwrap(), 1));
            }
            if l == i {
                terms.push((p, r, index(k, j).unwrap(), -1));
            }
        }
    }
    build("t3", &["E11", "E12", "E13", "E22", "E23", "E33"], &terms)
}
