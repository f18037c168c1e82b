//! Seeded generators of small random coalgebras, basis changes and modules,
//! used by the randomized checks and the examples.

use rand::Rng;

use crate::coalg::{divided_power, grouplike, lomp, matrix_coalgebra, AlgebraSC, Coalgebra};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::modrep::ModuleRep;

/// A uniform residue over `F_p`, an integer in `−2..=2` over ℚ.
pub fn random_scalar(spec: FieldSpec, rng: &mut impl Rng) -> Scalar {
    match spec {
        FieldSpec::Rationals => spec.from_i64(rng.gen_range(-2..=2)),
        FieldSpec::Prime(p) => spec.from_i64(rng.gen_range(0..p as i64)),
    }
}

pub fn random_matrix(spec: FieldSpec, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(spec, rows, cols, |_, _| random_scalar(spec, rng))
}

/// A random invertible matrix, by rejection.
pub fn random_invertible(spec: FieldSpec, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = random_matrix(spec, n, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

/// A random partial order on `k` points compatible with `0 < 1 < … < k−1`,
/// as a reflexive, transitive relation matrix.
pub fn random_poset(k: usize, rng: &mut impl Rng) -> Vec<Vec<bool>> {
    let mut le = vec![vec![false; k]; k];
    for i in 0..k {
        le[i][i] = true;
        for j in i + 1..k {
            le[i][j] = rng.gen_bool(0.5);
        }
    }
    for m in 0..k {
        for i in 0..k {
            for j in 0..k {
                if le[i][m] && le[m][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    le
}

/// A random coalgebra of dimension between 1 and `max_dim`: an incidence
/// coalgebra, a built-in, or a direct sum or tensor product of smaller
/// random ones, in a random basis.
pub fn random_coalgebra(spec: FieldSpec, max_dim: usize, rng: &mut impl Rng) -> Coalgebra {
    assert!(max_dim >= 1, "dimension bound must be positive");
    let c = random_structure(spec, max_dim, rng);
    let t = random_invertible(spec, c.dim(), rng);
    c.transform(&t).expect("basis change of a valid coalgebra")
}

fn random_structure(spec: FieldSpec, max_dim: usize, rng: &mut impl Rng) -> Coalgebra {
    loop {
        let c = match rng.gen_range(0..7) {
            0 => {
                let k = rng.gen_range(1..=max_dim.min(3));
                let le = random_poset(k, rng);
                let pairs = le.iter().flatten().filter(|&&b| b).count();
                if pairs > max_dim {
                    continue;
                }
                Coalgebra::dual_of(&AlgebraSC::incidence(spec, &le).expect("poset")).expect("incidence coalgebra")
            }
            1 => grouplike(spec, rng.gen_range(1..=max_dim)).expect("grouplike"),
            2 => divided_power(spec, rng.gen_range(0..max_dim)).expect("divided power"),
            3 if max_dim >= 2 => lomp(spec, rng.gen_range(1..max_dim)).expect("trivial extension"),
            4 if max_dim >= 4 => matrix_coalgebra(spec, 2).expect("matrix coalgebra"),
            5 if max_dim >= 2 => {
                let a = rng.gen_range(1..max_dim);
                let left = random_structure(spec, a, rng);
                let right = random_structure(spec, max_dim - left.dim(), rng);
                left.direct_sum(&right).expect("direct sum")
            }
            6 if max_dim >= 2 => {
                let left = random_structure(spec, max_dim / 2, rng);
                let right = random_structure(spec, max_dim / left.dim(), rng);
                left.tensor(&right).expect("tensor product")
            }
            _ => continue,
        };
        return c;
    }
}

/// A random module with one to three generators. Half of the time the
/// generators share an invariant subspace (block upper triangular in a
/// random basis), so reducible modules are common.
pub fn random_module(spec: FieldSpec, dim: usize, rng: &mut impl Rng) -> ModuleRep {
    let count = rng.gen_range(1..=3);
    let split = if dim > 1 && rng.gen_bool(0.5) { Some(rng.gen_range(1..dim)) } else { None };
    let t = random_invertible(spec, dim, rng);
    let t_inv = t.inverse().expect("invertible");
    let gens = (0..count)
        .map(|_| {
            let mut a = random_matrix(spec, dim, dim, rng);
            if let Some(s) = split {
                for r in s..dim {
                    for c in 0..s {
                        a.set(r, c, spec.zero());
                    }
                }
            }
            t.mul(&a).mul(&t_inv)
        })
        .collect();
    ModuleRep::new(spec, dim, gens).expect("square generators")
}
