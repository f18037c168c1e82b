//! Minimal polynomials and their roots in the base field, used to shift
//! candidate elements to singular ones in the irreducibility test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Echelon, Matrix};

/// Coefficients `c_0, …, c_{r−1}, 1` of the monic minimal polynomial of a
/// square matrix.
pub fn minimal_polynomial(a: &Matrix) -> Vec<Scalar> {
    let spec = a.spec();
    let n = a.rows();
    let mut powers: Vec<Matrix> = vec![Matrix::identity(spec, n)];
    let mut e = Echelon::new(spec, n * n);
    e.insert(powers[0].entries().to_vec());
    loop {
        let next = powers.last().expect("nonempty").mul(a);
        if !e.insert(next.entries().to_vec()) {
            // next = Σ c_i A^i: solve for the coefficients.
            let cols: Vec<Vec<Scalar>> = powers.iter().map(|p| p.entries().to_vec()).collect();
            let system = Matrix::from_columns(spec, n * n, &cols).expect("power columns");
            let c = system
                .solve(next.entries())
                .expect("shapes agree")
                .expect("dependent power lies in the span");
            let mut poly: Vec<Scalar> = c.iter().map(Scalar::neg).collect();
            poly.push(spec.one());
            return poly;
        }
        powers.push(next);
    }
}

pub fn evaluate(poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.spec().zero();
    for c in poly.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Roots of `poly` in the base field. Over `F_p` every residue is tried when
/// `p ≤ max_prime`; over ℚ the rational root test is used when the integer
/// coefficients are small enough to factor by trial division.
pub fn roots(poly: &[Scalar], max_prime: u64) -> Vec<Scalar> {
    let Some(first) = poly.first() else {
        return Vec::new();
    };
    let spec = first.spec();
    let mut out = Vec::new();
    match spec {
        FieldSpec::Prime(p) => {
            if (p as u64) <= max_prime {
                for r in 0..p as i64 {
                    let x = spec.from_i64(r);
                    if evaluate(poly, &x).is_zero() {
                        out.push(x);
                    }
                }
            } else if evaluate(poly, &spec.zero()).is_zero() {
                out.push(spec.zero());
            }
        }
        FieldSpec::Rationals => {
            let coeffs: Vec<BigRational> = poly.iter().map(|s| s.as_rational().expect("rational").clone()).collect();
            let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from(lcm.clone())).to_integer()).collect();
            // strip the factor x^k
            let k = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
            if k > 0 {
                out.push(spec.zero());
            }
            let ints = &ints[k..];
            if ints.len() < 2 {
                return out;
            }
            let (Some(a0), Some(an)) = (ints[0].abs().to_u64(), ints[ints.len() - 1].abs().to_u64()) else {
                return out;
            };
            const LIMIT: u64 = 1 << 40;
            if a0 > LIMIT || an > LIMIT {
                return out;
            }
            for p in divisors(a0) {
                for q in divisors(an) {
                    if num_integer::gcd(p, q) != 1 {
                        continue;
                    }
                    for sign in [1i64, -1] {
                        let x = Scalar::Rational(Box::new(BigRational::new(
                            BigInt::from(p as i128 * sign as i128),
                            BigInt::from(q),
                        )));
                        if evaluate(poly, &x).is_zero() && !out.contains(&x) {
                            out.push(x);
                        }
                    }
                }
            }
        }
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
