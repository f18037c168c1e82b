//! Coalgebras, comodules and convolution algebras by structure constants.

mod algebra;
mod builtins;
mod coalgebra;
mod comodule;

pub use algebra::{incidence_pairs, AlgebraSC};
pub use builtins::{divided_power, grouplike, lomp, matrix_coalgebra, Builtin};
pub use coalgebra::{unit, Coalgebra};
pub use comodule::Comodule;

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::axioms::Axiom;
    use crate::field::{FieldSpec, Scalar};
    use crate::linalg::{tensor_index, Matrix, Subspace};

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn f(spec: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| spec.from_i64(x)).collect()
    }

    fn all_builtins(spec: FieldSpec) -> Vec<Coalgebra> {
        vec![
            matrix_coalgebra(spec, 1).unwrap(),
            matrix_coalgebra(spec, 2).unwrap(),
            matrix_coalgebra(spec, 3).unwrap(),
            divided_power(spec, 0).unwrap(),
            divided_power(spec, 3).unwrap(),
            grouplike(spec, 3).unwrap(),
            lomp(spec, 1).unwrap(),
            lomp(spec, 3).unwrap(),
        ]
    }

    #[test]
    fn grouplike_one_element_validates() {
        assert!(grouplike(q(), 1).unwrap().validate().passed());
    }

    #[test]
    fn builtin_dimensions() {
        assert_eq!(matrix_coalgebra(q(), 2).unwrap().dim(), 4);
        assert_eq!(lomp(q(), 2).unwrap().dim(), 3);
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(divided_power(f3, 0).unwrap(), grouplike(f3, 1).unwrap());
        assert!(matches!(matrix_coalgebra(q(), 0), Err(crate::Error::InvalidParameter(_))));
        assert!(matches!(lomp(q(), 0), Err(crate::Error::InvalidParameter(_))));
    }

    #[test]
    fn perturbed_comultiplication_is_located() {
        let c = matrix_coalgebra(q(), 2).unwrap();
        let mut delta = c.delta().clone();
        let v = delta.get(tensor_index(0, 1, 4), 1).add(&q().one());
        delta.set(tensor_index(0, 1, 4), 1, v);
        let bad = Coalgebra::unchecked(delta, c.epsilon().to_vec()).unwrap();
        let report = bad.validate();
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| v.axiom == Axiom::Coassociativity));
        assert!(Coalgebra::new(bad.delta().clone(), bad.epsilon().to_vec()).is_err());
    }

    #[test]
    fn missing_counit_breaks_counit_law() {
        let c = grouplike(q(), 2).unwrap();
        let bad = Coalgebra::unchecked(c.delta().clone(), vec![q().zero(); 2]).unwrap();
        let report = bad.validate();
        assert!(report.first().unwrap().axiom.is_counit());
    }

    #[test]
    fn dual_of_grouplike_has_orthogonal_idempotents() {
        let a = grouplike(q(), 2).unwrap().dual_algebra();
        let (g, h) = (a.basis_element(0), a.basis_element(1));
        assert_eq!(a.product(&g, &g), g);
        assert_eq!(a.product(&h, &h), h);
        assert_eq!(a.product(&g, &h), f(q(), &[0, 0]));
        assert_eq!(a.one(), &f(q(), &[1, 1])[..]);
        assert!(a.is_commutative());
    }

    #[test]
    fn dual_of_matrix_coalgebra_is_matrix_algebra() {
        let a = matrix_coalgebra(q(), 2).unwrap().dual_algebra();
        assert_eq!(a.dim(), 4);
        assert!(!a.is_commutative());
        assert_eq!(a, AlgebraSC::full_matrix(q(), 2).unwrap());
    }

    #[test]
    fn dual_of_divided_power_multiplies_degrees() {
        let a = divided_power(q(), 2).unwrap().dual_algebra();
        assert!(a.is_commutative());
        let (x1, x2) = (a.basis_element(1), a.basis_element(2));
        assert_eq!(a.product(&x1, &x1), x2);
        assert_eq!(a.product(&x1, &x2), f(q(), &[0, 0, 0]));
    }

    #[test]
    fn dual_algebras_of_builtins_are_valid() {
        for spec in [q(), FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()] {
            for c in all_builtins(spec) {
                assert!(c.validate().passed());
                let a = c.dual_algebra();
                assert!(a.validate().passed());
                assert_eq!(Coalgebra::dual_of(&a).unwrap(), c);
                if c.is_cocommutative() {
                    assert!(a.is_commutative());
                }
            }
        }
    }

    #[test]
    fn rational_action_represents_the_dual_algebra() {
        for spec in [q(), FieldSpec::prime(3).unwrap()] {
            for c in all_builtins(spec) {
                let c = Arc::new(c);
                let a = c.dual_algebra();
                let m = Comodule::regular(c.clone());
                let acts = m.action_basis();
                assert!(m.action(c.epsilon()).is_identity());
                let n = c.dim();
                for j in 0..n {
                    for k in 0..n {
                        let prod = a.product(&a.basis_element(j), &a.basis_element(k));
                        assert_eq!(m.action(&prod), acts[j].mul(&acts[k]));
                    }
                }
                // right action on C is a right module: R_{f*g} = R_g R_f
                let right = c.right_action_basis();
                for j in 0..n {
                    for k in 0..n {
                        let prod = a.product(&a.basis_element(j), &a.basis_element(k));
                        assert_eq!(c.right_action(&prod), right[k].mul(&right[j]));
                    }
                }
            }
        }
    }

    #[test]
    fn grouplike_functional_acts_as_projection() {
        let c = Arc::new(grouplike(q(), 2).unwrap());
        let m = Comodule::regular(c);
        assert_eq!(m.action(&f(q(), &[1, 0])), Matrix::from_i64(q(), &[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn coideal_examples() {
        let g = grouplike(q(), 2).unwrap();
        let span_g = Subspace::span(q(), 2, &[f(q(), &[1, 0])]).unwrap();
        assert!(g.is_right_coideal(&span_g).unwrap());
        assert!(g.is_bicoideal(&Subspace::full(q(), 2)).unwrap());
        assert!(g.is_bicoideal(&Subspace::zero(q(), 2)).unwrap());
        let d = divided_power(q(), 2).unwrap();
        let x1 = Subspace::span(q(), 3, &[f(q(), &[0, 1, 0])]).unwrap();
        assert!(!d.is_right_coideal(&x1).unwrap());
        assert!(!d.is_left_coideal(&x1).unwrap());
    }

    #[test]
    fn wedge_examples() {
        let g = grouplike(q(), 2).unwrap();
        let sg = Subspace::span(q(), 2, &[f(q(), &[1, 0])]).unwrap();
        let sh = Subspace::span(q(), 2, &[f(q(), &[0, 1])]).unwrap();
        let zero = Subspace::zero(q(), 2);
        let full = Subspace::full(q(), 2);
        assert_eq!(g.wedge(&sg, &sg).unwrap(), sg);
        assert_eq!(g.wedge(&sg, &sh).unwrap(), full);
        assert_eq!(g.wedge(&zero, &zero).unwrap(), zero);
        assert_eq!(g.wedge(&sg, &full).unwrap(), full);
        // the coradical filtration of divided powers
        let d = divided_power(q(), 3).unwrap();
        let c0 = Subspace::span(q(), 4, &[f(q(), &[1, 0, 0, 0])]).unwrap();
        let c1 = d.wedge(&c0, &c0).unwrap();
        assert_eq!(c1, Subspace::span(q(), 4, &[f(q(), &[1, 0, 0, 0]), f(q(), &[0, 1, 0, 0])]).unwrap());
    }

    #[test]
    fn subcomodule_and_quotient_are_comodules() {
        let c = Arc::new(divided_power(q(), 3).unwrap());
        let m = Comodule::regular(c.clone());
        let k = Subspace::span(q(), 4, &[f(q(), &[1, 0, 0, 0]), f(q(), &[0, 1, 0, 0])]).unwrap();
        assert!(m.is_subcomodule(&k).unwrap());
        let sub = m.sub(&k).unwrap();
        assert!(sub.validate().passed());
        let (quo, p) = m.quotient(&k).unwrap();
        assert!(quo.validate().passed());
        assert_eq!(p.rows(), 2);
        let not_sub = Subspace::span(q(), 4, &[f(q(), &[0, 1, 0, 0])]).unwrap();
        assert!(!m.is_subcomodule(&not_sub).unwrap());
        assert!(m.sub(&not_sub).is_err());
    }

    #[test]
    fn basis_change_preserves_axioms() {
        let c = lomp(q(), 2).unwrap();
        let t = Matrix::from_i64(q(), &[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]);
        let c2 = c.transform(&t).unwrap();
        assert!(c2.validate().passed());
        let m = Comodule::regular(Arc::new(c.clone()));
        let m2 = m.transform(&t).unwrap();
        assert!(m2.validate().passed());
        let sum = m.direct_sum(&m).unwrap();
        assert!(sum.validate().passed());
        assert!(c.tensor(&grouplike(q(), 2).unwrap()).unwrap().validate().passed());
        assert!(c.direct_sum(&c).unwrap().validate().passed());
    }
}
