//! Modules over finite-dimensional algebras: spinning, the MeatAxe,
//! composition factors, radicals and ring classification.

mod lattice;
mod meataxe;
pub mod poly;
mod rep;
mod ring;

pub(crate) use lattice::{all_vectors, close_under_sum_and_intersection};
pub use meataxe::RANDOM_ATTEMPTS;
pub use rep::{intertwiners, unflatten, ModuleRep};
pub use ring::{classify_ring, jacobson_radical, simple_types, RingClassification};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::lattice::projective_points;
    use super::*;
    use crate::coalg::{divided_power, grouplike, lomp, matrix_coalgebra, AlgebraSC};
    use crate::field::{FieldSpec, Scalar};
    use crate::linalg::{Matrix, Subspace};
    use crate::settings::Settings;

    fn s() -> Settings {
        Settings::default()
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn v(spec: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| spec.from_i64(x)).collect()
    }

    fn k_times_k(spec: FieldSpec, copies: usize) -> AlgebraSC {
        grouplike(spec, copies).unwrap().dual_algebra()
    }

    #[test]
    fn spin_examples() {
        let a = Arc::new(AlgebraSC::full_matrix(FieldSpec::Rationals, 2).unwrap());
        let reg = ModuleRep::regular(a.clone());
        let q = FieldSpec::Rationals;
        assert!(reg.spin(&v(q, &[0, 0, 0, 0])).unwrap().is_zero());
        assert!(reg.spin(a.one()).unwrap().is_full());
        // E_00 spans the first column {E_00, E_10}
        assert_eq!(reg.spin(&v(q, &[1, 0, 0, 0])).unwrap().dim(), 2);
    }

    #[test]
    fn irreducibility_examples() {
        let q = FieldSpec::Rationals;
        let one_dim = ModuleRep::new(q, 1, vec![Matrix::from_i64(q, &[&[5]])]).unwrap();
        assert!(one_dim.is_irreducible(&s()).unwrap());
        let reg = ModuleRep::regular(Arc::new(k_times_k(q, 2)));
        assert!(!reg.is_irreducible(&s()).unwrap());
        // rotation by 90 degrees: irreducible over ℚ but not absolutely
        let rot = ModuleRep::new(q, 2, vec![Matrix::from_i64(q, &[&[0, -1], &[1, 0]])]).unwrap();
        assert!(!matches!(rot.is_irreducible(&s()), Ok(false)));
        // ... while over F_5 it splits (i = 2)
        let f5 = FieldSpec::prime(5).unwrap();
        let rot5 = ModuleRep::new(f5, 2, vec![Matrix::from_i64(f5, &[&[0, -1], &[1, 0]])]).unwrap();
        assert!(!rot5.is_irreducible(&s()).unwrap());
        // and over F_3 it does not
        let f3 = FieldSpec::prime(3).unwrap();
        let rot3 = ModuleRep::new(f3, 2, vec![Matrix::from_i64(f3, &[&[0, -1], &[1, 0]])]).unwrap();
        assert!(rot3.is_irreducible(&s()).unwrap());
    }

    #[test]
    fn composition_factors_of_product_algebra() {
        let q = FieldSpec::Rationals;
        let reg = ModuleRep::regular(Arc::new(k_times_k(q, 3)));
        let factors = reg.composition_factors(&s()).unwrap();
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|f| f.dim() == 1));
    }

    #[test]
    fn hom_space_examples() {
        let a = Arc::new(k_times_k(f2(), 2));
        let reg = ModuleRep::regular(a);
        let homs = reg.hom_space(&reg).unwrap();
        let id: Vec<Scalar> = Matrix::identity(f2(), 2).entries().to_vec();
        assert!(homs.contains(&id));
        let factors = reg.composition_factors(&s()).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors[0].hom_space(&factors[1]).unwrap().is_zero());
        assert_eq!(factors[0].hom_space(&factors[0]).unwrap().dim(), 1);
    }

    #[test]
    fn radicals_of_dual_algebras() {
        let q = FieldSpec::Rationals;
        let m2 = matrix_coalgebra(q, 2).unwrap().dual_algebra();
        assert!(jacobson_radical(&m2, &s()).unwrap().is_zero());
        let l = lomp(q, 2).unwrap().dual_algebra();
        let j = jacobson_radical(&l, &s()).unwrap();
        assert_eq!(j.dim(), 2);
        assert!(l.subspace_product(&j, &j).is_zero());
        let d = divided_power(q, 3).unwrap().dual_algebra();
        let j = jacobson_radical(&d, &s()).unwrap();
        assert_eq!(j, Subspace::span(q, 4, &[v(q, &[0, 1, 0, 0]), v(q, &[0, 0, 1, 0]), v(q, &[0, 0, 0, 1])]).unwrap());
        assert!(d.subspace_power(&j, 4).is_zero());
        assert!(!d.subspace_power(&j, 3).is_zero());
    }

    #[test]
    fn classification_examples() {
        let q = FieldSpec::Rationals;
        let kk = classify_ring(&k_times_k(q, 2), &s()).unwrap();
        assert!(kk.semiprime && kk.reduced && !kk.prime && !kk.domain);
        assert_eq!(kk.blocks, 2);
        let f3 = FieldSpec::prime(3).unwrap();
        let m2 = classify_ring(&matrix_coalgebra(f3, 2).unwrap().dual_algebra(), &s()).unwrap();
        assert!(m2.prime && m2.simple && !m2.domain && !m2.reduced);
        assert_eq!(m2.composition_factors, vec![(2, 2)]);
        let l = classify_ring(&lomp(q, 2).unwrap().dual_algebra(), &s()).unwrap();
        assert!(!l.semiprime);
        assert_eq!(l.prad, l.jacobson);
    }

    #[test]
    fn lattice_examples() {
        let reg = ModuleRep::regular(Arc::new(k_times_k(f2(), 2)));
        assert_eq!(reg.submodule_lattice(&s()).unwrap().len(), 4);
        let f3 = FieldSpec::prime(3).unwrap();
        let rot3 = ModuleRep::new(f3, 2, vec![Matrix::from_i64(f3, &[&[0, -1], &[1, 0]])]).unwrap();
        assert_eq!(rot3.submodule_lattice(&s()).unwrap().len(), 2);
        assert!(matches!(
            reg.submodule_lattice(&Settings::with_budget(3)),
            Err(crate::Error::EnumerationBudgetExceeded { .. })
        ));
        let q = ModuleRep::regular(Arc::new(k_times_k(FieldSpec::Rationals, 2)));
        assert!(matches!(q.submodule_lattice(&s()), Err(crate::Error::FieldNotFinite(_))));
    }

    #[test]
    fn projective_point_count() {
        let f3 = FieldSpec::prime(3).unwrap();
        let basis: Vec<Vec<Scalar>> = (0..3).map(|i| crate::coalg::unit(f3, 3, i)).collect();
        assert_eq!(projective_points(f3, &basis).count(), 13);
        assert_eq!(all_vectors(f3, &basis, 3).count(), 27);
    }

    #[test]
    fn sum_intersection_closure_is_budgeted() {
        let q = FieldSpec::Rationals;
        let line = |xs: &[i64]| Subspace::span(q, 3, &[v(q, xs)]).unwrap();
        let frame = vec![line(&[1, 0, 0]), line(&[0, 1, 0]), line(&[0, 0, 1])];
        assert_eq!(close_under_sum_and_intersection(q, 3, frame.clone(), &s()).unwrap().len(), 8);
        // A fourth point in general position generates infinitely many.
        let mut four = frame;
        four.push(line(&[1, 1, 1]));
        assert!(close_under_sum_and_intersection(q, 3, four, &Settings::with_budget(10_000))
            .unwrap_err()
            .is_budget());
    }
}
