//! Exact results checked against brute-force enumeration over small finite
//! fields, and the Jacobson radical over ℚ against the trace form.

use std::collections::BTreeSet;
use std::sync::Arc;

use coprimal::coalg::{unit, AlgebraSC, Builtin, Comodule};
use coprimal::coprime::{
    coradical, fully_invariant_lattice, is_fully_coprime, is_fully_cosemiprime, is_irreducible_comodule, is_regular, socle,
    subcomodule_lattice, EndoAlgebra,
};
use coprimal::linalg::tensor_index;
use coprimal::modrep::{jacobson_radical, ModuleRep};
use coprimal::random::{random_coalgebra, random_matrix, random_module};
use coprimal::{FieldSpec, Matrix, Scalar, Settings, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// Every vector of `F_p^n`.
fn vectors(spec: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    let p = spec.order().unwrap();
    (0..p.pow(n as u32))
        .map(|mut i| {
            (0..n)
                .map(|_| {
                    let d = i % p;
                    i /= p;
                    spec.from_i64(d as i64)
                })
                .collect()
        })
        .collect()
}

/// The set of elements of a subspace, by listing all combinations.
fn elements(s: &Subspace) -> BTreeSet<Vec<Scalar>> {
    let spec = s.spec();
    vectors(spec, s.dim()).iter().map(|c| s.vector(c)).collect()
}

/// Every subspace of `F_p^n`, by adding one vector at a time.
fn all_subspaces(spec: FieldSpec, n: usize) -> BTreeSet<Subspace> {
    let vs = vectors(spec, n);
    let mut found = BTreeSet::from([Subspace::zero(spec, n)]);
    let mut frontier = vec![Subspace::zero(spec, n)];
    while let Some(s) = frontier.pop() {
        for v in &vs {
            if !s.contains(v) {
                let t = s.sum(&Subspace::span(spec, n, std::slice::from_ref(v)).unwrap());
                if found.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
    }
    found
}

fn invariant(s: &Subspace, gens: &[Matrix]) -> bool {
    let elems = elements(s);
    gens.iter().all(|g| elems.iter().all(|v| elems.contains(&g.mul_vec(v))))
}

#[test]
fn kernel_image_rank_and_preimage_by_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for p in [2, 3] {
        let spec = fp(p);
        for _ in 0..150 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let a = random_matrix(spec, rows, cols, &mut rng);
            let domain = vectors(spec, cols);
            let zero = vec![spec.zero(); rows];
            let kernel: BTreeSet<_> = domain.iter().filter(|v| a.mul_vec(v) == zero).cloned().collect();
            assert_eq!(elements(&a.kernel()), kernel);
            let image: BTreeSet<_> = domain.iter().map(|v| a.mul_vec(v)).collect();
            assert_eq!(elements(&a.image()), image);
            assert_eq!((p as usize).pow(a.rank() as u32), image.len());
            let (r, rank) = a.rref();
            assert_eq!(rank, a.rank());
            assert_eq!(r.row_space(), a.row_space());

            let target_dim = rng.gen_range(0..=rows);
            let gens: Vec<_> = (0..target_dim).map(|_| random_matrix(spec, 1, rows, &mut rng).row(0).to_vec()).collect();
            let y = Subspace::span(spec, rows, &gens).unwrap();
            let y_elems = elements(&y);
            let pre: BTreeSet<_> = domain.iter().filter(|v| y_elems.contains(&a.mul_vec(v))).cloned().collect();
            assert_eq!(elements(&y.preimage(&a).unwrap()), pre);
        }
    }
}

#[test]
fn spin_is_the_closure_of_a_vector() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in [2, 3] {
        let spec = fp(p);
        for _ in 0..100 {
            let n = rng.gen_range(1..=4);
            let m = random_module(spec, n, &mut rng);
            let v = random_matrix(spec, 1, n, &mut rng).row(0).to_vec();
            let mut closure = BTreeSet::from([v.clone(), vec![spec.zero(); n]]);
            loop {
                let mut next = closure.clone();
                for x in &closure {
                    for y in &closure {
                        next.insert(x.iter().zip(y).map(|(a, b)| a.add(b)).collect());
                    }
                    for g in m.generators() {
                        next.insert(g.mul_vec(x));
                    }
                }
                if next.len() == closure.len() {
                    break;
                }
                closure = next;
            }
            assert_eq!(elements(&m.spin(&v).unwrap()), closure);
        }
    }
}

#[test]
fn submodule_lattice_and_irreducibility_by_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let settings = Settings::default();
    for (p, max_n) in [(2, 4), (3, 3)] {
        let spec = fp(p);
        let subspaces: Vec<BTreeSet<Subspace>> = (0..=max_n).map(|n| all_subspaces(spec, n)).collect();
        for _ in 0..60 {
            let n = rng.gen_range(1..=max_n);
            let m = random_module(spec, n, &mut rng);
            let brute: Vec<Subspace> = subspaces[n].iter().filter(|s| invariant(s, m.generators())).cloned().collect();
            let lattice: BTreeSet<Subspace> = m.submodule_lattice(&settings).unwrap().into_iter().collect();
            assert_eq!(lattice, brute.iter().cloned().collect::<BTreeSet<_>>());
            assert_eq!(m.is_irreducible(&settings).unwrap(), brute.len() == 2);
        }
    }
}

#[test]
fn subspace_counts_match_gaussian_binomials() {
    // F_2^4 has 1 + 15 + 35 + 15 + 1 subspaces; F_3^3 has 1 + 13 + 13 + 1.
    assert_eq!(all_subspaces(fp(2), 4).len(), 67);
    assert_eq!(all_subspaces(fp(3), 3).len(), 28);
}

#[test]
fn modular_law_on_random_f3_subspaces() {
    let spec = fp(3);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let random_subspace = |rng: &mut ChaCha8Rng| {
        let k = rng.gen_range(0..=4);
        let rows: Vec<_> = (0..k).map(|_| random_matrix(spec, 1, 4, rng).row(0).to_vec()).collect();
        Subspace::span(spec, 4, &rows).unwrap()
    };
    for _ in 0..500 {
        let a = random_subspace(&mut rng);
        let b = random_subspace(&mut rng);
        let c = a.sum(&random_subspace(&mut rng));
        assert_eq!(a.sum(&b.intersect(&c)), a.sum(&b).intersect(&c));
        let ea = elements(&a);
        let eb = elements(&b);
        let meet: BTreeSet<_> = ea.intersection(&eb).cloned().collect();
        assert_eq!(elements(&a.intersect(&b)), meet);
        assert_eq!(a.sum(&b).dim() + a.intersect(&b).dim(), a.dim() + b.dim());
    }
}

/// `{x : 1 − y·x is invertible for every y}`.
fn quasi_regular_radical(a: &AlgebraSC) -> BTreeSet<Vec<Scalar>> {
    let spec = a.spec();
    let all = vectors(spec, a.dim());
    all.iter()
        .filter(|x| {
            all.iter().all(|y| {
                let yx = a.product(y, x);
                let u: Vec<Scalar> = a.one().iter().zip(&yx).map(|(o, t)| o.sub(t)).collect();
                a.left_mult(&u).rank() == a.dim()
            })
        })
        .cloned()
        .collect()
}

#[test]
fn jacobson_radical_over_f2_is_the_quasi_regular_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let settings = Settings::default();
    let spec = fp(2);
    for _ in 0..40 {
        let a = random_coalgebra(spec, 5, &mut rng).dual_algebra();
        assert_eq!(elements(&jacobson_radical(&a, &settings).unwrap()), quasi_regular_radical(&a));
    }
}

#[test]
fn jacobson_radical_over_q_is_the_trace_form_radical() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let settings = Settings::default();
    let spec = FieldSpec::Rationals;
    let mut algebras: Vec<AlgebraSC> = (0..40).map(|_| random_coalgebra(spec, 6, &mut rng).dual_algebra()).collect();
    for b in Builtin::ALL {
        for param in 1..=3 {
            algebras.push(b.build(spec, param).unwrap().dual_algebra());
        }
    }
    for a in &algebras {
        let n = a.dim();
        let gram = Matrix::from_fn(spec, n, n, |i, j| {
            a.left_mult(&a.product(&unit(spec, n, i), &unit(spec, n, j))).trace()
        });
        assert_eq!(jacobson_radical(a, &settings).unwrap(), gram.kernel());
    }
}

#[test]
fn wedge_by_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let spec = fp(2);
    for _ in 0..40 {
        let c = random_coalgebra(spec, 4, &mut rng);
        let n = c.dim();
        let subs: Vec<Subspace> = all_subspaces(spec, n).into_iter().collect();
        for _ in 0..5 {
            let k = &subs[rng.gen_range(0..subs.len())];
            let l = &subs[rng.gen_range(0..subs.len())];
            let mut gens = Vec::new();
            for x in k.basis_vectors() {
                for j in 0..n {
                    gens.push(tensor(spec, &x, &unit(spec, n, j)));
                }
            }
            for y in l.basis_vectors() {
                for i in 0..n {
                    gens.push(tensor(spec, &unit(spec, n, i), &y));
                }
            }
            let target = Subspace::span(spec, n * n, &gens).unwrap();
            let brute: BTreeSet<_> = vectors(spec, n)
                .into_iter()
                .filter(|v| target.contains(c.coproduct(v).entries()))
                .collect();
            assert_eq!(elements(&c.wedge(k, l).unwrap()), brute);
        }
    }
}

fn tensor(spec: FieldSpec, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = x.len();
    let mut t = vec![spec.zero(); n * y.len()];
    for (j, a) in x.iter().enumerate() {
        for (k, b) in y.iter().enumerate() {
            t[tensor_index(j, k, y.len())] = a.mul(b);
        }
    }
    t
}

/// Small comodules over F_2 and F_3: regular comodules of random coalgebras
/// and some of their subcomodules and quotients.
fn small_comodules(spec: FieldSpec, count: usize, seed: u64) -> Vec<Comodule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max = if spec.order() == Some(2) { 4 } else { 3 };
    let settings = Settings::default();
    let mut out = Vec::new();
    while out.len() < count {
        let c = Arc::new(random_coalgebra(spec, max, &mut rng));
        let r = Comodule::regular(c.clone());
        let lattice = subcomodule_lattice(&r, &settings).unwrap();
        let k = &lattice.members[rng.gen_range(0..lattice.len())];
        out.push(r.clone());
        if !k.is_zero() {
            out.push(r.sub(k).unwrap());
        }
        if !k.is_full() {
            out.push(r.quotient(k).unwrap().0);
        }
    }
    out
}

/// Every colinear endomorphism, as matrices, by listing combinations.
fn all_endomorphisms(e: &EndoAlgebra) -> Vec<Matrix> {
    vectors(e.comodule().spec(), e.dim()).iter().map(|x| e.matrix_of(x)).collect()
}

fn brute_internal_coproduct(m: usize, spec: FieldSpec, endos: &[Matrix], x: &Subspace, y: &Subspace) -> BTreeSet<Vec<Scalar>> {
    let xs = elements(x);
    let zero = vec![spec.zero(); m];
    let an: Vec<&Matrix> = endos.iter().filter(|f| xs.iter().all(|v| f.mul_vec(v) == zero)).collect();
    vectors(spec, m)
        .into_iter()
        .filter(|v| an.iter().all(|f| y.contains(&f.mul_vec(v))))
        .collect()
}

#[test]
fn colinear_maps_an_ke_and_internal_coproduct_by_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for spec in [fp(2), fp(3)] {
        for m in small_comodules(spec, 20, 9) {
            let n = m.dim();
            let e = EndoAlgebra::new(&m).unwrap();
            let colinear: BTreeSet<Vec<Scalar>> = vectors(spec, n * n)
                .into_iter()
                .filter(|v| {
                    let f = Matrix::from_entries(spec, n, n, v.clone()).unwrap();
                    m.is_colinear(&f)
                })
                .collect();
            let endos = all_endomorphisms(&e);
            assert_eq!(endos.iter().map(|f| f.entries().to_vec()).collect::<BTreeSet<_>>(), colinear);
            let subs: Vec<Subspace> = all_subspaces(spec, n).into_iter().collect();
            for _ in 0..6 {
                let x = &subs[rng.gen_range(0..subs.len())];
                let y = &subs[rng.gen_range(0..subs.len())];
                assert_eq!(elements(&e.internal_coproduct(x, y).unwrap()), brute_internal_coproduct(n, spec, &endos, x, y));
                let an = e.an(x).unwrap();
                for f in vectors(spec, e.dim()) {
                    let kills = x.basis_vectors().iter().all(|v| e.matrix_of(&f).mul_vec(v).iter().all(Scalar::is_zero));
                    assert_eq!(an.contains(&f), kills);
                }
                let ke: BTreeSet<_> = vectors(spec, n)
                    .into_iter()
                    .filter(|v| an.basis_vectors().iter().all(|f| e.matrix_of(f).mul_vec(v).iter().all(Scalar::is_zero)))
                    .collect();
                assert_eq!(elements(&e.ke(&an).unwrap()), ke);
            }
        }
    }
}

#[test]
fn fully_coprime_and_socle_by_definition() {
    let settings = Settings::default();
    for spec in [fp(2), fp(3)] {
        for m in small_comodules(spec, 24, 10) {
            let n = m.dim();
            let e = EndoAlgebra::new(&m).unwrap();
            let endos = all_endomorphisms(&e);
            let mut gens = endos.clone();
            gens.extend(m.action_basis());
            let subs = all_subspaces(spec, n);
            let fully: Vec<&Subspace> = subs.iter().filter(|s| invariant(s, &gens)).collect();
            let lattice: BTreeSet<Subspace> = fully_invariant_lattice(&e, &settings).unwrap().members.into_iter().collect();
            assert_eq!(lattice, fully.iter().map(|s| (*s).clone()).collect());

            let whole = Subspace::full(spec, n);
            let whole_elems = elements(&whole);
            let mut coprime = true;
            let mut cosemiprime = true;
            for x in &fully {
                for y in &fully {
                    let c = brute_internal_coproduct(n, spec, &endos, x, y);
                    if whole_elems.is_subset(&c) && !x.is_full() && !y.is_full() {
                        coprime = false;
                        if x == y {
                            cosemiprime = false;
                        }
                    }
                }
            }
            assert_eq!(is_fully_coprime(&m, &settings).unwrap().0, coprime);
            assert_eq!(is_fully_cosemiprime(&m, &settings).unwrap().0, cosemiprime);

            let comodule_subs: Vec<&Subspace> = subs.iter().filter(|s| invariant(s, &m.action_basis())).collect();
            let minimal: Vec<&Subspace> = comodule_subs
                .iter()
                .filter(|s| !s.is_zero() && comodule_subs.iter().all(|t| t.is_zero() || !t.is_subspace_of(s) || t == *s))
                .copied()
                .collect();
            let soc = minimal.iter().fold(Subspace::zero(spec, n), |acc, s| acc.sum(s));
            assert_eq!(socle(&m, &settings).unwrap(), soc);
            assert_eq!(is_irreducible_comodule(&m, &settings).unwrap(), minimal.len() == 1);
            if is_regular(&m) {
                assert_eq!(coradical(m.coalgebra(), &settings).unwrap(), soc);
            }
        }
    }
}

#[test]
fn module_rep_matches_comodule_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for spec in [fp(2), fp(5), FieldSpec::Rationals] {
        for _ in 0..20 {
            let c = Arc::new(random_coalgebra(spec, 5, &mut rng));
            let m = Comodule::regular(c.clone());
            let rep: ModuleRep = m.rational_rep();
            let a = c.dual_algebra();
            let f = random_matrix(spec, 1, c.dim(), &mut rng).row(0).to_vec();
            let g = random_matrix(spec, 1, c.dim(), &mut rng).row(0).to_vec();
            assert_eq!(m.action(&a.product(&f, &g)), m.action(&f).mul(&m.action(&g)));
            assert_eq!(rep.element_action(&f), m.action(&f));
        }
    }
}
