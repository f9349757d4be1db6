//! Property tests over small random complexes.

use bstar_core::homology::{betti, reduced_euler};
use bstar_core::properties as p;
use bstar_core::vectors::{deletion_identity_check, f_from_h, face_vectors, h_from_f};
use bstar_core::verify::buchsbaum_star_by_surjectivity;
use bstar_core::{Complex, Face, FieldSpec};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn gf2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

/// Complexes on at most `n` vertices given by up to six random facets.
fn complexes(n: u32) -> impl Strategy<Value = Complex> {
    prop::collection::vec(1u32..(1 << n), 1..6).prop_map(move |masks| {
        let facets: Vec<Vec<String>> = masks
            .iter()
            .map(|m| {
                (0..n)
                    .filter(|v| m >> v & 1 == 1)
                    .map(|v| format!("v{v}"))
                    .collect()
            })
            .collect();
        Complex::from_facets(facets).unwrap()
    })
}

fn face_set(c: &Complex) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = c.all_faces().map(|f| c.face_labels(f)).collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn contrastar_of_a_vertex_is_its_deletion(c in complexes(6)) {
        for v in 0..c.n_vertices() as u32 {
            let f = Face::vertex(v);
            prop_assert_eq!(face_set(&c.contrastar(&f).unwrap()), face_set(&c.deletion(&f).unwrap()));
        }
    }

    #[test]
    fn skeleta_compose(c in complexes(6), i in 0isize..4, j in 0isize..4) {
        let twice = c.skeleton(i).unwrap().skeleton(j).unwrap();
        prop_assert_eq!(face_set(&twice), face_set(&c.skeleton(i.min(j)).unwrap()));
    }

    #[test]
    fn join_multiplies_f_polynomials(a in complexes(4), b in complexes(4)) {
        let (fa, fb) = (a.f_vector(), b.f_vector());
        let mut expected = vec![0u64; fa.len() + fb.len() - 1];
        for (i, x) in fa.iter().enumerate() {
            for (j, y) in fb.iter().enumerate() {
                expected[i + j] += x * y;
            }
        }
        prop_assert_eq!(a.join(&b).unwrap().f_vector(), expected);
    }

    #[test]
    fn deletions_compose(c in complexes(6), mask in 0u32..64) {
        let t: Vec<u32> = (0..c.n_vertices() as u32).filter(|v| mask >> v & 1 == 1).collect();
        let at_once = c.deletion(&Face::new(t.iter().copied())).unwrap();
        // One vertex at a time, in reverse order, by label.
        let mut step = c.clone();
        for &v in t.iter().rev() {
            if let Some(w) = step.vertex_by_label(c.label(v)) {
                step = step.deletion(&Face::vertex(w)).unwrap();
            }
        }
        prop_assert_eq!(face_set(&at_once), face_set(&step));
    }

    #[test]
    fn link_faces_extend_to_faces(c in complexes(6)) {
        for s in c.nonempty_faces() {
            let lk = c.link(s).unwrap();
            for t in lk.all_faces() {
                let mut labels = lk.face_labels(t);
                labels.extend(c.face_labels(s));
                let joined = c.face_by_labels(&labels).unwrap();
                prop_assert!(c.contains(&joined));
            }
        }
    }

    #[test]
    fn facet_lists_round_trip(c in complexes(6)) {
        let again = Complex::from_facets(c.labeled_facets()).unwrap();
        prop_assert_eq!(face_set(&again), face_set(&c));
    }

    #[test]
    fn euler_poincare(c in complexes(6)) {
        for f in [Q, gf2()] {
            prop_assert_eq!(betti(&c, f).unwrap().euler(), reduced_euler(&c));
        }
    }

    #[test]
    fn gf2_betti_dominate_rational(c in complexes(6)) {
        let (bq, b2) = (betti(&c, Q).unwrap(), betti(&c, gf2()).unwrap());
        for i in -1..=c.dim() {
            prop_assert!(b2.get(i) >= bq.get(i));
        }
    }

    #[test]
    fn vector_identities(c in complexes(6)) {
        for f in [Q, gf2()] {
            let v = face_vectors(&c, f).unwrap();
            prop_assert_eq!(v.h_prime[v.d], v.betti.get(v.d as isize - 1) as i64);
            prop_assert_eq!(v.h_double_prime[v.d], v.betti.get(v.d as isize - 1) as i64);
            let back = f_from_h(&h_from_f(&v.f, v.d).unwrap(), v.d).unwrap();
            prop_assert_eq!(back, v.f.iter().map(|&x| x as i64).collect::<Vec<_>>());
            prop_assert!(deletion_identity_check(&c, f).unwrap().h_identity.is_pass());
        }
    }

    #[test]
    fn report_implications_hold(c in complexes(6)) {
        for f in [Q, gf2()] {
            let r = p::property_report(&c, f).unwrap();
            prop_assert!(r.inconsistencies.is_empty(), "{:?}", r.inconsistencies);
        }
    }

    #[test]
    fn two_routes_to_buchsbaum_star_agree(c in complexes(5)) {
        for f in [Q, gf2()] {
            let a = p::is_buchsbaum_star(&c, f).unwrap().holds;
            prop_assert_eq!(a, buchsbaum_star_by_surjectivity(&c, f).unwrap());
        }
    }

    #[test]
    fn cohen_macaulay_collapse(c in complexes(6)) {
        for f in [Q, gf2()] {
            if p::is_cohen_macaulay(&c, f).unwrap().holds {
                prop_assert_eq!(
                    p::is_buchsbaum_star(&c, f).unwrap().holds,
                    p::is_doubly_cohen_macaulay(&c, f).unwrap().holds
                );
            }
        }
    }

    #[test]
    fn verdicts_are_deterministic(c in complexes(6)) {
        let a = p::property_report(&c, Q).unwrap();
        let b = p::property_report(&c, Q).unwrap();
        prop_assert_eq!(a.verdicts, b.verdicts);
        prop_assert_eq!(a.witnesses, b.witnesses);
    }
}
