//! Group-theoretic properties of the symmetry action, checked
//! exhaustively for small n and on seeded random cases for n = 6, 7.

use hamorbit::{
    canonical_rep, elements, equivalent_shapes, shape_key, similar_shapes, EquivKind,
    GraphKind, GroupElement, Mode, PermString,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn all_modes(n: usize) -> [Mode; 4] {
    Mode::all(n).unwrap()
}

fn all_strings(n: usize) -> Vec<PermString> {
    hamorbit::all_strings(n).unwrap().collect()
}

fn random_string(rng: &mut StdRng, n: usize) -> PermString {
    let mut entries: Vec<u8> = (0..n as u8).collect();
    entries.shuffle(rng);
    PermString::new(entries).unwrap()
}

fn random_element(rng: &mut StdRng, mode: Mode) -> GroupElement {
    let n = mode.n();
    let shift = match mode.graph() {
        GraphKind::Cycle => rng.gen_range(0..n),
        GraphKind::Path => 0,
    };
    let refl = match mode.equiv() {
        EquivKind::Similar => rng.gen(),
        EquivKind::Equivalent => false,
    };
    GroupElement::new(mode, shift, rng.gen(), rng.gen_range(0..n), refl).unwrap()
}

#[test]
fn axioms_hold_exhaustively_up_to_n5() {
    for n in 3..=5 {
        for mode in all_modes(n) {
            let els = elements(mode);
            let id = GroupElement::identity(mode);

            // Closure and the Latin-square property of the Cayley table.
            for g in &els {
                let mut row: Vec<GroupElement> =
                    els.iter().map(|h| g.compose(h).unwrap()).collect();
                row.sort();
                row.dedup();
                assert_eq!(row, els, "row of {g} is not a permutation of Γ");
            }

            // Identity and inverses.
            for g in &els {
                assert_eq!(g.compose(&id).unwrap(), *g);
                assert_eq!(id.compose(g).unwrap(), *g);
                assert_eq!(g.compose(&g.inverse()).unwrap(), id);
                assert_eq!(g.inverse().compose(g).unwrap(), id);
            }

            // Associativity on a deterministic sample of triples (the
            // full cube at n = 5 cycle modes is a million compositions;
            // a strided third works just as well).
            for (i, g) in els.iter().enumerate() {
                for h in els.iter().skip(i % 3).step_by(3) {
                    for k in els.iter().skip(i % 5).step_by(5) {
                        assert_eq!(
                            g.compose(h).unwrap().compose(k).unwrap(),
                            g.compose(&h.compose(k).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn action_is_a_homomorphism_exhaustively_up_to_n5() {
    for n in 3..=5 {
        let strings = all_strings(n);
        for mode in all_modes(n) {
            let els = elements(mode);
            for g in &els {
                for h in &els {
                    let gh = g.compose(h).unwrap();
                    for x in &strings {
                        assert_eq!(
                            gh.apply(x).unwrap(),
                            g.apply(&h.apply(x).unwrap()).unwrap(),
                            "({g})({h}) acting on {x}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn identity_acts_trivially_and_inverse_undoes() {
    for n in 3..=5 {
        let strings = all_strings(n);
        for mode in all_modes(n) {
            let id = GroupElement::identity(mode);
            for x in &strings {
                assert_eq!(id.apply(x).unwrap(), *x);
            }
            for g in elements(mode) {
                let inv = g.inverse();
                for x in &strings {
                    assert_eq!(inv.apply(&g.apply(x).unwrap()).unwrap(), *x);
                }
            }
        }
    }
}

#[test]
fn generator_orders() {
    for n in 3..=7 {
        let cs = Mode::new(GraphKind::Cycle, EquivKind::Similar, n).unwrap();
        let c = GroupElement::new(cs, 1, false, 0, false).unwrap();
        let v = GroupElement::new(cs, 0, true, 0, false).unwrap();
        let r = GroupElement::new(cs, 0, false, 1, false).unwrap();
        let s = GroupElement::new(cs, 0, false, 0, true).unwrap();
        assert_eq!(c.order(), n);
        assert_eq!(v.order(), 2);
        assert_eq!(r.order(), n);
        assert_eq!(s.order(), 2);

        // Every element order divides the group order.
        for mode in all_modes(n).into_iter().take(2) {
            for g in elements(mode) {
                assert_eq!(mode.group_order() % g.order() as u64, 0, "{g}");
            }
        }
    }
}

#[test]
fn defining_relations() {
    for n in 3..=7 {
        let cs = Mode::new(GraphKind::Cycle, EquivKind::Similar, n).unwrap();
        let c = GroupElement::new(cs, 1, false, 0, false).unwrap();
        let v = GroupElement::new(cs, 0, true, 0, false).unwrap();
        let r = GroupElement::new(cs, 0, false, 1, false).unwrap();
        let s = GroupElement::new(cs, 0, false, 0, true).unwrap();

        // v c v = c⁻¹ and s r s = r⁻¹.
        let vcv = v.compose(&c).unwrap().compose(&v).unwrap();
        assert_eq!(vcv, c.inverse());
        let srs = s.compose(&r).unwrap().compose(&s).unwrap();
        assert_eq!(srs, r.inverse());

        // The string part commutes with the label part.
        for a in [&c, &v] {
            for b in [&r, &s] {
                assert_eq!(a.compose(b).unwrap(), b.compose(a).unwrap());
            }
        }
    }
}

#[test]
fn normal_form_reconstructs_from_generators() {
    for n in 3..=6 {
        for mode in all_modes(n) {
            let id = GroupElement::identity(mode);
            for g in elements(mode) {
                // Rightmost factor of c^shift v^rev s^refl r^rot acts
                // first; rebuild by composing left to right.
                let mut acc = id.clone();
                if mode.graph() == GraphKind::Cycle {
                    let c = GroupElement::new(mode, 1, false, 0, false).unwrap();
                    for _ in 0..g.shift() {
                        acc = acc.compose(&c).unwrap();
                    }
                }
                if g.is_reversal() {
                    let v = GroupElement::new(mode, 0, true, 0, false).unwrap();
                    acc = acc.compose(&v).unwrap();
                }
                if g.is_reflection() {
                    let s = GroupElement::new(mode, 0, false, 0, true).unwrap();
                    acc = acc.compose(&s).unwrap();
                }
                let r = GroupElement::new(mode, 0, false, 1, false).unwrap();
                for _ in 0..g.rot() {
                    acc = acc.compose(&r).unwrap();
                }
                assert_eq!(acc, g);
            }
        }
    }
}

/// Orbit membership and shape-level similarity are the same relation:
/// strings land in one class exactly when their figures coincide up to
/// the allowed motions.
#[test]
fn orbits_match_shape_similarity_exhaustively_up_to_n5() {
    for n in 3..=5 {
        let strings = all_strings(n);
        for mode in all_modes(n) {
            let keys: Vec<_> = strings
                .iter()
                .map(|x| shape_key(x, mode.graph()).unwrap())
                .collect();
            let reps: Vec<_> = strings
                .iter()
                .map(|x| canonical_rep(x, mode).unwrap())
                .collect();
            for i in 0..strings.len() {
                for j in i..strings.len() {
                    let same_orbit = reps[i] == reps[j];
                    let same_figure = match mode.equiv() {
                        EquivKind::Similar => similar_shapes(&keys[i], &keys[j]).unwrap(),
                        EquivKind::Equivalent => {
                            equivalent_shapes(&keys[i], &keys[j]).unwrap()
                        }
                    };
                    assert_eq!(
                        same_orbit, same_figure,
                        "{} vs {} under {mode}",
                        strings[i], strings[j]
                    );
                }
            }
        }
    }
}

/// Seeded random sweep at n = 6, 7 — sizes where exhaustive pair checks
/// are no longer cheap.  Runs well over 10⁴ individual property checks.
#[test]
fn random_cases_n6_n7() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for n in [6usize, 7] {
        for mode in all_modes(n) {
            for _ in 0..1500 {
                let x = random_string(&mut rng, n);
                let g = random_element(&mut rng, mode);
                let h = random_element(&mut rng, mode);

                // Action axiom.
                let gh = g.compose(&h).unwrap();
                let via_word = gh.apply(&x).unwrap();
                assert_eq!(via_word, g.apply(&h.apply(&x).unwrap()).unwrap());

                // Inverses undo, on strings and in the group.
                assert_eq!(g.inverse().apply(&g.apply(&x).unwrap()).unwrap(), x);
                assert_eq!(
                    g.compose(&g.inverse()).unwrap(),
                    GroupElement::identity(mode)
                );

                // Canonical representative is orbit-invariant and minimal.
                let rep = canonical_rep(&x, mode).unwrap();
                assert!(rep <= x);
                assert_eq!(canonical_rep(&g.apply(&x).unwrap(), mode).unwrap(), rep);

                // Moving a string never changes its figure's class.
                let before = shape_key(&x, mode.graph()).unwrap();
                let after = shape_key(&g.apply(&x).unwrap(), mode.graph()).unwrap();
                match mode.equiv() {
                    EquivKind::Similar => {
                        assert!(similar_shapes(&before, &after).unwrap())
                    }
                    EquivKind::Equivalent => {
                        assert!(equivalent_shapes(&before, &after).unwrap())
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn applying_any_element_yields_a_valid_string(seed in any::<u64>(), n in 3usize..=7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = random_string(&mut rng, n);
        for mode in all_modes(n) {
            let g = random_element(&mut rng, mode);
            let y = g.apply(&x).unwrap();
            // Re-validating proves the image is still a permutation.
            prop_assert!(PermString::from_slice(y.entries()).is_ok());
        }
    }

    #[test]
    fn compose_matches_pointwise_application(seed in any::<u64>(), n in 3usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mode = all_modes(n)[seed as usize % 4];
        let g = random_element(&mut rng, mode);
        let h = random_element(&mut rng, mode);
        let gh = g.compose(&h).unwrap();
        let x = random_string(&mut rng, n);
        prop_assert_eq!(gh.apply(&x).unwrap(), g.apply(&h.apply(&x).unwrap()).unwrap());
    }

    #[test]
    fn reversal_reads_strings_backwards(n in 3usize..=8, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = random_string(&mut rng, n);
        let mode = Mode::new(GraphKind::Path, EquivKind::Similar, n).unwrap();
        let v = GroupElement::new(mode, 0, true, 0, false).unwrap();
        let mut reversed = x.entries().to_vec();
        reversed.reverse();
        let image = v.apply(&x).unwrap();
        prop_assert_eq!(image.entries(), reversed.as_slice());
    }
}
