use proptest::prelude::*;

use simsun_core::bijection::{self, Composition};
use simsun_core::{MotzkinPath, Pattern, Permutation, Step};

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn simsun_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    perm(max_n).prop_filter("simsun", Permutation::is_simsun)
}

fn composition(max_n: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..5, 0..=max_n).prop_map(|parts| Composition::new(parts).unwrap())
}

/// A Motzkin path of length `n` steered by `choices`, forcing down steps
/// once the remaining length equals the height.
fn path(max_n: usize) -> impl Strategy<Value = MotzkinPath> {
    prop::collection::vec(0u8..3, 0..=max_n).prop_map(|choices| {
        let n = choices.len();
        let mut h = 0usize;
        let mut steps = Vec::with_capacity(n);
        for (i, c) in choices.into_iter().enumerate() {
            let left = n - i;
            let step = if left == h {
                Step::D
            } else {
                match c {
                    0 if h > 0 => Step::D,
                    2 if left > h + 1 => Step::U,
                    _ => Step::L,
                }
            };
            match step {
                Step::U => h += 1,
                Step::D => h -= 1,
                Step::L => {}
            }
            steps.push(step);
        }
        MotzkinPath::new(steps).unwrap()
    })
}

/// Pattern containment by trying every subset of positions.
fn contains_by_subsets(word: &[usize], pattern: &[usize]) -> bool {
    fn go(word: &[usize], pattern: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == pattern.len() {
            return (0..chosen.len()).all(|a| {
                (0..chosen.len()).all(|b| (pattern[a] < pattern[b]) == (chosen[a] < chosen[b]))
            });
        }
        (from..word.len()).any(|i| {
            chosen.push(word[i]);
            let hit = go(word, pattern, i + 1, chosen);
            chosen.pop();
            hit
        })
    }
    go(word, pattern, 0, &mut Vec::new())
}

proptest! {
    #[test]
    fn permutation_text_round_trip(s in perm(12)) {
        let back: Permutation = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn inverse_is_involution(s in perm(12)) {
        prop_assert_eq!(s.inverse().inverse(), s);
    }

    #[test]
    fn gamma_is_involution(s in perm(12)) {
        prop_assert_eq!(bijection::gamma(&bijection::gamma(&s)), s);
    }

    #[test]
    fn gamma_commutes_with_inverse(s in perm(12)) {
        prop_assert_eq!(bijection::gamma(&s.inverse()), bijection::gamma(&s).inverse());
    }

    #[test]
    fn simsun_means_no_restriction_has_a_double_descent(s in perm(9)) {
        let naive = (1..=s.len()).all(|k| {
            let r = s.restrict(k).unwrap();
            !r.windows(3).any(|w| w[0] > w[1] && w[1] > w[2])
        });
        prop_assert_eq!(s.is_simsun(), naive);
    }

    #[test]
    fn pattern_containment_matches_subsets(s in perm(8), p in perm(4)) {
        prop_assume!(!p.is_empty());
        let pattern = Pattern::new(p.clone());
        prop_assert_eq!(s.contains_pattern(&pattern), contains_by_subsets(s.as_slice(), p.as_slice()));
    }

    #[test]
    fn phi_round_trip(s in simsun_perm(9)) {
        let tree = bijection::phi_inverse(&s).unwrap();
        prop_assert!(tree.is_canonical());
        prop_assert_eq!(tree.n(), s.len());
        prop_assert_eq!(tree.leaves().len(), s.descents().len() + 1);
        let text = tree.to_string();
        prop_assert_eq!(&text.parse::<simsun_core::IncreasingTree>().unwrap(), &tree);
        prop_assert_eq!(bijection::phi(&tree), s);
    }

    #[test]
    fn non_simsun_has_no_tree(s in perm(9)) {
        prop_assert_eq!(bijection::phi_inverse(&s).is_ok(), s.is_simsun());
    }

    #[test]
    fn chi_round_trip(p in path(14)) {
        let tree = bijection::chi_inverse(&p).unwrap();
        prop_assert_eq!(tree.n(), p.len());
        prop_assert_eq!(bijection::chi(&tree), p.clone());
        let back: MotzkinPath = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn motzkin_to_rs213_round_trip(p in path(12)) {
        let s = bijection::motzkin_to_rs213(&p).unwrap();
        prop_assert!(s.is_simsun());
        prop_assert!(s.avoids(&"213".parse().unwrap()));
        prop_assert_eq!(bijection::rs213_to_motzkin(&s).unwrap(), p.clone());
        prop_assert_eq!(s.inverse().is_simsun(), p.is_dd_free());
    }

    #[test]
    fn motzkin_to_rs231_round_trip(p in path(12)) {
        let s = bijection::motzkin_to_rs231(&p).unwrap();
        prop_assert!(s.is_simsun());
        prop_assert!(s.avoids(&"231".parse().unwrap()));
        prop_assert_eq!(bijection::rs231_to_motzkin(&s).unwrap(), p);
    }

    #[test]
    fn rotations_are_mutually_inverse(c in composition(10)) {
        let s = bijection::rho(&c);
        prop_assert_eq!(s.len(), c.n());
        prop_assert_eq!(bijection::varrho(&c), s.inverse());
        prop_assert_eq!(bijection::rho_inverse(&s).unwrap(), c.clone());
        prop_assert!(s.is_double_simsun());
        prop_assert!(s.avoids(&"312".parse().unwrap()));
        let back: Composition = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn zeta_lands_in_its_class(c in composition(10)) {
        match bijection::zeta(&c) {
            Ok(s) => {
                prop_assert!(c.has_interior_parts_at_least_two());
                prop_assert!(s.is_double_simsun());
                prop_assert!(s.avoids(&"132".parse().unwrap()));
                prop_assert!(s.avoids(&"213".parse().unwrap()));
            }
            Err(_) => prop_assert!(!c.has_interior_parts_at_least_two()),
        }
    }

    #[test]
    fn psi_round_trip(p in path(12)) {
        let s = bijection::motzkin_to_rs231(&p).unwrap();
        let tree = bijection::phi_inverse(&s).unwrap();
        let switched = bijection::psi(&tree).unwrap();
        prop_assert!(switched.is_rtl_increasing());
        prop_assert!(bijection::phi(&switched).avoids(&"213".parse().unwrap()));
        prop_assert_eq!(bijection::psi_inverse(&switched).unwrap(), tree);
    }
}
