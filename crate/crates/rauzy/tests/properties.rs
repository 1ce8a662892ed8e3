//! Property tests over randomized inputs.

use proptest::prelude::*;

use rauzy::class::{enumerate_class, RauzyGraph};
use rauzy::genperm::all_proper_irreducible_gen;
use rauzy::invariants::{signature, spin_workspace_with};
use rauzy::perm::{Letter, MoveKind, Permutation};

/// A random permutation on 2..=8 letters as a shuffled one-line row.
fn any_permutation() -> impl Strategy<Value = Permutation> {
    (2usize..=8)
        .prop_flat_map(|d| Just(d).prop_perturb(move |d, mut rng| shuffle(d, &mut rng)))
}

fn shuffle(d: usize, rng: &mut impl rand::Rng) -> Permutation {
    let mut letters: Vec<Letter> = (1..=d as Letter).collect();
    for i in (1..d).rev() {
        let j = rng.random_range(0..=i);
        letters.swap(i, j);
    }
    Permutation::from_one_line(letters).unwrap()
}

fn any_irreducible() -> impl Strategy<Value = Permutation> {
    any_permutation().prop_filter("irreducible", |p| p.is_irreducible())
}

proptest! {
    #[test]
    fn parse_print_round_trip(p in any_permutation()) {
        prop_assert_eq!(Permutation::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn inverse_is_an_involution(p in any_permutation()) {
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.is_self_inverse(), p == p.inverse());
    }

    #[test]
    fn omega_is_antisymmetric(p in any_permutation()) {
        prop_assert!(p.omega().is_antisymmetric());
    }

    #[test]
    fn premove_inverts_move(p in any_irreducible()) {
        for kind in MoveKind::BOTH {
            let q = p.rauzy_move(kind).unwrap();
            prop_assert_eq!(q.rauzy_premove(kind).unwrap(), p.clone());
            let pre = p.rauzy_premove(kind).unwrap();
            prop_assert_eq!(pre.rauzy_move(kind).unwrap(), p.clone());
        }
    }

    #[test]
    fn moves_preserve_irreducibility(p in any_irreducible()) {
        for kind in MoveKind::BOTH {
            prop_assert!(p.rauzy_move(kind).unwrap().is_irreducible());
        }
    }

    #[test]
    fn signature_is_inversion_invariant(p in any_irreducible()) {
        prop_assert_eq!(signature(&p).unwrap(), signature(&p.inverse()).unwrap());
    }

    #[test]
    fn spin_is_choice_independent(p in any_irreducible(), seed in 0u64..1024) {
        let sig = signature(&p).unwrap();
        prop_assume!(sig.all_even());
        let base = spin_workspace_with(&p, |_| 0).unwrap().unwrap();
        let mut state = seed;
        let randomized = spin_workspace_with(&p, move |cands| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % cands.len()
        })
        .unwrap()
        .unwrap();
        prop_assert_eq!(base.parity(), randomized.parity());
        prop_assert_eq!(base.pair_count(), randomized.pair_count());
    }

    #[test]
    fn class_graphs_round_trip_through_jsonl(p in any_irreducible()) {
        prop_assume!(p.len() <= 5);
        let g = enumerate_class(&p, 100_000).unwrap();
        let back = RauzyGraph::from_jsonl(&g.to_jsonl()).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn gen_moves_conjugate_through_inverse(index in 0usize..106) {
        // indexed over the full enumeration with at most four letters
        let mut pool = all_proper_irreducible_gen(2);
        pool.extend(all_proper_irreducible_gen(3));
        pool.extend(all_proper_irreducible_gen(4));
        let p = &pool[index % pool.len()];
        for kind in MoveKind::BOTH {
            let lhs = p.inverse().rauzy_move(kind).unwrap();
            let rhs = p.rauzy_move(kind.opposite()).unwrap().map(|r| r.inverse());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
