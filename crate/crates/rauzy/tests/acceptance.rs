//! Acceptance suite: one test per exit criterion, each printing a pass
//! line with its runtime and asserting the stated time budget.

use std::time::{Duration, Instant};

use rauzy::blocks::self_inverse_for;
use rauzy::class::{enumerate_class, same_class};
use rauzy::dynamics::{linv_apply, rat};
use rauzy::genconstruct::{exceptional_twelve, self_inverse_gen_for, GenComponent};
use rauzy::genperm::{enumerate_gen_class, gen_genus, gen_signature, GenPerm, GenSignature};
use rauzy::invariants::{
    class_key, reduce_removable, signature, spin_workspace, ClassKey, ComponentKind, Signature,
};
use rauzy::lagrangian::orbits;
use rauzy::perm::{MoveKind, Permutation};
use rauzy::verify::{run_suite, Bounds};

fn p(s: &str) -> Permutation {
    Permutation::parse(s).unwrap()
}

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("PASS {name} ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{name} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

fn assert_suite(name: &str, bounds: &Bounds) {
    let report = run_suite(name, bounds).unwrap();
    for c in &report.checks {
        assert!(c.passed, "{}: {} failed: {}", name, c.name, c.detail);
    }
}

/// Criterion 1: the three-letter Rauzy graph, exactly as drawn.
#[test]
fn acceptance_01_rauzy_graph_of_321() {
    let t = Instant::now();
    let g = enumerate_class(&p("3 2 1"), 100).unwrap();
    assert_eq!(g.vertices(), &[p("2 3 1"), p("3 1 2"), p("3 2 1")]);
    assert_eq!(g.edges().len(), 6);
    assert_eq!(g.self_loop_count(), 2);
    let idx = |s: &str| g.vertices().binary_search(&p(s)).unwrap();
    let mut want = [(idx("2 3 1"), idx("2 3 1"), MoveKind::Zero),
        (idx("2 3 1"), idx("3 2 1"), MoveKind::One),
        (idx("3 1 2"), idx("3 2 1"), MoveKind::Zero),
        (idx("3 1 2"), idx("3 1 2"), MoveKind::One),
        (idx("3 2 1"), idx("3 1 2"), MoveKind::Zero),
        (idx("3 2 1"), idx("2 3 1"), MoveKind::One)];
    want.sort_unstable();
    assert_eq!(g.edges(), &want[..]);
    finish("criterion-1 rauzy-graph-321", t, Duration::from_secs(1));
}

/// Criterion 2: the genus <= 3 table of self-inverse representatives.
#[test]
fn acceptance_02_low_genus_table() {
    let t = Instant::now();
    let table: [(&str, &str, ComponentKind); 13] = [
        ("2 1", "(0)", ComponentKind::Hyperelliptic),
        ("3 2 1", "(0;0)", ComponentKind::Hyperelliptic),
        ("4 3 2 1", "(2)", ComponentKind::Hyperelliptic),
        ("5 4 3 2 1", "(1;1)", ComponentKind::Hyperelliptic),
        ("6 5 4 3 2 1", "(4)", ComponentKind::Hyperelliptic),
        ("6 3 2 5 4 1", "(4)", ComponentKind::Odd),
        ("7 4 3 2 6 5 1", "(3;1)", ComponentKind::Plain),
        ("7 3 2 6 5 4 1", "(1;3)", ComponentKind::Plain),
        ("7 6 5 4 3 2 1", "(2;2)", ComponentKind::Hyperelliptic),
        ("7 3 2 4 6 5 1", "(2;2)", ComponentKind::Odd),
        ("8 3 2 4 7 6 5 1", "(1;1,2)", ComponentKind::Plain),
        ("8 4 3 2 5 7 6 1", "(2;1,1)", ComponentKind::Plain),
        ("9 4 3 2 5 8 7 6 1", "(1;1,1,1)", ComponentKind::Plain),
    ];
    for (text, sig_text, kind) in table {
        let listed = p(text);
        assert!(listed.is_self_inverse(), "{text}");
        let key = class_key(&listed).unwrap();
        assert_eq!(key.signature, Signature::parse(sig_text).unwrap(), "{text}");
        assert_eq!(key.kind, kind, "{text}");
        let built = self_inverse_for(&key).unwrap();
        assert!(
            same_class(&built, &listed, 9, 10_000_000).unwrap(),
            "{text}: constructed {built} is outside the listed class"
        );
    }
    finish("criterion-2 low-genus-table", t, Duration::from_secs(60));
}

/// Criterion 3: the worked spin computation.
#[test]
fn acceptance_03_spin_worked_example() {
    let t = Instant::now();
    let ws = spin_workspace(&p("4 3 6 1 5 2")).unwrap().unwrap();
    assert_eq!(ws.parity(), 1);
    assert_eq!(ws.pair_count(), 3);
    finish("criterion-3 spin-worked-example", t, Duration::from_secs(1));
}

/// Criterion 4: every class on up to six letters has constant invariants
/// and contains the constructed self-inverse representative.
#[test]
fn acceptance_04_main_theorem_desk_scale() {
    let t = Instant::now();
    let bounds = Bounds {
        d: 6,
        ..Bounds::default()
    };
    assert_suite("class-invariance", &bounds);
    assert_suite("self-inverse-membership", &bounds);
    finish("criterion-4 main-theorem-d6", t, Duration::from_secs(300));
}

/// Criterion 5: inversion conjugates the two move types.
#[test]
fn acceptance_05_inverse_conjugation() {
    let t = Instant::now();
    let bounds = Bounds {
        d: 6,
        ..Bounds::default()
    };
    assert_suite("inverse-conjugation", &bounds);
    finish("criterion-5 inverse-conjugation", t, Duration::from_secs(60));
}

/// Criterion 6: the removable-singularity pipeline.
#[test]
fn acceptance_06_removable_pipeline() {
    let t = Instant::now();
    assert_eq!(reduce_removable(&p("7 6 2 3 4 5 1")).unwrap(), p("4 3 2 1"));
    let rebuilt = p("7 2 3 4 6 5 1");
    assert!(rebuilt.is_self_inverse());
    assert_eq!(
        signature(&rebuilt).unwrap(),
        Signature::parse("(2;0,0,0)").unwrap()
    );
    assert!(same_class(&rebuilt, &p("7 4 5 1 6 2 3"), 8, 1_000_000).unwrap());
    // the construction reproduces it from the key alone
    let key = ClassKey {
        signature: Signature::parse("(2;0,0,0)").unwrap(),
        kind: ComponentKind::Hyperelliptic,
    };
    assert_eq!(self_inverse_for(&key).unwrap(), rebuilt);
    finish("criterion-6 removable-pipeline", t, Duration::from_secs(60));
}

/// Criterion 7: the worked generalized class with its undefined moves.
#[test]
fn acceptance_07_generalized_class() {
    let t = Instant::now();
    let gp = |s: &str| GenPerm::parse(s).unwrap();
    let seed = gp("1 2 2 / 3 3 1");
    let g = enumerate_gen_class(&seed, 100).unwrap();
    assert_eq!(g.len(), 4);
    assert_eq!(g.undefined_move_count(), 2);
    let members = [
        gp("1 2 2 / 3 3 1"),
        gp("1 1 2 2 / 3 3"),
        gp("1 1 2 / 2 3 3"),
        gp("1 1 / 2 2 3 3"),
    ];
    for m in &members {
        assert!(g.contains(m), "{m} missing");
    }
    // the figure's edges: self-loops on the first and third, a cycle
    // through all four, and the two undefined moves
    let moves = |q: &GenPerm, kind| q.rauzy_move(kind).unwrap();
    assert_eq!(moves(&members[0], MoveKind::One).unwrap(), members[0]);
    assert_eq!(moves(&members[0], MoveKind::Zero).unwrap(), members[1]);
    assert_eq!(moves(&members[1], MoveKind::Zero), None);
    assert_eq!(moves(&members[1], MoveKind::One).unwrap(), members[2]);
    assert_eq!(moves(&members[2], MoveKind::Zero).unwrap(), members[2]);
    assert_eq!(moves(&members[2], MoveKind::One).unwrap(), members[3]);
    assert_eq!(moves(&members[3], MoveKind::One), None);
    assert_eq!(moves(&members[3], MoveKind::Zero).unwrap(), members[0]);
    finish("criterion-7 generalized-class", t, Duration::from_secs(1));
}

/// Criterion 8: the existence condition matches exhaustive search in both
/// directions over all generalized classes with at most four letters.
#[test]
fn acceptance_08_generalized_existence() {
    let t = Instant::now();
    let bounds = Bounds {
        letters: 4,
        ..Bounds::default()
    };
    assert_suite("gen-existence", &bounds);
    finish(
        "criterion-8 generalized-existence",
        t,
        Duration::from_secs(600),
    );
}

/// Criterion 9: worked generalized constructions and the stored
/// exceptional elements.
#[test]
fn acceptance_09_generalized_constructions() {
    let t = Instant::now();
    for sig_text in ["(2,2,1,1,1,1,-1^12)", "(0;3,3,1,1,1,1,-1^6)", "(0;1^8,-1^4)"] {
        let sig = GenSignature::parse(sig_text).unwrap();
        let built = self_inverse_gen_for(&sig).unwrap().unwrap();
        assert_eq!(gen_signature(&built).unwrap(), sig, "{sig_text}");
        assert!(built.is_self_inverse(), "{sig_text}");
        assert!(built.is_irreducible(), "{sig_text}");
    }
    for comp in [GenComponent::Regular, GenComponent::Irregular] {
        let q = exceptional_twelve(comp).unwrap();
        assert!(q.is_self_inverse());
        assert!(q.is_irreducible());
        assert_eq!(
            gen_signature(&q).unwrap(),
            GenSignature::parse("(12)").unwrap()
        );
        assert_eq!(gen_genus(&q).unwrap(), 4);
    }
    finish(
        "criterion-9 generalized-constructions",
        t,
        Duration::from_secs(1),
    );
}

/// Criterion 10: isotropy, Lagrangian ranks, and the worked examples with
/// their printed span vectors up to sign.
#[test]
fn acceptance_10_lagrangian() {
    let t = Instant::now();
    let bounds = Bounds {
        d: 6,
        ..Bounds::default()
    };
    assert_suite("lagrangian", &bounds);
    let contains_up_to_sign = |dec: &rauzy::lagrangian::OrbitDecomposition, v: &[i64]| {
        dec.images()
            .iter()
            .any(|img| img[..] == *v || img.iter().zip(v).all(|(a, b)| *a == -b))
    };
    let dec = orbits(&p("4 1 3 2")).unwrap();
    assert!(contains_up_to_sign(&dec, &[1, 1, 0, -2]));
    assert!(contains_up_to_sign(&dec, &[0, 1, 0, -1]));
    let dec = orbits(&p("3 1 4 2")).unwrap();
    assert_eq!(dec.images().len(), 1);
    assert!(contains_up_to_sign(&dec, &[1, 2, -2, -1]));
    let dec = orbits(&p("7 5 3 6 2 4 1")).unwrap();
    assert!(contains_up_to_sign(&dec, &[2, 1, 0, 1, -1, -1, -2]));
    assert!(contains_up_to_sign(&dec, &[1, 0, 0, 0, 0, 0, -1]));
    finish("criterion-10 lagrangian", t, Duration::from_secs(120));
}

/// Criterion 11: induction against the independent first-return oracle,
/// exact area preservation, and the worked linear involution.
#[test]
fn acceptance_11_dynamics() {
    let t = Instant::now();
    let bounds = Bounds {
        samples: 100,
        ..Bounds::default()
    };
    assert_suite("dynamics", &bounds);
    // the four printed branches, asserted directly as well
    let host = GenPerm::parse("a b b / c c a").unwrap();
    let lambda = vec![rat(1, 2), rat(1, 4), rat(1, 4)];
    assert_eq!(
        linv_apply(&host, &lambda, &(rat(1, 3), 0)).unwrap(),
        (rat(5, 6), 0)
    );
    assert_eq!(
        linv_apply(&host, &lambda, &(rat(5, 8), 0)).unwrap(),
        (rat(7, 8), 1)
    );
    assert_eq!(
        linv_apply(&host, &lambda, &(rat(1, 8), 1)).unwrap(),
        (rat(3, 8), 0)
    );
    assert_eq!(
        linv_apply(&host, &lambda, &(rat(7, 8), 1)).unwrap(),
        (rat(3, 8), 1)
    );
    finish("criterion-11 dynamics", t, Duration::from_secs(120));
}
