use dinfty::cartan::Rank;
use dinfty::crystalgraph::{
    check_crystal_axioms, check_dual_reading, check_factorization, check_isomorphism,
    check_isomorphism_with, export_json, generate, generate_with, GenerateOptions,
};
use dinfty::isomorphism::psi_mutant;
use dinfty::kostant::KostantPartition;
use dinfty::tableaux::{MLTableau, Reading};

fn d(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

/// Layer sizes from prod over positive roots of 1/(1 - x^ht), with the heights
/// of ε_i − ε_j and ε_i + ε_j read off directly.
fn layer_oracle(n: usize, depth: usize) -> Vec<usize> {
    let mut heights = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            heights.push(j - i);
            heights.push(2 * n - i - j);
        }
    }
    let mut coeffs = vec![0usize; depth + 1];
    coeffs[0] = 1;
    for h in heights {
        for m in h..=depth {
            coeffs[m] += coeffs[m - h];
        }
    }
    coeffs
}

#[test]
fn layer_sizes_match_generating_function() {
    for (n, depth) in [(4, 5), (5, 4), (6, 3)] {
        let t = generate::<MLTableau>(d(n), depth).unwrap();
        let k = generate::<KostantPartition>(d(n), depth).unwrap();
        let oracle = layer_oracle(n, depth);
        assert_eq!(t.layer_sizes(), oracle, "tableaux n={n}");
        assert_eq!(k.layer_sizes(), oracle, "kostant n={n}");
    }
}

#[test]
fn axioms_hold_on_both_realizations() {
    let t = generate::<MLTableau>(d(5), 4).unwrap();
    let r = check_crystal_axioms(&t);
    assert!(r.passed(), "{r}");
    let k = generate::<KostantPartition>(d(5), 4).unwrap();
    let r = check_crystal_axioms(&k);
    assert!(r.passed(), "{r}");
}

#[test]
fn isomorphism_on_balls() {
    for (n, depth) in [(4, 5), (5, 3), (6, 3)] {
        let r = check_isomorphism(d(n), depth).unwrap();
        assert!(r.passed(), "n={n}: {r}");
        assert!(r.checked_nodes > 0);
    }
}

#[test]
fn mutant_is_rejected() {
    let r = check_isomorphism_with(d(4), 3, &psi_mutant).unwrap();
    assert!(!r.passed());
    assert!(r.failures_of("psi f_i = f_i psi") > 0);
}

#[test]
fn far_reading_gives_the_same_graph() {
    let g = generate::<MLTableau>(d(4), 4).unwrap();
    let r = check_dual_reading(&g).unwrap();
    assert!(r.passed(), "{r}");
    let far = generate_with::<MLTableau>(
        d(4),
        4,
        &GenerateOptions { reading: Reading::Far, ..GenerateOptions::default() },
    )
    .unwrap();
    assert_eq!(export_json(&g), export_json(&far));
}

#[test]
fn factorization_holds() {
    let g = generate::<MLTableau>(d(5), 4).unwrap();
    let r = check_factorization(&g);
    assert!(r.passed(), "{r}");
}

#[test]
fn generation_is_deterministic() {
    let a = export_json(&generate::<KostantPartition>(d(5), 4).unwrap());
    let b = export_json(&generate::<KostantPartition>(d(5), 4).unwrap());
    assert_eq!(a, b);
}
