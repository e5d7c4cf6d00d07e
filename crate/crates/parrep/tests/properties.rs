//! Cross-module invariants: identities that tie the permutation, group,
//! groupoid, semigroup, symmetric-combinatorics, and representation layers
//! together.  Everything here is exact arithmetic; random choices use a
//! fixed seed.

use parrep::group::{coset_subset_family, parse_group_spec, parse_subgroup_spec, CosetSpace};
use parrep::groupoid::{decomposition_report, order_formula, Groupoid};
use parrep::linalg::q;
use parrep::oracle::class_size;
use parrep::perm::Permutation;
use parrep::semigroup::all_elements;
use parrep::symmetric::{
    factorial, labels_of, mn_character, partitions_of, specht_rep, BiPartitionLabel, Partition,
    SnContext,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Σ over all labels of dim² equals `2^(n-2)·(n!+(n-1)!)`, purely
/// arithmetically, well past the sizes where matrices are ever built.
#[test]
fn label_dimension_squares_sum_to_the_arrow_count() {
    for n in 2..=9u128 {
        let total: u128 = labels_of(n as usize).iter().map(|l| l.dim() * l.dim()).sum();
        let expected = (1u128 << (n - 2)) * (factorial(n) + factorial(n - 1));
        assert_eq!(total, expected, "n = {n}");
    }
}

/// The inverse semigroup and the groupoid have the same cardinality, and
/// both match the closed formula, on all benchmark pairs.
#[test]
fn semigroup_groupoid_and_formula_cardinalities_agree() {
    let pairs = [
        ("S3", "S2"),
        ("S4", "S3"),
        ("C6", "gens: (1 3 5)(2 4 6)"),
        ("D4", "C4"),
    ];
    for (gspec, hspec) in pairs {
        let group = parse_group_spec(gspec, 0).unwrap();
        let sub = parse_subgroup_spec(hspec, &group).unwrap();
        let cosets = CosetSpace::left_cosets(&group, &sub).unwrap();
        let formula = order_formula(&cosets);
        let arrows = Groupoid::build(&cosets, None).unwrap().elements().len() as u128;
        let semigroup = all_elements(&cosets, None).unwrap().len() as u128;
        assert_eq!(arrows, formula, "{gspec}/{hspec}");
        assert_eq!(semigroup, formula, "{gspec}/{hspec}");
    }
}

/// The same pair presented through different generating sets (hence a
/// different internal element enumeration) produces the same component
/// table.
#[test]
fn decomposition_is_presentation_independent() {
    let canonical = {
        let g = parse_group_spec("S4", 0).unwrap();
        let h = parse_subgroup_spec("gens: (1 2), (1 2 3)", &g).unwrap();
        CosetSpace::left_cosets(&g, &h).unwrap()
    };
    let regenerated = {
        let g = parse_group_spec("gens: (1 2), (1 2 3 4)", 0).unwrap();
        let h = parse_subgroup_spec("gens: (1 3), (2 3)", &g).unwrap();
        CosetSpace::left_cosets(&g, &h).unwrap()
    };
    let table = |cosets: &std::sync::Arc<CosetSpace>| -> Vec<(usize, usize, usize)> {
        let groupoid = Groupoid::build(cosets, None).unwrap();
        decomposition_report(&groupoid)
            .unwrap()
            .components
            .iter()
            .map(|c| (c.k, c.m, c.isotropy_order))
            .collect()
    };
    assert_eq!(table(&canonical), table(&regenerated));
}

/// Builds one permutation of each cycle type by laying the cycles out over
/// consecutive points.
fn permutation_of_type(class: &Partition, degree: usize) -> Permutation {
    let mut images: Vec<u16> = (0..degree as u16).collect();
    let mut next = 0usize;
    for &part in class.parts() {
        for i in 0..part {
            images[next + i] = (next + (i + 1) % part) as u16;
        }
        next += part;
    }
    Permutation::from_images(images).unwrap()
}

/// Traces of the explicitly constructed degree-six modules agree with the
/// border-strip character recursion on every conjugacy class.
#[test]
fn specht_traces_match_the_character_recursion_on_six_points() {
    for shape in [
        Partition::parse("[3,2,1]").unwrap(),
        Partition::parse("[4,2]").unwrap(),
        Partition::parse("[2,2,1,1]").unwrap(),
    ] {
        let rep = specht_rep(&shape).unwrap();
        for class in partitions_of(6) {
            let p = permutation_of_type(&class, 6);
            let expected = mn_character(&shape, &class).unwrap();
            let trace = rep.mat_of(&p).expect("class representative").trace();
            assert_eq!(trace, q(expected), "shape {shape}, class {class}");
        }
    }
}

/// The border-strip characters are orthonormal under the class-weighted
/// inner product on six and seven points.
#[test]
fn character_rows_are_orthonormal() {
    for n in [6usize, 7] {
        let shapes = partitions_of(n);
        let classes = partitions_of(n);
        for (i, lambda) in shapes.iter().enumerate() {
            for mu in shapes.iter().take(i + 1) {
                let mut sum: i128 = 0;
                for class in &classes {
                    let weight = class_size(class) as i128;
                    let a = mn_character(lambda, class).unwrap() as i128;
                    let b = mn_character(mu, class).unwrap() as i128;
                    sum += weight * a * b;
                }
                let expected = if lambda == mu { factorial(n as u128) as i128 } else { 0 };
                assert_eq!(sum, expected, "n = {n}, shapes {lambda} and {mu}");
            }
        }
    }
}

/// The defining witness laws hold on randomly sampled element pairs of a
/// constructed representation, far beyond the generator set on which they
/// are imposed.
#[test]
fn witness_laws_hold_on_random_pairs() {
    let ctx = SnContext::new(4).unwrap();
    let label = BiPartitionLabel::parse("([2,1],[1])@n=4").unwrap();
    let rep = ctx.sn_irreducible(&label).unwrap().rep().clone();
    let group = ctx.group().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..300 {
        let g = rng.gen_range(0..group.order());
        let h = rng.gen_range(0..group.order());
        let gh = group.element(g).compose(group.element(h));
        let gi = group.inverse_index(g);
        let hi = group.inverse_index(h);
        let m_gh = rep.mat_of(&gh).unwrap();
        // π(g)π(h)π(h⁻¹) = π(gh)π(h⁻¹) and π(g⁻¹)π(g)π(h) = π(g⁻¹)π(gh).
        assert_eq!(
            rep.mat(g).mul(rep.mat(h)).mul(rep.mat(hi)),
            m_gh.mul(rep.mat(hi))
        );
        assert_eq!(
            rep.mat(gi).mul(rep.mat(g)).mul(rep.mat(h)),
            rep.mat(gi).mul(m_gh)
        );
    }
    for h in ctx.subgroup().elements() {
        let i = group.index_of(h).unwrap();
        assert!(
            rep.mat(i).mul(rep.mat(group.inverse_index(i))).is_identity(),
            "not invertible on the subgroup at {h}"
        );
    }
}

/// Translating a coset subset is an action: translating by g then by h
/// lands on the same mask as translating by the composite in one step.
#[test]
fn subset_translation_composes() {
    let group = parse_group_spec("S4", 0).unwrap();
    let sub = parse_subgroup_spec("S3", &group).unwrap();
    let cosets = CosetSpace::left_cosets(&group, &sub).unwrap();
    let family = coset_subset_family(&cosets, None).unwrap();
    let translate = |mask: u64, p: &Permutation| -> u64 {
        let mut out = 0u64;
        for c in 0..cosets.index() {
            if mask >> c & 1 == 1 {
                let moved = p.compose(cosets.rep(c));
                out |= 1 << cosets.coset_of(&moved).expect("parent element");
            }
        }
        out
    };
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..500 {
        let a = &family[rng.gen_range(0..family.len())];
        let g = group.element(rng.gen_range(0..group.order()));
        let h = group.element(rng.gen_range(0..group.order()));
        let two_steps = translate(translate(a.mask(), g), h);
        let one_step = a.translate_mask(&h.compose(g));
        assert_eq!(two_steps, one_step, "A = {a}, g = {g}, h = {h}");
        assert_eq!(translate(a.mask(), g), a.translate_mask(g));
    }
}

/// The restriction multiset of every label on up to five points has the
/// dimensions bookkeeping implied by its own label dimension, and matches
/// the adjunction table transposed.
#[test]
fn restriction_and_induction_tables_are_adjoint() {
    for n in [3usize, 4] {
        let ctx = SnContext::new(n).unwrap();
        // d[label][nu] from the restriction side.
        let mut restriction: Vec<(BiPartitionLabel, Vec<(Partition, u64)>)> = Vec::new();
        for l in labels_of(n) {
            restriction.push((l.clone(), ctx.sn_restriction_decomp(&l).unwrap()));
        }
        // The induction side must be the transpose.
        for nu in partitions_of(n - 1) {
            let induced: std::collections::BTreeMap<BiPartitionLabel, u64> =
                ctx.sn_pind_decomp(&nu).unwrap().into_iter().collect();
            for (label, decomp) in &restriction {
                let from_restriction = decomp
                    .iter()
                    .find(|(p, _)| p == &nu)
                    .map(|(_, d)| *d)
                    .unwrap_or(0);
                let from_induction = induced.get(label).copied().unwrap_or(0);
                assert_eq!(
                    from_restriction, from_induction,
                    "n = {n}, label {label}, target {nu}"
                );
            }
        }
    }
}
