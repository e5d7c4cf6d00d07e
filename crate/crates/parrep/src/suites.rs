//! Named verification suites shared by the command-line `verify` verb and
//! the acceptance tests.  Each suite runs a family of concrete checks and
//! returns one outcome per case, carrying a witness description when a
//! check fails.  Suites never panic on mathematical failure — they report
//! it — so callers can aggregate and print all failures at once.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::group::{
    coset_set_stabilizer, coset_subset_family, parse_group_spec, parse_subgroup_spec,
    CosetSpace, HCosetSubset,
};
use crate::groupoid::{
    decomposition_report, order_formula, verify_partial_group_algebra_relations, Groupoid,
};
use crate::induction::{
    all_irreducibles, double_coset_restriction_matches, frobenius_check, globalization_of_ind,
    partial_hom_dim, standard_supplier,
};
use crate::linalg::Matrix;
use crate::partial::{projector, projector_over_elements, PartialRep};
use crate::semigroup::{
    all_elements, bool_matrix_rep, iso_f, iso_f_inverse, iso_f_linear, s_inverse, s_mul,
};
use crate::symmetric::{factorial, labels_of, partitions_of, BiPartitionLabel, SnContext};
use crate::{Error, Result};

/// The result of one named check: `ok` with a summary, or a failure with
/// a witness in `detail`.
#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn run_case(name: impl Into<String>, body: impl FnOnce() -> Result<String>) -> CaseOutcome {
    let name = name.into();
    match body() {
        Ok(detail) => CaseOutcome {
            name,
            ok: true,
            detail,
        },
        Err(e) => CaseOutcome {
            name,
            ok: false,
            detail: e.to_string(),
        },
    }
}

fn fail(msg: String) -> Error {
    Error::OracleInconsistency(msg)
}

/// The suite names accepted by [`run_suite`], in report order.
pub const SUITE_NAMES: [&str; 12] = [
    "groupoid-cardinality",
    "base-decomposition",
    "dimension-identity",
    "irreducible-completeness",
    "projector-calculus",
    "globalization",
    "mackey-restriction",
    "frobenius-reciprocity",
    "restriction-formula",
    "branching-rule",
    "semigroup",
    "algebra-relations",
];

/// The benchmark pairs used by the cardinality and identity suites:
/// display name, group spec, subgroup spec, expected arrow count.
fn benchmark_pairs() -> Vec<(&'static str, &'static str, &'static str, u128)> {
    vec![
        ("S3/S2", "S3", "S2", 16),
        ("S4/S3", "S4", "S3", 120),
        ("S5/S4", "S5", "S4", 1152),
        ("C6/C3", "C6", "gens: (1 3 5)(2 4 6)", 9),
        ("D4/C4", "D4", "C4", 12),
    ]
}

fn pair_cosets(gspec: &str, hspec: &str) -> Result<Arc<CosetSpace>> {
    let group = parse_group_spec(gspec, 0)?;
    let sub = parse_subgroup_spec(hspec, &group)?;
    CosetSpace::left_cosets(&group, &sub)
}

/// Arrow counts by direct enumeration versus the closed formula
/// `2^(r-2)·(|G|+|H|)`, on all benchmark pairs.
pub fn suite_groupoid_cardinality(_max_n: usize) -> Vec<CaseOutcome> {
    benchmark_pairs()
        .into_iter()
        .map(|(name, gspec, hspec, expected)| {
            run_case(format!("cardinality {name}"), || {
                let cosets = pair_cosets(gspec, hspec)?;
                let formula = order_formula(&cosets);
                let groupoid = Groupoid::build(&cosets, None)?;
                let counted = groupoid.elements().len() as u128;
                if counted != expected || formula != expected {
                    return Err(fail(format!(
                        "{name}: counted {counted}, formula {formula}, expected {expected}"
                    )));
                }
                Ok(format!("{counted} arrows, formula agrees"))
            })
        })
        .collect()
}

/// The three-component decomposition of the smallest nonabelian case,
/// pinned exactly: multiplicities (1,2,1) and isotropy orders (2,2,6).
pub fn suite_base_decomposition(_max_n: usize) -> Vec<CaseOutcome> {
    vec![run_case("S3/S2 component table", || {
        let cosets = pair_cosets("S3", "S2")?;
        let groupoid = Groupoid::build(&cosets, None)?;
        let report = decomposition_report(&groupoid)?;
        let table: Vec<(usize, usize, usize)> = report
            .components
            .iter()
            .map(|c| (c.k, c.m, c.isotropy_order))
            .collect();
        let expected = vec![(1, 1, 2), (2, 2, 2), (3, 1, 6)];
        if table != expected || report.total_dim != 16 {
            return Err(fail(format!(
                "got components {table:?} with total {}, expected {expected:?} with total 16",
                report.total_dim
            )));
        }
        Ok("3 components: (k,m,|K|) = (1,1,2), (2,2,2), (3,1,6); total 16".into())
    })]
}

/// The block-dimension identity Σ m²·|K| = arrow count for every
/// benchmark pair, and the symmetric-group chain identity
/// Σ_k C(n-1,k-1)²·k!·(n-k)! = 2^(n-2)·(n!+(n-1)!) for n up to 8.
pub fn suite_dimension_identity(max_n: usize) -> Vec<CaseOutcome> {
    let mut out: Vec<CaseOutcome> = benchmark_pairs()
        .into_iter()
        .map(|(name, gspec, hspec, expected)| {
            run_case(format!("block dimensions {name}"), || {
                let cosets = pair_cosets(gspec, hspec)?;
                let groupoid = Groupoid::build(&cosets, None)?;
                // The report errors out internally if Σ m²·|K| misses the
                // arrow count; re-assert the closed value on top.
                let report = decomposition_report(&groupoid)?;
                if report.total_dim != expected {
                    return Err(fail(format!(
                        "{name}: Σ m²|K| = {} but the groupoid has {expected} arrows",
                        report.total_dim
                    )));
                }
                Ok(format!(
                    "{} components, Σ m²|K| = {}",
                    report.components.len(),
                    report.total_dim
                ))
            })
        })
        .collect();
    out.push(run_case("symmetric chain identity", || {
        let top = max_n.clamp(2, 8);
        for n in 2..=top {
            let ctx = SnContext::new(n)?;
            let report = ctx.algebra_report()?;
            let expected = (1u128 << (n - 2))
                * (factorial(n as u128) + factorial(n as u128 - 1));
            if report.total_dim != expected {
                return Err(fail(format!(
                    "n = {n}: report total {} vs closed form {expected}",
                    report.total_dim
                )));
            }
        }
        Ok(format!("identity holds for n = 2..={top}"))
    }));
    out
}

/// Completeness of the constructed irreducibles for the stabilizer pairs
/// on 3 and 4 points: the dimensions' squares sum to the arrow count,
/// every representation is Schur-irreducible, and distinct ones admit no
/// nonzero homomorphisms.
pub fn suite_irreducible_completeness(max_n: usize) -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for n in [3usize, 4] {
        if n > max_n {
            continue;
        }
        out.push(run_case(format!("completeness S{n}/S{}", n - 1), || {
            let ctx = SnContext::new(n)?;
            let reps = all_irreducibles(ctx.cosets(), &standard_supplier)?;
            let label_count = labels_of(n).len();
            if reps.len() != label_count {
                return Err(fail(format!(
                    "built {} representations but there are {label_count} labels",
                    reps.len()
                )));
            }
            let total: u128 = reps.iter().map(|r| (r.dim() * r.dim()) as u128).sum();
            let arrows = order_formula(ctx.cosets());
            if total != arrows {
                return Err(fail(format!(
                    "Σ dim² = {total} but the groupoid has {arrows} arrows"
                )));
            }
            Ok(format!("{} representations, Σ dim² = {total}", reps.len()))
        }));
        out.push(run_case(format!("Schur and disjointness S{n}/S{}", n - 1), || {
            let ctx = SnContext::new(n)?;
            let reps = all_irreducibles(ctx.cosets(), &standard_supplier)?;
            for (i, a) in reps.iter().enumerate() {
                let end = partial_hom_dim(a.rep(), a.rep(), ctx.cosets())?;
                if end != 1 {
                    return Err(fail(format!(
                        "representation {i} (dim {}) has endomorphism dimension {end}",
                        a.dim()
                    )));
                }
                for (j, b) in reps.iter().enumerate().take(i) {
                    let hom = partial_hom_dim(a.rep(), b.rep(), ctx.cosets())?;
                    if hom != 0 {
                        return Err(fail(format!(
                            "representations {i} and {j} share a {hom}-dimensional homomorphism space"
                        )));
                    }
                }
            }
            Ok(format!(
                "{} endomorphism checks and {} disjointness checks",
                reps.len(),
                reps.len() * (reps.len() - 1) / 2
            ))
        }));
    }
    out
}

/// Projector calculus on a family of constructed representations:
/// idempotence, orthogonality, resolution of the identity, the
/// translation law, vanishing off coset unions, and agreement between the
/// coset and element forms.
pub fn suite_projector_calculus(max_n: usize) -> Vec<CaseOutcome> {
    let mut reps: Vec<(String, Arc<SnContext>, PartialRep)> = Vec::new();
    for (n, labels) in [
        (3usize, vec!["([1],[2])@n=3", "([1],[1,1])@n=3", "([2],[1])@n=3",
                      "([1,1],[1])@n=3", "([3],[])@n=3", "([2,1],[])@n=3",
                      "([1,1,1],[])@n=3"]),
        (4, vec!["([2,1],[1])@n=4", "([2],[2])@n=4", "([1],[3])@n=4"]),
    ] {
        if n > max_n {
            continue;
        }
        let ctx = match SnContext::new(n) {
            Ok(ctx) => Arc::new(ctx),
            Err(e) => {
                return vec![CaseOutcome {
                    name: format!("projectors S{n}"),
                    ok: false,
                    detail: e.to_string(),
                }]
            }
        };
        for l in labels {
            let parsed = BiPartitionLabel::parse(l).expect("well-formed label");
            match ctx.sn_irreducible(&parsed) {
                Ok(ind) => reps.push((l.to_string(), Arc::clone(&ctx), ind.rep().clone())),
                Err(e) => {
                    return vec![CaseOutcome {
                        name: format!("projectors {l}"),
                        ok: false,
                        detail: e.to_string(),
                    }]
                }
            }
        }
    }
    let mut out = Vec::new();
    for (label, ctx, rep) in &reps {
        out.push(run_case(format!("projectors {label}"), || {
            let cosets = ctx.cosets();
            let family = coset_subset_family(cosets, None)?;
            let projectors: Vec<Matrix> = family
                .iter()
                .map(|a| projector(rep, a))
                .collect::<Result<_>>()?;
            // Orthogonal idempotents resolving the identity.
            let mut sum = Matrix::zeros(rep.dim(), rep.dim());
            for (i, p) in projectors.iter().enumerate() {
                sum = sum.add(p);
                for (j, q) in projectors.iter().enumerate() {
                    let prod = p.mul(q);
                    let expected_zero = i != j;
                    if expected_zero && !prod.is_zero() {
                        return Err(fail(format!(
                            "projectors of {} and {} are not orthogonal",
                            family[i], family[j]
                        )));
                    }
                    if !expected_zero && prod != *p {
                        return Err(fail(format!("projector of {} is not idempotent", family[i])));
                    }
                }
            }
            if !sum.is_identity() {
                return Err(fail("projectors do not sum to the identity".into()));
            }
            // Translation law π(g)·P_A = P_{gA}·π(g) whenever gA is again
            // an object (contains the trivial coset).
            let group = ctx.group();
            for (i, a) in family.iter().enumerate() {
                for (gi, perm) in group.elements().iter().enumerate() {
                    let mask = a.translate_mask(perm);
                    if mask & 1 == 1 {
                        let ga = HCosetSubset::from_mask(cosets, mask)?;
                        let pga = projector(rep, &ga)?;
                        if rep.mat(gi).mul(&projectors[i]) != pga.mul(rep.mat(gi)) {
                            return Err(fail(format!(
                                "translation law fails at A = {a}, g = {perm}"
                            )));
                        }
                    }
                }
            }
            // Element form: agrees with the coset form on unions, and
            // vanishes once the set stops being a union of cosets.
            for (i, a) in family.iter().enumerate() {
                let mut members = vec![false; group.order()];
                for e in a.element_indices() {
                    members[e] = true;
                }
                let p = projector_over_elements(rep, &members)?;
                if p != projectors[i] {
                    return Err(fail(format!(
                        "element-form projector differs from the coset form at {a}"
                    )));
                }
                if let Some(drop) = members.iter().rposition(|&m| m) {
                    if drop != 0 {
                        members[drop] = false;
                        let broken = projector_over_elements(rep, &members)?;
                        if !broken.is_zero() {
                            return Err(fail(format!(
                                "projector over a non-union (dropping {}) is nonzero at {a}",
                                group.element(drop)
                            )));
                        }
                    }
                }
            }
            Ok(format!(
                "{} subsets: idempotence, orthogonality, resolution, translation, vanishing",
                family.len()
            ))
        }));
    }
    // Exhaustive element-subset sweep in the order-6 case.
    if max_n >= 3 {
        out.push(run_case("projectors exhaustive element subsets S3", || {
            let ctx = SnContext::new(3)?;
            let l = BiPartitionLabel::parse("([2],[1])@n=3").expect("well-formed label");
            let ind = ctx.sn_irreducible(&l)?;
            let rep = ind.rep();
            let group = ctx.group();
            let cosets = ctx.cosets();
            let mut sum = Matrix::zeros(rep.dim(), rep.dim());
            let mut unions = 0usize;
            for bits in 0..(1u32 << 5) {
                let members: Vec<bool> =
                    (0..6).map(|i| i == 0 || bits >> (i - 1) & 1 == 1).collect();
                let p = projector_over_elements(rep, &members)?;
                let is_union = HCosetSubset::from_elements(cosets, |perm| {
                    members[group.index_of(perm).expect("group element")]
                })
                .is_ok();
                if is_union {
                    unions += 1;
                } else if !p.is_zero() {
                    return Err(fail(format!(
                        "projector over the non-union {members:?} is nonzero"
                    )));
                }
                sum = sum.add(&p);
            }
            if !sum.is_identity() {
                return Err(fail("exhaustive projector sum is not the identity".into()));
            }
            Ok(format!("32 element subsets, {unions} coset unions"))
        }));
    }
    out
}

/// Every induced representation with n ≤ 4 globalizes to the full induced
/// module: same dimension `[G:K]·dim W` and the same character.
pub fn suite_globalization(max_n: usize) -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for n in 2..=max_n.min(4) {
        out.push(run_case(format!("globalization sweep S{n}/S{}", n - 1), || {
            let ctx = SnContext::new(n)?;
            let mut built = 0usize;
            for a in coset_subset_family(ctx.cosets(), None)? {
                let k_group = coset_set_stabilizer(&a);
                let Some(ws) = standard_supplier(&k_group)? else {
                    return Err(Error::MissingIrreducibles(format!(
                        "no supplier for the stabilizer of {a}"
                    )));
                };
                for w in &ws {
                    globalization_of_ind(&a, w)?;
                    built += 1;
                }
            }
            Ok(format!("{built} globalizations verified"))
        }));
    }
    out
}

/// The double-coset restriction identity on every induced representation
/// of the stabilizer pairs on 3 and 4 points.
pub fn suite_mackey_restriction(max_n: usize) -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for n in [3usize, 4] {
        if n > max_n {
            continue;
        }
        out.push(run_case(format!("double cosets S{n}/S{}", n - 1), || {
            let ctx = SnContext::new(n)?;
            let mut checked = 0usize;
            for a in coset_subset_family(ctx.cosets(), None)? {
                let k_group = coset_set_stabilizer(&a);
                let Some(ws) = standard_supplier(&k_group)? else {
                    return Err(Error::MissingIrreducibles(format!(
                        "no supplier for the stabilizer of {a}"
                    )));
                };
                for w in &ws {
                    if !double_coset_restriction_matches(&a, w)? {
                        return Err(fail(format!(
                            "restricted character differs from the double-coset sum at A = {a}, dim W = {}",
                            w.dim()
                        )));
                    }
                    checked += 1;
                }
            }
            Ok(format!("{checked} induced representations checked"))
        }));
    }
    out
}

/// Both reciprocity counts — homomorphisms out of the partial induction
/// and homomorphisms of the restriction — agree with the combinatorial
/// multiplicity for every pair of irreducibles with n ≤ 4.
pub fn suite_frobenius(max_n: usize) -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for n in 2..=max_n.min(4) {
        out.push(run_case(format!("reciprocity sweep S{n}/S{}", n - 1), || {
            let ctx = SnContext::new(n)?;
            let mut pairs = 0usize;
            for nu in partitions_of(n - 1) {
                let w = ctx.h_irreducible(&nu)?;
                let table: BTreeMap<BiPartitionLabel, u64> =
                    ctx.sn_pind_decomp(&nu)?.into_iter().collect();
                for l in labels_of(n) {
                    let u = ctx.sn_irreducible(&l)?;
                    let (left, right) = frobenius_check(&w, u.rep(), ctx.cosets())?;
                    let expected = table.get(&l).copied().unwrap_or(0) as usize;
                    if left != expected || right != expected {
                        return Err(fail(format!(
                            "pair ({nu}, {l}): counts ({left}, {right}), rule gives {expected}"
                        )));
                    }
                    pairs += 1;
                }
            }
            Ok(format!("{pairs} pairs agree with the combinatorial rule"))
        }));
    }
    out
}

/// The combinatorial restriction multiset equals the character-theoretic
/// decomposition for every label with n ≤ 6, with dimension bookkeeping.
pub fn suite_restriction_formula(max_n: usize) -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for n in 3..=max_n.min(6) {
        out.push(run_case(format!("restriction sweep n = {n}"), || {
            let ctx = SnContext::new(n)?;
            let mut checked = 0usize;
            for l in labels_of(n) {
                let by_rule = ctx.sn_restriction_decomp(&l)?;
                let by_characters = ctx.restriction_character_decomp(&l)?;
                if by_rule != by_characters {
                    return Err(fail(format!(
                        "label {l}: rule {by_rule:?} vs characters {by_characters:?}"
                    )));
                }
                let total: u128 = by_rule
                    .iter()
                    .map(|(nu, d)| nu.syt_count() * *d as u128)
                    .sum();
                if total != l.dim() {
                    return Err(fail(format!(
                        "label {l}: restricted dimensions sum to {total}, expected {}",
                        l.dim()
                    )));
                }
                checked += 1;
            }
            Ok(format!("{checked} labels agree with the character route"))
        }));
    }
    out
}

/// The branching multiset is character-identical to restricting the
/// explicit matrices to the symmetric group fixing the last point, for
/// every label with n ≤ 5.
pub fn suite_branching_rule(max_n: usize) -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    for n in 3..=max_n.min(5) {
        out.push(run_case(format!("branching sweep n = {n}"), || {
            let ctx = SnContext::new(n)?;
            let mut checked = 0usize;
            for l in labels_of(n) {
                ctx.verify_branching(&l)?;
                checked += 1;
            }
            Ok(format!("{checked} labels branch consistently"))
        }));
    }
    out
}

/// Exhaustive inverse-semigroup verification on the 16-element case:
/// associativity, unique inverses, commuting idempotents, the
/// multiplicative bijection onto the groupoid algebra with its inverse,
/// and the boolean matrix representation.
pub fn suite_semigroup(_max_n: usize) -> Vec<CaseOutcome> {
    let mut out = Vec::new();
    out.push(run_case("inverse semigroup axioms S3/S2", || {
        let cosets = pair_cosets("S3", "S2")?;
        let elements = all_elements(&cosets, None)?;
        if elements.len() != 16 {
            return Err(fail(format!("|S| = {}, expected 16", elements.len())));
        }
        for x in &elements {
            for y in &elements {
                let xy = s_mul(x, y)?;
                for z in &elements {
                    let left = s_mul(&xy, z)?;
                    let right = s_mul(x, &s_mul(y, z)?)?;
                    if left != right {
                        return Err(fail(format!(
                            "associativity fails at x=({}, {}), y=({}, {}), z=({}, {})",
                            x.subset(), x.element(), y.subset(), y.element(),
                            z.subset(), z.element()
                        )));
                    }
                }
            }
        }
        for x in &elements {
            let xi = s_inverse(x);
            if s_mul(&s_mul(x, &xi)?, x)? != *x || s_mul(&s_mul(&xi, x)?, &xi)? != xi {
                return Err(fail(format!(
                    "inverse laws fail at ({}, {})",
                    x.subset(),
                    x.element()
                )));
            }
        }
        let idempotents: Vec<_> = elements
            .iter()
            .filter(|x| s_mul(x, x).map(|xx| xx == **x).unwrap_or(false))
            .collect();
        for e in &idempotents {
            for f in &idempotents {
                if s_mul(e, f)? != s_mul(f, e)? {
                    return Err(fail("idempotents do not commute".into()));
                }
            }
        }
        Ok(format!(
            "16 elements, 16³ associativity triples, {} idempotents commute",
            idempotents.len()
        ))
    }));
    out.push(run_case("algebra isomorphism S3/S2", || {
        let cosets = pair_cosets("S3", "S2")?;
        let elements = all_elements(&cosets, None)?;
        // f is injective on basis elements and multiplicative.
        let mut images = Vec::new();
        for x in &elements {
            let fx = iso_f(x)?;
            if images.contains(&fx) {
                return Err(fail(format!(
                    "f collides at ({}, {})",
                    x.subset(),
                    x.element()
                )));
            }
            images.push(fx);
        }
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                let fxy = iso_f(&s_mul(x, y)?)?;
                let fx_fy = images[i].mul(&images[j])?;
                if fxy != fx_fy {
                    return Err(fail(format!(
                        "f is not multiplicative at pair ({i}, {j})"
                    )));
                }
            }
        }
        // The signed inverse composes back to the identity on every arrow.
        let groupoid = Groupoid::build(&cosets, None)?;
        for arrow in groupoid.elements() {
            let back = iso_f_linear(&iso_f_inverse(arrow)?)?;
            let expected = crate::groupoid::AlgebraElement::basis(arrow);
            if back != expected {
                return Err(fail(format!("Möbius inverse fails at {arrow}")));
            }
        }
        Ok("f injective + multiplicative on 256 pairs; inverse recovers all 16 arrows".into())
    }));
    out.push(run_case("boolean matrix representation S3/S2", || {
        let cosets = pair_cosets("S3", "S2")?;
        let elements = all_elements(&cosets, None)?;
        let mats: Vec<_> = elements.iter().map(bool_matrix_rep).collect();
        for (x, m) in elements.iter().zip(&mats) {
            m.validate().map_err(|_| {
                fail(format!(
                    "matrix of ({}, {}) is not a decorated permutation",
                    x.subset(),
                    x.element()
                ))
            })?;
        }
        // Distinct elements get distinct matrices, and products map to
        // products.
        for (i, a) in mats.iter().enumerate() {
            for b in mats.iter().take(i) {
                if a == b {
                    return Err(fail("two semigroup elements share a matrix".into()));
                }
            }
        }
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                let xy = bool_matrix_rep(&s_mul(x, y)?);
                let product = mats[i].mul(&mats[j])?;
                if xy != product {
                    return Err(fail(format!(
                        "matrix representation is not multiplicative at pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok("16 decorated permutation matrices, faithful and multiplicative".into())
    }));
    out
}

/// The defining relations of the partial group algebra hold in the
/// groupoid algebra for all four benchmark presentations.
pub fn suite_algebra_relations(_max_n: usize) -> Vec<CaseOutcome> {
    let pairs = [
        ("S3/S2", "S3", "S2"),
        ("S4/S3", "S4", "S3"),
        ("C4/C2", "C4", "gens: (1 3)(2 4)"),
        ("D4/C4", "D4", "C4"),
    ];
    pairs
        .into_iter()
        .map(|(name, gspec, hspec)| {
            run_case(format!("algebra relations {name}"), || {
                let cosets = pair_cosets(gspec, hspec)?;
                let check = verify_partial_group_algebra_relations(&cosets, None)?;
                if !check.passed {
                    return Err(fail(format!(
                        "{} violations, first: {}",
                        check.violations.len(),
                        check.violations.first().cloned().unwrap_or_default()
                    )));
                }
                Ok("unit, idempotent, and associativity relations hold".into())
            })
        })
        .collect()
}

/// Runs one suite by name.  `max_n` lowers the built-in size caps of the
/// sweeps (it never raises them).
pub fn run_suite(name: &str, max_n: usize) -> Result<Vec<CaseOutcome>> {
    match name {
        "groupoid-cardinality" => Ok(suite_groupoid_cardinality(max_n)),
        "base-decomposition" => Ok(suite_base_decomposition(max_n)),
        "dimension-identity" => Ok(suite_dimension_identity(max_n)),
        "irreducible-completeness" => Ok(suite_irreducible_completeness(max_n)),
        "projector-calculus" => Ok(suite_projector_calculus(max_n)),
        "globalization" => Ok(suite_globalization(max_n)),
        "mackey-restriction" => Ok(suite_mackey_restriction(max_n)),
        "frobenius-reciprocity" => Ok(suite_frobenius(max_n)),
        "restriction-formula" => Ok(suite_restriction_formula(max_n)),
        "branching-rule" => Ok(suite_branching_rule(max_n)),
        "semigroup" => Ok(suite_semigroup(max_n)),
        "algebra-relations" => Ok(suite_algebra_relations(max_n)),
        other => Err(Error::InvalidInput(format!(
            "unknown suite {other:?}; known suites: {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

/// Runs every suite in order.
pub fn run_all(max_n: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for name in SUITE_NAMES {
        out.extend(run_suite(name, max_n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nonsense", 3).is_err());
        for name in SUITE_NAMES {
            // Size 2 keeps every suite cheap while exercising the plumbing.
            let cases = run_suite(name, 2).unwrap();
            for c in &cases {
                assert!(c.ok, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn quick_suites_pass_at_small_sizes() {
        for name in [
            "groupoid-cardinality",
            "base-decomposition",
            "semigroup",
            "algebra-relations",
        ] {
            for case in run_suite(name, 3).unwrap() {
                assert!(case.ok, "{}: {}", case.name, case.detail);
            }
        }
    }

    #[test]
    fn sweeps_pass_at_size_three() {
        for name in [
            "irreducible-completeness",
            "projector-calculus",
            "globalization",
            "mackey-restriction",
            "frobenius-reciprocity",
            "restriction-formula",
            "branching-rule",
        ] {
            for case in run_suite(name, 3).unwrap() {
                assert!(case.ok, "{}: {}", case.name, case.detail);
            }
        }
    }
}
