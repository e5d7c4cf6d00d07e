//! The finite groupoid attached to a pair `H ≤ G`, its connected
//! components, and its groupoid algebra.
//!
//! Objects are the unions `A` of left `H`-cosets containing `H`; arrows are
//! pairs `(A, g)` with `g⁻¹ ∈ A`, composing by `(A, g)·(B, h) = (B, gh)`
//! exactly when `A = hB`.  An arrow has source `A`, range `gA`, and inverse
//! `(gA, g⁻¹)`.  The span of the arrows is an associative algebra (the
//! product of non-composable arrows is zero) which decomposes along the
//! connected components into matrix algebras over isotropy group algebras;
//! [`decomposition_report`] computes that block data.

use crate::group::{coset_set_stabilizer, coset_subset_family, CosetSpace, HCosetSubset};
use crate::linalg::Rational;
use crate::perm::Permutation;
use crate::{caps, Error, Result};
use num::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

/// An arrow `(A, g)` with `g⁻¹ ∈ A`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupoidElement {
    a: HCosetSubset,
    g: usize,
}

impl GroupoidElement {
    pub fn new(a: HCosetSubset, g: &Permutation) -> Result<Self> {
        let group = a.cosets().parent();
        let g_idx = group
            .index_of(g)
            .ok_or_else(|| Error::InvalidInput(format!("{g} is not in the group")))?;
        GroupoidElement::from_indices(a, g_idx)
    }

    pub fn from_indices(a: HCosetSubset, g: usize) -> Result<Self> {
        let group = a.cosets().parent();
        let inv = group.inverse_index(g);
        if !a.contains(group.element(inv)) {
            return Err(Error::InvalidInput(format!(
                "({a}, {}) is not an arrow: the inverse lies outside the subset",
                group.element(g)
            )));
        }
        Ok(GroupoidElement { a, g })
    }

    pub fn subset(&self) -> &HCosetSubset {
        &self.a
    }

    pub fn element_index(&self) -> usize {
        self.g
    }

    pub fn element(&self) -> &Permutation {
        self.a.cosets().parent().element(self.g)
    }

    /// The source object `A`.
    pub fn source(&self) -> HCosetSubset {
        self.a.clone()
    }

    /// The range object `gA`.
    pub fn range(&self) -> HCosetSubset {
        let mask = self.a.translate_mask(self.element());
        HCosetSubset::from_mask(self.a.cosets(), mask).expect("range of an arrow is an object")
    }

    /// The inverse arrow `(gA, g⁻¹)`.
    pub fn inverse(&self) -> GroupoidElement {
        let group = self.a.cosets().parent();
        GroupoidElement {
            a: self.range(),
            g: group.inverse_index(self.g),
        }
    }
}

impl std::fmt::Display for GroupoidElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.a, self.element())
    }
}

impl std::fmt::Debug for GroupoidElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// `(A, g)·(B, h) = (B, gh)` when `A = hB`; `None` when not composable
/// (equivalently, when `source(x) ≠ range(y)`).
pub fn compose(x: &GroupoidElement, y: &GroupoidElement) -> Result<Option<GroupoidElement>> {
    if !x.a.same_context(&y.a) {
        return Err(Error::ContextMismatch(
            "arrows live over different coset spaces".into(),
        ));
    }
    let h = y.element();
    if x.a.mask() != y.a.translate_mask(h) {
        return Ok(None);
    }
    let group = x.a.cosets().parent();
    Ok(Some(GroupoidElement {
        a: y.a.clone(),
        g: group.product_index(x.g, y.g),
    }))
}

/// The groupoid of a coset space: all arrows, ordered by (object mask,
/// element index).
pub struct Groupoid {
    cosets: Arc<CosetSpace>,
    elements: Vec<GroupoidElement>,
}

impl Groupoid {
    pub fn build(cosets: &Arc<CosetSpace>, cap: Option<usize>) -> Result<Groupoid> {
        let predicted = order_formula(cosets);
        if predicted > caps::MAX_GROUPOID_SIZE as u128 {
            return Err(Error::TooLarge(format!(
                "groupoid would have {predicted} arrows (cap {})",
                caps::MAX_GROUPOID_SIZE
            )));
        }
        let group = cosets.parent();
        let mut elements = Vec::new();
        for a in coset_subset_family(cosets, cap)? {
            for g in 0..group.order() {
                let inv = group.inverse_index(g);
                if a.contains_coset(cosets.coset_of_index(inv)) {
                    elements.push(GroupoidElement { a: a.clone(), g });
                }
            }
        }
        if elements.len() as u128 != predicted {
            return Err(Error::OracleInconsistency(format!(
                "enumerated {} arrows but the closed form gives {predicted}",
                elements.len()
            )));
        }
        Ok(Groupoid {
            cosets: Arc::clone(cosets),
            elements,
        })
    }

    pub fn cosets(&self) -> &Arc<CosetSpace> {
        &self.cosets
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupoidElement] {
        &self.elements
    }
}

/// Closed form for the number of arrows: `2^(r−2)·(|G| + |H|)` when the
/// coset index `r` is at least 2, and `|G|` when `H = G`.
pub fn order_formula(cosets: &CosetSpace) -> u128 {
    let g = cosets.parent().order() as u128;
    let h = cosets.subgroup().order() as u128;
    let r = cosets.index();
    if r == 1 {
        g
    } else {
        (1u128 << (r - 2)) * (g + h)
    }
}

fn translate_mask_by_index(cosets: &CosetSpace, g: usize, mask: u64) -> u64 {
    let perm = cosets.parent().element(g);
    let mut out = 0u64;
    for c in 0..cosets.index() {
        if mask >> c & 1 == 1 {
            out |= 1 << cosets.translate(perm, c);
        }
    }
    out
}

/// One connected component of the groupoid.
pub struct ConnectedComponent {
    /// Object with the smallest mask in the component.
    pub base: HCosetSubset,
    /// All object masks in the component, ascending.
    pub object_masks: Vec<u64>,
    /// The isotropy group at the base object, `{g : gA = A}`.
    pub isotropy: Arc<crate::group::FiniteGroup>,
}

impl ConnectedComponent {
    /// Number of objects; this is the matrix size of the component's block
    /// in the algebra decomposition.
    pub fn multiplicity(&self) -> usize {
        self.object_masks.len()
    }

    /// Dimension `m²·|K|` of the component's block.
    pub fn block_dim(&self) -> u128 {
        let m = self.multiplicity() as u128;
        m * m * self.isotropy.order() as u128
    }
}

/// Partitions the objects into connected components by walking arrows:
/// from `A` one can reach exactly the translates `g⁻¹A` for `g ∈ A`.
/// For each component the isotropy group and the object count `m` are
/// computed and checked against `m = |A| / |K|`.
pub fn connected_components(groupoid: &Groupoid) -> Result<Vec<ConnectedComponent>> {
    let cosets = &groupoid.cosets;
    let group = cosets.parent();
    let masks: BTreeSet<u64> = groupoid.elements.iter().map(|e| e.a.mask()).collect();
    let mut unseen = masks.clone();
    let mut components = Vec::new();
    while let Some(&start) = unseen.iter().next() {
        let mut component = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        unseen.remove(&start);
        component.insert(start);
        while let Some(mask) = queue.pop_front() {
            let a = HCosetSubset::from_mask(cosets, mask)?;
            for x in a.element_indices() {
                let neighbor =
                    translate_mask_by_index(cosets, group.inverse_index(x), mask);
                if unseen.remove(&neighbor) {
                    component.insert(neighbor);
                    queue.push_back(neighbor);
                }
            }
        }
        let base_mask = *component.iter().next().expect("nonempty component");
        let base = HCosetSubset::from_mask(cosets, base_mask)?;
        let isotropy = coset_set_stabilizer(&base);
        let m = component.len();
        if m * isotropy.order() != base.element_count() {
            return Err(Error::OracleInconsistency(format!(
                "component of {base} has {m} objects but |A|/|K| = {}/{}",
                base.element_count(),
                isotropy.order()
            )));
        }
        components.push(ConnectedComponent {
            base,
            object_masks: component.into_iter().collect(),
            isotropy,
        });
    }
    components.sort_by_key(|c| c.base.mask());
    Ok(components)
}

/// Component summary serialized by the command line: `k` is the number of
/// cosets in the base object, `m` the matrix size, and the isotropy group
/// is reported through its order and generators in cycle notation.
#[derive(Serialize)]
pub struct ComponentSummary {
    pub k: usize,
    pub m: usize,
    pub isotropy_order: usize,
    pub isotropy_generators: Vec<String>,
}

#[derive(Serialize)]
pub struct DecompositionReport {
    pub components: Vec<ComponentSummary>,
    pub total_dim: u128,
}

/// Builds the block-decomposition report of the groupoid algebra: one
/// `m×m` matrix block over each component's isotropy group algebra.  The
/// dimension identity `Σ m²·|K| = #arrows` is verified before returning.
pub fn decomposition_report(groupoid: &Groupoid) -> Result<DecompositionReport> {
    let components = connected_components(groupoid)?;
    let total_dim: u128 = components.iter().map(|c| c.block_dim()).sum();
    if total_dim != groupoid.order() as u128 {
        return Err(Error::OracleInconsistency(format!(
            "block dimensions sum to {total_dim}, expected {}",
            groupoid.order()
        )));
    }
    Ok(DecompositionReport {
        components: components
            .iter()
            .map(|c| ComponentSummary {
                k: c.base.coset_count(),
                m: c.multiplicity(),
                isotropy_order: c.isotropy.order(),
                isotropy_generators: c
                    .isotropy
                    .generators()
                    .iter()
                    .map(|p| p.to_string())
                    .collect(),
            })
            .collect(),
        total_dim,
    })
}

/// A finite linear combination of arrows with rational coefficients.
#[derive(Clone)]
pub struct AlgebraElement {
    cosets: Arc<CosetSpace>,
    terms: BTreeMap<(u64, usize), Rational>,
}

impl AlgebraElement {
    pub fn zero(cosets: &Arc<CosetSpace>) -> Self {
        AlgebraElement {
            cosets: Arc::clone(cosets),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(x: &GroupoidElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((x.a.mask(), x.g), Rational::one());
        AlgebraElement {
            cosets: Arc::clone(x.a.cosets()),
            terms,
        }
    }

    /// The multiplicative unit `Σ_A (A, 1)`.
    pub fn unit(cosets: &Arc<CosetSpace>) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for a in coset_subset_family(cosets, None)? {
            terms.insert((a.mask(), 0), Rational::one());
        }
        Ok(AlgebraElement {
            cosets: Arc::clone(cosets),
            terms,
        })
    }

    pub fn cosets(&self) -> &Arc<CosetSpace> {
        &self.cosets
    }

    pub fn terms(&self) -> &BTreeMap<(u64, usize), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, key: (u64, usize), value: Rational) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if !self.cosets.same_space(&other.cosets) {
            return Err(Error::ContextMismatch("adding across coset spaces".into()));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(*k, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(&self.cosets);
        }
        AlgebraElement {
            cosets: Arc::clone(&self.cosets),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    /// Bilinear extension of arrow composition; non-composable products
    /// contribute nothing.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if !self.cosets.same_space(&other.cosets) {
            return Err(Error::ContextMismatch(
                "multiplying across coset spaces".into(),
            ));
        }
        let group = self.cosets.parent();
        let mut out = AlgebraElement::zero(&self.cosets);
        for ((b_mask, h), cy) in &other.terms {
            let shifted = translate_mask_by_index(&self.cosets, *h, *b_mask);
            for ((a_mask, g), cx) in &self.terms {
                if *a_mask == shifted {
                    out.insert((*b_mask, group.product_index(*g, *h)), cx * cy);
                }
            }
        }
        Ok(out)
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.cosets.same_space(&other.cosets) && self.terms == other.terms
    }
}

impl std::fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let group = self.cosets.parent();
        for (i, ((mask, g), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}·")?;
            }
            let a = HCosetSubset::from_mask(&self.cosets, *mask)
                .expect("stored keys are valid objects");
            write!(f, "({a}, {})", group.element(*g))?;
        }
        Ok(())
    }
}

/// `μ_p(g) = Σ_{A ∋ g⁻¹} (A, g)`: the image of the group element `g` in
/// the groupoid algebra.  These elements satisfy the defining relations of
/// the subgroup-adapted partial group algebra; see
/// [`verify_partial_group_algebra_relations`].
pub fn mu_p(cosets: &Arc<CosetSpace>, g: &Permutation) -> Result<AlgebraElement> {
    let group = cosets.parent();
    let g_idx = group
        .index_of(g)
        .ok_or_else(|| Error::InvalidInput(format!("{g} is not in the group")))?;
    mu_p_index(cosets, g_idx)
}

pub fn mu_p_index(cosets: &Arc<CosetSpace>, g_idx: usize) -> Result<AlgebraElement> {
    let group = cosets.parent();
    let inv_coset = cosets.coset_of_index(group.inverse_index(g_idx));
    let mut out = AlgebraElement::zero(cosets);
    for a in coset_subset_family(cosets, None)? {
        if a.contains_coset(inv_coset) {
            out.insert((a.mask(), g_idx), Rational::one());
        }
    }
    Ok(out)
}

/// Evaluates the product
/// `Π_{g_cH ⊆ A} μ_p(g_c)μ_p(g_c⁻¹) · Π_{g_cH ⊄ A} (1 − μ_p(g_c)μ_p(g_c⁻¹))`
/// over coset representatives.  The result always collapses to the single
/// basis arrow `(A, 1)`; the collapse is *not* assumed — callers who want
/// the identity verified compare against [`AlgebraElement::basis`].
pub fn bracket_p_a(a: &HCosetSubset) -> Result<AlgebraElement> {
    let cosets = a.cosets();
    let group = cosets.parent();
    let unit = AlgebraElement::unit(cosets)?;
    let mut acc = unit.clone();
    for c in 0..cosets.index() {
        let g_idx = group
            .index_of(cosets.rep(c))
            .expect("coset representatives lie in the group");
        let mu = mu_p_index(cosets, g_idx)?;
        let mu_inv = mu_p_index(cosets, group.inverse_index(g_idx))?;
        let e = mu.mul(&mu_inv)?;
        if a.contains_coset(c) {
            acc = acc.mul(&e)?;
        } else {
            acc = acc.mul(&unit.sub(&e)?)?;
        }
    }
    Ok(acc)
}

/// Outcome of checking that `g ↦ μ_p(g)` satisfies the relations
/// presenting the subgroup-adapted partial group algebra, and that every
/// basis arrow is recovered as `μ_p(g)·(A, 1)`:
///
/// 1. `μ(1)` is the unit and absorbs on both sides,
/// 2. `μ(g⁻¹)μ(g)μ(g′) = μ(g⁻¹)μ(gg′)`,
/// 3. `μ(g′)μ(g)μ(g⁻¹) = μ(g′g)μ(g⁻¹)`,
/// 4. `μ(h)μ(h⁻¹) = 1` for `h` in the subgroup (so `μ(h)` is invertible),
/// 5. `μ(g)·bracket(A) = (A, g)` for every arrow `(A, g)`,
/// 6. the bracket elements form a complete orthogonal family of
///    idempotents.
pub struct RelationCheck {
    pub passed: bool,
    pub violations: Vec<String>,
}

pub fn verify_partial_group_algebra_relations(
    cosets: &Arc<CosetSpace>,
    cap: Option<usize>,
) -> Result<RelationCheck> {
    let group = cosets.parent();
    let sub = cosets.subgroup();
    let n = group.order();
    let mut violations = Vec::new();
    let unit = AlgebraElement::unit(cosets)?;
    let mu: Vec<AlgebraElement> = (0..n)
        .map(|g| mu_p_index(cosets, g))
        .collect::<Result<_>>()?;

    if mu[0] != unit {
        violations.push("μ(1) is not the unit".into());
    }
    for g in 0..n {
        if mu[0].mul(&mu[g])? != mu[g] || mu[g].mul(&mu[0])? != mu[g] {
            violations.push(format!("unit laws fail at μ({})", group.element(g)));
        }
    }
    for g in 0..n {
        let ginv = group.inverse_index(g);
        let left = mu[ginv].mul(&mu[g])?;
        let right = mu[g].mul(&mu[ginv])?;
        for gp in 0..n {
            if left.mul(&mu[gp])? != mu[ginv].mul(&mu[group.product_index(g, gp)])? {
                violations.push(format!(
                    "left associativity relation fails at g={}, g'={}",
                    group.element(g),
                    group.element(gp)
                ));
            }
            if mu[gp].mul(&right)? != mu[group.product_index(gp, g)].mul(&mu[ginv])? {
                violations.push(format!(
                    "right associativity relation fails at g={}, g'={}",
                    group.element(g),
                    group.element(gp)
                ));
            }
        }
    }
    for h in group.embed_indices(sub)? {
        let hinv = group.inverse_index(h);
        if mu[h].mul(&mu[hinv])? != unit {
            violations.push(format!(
                "μ({}) is not invertible over the subgroup",
                group.element(h)
            ));
        }
    }

    // Recovery of every arrow, and the idempotent system.
    let family = coset_subset_family(cosets, cap)?;
    let mut brackets = Vec::with_capacity(family.len());
    for a in &family {
        let b = bracket_p_a(a)?;
        let expected =
            AlgebraElement::basis(&GroupoidElement::from_indices(a.clone(), 0)?);
        if b != expected {
            violations.push(format!("bracket product at {a} is not the unit arrow"));
        }
        brackets.push(b);
    }
    let mut sum = AlgebraElement::zero(cosets);
    for b in &brackets {
        sum = sum.add(b)?;
    }
    if sum != unit {
        violations.push("bracket family does not resolve the unit".into());
    }
    for (i, b) in brackets.iter().enumerate() {
        for (j, c) in brackets.iter().enumerate() {
            let prod = b.mul(c)?;
            if i == j {
                if &prod != b {
                    violations.push(format!("bracket at {} is not idempotent", family[i]));
                }
            } else if !prod.is_zero() {
                violations.push(format!(
                    "brackets at {} and {} are not orthogonal",
                    family[i], family[j]
                ));
            }
        }
    }
    for a in &family {
        for g in 0..n {
            let inv_coset = cosets.coset_of_index(group.inverse_index(g));
            if !a.contains_coset(inv_coset) {
                continue;
            }
            let arrow = GroupoidElement::from_indices(a.clone(), g)?;
            if mu[g].mul(&brackets[(a.mask() >> 1) as usize])? != AlgebraElement::basis(&arrow)
            {
                violations.push(format!("μ·bracket does not recover {arrow}"));
            }
        }
    }

    Ok(RelationCheck {
        passed: violations.is_empty(),
        violations,
    })
}
