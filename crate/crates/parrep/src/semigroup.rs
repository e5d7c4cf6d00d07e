//! The inverse semigroup on the arrow set of the groupoid, with the
//! *total* multiplication `[(A,g)]·[(B,h)] = [(h⁻¹A ∪ B, gh)]`.
//!
//! Unlike groupoid composition this product is always defined; the subset
//! part absorbs the mismatch.  Every element has a unique semigroup
//! inverse `[(gA, g⁻¹)]`, idempotents are the `[(A, 1)]`, and restricting
//! the product to the pairs with `x⁻¹x = yy⁻¹` recovers the groupoid
//! exactly.  The linear extension of `[(A,g)] ↦ Σ_{B⊇A}(B,g)` is an
//! algebra isomorphism onto the groupoid algebra whose inverse carries
//! alternating signs over the subset lattice.

use crate::group::{coset_subset_family, CosetSpace, HCosetSubset};
use crate::groupoid::{AlgebraElement, GroupoidElement};
use crate::linalg::Rational;
use crate::perm::Permutation;
use crate::{Error, Result};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// `[(A, g)]` with `g⁻¹ ∈ A`.
#[derive(Clone, PartialEq, Eq)]
pub struct SemigroupElement {
    a: HCosetSubset,
    g: usize,
}

impl SemigroupElement {
    pub fn new(a: HCosetSubset, g: &Permutation) -> Result<Self> {
        let arrow = GroupoidElement::new(a, g)?;
        Ok(SemigroupElement {
            a: arrow.subset().clone(),
            g: arrow.element_index(),
        })
    }

    pub fn from_indices(a: HCosetSubset, g: usize) -> Result<Self> {
        let arrow = GroupoidElement::from_indices(a, g)?;
        Ok(SemigroupElement {
            a: arrow.subset().clone(),
            g: arrow.element_index(),
        })
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

    /// The same pair viewed as a groupoid arrow.
    pub fn to_arrow(&self) -> GroupoidElement {
        GroupoidElement::from_indices(self.a.clone(), self.g)
            .expect("semigroup elements satisfy the arrow constraint")
    }

    pub fn is_idempotent(&self) -> bool {
        self.g == 0
    }
}

impl std::fmt::Display for SemigroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[({}, {})]", self.a, self.element())
    }
}

impl std::fmt::Debug for SemigroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// All semigroup elements, ordered by (subset mask, element index).
pub fn all_elements(cosets: &Arc<CosetSpace>, cap: Option<usize>) -> Result<Vec<SemigroupElement>> {
    let groupoid = crate::groupoid::Groupoid::build(cosets, cap)?;
    Ok(groupoid
        .elements()
        .iter()
        .map(|e| SemigroupElement {
            a: e.subset().clone(),
            g: e.element_index(),
        })
        .collect())
}

/// `[(A,g)]·[(B,h)] = [(h⁻¹A ∪ B, gh)]`.
pub fn s_mul(x: &SemigroupElement, y: &SemigroupElement) -> Result<SemigroupElement> {
    if !x.a.same_context(&y.a) {
        return Err(Error::ContextMismatch(
            "multiplying semigroup elements over different coset spaces".into(),
        ));
    }
    let cosets = x.a.cosets();
    let group = cosets.parent();
    let h_inv = group.element(group.inverse_index(y.g));
    let mask = x.a.translate_mask(h_inv) | y.a.mask();
    let a = HCosetSubset::from_mask(cosets, mask)?;
    SemigroupElement::from_indices(a, group.product_index(x.g, y.g))
}

/// The unique semigroup inverse `[(gA, g⁻¹)]`.
pub fn s_inverse(x: &SemigroupElement) -> SemigroupElement {
    let arrow = x.to_arrow().inverse();
    SemigroupElement {
        a: arrow.subset().clone(),
        g: arrow.element_index(),
    }
}

/// The natural partial order: `[(B,h)] ≤ [(A,g)]` iff `h = g` and `B ⊇ A`.
pub fn natural_leq(x: &SemigroupElement, y: &SemigroupElement) -> bool {
    x.a.same_context(&y.a) && x.g == y.g && x.a.mask() & y.a.mask() == y.a.mask()
}

/// The product restricted to the pairs with `x⁻¹x = yy⁻¹`; on those pairs
/// it coincides with groupoid composition, and it is undefined elsewhere.
pub fn restricted_mul(
    x: &SemigroupElement,
    y: &SemigroupElement,
) -> Result<Option<SemigroupElement>> {
    let xi = s_inverse(x);
    let yi = s_inverse(y);
    if s_mul(&xi, x)? == s_mul(y, &yi)? {
        Ok(Some(s_mul(x, y)?))
    } else {
        Ok(None)
    }
}

/// `[(A,g)] ↦ Σ_{B ⊇ A} (B, g)`: the basis map of the isomorphism onto
/// the groupoid algebra.
pub fn iso_f(x: &SemigroupElement) -> Result<AlgebraElement> {
    let cosets = x.a.cosets();
    let mut out = AlgebraElement::zero(cosets);
    for b in coset_subset_family(cosets, None)? {
        if b.mask() & x.a.mask() == x.a.mask() {
            out = out.add(&AlgebraElement::basis(&GroupoidElement::from_indices(
                b, x.g,
            )?))?;
        }
    }
    Ok(out)
}

/// A finite rational linear combination of semigroup elements, multiplied
/// with the total product.
#[derive(Clone)]
pub struct SemigroupAlgebraElement {
    cosets: Arc<CosetSpace>,
    terms: BTreeMap<(u64, usize), Rational>,
}

impl SemigroupAlgebraElement {
    pub fn zero(cosets: &Arc<CosetSpace>) -> Self {
        SemigroupAlgebraElement {
            cosets: Arc::clone(cosets),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(x: &SemigroupElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((x.a.mask(), x.g), Rational::one());
        SemigroupAlgebraElement {
            cosets: Arc::clone(x.a.cosets()),
            terms,
        }
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

    pub fn add(&self, other: &SemigroupAlgebraElement) -> Result<SemigroupAlgebraElement> {
        if !self.cosets.same_space(&other.cosets) {
            return Err(Error::ContextMismatch("adding across coset spaces".into()));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(*k, v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SemigroupAlgebraElement {
        if c.is_zero() {
            return SemigroupAlgebraElement::zero(&self.cosets);
        }
        SemigroupAlgebraElement {
            cosets: Arc::clone(&self.cosets),
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SemigroupAlgebraElement) -> Result<SemigroupAlgebraElement> {
        if !self.cosets.same_space(&other.cosets) {
            return Err(Error::ContextMismatch(
                "multiplying across coset spaces".into(),
            ));
        }
        let mut out = SemigroupAlgebraElement::zero(&self.cosets);
        for ((a_mask, g), cx) in &self.terms {
            let x = SemigroupElement::from_indices(
                HCosetSubset::from_mask(&self.cosets, *a_mask)?,
                *g,
            )?;
            for ((b_mask, h), cy) in &other.terms {
                let y = SemigroupElement::from_indices(
                    HCosetSubset::from_mask(&self.cosets, *b_mask)?,
                    *h,
                )?;
                let p = s_mul(&x, &y)?;
                out.insert((p.a.mask(), p.g), cx * cy);
            }
        }
        Ok(out)
    }
}

impl PartialEq for SemigroupAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.cosets.same_space(&other.cosets) && self.terms == other.terms
    }
}

impl std::fmt::Debug for SemigroupAlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let group = self.cosets.parent();
        write!(f, "Σ{{")?;
        for (i, ((mask, g), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}·[mask {mask:#b}, {}]", group.element(*g))?;
        }
        write!(f, "}}")
    }
}

/// Linear extension of [`iso_f`] to combinations.
pub fn iso_f_linear(x: &SemigroupAlgebraElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(&x.cosets);
    for ((mask, g), c) in &x.terms {
        let el = SemigroupElement::from_indices(HCosetSubset::from_mask(&x.cosets, *mask)?, *g)?;
        out = out.add(&iso_f(&el)?.scale(c))?;
    }
    Ok(out)
}

/// The inverse of [`iso_f`] on a groupoid arrow, via inclusion–exclusion
/// over the subset lattice: `(A,g) ↦ Σ_{B ⊇ A} (−1)^{#added cosets} [(B,g)]`.
pub fn iso_f_inverse(arrow: &GroupoidElement) -> Result<SemigroupAlgebraElement> {
    let a = arrow.subset();
    let cosets = a.cosets();
    let mut out = SemigroupAlgebraElement::zero(cosets);
    for b in coset_subset_family(cosets, None)? {
        if b.mask() & a.mask() == a.mask() {
            let added = (b.mask() ^ a.mask()).count_ones();
            let sign = if added % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            out.insert((b.mask(), arrow.element_index()), sign);
        }
    }
    Ok(out)
}

/// Scalars of the three-element boolean semiring `{0, 0̄, 1̄}`: `0` is
/// absorbing and neutral for addition, the two nonzero scalars multiply by
/// `0̄·0̄ = 0̄·1̄ = 1̄·0̄ = 0̄` and `1̄·1̄ = 1̄`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoolScalar {
    Zero,
    BarZero,
    BarOne,
}

impl BoolScalar {
    pub fn mul(self, other: BoolScalar) -> BoolScalar {
        use BoolScalar::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (BarOne, BarOne) => BarOne,
            _ => BarZero,
        }
    }
}

/// A square matrix over the boolean semiring with exactly one nonzero
/// entry in every row and every column (a decorated permutation matrix).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoolSemiringMatrix {
    n: usize,
    entries: Vec<BoolScalar>,
}

impl BoolSemiringMatrix {
    pub fn new(n: usize) -> Self {
        BoolSemiringMatrix {
            n,
            entries: vec![BoolScalar::Zero; n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> BoolScalar {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BoolScalar) {
        self.entries[i * self.n + j] = v;
    }

    /// Checks the decorated-permutation shape.
    pub fn validate(&self) -> Result<()> {
        for i in 0..self.n {
            let row = (0..self.n)
                .filter(|&j| self.get(i, j) != BoolScalar::Zero)
                .count();
            let col = (0..self.n)
                .filter(|&j| self.get(j, i) != BoolScalar::Zero)
                .count();
            if row != 1 || col != 1 {
                return Err(Error::OracleInconsistency(format!(
                    "row/column {i} holds {row}/{col} nonzero entries, expected exactly 1"
                )));
            }
        }
        Ok(())
    }

    /// Semiring matrix product.  Because both factors have one nonzero per
    /// row and column, each output entry is a sum with at most one nonzero
    /// summand; a second one signals corrupted input and errors out.
    pub fn mul(&self, other: &BoolSemiringMatrix) -> Result<BoolSemiringMatrix> {
        if self.n != other.n {
            return Err(Error::DimError("boolean matrix sizes differ".into()));
        }
        let mut out = BoolSemiringMatrix::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = BoolScalar::Zero;
                for k in 0..self.n {
                    let term = self.get(i, k).mul(other.get(k, j));
                    if term != BoolScalar::Zero {
                        if acc != BoolScalar::Zero {
                            return Err(Error::OracleInconsistency(
                                "two nonzero summands in a boolean matrix product".into(),
                            ));
                        }
                        acc = term;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }
}

/// The matrix of `[(A, g)]` over the boolean semiring: in column `j` the
/// single nonzero entry sits in the row `i` with `g·g_jH = g_iH`, and it
/// is `0̄` when `g_jH ⊆ A`, else `1̄`.
pub fn bool_matrix_rep(x: &SemigroupElement) -> BoolSemiringMatrix {
    let cosets = x.a.cosets();
    let n = cosets.index();
    let g = x.element().clone();
    let mut m = BoolSemiringMatrix::new(n);
    for j in 0..n {
        let i = cosets.translate(&g, j);
        let v = if x.a.contains_coset(j) {
            BoolScalar::BarZero
        } else {
            BoolScalar::BarOne
        };
        m.set(i, j, v);
    }
    m
}
