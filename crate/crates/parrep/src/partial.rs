//! Partial representations and partial actions of a finite group, the
//! idempotent projections indexed by unions of subgroup cosets, and the
//! globalization (enveloping representation) construction.
//!
//! A *partial representation* of `G` on `V` is a map `π : G → End(V)` with
//!
//! * `π(1) = Id`,
//! * `π(g⁻¹) π(gh) = π(g⁻¹) π(g) π(h)`,
//! * `π(gh) π(h⁻¹) = π(g) π(h) π(h⁻¹)`.
//!
//! The operators `π(g)π(g⁻¹)` are then commuting idempotents.  When the
//! restriction to a subgroup `H` consists of invertible operators ("the
//! representation is `H`-global"), products of these idempotents over
//! unions `A` of left `H`-cosets containing `H` give an orthogonal system
//! of projections `P_A` summing to the identity, and `π(g) P_A =
//! P_{gA} π(g)` — the combinatorial shadow that the groupoid module turns
//! into an algebra decomposition.

use crate::group::{coset_subset_family, CosetSpace, FiniteGroup, HCosetSubset};
use crate::linalg::{Matrix, Rational};
use crate::perm::Permutation;
use crate::{Error, Result};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::str::FromStr;
use std::sync::Arc;

/// A map `g ↦ π(g)` given by one matrix per group element, in the group's
/// element order.  Nothing about the partial-representation axioms is
/// assumed at construction; see [`check_partial_axioms`].
#[derive(Clone)]
pub struct PartialRep {
    group: Arc<FiniteGroup>,
    dim: usize,
    mats: Vec<Matrix>,
}

impl PartialRep {
    pub fn new(group: Arc<FiniteGroup>, mats: Vec<Matrix>) -> Result<Self> {
        if mats.len() != group.order() {
            return Err(Error::DimError(format!(
                "{} matrices for a group of order {}",
                mats.len(),
                group.order()
            )));
        }
        let dim = mats.first().map_or(0, |m| m.rows());
        for m in &mats {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimError(format!(
                    "expected {dim}x{dim} matrices, found {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(PartialRep { group, dim, mats })
    }

    /// Extends matrices for the group's generators to the whole group along
    /// the BFS parent edges, verifying that the result is a homomorphism
    /// (hence a global representation).
    pub fn global_from_generator_mats(
        group: Arc<FiniteGroup>,
        gen_mats: Vec<Matrix>,
    ) -> Result<Self> {
        if gen_mats.len() != group.generators().len() {
            return Err(Error::DimError(format!(
                "{} matrices for {} generators",
                gen_mats.len(),
                group.generators().len()
            )));
        }
        let dim = gen_mats.first().map_or(1, |m| m.rows());
        let mut mats = Vec::with_capacity(group.order());
        mats.push(Matrix::identity(dim));
        for i in 1..group.order() {
            let (p, j) = group.parent_edge(i);
            mats.push(mats[p].mul(&gen_mats[j]));
        }
        let rep = PartialRep::new(group, mats)?;
        if !rep.is_global_rep() {
            return Err(Error::InvalidInput(
                "generator matrices do not satisfy the group's relations".into(),
            ));
        }
        Ok(rep)
    }

    /// The trivial representation of the given dimension.
    pub fn trivial(group: Arc<FiniteGroup>, dim: usize) -> Self {
        let mats = vec![Matrix::identity(dim); group.order()];
        PartialRep { group, dim, mats }
    }

    /// Left multiplication on the group algebra basis.
    pub fn regular(group: &Arc<FiniteGroup>) -> Self {
        let mats = (0..group.order())
            .map(|i| Matrix::permutation(group.order(), |x| group.product_index(i, x)))
            .collect();
        PartialRep {
            group: Arc::clone(group),
            dim: group.order(),
            mats,
        }
    }

    /// Extends a representation of a subgroup by zero: `π(g) = ρ(g)` for
    /// `g ∈ H`, and `π(g) = 0` otherwise.  The result is an `H`-global
    /// partial representation of `G`.
    pub fn extend_by_zero(
        parent: &Arc<FiniteGroup>,
        sub_rep: &PartialRep,
    ) -> Result<PartialRep> {
        let embed = parent.embed_indices(&sub_rep.group)?;
        let mut mats = vec![Matrix::zeros(sub_rep.dim, sub_rep.dim); parent.order()];
        for (h_idx, &g_idx) in embed.iter().enumerate() {
            mats[g_idx] = sub_rep.mats[h_idx].clone();
        }
        PartialRep::new(Arc::clone(parent), mats)
    }

    /// The restriction to a subgroup, reindexed by the subgroup's own
    /// element order.
    pub fn restrict_to_subgroup(&self, sub: &Arc<FiniteGroup>) -> Result<PartialRep> {
        let embed = self.group.embed_indices(sub)?;
        let mats = embed.iter().map(|&i| self.mats[i].clone()).collect();
        PartialRep::new(Arc::clone(sub), mats)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mat(&self, element: usize) -> &Matrix {
        &self.mats[element]
    }

    pub fn mat_of(&self, p: &Permutation) -> Option<&Matrix> {
        self.group.index_of(p).map(|i| &self.mats[i])
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    /// `g ↦ tr π(g)`, indexed by the group's element order.
    pub fn character(&self) -> Vec<Rational> {
        self.mats.iter().map(|m| m.trace()).collect()
    }

    /// Whether the map is an honest homomorphism with `π(1) = Id` (checked
    /// on all pairs (element, generator), which generate all products).
    pub fn is_global_rep(&self) -> bool {
        if !self.mats[0].is_identity() {
            return false;
        }
        let gen_indices = self.group.generator_indices();
        for i in 0..self.group.order() {
            for &j in &gen_indices {
                let prod = self.group.product_index(i, j);
                if self.mats[prod] != self.mats[i].mul(&self.mats[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Direct sum of two representations of the same group.
    pub fn direct_sum(&self, other: &PartialRep) -> Result<PartialRep> {
        if !self.group.same_group(&other.group) {
            return Err(Error::ContextMismatch("direct sum across groups".into()));
        }
        let dim = self.dim + other.dim;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(dim, dim);
                m.set_block(0, 0, a);
                m.set_block(self.dim, self.dim, b);
                m
            })
            .collect();
        PartialRep::new(Arc::clone(&self.group), mats)
    }
}

impl std::fmt::Debug for PartialRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PartialRep(dim {}, group order {})",
            self.dim,
            self.group.order()
        )
    }
}

/// A violation of the partial-representation axioms, by element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `π(1) ≠ Id`.
    IdentityNotOne,
    /// `π(g⁻¹) π(gh) ≠ π(g⁻¹) π(g) π(h)`.
    Left { g: usize, h: usize },
    /// `π(gh) π(h⁻¹) ≠ π(g) π(h) π(h⁻¹)`.
    Right { g: usize, h: usize },
}

/// Checks the partial-representation axioms on every pair of elements and
/// reports all violations (empty = the map is a partial representation).
pub fn check_partial_axioms(rep: &PartialRep) -> Vec<AxiomViolation> {
    let mut violations = Vec::new();
    let g = &rep.group;
    let n = g.order();
    if !rep.mats[0].is_identity() {
        violations.push(AxiomViolation::IdentityNotOne);
    }
    // Precompute π(g⁻¹)π(g) and π(h)π(h⁻¹).
    let dom: Vec<Matrix> = (0..n)
        .map(|i| rep.mats[g.inverse_index(i)].mul(&rep.mats[i]))
        .collect();
    let img: Vec<Matrix> = (0..n)
        .map(|i| rep.mats[i].mul(&rep.mats[g.inverse_index(i)]))
        .collect();
    for gi in 0..n {
        let gi_inv = g.inverse_index(gi);
        for hi in 0..n {
            let prod = g.product_index(gi, hi);
            let left_lhs = rep.mats[gi_inv].mul(&rep.mats[prod]);
            let left_rhs = dom[gi].mul(&rep.mats[hi]);
            if left_lhs != left_rhs {
                violations.push(AxiomViolation::Left { g: gi, h: hi });
            }
            let right_lhs = rep.mats[prod].mul(&rep.mats[g.inverse_index(hi)]);
            let right_rhs = rep.mats[gi].mul(&img[hi]);
            if right_lhs != right_rhs {
                violations.push(AxiomViolation::Right { g: gi, h: hi });
            }
        }
    }
    violations
}

/// Whether the restriction of `rep` to the subgroup is a global (invertible)
/// representation.  For a genuine partial representation this is equivalent
/// to `π(h)π(h⁻¹) = Id` for all `h ∈ H`; the cross-coset factorization
/// `π(gh) = π(g)π(h)` and `π(hg) = π(h)π(g)` that follows is verified too,
/// so garbage input that is not a partial representation at all also
/// returns `false`.
pub fn check_h_global(rep: &PartialRep, sub: &Arc<FiniteGroup>) -> Result<bool> {
    let embed = rep.group.embed_indices(sub)?;
    for &h in &embed {
        let h_inv = rep.group.inverse_index(h);
        if !rep.mats[h].mul(&rep.mats[h_inv]).is_identity() {
            return Ok(false);
        }
    }
    for gi in 0..rep.group.order() {
        for &h in &embed {
            let gh = rep.group.product_index(gi, h);
            if rep.mats[gh] != rep.mats[gi].mul(&rep.mats[h]) {
                return Ok(false);
            }
            let hg = rep.group.product_index(h, gi);
            if rep.mats[hg] != rep.mats[h].mul(&rep.mats[gi]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The largest subgroup on which the representation is global:
/// `{g : π(g) is invertible}`.
pub fn globalizer(rep: &PartialRep) -> Arc<FiniteGroup> {
    let indices: Vec<usize> = (0..rep.group.order())
        .filter(|&i| rep.mats[i].rank() == rep.dim)
        .collect();
    FiniteGroup::subgroup_from_indices(&rep.group, &indices)
}

fn projector_unchecked(rep: &PartialRep, a: &HCosetSubset) -> Matrix {
    let cosets = a.cosets();
    let mut p = Matrix::identity(rep.dim);
    for c in 0..cosets.index() {
        let g = cosets.rep(c);
        let gi = rep.group.index_of(g).expect("coset rep in group");
        let e = rep.mats[gi].mul(&rep.mats[rep.group.inverse_index(gi)]);
        if a.contains_coset(c) {
            p = p.mul(&e);
        } else {
            p = p.mul(&Matrix::identity(rep.dim).sub(&e));
        }
    }
    p
}

/// The projection `P_A` onto the graded component `V^A` of an `H`-global
/// partial representation, for `A` a union of left `H`-cosets containing
/// `H`: the product of `π(g_c)π(g_c⁻¹)` over cosets `g_cH ⊆ A` and of
/// `Id − π(g_c)π(g_c⁻¹)` over the remaining cosets.  The value does not
/// depend on the choice of coset representatives.
pub fn projector(rep: &PartialRep, a: &HCosetSubset) -> Result<Matrix> {
    if !a.cosets().parent().same_group(&rep.group) {
        return Err(Error::ContextMismatch(
            "subset and representation use different groups".into(),
        ));
    }
    if !check_h_global(rep, a.cosets().subgroup())? {
        return Err(Error::NotHGlobal(
            "projector requires the restriction to the subgroup to be global".into(),
        ));
    }
    Ok(projector_unchecked(rep, a))
}

/// The fully general projector over an arbitrary subset of group elements
/// containing the identity: `Π_{g∈A} π(g)π(g⁻¹) · Π_{g∉A} (Id − π(g)π(g⁻¹))`.
/// For an `H`-global representation this vanishes unless `A` is a union of
/// left `H`-cosets containing `H`.
pub fn projector_over_elements(rep: &PartialRep, members: &[bool]) -> Result<Matrix> {
    if members.len() != rep.group.order() {
        return Err(Error::DimError(format!(
            "{} membership flags for group order {}",
            members.len(),
            rep.group.order()
        )));
    }
    if !members[0] {
        return Err(Error::InvalidInput(
            "the subset must contain the identity".into(),
        ));
    }
    let mut p = Matrix::identity(rep.dim);
    for i in 0..rep.group.order() {
        let e = rep.mats[i].mul(&rep.mats[rep.group.inverse_index(i)]);
        if members[i] {
            p = p.mul(&e);
        } else {
            p = p.mul(&Matrix::identity(rep.dim).sub(&e));
        }
    }
    Ok(p)
}

/// Decomposes an `H`-global representation into its graded components:
/// returns, for every union `A` of `H`-cosets containing `H`, a column
/// basis of `P_A(V)` (possibly with zero columns for absent components).
pub fn pa_decomposition(
    rep: &PartialRep,
    cosets: &Arc<CosetSpace>,
    cap: Option<usize>,
) -> Result<Vec<(HCosetSubset, Matrix)>> {
    if !cosets.parent().same_group(&rep.group) {
        return Err(Error::ContextMismatch(
            "coset space and representation use different groups".into(),
        ));
    }
    if !check_h_global(rep, cosets.subgroup())? {
        return Err(Error::NotHGlobal("decomposition requires H-globality".into()));
    }
    let family = coset_subset_family(cosets, cap)?;
    let mut out = Vec::with_capacity(family.len());
    for a in family {
        let p = projector_unchecked(rep, &a);
        let pivot_cols = p.image_basis_columns();
        let basis = Matrix::from_columns(
            &pivot_cols.iter().map(|&j| p.column(j)).collect::<Vec<_>>(),
        )?;
        out.push((a, basis));
    }
    Ok(out)
}

/// A partial action of `G` on a finite point set: domains `X_{g⁻¹}` and
/// bijections `α_g : X_{g⁻¹} → X_g`, stored extensionally as one partial
/// map per group element (`maps[g][x] = α_g(x)`).
pub struct PartialAction {
    group: Arc<FiniteGroup>,
    points: usize,
    maps: Vec<Vec<Option<usize>>>,
}

impl PartialAction {
    pub fn new(
        group: Arc<FiniteGroup>,
        points: usize,
        maps: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        if maps.len() != group.order() || maps.iter().any(|m| m.len() != points) {
            return Err(Error::DimError(
                "need one length-|X| partial map per group element".into(),
            ));
        }
        Ok(PartialAction {
            group,
            points,
            maps,
        })
    }

    /// Restricts a global action of `G` on `{0,…,total_points-1}` to the
    /// subset flagged by `keep`: the standard source of partial actions.
    /// `act` must be a left action (`act(g, act(h, x)) = act(gh, x)`); this
    /// is verified on generators.
    pub fn restriction_of_global(
        group: &Arc<FiniteGroup>,
        total_points: usize,
        act: impl Fn(&Permutation, usize) -> usize,
        keep: &[bool],
    ) -> Result<Self> {
        if keep.len() != total_points {
            return Err(Error::DimError("keep flags vs total points".into()));
        }
        for e in group.elements() {
            for g in group.generators() {
                for x in 0..total_points {
                    if act(&e.compose(g), x) != act(e, act(g, x)) {
                        return Err(Error::InvalidInput(format!(
                            "not a left action: ({e} ∘ {g}) disagrees at point {x}"
                        )));
                    }
                }
            }
        }
        let reindex: Vec<Option<usize>> = {
            let mut next = 0;
            keep.iter()
                .map(|&k| {
                    if k {
                        next += 1;
                        Some(next - 1)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let originals: Vec<usize> =
            (0..total_points).filter(|&x| keep[x]).collect();
        let maps = group
            .elements()
            .iter()
            .map(|g| {
                originals
                    .iter()
                    .map(|&x| reindex[act(g, x)])
                    .collect::<Vec<_>>()
            })
            .collect();
        PartialAction::new(Arc::clone(group), originals.len(), maps)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn apply(&self, element: usize, point: usize) -> Option<usize> {
        self.maps[element][point]
    }

    /// Validates the partial-action axioms: the identity acts as the full
    /// identity, each `α_g` is a bijection onto its image with inverse
    /// `α_{g⁻¹}`, and whenever `α_g(α_h(x))` is defined it equals
    /// `α_{gh}(x)` (in particular `x` must then lie in the domain of
    /// `α_{gh}`).  Returns human-readable violations.
    pub fn check_axioms(&self) -> Vec<String> {
        let mut violations = Vec::new();
        let n = self.group.order();
        if (0..self.points).any(|x| self.maps[0][x] != Some(x)) {
            violations.push("identity does not act as the identity".into());
        }
        for g in 0..n {
            let inv = self.group.inverse_index(g);
            for x in 0..self.points {
                if let Some(y) = self.maps[g][x] {
                    if self.maps[inv][y] != Some(x) {
                        violations.push(format!(
                            "α_{} is not inverted by α_{} at point {x}",
                            self.group.element(g),
                            self.group.element(inv)
                        ));
                    }
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                let gh = self.group.product_index(g, h);
                for x in 0..self.points {
                    let Some(y) = self.maps[h][x] else { continue };
                    let Some(z) = self.maps[g][y] else { continue };
                    if self.maps[gh][x] != Some(z) {
                        violations.push(format!(
                            "α_{}(α_{}({x})) defined but ≠ α_{}({x})",
                            self.group.element(g),
                            self.group.element(h),
                            self.group.element(gh)
                        ));
                    }
                }
            }
        }
        violations
    }
}

/// Linearization of a partial action: `π(g)` sends the basis vector of a
/// point `x` in the domain of `α_g` to the basis vector of `α_g(x)`, and
/// kills basis vectors outside the domain.  Always yields a partial
/// representation.
pub fn linearize(action: &PartialAction) -> PartialRep {
    let mats = action
        .maps
        .iter()
        .map(|map| {
            let mut m = Matrix::zeros(action.points, action.points);
            for (x, img) in map.iter().enumerate() {
                if let Some(y) = img {
                    m.set(*y, x, num::One::one());
                }
            }
            m
        })
        .collect();
    PartialRep {
        group: Arc::clone(&action.group),
        dim: action.points,
        mats,
    }
}

/// Compresses a global representation `ρ` on `U` through a splitting
/// `φ : V → U`, `τ : U → V` with `τφ = Id` into the partial representation
/// `π(g) = τ ρ(g) φ`, verifying that the result is a partial
/// representation and that `φ` intertwines `π` with `ρ` on each domain
/// `V_{g⁻¹} = π(g⁻¹)π(g)(V)`.
pub fn restrict_global(rho: &PartialRep, phi: &Matrix, tau: &Matrix) -> Result<PartialRep> {
    if !rho.is_global_rep() {
        return Err(Error::InvalidInput(
            "restriction source must be a global representation".into(),
        ));
    }
    let u_dim = rho.dim;
    let v_dim = phi.cols();
    if phi.rows() != u_dim || tau.rows() != v_dim || tau.cols() != u_dim {
        return Err(Error::DimError(format!(
            "need φ: V→U as {u_dim}x{v_dim} and τ: U→V as {v_dim}x{u_dim}"
        )));
    }
    if !tau.mul(phi).is_identity() {
        return Err(Error::InvalidInput("τ ∘ φ is not the identity on V".into()));
    }
    let mats: Vec<Matrix> = rho.mats.iter().map(|r| tau.mul(&r.mul(phi))).collect();
    let pi = PartialRep::new(Arc::clone(&rho.group), mats)?;
    if let Some(v) = check_partial_axioms(&pi).into_iter().next() {
        return Err(Error::NotARestriction(format!(
            "compression is not a partial representation: {v:?}"
        )));
    }
    for g in 0..pi.group.order() {
        let dom = pi.mats[pi.group.inverse_index(g)].mul(&pi.mats[g]);
        let residue = phi.mul(&pi.mats[g]).sub(&rho.mats[g].mul(phi)).mul(&dom);
        if !residue.is_zero() {
            return Err(Error::NotARestriction(format!(
                "φ fails to intertwine on the domain of π({})",
                pi.group.element(g)
            )));
        }
    }
    Ok(pi)
}

/// A globalization: a global representation `rep` on `U` together with the
/// inclusion `φ : V → U` and projection `τ : U → V` exhibiting the original
/// partial representation as the compression `τ ρ(·) φ`.
pub struct Globalization {
    pub rep: PartialRep,
    pub inclusion: Matrix,
    pub projection: Matrix,
}

/// Builds the universal globalization of a partial representation as the
/// quotient of `C[G] ⊗ V` by the relation subspace `Z` spanned by
/// `g ⊗ v − h ⊗ π(h⁻¹g)(v)` for `v` in the domain `V_{g⁻¹h}`; the group
/// acts by left translation on the first factor.
///
/// `Z` is accumulated as the smallest translation-invariant subspace
/// containing the `h = 1` relations; quotient coordinates are the
/// pivot-free coordinates of its row space.
pub fn globalize(pi: &PartialRep) -> Result<Globalization> {
    let g = &pi.group;
    let n = g.order();
    let d = pi.dim;
    let len = n * d;
    let coord = |elem: usize, c: usize| elem * d + c;

    let mut z = crate::linalg::RowSpace::new(len);
    for s in 1..n {
        let s_inv = g.inverse_index(s);
        let dom = pi.mats[s_inv].mul(&pi.mats[s]); // projection onto V_{s⁻¹}
        for j in dom.image_basis_columns() {
            let v = dom.column(j);
            let pv = pi.mats[s].column(j); // π(s)·v, since dom is idempotent
            let mut vec = vec![Rational::zero(); len];
            for c in 0..d {
                vec[coord(s, c)] = v[c].clone();
                vec[coord(0, c)] = -pv[c].clone();
            }
            z.insert(vec);
        }
    }
    // Close under left translation by the group generators.
    let gen_indices = g.generator_indices();
    loop {
        let mut grew = false;
        let rows: Vec<Vec<Rational>> = z.rows().to_vec();
        for row in &rows {
            for &y in &gen_indices {
                let mut shifted = vec![Rational::zero(); len];
                for elem in 0..n {
                    let target = g.product_index(y, elem);
                    for c in 0..d {
                        let val = &row[coord(elem, c)];
                        if !val.is_zero() {
                            shifted[coord(target, c)] = val.clone();
                        }
                    }
                }
                if z.insert(shifted) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    let free = z.free_columns();
    let u_dim = free.len();
    let coords_of = |vec: Vec<Rational>| -> Vec<Rational> {
        let reduced = z.reduce(vec);
        free.iter().map(|&f| reduced[f].clone()).collect()
    };

    // The induced action, inclusion, and projection in quotient coordinates.
    let mut mats = Vec::with_capacity(n);
    for y in 0..n {
        let mut m = Matrix::zeros(u_dim, u_dim);
        for (col, &f) in free.iter().enumerate() {
            let (elem, c) = (f / d, f % d);
            let mut e = vec![Rational::zero(); len];
            e[coord(g.product_index(y, elem), c)] = num::One::one();
            for (row, val) in coords_of(e).into_iter().enumerate() {
                if !val.is_zero() {
                    m.set(row, col, val);
                }
            }
        }
        mats.push(m);
    }
    let mut inclusion = Matrix::zeros(u_dim, d);
    for c in 0..d {
        let mut e = vec![Rational::zero(); len];
        e[coord(0, c)] = num::One::one();
        for (row, val) in coords_of(e).into_iter().enumerate() {
            inclusion.set(row, c, val);
        }
    }
    let mut projection = Matrix::zeros(d, u_dim);
    for (col, &f) in free.iter().enumerate() {
        let (elem, c) = (f / d, f % d);
        for row in 0..d {
            projection.set(row, col, pi.mats[elem].get(row, c).clone());
        }
    }

    let rep = PartialRep::new(Arc::clone(g), mats)?;
    if !rep.is_global_rep() {
        return Err(Error::OracleInconsistency(
            "globalization quotient action failed to be a homomorphism".into(),
        ));
    }
    // The compression through (φ, τ) must reproduce π exactly.
    let check = restrict_global(&rep, &inclusion, &projection)?;
    if check.mats != pi.mats {
        return Err(Error::NotARestriction(
            "globalization does not compress back to the input".into(),
        ));
    }
    // Minimality: U is spanned by the translates ρ(g)φ(V).
    let mut translate_cols: Vec<Vec<Rational>> = Vec::with_capacity(n * d);
    for y in 0..n {
        let m = rep.mats[y].mul(&inclusion);
        for c in 0..d {
            translate_cols.push(m.column(c));
        }
    }
    if u_dim > 0 && Matrix::from_columns(&translate_cols)?.rank() != u_dim {
        return Err(Error::OracleInconsistency(
            "globalization is not spanned by the translates of V".into(),
        ));
    }
    Ok(Globalization {
        rep,
        inclusion,
        projection,
    })
}

/// Verifies the universal property of a globalization against another
/// quadruple `(ρ', φ', τ')` restricting to the same partial
/// representation: the assignment `ρ(g)φ(v) ↦ ρ'(g)φ'(v)` must be
/// well-defined on generators, i.e. every linear relation among the
/// spanning vectors `ρ(g)φ(e_c)` of `U` also holds among the
/// `ρ'(g)φ'(e_c)`.
pub fn globalization_maps_onto(
    glob: &Globalization,
    other_rep: &PartialRep,
    other_phi: &Matrix,
) -> Result<bool> {
    let g = glob.rep.group();
    if !g.same_group(other_rep.group()) {
        return Err(Error::ContextMismatch("different groups".into()));
    }
    let d = glob.inclusion.cols();
    let mut cols = Vec::with_capacity(g.order() * d);
    let mut cols_other = Vec::with_capacity(g.order() * d);
    for y in 0..g.order() {
        let m = glob.rep.mat(y).mul(&glob.inclusion);
        let m2 = other_rep.mat(y).mul(other_phi);
        for c in 0..d {
            cols.push(m.column(c));
            cols_other.push(m2.column(c));
        }
    }
    let span = Matrix::from_columns(&cols)?;
    let span_other = Matrix::from_columns(&cols_other)?;
    for relation in span.nullspace() {
        let col = Matrix::from_columns(std::slice::from_ref(&relation))?;
        if !span_other.mul(&col).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
struct PartialRepJson {
    group: String,
    degree: usize,
    dim: usize,
    elements: Vec<String>,
    matrices: Vec<Vec<Vec<String>>>,
}

impl PartialRep {
    /// Serializes to the interchange format: the group as a `gens:` spec,
    /// every element in cycle notation, and each matrix as rows of exact
    /// rationals rendered `p/q` (or `p` for integers).
    pub fn to_json_string(&self) -> String {
        let gens = self
            .group
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let json = PartialRepJson {
            group: format!("gens:{gens}"),
            degree: self.group.degree(),
            dim: self.dim,
            elements: self.group.elements().iter().map(|p| p.to_string()).collect(),
            matrices: self
                .mats
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&json).expect("plain data serializes")
    }

    /// Parses the interchange format, accepting matrices listed in any
    /// element order (they are matched up by the cycle notation strings).
    pub fn from_json_str(s: &str) -> Result<PartialRep> {
        let json: PartialRepJson = serde_json::from_str(s)
            .map_err(|e| Error::InvalidInput(format!("bad representation JSON: {e}")))?;
        let group = crate::group::parse_group_spec(&json.group, json.degree)?;
        if group.degree() != json.degree {
            return Err(Error::InvalidInput(format!(
                "group spec degree {} vs declared degree {}",
                group.degree(),
                json.degree
            )));
        }
        if json.elements.len() != group.order() || json.matrices.len() != group.order() {
            return Err(Error::InvalidInput(format!(
                "expected {} elements/matrices, found {}/{}",
                group.order(),
                json.elements.len(),
                json.matrices.len()
            )));
        }
        let mut mats = vec![None; group.order()];
        for (name, rows) in json.elements.iter().zip(&json.matrices) {
            let p = Permutation::from_cycles(name, group.degree())?;
            let idx = group
                .index_of(&p)
                .ok_or_else(|| Error::InvalidInput(format!("{name} is not in the group")))?;
            let parsed = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|cell| {
                            Rational::from_str(cell).map_err(|e| {
                                Error::InvalidInput(format!("bad rational {cell:?}: {e}"))
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            if mats[idx].replace(Matrix::from_rows(parsed)?).is_some() {
                return Err(Error::InvalidInput(format!("duplicate element {name}")));
            }
        }
        let mats = mats
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidInput("missing element matrix".into()))?;
        PartialRep::new(group, mats)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{coset_set_stabilizer, parse_group_spec};

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::symmetric(3).unwrap()
    }

    /// Natural action of a permutation group on its points, restricted to
    /// a subset.
    fn natural_restriction(g: &Arc<FiniteGroup>, keep: &[bool]) -> PartialAction {
        PartialAction::restriction_of_global(g, g.degree(), |p, x| p.apply(x), keep).unwrap()
    }

    #[test]
    fn axioms_hold_for_standard_sources() {
        let g = s3();
        // Global: the regular representation.
        assert!(check_partial_axioms(&PartialRep::regular(&g)).is_empty());
        // Extension by zero of the trivial representation of a subgroup.
        let h = FiniteGroup::point_stabilizer(&g, 0);
        let triv = PartialRep::trivial(Arc::clone(&h), 1);
        let ext = PartialRep::extend_by_zero(&g, &triv).unwrap();
        assert!(check_partial_axioms(&ext).is_empty());
        assert!(check_h_global(&ext, &h).unwrap());
        // Linearized restriction of the natural action.
        let pa = natural_restriction(&g, &[true, true, false]);
        assert!(pa.check_axioms().is_empty());
        let lin = linearize(&pa);
        assert!(check_partial_axioms(&lin).is_empty());
    }

    #[test]
    fn axiom_checker_reports_failures() {
        let g = s3();
        // π(g) = 0 for every non-identity element of a *group* that is not
        // all of the support: replacing the identity's matrix breaks PR1.
        let mut mats = vec![Matrix::zeros(1, 1); 6];
        mats[0] = Matrix::zeros(1, 1);
        let bad = PartialRep::new(Arc::clone(&g), mats).unwrap();
        assert!(check_partial_axioms(&bad).contains(&AxiomViolation::IdentityNotOne));
        // A map that is 1 on a non-subgroup subset violates associativity.
        let mut mats = vec![Matrix::zeros(1, 1); 6];
        mats[0] = Matrix::identity(1);
        let t12 = g.index_of(&Permutation::from_cycles("(1 2)", 3).unwrap()).unwrap();
        mats[t12] = Matrix::identity(1);
        let t13 = g.index_of(&Permutation::from_cycles("(1 3)", 3).unwrap()).unwrap();
        mats[t13] = Matrix::identity(1);
        let bad = PartialRep::new(Arc::clone(&g), mats).unwrap();
        assert!(!check_partial_axioms(&bad).is_empty());
    }

    #[test]
    fn linearized_restriction_matches_hand_computation() {
        let g = s3();
        let pa = natural_restriction(&g, &[true, true, false]);
        let lin = linearize(&pa);
        // π((1 2)) swaps the two points.
        let t12 = Permutation::from_cycles("(1 2)", 3).unwrap();
        assert_eq!(lin.mat_of(&t12).unwrap(), &Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]));
        // π((1 3)) keeps only point 2, π((2 3)) keeps only point 1.
        let t13 = Permutation::from_cycles("(1 3)", 3).unwrap();
        assert_eq!(lin.mat_of(&t13).unwrap(), &Matrix::from_i64_rows(&[&[0, 0], &[0, 1]]));
        let t23 = Permutation::from_cycles("(2 3)", 3).unwrap();
        assert_eq!(lin.mat_of(&t23).unwrap(), &Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]));
        // The globalizer is the stabilizer of {1,2}, i.e. ⟨(1 2)⟩.
        let gl = globalizer(&lin);
        assert_eq!(gl.order(), 2);
        assert!(gl.contains(&t12));
        assert!(check_h_global(&lin, &gl).unwrap());
        let stab1 = FiniteGroup::point_stabilizer(&g, 0);
        assert!(!check_h_global(&lin, &stab1).unwrap());
    }

    /// The action of S_4 on 2-element subsets of [4], restricted to the
    /// subsets containing the point 1.
    fn two_subsets_containing_1() -> (Arc<FiniteGroup>, PartialAction) {
        let g = FiniteGroup::symmetric(4).unwrap();
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|a| ((a + 1)..4).map(move |b| (a, b)))
            .collect();
        let act = |p: &Permutation, i: usize| {
            let (a, b) = pairs[i];
            let (x, y) = (p.apply(a), p.apply(b));
            pairs
                .iter()
                .position(|&q| q == (x.min(y), x.max(y)))
                .unwrap()
        };
        let keep: Vec<bool> = (0..6).map(|i| i < 3).collect(); // (0,1),(0,2),(0,3)
        let pa = PartialAction::restriction_of_global(&g, 6, act, &keep).unwrap();
        (g, pa)
    }

    #[test]
    fn subset_action_has_point_stabilizer_globalizer() {
        let (g, pa) = two_subsets_containing_1();
        assert!(pa.check_axioms().is_empty());
        let lin = linearize(&pa);
        assert!(check_partial_axioms(&lin).is_empty());
        let gl = globalizer(&lin);
        let stab1 = FiniteGroup::point_stabilizer(&g, 0);
        assert_eq!(gl.order(), 6);
        assert!(gl.same_element_set(&stab1));
        assert!(check_h_global(&lin, &stab1).unwrap());
        let t12 = FiniteGroup::from_generators(
            &[Permutation::from_cycles("(1 2)", 4).unwrap()],
            4,
        )
        .unwrap();
        assert!(!check_h_global(&lin, &t12).unwrap());
    }

    #[test]
    fn projectors_grade_the_linearized_restriction() {
        let g = s3();
        let pa = natural_restriction(&g, &[true, true, false]);
        let lin = linearize(&pa);
        let h = globalizer(&lin); // ⟨(1 2)⟩
        let cosets = CosetSpace::left_cosets(&g, &h).unwrap();
        let decomp = pa_decomposition(&lin, &cosets, None).unwrap();
        assert_eq!(decomp.len(), 4);
        let dims: Vec<usize> = decomp.iter().map(|(_, b)| b.cols()).collect();
        // Two 1-dimensional components; {H} and the full group carry nothing.
        assert_eq!(dims.iter().sum::<usize>(), 2);
        assert_eq!(dims[0], 0);
        assert_eq!(dims[3], 0);
        // Orthogonality and completeness.
        let projs: Vec<Matrix> = decomp
            .iter()
            .map(|(a, _)| projector(&lin, a).unwrap())
            .collect();
        let mut sum = Matrix::zeros(2, 2);
        for p in &projs {
            sum = sum.add(p);
        }
        assert!(sum.is_identity());
        for (i, p) in projs.iter().enumerate() {
            for (j, r) in projs.iter().enumerate() {
                if i != j {
                    assert!(p.mul(r).is_zero());
                }
            }
        }
    }

    #[test]
    fn global_reps_concentrate_on_the_full_subset() {
        let g = s3();
        let h = FiniteGroup::point_stabilizer(&g, 0);
        let cosets = CosetSpace::left_cosets(&g, &h).unwrap();
        let reg = PartialRep::regular(&g);
        let decomp = pa_decomposition(&reg, &cosets, None).unwrap();
        for (a, basis) in &decomp {
            if a.coset_count() == cosets.index() {
                assert_eq!(basis.cols(), 6);
            } else {
                assert_eq!(basis.cols(), 0);
            }
        }
    }

    #[test]
    fn projector_translation_rule() {
        // π(g) P_A = P_{gA} π(g) for every g and every A.
        let g = s3();
        let h = FiniteGroup::point_stabilizer(&g, 0);
        let triv = PartialRep::trivial(Arc::clone(&h), 1);
        let ext = PartialRep::extend_by_zero(&g, &triv).unwrap();
        let cosets = CosetSpace::left_cosets(&g, &h).unwrap();
        for a in coset_subset_family(&cosets, None).unwrap() {
            let pa = projector(&ext, &a).unwrap();
            for (gi, perm) in g.elements().iter().enumerate() {
                let translated_mask = a.translate_mask(perm);
                // gA contains H iff g⁻¹ ∈ A; only then is gA an object.
                if translated_mask & 1 == 1 {
                    let ga = HCosetSubset::from_mask(&cosets, translated_mask).unwrap();
                    let pga = projector(&ext, &ga).unwrap();
                    assert_eq!(ext.mat(gi).mul(&pa), pga.mul(ext.mat(gi)));
                }
            }
        }
    }

    #[test]
    fn vanishing_off_coset_unions() {
        let g = s3();
        let h = FiniteGroup::point_stabilizer(&g, 0);
        let triv = PartialRep::trivial(Arc::clone(&h), 1);
        let ext = PartialRep::extend_by_zero(&g, &triv).unwrap();
        let cosets = CosetSpace::left_cosets(&g, &h).unwrap();
        // Exhaustively over all 2^5 subsets containing the identity: P_A is
        // nonzero only for unions of H-cosets containing H, and the nonzero
        // ones sum to the identity.
        let mut sum = Matrix::zeros(1, 1);
        for bits in 0..(1u32 << 5) {
            let members: Vec<bool> = (0..6).map(|i| i == 0 || bits >> (i - 1) & 1 == 1).collect();
            let p = projector_over_elements(&ext, &members).unwrap();
            let is_union = HCosetSubset::from_elements(&cosets, |perm| {
                members[g.index_of(perm).unwrap()]
            })
            .is_ok();
            if !is_union {
                assert!(p.is_zero(), "P_A must vanish for {members:?}");
            }
            sum = sum.add(&p);
        }
        assert!(sum.is_identity());
    }

    #[test]
    fn restriction_of_global_rep_reproduces_linearization() {
        let g = s3();
        // Natural permutation representation on C³.
        let natural = linearize(&natural_restriction(&g, &[true, true, true]));
        assert!(natural.is_global_rep());
        let phi = Matrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 0]]);
        let tau = Matrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0]]);
        let pi = restrict_global(&natural, &phi, &tau).unwrap();
        let lin = linearize(&natural_restriction(&g, &[true, true, false]));
        assert_eq!(pi.mats(), lin.mats());
        // A projection that fails τφ = Id is rejected.
        let bad_tau = Matrix::from_i64_rows(&[&[1, 0, 0], &[1, 0, 0]]);
        assert!(restrict_global(&natural, &phi, &bad_tau).is_err());
    }

    #[test]
    fn globalization_of_extended_trivial_is_the_coset_module() {
        let g = s3();
        let h = FiniteGroup::point_stabilizer(&g, 0);
        let triv = PartialRep::trivial(Arc::clone(&h), 1);
        let ext = PartialRep::extend_by_zero(&g, &triv).unwrap();
        let glob = globalize(&ext).unwrap();
        assert_eq!(glob.rep.dim(), 3);
        // Same character as the natural permutation representation (the
        // coset space G/H is the natural point action here).
        let natural = linearize(&natural_restriction(&g, &[true, true, true]));
        assert_eq!(glob.rep.character(), natural.character());
        assert!(glob.projection.mul(&glob.inclusion).is_identity());
    }

    #[test]
    fn globalization_of_partial_action_linearization() {
        let g = s3();
        let lin = linearize(&natural_restriction(&g, &[true, true, false]));
        let glob = globalize(&lin).unwrap();
        // The enveloping action of the restriction to {1,2} is the full
        // natural action on three points.
        assert_eq!(glob.rep.dim(), 3);
        let natural = linearize(&natural_restriction(&g, &[true, true, true]));
        assert_eq!(glob.rep.character(), natural.character());
    }

    #[test]
    fn globalization_is_universal_among_quadruples() {
        let g = s3();
        let lin = linearize(&natural_restriction(&g, &[true, true, false]));
        let glob = globalize(&lin).unwrap();
        // Another globalizing quadruple: the natural action on C³ with the
        // coordinate inclusion/projection.
        let natural = linearize(&natural_restriction(&g, &[true, true, true]));
        let phi = Matrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 0]]);
        assert!(globalization_maps_onto(&glob, &natural, &phi).unwrap());
        // The direct sum with an extra trivial summand still receives a map
        // (it restricts to π ⊕ junk only on the first block; the relations
        // of U still hold among its translates).
        let padded = natural.direct_sum(&PartialRep::trivial(Arc::clone(&g), 1)).unwrap();
        let phi_padded = Matrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
        assert!(globalization_maps_onto(&glob, &padded, &phi_padded).unwrap());
    }

    #[test]
    fn isotropy_of_coset_subsets_matches_projector_support() {
        // For the extended trivial representation of S_3/S_2 the component
        // at A is 1-dimensional exactly when A = H (the only object whose
        // isotropy contains the support H with multiplicity here).
        let g = s3();
        let h = FiniteGroup::point_stabilizer(&g, 0);
        let triv = PartialRep::trivial(Arc::clone(&h), 1);
        let ext = PartialRep::extend_by_zero(&g, &triv).unwrap();
        let cosets = CosetSpace::left_cosets(&g, &h).unwrap();
        let decomp = pa_decomposition(&ext, &cosets, None).unwrap();
        for (a, basis) in &decomp {
            let expected = if a.mask() == 1 { 1 } else { 0 };
            assert_eq!(basis.cols(), expected, "component at {a}");
        }
        let stab = coset_set_stabilizer(&decomp[0].0);
        assert!(stab.same_element_set(&h));
    }

    #[test]
    fn json_round_trip() {
        let g = parse_group_spec("gens:(1 2),(1 2 3)", 0).unwrap();
        let h = FiniteGroup::point_stabilizer(&g, 0);
        let triv = PartialRep::trivial(Arc::clone(&h), 1);
        let ext = PartialRep::extend_by_zero(&g, &triv).unwrap();
        let json = ext.to_json_string();
        let back = PartialRep::from_json_str(&json).unwrap();
        assert_eq!(back.dim(), ext.dim());
        assert_eq!(back.mats(), ext.mats());
        assert!(PartialRep::from_json_str("{\"group\":\"S3\"}").is_err());
    }
}
