//! Finite permutation groups with a fixed, deterministic element order, left
//! coset spaces, unions of cosets, double cosets, and set stabilizers.
//!
//! Everything downstream (groupoid elements, algebra terms, representation
//! matrices) is indexed by the element order fixed here, so the enumeration
//! is breadth-first from the identity with the generators applied in the
//! order given — two groups built from the same generator list always agree
//! element-by-element.

use crate::perm::Permutation;
use crate::{caps, Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

/// A finite permutation group, materialized as an ordered element list.
///
/// `elements[0]` is the identity; `elements[k] = elements[p] ∘ gens[j]`
/// where `(p, j)` is the BFS parent edge of `k`.  The parent edges let a
/// global representation be extended from generator matrices by pure matrix
/// multiplication.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    parent_edge: Vec<(usize, usize)>, // (parent element index, generator index); (0,0) for identity
    inverse_of: Vec<usize>,
}

impl FiniteGroup {
    /// Enumerates the group generated by `gens` acting on `{0,…,degree-1}`,
    /// breadth-first from the identity with generators applied (on the
    /// right) in the order given.
    pub fn from_generators(gens: &[Permutation], degree: usize) -> Result<Arc<FiniteGroup>> {
        if degree > caps::MAX_DEGREE {
            return Err(Error::TooLarge(format!(
                "degree {degree} exceeds cap {}",
                caps::MAX_DEGREE
            )));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidInput(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut parent_edge = vec![(0usize, 0usize)];
        let mut head = 0;
        while head < elements.len() {
            for (j, g) in gens.iter().enumerate() {
                let next = elements[head].compose(g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    parent_edge.push((head, j));
                    if elements.len() > caps::MAX_GROUP_ORDER {
                        return Err(Error::TooLarge(format!(
                            "group order exceeds cap {}",
                            caps::MAX_GROUP_ORDER
                        )));
                    }
                }
            }
            head += 1;
        }
        let inverse_of = elements
            .iter()
            .map(|e| index[&e.inverse()])
            .collect();
        Ok(Arc::new(FiniteGroup {
            degree,
            generators: gens.to_vec(),
            elements,
            index,
            parent_edge,
            inverse_of,
        }))
    }

    /// The symmetric group on the first `n` of `degree` points.
    pub fn symmetric_on(n: usize, degree: usize) -> Result<Arc<FiniteGroup>> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::transposition(degree, 0, 1));
        }
        if n >= 3 {
            gens.push(Permutation::cycle(degree, &(0..n).collect::<Vec<_>>()));
        }
        FiniteGroup::from_generators(&gens, degree)
    }

    pub fn symmetric(n: usize) -> Result<Arc<FiniteGroup>> {
        FiniteGroup::symmetric_on(n, n)
    }

    /// The cyclic group generated by the `n`-cycle `(1 2 … n)`.
    pub fn cyclic(n: usize) -> Result<Arc<FiniteGroup>> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclic group needs n ≥ 1".into()));
        }
        let gens = if n == 1 {
            vec![]
        } else {
            vec![Permutation::cycle(n, &(0..n).collect::<Vec<_>>())]
        };
        FiniteGroup::from_generators(&gens, n)
    }

    /// The dihedral group of order `2n` acting on the vertices of an
    /// `n`-gon: generated by the rotation `(1 2 … n)` and the reflection
    /// fixing vertex 1.
    pub fn dihedral(n: usize) -> Result<Arc<FiniteGroup>> {
        if n < 3 {
            return Err(Error::InvalidInput("dihedral group needs n ≥ 3".into()));
        }
        let rotation = Permutation::cycle(n, &(0..n).collect::<Vec<_>>());
        let reflection = Permutation::from_images(
            (0..n as u16).map(|i| if i == 0 { 0 } else { n as u16 - i }).collect(),
        )?;
        FiniteGroup::from_generators(&[rotation, reflection], n)
    }

    pub fn trivial(degree: usize) -> Result<Arc<FiniteGroup>> {
        FiniteGroup::from_generators(&[], degree)
    }

    /// Stabilizer of a point, as a subgroup with the same degree.
    pub fn point_stabilizer(group: &Arc<FiniteGroup>, point: usize) -> Arc<FiniteGroup> {
        FiniteGroup::subgroup_where(group, |p| p.apply(point) == point)
    }

    /// Setwise stabilizer `{g : g(S) = S}` of a point set.
    pub fn set_stabilizer(group: &Arc<FiniteGroup>, points: &[usize]) -> Arc<FiniteGroup> {
        let mut inside = vec![false; group.degree()];
        for &p in points {
            inside[p] = true;
        }
        FiniteGroup::subgroup_where(group, |p| p.preserves(&inside))
    }

    /// The subgroup of all elements satisfying `keep`, rebuilt from a small
    /// generating set found greedily in element order (so the result has the
    /// canonical BFS element order of its own generators).
    pub fn subgroup_where(
        group: &Arc<FiniteGroup>,
        keep: impl Fn(&Permutation) -> bool,
    ) -> Arc<FiniteGroup> {
        let members: Vec<&Permutation> =
            group.elements.iter().filter(|p| keep(p)).collect();
        FiniteGroup::generated_by_members(group.degree, &members)
    }

    /// The subgroup consisting of the listed elements (which must be closed
    /// under the group operation), given by indices into `group`.
    pub fn subgroup_from_indices(group: &Arc<FiniteGroup>, indices: &[usize]) -> Arc<FiniteGroup> {
        let members: Vec<&Permutation> = indices.iter().map(|&i| group.element(i)).collect();
        FiniteGroup::generated_by_members(group.degree, &members)
    }

    fn generated_by_members(degree: usize, members: &[&Permutation]) -> Arc<FiniteGroup> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut closure = FiniteGroup::from_generators(&gens, degree)
            .expect("trivial group under caps");
        for m in members {
            if !closure.contains(m) {
                gens.push((*m).clone());
                closure = FiniteGroup::from_generators(&gens, degree)
                    .expect("subgroup enumeration under caps");
            }
        }
        debug_assert_eq!(closure.order(), members.len(), "member set must be closed");
        closure
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverse_of[i]
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn product_index(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].compose(&self.elements[j])]
    }

    /// BFS parent edge `(parent, generator)` of element `i > 0`:
    /// `elements[i] = elements[parent] ∘ generators[generator]`.
    pub fn parent_edge(&self, i: usize) -> (usize, usize) {
        self.parent_edge[i]
    }

    /// Generator indices as element indices (for witness sets).
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    /// Checks `sub ⊆ self` elementwise (same degree required).
    pub fn has_subgroup(&self, sub: &FiniteGroup) -> bool {
        sub.degree == self.degree && sub.elements.iter().all(|p| self.index.contains_key(p))
    }

    /// Indices in `self` of the elements of the subgroup, in the subgroup's
    /// own element order.
    pub fn embed_indices(&self, sub: &FiniteGroup) -> Result<Vec<usize>> {
        if sub.degree != self.degree {
            return Err(Error::NotASubgroup(format!(
                "degree {} vs {}",
                sub.degree, self.degree
            )));
        }
        sub.elements
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::NotASubgroup(format!("{p} is not in the parent group")))
            })
            .collect()
    }

    /// Structural equality: same degree and the same element list in the
    /// same order.
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other)
            || (self.degree == other.degree && self.elements == other.elements)
    }

    /// Same underlying element set, regardless of enumeration order.
    pub fn same_element_set(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.elements.iter().all(|p| self.index.contains_key(p))
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteGroup(degree {}, order {}, gens [{}])",
            self.degree,
            self.order(),
            self.generators
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// The left coset space `G/H`, with canonical representatives.
///
/// Cosets are numbered in order of first appearance along the parent
/// group's element list, so coset 0 is always `H` itself; each
/// representative is the lexicographically minimal member of its coset
/// (hence `reps[0]` is the identity).
pub struct CosetSpace {
    parent: Arc<FiniteGroup>,
    subgroup: Arc<FiniteGroup>,
    reps: Vec<Permutation>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn left_cosets(parent: &Arc<FiniteGroup>, subgroup: &Arc<FiniteGroup>) -> Result<Arc<CosetSpace>> {
        if !parent.has_subgroup(subgroup) {
            return Err(Error::NotASubgroup(format!(
                "{subgroup:?} is not a subgroup of {parent:?}"
            )));
        }
        let mut coset_of = vec![usize::MAX; parent.order()];
        let mut reps: Vec<Permutation> = Vec::new();
        for (i, g) in parent.elements().iter().enumerate() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            let mut min_member = None::<&Permutation>;
            for h in subgroup.elements() {
                let member = g.compose(h);
                let idx = parent.index_of(&member).expect("closure");
                coset_of[idx] = c;
                let member_ref = parent.element(idx);
                if min_member.map_or(true, |m| member_ref < m) {
                    min_member = Some(member_ref);
                }
            }
            reps.push(min_member.expect("nonempty coset").clone());
        }
        Ok(Arc::new(CosetSpace {
            parent: Arc::clone(parent),
            subgroup: Arc::clone(subgroup),
            reps,
            coset_of,
        }))
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn subgroup(&self) -> &Arc<FiniteGroup> {
        &self.subgroup
    }

    /// The index `[G:H]`, i.e. the number of cosets.
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn rep(&self, coset: usize) -> &Permutation {
        &self.reps[coset]
    }

    /// Coset number of a parent element given by index.
    pub fn coset_of_index(&self, element: usize) -> usize {
        self.coset_of[element]
    }

    pub fn coset_of(&self, p: &Permutation) -> Option<usize> {
        self.parent.index_of(p).map(|i| self.coset_of[i])
    }

    /// The coset `g · (coset)`.
    pub fn translate(&self, g: &Permutation, coset: usize) -> usize {
        self.coset_of(&g.compose(&self.reps[coset]))
            .expect("translate stays in the group")
    }

    /// Two coset spaces describe the same `G/H` (used to reject mixing
    /// algebra elements from different contexts).
    pub fn same_space(&self, other: &CosetSpace) -> bool {
        std::ptr::eq(self, other)
            || (self.parent.same_group(&other.parent) && self.reps == other.reps)
    }
}

impl std::fmt::Debug for CosetSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CosetSpace(|G| {}, |H| {}, index {})",
            self.parent.order(),
            self.subgroup.order(),
            self.index()
        )
    }
}

/// A union of left `H`-cosets containing `H`, stored as a bitmask over
/// coset numbers (bit 0 — the coset `H` itself — is always set).
///
/// These sets are the objects of the groupoid `Γ_H(G)` and index the
/// idempotent projections of an `H`-global partial representation.
#[derive(Clone)]
pub struct HCosetSubset {
    cosets: Arc<CosetSpace>,
    mask: u64,
}

impl HCosetSubset {
    pub fn from_mask(cosets: &Arc<CosetSpace>, mask: u64) -> Result<Self> {
        if cosets.index() > 64 {
            return Err(Error::TooLarge(format!(
                "coset index {} exceeds bitmask width",
                cosets.index()
            )));
        }
        if mask & 1 == 0 {
            return Err(Error::InvalidInput(
                "the subset must contain the subgroup (bit 0)".into(),
            ));
        }
        if mask >> cosets.index() != 0 {
            return Err(Error::InvalidInput(format!(
                "mask {mask:#b} names cosets beyond index {}",
                cosets.index()
            )));
        }
        Ok(HCosetSubset {
            cosets: Arc::clone(cosets),
            mask,
        })
    }

    /// The subset consisting of `H` alone.
    pub fn just_subgroup(cosets: &Arc<CosetSpace>) -> Self {
        HCosetSubset::from_mask(cosets, 1).expect("bit 0")
    }

    /// The whole group.
    pub fn full(cosets: &Arc<CosetSpace>) -> Self {
        let mask = if cosets.index() == 64 {
            u64::MAX
        } else {
            (1u64 << cosets.index()) - 1
        };
        HCosetSubset::from_mask(cosets, mask).expect("bit 0")
    }

    /// The subset from an explicit element membership test, which must be a
    /// union of left `H`-cosets containing `H`.
    pub fn from_elements(
        cosets: &Arc<CosetSpace>,
        contains: impl Fn(&Permutation) -> bool,
    ) -> Result<Self> {
        let mut mask = 0u64;
        let parent = cosets.parent();
        for (i, g) in parent.elements().iter().enumerate() {
            if contains(g) {
                mask |= 1 << cosets.coset_of_index(i);
            }
        }
        let subset = HCosetSubset::from_mask(cosets, mask)?;
        // Verify the set really was a union of cosets.
        for (i, g) in parent.elements().iter().enumerate() {
            let in_mask = subset.contains_coset(cosets.coset_of_index(i));
            if in_mask != contains(g) {
                return Err(Error::InvalidInput(format!(
                    "set is not a union of left cosets (split at {g})"
                )));
            }
        }
        Ok(subset)
    }

    pub fn cosets(&self) -> &Arc<CosetSpace> {
        &self.cosets
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains_coset(&self, coset: usize) -> bool {
        self.mask >> coset & 1 == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.cosets
            .coset_of(p)
            .map_or(false, |c| self.contains_coset(c))
    }

    /// Number of cosets in the union.
    pub fn coset_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Number of group elements in the union.
    pub fn element_count(&self) -> usize {
        self.coset_count() * self.cosets.subgroup().order()
    }

    pub fn coset_numbers(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cosets.index()).filter(|&c| self.contains_coset(c))
    }

    /// Indices (in the parent group) of the elements of the union.
    pub fn element_indices(&self) -> Vec<usize> {
        (0..self.cosets.parent().order())
            .filter(|&i| self.contains_coset(self.cosets.coset_of_index(i)))
            .collect()
    }

    /// Indices of the elements of `A⁻¹ = {g⁻¹ : g ∈ A}`.
    pub fn inverse_element_indices(&self) -> Vec<usize> {
        let parent = self.cosets.parent();
        (0..parent.order())
            .filter(|&i| self.contains_coset(self.cosets.coset_of_index(parent.inverse_index(i))))
            .collect()
    }

    /// The translated subset `g·A` (a union of cosets again, containing
    /// `H` exactly when `g⁻¹ ∈ A`; callers needing groupoid arrows check
    /// that separately).
    pub fn translate_mask(&self, g: &Permutation) -> u64 {
        let mut mask = 0u64;
        for c in self.coset_numbers() {
            mask |= 1 << self.cosets.translate(g, c);
        }
        mask
    }

    pub fn same_context(&self, other: &HCosetSubset) -> bool {
        self.cosets.same_space(&other.cosets)
    }
}

impl PartialEq for HCosetSubset {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.same_context(other)
    }
}
impl Eq for HCosetSubset {}

impl std::fmt::Display for HCosetSubset {
    /// Prints the coset representatives, e.g. `{H, (1 2)H}`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (n, c) in self.coset_numbers().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            if c == 0 {
                write!(f, "H")?;
            } else {
                write!(f, "{}H", self.cosets.rep(c))?;
            }
        }
        write!(f, "}}")
    }
}

impl std::fmt::Debug for HCosetSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// All unions of left `H`-cosets containing `H`, ordered by mask value.
/// There are `2^([G:H]-1)` of them; `cap` (defaulting to
/// `caps::MAX_COSET_INDEX`) bounds the index.
pub fn coset_subset_family(
    cosets: &Arc<CosetSpace>,
    cap: Option<usize>,
) -> Result<Vec<HCosetSubset>> {
    let cap = cap.unwrap_or(caps::MAX_COSET_INDEX);
    let r = cosets.index();
    if r > cap {
        return Err(Error::TooLarge(format!(
            "coset index {r} exceeds cap {cap}; raise the cap to enumerate 2^{} subsets",
            r - 1
        )));
    }
    let free_bits = r - 1;
    let mut family = Vec::with_capacity(1 << free_bits);
    for free in 0..(1u64 << free_bits) {
        family.push(HCosetSubset::from_mask(cosets, free << 1 | 1)?);
    }
    Ok(family)
}

/// Representatives of the `(H, K)`-double cosets partitioning a
/// bi-invariant set `A` (given by parent element indices): each
/// representative is the lexicographically minimal member of its double
/// coset, and the list is sorted.
pub fn double_coset_reps(
    parent: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    k: &Arc<FiniteGroup>,
    a_indices: &[usize],
) -> Result<Vec<Permutation>> {
    for sub in [h, k] {
        if !parent.has_subgroup(sub) {
            return Err(Error::NotASubgroup(format!("{sub:?} within {parent:?}")));
        }
    }
    let mut in_a = vec![false; parent.order()];
    for &i in a_indices {
        in_a[i] = true;
    }
    // Bi-invariance: hA = A and Ak = A.  Generator stability suffices.
    for hg in h.generators() {
        for &i in a_indices {
            let moved = hg.compose(parent.element(i));
            if !in_a[parent.index_of(&moved).expect("closure")] {
                return Err(Error::NotBiInvariant(format!(
                    "{hg}·{} leaves the set",
                    parent.element(i)
                )));
            }
        }
    }
    for kg in k.generators() {
        for &i in a_indices {
            let moved = parent.element(i).compose(kg);
            if !in_a[parent.index_of(&moved).expect("closure")] {
                return Err(Error::NotBiInvariant(format!(
                    "{}·{kg} leaves the set",
                    parent.element(i)
                )));
            }
        }
    }
    let mut assigned = vec![false; parent.order()];
    let mut reps: Vec<Permutation> = Vec::new();
    for &start in a_indices {
        if assigned[start] {
            continue;
        }
        let mut min_member = parent.element(start);
        for hg in h.elements() {
            let hs = hg.compose(parent.element(start));
            for kg in k.elements() {
                let member = hs.compose(kg);
                let idx = parent.index_of(&member).expect("closure");
                debug_assert!(in_a[idx], "double coset escapes the bi-invariant set");
                assigned[idx] = true;
                if parent.element(idx) < min_member {
                    min_member = parent.element(idx);
                }
            }
        }
        reps.push(min_member.clone());
    }
    reps.sort();
    Ok(reps)
}

/// The isotropy group `K_A = {g ∈ G : gA = A}` of a union of cosets.
pub fn coset_set_stabilizer(a: &HCosetSubset) -> Arc<FiniteGroup> {
    let cosets = a.cosets();
    FiniteGroup::subgroup_where(cosets.parent(), |g| a.translate_mask(g) == a.mask())
}

/// Parses the group mini-language: `S<n>` (symmetric), `C<n>` (cyclic),
/// `D<n>` (dihedral on `n` points, order `2n`), or `gens: <cycles>` with
/// generators separated by commas at the top level, e.g.
/// `gens: (1 2),(1 2 3)`.
///
/// `min_degree` pads every permutation up to the ambient degree (pass the
/// parent's degree when parsing a subgroup spec); `S<k>`/`C<k>`/`D<k>` then
/// act on the first `k` points.
pub fn parse_group_spec(spec: &str, min_degree: usize) -> Result<Arc<FiniteGroup>> {
    let spec = spec.trim();
    let family = |letter: &str| -> Option<usize> {
        spec.strip_prefix(letter)
            .and_then(|rest| rest.parse::<usize>().ok())
    };
    if let Some(n) = family("S") {
        if n == 0 {
            return Err(Error::InvalidInput("S0 is not supported; use S1".into()));
        }
        return FiniteGroup::symmetric_on(n, n.max(min_degree));
    }
    if let Some(n) = family("C") {
        let degree = n.max(min_degree);
        if n <= 1 {
            return FiniteGroup::trivial(degree.max(1));
        }
        let gen = Permutation::cycle(degree, &(0..n).collect::<Vec<_>>());
        return FiniteGroup::from_generators(&[gen], degree);
    }
    if let Some(n) = family("D") {
        if n < 3 {
            return Err(Error::InvalidInput("D<n> needs n ≥ 3".into()));
        }
        let degree = n.max(min_degree);
        let rotation = Permutation::cycle(degree, &(0..n).collect::<Vec<_>>());
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for i in 1..n {
            images[i] = (n - i) as u16;
        }
        let reflection = Permutation::from_images(images)?;
        return FiniteGroup::from_generators(&[rotation, reflection], degree);
    }
    if let Some(rest) = spec.strip_prefix("gens:") {
        let mut gens = Vec::new();
        // Split on commas *between* cycles: a comma inside parentheses is a
        // point separator, not a generator separator.
        let mut depth = 0usize;
        let mut start = 0usize;
        let bytes = rest.as_bytes();
        let mut pieces = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth = depth.saturating_sub(1),
                b',' if depth == 0 => {
                    pieces.push(&rest[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push(&rest[start..]);
        let mut max_degree = min_degree;
        let mut parsed = Vec::new();
        for piece in pieces.into_iter().filter(|p| !p.trim().is_empty()) {
            let p = Permutation::from_cycles(piece, 0)?;
            max_degree = max_degree.max(p.degree());
            parsed.push(piece);
        }
        for piece in parsed {
            gens.push(Permutation::from_cycles(piece, max_degree)?);
        }
        if max_degree == 0 {
            return Err(Error::InvalidInput(
                "empty generator list needs an ambient degree".into(),
            ));
        }
        return FiniteGroup::from_generators(&gens, max_degree);
    }
    Err(Error::InvalidInput(format!(
        "unrecognized group spec {spec:?} (expected S<n>, C<n>, D<n>, or gens: …)"
    )))
}

/// Parses a subgroup spec against a parent group and verifies containment.
pub fn parse_subgroup_spec(spec: &str, parent: &Arc<FiniteGroup>) -> Result<Arc<FiniteGroup>> {
    let sub = parse_group_spec(spec, parent.degree())?;
    if sub.degree() != parent.degree() {
        return Err(Error::NotASubgroup(format!(
            "spec {spec:?} has degree {} but the parent has degree {}",
            sub.degree(),
            parent.degree()
        )));
    }
    if !parent.has_subgroup(&sub) {
        return Err(Error::NotASubgroup(format!(
            "spec {spec:?} does not generate a subgroup of the parent"
        )));
    }
    Ok(sub)
}
