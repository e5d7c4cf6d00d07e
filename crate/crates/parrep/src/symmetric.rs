//! Partition combinatorics, symmetric-group modules, and the bipartition
//! family of partial representations of the symmetric groups.
//!
//! The first half is self-contained combinatorics: partitions, hook
//! lengths, the recursive character rule, Littlewood–Richardson
//! coefficients by tableau counting, and minimal modules built on
//! polytabloids.  The second half combines these with block induction to
//! realise, decompose, and cross-check the irreducible partial
//! representations of `S_n` that are global over a point stabilizer.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::group::{
    coset_set_stabilizer, CosetSpace, FiniteGroup, HCosetSubset,
};
use crate::groupoid::{ComponentSummary, DecompositionReport};
use crate::induction::{ind_a, left_coset_blocks, DecoratedRep};
use crate::linalg::Matrix;
use crate::partial::PartialRep;
use crate::perm::Permutation;
use crate::{caps, Error, Result};

pub fn factorial(n: u128) -> u128 {
    (2..=n).product()
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// An integer partition: weakly decreasing positive parts.  The empty
/// partition is allowed and prints as `[]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidInput(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidInput("zero part in a partition".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parses `[3,1,1]`; `[]` is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|u| u.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidInput(format!("expected [..], got {s:?}")))?
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Whether `other` fits inside this shape row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(o, s)| o <= s)
    }

    /// Number of standard fillings, by the hook length formula.
    pub fn syt_count(&self) -> u128 {
        let n = self.size() as u128;
        let mut denom: u128 = 1;
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                let arm = len - 1 - j;
                let leg = self.parts[i + 1..].iter().filter(|&&p| p > j).count();
                denom *= (arm + leg + 1) as u128;
            }
        }
        factorial(n) / denom
    }

    /// The partitions obtained by removing one corner cell, in row order.
    pub fn young_covers(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i + 1 < self.parts.len() && self.parts[i] == self.parts[i + 1] {
                continue;
            }
            let mut parts = self.parts.clone();
            parts[i] -= 1;
            if parts[i] == 0 {
                parts.remove(i);
            }
            out.push(Partition { parts });
        }
        out
    }

    /// The cycle type of a permutation restricted to an invariant point
    /// set.
    pub fn cycle_type_on(p: &Permutation, points: &[usize]) -> Partition {
        Partition {
            parts: p.cycle_type_on(points),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `n`, first part descending (so `[n]` first and
/// `[1,…,1]` last).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The cells of the skew shape `outer/inner`, row by row.
fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (i, &len) in outer.parts.iter().enumerate() {
        let start = inner.parts.get(i).copied().unwrap_or(0);
        for j in start..len {
            cells.push((i, j));
        }
    }
    cells
}

/// Height (rows spanned minus one) of `outer/inner` if that skew shape is
/// a single connected border strip containing no 2×2 square, else `None`.
fn border_strip_height(outer: &Partition, inner: &Partition) -> Option<usize> {
    let cells = skew_cells(outer, inner);
    if cells.is_empty() {
        return None;
    }
    let cell_set: std::collections::BTreeSet<(usize, usize)> = cells.iter().copied().collect();
    for &(i, j) in &cells {
        if cell_set.contains(&(i, j + 1))
            && cell_set.contains(&(i + 1, j))
            && cell_set.contains(&(i + 1, j + 1))
        {
            return None;
        }
    }
    // Connectivity via side-adjacency.
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![cells[0]];
    seen.insert(cells[0]);
    while let Some((i, j)) = stack.pop() {
        let mut neighbors = vec![(i + 1, j), (i, j + 1)];
        if i > 0 {
            neighbors.push((i - 1, j));
        }
        if j > 0 {
            neighbors.push((i, j - 1));
        }
        for nb in neighbors {
            if cell_set.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    if seen.len() != cells.len() {
        return None;
    }
    let rows: std::collections::BTreeSet<usize> = cells.iter().map(|&(i, _)| i).collect();
    Some(rows.len() - 1)
}

/// The irreducible symmetric-group character `χ^shape` evaluated at a
/// class given by its cycle type, by recursive border-strip removal.
pub fn mn_character(shape: &Partition, class: &Partition) -> Result<i64> {
    if shape.size() != class.size() {
        return Err(Error::InvalidInput(format!(
            "shape {shape} has size {} but class {class} has size {}",
            shape.size(),
            class.size()
        )));
    }
    fn rec(shape: &Partition, parts: &[usize]) -> i64 {
        let Some((&strip, rest)) = parts.split_first() else {
            return 1;
        };
        let mut total = 0;
        for inner in partitions_of(shape.size() - strip) {
            if !shape.contains(&inner) {
                continue;
            }
            if let Some(height) = border_strip_height(shape, &inner) {
                let sign = if height % 2 == 0 { 1 } else { -1 };
                total += sign * rec(&inner, rest);
            }
        }
        total
    }
    Ok(rec(shape, class.parts()))
}

/// The Littlewood–Richardson coefficient `c^nu_{lambda,mu}`: the number of
/// semistandard fillings of `nu/lambda` with content `mu` whose reverse
/// reading word is a lattice word.  The sizes must satisfy
/// `|lambda| + |mu| = |nu|`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(Error::InvalidInput(format!(
            "|{lambda}| + |{mu}| != |{nu}|"
        )));
    }
    if !nu.contains(lambda) {
        return Ok(0);
    }
    // Cells in reverse reading order: rows top to bottom, right to left,
    // so the lattice property can be enforced prefix by prefix.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (i, &len) in nu.parts.iter().enumerate() {
        let start = lambda.parts.get(i).copied().unwrap_or(0);
        for j in (start..len).rev() {
            cells.push((i, j));
        }
    }
    let values = mu.len();
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut counts = vec![0usize; values];
    fn rec(
        pos: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        mu: &Partition,
        fill: &mut BTreeMap<(usize, usize), usize>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(i, j)) = cells.get(pos) else {
            return 1;
        };
        let mut total = 0;
        for v in 0..mu.len() {
            if counts[v] == mu.parts()[v] {
                continue;
            }
            // Lattice: each prefix holds at least as many v-1 as v.
            if v > 0 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            // Rows weakly increase left to right; the right neighbour is
            // already placed.
            if let Some(&right) = fill.get(&(i, j + 1)) {
                if v > right {
                    continue;
                }
            }
            // Columns strictly increase downwards; the cell above is
            // already placed when it belongs to the skew shape.
            if i > 0 && j >= lambda.parts().get(i - 1).copied().unwrap_or(0) {
                if let Some(&up) = fill.get(&(i - 1, j)) {
                    if v <= up {
                        continue;
                    }
                }
            }
            fill.insert((i, j), v);
            counts[v] += 1;
            total += rec(pos + 1, cells, lambda, mu, fill, counts);
            counts[v] -= 1;
            fill.remove(&(i, j));
        }
        total
    }
    Ok(rec(0, &cells, lambda, mu, &mut fill, &mut counts))
}

/// A pair of partitions naming an irreducible partial representation of
/// `S_n`: the first indexes the point orbit `{1..k}`, the second the rest.
/// Prints as `([2,1],[1])@n=4`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiPartitionLabel {
    lambda: Partition,
    mu: Partition,
}

impl BiPartitionLabel {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidInput(
                "the first partition of a label must be nonempty".into(),
            ));
        }
        Ok(BiPartitionLabel { lambda, mu })
    }

    /// Parses `([2,1],[1])@n=4`.  The trailing size must match the sum of
    /// the two partition sizes.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let (head, tail) = t
            .split_once("@n=")
            .ok_or_else(|| Error::InvalidInput(format!("missing @n= in {s:?}")))?;
        let n: usize = tail
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad size in {s:?}")))?;
        let inner = head
            .trim()
            .strip_prefix('(')
            .and_then(|u| u.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidInput(format!("expected (..,..), got {s:?}")))?;
        let close = inner
            .find(']')
            .ok_or_else(|| Error::InvalidInput(format!("missing ] in {s:?}")))?;
        let lambda = Partition::parse(&inner[..=close])?;
        let rest = inner[close + 1..].trim_start();
        let rest = rest
            .strip_prefix(',')
            .ok_or_else(|| Error::InvalidInput(format!("missing , between partitions in {s:?}")))?;
        let mu = Partition::parse(rest)?;
        let label = BiPartitionLabel::new(lambda, mu)?;
        if label.n() != n {
            return Err(Error::InvalidInput(format!(
                "label {label} does not have size {n}"
            )));
        }
        Ok(label)
    }

    pub fn left(&self) -> &Partition {
        &self.lambda
    }

    pub fn right(&self) -> &Partition {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }

    pub fn k(&self) -> usize {
        self.lambda.size()
    }

    /// `C(n-1, k-1) · f^lambda · f^mu`, the dimension of the named
    /// representation.
    pub fn dim(&self) -> u128 {
        binomial(self.n() as u128 - 1, self.k() as u128 - 1)
            * self.lambda.syt_count()
            * self.mu.syt_count()
    }
}

impl fmt::Display for BiPartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})@n={}", self.lambda, self.mu, self.n())
    }
}

impl fmt::Debug for BiPartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All labels of size `n`, grouped by ascending `k`.
pub fn labels_of(n: usize) -> Vec<BiPartitionLabel> {
    let mut out = Vec::new();
    for k in 1..=n {
        for lambda in partitions_of(k) {
            for mu in partitions_of(n - k) {
                out.push(BiPartitionLabel {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                });
            }
        }
    }
    out
}

/// All permutations of `0..k` with their signs.
fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    fn rec(current: &mut Vec<usize>, pos: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if pos + 1 >= current.len() {
            out.push((current.clone(), sign));
            return;
        }
        for i in pos..current.len() {
            current.swap(pos, i);
            let flip = if i == pos { 1 } else { -1 };
            rec(current, pos + 1, sign * flip, out);
            current.swap(pos, i);
        }
    }
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    rec(&mut current, 0, 1, &mut out);
    out
}

/// All standard fillings of the shape (rows and columns increasing), as
/// row lists of values `0..m-1`, sorted by row-reading word.
fn standard_tableaux(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
    let m = shape.size();
    let rows = shape.len();
    let mut filled: Vec<Vec<usize>> = vec![Vec::new(); rows];
    let mut out = Vec::new();
    fn rec(
        v: usize,
        m: usize,
        shape: &Partition,
        filled: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if v == m {
            out.push(filled.clone());
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r].len();
            if c >= shape.parts()[r] {
                continue;
            }
            if r > 0 && filled[r - 1].len() <= c {
                continue;
            }
            filled[r].push(v);
            rec(v + 1, m, shape, filled, out);
            filled[r].pop();
        }
    }
    rec(0, m, shape, &mut filled, &mut out);
    out.sort_by_key(|t| t.concat());
    out
}

/// All ways to split `0..m` into ordered rows of the given sizes, each row
/// sorted; returns the list of keys and the index of each key.
fn enumerate_row_partitions(
    shape: &Partition,
) -> (Vec<Vec<Vec<usize>>>, BTreeMap<Vec<Vec<usize>>, usize>) {
    let m = shape.size();
    let mut keys = Vec::new();
    fn rec(
        row: usize,
        shape: &Partition,
        remaining: &[usize],
        prefix: &mut Vec<Vec<usize>>,
        keys: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if row == shape.len() {
            keys.push(prefix.clone());
            return;
        }
        let size = shape.parts()[row];
        // Choose a sorted subset of the remaining values for this row.
        let mut choice = Vec::with_capacity(size);
        fn choose(
            start: usize,
            size: usize,
            row: usize,
            shape: &Partition,
            remaining: &[usize],
            choice: &mut Vec<usize>,
            prefix: &mut Vec<Vec<usize>>,
            keys: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if choice.len() == size {
                let rest: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|x| !choice.contains(x))
                    .collect();
                prefix.push(choice.clone());
                rec(row + 1, shape, &rest, prefix, keys);
                prefix.pop();
                return;
            }
            for i in start..remaining.len() {
                choice.push(remaining[i]);
                choose(i + 1, size, row, shape, remaining, choice, prefix, keys);
                choice.pop();
            }
        }
        choose(0, size, row, shape, remaining, &mut choice, prefix, keys);
    }
    rec(
        0,
        shape,
        &(0..m).collect::<Vec<usize>>(),
        &mut Vec::new(),
        &mut keys,
    );
    let index = keys
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    (keys, index)
}

/// The signed sum over column permutations of a tableau, as coefficients
/// on row-partition keys.
fn polytabloid(
    tableau: &[Vec<usize>],
    shape: &Partition,
    sign_perms: &[Vec<(Vec<usize>, i64)>],
    index: &BTreeMap<Vec<Vec<usize>>, usize>,
) -> BTreeMap<usize, i64> {
    let cols = shape.parts()[0];
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(cols);
    for c in 0..cols {
        let height = shape.parts().iter().filter(|&&p| p > c).count();
        columns.push((0..height).map(|r| tableau[r][c]).collect());
    }
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    let mut counters = vec![0usize; cols];
    loop {
        let mut rows: Vec<Vec<usize>> = tableau.to_vec();
        let mut sign = 1i64;
        for (c, column) in columns.iter().enumerate() {
            let (perm, s) = &sign_perms[column.len()][counters[c]];
            sign *= s;
            for (r, &src) in perm.iter().enumerate() {
                rows[r][c] = column[src];
            }
        }
        for row in &mut rows {
            row.sort_unstable();
        }
        let idx = index[&rows];
        *acc.entry(idx).or_insert(0) += sign;
        // Advance the mixed-radix counter over column permutations.
        let mut c = 0;
        loop {
            if c == cols {
                return acc;
            }
            counters[c] += 1;
            if counters[c] < sign_perms[columns[c].len()].len() {
                break;
            }
            counters[c] = 0;
            c += 1;
        }
    }
}

/// The minimal module of the given shape for a symmetric group acting on
/// the listed letters (every other point must be fixed by the group).
///
/// Matrices are written on the basis of standard polytabloids, ordered by
/// the row-reading words of their tableaux.  One-row shapes give the
/// trivial representation and one-column shapes the sign representation;
/// everything else is solved exactly from the action on row partitions.
pub fn specht_on(
    shape: &Partition,
    group: &Arc<FiniteGroup>,
    letters: &[usize],
) -> Result<PartialRep> {
    let m = shape.size();
    if m != letters.len() {
        return Err(Error::InvalidInput(format!(
            "shape {shape} has size {m} but {} letters were given",
            letters.len()
        )));
    }
    if m > caps::MAX_SPECHT_N {
        return Err(Error::TooLarge(format!(
            "shape size {m} exceeds the module cap {}",
            caps::MAX_SPECHT_N
        )));
    }
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != m {
        return Err(Error::InvalidInput("repeated letters".into()));
    }
    if sorted.last().is_some_and(|&p| p >= group.degree()) {
        return Err(Error::InvalidInput("letter beyond the group's degree".into()));
    }
    if group.order() as u128 != factorial(m as u128) {
        return Err(Error::InvalidInput(format!(
            "group of order {} is not the symmetric group on {m} letters",
            group.order()
        )));
    }
    let mut is_letter = vec![false; group.degree()];
    for &p in &sorted {
        is_letter[p] = true;
    }
    for g in group.generators() {
        for p in 0..group.degree() {
            if !is_letter[p] && g.apply(p) != p {
                return Err(Error::InvalidInput(format!(
                    "generator {g} moves the non-letter point {}",
                    p + 1
                )));
            }
        }
    }
    if m == 0 || shape.len() == 1 {
        return Ok(PartialRep::trivial(Arc::clone(group), 1));
    }
    if shape.parts()[0] == 1 {
        let mats = (0..group.order())
            .map(|i| Matrix::from_i64_rows(&[&[group.element(i).sign()]]))
            .collect();
        return PartialRep::new(Arc::clone(group), mats);
    }
    let tableaux = standard_tableaux(shape);
    if tableaux.len() as u128 != shape.syt_count() {
        return Err(Error::OracleInconsistency(format!(
            "enumerated {} standard fillings of {shape} but the hook count is {}",
            tableaux.len(),
            shape.syt_count()
        )));
    }
    let max_height = shape.len();
    let sign_perms: Vec<Vec<(Vec<usize>, i64)>> =
        (0..=max_height).map(permutations_with_sign).collect();
    let (keys, index) = enumerate_row_partitions(shape);
    let f = tableaux.len();
    let mut basis_cols: Vec<Vec<crate::linalg::Rational>> = Vec::with_capacity(f);
    for t in &tableaux {
        let poly = polytabloid(t, shape, &sign_perms, &index);
        let mut col = vec![crate::linalg::q(0); keys.len()];
        for (idx, coeff) in poly {
            col[idx] = crate::linalg::q(coeff);
        }
        basis_cols.push(col);
    }
    let basis = Matrix::from_columns(&basis_cols)?;
    // Position of each letter, to read a group element as a permutation
    // of positions.
    let mut pos_of = vec![usize::MAX; group.degree()];
    for (i, &p) in sorted.iter().enumerate() {
        pos_of[p] = i;
    }
    let mut rhs_cols: Vec<Vec<crate::linalg::Rational>> =
        Vec::with_capacity(f * group.generators().len());
    for g in group.generators() {
        for t in &tableaux {
            let moved: Vec<Vec<usize>> = t
                .iter()
                .map(|row| row.iter().map(|&v| pos_of[g.apply(sorted[v])]).collect())
                .collect();
            let poly = polytabloid(&moved, shape, &sign_perms, &index);
            let mut col = vec![crate::linalg::q(0); keys.len()];
            for (idx, coeff) in poly {
                col[idx] = crate::linalg::q(coeff);
            }
            rhs_cols.push(col);
        }
    }
    let rhs = Matrix::from_columns(&rhs_cols)?;
    let solved = basis.solve_exact(&rhs)?;
    let mut gen_mats = Vec::with_capacity(group.generators().len());
    for gi in 0..group.generators().len() {
        let cols: Vec<Vec<crate::linalg::Rational>> =
            (0..f).map(|j| solved.column(gi * f + j)).collect();
        gen_mats.push(Matrix::from_columns(&cols)?);
    }
    PartialRep::global_from_generator_mats(Arc::clone(group), gen_mats)
}

/// The minimal module of the shape over the symmetric group on its size.
pub fn specht_rep(shape: &Partition) -> Result<PartialRep> {
    let m = shape.size();
    let group = FiniteGroup::symmetric(m.max(1))?;
    let letters: Vec<usize> = (0..m.max(1)).collect();
    if m == 0 {
        return Ok(PartialRep::trivial(group, 1));
    }
    specht_on(shape, &group, &letters)
}

/// The ambient data for the partial representation theory of `S_n` over
/// the stabilizer of the first point: the group, the stabilizer, and its
/// coset space (cosets correspond to the image of the first point).
pub struct SnContext {
    n: usize,
    group: Arc<FiniteGroup>,
    subgroup: Arc<FiniteGroup>,
    cosets: Arc<CosetSpace>,
}

impl SnContext {
    pub fn new(n: usize) -> Result<SnContext> {
        if n < 2 {
            return Err(Error::InvalidInput(
                "the context needs at least two points".into(),
            ));
        }
        let group = FiniteGroup::symmetric(n)?;
        let subgroup = FiniteGroup::point_stabilizer(&group, 0);
        let cosets = CosetSpace::left_cosets(&group, &subgroup)?;
        Ok(SnContext {
            n,
            group,
            subgroup,
            cosets,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn subgroup(&self) -> &Arc<FiniteGroup> {
        &self.subgroup
    }

    pub fn cosets(&self) -> &Arc<CosetSpace> {
        &self.cosets
    }

    /// The union of the cosets whose representatives send the first point
    /// into `{0..k}`: the canonical base object with `k` cosets.
    pub fn a_k(&self, k: usize) -> Result<HCosetSubset> {
        if k == 0 || k > self.n {
            return Err(Error::InvalidInput(format!(
                "k = {k} out of range 1..={}",
                self.n
            )));
        }
        let mut mask = 0u64;
        for c in 0..self.cosets.index() {
            if self.cosets.rep(c).apply(0) < k {
                mask |= 1 << c;
            }
        }
        HCosetSubset::from_mask(&self.cosets, mask)
    }

    /// The setwise stabilizer of `{0..k}`, i.e. `S_k × S_{n-k}`.
    pub fn young_subgroup(&self, k: usize) -> Arc<FiniteGroup> {
        let points: Vec<usize> = (0..k).collect();
        FiniteGroup::set_stabilizer(&self.group, &points)
    }

    /// The tensor product module `V_lambda ⊗ V_mu` over the stabilizer of
    /// the base object with `k = |lambda|` cosets.
    pub fn tensor_module(&self, label: &BiPartitionLabel) -> Result<PartialRep> {
        if label.n() != self.n {
            return Err(Error::ContextMismatch(format!(
                "label {label} in a context on {} points",
                self.n
            )));
        }
        let k = label.k();
        let a = self.a_k(k)?;
        let k_group = coset_set_stabilizer(&a);
        if !k_group.same_element_set(&self.young_subgroup(k)) {
            return Err(Error::OracleInconsistency(format!(
                "the stabilizer of {a} is not the expected product of symmetric groups"
            )));
        }
        let left_points: Vec<usize> = (0..k).collect();
        let right_points: Vec<usize> = (k..self.n).collect();
        let left_group = FiniteGroup::symmetric_on(k, self.n)?;
        let v_left = specht_on(label.left(), &left_group, &left_points)?;
        let right = if right_points.is_empty() {
            None
        } else {
            let mut gens = Vec::new();
            if right_points.len() >= 2 {
                gens.push(Permutation::transposition(self.n, k, k + 1));
            }
            if right_points.len() >= 3 {
                gens.push(Permutation::cycle(self.n, &right_points));
            }
            let right_group = FiniteGroup::from_generators(&gens, self.n)?;
            Some((
                specht_on(label.right(), &right_group, &right_points)?,
                right_group,
            ))
        };
        let mut mats = Vec::with_capacity(k_group.order());
        for g in k_group.elements() {
            let mut left_images: Vec<u16> = (0..self.n as u16).collect();
            for p in 0..k {
                left_images[p] = g.apply(p) as u16;
            }
            let left_part = Permutation::from_images(left_images)?;
            let left_idx = left_group.index_of(&left_part).ok_or_else(|| {
                Error::OracleInconsistency(format!("{g} does not preserve the first {k} points"))
            })?;
            let mut mat = v_left.mat(left_idx).clone();
            if let Some((v_right, right_group)) = &right {
                let mut right_images: Vec<u16> = (0..self.n as u16).collect();
                for p in k..self.n {
                    right_images[p] = g.apply(p) as u16;
                }
                let right_part = Permutation::from_images(right_images)?;
                let right_idx = right_group.index_of(&right_part).ok_or_else(|| {
                    Error::OracleInconsistency(format!(
                        "{g} does not preserve the last {} points",
                        self.n - k
                    ))
                })?;
                mat = mat.kronecker(v_right.mat(right_idx));
            }
            mats.push(mat);
        }
        PartialRep::new(k_group, mats)
    }

    /// The irreducible partial representation named by the label: the
    /// tensor module of its two partitions, induced along the base object
    /// with `k` cosets.  Its dimension is `C(n-1,k-1)·f^lambda·f^mu`.
    pub fn sn_irreducible(&self, label: &BiPartitionLabel) -> Result<DecoratedRep> {
        let a = self.a_k(label.k())?;
        let w = self.tensor_module(label)?;
        let ind = ind_a(&a, &w)?;
        if ind.dim() as u128 != label.dim() {
            return Err(Error::OracleInconsistency(format!(
                "induced dimension {} but label {label} promises {}",
                ind.dim(),
                label.dim()
            )));
        }
        Ok(ind)
    }

    /// The minimal module of a shape of size `n-1` over the stabilizer
    /// subgroup, acting on the letters it permutes.
    pub fn h_irreducible(&self, nu: &Partition) -> Result<PartialRep> {
        if nu.size() + 1 != self.n {
            return Err(Error::InvalidInput(format!(
                "shape {nu} does not have size {}",
                self.n - 1
            )));
        }
        let letters: Vec<usize> = (1..self.n).collect();
        specht_on(nu, &self.subgroup, &letters)
    }

    /// Decomposition of the restriction of the labelled representation to
    /// the stabilizer subgroup: multiplicity of each shape `nu` of size
    /// `n-1` is the sum of `c^nu_{lambda', mu}` over one-corner removals
    /// `lambda'` of `lambda`.
    pub fn sn_restriction_decomp(
        &self,
        label: &BiPartitionLabel,
    ) -> Result<Vec<(Partition, u64)>> {
        if label.n() != self.n {
            return Err(Error::ContextMismatch(format!(
                "label {label} in a context on {} points",
                self.n
            )));
        }
        let covers = label.left().young_covers();
        let mut out = Vec::new();
        for nu in partitions_of(self.n - 1) {
            let mut d = 0u64;
            for cover in &covers {
                d += lr_coefficient(cover, label.right(), &nu)?;
            }
            if d > 0 {
                out.push((nu, d));
            }
        }
        Ok(out)
    }

    /// The same decomposition computed from characters alone: the trace
    /// of the induced representation on each subgroup element via the
    /// block formula, paired against the recursive characters of the
    /// stabilizer's shapes.  No matrices are built.
    pub fn restriction_character_decomp(
        &self,
        label: &BiPartitionLabel,
    ) -> Result<Vec<(Partition, u64)>> {
        if label.n() != self.n {
            return Err(Error::ContextMismatch(format!(
                "label {label} in a context on {} points",
                self.n
            )));
        }
        let k = label.k();
        let a = self.a_k(k)?;
        let young = self.young_subgroup(k);
        let parent = &self.group;
        let mut members = vec![false; parent.order()];
        for i in a.inverse_element_indices() {
            members[i] = true;
        }
        let blocks = left_coset_blocks(parent, &young, &members)?;
        let mut first_points = vec![false; self.n];
        for p in 0..k {
            first_points[p] = true;
        }
        let left_points: Vec<usize> = (0..k).collect();
        let right_points: Vec<usize> = (k..self.n).collect();
        let h_indices = parent.embed_indices(&self.subgroup)?;
        let mut traces: Vec<i64> = Vec::with_capacity(h_indices.len());
        for &h in &h_indices {
            let mut total: i64 = 0;
            for &t in &blocks {
                let conj_idx = parent
                    .product_index(parent.product_index(parent.inverse_index(t), h), t);
                let conj = parent.element(conj_idx);
                if !conj.preserves(&first_points) {
                    continue;
                }
                let left_type = Partition::cycle_type_on(conj, &left_points);
                let right_type = Partition::cycle_type_on(conj, &right_points);
                total += mn_character(label.left(), &left_type)?
                    * mn_character(label.right(), &right_type)?;
            }
            traces.push(total);
        }
        let stab_points: Vec<usize> = (1..self.n).collect();
        let order = h_indices.len() as i64;
        let mut out = Vec::new();
        for nu in partitions_of(self.n - 1) {
            let mut sum: i64 = 0;
            for (&h, &tr) in h_indices.iter().zip(&traces) {
                let class = Partition::cycle_type_on(parent.element(h), &stab_points);
                sum += tr * mn_character(&nu, &class)?;
            }
            if sum % order != 0 || sum < 0 {
                return Err(Error::OracleInconsistency(format!(
                    "character pairing {sum}/{order} for {nu} is not a nonnegative integer"
                )));
            }
            let d = (sum / order) as u64;
            if d > 0 {
                out.push((nu, d));
            }
        }
        Ok(out)
    }

    /// The labels of size `n-1` appearing when the labelled representation
    /// is restricted to the symmetric group on one point fewer: remove a
    /// corner from either partition (dropping removals that would empty
    /// the first one).  Each summand appears once.
    pub fn sn_branching(&self, label: &BiPartitionLabel) -> Result<Vec<BiPartitionLabel>> {
        if label.n() != self.n {
            return Err(Error::ContextMismatch(format!(
                "label {label} in a context on {} points",
                self.n
            )));
        }
        let mut out = Vec::new();
        for cover in label.left().young_covers() {
            if !cover.is_empty() {
                out.push(BiPartitionLabel::new(cover, label.right().clone())?);
            }
        }
        for cover in label.right().young_covers() {
            out.push(BiPartitionLabel::new(label.left().clone(), cover)?);
        }
        let total: u128 = out.iter().map(|b| b.dim()).sum();
        if total != label.dim() {
            return Err(Error::OracleInconsistency(format!(
                "branches of {label} have total dimension {total}, not {}",
                label.dim()
            )));
        }
        Ok(out)
    }

    /// Branches the label and certifies the answer against explicit
    /// matrices: at every group element fixing the last point, the trace
    /// of the label's module equals the sum of the branch modules'
    /// traces at the dropped-point relabeling.  Returns the branch
    /// labels on success, `OracleInconsistency` with the offending
    /// element otherwise.
    pub fn verify_branching(&self, label: &BiPartitionLabel) -> Result<Vec<BiPartitionLabel>> {
        let branches = self.sn_branching(label)?;
        let small = SnContext::new(self.n - 1)?;
        let big = self.sn_irreducible(label)?;
        let last_stab = FiniteGroup::point_stabilizer(self.group(), self.n - 1);
        let mut built = BTreeMap::new();
        for b in &branches {
            if !built.contains_key(b) {
                built.insert(b.clone(), small.sn_irreducible(b)?);
            }
        }
        for g in last_stab.elements() {
            let lhs = big
                .rep()
                .mat_of(g)
                .ok_or_else(|| {
                    Error::ContextMismatch(format!("{g} missing from the parent group"))
                })?
                .trace();
            let dropped = Permutation::from_images(
                (0..self.n as u16 - 1)
                    .map(|p| g.apply(p as usize) as u16)
                    .collect(),
            )?;
            let idx = small.group().index_of(&dropped).ok_or_else(|| {
                Error::ContextMismatch(format!("{dropped} missing from the smaller group"))
            })?;
            let rhs = branches
                .iter()
                .map(|b| built[b].rep().mat(idx).trace())
                .fold(crate::linalg::q(0), |acc, t| acc + t);
            if lhs != rhs {
                return Err(Error::OracleInconsistency(format!(
                    "label {label} at {g}: restricted trace {lhs} differs from branch sum {rhs}"
                )));
            }
        }
        Ok(branches)
    }

    /// Decomposition of the partial induction of the stabilizer's module
    /// of shape `nu` (of size `n-1`): each label receives the same
    /// multiplicity its restriction gives `nu`.
    pub fn sn_pind_decomp(&self, nu: &Partition) -> Result<Vec<(BiPartitionLabel, u64)>> {
        if nu.size() + 1 != self.n {
            return Err(Error::InvalidInput(format!(
                "shape {nu} does not have size {}",
                self.n - 1
            )));
        }
        let mut out = Vec::new();
        for label in labels_of(self.n) {
            let mut d = 0u64;
            for cover in label.left().young_covers() {
                d += lr_coefficient(&cover, label.right(), nu)?;
            }
            if d > 0 {
                out.push((label, d));
            }
        }
        let total: u128 = out.iter().map(|(l, d)| l.dim() * *d as u128).sum();
        let expected: u128 = nu.syt_count()
            * (1..=self.n as u128)
                .map(|k| binomial(self.n as u128 - 1, k - 1) * k)
                .sum::<u128>();
        if total != expected {
            return Err(Error::OracleInconsistency(format!(
                "partial induction of {nu} decomposes into total dimension {total}, expected {expected}"
            )));
        }
        Ok(out)
    }

    /// The block decomposition of the groupoid algebra of `S_n` over the
    /// stabilizer, computed in closed form: one component per coset count
    /// `k`, with multiplicity `C(n-1,k-1)` over the product group
    /// `S_k × S_{n-k}`.  The total dimension identity
    /// `Σ C(n-1,k-1)²·k!·(n-k)! = 2^(n-2)·(n! + (n-1)!)` is verified.
    pub fn algebra_report(&self) -> Result<DecompositionReport> {
        let n = self.n as u128;
        let mut components = Vec::with_capacity(self.n);
        let mut total: u128 = 0;
        for k in 1..=self.n {
            let m = binomial(n - 1, k as u128 - 1);
            let order = factorial(k as u128) * factorial(n - k as u128);
            total += m * m * order;
            components.push(ComponentSummary {
                k,
                m: m as usize,
                isotropy_order: order as usize,
                isotropy_generators: self
                    .young_subgroup(k)
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect(),
            });
        }
        let expected = (1u128 << (self.n - 2)) * (factorial(n) + factorial(n - 1));
        if total != expected {
            return Err(Error::OracleInconsistency(format!(
                "component dimensions sum to {total}, expected {expected}"
            )));
        }
        Ok(DecompositionReport {
            components,
            total_dim: total,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induction::{frobenius_check, partial_hom_dim};
    use crate::linalg::q;
    use crate::partial::{check_h_global, check_partial_axioms};

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn label(s: &str) -> BiPartitionLabel {
        BiPartitionLabel::parse(s).unwrap()
    }

    #[test]
    fn partition_parsing_and_printing() {
        assert_eq!(p("[3,1,1]").parts(), &[3, 1, 1]);
        assert_eq!(p("[3,1,1]").to_string(), "[3,1,1]");
        assert_eq!(p("[]").to_string(), "[]");
        assert_eq!(p("[]").size(), 0);
        assert!(Partition::parse("[1,2]").is_err());
        assert!(Partition::parse("[0]").is_err());
        assert!(Partition::parse("3,1").is_err());
        assert_eq!(p(" [ 2 , 1 ] ").parts(), &[2, 1]);
    }

    #[test]
    fn partitions_are_enumerated_in_order() {
        let parts = partitions_of(4);
        let strings: Vec<String> = parts.iter().map(|q| q.to_string()).collect();
        assert_eq!(strings, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn hook_counts_match_known_values() {
        assert_eq!(p("[1]").syt_count(), 1);
        assert_eq!(p("[2,1]").syt_count(), 2);
        assert_eq!(p("[3,2]").syt_count(), 5);
        assert_eq!(p("[2,2,1]").syt_count(), 5);
        assert_eq!(p("[3,1,1]").syt_count(), 6);
        assert_eq!(p("[4,2]").syt_count(), 9);
        assert_eq!(p("[]").syt_count(), 1);
        // Row sums of squares: Σ (f^λ)² = n!.
        for n in 1..=8 {
            let total: u128 = partitions_of(n)
                .iter()
                .map(|q| q.syt_count() * q.syt_count())
                .sum();
            assert_eq!(total, factorial(n as u128));
        }
    }

    #[test]
    fn hook_counts_match_direct_enumeration() {
        for n in 1..=7 {
            for shape in partitions_of(n) {
                let listed = standard_tableaux(&shape).len() as u128;
                assert_eq!(listed, shape.syt_count(), "shape {shape}");
            }
        }
    }

    #[test]
    fn corner_removals() {
        let covers = p("[3,1,1]").young_covers();
        assert_eq!(covers, vec![p("[2,1,1]"), p("[3,1]")]);
        assert_eq!(p("[2,2]").young_covers(), vec![p("[2,1]")]);
        assert_eq!(p("[1]").young_covers(), vec![p("[]")]);
        // Removing corners and re-counting: Σ over covers of f = f for the
        // boundary recurrence of standard fillings.
        for n in 2..=7 {
            for shape in partitions_of(n) {
                let total: u128 = shape.young_covers().iter().map(|c| c.syt_count()).sum();
                assert_eq!(total, shape.syt_count());
            }
        }
    }

    #[test]
    fn recursive_characters_match_known_tables() {
        // χ^[2,1] on S_3: identity 2, transposition 0, 3-cycle -1.
        assert_eq!(mn_character(&p("[2,1]"), &p("[1,1,1]")).unwrap(), 2);
        assert_eq!(mn_character(&p("[2,1]"), &p("[2,1]")).unwrap(), 0);
        assert_eq!(mn_character(&p("[2,1]"), &p("[3]")).unwrap(), -1);
        // χ^[3,1] on S_4.
        assert_eq!(mn_character(&p("[3,1]"), &p("[1,1,1,1]")).unwrap(), 3);
        assert_eq!(mn_character(&p("[3,1]"), &p("[2,1,1]")).unwrap(), 1);
        assert_eq!(mn_character(&p("[3,1]"), &p("[2,2]")).unwrap(), -1);
        assert_eq!(mn_character(&p("[3,1]"), &p("[3,1]")).unwrap(), 0);
        assert_eq!(mn_character(&p("[3,1]"), &p("[4]")).unwrap(), -1);
        // χ^[2,2] on S_4.
        assert_eq!(mn_character(&p("[2,2]"), &p("[1,1,1,1]")).unwrap(), 2);
        assert_eq!(mn_character(&p("[2,2]"), &p("[2,1,1]")).unwrap(), 0);
        assert_eq!(mn_character(&p("[2,2]"), &p("[2,2]")).unwrap(), 2);
        assert_eq!(mn_character(&p("[2,2]"), &p("[3,1]")).unwrap(), -1);
        assert_eq!(mn_character(&p("[2,2]"), &p("[4]")).unwrap(), 0);
        // One-row and one-column shapes: trivial and sign characters.
        for class in partitions_of(5) {
            assert_eq!(mn_character(&p("[5]"), &class).unwrap(), 1);
            let transpositions: usize = class.parts().iter().map(|l| l - 1).sum();
            let sign = if transpositions % 2 == 0 { 1 } else { -1 };
            assert_eq!(mn_character(&p("[1,1,1,1,1]"), &class).unwrap(), sign);
        }
        // Identity column: the degree equals the standard-filling count.
        for n in 1..=7 {
            let ones = Partition::new(vec![1; n]).unwrap();
            for shape in partitions_of(n) {
                assert_eq!(
                    mn_character(&shape, &ones).unwrap() as u128,
                    shape.syt_count()
                );
            }
        }
        assert!(mn_character(&p("[2]"), &p("[3]")).is_err());
    }

    #[test]
    fn character_orthogonality() {
        // Rows of the character table of S_5 are orthonormal under the
        // class-size weighting — a strong whole-table consistency check.
        let n = 5usize;
        let shapes = partitions_of(n);
        let classes = partitions_of(n);
        let class_size = |class: &Partition| -> i64 {
            let mut z: i64 = 1;
            let mut mult = BTreeMap::new();
            for &part in class.parts() {
                *mult.entry(part).or_insert(0i64) += 1;
            }
            for (part, m) in mult {
                z *= (part as i64).pow(m as u32) * (1..=m).product::<i64>();
            }
            factorial(n as u128) as i64 / z
        };
        for a in &shapes {
            for b in &shapes {
                let sum: i64 = classes
                    .iter()
                    .map(|c| {
                        class_size(c)
                            * mn_character(a, c).unwrap()
                            * mn_character(b, c).unwrap()
                    })
                    .sum();
                let expected = if a == b { factorial(n as u128) as i64 } else { 0 };
                assert_eq!(sum, expected, "pairing of {a} and {b}");
            }
        }
    }

    #[test]
    fn tableau_counting_coefficients() {
        // Multiplying by a single box: one coefficient per corner added.
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[1]"), &p("[3,1]")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[1]"), &p("[2,2]")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[1]"), &p("[2,1,1]")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[1]"), &p("[4]")).unwrap(), 0);
        // Row and column multiplications.
        assert_eq!(lr_coefficient(&p("[2]"), &p("[2]"), &p("[2,2]")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("[2]"), &p("[1,1]"), &p("[2,2]")).unwrap(), 0);
        assert_eq!(lr_coefficient(&p("[2]"), &p("[1,1]"), &p("[3,1]")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[2]"), &p("[3,2]")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[1,1]"), &p("[3,2]")).unwrap(), 1);
        // The first coefficient exceeding one: [2,1] times itself.
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]")).unwrap(), 2);
        // Empty factors.
        assert_eq!(lr_coefficient(&p("[]"), &p("[2,1]"), &p("[2,1]")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("[]"), &p("[2,1]"), &p("[3]")).unwrap(), 0);
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[]"), &p("[2,1]")).unwrap(), 1);
        assert!(lr_coefficient(&p("[2]"), &p("[1]"), &p("[2]")).is_err());
        // Σ_ν c^ν_{λμ} f^ν relates the product to dimensions:
        // dim of the induced product module is C(|ν|, |λ|) f^λ f^μ.
        let lambda = p("[2,1]");
        let mu = p("[2]");
        let total: u128 = partitions_of(5)
            .iter()
            .map(|nu| {
                lr_coefficient(&lambda, &mu, nu).unwrap() as u128 * nu.syt_count()
            })
            .sum();
        assert_eq!(
            total,
            binomial(5, 3) * lambda.syt_count() * mu.syt_count()
        );
    }

    #[test]
    fn label_parsing_and_printing() {
        let l = label("([2,1],[1])@n=4");
        assert_eq!(l.left().parts(), &[2, 1]);
        assert_eq!(l.right().parts(), &[1]);
        assert_eq!(l.n(), 4);
        assert_eq!(l.k(), 3);
        assert_eq!(l.to_string(), "([2,1],[1])@n=4");
        let m = label("([3],[])@n=3");
        assert_eq!(m.right().parts(), &[] as &[usize]);
        assert_eq!(m.to_string(), "([3],[])@n=3");
        assert!(BiPartitionLabel::parse("([2,1],[1])@n=5").is_err());
        assert!(BiPartitionLabel::parse("([],[2])@n=2").is_err());
        assert!(BiPartitionLabel::parse("([2,1],[1])").is_err());
        // Dimensions: C(n-1,k-1)·f^λ·f^μ.
        assert_eq!(label("([2,1],[1])@n=4").dim(), 3 * 2 * 1);
        assert_eq!(label("([1],[2,1])@n=4").dim(), 1 * 1 * 2);
        assert_eq!(label("([2],[2])@n=4").dim(), 3);
        assert_eq!(labels_of(4).len(), 15);
    }

    #[test]
    fn one_column_and_one_row_modules() {
        let group = FiniteGroup::symmetric(4).unwrap();
        let letters = [0, 1, 2, 3];
        let trivial = specht_on(&p("[4]"), &group, &letters).unwrap();
        assert_eq!(trivial.dim(), 1);
        assert!(trivial.is_global_rep());
        let sign = specht_on(&p("[1,1,1,1]"), &group, &letters).unwrap();
        for i in 0..group.order() {
            assert_eq!(*sign.mat(i).get(0, 0), q(group.element(i).sign()));
        }
    }

    #[test]
    fn two_row_module_of_three_letters() {
        let group = FiniteGroup::symmetric(3).unwrap();
        let rep = specht_on(&p("[2,1]"), &group, &[0, 1, 2]).unwrap();
        assert_eq!(rep.dim(), 2);
        assert!(rep.is_global_rep());
        // Traces follow the recursive character values.
        for i in 0..group.order() {
            let class = Partition::new(group.element(i).cycle_type()).unwrap();
            let expected = mn_character(&p("[2,1]"), &class).unwrap();
            assert_eq!(rep.mat(i).trace(), q(expected));
        }
    }

    #[test]
    fn module_traces_match_recursive_characters() {
        for n in 3..=5 {
            let group = FiniteGroup::symmetric(n).unwrap();
            let letters: Vec<usize> = (0..n).collect();
            for shape in partitions_of(n) {
                let rep = specht_on(&shape, &group, &letters).unwrap();
                assert_eq!(rep.dim() as u128, shape.syt_count(), "dim of {shape}");
                for i in 0..group.order() {
                    let class = Partition::new(group.element(i).cycle_type()).unwrap();
                    assert_eq!(
                        rep.mat(i).trace(),
                        q(mn_character(&shape, &class).unwrap()),
                        "trace of {shape} at {}",
                        group.element(i)
                    );
                }
            }
        }
    }

    #[test]
    fn modules_on_shifted_letters() {
        // The stabilizer of the first point in S_4 is a symmetric group on
        // the last three letters.
        let group = FiniteGroup::symmetric(4).unwrap();
        let stab = FiniteGroup::point_stabilizer(&group, 0);
        let rep = specht_on(&p("[2,1]"), &stab, &[1, 2, 3]).unwrap();
        assert_eq!(rep.dim(), 2);
        for i in 0..stab.order() {
            let class = Partition::cycle_type_on(stab.element(i), &[1, 2, 3]);
            assert_eq!(
                rep.mat(i).trace(),
                q(mn_character(&p("[2,1]"), &class).unwrap())
            );
        }
        // Letters not matching the group's support are rejected.
        assert!(specht_on(&p("[2,1]"), &stab, &[0, 1, 2]).is_err());
        assert!(specht_on(&p("[2,1]"), &stab, &[1, 2]).is_err());
    }

    #[test]
    fn base_objects_grow_with_k() {
        let ctx = SnContext::new(3).unwrap();
        assert_eq!(ctx.a_k(1).unwrap().mask(), 0b001);
        assert_eq!(ctx.a_k(2).unwrap().coset_count(), 2);
        assert_eq!(ctx.a_k(3).unwrap().mask(), 0b111);
        assert!(ctx.a_k(0).is_err());
        assert!(ctx.a_k(4).is_err());
        for k in 1..=3 {
            let stab = coset_set_stabilizer(&ctx.a_k(k).unwrap());
            assert_eq!(stab.order(), factorial(k as u128) as usize * factorial(3 - k as u128) as usize);
        }
    }

    #[test]
    fn tensor_modules_have_product_dimensions() {
        let ctx = SnContext::new(4).unwrap();
        let w = ctx.tensor_module(&label("([2,1],[1])@n=4")).unwrap();
        assert_eq!(w.dim(), 2);
        assert!(w.is_global_rep());
        assert_eq!(w.group().order(), 6);
        let w = ctx.tensor_module(&label("([2],[2])@n=4")).unwrap();
        assert_eq!(w.dim(), 1);
        assert_eq!(w.group().order(), 4);
        let w = ctx.tensor_module(&label("([2,2],[])@n=4")).unwrap();
        assert_eq!(w.dim(), 2);
        assert_eq!(w.group().order(), 24);
    }

    #[test]
    fn irreducible_dimensions_for_three_points() {
        let ctx = SnContext::new(3).unwrap();
        let mut total = 0usize;
        let expected: Vec<(&str, usize)> = vec![
            ("([1],[2])@n=3", 1),
            ("([1],[1,1])@n=3", 1),
            ("([2],[1])@n=3", 2),
            ("([1,1],[1])@n=3", 2),
            ("([3],[])@n=3", 1),
            ("([2,1],[])@n=3", 2),
            ("([1,1,1],[])@n=3", 1),
        ];
        for (name, dim) in &expected {
            let ind = ctx.sn_irreducible(&label(name)).unwrap();
            assert_eq!(ind.dim(), *dim, "{name}");
            assert!(check_partial_axioms(ind.rep()).is_empty());
            assert!(check_h_global(ind.rep(), ctx.subgroup()).unwrap());
            total += dim * dim;
        }
        // Squares sum to the arrow count of the groupoid: 2^(r-2)(|G|+|H|).
        assert_eq!(total, 16);
    }

    #[test]
    fn labelled_representations_are_irreducible_and_distinct() {
        let ctx = SnContext::new(3).unwrap();
        let reps: Vec<_> = labels_of(3)
            .iter()
            .map(|l| ctx.sn_irreducible(l).unwrap())
            .collect();
        for (i, a) in reps.iter().enumerate() {
            assert_eq!(
                partial_hom_dim(a.rep(), a.rep(), ctx.cosets()).unwrap(),
                1
            );
            for b in reps.iter().take(i) {
                assert_eq!(partial_hom_dim(a.rep(), b.rep(), ctx.cosets()).unwrap(), 0);
            }
        }
    }

    #[test]
    fn restriction_rule_matches_characters() {
        for n in 3..=5 {
            let ctx = SnContext::new(n).unwrap();
            for l in labels_of(n) {
                let by_rule = ctx.sn_restriction_decomp(&l).unwrap();
                let by_characters = ctx.restriction_character_decomp(&l).unwrap();
                assert_eq!(by_rule, by_characters, "label {l}");
                // The multiplicities exhaust the dimension.
                let total: u128 = by_rule
                    .iter()
                    .map(|(nu, d)| nu.syt_count() * *d as u128)
                    .sum();
                assert_eq!(total, l.dim(), "dimension at {l}");
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let ctx = SnContext::new(3).unwrap();
        assert_eq!(
            ctx.sn_restriction_decomp(&label("([2],[1])@n=3")).unwrap(),
            vec![(p("[2]"), 1), (p("[1,1]"), 1)]
        );
        assert_eq!(
            ctx.sn_restriction_decomp(&label("([1],[2])@n=3")).unwrap(),
            vec![(p("[2]"), 1)]
        );
        let ctx4 = SnContext::new(4).unwrap();
        assert_eq!(
            ctx4.sn_restriction_decomp(&label("([2,1],[1])@n=4")).unwrap(),
            vec![(p("[3]"), 1), (p("[2,1]"), 2), (p("[1,1,1]"), 1)]
        );
    }

    #[test]
    fn branching_removes_one_corner() {
        let ctx = SnContext::new(3).unwrap();
        let branches = ctx.sn_branching(&label("([2],[1])@n=3")).unwrap();
        assert_eq!(
            branches,
            vec![label("([1],[1])@n=2"), label("([2],[])@n=2")]
        );
        // k = n: only the first partition loses corners.
        let branches = ctx.sn_branching(&label("([2,1],[])@n=3")).unwrap();
        assert_eq!(
            branches,
            vec![label("([1,1],[])@n=2"), label("([2],[])@n=2")]
        );
        // k = 1: only the second partition loses corners.
        let branches = ctx.sn_branching(&label("([1],[2])@n=3")).unwrap();
        assert_eq!(branches, vec![label("([1],[1])@n=2")]);
    }

    #[test]
    fn branching_matches_restricted_traces() {
        // Restrict each labelled representation of S_4 to the copy of S_3
        // fixing the last point and compare traces against the branches
        // built one point lower.
        let n = 4;
        let ctx = SnContext::new(n).unwrap();
        let small = SnContext::new(n - 1).unwrap();
        let last_stab = FiniteGroup::point_stabilizer(ctx.group(), n - 1);
        for l in labels_of(n) {
            let big = ctx.sn_irreducible(&l).unwrap();
            let branches = ctx.sn_branching(&l).unwrap();
            let branch_reps: Vec<_> = branches
                .iter()
                .map(|b| small.sn_irreducible(b).unwrap())
                .collect();
            for g in last_stab.elements() {
                let lhs = big.rep().mat_of(g).unwrap().trace();
                let dropped = Permutation::from_images(
                    (0..n as u16 - 1).map(|p| g.apply(p as usize) as u16).collect(),
                )
                .unwrap();
                let small_idx = small.group().index_of(&dropped).unwrap();
                let rhs = branch_reps
                    .iter()
                    .map(|r| r.rep().mat(small_idx).trace())
                    .fold(q(0), |acc, t| acc + t);
                assert_eq!(lhs, rhs, "label {l} at {g}");
            }
        }
    }

    #[test]
    fn partial_induction_decomposition() {
        let ctx = SnContext::new(3).unwrap();
        let decomp = ctx.sn_pind_decomp(&p("[2]")).unwrap();
        let expected: Vec<(BiPartitionLabel, u64)> = vec![
            (label("([1],[2])@n=3", ), 1),
            (label("([2],[1])@n=3"), 1),
            (label("([1,1],[1])@n=3"), 1),
            (label("([3],[])@n=3"), 1),
            (label("([2,1],[])@n=3"), 1),
        ];
        assert_eq!(decomp, expected);
        // Total dimension: f^ν Σ_k C(n-1,k-1)k = 1·(1+4+3) = 8.
        let total: u128 = decomp.iter().map(|(l, d)| l.dim() * *d as u128).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn adjunction_counts_match_the_rule() {
        let ctx = SnContext::new(3).unwrap();
        for nu in partitions_of(2) {
            let w = ctx.h_irreducible(&nu).unwrap();
            let decomp: BTreeMap<BiPartitionLabel, u64> =
                ctx.sn_pind_decomp(&nu).unwrap().into_iter().collect();
            for l in labels_of(3) {
                let u = ctx.sn_irreducible(&l).unwrap();
                let (left, right) = frobenius_check(&w, u.rep(), ctx.cosets()).unwrap();
                let expected = decomp.get(&l).copied().unwrap_or(0) as usize;
                assert_eq!(left, expected, "{nu} into {l}");
                assert_eq!(right, expected, "{nu} into {l}");
            }
        }
    }

    #[test]
    fn edge_labels_have_the_expected_support() {
        let ctx = SnContext::new(4).unwrap();
        // k = 1: the representation acts as zero on every permutation
        // moving the first point, and as the second factor on the rest.
        let ind = ctx.sn_irreducible(&label("([1],[2,1])@n=4")).unwrap();
        for (i, g) in ctx.group().elements().iter().enumerate() {
            assert_eq!(ind.rep().mat(i).is_zero(), g.apply(0) != 0, "{g}");
        }
        // k = n: the top labels are global representations.
        let ind = ctx.sn_irreducible(&label("([2,2],[])@n=4")).unwrap();
        assert!(ind.rep().is_global_rep());
        assert_eq!(ind.dim(), 2);
    }

    #[test]
    fn closed_form_report_matches_the_identity() {
        let ctx = SnContext::new(4).unwrap();
        let report = ctx.algebra_report().unwrap();
        assert_eq!(report.total_dim, 120);
        let ms: Vec<usize> = report.components.iter().map(|c| c.m).collect();
        assert_eq!(ms, vec![1, 3, 3, 1]);
        let orders: Vec<usize> = report.components.iter().map(|c| c.isotropy_order).collect();
        assert_eq!(orders, vec![6, 4, 6, 24]);
        // Pure arithmetic form of the identity for a range of sizes.
        for n in 2u128..=12 {
            let lhs: u128 = (1..=n)
                .map(|k| binomial(n - 1, k - 1).pow(2) * factorial(k) * factorial(n - k))
                .sum();
            assert_eq!(lhs, (1 << (n - 2)) * (factorial(n) + factorial(n - 1)));
        }
    }

    #[test]
    fn closed_form_report_matches_the_groupoid() {
        use crate::groupoid::{decomposition_report, Groupoid};
        for n in 2..=5 {
            let ctx = SnContext::new(n).unwrap();
            let closed = ctx.algebra_report().unwrap();
            let groupoid = Groupoid::build(ctx.cosets(), None).unwrap();
            let enumerated = decomposition_report(&groupoid).unwrap();
            assert_eq!(closed.total_dim, enumerated.total_dim);
            assert_eq!(closed.components.len(), enumerated.components.len());
            for (a, b) in closed.components.iter().zip(&enumerated.components) {
                assert_eq!(a.k, b.k);
                assert_eq!(a.m, b.m);
                assert_eq!(a.isotropy_order, b.isotropy_order);
            }
        }
    }
}
