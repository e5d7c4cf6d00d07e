//! Permutations of `{1, …, n}` in image form, with cycle-notation parsing
//! and printing.  Points are 0-based internally and 1-based in notation.

use crate::{caps, Error, Result};
use std::fmt;

/// A permutation of `{0, …, degree-1}`, stored by its image vector.
///
/// The derived `Ord` compares image vectors lexicographically, which is the
/// order used whenever a canonical coset representative is needed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image vector (`images[p]` is the image
    /// of point `p`), validating that it is a bijection.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        if images.len() > caps::MAX_DEGREE {
            return Err(Error::TooLarge(format!(
                "degree {} exceeds cap {}",
                images.len(),
                caps::MAX_DEGREE
            )));
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if (i as usize) >= images.len() || seen[i as usize] {
                return Err(Error::InvalidInput(format!(
                    "image vector {:?} is not a bijection",
                    images
                )));
            }
            seen[i as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `"(1 2)(3 4)"` or `"(1,2,3)"`.
    /// `"id"`, `"e"`, `"()"` and the empty string denote the identity.
    /// The degree is the larger of `min_degree` and the largest point named.
    pub fn from_cycles(s: &str, min_degree: usize) -> Result<Self> {
        let s = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        if !(s.is_empty() || s == "id" || s == "e" || s == "()") {
            let mut rest = s;
            while !rest.is_empty() {
                rest = rest.trim_start();
                if rest.is_empty() {
                    break;
                }
                if !rest.starts_with('(') {
                    return Err(Error::InvalidInput(format!("bad cycle notation: {s:?}")));
                }
                let close = rest
                    .find(')')
                    .ok_or_else(|| Error::InvalidInput(format!("unclosed cycle in {s:?}")))?;
                let body = &rest[1..close];
                let cycle: Vec<usize> = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::InvalidInput(format!("bad point {t:?} in {s:?}")))
                    })
                    .collect::<Result<_>>()?;
                if cycle.iter().any(|&p| p == 0) {
                    return Err(Error::InvalidInput(format!(
                        "points are 1-based, got 0 in {s:?}"
                    )));
                }
                cycles.push(cycle);
                rest = &rest[close + 1..];
            }
        }
        let degree = cycles
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0)
            .max(min_degree);
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut moved = vec![false; degree];
        for cycle in &cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                if moved[from] {
                    return Err(Error::InvalidInput(format!(
                        "point {} repeated in {s:?}",
                        from + 1
                    )));
                }
                moved[from] = true;
                images[from] = to as u16;
            }
        }
        Permutation::from_images(images)
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The cycle `p_0 → p_1 → … → p_k → p_0` on the given 0-based points.
    pub fn cycle(degree: usize, points: &[usize]) -> Self {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for w in 0..points.len() {
            images[points[w]] = points[(w + 1) % points.len()] as u16;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &i)| p as u16 == i)
    }

    /// Function composition: `(self ∘ other)(p) = self(other(p))`, i.e.
    /// `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (p, &i) in self.images.iter().enumerate() {
            images[i as usize] = p as u16;
        }
        Permutation { images }
    }

    /// Unordered cycle lengths (including fixed points), longest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycle_type_on(&(0..self.degree()).collect::<Vec<_>>())
    }

    /// Cycle lengths of the restriction to an invariant point set.
    pub fn cycle_type_on(&self, points: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for &start in points {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.apply(p);
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.cycle_type().iter().map(|l| l - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether the permutation maps the given point set into itself.
    pub fn preserves(&self, points: &[bool]) -> bool {
        points
            .iter()
            .enumerate()
            .all(|(p, &inside)| !inside || points[self.apply(p)])
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation with 1-based points; the identity prints as
    /// `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.apply(p);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_cycles() {
        let p = Permutation::from_cycles("(1 2)(3 4)", 0).unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 3);
        assert_eq!(p.to_string(), "(1 2)(3 4)");

        let q = Permutation::from_cycles("(1,2,3)", 5).unwrap();
        assert_eq!(q.degree(), 5);
        assert_eq!(q.to_string(), "(1 2 3)");

        assert!(Permutation::from_cycles("id", 3).unwrap().is_identity());
        assert!(Permutation::from_cycles("(1 1 2)", 0).is_err());
        assert!(Permutation::from_cycles("(0 1)", 0).is_err());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // (1 2) ∘ (2 3) sends 3 → 2 → 1.
        let a = Permutation::from_cycles("(1 2)", 3).unwrap();
        let b = Permutation::from_cycles("(2 3)", 3).unwrap();
        let c = a.compose(&b);
        assert_eq!(c.apply(2), 0);
        assert_eq!(c.to_string(), "(1 2 3)");
    }

    #[test]
    fn inverse_and_sign() {
        let p = Permutation::from_cycles("(1 2 3)(4 5)", 5).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.sign(), -1);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        let q = Permutation::from_cycles("(1 3 2)", 3).unwrap();
        assert_eq!(q.sign(), 1);
    }

    #[test]
    fn cycle_type_on_subset() {
        // Restriction of (2 3)(4 5) to the points {2,…,5} has type [2,2];
        // as a permutation of all five points the type is [2,2,1].
        let p = Permutation::from_cycles("(2 3)(4 5)", 5).unwrap();
        assert_eq!(p.cycle_type_on(&[1, 2, 3, 4]), vec![2, 2]);
        assert_eq!(p.cycle_type(), vec![2, 2, 1]);
    }

    #[test]
    fn lexicographic_order_matches_image_vectors() {
        let id = Permutation::identity(3);
        let t12 = Permutation::from_cycles("(1 2)", 3).unwrap();
        let t13 = Permutation::from_cycles("(1 3)", 3).unwrap();
        assert!(id < t12);
        assert!(t12 < t13);
    }
}
