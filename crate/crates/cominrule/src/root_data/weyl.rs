//! Weyl group elements as words in simple reflections, with the induced
//! action on roots, inversion sets, and Bruhat order via the subword test.

use super::roots::{Root, RootSystem};
use crate::error::{Error, Result};

/// A Weyl group element, stored as a word in simple-reflection indices.
/// Words produced by this module are reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn simple(i: usize) -> Self {
        WeylElement { word: vec![i] }
    }

    pub fn inverse(&self) -> Self {
        WeylElement {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Concatenation `self * other` (apply `other` first under the action).
    pub fn compose(&self, other: &WeylElement) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { word }
    }

    /// Action on a root: the word acts right-to-left.
    pub fn act(&self, rs: &RootSystem, r: &Root) -> Root {
        let mut out = r.clone();
        for &i in self.word.iter().rev() {
            out = rs.reflect_simple(&out, i);
        }
        out
    }

    /// Indices (into `rs.positive_roots`) of positive roots sent negative.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.num_positive())
            .filter(|&k| self.act(rs, &rs.positive_roots[k]).is_negative())
            .collect()
    }

    /// Coxeter length, computed as the inversion count.
    pub fn length(&self, rs: &RootSystem) -> usize {
        self.inversion_set(rs).len()
    }

    /// Right descents: simple roots sent negative.
    pub fn descents(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.rank)
            .filter(|&i| self.act(rs, &Root::simple(rs.rank, i)).is_negative())
            .collect()
    }

    /// Images of all simple roots; a canonical identity key for the element.
    pub fn simple_images(&self, rs: &RootSystem) -> Vec<Vec<i32>> {
        (0..rs.rank)
            .map(|i| self.act(rs, &Root::simple(rs.rank, i)).coeffs)
            .collect()
    }
}

/// Reconstructs the unique `w` with inversion set `set` (given as indices of
/// positive roots). Fails if `set` is not an inversion set.
pub fn element_with_inversion_set(rs: &RootSystem, set: &[usize]) -> Result<WeylElement> {
    let mut current: Vec<Root> = set.iter().map(|&k| rs.positive_roots[k].clone()).collect();
    let mut word_rev: Vec<usize> = Vec::new();
    while !current.is_empty() {
        // some simple root must lie in the set
        let i = (0..rs.rank)
            .find(|&i| current.iter().any(|r| r.coeffs == Root::simple(rs.rank, i).coeffs))
            .ok_or(Error::NotInversionSet)?;
        let simple = Root::simple(rs.rank, i);
        let next: Vec<Root> = current
            .iter()
            .filter(|r| r.coeffs != simple.coeffs)
            .map(|r| rs.reflect_simple(r, i))
            .collect();
        if next.iter().any(|r| !r.is_positive()) {
            return Err(Error::NotInversionSet);
        }
        word_rev.push(i);
        current = next;
    }
    // built from the inside out: w = w' s_i at each step
    let word: Vec<usize> = word_rev.into_iter().rev().collect();
    let w = WeylElement { word };
    debug_assert_eq!(w.length(rs), set.len());
    Ok(w)
}

/// Bruhat order on the full Weyl group via the subword property: the lower
/// interval of `v` is exactly the set of subword products of a reduced word.
pub fn bruhat_leq(rs: &RootSystem, u: &WeylElement, v: &WeylElement) -> bool {
    use std::collections::HashSet;
    let target = u.simple_images(rs);
    let mut set: HashSet<Vec<Vec<i32>>> = HashSet::new();
    set.insert(WeylElement::identity().simple_images(rs));
    for &i in &v.word {
        let extra: Vec<Vec<Vec<i32>>> = set
            .iter()
            .map(|images| {
                // images of x*s_i from images of x: (x s_i)(a_j) = x(s_i a_j)
                (0..rs.rank)
                    .map(|j| {
                        let sij = rs.reflect_simple(&Root::simple(rs.rank, j), i);
                        let mut out = vec![0; rs.rank];
                        for (k, c) in sij.coeffs.iter().enumerate() {
                            for (t, v) in images[k].iter().enumerate() {
                                out[t] += c * v;
                            }
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        set.extend(extra);
    }
    set.contains(&target)
}
