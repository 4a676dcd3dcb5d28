//! Planar grid coordinates for a box poset, found by constraint search.
//!
//! Each cover must be a unit step right or up. The raw constraint system is
//! satisfied by several assignments (tails of a chain may bend), so the
//! orientation is pinned by requiring a fixed set of column-count tuples per
//! space to parse as order ideals. The first assignment found in the
//! deterministic search order wins.

use super::poset::SpaceSpec;
use super::roots::Root;
use crate::error::{Error, Result};

/// Column tuples that must be realizable as ideals of the finished grid.
fn anchor_tuples(spec: SpaceSpec) -> Vec<Vec<u32>> {
    match spec {
        SpaceSpec::Gr { k, n } => vec![vec![k as u32], vec![1; n - k]],
        SpaceSpec::QB { n } => vec![vec![1; 2 * n - 1]],
        SpaceSpec::LG { n } => vec![(1..=n as u32).rev().collect()],
        SpaceSpec::QD { n } => {
            let mut full = vec![1u32; n - 3];
            full.extend_from_slice(&[2, 2]);
            full.extend(std::iter::repeat_n(1, n - 3));
            vec![full, vec![1; n - 1]]
        }
        SpaceSpec::OG { n } | SpaceSpec::OGmin { n } => vec![(1..n as u32).rev().collect()],
        SpaceSpec::E6 => vec![
            vec![1, 1, 2, 3, 1],
            vec![1, 1, 2, 1, 1],
            vec![1, 1, 2, 2, 1],
            vec![1, 1, 2, 4, 4, 1],
            vec![1, 1, 2, 3, 3, 1],
        ],
        SpaceSpec::E7 => vec![
            vec![1, 1, 1, 2, 3, 3, 1],
            vec![1, 1, 1, 2, 5, 3],
            vec![1, 1, 1, 2, 1],
            vec![1, 1, 1, 2, 5, 5, 2, 1, 1],
            vec![1, 1, 1, 2, 5, 5],
            vec![1, 1, 1, 2, 4, 3, 1],
            vec![1, 1, 1, 1, 1, 1],
            vec![1, 1, 1, 2, 5, 5, 3, 3],
        ],
        SpaceSpec::Pmin { n } => vec![vec![1; 2 * n - 1]],
    }
}

struct Search<'a> {
    n: usize,
    down_covers: &'a [Vec<usize>],
    leq: &'a [u32],
    anchors: Vec<Vec<u32>>,
    pos: Vec<(u32, u32)>,
    placed: usize,
    steps: u64,
}

const STEP_BUDGET: u64 = 50_000_000;

impl Search<'_> {
    fn occupied_by(&self, p: (u32, u32)) -> Option<usize> {
        self.pos[..self.placed].iter().position(|&q| q == p)
    }

    fn candidate_ok(&self, t: usize, p: (u32, u32)) -> bool {
        if self.occupied_by(p).is_some() {
            return false;
        }
        // every placed box one unit below p must be a lower cover of t,
        // and nothing placed may sit one unit above p
        for d in [(1u32, 0u32), (0, 1)] {
            if p.0 > d.0 && p.1 > d.1 {
                if let Some(q) = self.occupied_by((p.0 - d.0, p.1 - d.1)) {
                    if !self.down_covers[t].contains(&q) {
                        return false;
                    }
                }
            }
            if self.occupied_by((p.0 + d.0, p.1 + d.1)).is_some() {
                return false;
            }
        }
        true
    }

    fn run(&mut self, t: usize) -> Option<Vec<(u32, u32)>> {
        self.steps += 1;
        if self.steps > STEP_BUDGET {
            return None;
        }
        if t == self.n {
            if self.accept() {
                return Some(self.pos.clone());
            }
            return None;
        }
        let covers = &self.down_covers[t];
        let candidates: Vec<(u32, u32)> = match covers.len() {
            0 => {
                if t == 0 {
                    vec![(1, 1)]
                } else {
                    return None; // a second minimal box cannot be placed
                }
            }
            1 => {
                let p = self.pos[covers[0]];
                vec![(p.0 + 1, p.1), (p.0, p.1 + 1)]
            }
            _ => {
                let col = covers.iter().map(|&c| self.pos[c].0).max().unwrap();
                let row = covers.iter().map(|&c| self.pos[c].1).max().unwrap();
                let joined = covers.iter().all(|&c| {
                    let q = self.pos[c];
                    (col - q.0, row - q.1) == (1, 0) || (col - q.0, row - q.1) == (0, 1)
                });
                if joined {
                    vec![(col, row)]
                } else {
                    return None;
                }
            }
        };
        for p in candidates {
            if self.candidate_ok(t, p) {
                self.pos[t] = p;
                self.placed = t + 1;
                if let Some(sol) = self.run(t + 1) {
                    return Some(sol);
                }
                self.placed = t;
            }
        }
        None
    }

    fn accept(&self) -> bool {
        self.columns_contiguous() && self.anchors.iter().all(|a| self.tuple_is_ideal(a))
    }

    fn columns_contiguous(&self) -> bool {
        let max_col = self.pos.iter().map(|p| p.0).max().unwrap_or(0);
        for c in 1..=max_col {
            let mut rows: Vec<u32> = self.pos.iter().filter(|p| p.0 == c).map(|p| p.1).collect();
            if rows.is_empty() {
                return false;
            }
            rows.sort_unstable();
            for (i, r) in rows.iter().enumerate() {
                if *r != rows[0] + i as u32 {
                    return false;
                }
            }
        }
        true
    }

    fn tuple_is_ideal(&self, tuple: &[u32]) -> bool {
        let mut mask = 0u32;
        for (ci, &count) in tuple.iter().enumerate() {
            let c = ci as u32 + 1;
            let mut rows: Vec<(u32, usize)> = self
                .pos
                .iter()
                .enumerate()
                .filter(|(_, p)| p.0 == c)
                .map(|(b, p)| (p.1, b))
                .collect();
            if (count as usize) > rows.len() {
                return false;
            }
            rows.sort_unstable();
            for &(_, b) in rows.iter().take(count as usize) {
                mask |= 1 << b;
            }
        }
        // downward closed in the abstract order
        (0..self.n).all(|b| mask & (1 << b) == 0 || self.leq[b] & !mask == 0)
    }
}

/// Finds grid coordinates for the boxes (given in height order) so that
/// covers are exactly the unit steps and the space's anchor tuples parse.
pub fn search_embedding(
    spec: SpaceSpec,
    boxes: &[Root],
    _up_covers: &[Vec<usize>],
    down_covers: &[Vec<usize>],
    leq: &[u32],
) -> Result<Vec<(u32, u32)>> {
    let mut search = Search {
        n: boxes.len(),
        down_covers,
        leq,
        anchors: anchor_tuples(spec),
        pos: vec![(0, 0); boxes.len()],
        placed: 0,
        steps: 0,
    };
    search
        .run(0)
        .ok_or_else(|| Error::EmbeddingNotFound(spec.to_string()))
}
