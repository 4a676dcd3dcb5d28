//! The box poset of a (co)minuscule space: positive roots containing the
//! parabolic simple root, ordered by cover differences in simple roots,
//! with its planar grid, short-root flags and rotation involution.

use super::grid;
use super::roots::{Root, RootSystem, TypeLabel};
use super::weyl::element_with_inversion_set;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// A supported space, as written on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceSpec {
    /// Grassmannian Gr(k, C^n), type A_{n-1} at node k.
    Gr { k: usize, n: usize },
    /// Odd quadric Q^{2n-1}, type B_n at node 1.
    QB { n: usize },
    /// Lagrangian Grassmannian LG(n, 2n), type C_n at node n.
    LG { n: usize },
    /// Even quadric Q^{2n-2}, type D_n at node 1.
    QD { n: usize },
    /// Spinor variety at the fork node of D_n; n(n-1)/2 boxes.
    OG { n: usize },
    /// The 16-box exceptional space of type E6.
    E6,
    /// The 27-box exceptional space of type E7.
    E7,
    /// Projective space P^{2n-1}, minuscule type C_n at node 1.
    Pmin { n: usize },
    /// Odd orthogonal Grassmannian OG(n, 2n+1), minuscule type B_n;
    /// realized on the D_{n+1} spinor poset.
    OGmin { n: usize },
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSpec::Gr { k, n } => write!(f, "Gr:{},{}", k, n),
            SpaceSpec::QB { n } => write!(f, "QB:{}", n),
            SpaceSpec::LG { n } => write!(f, "LG:{}", n),
            SpaceSpec::QD { n } => write!(f, "QD:{}", n),
            SpaceSpec::OG { n } => write!(f, "OG:{}", n),
            SpaceSpec::E6 => write!(f, "E6"),
            SpaceSpec::E7 => write!(f, "E7"),
            SpaceSpec::Pmin { n } => write!(f, "Pmin:{}", n),
            SpaceSpec::OGmin { n } => write!(f, "OGmin:{}", n),
        }
    }
}

impl FromStr for SpaceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedSpaceSpec(s.to_string());
        let (head, tail) = match s.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (s, None),
        };
        let num = |t: Option<&str>| -> Result<usize> {
            t.and_then(|t| t.trim().parse::<usize>().ok()).ok_or_else(bad)
        };
        match head {
            "Gr" => {
                let t = tail.ok_or_else(bad)?;
                let (k, n) = t.split_once(',').ok_or_else(bad)?;
                let k = k.trim().parse::<usize>().map_err(|_| bad())?;
                let n = n.trim().parse::<usize>().map_err(|_| bad())?;
                Ok(SpaceSpec::Gr { k, n })
            }
            "QB" => Ok(SpaceSpec::QB { n: num(tail)? }),
            "LG" => Ok(SpaceSpec::LG { n: num(tail)? }),
            "QD" => Ok(SpaceSpec::QD { n: num(tail)? }),
            "OG" => Ok(SpaceSpec::OG { n: num(tail)? }),
            "Pmin" => Ok(SpaceSpec::Pmin { n: num(tail)? }),
            "OGmin" => Ok(SpaceSpec::OGmin { n: num(tail)? }),
            "E6" if tail.is_none() => Ok(SpaceSpec::E6),
            "E7" if tail.is_none() => Ok(SpaceSpec::E7),
            _ => Err(bad()),
        }
    }
}

/// Order-theoretic data shared by every computation on tableaux and
/// coefficients. Box indices refer to the canonical (column, row) order.
#[derive(Debug, Clone)]
pub struct CorePoset {
    pub n: usize,
    pub up_covers: Vec<Vec<usize>>,
    pub down_covers: Vec<Vec<usize>>,
    /// `leq[b]` = mask of boxes `<= b`, including `b`.
    pub leq: Vec<u32>,
    /// `geq[b]` = mask of boxes `>= b`, including `b`.
    pub geq: Vec<u32>,
    pub short_mask: u32,
    pub cominuscule: bool,
}

impl CorePoset {
    pub fn full_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[b] & (1 << a) != 0
    }

    /// Downward closure of a set of boxes.
    pub fn down_closure(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        for b in 0..self.n {
            if mask & (1 << b) != 0 {
                out |= self.leq[b];
            }
        }
        out
    }

    pub fn is_ideal(&self, mask: u32) -> bool {
        mask & !self.full_mask() == 0 && self.down_closure(mask) == mask
    }

    /// Order-convex sets are exactly the differences of nested ideals.
    pub fn is_convex(&self, mask: u32) -> bool {
        mask & !self.full_mask() == 0 && self.is_ideal(self.down_closure(mask) & !mask)
    }
}

/// A box poset with its ambient root datum, grid embedding and rotation.
#[derive(Debug, Clone)]
pub struct BoxPoset {
    pub spec: SpaceSpec,
    pub rs: RootSystem,
    /// 0-based index of the parabolic node beta(P) in the ambient system.
    pub node: usize,
    /// Box roots in canonical (column, row) order.
    pub boxes: Vec<Root>,
    /// 1-based (column, row) of each box.
    pub grid: Vec<(u32, u32)>,
    /// The order-reversing involution, as a permutation of box indices.
    pub rotate: Vec<usize>,
    /// Per column: (lowest row, number of rows). Columns are 1-based.
    pub columns: Vec<(u32, u32)>,
    pub core: CorePoset,
}

impl std::ops::Deref for BoxPoset {
    type Target = CorePoset;
    fn deref(&self) -> &CorePoset {
        &self.core
    }
}

fn covers_of(boxes: &[Root]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = boxes.len();
    let mut up = vec![Vec::new(); n];
    let mut down = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            if boxes[b].simple_difference(&boxes[a]).is_some() {
                up[a].push(b);
                down[b].push(a);
            }
        }
    }
    (up, down)
}

fn closure_masks(n: usize, down_covers: &[Vec<usize>]) -> (Vec<u32>, Vec<u32>) {
    // boxes are in height order during construction, so one pass suffices
    let mut leq = vec![0u32; n];
    for b in 0..n {
        let mut m = 1u32 << b;
        for &d in &down_covers[b] {
            m |= leq[d];
        }
        leq[b] = m;
    }
    let mut geq = vec![0u32; n];
    for b in 0..n {
        for a in 0..n {
            if leq[b] & (1 << a) != 0 {
                geq[a] |= 1 << b;
            }
        }
    }
    (leq, geq)
}

impl BoxPoset {
    pub fn build(spec: SpaceSpec) -> Result<Arc<BoxPoset>> {
        let unsupported = |reason: &str| Error::UnsupportedSpace {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        match spec {
            SpaceSpec::Gr { k, n } => {
                if n < 2 || k == 0 || k >= n {
                    return Err(unsupported("need 1 <= k <= n-1 and n >= 2"));
                }
                Self::from_root_data(spec, RootSystem::build(TypeLabel::A, n - 1)?, k - 1, true)
            }
            SpaceSpec::QB { n } => {
                if n < 3 {
                    return Err(unsupported("need n >= 3; for n = 2 use LG:2, the same space"));
                }
                Self::from_root_data(spec, RootSystem::build(TypeLabel::B, n)?, 0, true)
            }
            SpaceSpec::LG { n } => {
                if n < 2 {
                    return Err(unsupported("need n >= 2"));
                }
                Self::from_root_data(spec, RootSystem::build(TypeLabel::C, n)?, n - 1, true)
            }
            SpaceSpec::QD { n } => {
                if n < 4 {
                    return Err(unsupported("need n >= 4; for n = 3 use Gr:2,4, the same space"));
                }
                Self::from_root_data(spec, RootSystem::build(TypeLabel::D, n)?, 0, true)
            }
            SpaceSpec::OG { n } => {
                if n < 4 {
                    return Err(unsupported("need n >= 4; for n = 3 use Gr:1,4, the same space"));
                }
                Self::from_root_data(spec, RootSystem::build(TypeLabel::D, n)?, n - 1, true)
            }
            SpaceSpec::E6 => Self::from_root_data(spec, RootSystem::build(TypeLabel::E6, 6)?, 0, true),
            SpaceSpec::E7 => Self::from_root_data(spec, RootSystem::build(TypeLabel::E7, 7)?, 6, true),
            SpaceSpec::Pmin { n } => {
                if n < 2 {
                    return Err(unsupported("need n >= 2"));
                }
                Self::from_root_data(spec, RootSystem::build(TypeLabel::C, n)?, 0, false)
            }
            SpaceSpec::OGmin { n } => {
                if n < 3 {
                    return Err(unsupported(
                        "need n >= 3; for n = 2 use Gr:1,4, the same space",
                    ));
                }
                // delegated to the D_{n+1} spinor poset, short flags cleared
                let inner = Self::build(SpaceSpec::OG { n: n + 1 })?;
                let mut poset = (*inner).clone();
                poset.spec = spec;
                poset.core.cominuscule = false;
                poset.core.short_mask = 0;
                Ok(Arc::new(poset))
            }
        }
    }

    fn from_root_data(
        spec: SpaceSpec,
        rs: RootSystem,
        node: usize,
        cominuscule: bool,
    ) -> Result<Arc<BoxPoset>> {
        // Boxes: roots containing the parabolic simple root. Cominuscule
        // nodes only ever see coefficient one; the minuscule projective
        // space keeps its single coefficient-two root to complete the chain.
        let mut boxes: Vec<Root> = rs
            .positive_roots
            .iter()
            .filter(|r| r.coeffs[node] >= 1)
            .cloned()
            .collect();
        if cominuscule && boxes.iter().any(|r| r.coeffs[node] != 1) {
            return Err(Error::Invariant(format!(
                "node {} of {} is not cominuscule",
                node + 1,
                rs.type_label
            )));
        }
        if boxes.len() > 32 {
            return Err(Error::UnsupportedSpace {
                spec: spec.to_string(),
                reason: format!("{} boxes exceed the 32-box bitmask budget", boxes.len()),
            });
        }
        boxes.sort_by_key(|r| (r.height(), r.coeffs.clone()));

        let (up, down) = covers_of(&boxes);
        let (leq, _) = closure_masks(boxes.len(), &down);

        // Search the planar embedding, then reorder boxes canonically by it.
        let coords = grid::search_embedding(spec, &boxes, &up, &down, &leq)?;
        let mut order: Vec<usize> = (0..boxes.len()).collect();
        order.sort_by_key(|&b| (coords[b].0, coords[b].1));
        let boxes: Vec<Root> = order.iter().map(|&b| boxes[b].clone()).collect();
        let grid_coords: Vec<(u32, u32)> = order.iter().map(|&b| coords[b]).collect();

        let (up_covers, down_covers) = covers_of(&boxes);
        // canonical order is still a linear extension: covers increase (col,row)
        let (leq, geq) = closure_masks(boxes.len(), &down_covers);

        let short_mask = if cominuscule {
            boxes
                .iter()
                .enumerate()
                .filter(|(_, r)| rs.len2(r) == 1)
                .fold(0u32, |m, (b, _)| m | (1 << b))
        } else {
            0
        };

        let core = CorePoset {
            n: boxes.len(),
            up_covers,
            down_covers,
            leq,
            geq,
            short_mask,
            cominuscule,
        };

        let rotate = if cominuscule {
            rotate_from_longest_parabolic(&rs, node, &boxes)?
        } else {
            // minuscule chain: the unique antiautomorphism is the flip
            let n = boxes.len();
            (0..n).map(|b| n - 1 - b).collect()
        };

        let mut columns: Vec<(u32, u32)> = Vec::new();
        let max_col = grid_coords.iter().map(|c| c.0).max().unwrap_or(0);
        for c in 1..=max_col {
            let mut rows: Vec<u32> = grid_coords
                .iter()
                .filter(|g| g.0 == c)
                .map(|g| g.1)
                .collect();
            rows.sort_unstable();
            let lo = rows[0];
            for (i, r) in rows.iter().enumerate() {
                if *r != lo + i as u32 {
                    return Err(Error::Invariant(format!(
                        "column {} of {} is not contiguous",
                        c, spec
                    )));
                }
            }
            columns.push((lo, rows.len() as u32));
        }

        let poset = BoxPoset {
            spec,
            rs,
            node,
            boxes,
            grid: grid_coords,
            rotate,
            columns,
            core,
        };
        poset.validate()?;
        Ok(Arc::new(poset))
    }

    fn validate(&self) -> Result<()> {
        let spec = self.spec;
        let n = self.core.n;
        let expected = match spec {
            SpaceSpec::Gr { k, n } => k * (n - k),
            SpaceSpec::QB { n } | SpaceSpec::Pmin { n } => 2 * n - 1,
            SpaceSpec::LG { n } | SpaceSpec::OGmin { n } => n * (n + 1) / 2,
            SpaceSpec::QD { n } => 2 * n - 2,
            SpaceSpec::OG { n } => n * (n - 1) / 2,
            SpaceSpec::E6 => 16,
            SpaceSpec::E7 => 27,
        };
        if n != expected {
            return Err(Error::Invariant(format!(
                "{} has {} boxes, expected {}",
                spec, n, expected
            )));
        }
        let expected_short = match spec {
            SpaceSpec::QB { .. } => 1,
            SpaceSpec::LG { n } => n * (n - 1) / 2,
            _ => 0,
        };
        if self.core.short_mask.count_ones() as usize != expected_short {
            return Err(Error::Invariant(format!(
                "{} has {} short boxes, expected {}",
                spec,
                self.core.short_mask.count_ones(),
                expected_short
            )));
        }
        if matches!(spec, SpaceSpec::QB { .. }) {
            // the middle box of the chain is the short one
            let mid = n / 2;
            if self.core.short_mask != 1 << mid {
                return Err(Error::Invariant(format!("short box of {} is not central", spec)));
            }
        }
        // rotate: order-reversing involution preserving short flags
        for a in 0..n {
            if self.rotate[self.rotate[a]] != a {
                return Err(Error::Invariant("rotate is not an involution".into()));
            }
            let short_a = self.core.short_mask & (1 << a) != 0;
            let short_ra = self.core.short_mask & (1 << self.rotate[a]) != 0;
            if short_a != short_ra {
                return Err(Error::Invariant("rotate does not preserve short flags".into()));
            }
            for b in 0..n {
                if self.core.lt(a, b) && !self.core.lt(self.rotate[b], self.rotate[a]) {
                    return Err(Error::Invariant("rotate is not order-reversing".into()));
                }
            }
        }
        // grid: covers are exactly the unit steps
        for a in 0..n {
            for b in 0..n {
                let d = (
                    self.grid[b].0 as i64 - self.grid[a].0 as i64,
                    self.grid[b].1 as i64 - self.grid[a].1 as i64,
                );
                let unit = d == (1, 0) || d == (0, 1);
                let cover = self.core.up_covers[a].contains(&b);
                if unit != cover {
                    return Err(Error::Invariant(format!(
                        "grid embedding of {} breaks the cover correspondence",
                        spec
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn num_boxes(&self) -> usize {
        self.core.n
    }

    pub fn short_count(&self, mask: u32) -> u32 {
        (mask & self.core.short_mask).count_ones()
    }

    /// Index of the box at a grid position, if any.
    pub fn box_at(&self, col: u32, row: u32) -> Option<usize> {
        self.grid.iter().position(|&g| g == (col, row))
    }
}

/// Rotation on the boxes via the longest element of the parabolic Weyl group:
/// its inversion set is the set of positive roots outside the box poset.
fn rotate_from_longest_parabolic(rs: &RootSystem, node: usize, boxes: &[Root]) -> Result<Vec<usize>> {
    let outside: Vec<usize> = (0..rs.num_positive())
        .filter(|&k| rs.positive_roots[k].coeffs[node] == 0)
        .collect();
    let u0 = element_with_inversion_set(rs, &outside)?;
    let mut rot = Vec::with_capacity(boxes.len());
    for r in boxes {
        let image = u0.act(rs, r);
        let idx = boxes
            .iter()
            .position(|b| b.coeffs == image.coeffs)
            .ok_or_else(|| Error::Invariant("rotation leaves the box poset".into()))?;
        rot.push(idx);
    }
    Ok(rot)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_space_specs() {
        assert_eq!("Gr:4,7".parse::<SpaceSpec>().unwrap(), SpaceSpec::Gr { k: 4, n: 7 });
        assert_eq!("E7".parse::<SpaceSpec>().unwrap(), SpaceSpec::E7);
        assert_eq!("OGmin:4".parse::<SpaceSpec>().unwrap(), SpaceSpec::OGmin { n: 4 });
        assert!("Gr:4".parse::<SpaceSpec>().is_err());
        assert!("XX:1".parse::<SpaceSpec>().is_err());
    }

    #[test]
    fn box_counts_match_the_classification() {
        for (spec, boxes, short) in [
            ("Gr:4,7", 12, 0),
            ("QB:4", 7, 1),
            ("LG:4", 10, 6),
            ("QD:5", 8, 0),
            ("OG:5", 10, 0),
            ("E6", 16, 0),
            ("E7", 27, 0),
            ("Pmin:3", 5, 0),
            ("OGmin:4", 10, 0),
        ] {
            let p = BoxPoset::build(spec.parse().unwrap()).unwrap();
            assert_eq!(p.num_boxes(), boxes, "{spec}");
            assert_eq!(p.core.short_mask.count_ones(), short, "{spec}");
        }
    }

    #[test]
    fn gr_poset_is_a_rectangle() {
        let p = BoxPoset::build("Gr:4,7".parse().unwrap()).unwrap();
        let mut cols: Vec<u32> = p.columns.iter().map(|c| c.1).collect();
        cols.sort_unstable();
        assert_eq!(cols, vec![4, 4, 4]);
        assert!(p.columns.iter().all(|c| c.0 == 1));
    }

    #[test]
    fn lg_poset_is_a_shifted_staircase() {
        let p = BoxPoset::build("LG:4".parse().unwrap()).unwrap();
        let heights: Vec<u32> = p.columns.iter().map(|c| c.1).collect();
        assert_eq!(heights, vec![4, 3, 2, 1]);
        // short boxes are exactly the off-diagonal ones
        for b in 0..p.num_boxes() {
            let (c, r) = p.grid[b];
            let short = p.core.short_mask & (1 << b) != 0;
            assert_eq!(short, c != r, "box at {:?}", (c, r));
        }
    }

    #[test]
    fn qd_poset_is_a_double_tailed_diamond() {
        let p = BoxPoset::build("QD:5".parse().unwrap()).unwrap();
        let heights: Vec<u32> = p.columns.iter().map(|c| c.1).collect();
        assert_eq!(heights, vec![1, 1, 2, 2, 1, 1]);
        // exactly one incomparable pair: the two middle boxes
        let mut incomparable = 0;
        for a in 0..p.num_boxes() {
            for b in a + 1..p.num_boxes() {
                if !p.core.lt(a, b) && !p.core.lt(b, a) {
                    incomparable += 1;
                }
            }
        }
        assert_eq!(incomparable, 1);
    }

    #[test]
    fn chains_embed_as_rows() {
        for spec in ["QB:4", "Pmin:4"] {
            let p = BoxPoset::build(spec.parse().unwrap()).unwrap();
            assert!(p.grid.iter().all(|g| g.1 == 1), "{spec}");
        }
    }

    #[test]
    fn rejects_aliased_spaces() {
        assert!(BoxPoset::build("QB:2".parse().unwrap()).is_err());
        assert!(BoxPoset::build("QD:3".parse().unwrap()).is_err());
        assert!(BoxPoset::build("OG:3".parse().unwrap()).is_err());
        assert!(BoxPoset::build("Gr:7,7".parse().unwrap()).is_err());
    }
}
