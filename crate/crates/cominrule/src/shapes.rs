//! Shapes (lower order ideals) and skew shapes over a box poset, stored as
//! bitmasks in the canonical box order. Tuples of column counts are I/O
//! sugar only; equality and ordering live on the masks.

use crate::error::{Error, Result};
use crate::root_data::{BoxPoset, CorePoset};

/// A lower order ideal of the box poset, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape(u32);

impl Shape {
    pub const EMPTY: Shape = Shape(0);

    pub fn new(mask: u32) -> Shape {
        Shape(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, b: usize) -> bool {
        self.0 & (1 << b) != 0
    }

    pub fn subset_of(self, other: Shape) -> bool {
        self.0 & !other.0 == 0
    }

    /// The full poset as a shape.
    pub fn full(core: &CorePoset) -> Shape {
        Shape(core.full_mask())
    }

    /// The ideal consisting of the first `len` boxes of a chain poset.
    pub(crate) fn of_size_prefix(core: &CorePoset, len: usize) -> Shape {
        debug_assert!(len <= core.n);
        Shape(((1u64 << len) - 1) as u32)
    }

    /// Validated constructor; the mask must be an ideal of this poset.
    pub fn checked(core: &CorePoset, mask: u32) -> Result<Shape> {
        if core.is_ideal(mask) {
            Ok(Shape(mask))
        } else {
            Err(Error::NotAShape(mask))
        }
    }
}

/// A difference of nested shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub inner: Shape,
    pub outer: Shape,
}

impl SkewShape {
    pub fn new(core: &CorePoset, inner: Shape, outer: Shape) -> Result<SkewShape> {
        if !core.is_ideal(inner.mask()) {
            return Err(Error::NotAShape(inner.mask()));
        }
        if !core.is_ideal(outer.mask()) {
            return Err(Error::NotAShape(outer.mask()));
        }
        if !inner.subset_of(outer) {
            return Err(Error::NotNested {
                inner: inner.mask(),
                outer: outer.mask(),
            });
        }
        Ok(SkewShape { inner, outer })
    }

    pub fn region(&self) -> u32 {
        self.outer.mask() & !self.inner.mask()
    }

    pub fn size(&self) -> usize {
        self.region().count_ones() as usize
    }
}

/// All shapes of the poset, ordered by size and then by mask.
pub fn all_shapes(core: &CorePoset) -> Vec<Shape> {
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![0u32];
    seen.insert(0u32);
    while let Some(mask) = stack.pop() {
        for b in 0..core.n {
            if mask & (1 << b) != 0 {
                continue;
            }
            // addable: all lower covers already present
            if core.down_covers[b].iter().all(|&d| mask & (1 << d) != 0) {
                let next = mask | (1 << b);
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
    }
    let mut out: Vec<Shape> = seen.into_iter().map(Shape::new).collect();
    out.sort_by_key(|s| (s.size(), s.mask()));
    out
}

/// Complement of a shape: an upper order ideal, returned as a raw box set.
pub fn complement(core: &CorePoset, shape: Shape) -> u32 {
    core.full_mask() & !shape.mask()
}

/// Boxwise rotation of an arbitrary box set.
pub fn rotate_set(poset: &BoxPoset, mask: u32) -> u32 {
    let mut out = 0u32;
    for b in 0..poset.num_boxes() {
        if mask & (1 << b) != 0 {
            out |= 1 << poset.rotate[b];
        }
    }
    out
}

/// The shape `rotate(lambda^c)`: rotation of the complement, a lower ideal.
pub fn rotate_complement(poset: &BoxPoset, shape: Shape) -> Shape {
    let mask = rotate_set(poset, complement(&poset.core, shape));
    debug_assert!(poset.core.is_ideal(mask));
    Shape::new(mask)
}

/// Number of short-root boxes of a box set.
pub fn shortroots(core: &CorePoset, mask: u32) -> u32 {
    (mask & core.short_mask).count_ones()
}

/// Parses a tuple of column counts into a shape. Accepts `4,2,1`,
/// `(4,2,1)`, `()` and the empty string; trailing zero columns are dropped.
pub fn parse_shape(poset: &BoxPoset, text: &str) -> Result<Shape> {
    let inner = text.trim();
    let inner = inner
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(inner)
        .trim();
    let mut counts: Vec<u32> = Vec::new();
    if !inner.is_empty() {
        for part in inner.split(',') {
            let v = part
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::BadTupleSyntax(text.to_string()))?;
            counts.push(v);
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    shape_from_tuple(poset, &counts).map_err(|column| Error::BadTupleColumn {
        tuple: print_tuple(&counts),
        column,
        space: poset.spec.to_string(),
    })
}

/// Core tuple-to-mask conversion; on failure returns the 1-based offending column.
fn shape_from_tuple(poset: &BoxPoset, counts: &[u32]) -> std::result::Result<Shape, usize> {
    if counts.len() > poset.columns.len() {
        return Err(poset.columns.len() + 1);
    }
    let mut mask = 0u32;
    for (ci, &count) in counts.iter().enumerate() {
        let c = ci as u32 + 1;
        if count == 0 {
            return Err(ci + 1); // interior zero column cannot occur in an ideal
        }
        let (lo, height) = poset.columns[ci];
        if count > height {
            return Err(ci + 1);
        }
        for r in lo..lo + count {
            let b = poset.box_at(c, r).expect("column cell exists");
            mask |= 1 << b;
        }
    }
    if !poset.core.is_ideal(mask) {
        // report the leftmost column containing a box whose lower cover is missing
        for (ci, _) in counts.iter().enumerate() {
            let c = ci as u32 + 1;
            for b in 0..poset.num_boxes() {
                if poset.grid[b].0 == c
                    && mask & (1 << b) != 0
                    && poset.core.leq[b] & !mask != 0
                {
                    return Err(ci + 1);
                }
            }
        }
        return Err(counts.len());
    }
    Ok(Shape::new(mask))
}

/// Prints the minimal column tuple of a shape, e.g. `(4,2,1)` or `()`.
pub fn print_shape(poset: &BoxPoset, shape: Shape) -> String {
    let mut counts = vec![0u32; poset.columns.len()];
    for b in 0..poset.num_boxes() {
        if shape.contains(b) {
            counts[(poset.grid[b].0 - 1) as usize] += 1;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    print_tuple(&counts)
}

fn print_tuple(counts: &[u32]) -> String {
    let body: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    format!("({})", body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{weyl_order, BoxPoset, SpaceSpec};

    fn poset(spec: &str) -> std::sync::Arc<BoxPoset> {
        BoxPoset::build(spec.parse().unwrap()).unwrap()
    }

    #[test]
    fn shape_counts_match_coset_counts() {
        // |shapes| = |W| / |W_P|, with the orders taken from the classical
        // formulas rather than from the ideal enumeration
        for (spec, expected) in [
            ("Gr:2,4", 6u64),
            ("Gr:3,6", 20),
            ("LG:3", 8),
            ("LG:4", 16),
            ("QB:4", 8),
            ("QD:5", 10),
            ("OG:5", 16),
            ("Pmin:4", 8),
            ("OGmin:4", 16),
        ] {
            let p = poset(spec);
            assert_eq!(all_shapes(&p.core).len() as u64, expected, "{spec}");
        }
        let e6 = poset("E6");
        let quotient = weyl_order(crate::root_data::TypeLabel::E6, 6)
            / weyl_order(crate::root_data::TypeLabel::D, 5);
        assert_eq!(all_shapes(&e6.core).len() as u64, quotient);
        assert_eq!(quotient, 27);
        let e7 = poset("E7");
        let quotient = weyl_order(crate::root_data::TypeLabel::E7, 7)
            / weyl_order(crate::root_data::TypeLabel::E6, 6);
        assert_eq!(all_shapes(&e7.core).len() as u64, quotient);
        assert_eq!(quotient, 56);
    }

    #[test]
    fn chain_has_one_ideal_per_size() {
        let p = poset("QB:4");
        assert_eq!(all_shapes(&p.core).len(), 8);
    }

    #[test]
    fn parse_print_round_trip_everywhere() {
        for spec in [
            "Gr:4,7", "QB:4", "LG:4", "QD:5", "QD:6", "OG:5", "E6", "E7", "Pmin:3", "OGmin:4",
        ] {
            let p = poset(spec);
            for s in all_shapes(&p.core) {
                let text = print_shape(&p, s);
                assert_eq!(parse_shape(&p, &text).unwrap(), s, "{spec} {text}");
            }
        }
    }

    #[test]
    fn exceptional_tuple_sizes() {
        let e6 = poset("E6");
        assert_eq!(parse_shape(&e6, "(1,1,2,3,1)").unwrap().size(), 8);
        let gr = poset("Gr:4,7");
        assert_eq!(parse_shape(&gr, "(4,2,1)").unwrap().size(), 7);
    }

    #[test]
    fn parse_rejects_with_offending_column() {
        let p = poset("LG:4");
        match parse_shape(&p, "5,1") {
            Err(Error::BadTupleColumn { column, .. }) => assert_eq!(column, 1),
            other => panic!("expected column error, got {other:?}"),
        }
        // equal columns break the strictness forced by the staircase
        assert!(parse_shape(&p, "2,2").is_err());
        assert!(parse_shape(&p, "(3,1)").is_ok());
    }

    #[test]
    fn rotate_examples() {
        // 180-degree rotation on the rectangle
        let gr = poset("Gr:4,7");
        let nu = parse_shape(&gr, "4,2,1").unwrap();
        let rot = rotate_set(&gr, nu.mask());
        let c32 = parse_shape(&gr, "3,2").unwrap();
        assert_eq!(rot, complement(&gr.core, c32));

        // diagonal flip on the shifted staircase
        let lg = poset("LG:4");
        let s = parse_shape(&lg, "3,1").unwrap();
        let rot = rotate_set(&lg, s.mask());
        let c42 = parse_shape(&lg, "4,2").unwrap();
        assert_eq!(rot, complement(&lg.core, c42));

        // even quadric: the middle boxes stay fixed for even n
        let qd6 = poset("QD:6");
        let s = parse_shape(&qd6, "1,1,1,1,1").unwrap();
        let rot = rotate_set(&qd6, s.mask());
        let c = parse_shape(&qd6, "1,1,1,2").unwrap();
        assert_eq!(rot, complement(&qd6.core, c));

        // odd n rotates the middle boxes onto each other
        let qd5 = poset("QD:5");
        let s = parse_shape(&qd5, "1,1,1,1").unwrap();
        let rot = rotate_set(&qd5, s.mask());
        let c = parse_shape(&qd5, "1,1,1,1").unwrap();
        assert_eq!(rot, complement(&qd5.core, c));
    }

    #[test]
    fn rotate_e7_example() {
        let e7 = poset("E7");
        let nu = parse_shape(&e7, "1,1,1,2,3,3,1").unwrap();
        let rot = rotate_set(&e7, nu.mask());
        let c = parse_shape(&e7, "1,1,1,2,5,5").unwrap();
        assert_eq!(rot, complement(&e7.core, c));
    }

    #[test]
    fn rotate_e6_example() {
        let e6 = poset("E6");
        let nu = parse_shape(&e6, "1,1,2,3,1").unwrap();
        let rot = rotate_set(&e6, nu.mask());
        assert_eq!(rot, complement(&e6.core, nu));
    }

    #[test]
    fn rotate_complement_is_an_involution_on_shapes() {
        for spec in ["Gr:3,6", "LG:4", "QD:5", "QD:6", "E6", "Pmin:4", "OGmin:4"] {
            let p = poset(spec);
            for s in all_shapes(&p.core) {
                let t = rotate_complement(&p, s);
                assert!(p.core.is_ideal(t.mask()), "{spec}");
                assert_eq!(rotate_complement(&p, t), s, "{spec}");
            }
        }
    }

    #[test]
    fn shortroots_values() {
        let lg = poset("LG:4");
        let nu = parse_shape(&lg, "4,2").unwrap();
        let lam = parse_shape(&lg, "2,1").unwrap();
        let mu = parse_shape(&lg, "2,1").unwrap();
        assert_eq!(shortroots(&lg.core, nu.mask() & !lam.mask()), 3);
        assert_eq!(shortroots(&lg.core, mu.mask()), 1);

        let qb = poset("QB:4");
        let nu = parse_shape(&qb, "1,1,1,1").unwrap();
        let lam = parse_shape(&qb, "1,1").unwrap();
        assert_eq!(shortroots(&qb.core, nu.mask() & !lam.mask()), 1);

        let e6 = poset("E6");
        for s in all_shapes(&e6.core) {
            assert_eq!(shortroots(&e6.core, s.mask()), 0);
        }
    }

    #[test]
    fn shortroots_is_additive() {
        let lg = poset("LG:4");
        let shapes = all_shapes(&lg.core);
        for &a in &shapes {
            for &b in &shapes {
                if a.subset_of(b) {
                    assert_eq!(
                        shortroots(&lg.core, b.mask() & !a.mask()),
                        shortroots(&lg.core, b.mask()) - shortroots(&lg.core, a.mask())
                    );
                }
            }
        }
    }

    #[test]
    fn empty_shape_round_trip() {
        let p = poset("Gr:2,4");
        assert_eq!(print_shape(&p, Shape::EMPTY), "()");
        assert_eq!(parse_shape(&p, "()").unwrap(), Shape::EMPTY);
        assert_eq!(parse_shape(&p, "").unwrap(), Shape::EMPTY);
        assert_eq!(rotate_set(&p, Shape::EMPTY.mask()), 0);
    }

    #[test]
    fn og_spec_labels_the_spinor_poset() {
        let og = poset("OG:5");
        assert_eq!(og.spec, SpaceSpec::OG { n: 5 });
        let heights: Vec<u32> = og.columns.iter().map(|c| c.1).collect();
        assert_eq!(heights, vec![4, 3, 2, 1]);
    }
}
