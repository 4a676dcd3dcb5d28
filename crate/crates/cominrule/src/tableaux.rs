//! Standard tableaux on order-convex regions of a box poset, jeu de taquin
//! and reverse slides, rectification, and the infusion involution.

use crate::error::{Error, Result};
use crate::root_data::{BoxPoset, CorePoset};
use crate::shapes::Shape;
use std::collections::HashMap;

/// A standard filling of an order-convex region. `labels[b] == 0` means box
/// `b` is not part of the region.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    labels: Vec<u8>,
}

impl Tableau {
    pub fn empty(core: &CorePoset) -> Tableau {
        Tableau {
            labels: vec![0; core.n],
        }
    }

    /// Builds a tableau from raw labels after validating standardness.
    pub fn new(core: &CorePoset, labels: Vec<u8>) -> Result<Tableau> {
        let t = Tableau { labels };
        t.check_standard(core)?;
        Ok(t)
    }

    /// The identity filling of a straight shape: box order is a linear
    /// extension, so labeling the boxes in order is standard. This is also
    /// the lexicographically first filling, the fixed choice of `T_mu`.
    pub fn canonical(core: &CorePoset, shape: Shape) -> Tableau {
        let mut labels = vec![0u8; core.n];
        let mut next = 1u8;
        for b in 0..core.n {
            if shape.contains(b) {
                labels[b] = next;
                next += 1;
            }
        }
        Tableau { labels }
    }

    /// Builds a tableau from `(column, row, label)` triples.
    pub fn from_coords(poset: &BoxPoset, cells: &[(u32, u32, u8)]) -> Result<Tableau> {
        let mut labels = vec![0u8; poset.num_boxes()];
        for &(c, r, l) in cells {
            let b = poset
                .box_at(c, r)
                .ok_or_else(|| Error::NotStandard(format!("no box at ({c},{r})")))?;
            labels[b] = l;
        }
        Tableau::new(&poset.core, labels)
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> Option<u8> {
        (self.labels[b] != 0).then_some(self.labels[b])
    }

    pub fn region(&self) -> u32 {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != 0)
            .fold(0, |m, (b, _)| m | (1 << b))
    }

    pub fn size(&self) -> usize {
        self.labels.iter().filter(|&&l| l != 0).count()
    }

    /// Shape of a straight tableau; fails if the region is not an ideal.
    pub fn shape(&self, core: &CorePoset) -> Result<Shape> {
        Shape::checked(core, self.region())
    }

    pub fn position_of(&self, label: u8) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    fn check_standard(&self, core: &CorePoset) -> Result<()> {
        let region = self.region();
        if !core.is_convex(region) {
            return Err(Error::NotStandard("region is not order-convex".into()));
        }
        let m = region.count_ones() as u8;
        let mut seen = vec![false; m as usize + 1];
        for b in 0..core.n {
            let l = self.labels[b];
            if l == 0 {
                continue;
            }
            if l > m || seen[l as usize] {
                return Err(Error::NotStandard(format!("label {l} is out of range or repeated")));
            }
            seen[l as usize] = true;
            for &u in &core.up_covers[b] {
                if self.labels[u] != 0 && self.labels[u] < l {
                    return Err(Error::NotStandard(format!(
                        "label {} above label {} reverses the order",
                        self.labels[u], l
                    )));
                }
            }
        }
        Ok(())
    }

    #[cfg(debug_assertions)]
    fn debug_check(&self, core: &CorePoset) {
        self.check_standard(core).expect("intermediate filling is standard");
    }

    #[cfg(not(debug_assertions))]
    fn debug_check(&self, _core: &CorePoset) {}
}

/// Boxes outside the region, maximal subject to lying below some region box.
pub fn inner_corners(core: &CorePoset, region: u32) -> Vec<usize> {
    let candidates: Vec<usize> = (0..core.n)
        .filter(|&x| region & (1 << x) == 0 && (core.geq[x] & !(1 << x)) & region != 0)
        .collect();
    candidates
        .iter()
        .copied()
        .filter(|&x| {
            candidates
                .iter()
                .all(|&z| z == x || core.geq[x] & (1 << z) == 0)
        })
        .collect()
}

/// Boxes outside the region, minimal subject to lying above some region box.
pub fn outer_corners(core: &CorePoset, region: u32) -> Vec<usize> {
    let candidates: Vec<usize> = (0..core.n)
        .filter(|&x| region & (1 << x) == 0 && (core.leq[x] & !(1 << x)) & region != 0)
        .collect();
    candidates
        .iter()
        .copied()
        .filter(|&x| {
            candidates
                .iter()
                .all(|&z| z == x || core.leq[x] & (1 << z) == 0)
        })
        .collect()
}

/// Moves labels down into the hole at `x`, smallest covering label first;
/// returns the final hole position.
fn slide_hole(core: &CorePoset, labels: &mut [u8], x: usize) -> usize {
    let mut hole = x;
    loop {
        let next = core.up_covers[hole]
            .iter()
            .copied()
            .filter(|&u| labels[u] != 0)
            .min_by_key(|&u| labels[u]);
        match next {
            Some(u) => {
                labels[hole] = labels[u];
                labels[u] = 0;
                hole = u;
            }
            None => return hole,
        }
    }
}

/// Moves labels up into the hole at `x`, largest covered label first.
fn rev_slide_hole(core: &CorePoset, labels: &mut [u8], x: usize) -> usize {
    let mut hole = x;
    loop {
        let next = core.down_covers[hole]
            .iter()
            .copied()
            .filter(|&d| labels[d] != 0)
            .max_by_key(|&d| labels[d]);
        match next {
            Some(d) => {
                labels[hole] = labels[d];
                labels[d] = 0;
                hole = d;
            }
            None => return hole,
        }
    }
}

/// The jeu de taquin slide of `t` into the inner corner `x`.
pub fn jdt_slide(core: &CorePoset, t: &Tableau, x: usize) -> Result<Tableau> {
    if !inner_corners(core, t.region()).contains(&x) {
        return Err(Error::NotInnerCorner(x));
    }
    let mut out = t.clone();
    slide_hole(core, &mut out.labels, x);
    out.debug_check(core);
    Ok(out)
}

/// The reverse slide of `t` into the outer corner `x`.
pub fn rev_slide(core: &CorePoset, t: &Tableau, x: usize) -> Result<Tableau> {
    if !outer_corners(core, t.region()).contains(&x) {
        return Err(Error::NotOuterCorner(x));
    }
    let mut out = t.clone();
    rev_slide_hole(core, &mut out.labels, x);
    out.debug_check(core);
    Ok(out)
}

/// Iterated slides to a straight shape. When several inner corners are
/// available the one latest in box order is chosen; the result does not
/// depend on the choice, which the confluence suite checks separately.
pub fn rectify(core: &CorePoset, t: &Tableau) -> Tableau {
    rectify_by(core, t, |corners| *corners.last().expect("nonempty"))
}

/// Iterated reverse slides to an upper order ideal (a rotated shape).
pub fn revrectify(core: &CorePoset, t: &Tableau) -> Tableau {
    let mut out = t.clone();
    loop {
        let corners = outer_corners(core, out.region());
        match corners.first() {
            Some(&x) => {
                rev_slide_hole(core, &mut out.labels, x);
                out.debug_check(core);
            }
            None => return out,
        }
    }
}

/// Rectification with an arbitrary corner-selection strategy.
pub fn rectify_by(
    core: &CorePoset,
    t: &Tableau,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Tableau {
    let mut out = t.clone();
    loop {
        let corners = inner_corners(core, out.region());
        if corners.is_empty() {
            return out;
        }
        let x = pick(&corners);
        debug_assert!(corners.contains(&x));
        slide_hole(core, &mut out.labels, x);
        out.debug_check(core);
    }
}

/// Reverse rectification with an arbitrary corner-selection strategy.
pub fn revrectify_by(
    core: &CorePoset,
    t: &Tableau,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Tableau {
    let mut out = t.clone();
    loop {
        let corners = outer_corners(core, out.region());
        if corners.is_empty() {
            return out;
        }
        let x = pick(&corners);
        debug_assert!(corners.contains(&x));
        rev_slide_hole(core, &mut out.labels, x);
        out.debug_check(core);
    }
}

fn check_infusion_pair(core: &CorePoset, t: &Tableau, u: &Tableau) -> Result<()> {
    let (rt, ru) = (t.region(), u.region());
    if rt & ru != 0 || !core.is_ideal(rt) || !core.is_ideal(rt | ru) {
        return Err(Error::ShapeMismatch {
            expected: rt,
            got: ru,
        });
    }
    Ok(())
}

/// Slides the straight tableau `t` through the skew tableau `u`,
/// largest label first, freezing each displaced label in the hole it
/// creates. Returns `(x, y)` with `x` straight on some shape `gamma` and
/// `y` on `outer/gamma`.
pub fn infusion(core: &CorePoset, t: &Tableau, u: &Tableau) -> Result<(Tableau, Tableau)> {
    check_infusion_pair(core, t, u)?;
    let mut moving = u.clone();
    let mut frozen = Tableau::empty(core);
    let mut remaining = t.clone();
    for m in (1..=t.size() as u8).rev() {
        let x = remaining.position_of(m).expect("labels are 1..=size");
        remaining.labels[x] = 0;
        let hole = slide_hole(core, &mut moving.labels, x);
        frozen.labels[hole] = m;
        moving.debug_check(core);
    }
    Ok((moving, frozen))
}

/// Inverse procedure: pushes `u`'s labels through `t` from below, smallest
/// label first, via reverse slides. Pointwise equal to [`infusion`].
pub fn revinfusion(core: &CorePoset, t: &Tableau, u: &Tableau) -> Result<(Tableau, Tableau)> {
    check_infusion_pair(core, t, u)?;
    let mut moving = t.clone();
    let mut frozen = Tableau::empty(core);
    let mut remaining = u.clone();
    for s in 1..=u.size() as u8 {
        let x = remaining.position_of(s).expect("labels are 1..=size");
        remaining.labels[x] = 0;
        let hole = rev_slide_hole(core, &mut moving.labels, x);
        frozen.labels[hole] = s;
        moving.debug_check(core);
    }
    Ok((frozen, moving))
}

/// All standard fillings of the region, ordered by their label vectors.
pub fn enumerate_syt(core: &CorePoset, region: u32) -> Vec<Tableau> {
    let total = region.count_ones() as u8;
    let mut out = Vec::new();
    let mut labels = vec![0u8; core.n];
    fn rec(
        core: &CorePoset,
        region: u32,
        labels: &mut Vec<u8>,
        next: u8,
        total: u8,
        out: &mut Vec<Tableau>,
    ) {
        if next > total {
            out.push(Tableau {
                labels: labels.clone(),
            });
            return;
        }
        for b in 0..core.n {
            if region & (1 << b) == 0 || labels[b] != 0 {
                continue;
            }
            let ready = core.down_covers[b]
                .iter()
                .all(|&d| region & (1 << d) == 0 || labels[d] != 0);
            if ready {
                labels[b] = next;
                rec(core, region, labels, next + 1, total, out);
                labels[b] = 0;
            }
        }
    }
    rec(core, region, &mut labels, 1, total, &mut out);
    out.sort_by(|a, b| a.labels.cmp(&b.labels));
    out
}

/// Number of standard fillings, by the linear-extension recursion over
/// upward-closed subsets of the region (no tableaux are materialized).
pub fn count_syt(core: &CorePoset, region: u32) -> u64 {
    fn rec(core: &CorePoset, rest: u32, memo: &mut HashMap<u32, u64>) -> u64 {
        if rest == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&rest) {
            return v;
        }
        let mut total = 0u64;
        for b in 0..core.n {
            if rest & (1 << b) == 0 {
                continue;
            }
            // maximal in the remaining region
            if (core.geq[b] & !(1 << b)) & rest == 0 {
                total = total
                    .checked_add(rec(core, rest & !(1 << b), memo))
                    .expect("linear extension count overflows u64");
            }
        }
        memo.insert(rest, total);
        total
    }
    rec(core, region, &mut HashMap::new())
}

/// A random standard filling: repeatedly labels a uniformly chosen minimal
/// unlabeled box. Deterministic given the generator state.
pub fn random_syt(core: &CorePoset, region: u32, rng: &mut impl rand::Rng) -> Tableau {
    let total = region.count_ones() as u8;
    let mut labels = vec![0u8; core.n];
    for next in 1..=total {
        let ready: Vec<usize> = (0..core.n)
            .filter(|&b| {
                region & (1 << b) != 0
                    && labels[b] == 0
                    && core.down_covers[b]
                        .iter()
                        .all(|&d| region & (1 << d) == 0 || labels[d] != 0)
            })
            .collect();
        let b = ready[rng.gen_range(0..ready.len())];
        labels[b] = next;
    }
    Tableau { labels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::BoxPoset;
    use crate::shapes::{all_shapes, parse_shape};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn poset(spec: &str) -> Arc<BoxPoset> {
        BoxPoset::build(spec.parse().unwrap()).unwrap()
    }

    fn skew_region(p: &BoxPoset, outer: &str, inner: &str) -> u32 {
        let o = parse_shape(p, outer).unwrap();
        let i = parse_shape(p, inner).unwrap();
        o.mask() & !i.mask()
    }

    #[test]
    fn counting_golden_values() {
        let gr = poset("Gr:4,7");
        assert_eq!(enumerate_syt(&gr.core, skew_region(&gr, "4,2,1", "3,1")).len(), 6);
        let lg = poset("LG:4");
        assert_eq!(enumerate_syt(&lg.core, skew_region(&lg, "4,2", "2,1")).len(), 2);
        assert_eq!(enumerate_syt(&lg.core, 0).len(), 1);
    }

    #[test]
    fn count_matches_enumeration() {
        for spec in ["Gr:2,5", "LG:3", "QD:5", "QB:4", "E6"] {
            let p = poset(spec);
            let shapes = all_shapes(&p.core);
            for &outer in &shapes {
                for &inner in &shapes {
                    if inner.subset_of(outer) {
                        let region = outer.mask() & !inner.mask();
                        assert_eq!(
                            count_syt(&p.core, region),
                            enumerate_syt(&p.core, region).len() as u64,
                            "{spec}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_is_first_in_enumeration() {
        for spec in ["Gr:3,6", "LG:4", "E6"] {
            let p = poset(spec);
            for shape in all_shapes(&p.core) {
                let listed = enumerate_syt(&p.core, shape.mask());
                assert_eq!(listed[0], Tableau::canonical(&p.core, shape), "{spec}");
            }
        }
    }

    #[test]
    fn single_box_slide_moves_label() {
        let p = poset("Gr:2,4");
        // tableau with one label at the box covering the minimum
        let min_box = 0usize;
        let above = p.core.up_covers[min_box][0];
        let mut labels = vec![0u8; p.num_boxes()];
        labels[above] = 1;
        let t = Tableau::new(&p.core, labels).unwrap();
        let slid = jdt_slide(&p.core, &t, min_box).unwrap();
        assert_eq!(slid.label(min_box), Some(1));
        assert_eq!(slid.label(above), None);

        // and back up again
        let back = rev_slide(&p.core, &slid, above).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn e7_slide_golden() {
        let p = poset("E7");
        let t = Tableau::from_coords(
            &p,
            &[
                (6, 1, 3),
                (5, 2, 1),
                (6, 2, 4),
                (5, 3, 2),
                (6, 3, 5),
                (7, 3, 6),
                (5, 4, 7),
            ],
        )
        .unwrap();
        let x = p.box_at(5, 1).unwrap();
        let slid = jdt_slide(&p.core, &t, x).unwrap();
        let expected = Tableau::from_coords(
            &p,
            &[
                (5, 1, 1),
                (6, 1, 3),
                (5, 2, 2),
                (6, 2, 4),
                (5, 3, 5),
                (6, 3, 6),
                (5, 4, 7),
            ],
        )
        .unwrap();
        assert_eq!(slid, expected);
    }

    #[test]
    fn odd_quadric_rectification_golden() {
        let p = poset("QB:4");
        // row tableau [.,.,1,2] slides home to [1,2,.,.]
        let t = Tableau::from_coords(&p, &[(3, 1, 1), (4, 1, 2)]).unwrap();
        let r = rectify(&p.core, &t);
        let expected = Tableau::from_coords(&p, &[(1, 1, 1), (2, 1, 2)]).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn straight_tableau_rectifies_to_itself() {
        let p = poset("LG:4");
        for shape in all_shapes(&p.core) {
            for t in enumerate_syt(&p.core, shape.mask()) {
                assert_eq!(rectify(&p.core, &t), t);
            }
        }
    }

    #[test]
    fn grassmannian_rectification_golden() {
        let gr = poset("Gr:4,7");
        let target = Tableau::canonical(&gr.core, parse_shape(&gr, "2,1").unwrap());
        let region = skew_region(&gr, "4,2,1", "3,1");
        let hits: Vec<Tableau> = enumerate_syt(&gr.core, region)
            .into_iter()
            .filter(|t| rectify(&gr.core, t) == target)
            .collect();
        assert_eq!(hits.len(), 2);
    }

    #[test]
    fn cayley_plane_rectification_golden() {
        let p = poset("E6");
        let target = Tableau::canonical(&p.core, parse_shape(&p, "1,1,2,2,1").unwrap());
        let a = Tableau::from_coords(
            &p,
            &[
                (4, 2, 1),
                (5, 2, 3),
                (4, 3, 2),
                (5, 3, 5),
                (6, 3, 7),
                (4, 4, 4),
                (5, 4, 6),
            ],
        )
        .unwrap();
        let b = Tableau::from_coords(
            &p,
            &[
                (4, 2, 1),
                (5, 2, 3),
                (4, 3, 2),
                (5, 3, 4),
                (6, 3, 5),
                (4, 4, 6),
                (5, 4, 7),
            ],
        )
        .unwrap();
        assert_eq!(rectify(&p.core, &a), target);
        assert_eq!(rectify(&p.core, &b), target);
        // and these are the only two fillings of the skew shape that do
        let region = skew_region(&p, "1,1,2,4,4,1", "1,1,2,1,1");
        let hits = enumerate_syt(&p.core, region)
            .into_iter()
            .filter(|t| rectify(&p.core, t) == target)
            .count();
        assert_eq!(hits, 2);
    }

    #[test]
    fn slide_and_reverse_are_mutually_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in ["Gr:3,6", "LG:3", "QD:5", "E6"] {
            let p = poset(spec);
            let shapes = all_shapes(&p.core);
            for _ in 0..50 {
                let outer = shapes[rng.gen_range(0..shapes.len())];
                let subs: Vec<_> = shapes.iter().filter(|s| s.subset_of(outer)).collect();
                let inner = *subs[rng.gen_range(0..subs.len())];
                let region = outer.mask() & !inner.mask();
                if region == 0 {
                    continue;
                }
                let t = random_syt(&p.core, region, &mut rng);
                let inner_c = inner_corners(&p.core, t.region());
                if let Some(&x) = inner_c.first() {
                    let slid = jdt_slide(&p.core, &t, x).unwrap();
                    let vacated_mask = (t.region() | (1 << x)) & !slid.region();
                    let y = vacated_mask.trailing_zeros() as usize;
                    assert_eq!(rev_slide(&p.core, &slid, y).unwrap(), t, "{spec}");
                }
                let outer_c = outer_corners(&p.core, t.region());
                if let Some(&x) = outer_c.first() {
                    let slid = rev_slide(&p.core, &t, x).unwrap();
                    let vacated_mask = (t.region() | (1 << x)) & !slid.region();
                    let y = vacated_mask.trailing_zeros() as usize;
                    assert_eq!(jdt_slide(&p.core, &slid, y).unwrap(), t, "{spec}");
                }
            }
        }
    }

    #[test]
    fn rev_slide_is_jdt_on_the_rotated_poset() {
        // relabel i -> m+1-i and rotate: reverse slides become ordinary ones
        let p = poset("LG:3");
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let shapes = all_shapes(&p.core);
        for _ in 0..80 {
            let outer = shapes[rng.gen_range(0..shapes.len())];
            let subs: Vec<_> = shapes.iter().filter(|s| s.subset_of(outer)).collect();
            let inner = *subs[rng.gen_range(0..subs.len())];
            let region = outer.mask() & !inner.mask();
            if region == 0 {
                continue;
            }
            let t = random_syt(&p.core, region, &mut rng);
            let m = t.size() as u8;
            let flip = |t: &Tableau| -> Tableau {
                let mut labels = vec![0u8; p.num_boxes()];
                for b in 0..p.num_boxes() {
                    if let Some(l) = t.label(b) {
                        labels[p.rotate[b]] = m + 1 - l;
                    }
                }
                Tableau { labels }
            };
            for &x in &outer_corners(&p.core, t.region()) {
                let direct = rev_slide(&p.core, &t, x).unwrap();
                let mirrored = flip(&jdt_slide(&p.core, &flip(&t), p.rotate[x]).unwrap());
                assert_eq!(direct, mirrored);
            }
        }
    }

    #[test]
    fn infusion_golden_example() {
        let p = poset("Gr:3,7");
        let t = Tableau::from_coords(&p, &[(1, 1, 1), (2, 1, 2), (1, 2, 3)]).unwrap();
        let u = Tableau::from_coords(
            &p,
            &[(3, 1, 1), (2, 2, 2), (3, 2, 3), (1, 3, 4), (2, 3, 5)],
        )
        .unwrap();
        let (x, y) = infusion(&p.core, &t, &u).unwrap();
        assert_eq!(
            crate::shapes::print_shape(&p, x.shape(&p.core).unwrap()),
            "(3,2)"
        );
        let expected_x = Tableau::from_coords(
            &p,
            &[(1, 1, 1), (2, 1, 3), (1, 2, 2), (2, 2, 5), (1, 3, 4)],
        )
        .unwrap();
        let expected_y =
            Tableau::from_coords(&p, &[(3, 1, 2), (3, 2, 3), (2, 3, 1)]).unwrap();
        assert_eq!(x, expected_x);
        assert_eq!(y, expected_y);
    }

    #[test]
    fn infusion_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for spec in ["Gr:2,5", "LG:3", "QB:4", "QD:5", "E6"] {
            let p = poset(spec);
            let shapes = all_shapes(&p.core);
            for _ in 0..60 {
                let outer = shapes[rng.gen_range(0..shapes.len())];
                let subs: Vec<_> = shapes.iter().filter(|s| s.subset_of(outer)).collect();
                let inner = *subs[rng.gen_range(0..subs.len())];
                let t = random_syt(&p.core, inner.mask(), &mut rng);
                let u = random_syt(&p.core, outer.mask() & !inner.mask(), &mut rng);
                let (x, y) = infusion(&p.core, &t, &u).unwrap();
                // labels migrate as whole sets
                assert_eq!(x.size(), u.size(), "{spec}");
                assert_eq!(y.size(), t.size(), "{spec}");
                let (t2, u2) = infusion(&p.core, &x, &y).unwrap();
                assert_eq!((t2, u2), (t.clone(), u.clone()), "{spec}");
                // and the reverse procedure computes the same pair
                let (rx, ry) = revinfusion(&p.core, &t, &u).unwrap();
                assert_eq!((rx, ry), (x, y), "{spec}");
            }
        }
    }

    #[test]
    fn infusion_equals_revinfusion_exhaustively() {
        let p = poset("Gr:2,4");
        let shapes = all_shapes(&p.core);
        for &outer in &shapes {
            for &inner in &shapes {
                if !inner.subset_of(outer) {
                    continue;
                }
                for t in enumerate_syt(&p.core, inner.mask()) {
                    for u in enumerate_syt(&p.core, outer.mask() & !inner.mask()) {
                        let fused = infusion(&p.core, &t, &u).unwrap();
                        assert_eq!(revinfusion(&p.core, &t, &u).unwrap(), fused);
                        let (x, y) = fused;
                        assert_eq!(infusion(&p.core, &x, &y).unwrap(), (t.clone(), u.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn infusion_of_empty_is_trivial() {
        let p = poset("Gr:2,4");
        let shape = parse_shape(&p, "2,1").unwrap();
        let t = Tableau::canonical(&p.core, shape);
        let empty = Tableau::empty(&p.core);
        let (x, y) = infusion(&p.core, &t, &empty).unwrap();
        assert_eq!(x, empty);
        assert_eq!(y, t);
        let (x, y) = infusion(&p.core, &empty, &t).unwrap();
        assert_eq!(x, t);
        assert_eq!(y, empty);
    }

    #[test]
    fn confluence_under_random_orders() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for spec in ["Gr:3,6", "LG:4", "QD:6", "E6"] {
            let p = poset(spec);
            let shapes = all_shapes(&p.core);
            for _ in 0..60 {
                let outer = shapes[rng.gen_range(0..shapes.len())];
                let subs: Vec<_> = shapes.iter().filter(|s| s.subset_of(outer)).collect();
                let inner = *subs[rng.gen_range(0..subs.len())];
                let region = outer.mask() & !inner.mask();
                let t = random_syt(&p.core, region, &mut rng);
                let mut r1 = ChaCha8Rng::seed_from_u64(rng.gen());
                let mut r2 = ChaCha8Rng::seed_from_u64(rng.gen());
                let a = rectify_by(&p.core, &t, |c| c[r1.gen_range(0..c.len())]);
                let b = rectify_by(&p.core, &t, |c| c[r2.gen_range(0..c.len())]);
                assert_eq!(a, b, "{spec}");
                assert_eq!(a, rectify(&p.core, &t), "{spec}");
            }
        }
    }

    #[test]
    fn rejects_bad_slides() {
        let p = poset("Gr:2,4");
        let shape = parse_shape(&p, "2,1").unwrap();
        let t = Tableau::canonical(&p.core, shape);
        // a straight tableau has no inner corners at all
        assert!(matches!(
            jdt_slide(&p.core, &t, 0),
            Err(Error::NotInnerCorner(0))
        ));
    }
}
