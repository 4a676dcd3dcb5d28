//! Root systems, Weyl elements, and the box posets of the supported spaces.

mod grid;
mod poset;
mod roots;
mod weyl;

pub use poset::{BoxPoset, CorePoset, SpaceSpec};
pub use roots::{
    cominuscule_nodes, is_biconvex, is_biconvex_with, rank2_subsystems, weyl_order, Root,
    RootSystem, TypeLabel,
};
pub use weyl::{bruhat_leq, element_with_inversion_set, WeylElement};

use crate::error::{Error, Result};
use crate::shapes::Shape;

/// The minimal-length coset representative indexing a shape.
///
/// On cominuscule spaces (and the delegated minuscule orthogonal
/// Grassmannian) this is the unique Grassmannian element whose inversion set
/// is the shape. On the minuscule projective space the inversion sets of
/// minimal representatives are not order ideals, so the representative is
/// selected by its length instead.
pub fn shape_to_weyl(poset: &BoxPoset, shape: Shape) -> Result<WeylElement> {
    if !poset.core.is_ideal(shape.mask()) {
        return Err(Error::NotAShape(shape.mask()));
    }
    if matches!(poset.spec, SpaceSpec::Pmin { .. }) {
        return pmin_representative(poset, shape.size());
    }
    let set: Vec<usize> = (0..poset.num_boxes())
        .filter(|&b| shape.contains(b))
        .map(|b| {
            poset
                .rs
                .positive_index(&poset.boxes[b])
                .expect("box is a positive root")
        })
        .collect();
    element_with_inversion_set(&poset.rs, &set)
}

/// Inverse of [`shape_to_weyl`]: reads the shape off the inversion set of a
/// Grassmannian element, rejecting elements with a descent away from the
/// parabolic node.
pub fn weyl_to_shape(poset: &BoxPoset, w: &WeylElement) -> Result<Shape> {
    let descents = w.descents(&poset.rs);
    if let Some(&d) = descents.iter().find(|&&d| d != poset.node) {
        return Err(Error::NotGrassmannian(d + 1));
    }
    if matches!(poset.spec, SpaceSpec::Pmin { .. }) {
        let len = w.length(&poset.rs);
        return Ok(Shape::of_size_prefix(&poset.core, len));
    }
    let inv = w.inversion_set(&poset.rs);
    let mut mask = 0u32;
    for k in inv {
        let root = &poset.rs.positive_roots[k];
        let b = poset
            .boxes
            .iter()
            .position(|r| r.coeffs == root.coeffs)
            .ok_or_else(|| Error::Invariant("inversion set leaves the box poset".into()))?;
        mask |= 1 << b;
    }
    if !poset.core.is_ideal(mask) {
        return Err(Error::Invariant("inversion set is not an order ideal".into()));
    }
    Ok(Shape::new(mask))
}

/// Minimal coset representative of the given length for the projective
/// space. The quotient is a chain, so each representative is a left
/// extension of the previous one by a single simple reflection.
fn pmin_representative(poset: &BoxPoset, len: usize) -> Result<WeylElement> {
    let rs = &poset.rs;
    let mut current = vec![WeylElement::identity()];
    for _ in 0..len {
        let mut next: Vec<WeylElement> = Vec::new();
        for w in &current {
            for i in 0..rs.rank {
                let cand = WeylElement::simple(i).compose(w);
                if cand.length(rs) != w.word.len() + 1 {
                    continue;
                }
                if cand.descents(rs).iter().any(|&d| d != poset.node) {
                    continue;
                }
                if next.iter().all(|x| x.simple_images(rs) != cand.simple_images(rs)) {
                    next.push(cand);
                }
            }
        }
        if next.len() != 1 {
            return Err(Error::NoWeylCorrespondence(poset.spec.to_string()));
        }
        current = next;
    }
    Ok(current.pop().expect("one representative per length"))
}
