//! Poset embeddings of a smaller space into E6 or E7 along which the
//! coefficients satisfy an exact recursion. The embedding is constructed
//! from root data: a sub-root-system spanned by a subset of the ambient
//! simple roots, a fixed Weyl element `delta`, and the box map
//! `alpha -> delta^{-1} alpha`. Every structural property is verified at
//! construction time.

use crate::error::{Error, Result};
use crate::root_data::{element_with_inversion_set, BoxPoset, CorePoset, Root, SpaceSpec, WeylElement};
use crate::schubert::CoeffTable;
use crate::shapes::{all_shapes, print_shape, Shape};
use std::collections::HashMap;
use std::sync::Arc;

/// The three supported recursions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecursionId {
    E6,
    E7a,
    E7b,
}

impl std::fmt::Display for RecursionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RecursionId::E6 => write!(f, "E6"),
            RecursionId::E7a => write!(f, "E7a"),
            RecursionId::E7b => write!(f, "E7b"),
        }
    }
}

/// A verified recursion datum.
pub struct Recursion {
    pub id: RecursionId,
    pub big: Arc<BoxPoset>,
    /// Human-readable name of the small space.
    pub small_label: String,
    pub small_core: Arc<CorePoset>,
    /// Box map: small box index -> big box index.
    pub theta: Vec<usize>,
    pub delta: WeylElement,
    /// Boxes below or incomparable to the image; equals the inversion set
    /// of `delta`.
    pub l_mask: u32,
    /// Boxes above or incomparable to the image.
    pub gamma_mask: u32,
    pub image_mask: u32,
}

struct RecursionData {
    big_spec: SpaceSpec,
    small_label: &'static str,
    /// Small simple-root index -> big simple-root index (0-based).
    node_map: &'static [usize],
    /// Parabolic node of the small space, as a big simple-root index.
    small_node: usize,
    delta_word: &'static [usize],
    expected_sizes: (usize, usize, usize), // (image, L, Gamma)
}

fn data(id: RecursionId) -> RecursionData {
    match id {
        RecursionId::E6 => RecursionData {
            big_spec: SpaceSpec::E6,
            small_label: "OG(6,12)",
            node_map: &[5, 4, 3, 2, 1],
            small_node: 2,
            delta_word: &[0],
            expected_sizes: (10, 1, 5),
        },
        RecursionId::E7a => RecursionData {
            big_spec: SpaceSpec::E7,
            small_label: "OP2",
            node_map: &[5, 1, 4, 3, 2, 0],
            small_node: 5,
            delta_word: &[6],
            expected_sizes: (16, 1, 10),
        },
        RecursionId::E7b => RecursionData {
            big_spec: SpaceSpec::E7,
            small_label: "OG(7,14)",
            node_map: &[6, 5, 4, 3, 2, 1],
            small_node: 1,
            delta_word: &[0, 2, 3, 4, 5, 6],
            expected_sizes: (15, 6, 6),
        },
    }
}

impl Recursion {
    /// Builds the recursion and verifies every structural invariant; any
    /// failure aborts with the violated clause.
    pub fn build(id: RecursionId) -> Result<Recursion> {
        let d = data(id);
        let big = BoxPoset::build(d.big_spec)?;
        let rs = &big.rs;
        let fail = |clause: &str| Error::Invariant(format!("recursion {id}: {clause}"));

        // boxes of the small space, written as ambient roots: support inside
        // the sub-diagram, parabolic coefficient one
        let in_subsystem = |r: &Root| {
            r.coeffs
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || d.node_map.contains(&i))
        };
        let small_roots: Vec<Root> = rs
            .positive_roots
            .iter()
            .filter(|r| in_subsystem(r) && r.coeffs[d.small_node] == 1)
            .cloned()
            .collect();

        let delta = WeylElement {
            word: d.delta_word.to_vec(),
        };
        let delta_inv = delta.inverse();

        // theta(alpha) = delta^{-1} alpha must land on boxes, injectively
        let mut image_of: Vec<(usize, Root)> = Vec::new();
        for r in &small_roots {
            let img = delta_inv.act(rs, r);
            let b = big
                .boxes
                .iter()
                .position(|x| x.coeffs == img.coeffs)
                .ok_or_else(|| fail("theta image is not a box"))?;
            image_of.push((b, r.clone()));
        }
        image_of.sort_by_key(|(b, _)| *b);
        let theta: Vec<usize> = image_of.iter().map(|(b, _)| *b).collect();
        let small_roots: Vec<Root> = image_of.into_iter().map(|(_, r)| r).collect();
        let mut dedup = theta.clone();
        dedup.dedup();
        if dedup.len() != theta.len() {
            return Err(fail("theta is not injective"));
        }

        // the small poset on its own covers, indexed compatibly with theta
        let nsmall = small_roots.len();
        let mut up = vec![Vec::new(); nsmall];
        let mut down = vec![Vec::new(); nsmall];
        for a in 0..nsmall {
            for b in 0..nsmall {
                if small_roots[b].simple_difference(&small_roots[a]).is_some() {
                    up[a].push(b);
                    down[b].push(a);
                }
            }
        }
        let mut leq = vec![0u32; nsmall];
        let mut order: Vec<usize> = (0..nsmall).collect();
        order.sort_by_key(|&b| small_roots[b].height());
        for &b in &order {
            let mut m = 1u32 << b;
            for &dn in &down[b] {
                m |= leq[dn];
            }
            leq[b] = m;
        }
        let mut geq = vec![0u32; nsmall];
        for b in 0..nsmall {
            for a in 0..nsmall {
                if leq[b] & (1 << a) != 0 {
                    geq[a] |= 1 << b;
                }
            }
        }
        let small_core = Arc::new(CorePoset {
            n: nsmall,
            up_covers: up,
            down_covers: down,
            leq,
            geq,
            short_mask: 0,
            cominuscule: true,
        });

        // theta must be an order isomorphism onto its image
        for a in 0..nsmall {
            for b in 0..nsmall {
                if small_core.lt(a, b) != big.core.lt(theta[a], theta[b]) {
                    return Err(fail("theta does not preserve the order both ways"));
                }
            }
        }

        let image_mask = theta.iter().fold(0u32, |m, &b| m | (1 << b));
        // L is the inversion set of delta
        let mut l_mask = 0u32;
        for k in delta.inversion_set(rs) {
            let root = &rs.positive_roots[k];
            let b = big
                .boxes
                .iter()
                .position(|x| x.coeffs == root.coeffs)
                .ok_or_else(|| fail("an inversion of delta is not a box"))?;
            l_mask |= 1 << b;
        }
        if l_mask & image_mask != 0 {
            return Err(fail("L meets the theta image"));
        }
        let gamma_mask = big.core.full_mask() & !image_mask & !l_mask;

        let sizes = (
            image_mask.count_ones() as usize,
            l_mask.count_ones() as usize,
            gamma_mask.count_ones() as usize,
        );
        if sizes != d.expected_sizes {
            return Err(fail(&format!(
                "decomposition sizes {sizes:?} differ from the expected {:?}",
                d.expected_sizes
            )));
        }

        // L below-or-incomparable, Gamma above-or-incomparable to the image
        for x in 0..big.num_boxes() {
            for &i in &theta {
                if l_mask & (1 << x) != 0 && big.core.lt(i, x) {
                    return Err(fail("an element of L lies above the image"));
                }
                if gamma_mask & (1 << x) != 0 && big.core.lt(x, i) {
                    return Err(fail("an element of Gamma lies below the image"));
                }
            }
        }

        let rec = Recursion {
            id,
            big,
            small_label: d.small_label.to_string(),
            small_core,
            theta,
            delta,
            l_mask,
            gamma_mask,
            image_mask,
        };

        // hat(gamma) is a shape of the big space, for every small shape
        for gamma in all_shapes(&rec.small_core) {
            if !rec.big.core.is_ideal(rec.hat(gamma).mask()) {
                return Err(fail("hat(gamma) is not a shape"));
            }
        }

        // inversion-set correspondence: I(w delta) = hat(I(w))
        for gamma in all_shapes(&rec.small_core) {
            let set: Vec<usize> = (0..rec.small_core.n)
                .filter(|&b| gamma.contains(b))
                .map(|b| {
                    rec.big
                        .rs
                        .positive_index(&small_roots[b])
                        .expect("box is a positive root")
                })
                .collect();
            let w = element_with_inversion_set(&rec.big.rs, &set)?;
            let wd = w.compose(&rec.delta);
            let mut got = 0u32;
            for k in wd.inversion_set(&rec.big.rs) {
                let root = &rec.big.rs.positive_roots[k];
                let b = rec
                    .big
                    .boxes
                    .iter()
                    .position(|x| x.coeffs == root.coeffs)
                    .ok_or_else(|| fail("I(w delta) leaves the box poset"))?;
                got |= 1 << b;
            }
            if got != rec.hat(gamma).mask() {
                return Err(fail("I(w delta) differs from hat(I(w))"));
            }
        }

        if id == RecursionId::E6 {
            let (outer, inner) = rec.image_skew_tuples();
            if (outer.as_str(), inner.as_str()) != ("(1,1,2,3,3,1)", "(1)") {
                return Err(fail(&format!(
                    "E6 image region is {outer}/{inner}, expected (1,1,2,3,3,1)/(1)"
                )));
            }
        }

        Ok(rec)
    }

    /// The shape `hat(gamma) = theta(gamma) union L` of the big space.
    pub fn hat(&self, gamma: Shape) -> Shape {
        let mut mask = self.l_mask;
        for (s, &b) in self.theta.iter().enumerate() {
            if gamma.contains(s) {
                mask |= 1 << b;
            }
        }
        Shape::new(mask)
    }

    /// Pulls a big shape back through theta, dropping the boxes of L.
    pub fn bar(&self, lam: Shape) -> Result<Shape> {
        let mut inverse: HashMap<usize, usize> = HashMap::new();
        for (s, &b) in self.theta.iter().enumerate() {
            inverse.insert(b, s);
        }
        let mut mask = 0u32;
        for b in 0..self.big.num_boxes() {
            if lam.contains(b) && self.l_mask & (1 << b) == 0 {
                let s = inverse
                    .get(&b)
                    .ok_or_else(|| Error::Invariant("shape leaves the image of theta".into()))?;
                mask |= 1 << s;
            }
        }
        Ok(Shape::new(mask))
    }

    /// Tuple notation for the image region: (down-closure, complement inside it).
    pub fn image_skew_tuples(&self) -> (String, String) {
        let outer = self.big.core.down_closure(self.image_mask);
        let inner = outer & !self.image_mask;
        (
            print_shape(&self.big, Shape::new(outer)),
            print_shape(&self.big, Shape::new(inner)),
        )
    }
}

/// Outcome of checking the recursion identity over all admissible triples.
pub struct RecursionOutcome {
    pub triples: u64,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

/// Checks, for every triple with `lam <= nu`, `L <= lam`, `Gamma <= nu^c` and
/// matching degrees, that the big coefficient equals the convolution of
/// small coefficients with big coefficients at first index L.
pub fn check_recursion(
    rec: &Recursion,
    big_table: &CoeffTable,
    small_table: &CoeffTable,
) -> Result<RecursionOutcome> {
    let big_shapes = all_shapes(&rec.big.core);
    let small_shapes = all_shapes(&rec.small_core);
    let l_shape = Shape::new(rec.l_mask);
    let hats: Vec<(Shape, Shape)> = small_shapes.iter().map(|&g| (g, rec.hat(g))).collect();

    let mut triples = 0u64;
    let mut violations = Vec::new();
    for &nu in &big_shapes {
        if nu.mask() & rec.gamma_mask != 0 {
            continue;
        }
        for &lam in &big_shapes {
            if !lam.subset_of(nu) || rec.l_mask & !lam.mask() != 0 {
                continue;
            }
            let lam_bar = rec.bar(lam)?;
            let nu_bar = rec.bar(nu)?;
            for &mu in &big_shapes {
                if lam.size() + mu.size() != nu.size() {
                    continue;
                }
                triples += 1;
                let lhs = big_table.get(lam, mu, nu)?;
                let mut rhs = 0u64;
                for &(gamma, hat) in &hats {
                    let a = small_table.get(lam_bar, gamma, nu_bar)?;
                    if a == 0 {
                        continue;
                    }
                    let b = big_table.get(l_shape, mu, hat)?;
                    rhs = rhs
                        .checked_add(a.checked_mul(b).ok_or(Error::Overflow)?)
                        .ok_or(Error::Overflow)?;
                }
                if lhs != rhs {
                    violations.push(format!(
                        "{}: c({}, {}, {}) = {} but the recursion gives {}",
                        rec.id,
                        print_shape(&rec.big, lam),
                        print_shape(&rec.big, mu),
                        print_shape(&rec.big, nu),
                        lhs,
                        rhs
                    ));
                }
            }
        }
    }
    let (outer, inner) = rec.image_skew_tuples();
    let notes = vec![format!(
        "{}: {} embeds as {}/{} with |L| = {}, |Gamma| = {}",
        rec.id,
        rec.small_label,
        outer,
        inner,
        rec.l_mask.count_ones(),
        rec.gamma_mask.count_ones()
    )];
    Ok(RecursionOutcome {
        triples,
        violations,
        notes,
    })
}

/// Small-space coefficient table for a recursion.
pub fn small_table(rec: &Recursion) -> CoeffTable {
    CoeffTable::from_core(rec.small_core.clone())
}
