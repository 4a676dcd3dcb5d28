//! Intersection numbers via the jeu de taquin rule, Schubert-basis product
//! expansions, the single-box product formula, box powers, and memoized
//! coefficient tables with JSON/CSV export.

use crate::error::{Error, Result};
use crate::root_data::{BoxPoset, CorePoset};
use crate::shapes::{all_shapes, parse_shape, print_shape, shortroots, Shape};
use crate::tableaux::{enumerate_syt, rectify, Tableau};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

/// Memoized coefficient table for one space.
///
/// Entries are symmetric in the first two shapes and vanish unless the
/// degrees add up and the first shape is contained in the third. The heavy
/// unit of work is shared across triples: for a fixed skew region, one pass
/// over its standard fillings tallies, per rectification shape, how many
/// fillings rectify to the fixed first tableau of that shape.
pub struct CoeffTable {
    core: Arc<CorePoset>,
    poset: Option<Arc<BoxPoset>>,
    rect_counts: Mutex<HashMap<u32, Arc<BTreeMap<u32, u64>>>>,
    overrides: Mutex<HashMap<(u32, u32, u32), u64>>,
}

/// One exported table row; shapes in column-tuple notation.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableRow {
    pub lam: String,
    pub mu: String,
    pub nu: String,
    pub c: u64,
}

impl CoeffTable {
    pub fn new(poset: Arc<BoxPoset>) -> CoeffTable {
        CoeffTable {
            core: Arc::new(poset.core.clone()),
            poset: Some(poset),
            rect_counts: Mutex::new(HashMap::new()),
            overrides: Mutex::new(HashMap::new()),
        }
    }

    /// A table over bare order data, for embedded posets without a grid.
    pub fn from_core(core: Arc<CorePoset>) -> CoeffTable {
        CoeffTable {
            core,
            poset: None,
            rect_counts: Mutex::new(HashMap::new()),
            overrides: Mutex::new(HashMap::new()),
        }
    }

    pub fn poset(&self) -> &Arc<BoxPoset> {
        self.poset.as_ref().expect("table was built from a space")
    }

    pub fn core(&self) -> &CorePoset {
        &self.core
    }

    /// Per-shape counts of fillings of `region` rectifying to the canonical
    /// tableau of that shape. The map depends only on the region.
    fn counts_for_region(&self, region: u32) -> Arc<BTreeMap<u32, u64>> {
        if let Some(hit) = self.rect_counts.lock().unwrap().get(&region) {
            return hit.clone();
        }
        let computed = Arc::new(compute_rect_counts(&self.core, region));
        self.rect_counts
            .lock()
            .unwrap()
            .entry(region)
            .or_insert(computed)
            .clone()
    }

    /// The intersection number for the triple, computed by the tableau rule.
    pub fn get(&self, lam: Shape, mu: Shape, nu: Shape) -> Result<u64> {
        let core = &self.core;
        for s in [lam, mu, nu] {
            if !core.is_ideal(s.mask()) {
                return Err(Error::NotAShape(s.mask()));
            }
        }
        if let Some(&v) = self
            .overrides
            .lock()
            .unwrap()
            .get(&(lam.mask(), mu.mask(), nu.mask()))
        {
            return Ok(v);
        }
        if !lam.subset_of(nu) || lam.size() + mu.size() != nu.size() {
            return Ok(0);
        }
        let region = nu.mask() & !lam.mask();
        let count = self
            .counts_for_region(region)
            .get(&mu.mask())
            .copied()
            .unwrap_or(0);
        if !core.cominuscule || count == 0 {
            return Ok(count);
        }
        let sr_region = shortroots(core, region);
        let sr_mu = shortroots(core, mu.mask());
        if sr_mu > sr_region {
            return Err(Error::Invariant(format!(
                "negative short-root exponent for region {region:#x}, mu {:#x}",
                mu.mask()
            )));
        }
        count
            .checked_mul(1u64.checked_shl(sr_region - sr_mu).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)
    }

    /// Replaces one entry; a fault-injection hook used by the negative tests
    /// of the verification suites.
    pub fn inject(&self, lam: Shape, mu: Shape, nu: Shape, value: u64) {
        self.overrides
            .lock()
            .unwrap()
            .insert((lam.mask(), mu.mask(), nu.mask()), value);
    }

    /// All admissible triples (containment and matching degree), with their
    /// coefficients, in deterministic order. Zero entries are kept.
    pub fn fill_all(&self, bound: usize) -> Result<Vec<(Shape, Shape, Shape, u64)>> {
        let shapes = all_shapes(&self.core);
        if shapes.len() > bound {
            return Err(Error::TableTooLarge {
                shapes: shapes.len(),
                bound,
            });
        }
        // one enumeration per distinct region, in parallel
        let regions: Vec<u32> = {
            let mut rs: Vec<u32> = shapes
                .iter()
                .flat_map(|nu| {
                    shapes
                        .iter()
                        .filter(|lam| lam.subset_of(*nu))
                        .map(|lam| nu.mask() & !lam.mask())
                        .collect::<Vec<_>>()
                })
                .collect();
            rs.sort_unstable();
            rs.dedup();
            rs
        };
        let fresh: Vec<(u32, Arc<BTreeMap<u32, u64>>)> = regions
            .par_iter()
            .map(|&r| (r, Arc::new(compute_rect_counts(&self.core, r))))
            .collect();
        {
            let mut cache = self.rect_counts.lock().unwrap();
            for (r, counts) in fresh {
                cache.entry(r).or_insert(counts);
            }
        }
        let mut out = Vec::new();
        for &nu in &shapes {
            for &lam in &shapes {
                if !lam.subset_of(nu) {
                    continue;
                }
                for &mu in &shapes {
                    if lam.size() + mu.size() != nu.size() {
                        continue;
                    }
                    out.push((lam, mu, nu, self.get(lam, mu, nu)?));
                }
            }
        }
        out.sort_by_key(|(l, m, n, _)| (n.mask(), l.mask(), m.mask()));
        Ok(out)
    }

    pub fn export_rows(&self, bound: usize) -> Result<Vec<TableRow>> {
        let p = self.poset();
        Ok(self
            .fill_all(bound)?
            .into_iter()
            .map(|(lam, mu, nu, c)| TableRow {
                lam: print_shape(p, lam),
                mu: print_shape(p, mu),
                nu: print_shape(p, nu),
                c,
            })
            .collect())
    }

    pub fn to_json(&self, bound: usize) -> Result<String> {
        let rows = self.export_rows(bound)?;
        Ok(serde_json::to_string_pretty(&rows).expect("rows serialize"))
    }

    pub fn to_csv(&self, bound: usize) -> Result<String> {
        let rows = self.export_rows(bound)?;
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in rows {
            w.serialize(row).expect("csv row");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).map_err(|_| Error::Overflow)
    }

    /// Parses rows exported by [`CoeffTable::to_json`] or [`to_csv`] back
    /// into triples over this table's space.
    pub fn import_rows(&self, rows: &[TableRow]) -> Result<Vec<(Shape, Shape, Shape, u64)>> {
        rows.iter()
            .map(|r| {
                Ok((
                    parse_shape(self.poset(), &r.lam)?,
                    parse_shape(self.poset(), &r.mu)?,
                    parse_shape(self.poset(), &r.nu)?,
                    r.c,
                ))
            })
            .collect()
    }
}

fn compute_rect_counts(core: &CorePoset, region: u32) -> BTreeMap<u32, u64> {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for filling in enumerate_syt(core, region) {
        let rect = rectify(core, &filling);
        let shape = rect.region();
        if rect == Tableau::canonical(core, Shape::new(shape)) {
            *counts.entry(shape).or_insert(0) += 1;
        }
    }
    counts
}

/// The Schubert intersection number `c_{lam,mu}^{nu}` of the space.
pub fn lrc(table: &CoeffTable, lam: Shape, mu: Shape, nu: Shape) -> Result<u64> {
    table.get(lam, mu, nu)
}

/// Expands `sigma_lam * sigma_mu` in the Schubert basis; zero terms omitted.
pub fn product_expand(table: &CoeffTable, lam: Shape, mu: Shape) -> Result<BTreeMap<Shape, u64>> {
    let core = &table.core;
    for s in [lam, mu] {
        if !core.is_ideal(s.mask()) {
            return Err(Error::NotAShape(s.mask()));
        }
    }
    let mut out = BTreeMap::new();
    for nu in all_shapes(core) {
        if nu.size() == lam.size() + mu.size() && lam.subset_of(nu) && mu.subset_of(nu) {
            let c = table.get(lam, mu, nu)?;
            if c != 0 {
                out.insert(nu, c);
            }
        }
    }
    Ok(out)
}

/// The single-box product: one term for each addable box, with coefficient
/// `2^(short boxes added)` in the cominuscule case and 1 otherwise.
pub fn chevalley_product(poset: &BoxPoset, lam: Shape) -> Result<BTreeMap<Shape, u64>> {
    let core = &poset.core;
    if !core.is_ideal(lam.mask()) {
        return Err(Error::NotAShape(lam.mask()));
    }
    let mut out = BTreeMap::new();
    for b in 0..core.n {
        if lam.contains(b) {
            continue;
        }
        if core.down_covers[b].iter().all(|&d| lam.contains(d)) {
            let mu = Shape::new(lam.mask() | (1 << b));
            let coeff = if core.cominuscule && core.short_mask & (1 << b) != 0 {
                2
            } else {
                1
            };
            out.insert(mu, coeff);
        }
    }
    Ok(out)
}

/// The i-th power of the single-box class, by iterating the single-box
/// product from the empty shape.
pub fn box_power(poset: &BoxPoset, i: usize) -> Result<BTreeMap<Shape, u64>> {
    if i > poset.num_boxes() {
        return Err(Error::NotAShape(1 << poset.num_boxes()));
    }
    let mut current: BTreeMap<Shape, u64> = BTreeMap::new();
    current.insert(Shape::EMPTY, 1);
    for _ in 0..i {
        let mut next: BTreeMap<Shape, u64> = BTreeMap::new();
        for (&lam, &c) in &current {
            for (mu, mult) in chevalley_product(poset, lam)? {
                let term = c.checked_mul(mult).ok_or(Error::Overflow)?;
                let slot = next.entry(mu).or_insert(0);
                *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        current = next;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::BoxPoset;
    use crate::shapes::complement;
    use crate::tableaux::count_syt;

    fn table(spec: &str) -> CoeffTable {
        CoeffTable::new(BoxPoset::build(spec.parse().unwrap()).unwrap())
    }

    fn shp(t: &CoeffTable, s: &str) -> Shape {
        parse_shape(t.poset(), s).unwrap()
    }

    #[test]
    fn grassmannian_golden() {
        let t = table("Gr:4,7");
        let c = t
            .get(shp(&t, "3,1"), shp(&t, "2,1"), shp(&t, "4,2,1"))
            .unwrap();
        assert_eq!(c, 2);
    }

    #[test]
    fn lagrangian_golden_and_spinor_twin() {
        let lg = table("LG:4");
        assert_eq!(
            lg.get(shp(&lg, "2,1"), shp(&lg, "2,1"), shp(&lg, "4,2")).unwrap(),
            4
        );
        let og = table("OG:5");
        assert_eq!(
            og.get(shp(&og, "2,1"), shp(&og, "2,1"), shp(&og, "4,2")).unwrap(),
            1
        );
    }

    #[test]
    fn quadric_goldens() {
        let qb = table("QB:4");
        assert_eq!(
            qb.get(shp(&qb, "1,1"), shp(&qb, "1,1"), shp(&qb, "1,1,1,1")).unwrap(),
            2
        );
        let qd5 = table("QD:5");
        let full5 = Shape::full(&qd5.poset().core);
        assert_eq!(
            qd5.get(shp(&qd5, "1,1,2"), shp(&qd5, "1,1,2"), full5).unwrap(),
            1
        );
        assert_eq!(
            qd5.get(shp(&qd5, "1,1,2"), shp(&qd5, "1,1,1,1"), full5).unwrap(),
            0
        );
        let qd6 = table("QD:6");
        let full6 = Shape::full(&qd6.poset().core);
        assert_eq!(
            qd6.get(shp(&qd6, "1,1,1,2"), shp(&qd6, "1,1,1,1,1"), full6).unwrap(),
            1
        );
    }

    #[test]
    fn exceptional_goldens() {
        let e6 = table("E6");
        assert_eq!(
            e6.get(shp(&e6, "1,1,2,1,1"), shp(&e6, "1,1,2,2,1"), shp(&e6, "1,1,2,4,4,1"))
                .unwrap(),
            2
        );
        let e7 = table("E7");
        assert_eq!(
            e7.get(
                shp(&e7, "1,1,1,2,5,3"),
                shp(&e7, "1,1,1,2,1"),
                shp(&e7, "1,1,1,2,5,5,2,1,1")
            )
            .unwrap(),
            4
        );
    }

    #[test]
    fn empty_shape_rules() {
        let t = table("Gr:3,6");
        for s in all_shapes(&t.poset().core) {
            assert_eq!(t.get(Shape::EMPTY, s, s).unwrap(), 1);
            for nu in all_shapes(&t.poset().core) {
                if nu != s {
                    assert_eq!(t.get(Shape::EMPTY, s, nu).unwrap(), if nu == s { 1 } else { 0 });
                }
            }
        }
    }

    #[test]
    fn structural_zeros() {
        let t = table("Gr:2,4");
        assert_eq!(t.get(shp(&t, "1"), shp(&t, "1"), shp(&t, "2,1")).unwrap(), 0);
        assert_eq!(t.get(shp(&t, "2"), shp(&t, "1"), shp(&t, "1,1")).unwrap(), 0);
    }

    #[test]
    fn product_expansion_examples() {
        let t = table("Gr:2,4");
        for mu in all_shapes(&t.poset().core) {
            let unit = product_expand(&t, Shape::EMPTY, mu).unwrap();
            assert_eq!(unit, [(mu, 1)].into_iter().collect());
        }
        let got = product_expand(&t, shp(&t, "1"), shp(&t, "1")).unwrap();
        let expected: BTreeMap<Shape, u64> =
            [(shp(&t, "2"), 1), (shp(&t, "1,1"), 1)].into_iter().collect();
        assert_eq!(got, expected);

        let qd = table("QD:5");
        let a = shp(&qd, "1,1,2");
        let full = Shape::full(&qd.poset().core);
        let got = product_expand(&qd, a, a).unwrap();
        assert_eq!(got, [(full, 1)].into_iter().collect());
        let got = product_expand(&qd, a, shp(&qd, "1,1,1,1")).unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn chevalley_examples() {
        let lg2 = CoeffTable::new(BoxPoset::build("LG:2".parse().unwrap()).unwrap());
        let got = chevalley_product(lg2.poset(), shp(&lg2, "1")).unwrap();
        assert_eq!(got, [(shp(&lg2, "2"), 2)].into_iter().collect());

        // simply-laced: all coefficients are 1
        let e6 = table("E6");
        for lam in all_shapes(&e6.poset().core) {
            for (_, c) in chevalley_product(e6.poset(), lam).unwrap() {
                assert_eq!(c, 1);
            }
        }

        // nothing to add on the full shape
        let full = Shape::full(&e6.poset().core);
        assert!(chevalley_product(e6.poset(), full).unwrap().is_empty());
    }

    #[test]
    fn chevalley_agrees_with_the_rule() {
        for spec in ["Gr:2,5", "LG:3", "QB:4", "QD:5", "OG:5", "Pmin:3", "OGmin:4"] {
            let t = table(spec);
            let single = Shape::new(1); // the minimal box
            for lam in all_shapes(&t.poset().core) {
                assert_eq!(
                    chevalley_product(t.poset(), lam).unwrap(),
                    product_expand(&t, lam, single).unwrap(),
                    "{spec} {lam:?}"
                );
            }
        }
    }

    #[test]
    fn box_power_closed_form() {
        // sigma_box^i = sum over |gamma| = i of f^gamma 2^shortroots(gamma)
        for spec in ["QB:4", "LG:3", "QD:5", "E6"] {
            let t = table(spec);
            let p = t.poset();
            for i in 0..=p.num_boxes() {
                let got = box_power(p, i).unwrap();
                let mut expected = BTreeMap::new();
                for gamma in all_shapes(&p.core) {
                    if gamma.size() == i {
                        let f = count_syt(&p.core, gamma.mask());
                        let pow = if p.core.cominuscule {
                            1u64 << shortroots(&p.core, gamma.mask())
                        } else {
                            1
                        };
                        expected.insert(gamma, f * pow);
                    }
                }
                assert_eq!(got, expected, "{spec} power {i}");
            }
        }
    }

    #[test]
    fn box_power_zero_is_the_unit() {
        let t = table("Gr:2,4");
        let got = box_power(t.poset(), 0).unwrap();
        assert_eq!(got, [(Shape::EMPTY, 1)].into_iter().collect());
    }

    #[test]
    fn full_table_gr24_is_multiplicity_free() {
        let t = table("Gr:2,4");
        let rows = t.fill_all(70).unwrap();
        assert!(rows.iter().all(|&(_, _, _, c)| c <= 1));
        assert_eq!(all_shapes(&t.poset().core).len(), 6);
    }

    #[test]
    fn full_table_respects_bound() {
        let t = table("Gr:2,5");
        assert!(matches!(
            t.fill_all(5),
            Err(Error::TableTooLarge { shapes: 10, bound: 5 })
        ));
    }

    #[test]
    fn export_round_trip() {
        let t = table("LG:3");
        let json = t.to_json(70).unwrap();
        let rows: Vec<TableRow> = serde_json::from_str(&json).unwrap();
        let back = t.import_rows(&rows).unwrap();
        assert_eq!(back, t.fill_all(70).unwrap());

        let csv_text = t.to_csv(70).unwrap();
        let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
        let rows2: Vec<TableRow> = rdr.deserialize().map(|r| r.unwrap()).collect();
        assert_eq!(rows2, rows);
    }

    #[test]
    fn duality_on_a_small_space() {
        let t = table("Gr:2,4");
        let p = t.poset();
        let shapes = all_shapes(&p.core);
        let full = Shape::full(&p.core);
        for &lam in &shapes {
            for &mu in &shapes {
                if lam.size() + mu.size() != p.num_boxes() {
                    continue;
                }
                let expected = if lam.mask()
                    == crate::shapes::rotate_set(p, complement(&p.core, mu))
                {
                    1
                } else {
                    0
                };
                assert_eq!(t.get(lam, mu, full).unwrap(), expected);
            }
        }
    }

    #[test]
    fn inject_changes_one_entry() {
        let t = table("Gr:2,4");
        let lam = shp(&t, "1");
        let nu = shp(&t, "2");
        assert_eq!(t.get(lam, lam, nu).unwrap(), 1);
        t.inject(lam, lam, nu, 9);
        assert_eq!(t.get(lam, lam, nu).unwrap(), 9);
    }
}
