//! Executable verification: every combinatorial identity the coefficient
//! rule satisfies, packaged as deterministic, seedable suites with a common
//! report format. The checks are intentionally redundant with theory; a
//! violation in any suite indicates a defect somewhere in the pipeline.

pub mod oracle;
pub mod recursion;

use crate::error::{Error, Result};
use crate::root_data::{BoxPoset, SpaceSpec};
use crate::schubert::{box_power, chevalley_product, product_expand, CoeffTable};
use crate::shapes::{
    all_shapes, complement, print_shape, rotate_set, shortroots, Shape,
};
use crate::tableaux::{
    count_syt, enumerate_syt, infusion, random_syt, rectify, rectify_by, revinfusion, revrectify,
    revrectify_by, Tableau,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

pub use oracle::{lr_coefficient, lr_oracle_type_a};
pub use recursion::{check_recursion, small_table, Recursion, RecursionId};

/// Outcome of one suite run. Deterministic given `(space, suite, seed)`
/// except for the elapsed time.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub space: String,
    pub trials: u64,
    pub violations: Vec<String>,
    pub seed: u64,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "suite {} on {}: {} ({} trials, seed {}, {} ms)",
            self.suite,
            self.space,
            if self.passed() { "pass" } else { "FAIL" },
            self.trials,
            self.seed,
            self.elapsed_ms
        );
        for n in &self.notes {
            out.push_str(&format!("\n  note: {n}"));
        }
        for v in self.violations.iter().take(20) {
            out.push_str(&format!("\n  violation: {v}"));
        }
        if self.violations.len() > 20 {
            out.push_str(&format!("\n  ... and {} more", self.violations.len() - 20));
        }
        out
    }
}

pub const SUITES: &[&str] = &[
    "confluence",
    "infusion",
    "axioms",
    "duality",
    "chevalley",
    "associativity",
    "recursion",
    "oracle",
    "isomorphism",
];

/// Runs one named suite on one space.
pub fn run_suite(spec: SpaceSpec, suite: &str, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let mut notes = Vec::new();
    let (trials, violations) = match suite {
        "confluence" => confluence_violations(&BoxPoset::build(spec)?, seed, 256, &rectify),
        "infusion" => infusion_violations(&BoxPoset::build(spec)?, seed, 256, &infusion),
        "axioms" => axiom_violations(&CoeffTable::new(BoxPoset::build(spec)?))?,
        "duality" => duality_violations(&CoeffTable::new(BoxPoset::build(spec)?))?,
        "chevalley" => chevalley_violations(&CoeffTable::new(BoxPoset::build(spec)?))?,
        "associativity" => {
            associativity_violations(&CoeffTable::new(BoxPoset::build(spec)?), seed, 500)?
        }
        "recursion" => {
            let ids = match spec {
                SpaceSpec::E6 => vec![RecursionId::E6],
                SpaceSpec::E7 => vec![RecursionId::E7a, RecursionId::E7b],
                _ => {
                    return Err(Error::UnsupportedSpace {
                        spec: spec.to_string(),
                        reason: "the recursion suite runs on E6 or E7".into(),
                    })
                }
            };
            let mut trials = 0;
            let mut violations = Vec::new();
            for id in ids {
                let rec = Recursion::build(id)?;
                let big = CoeffTable::new(rec.big.clone());
                let small = small_table(&rec);
                let out = check_recursion(&rec, &big, &small)?;
                trials += out.triples;
                violations.extend(out.violations);
                notes.extend(out.notes);
            }
            (trials, violations)
        }
        "oracle" => match spec {
            SpaceSpec::Gr { k, n } => {
                oracle_violations(&CoeffTable::new(BoxPoset::build(spec)?), k, n)?
            }
            _ => {
                return Err(Error::UnsupportedSpace {
                    spec: spec.to_string(),
                    reason: "the oracle suite runs on Gr:k,n".into(),
                })
            }
        },
        "isomorphism" => isomorphism_violations(spec)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(Report {
        suite: suite.to_string(),
        space: spec.to_string(),
        trials,
        violations,
        seed,
        elapsed_ms: start.elapsed().as_millis(),
        notes,
    })
}

fn random_skew(
    poset: &BoxPoset,
    shapes: &[Shape],
    rng: &mut ChaCha8Rng,
) -> (Shape, Shape) {
    let outer = shapes[rng.gen_range(0..shapes.len())];
    let subs: Vec<Shape> = shapes
        .iter()
        .copied()
        .filter(|s| s.subset_of(outer))
        .collect();
    let inner = subs[rng.gen_range(0..subs.len())];
    let _ = poset;
    (inner, outer)
}

/// Slide-order independence: two random rectification orders (and two
/// random reverse-rectification orders) produce the same tableau.
pub(crate) fn confluence_violations(
    poset: &Arc<BoxPoset>,
    seed: u64,
    trials: u64,
    rectifier: &dyn Fn(&crate::root_data::CorePoset, &Tableau) -> Tableau,
) -> (u64, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes = all_shapes(&poset.core);
    let mut violations = Vec::new();
    for trial in 0..trials {
        let (inner, outer) = random_skew(poset, &shapes, &mut rng);
        let region = outer.mask() & !inner.mask();
        let t = random_syt(&poset.core, region, &mut rng);
        let mut r1 = ChaCha8Rng::seed_from_u64(rng.gen());
        let mut r2 = ChaCha8Rng::seed_from_u64(rng.gen());
        let a = rectify_by(&poset.core, &t, |c| c[r1.gen_range(0..c.len())]);
        let b = rectify_by(&poset.core, &t, |c| c[r2.gen_range(0..c.len())]);
        let fixed = rectifier(&poset.core, &t);
        if a != b || a != fixed {
            violations.push(format!("trial {trial}: rectification orders disagree"));
        }
        let mut r3 = ChaCha8Rng::seed_from_u64(rng.gen());
        let mut r4 = ChaCha8Rng::seed_from_u64(rng.gen());
        let ra = revrectify_by(&poset.core, &t, |c| c[r3.gen_range(0..c.len())]);
        let rb = revrectify_by(&poset.core, &t, |c| c[r4.gen_range(0..c.len())]);
        if ra != rb || ra != revrectify(&poset.core, &t) {
            violations.push(format!("trial {trial}: reverse orders disagree"));
        }
    }
    (trials, violations)
}

type InfusionFn = dyn Fn(
    &crate::root_data::CorePoset,
    &Tableau,
    &Tableau,
) -> Result<(Tableau, Tableau)>;

/// The infusion involution, its agreement with the reverse procedure, label
/// conservation, and (on small spaces) the rotation bijection and the
/// rectification-count invariance.
pub(crate) fn infusion_violations(
    poset: &Arc<BoxPoset>,
    seed: u64,
    trials: u64,
    infuse: &InfusionFn,
) -> (u64, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core = &poset.core;
    let shapes = all_shapes(core);
    let mut violations = Vec::new();
    let mut total = 0u64;
    for trial in 0..trials {
        total += 1;
        let (inner, outer) = random_skew(poset, &shapes, &mut rng);
        let t = random_syt(core, inner.mask(), &mut rng);
        let u = random_syt(core, outer.mask() & !inner.mask(), &mut rng);
        let Ok((x, y)) = infuse(core, &t, &u) else {
            violations.push(format!("trial {trial}: infusion rejected a valid pair"));
            continue;
        };
        if x.size() != u.size() || y.size() != t.size() {
            violations.push(format!("trial {trial}: label sets are not conserved"));
        }
        if x.shape(core).is_err() {
            violations.push(format!("trial {trial}: first output is not straight"));
        }
        match infuse(core, &x, &y) {
            Ok(pair) if pair == (t.clone(), u.clone()) => {}
            _ => violations.push(format!("trial {trial}: infusion is not an involution")),
        }
        match revinfusion(core, &t, &u) {
            Ok(pair) if pair == (x.clone(), y.clone()) => {}
            _ => violations.push(format!(
                "trial {trial}: reverse infusion disagrees with infusion"
            )),
        }
    }

    if shapes.len() <= 30 {
        // rotation bijection, exhaustively per shape
        for &mu in &shapes {
            total += 1;
            let rotated = rotate_set(poset, mu.mask());
            for v in enumerate_syt(core, rotated) {
                let r = rectify(core, &v);
                if r.region() != mu.mask() || revrectify(core, &r) != v {
                    violations.push(format!(
                        "rotation bijection fails on {}",
                        print_shape(poset, mu)
                    ));
                    break;
                }
            }
            for t in enumerate_syt(core, mu.mask()) {
                let rv = revrectify(core, &t);
                if rv.region() != rotated || rectify(core, &rv) != t {
                    violations.push(format!(
                        "reverse rotation bijection fails on {}",
                        print_shape(poset, mu)
                    ));
                    break;
                }
            }
        }
        // the number of fillings rectifying to a fixed tableau depends only
        // on its shape
        for &outer in &shapes {
            for &inner in &shapes {
                if !inner.subset_of(outer) || inner == outer {
                    continue;
                }
                total += 1;
                let mut by_target: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
                for f in enumerate_syt(core, outer.mask() & !inner.mask()) {
                    *by_target.entry(rectify(core, &f).labels().to_vec()).or_insert(0) += 1;
                }
                let mut by_shape: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
                for (labels, count) in by_target {
                    let region = labels
                        .iter()
                        .enumerate()
                        .filter(|(_, &l)| l != 0)
                        .fold(0u32, |m, (b, _)| m | (1 << b));
                    by_shape.entry(region).or_default().push(count);
                }
                for (region, counts) in by_shape {
                    let expected = count_syt(core, region);
                    if counts.len() as u64 != expected || counts.iter().any(|&c| c != counts[0]) {
                        violations.push(format!(
                            "rectification counts vary over targets of shape {}",
                            print_shape(poset, Shape::new(region))
                        ));
                    }
                }
            }
        }
    }
    (total, violations)
}

/// The four structure-constant axioms, checked on the full table.
pub(crate) fn axiom_violations(table: &CoeffTable) -> Result<(u64, Vec<String>)> {
    let poset = table.poset().clone();
    let core = &poset.core;
    table.fill_all(70)?;
    let shapes = all_shapes(core);
    let mut violations = Vec::new();
    let mut trials = 0u64;
    let pr = |s: Shape| print_shape(&poset, s);
    let rc = |s: Shape| Shape::new(rotate_set(&poset, complement(core, s)));

    for &lam in &shapes {
        for &mu in &shapes {
            for &nu in &shapes {
                trials += 1;
                let d = table.get(lam, mu, nu)?;
                // symmetry under swapping the lower indices and under the
                // rotation of complements pushing an index across
                let variants = [
                    table.get(mu, lam, nu)?,
                    table.get(rc(nu), mu, rc(lam))?,
                    table.get(lam, rc(nu), rc(mu))?,
                    table.get(rc(nu), lam, rc(mu))?,
                    table.get(mu, rc(nu), rc(lam))?,
                ];
                if variants.iter().any(|&v| v != d) {
                    violations.push(format!(
                        "symmetry fails at ({}, {}, {})",
                        pr(lam),
                        pr(mu),
                        pr(nu)
                    ));
                }
                if lam.size() + mu.size() != nu.size() && d != 0 {
                    violations.push(format!(
                        "codimension fails at ({}, {}, {})",
                        pr(lam),
                        pr(mu),
                        pr(nu)
                    ));
                }
                if !lam.subset_of(nu) && d != 0 {
                    violations.push(format!(
                        "containment fails at ({}, {}, {})",
                        pr(lam),
                        pr(mu),
                        pr(nu)
                    ));
                }
            }
        }
    }

    // iterated box product: both sides scaled by 2^shortroots(region) to
    // stay in integers
    let f: BTreeMap<Shape, u64> = shapes
        .iter()
        .map(|&s| (s, count_syt(core, s.mask())))
        .collect();
    for &nu in &shapes {
        for &lam in &shapes {
            if !lam.subset_of(nu) {
                continue;
            }
            trials += 1;
            let region = nu.mask() & !lam.mask();
            let mut lhs = 0u64;
            for &gamma in &shapes {
                if gamma.size() != nu.size() - lam.size() {
                    continue;
                }
                let pow = 1u64 << shortroots(core, gamma.mask());
                lhs = lhs
                    .checked_add(
                        f[&gamma]
                            .checked_mul(table.get(lam, gamma, nu)?)
                            .and_then(|x| x.checked_mul(pow))
                            .ok_or(Error::Overflow)?,
                    )
                    .ok_or(Error::Overflow)?;
            }
            let rhs = count_syt(core, region)
                .checked_mul(1u64 << shortroots(core, region))
                .ok_or(Error::Overflow)?;
            if lhs != rhs {
                violations.push(format!(
                    "iterated box product fails at ({}, {}): {} vs {}",
                    pr(lam),
                    pr(nu),
                    lhs,
                    rhs
                ));
            }
        }
    }
    Ok((trials, violations))
}

/// Complementary-degree products collapse to the point class exactly on
/// rotated complements, and overlapping pairs multiply to zero.
pub(crate) fn duality_violations(table: &CoeffTable) -> Result<(u64, Vec<String>)> {
    let poset = table.poset().clone();
    let core = &poset.core;
    let shapes = all_shapes(core);
    let full = Shape::full(core);
    let mut violations = Vec::new();
    let mut trials = 0u64;
    for &lam in &shapes {
        for &mu in &shapes {
            if lam.size() + mu.size() == core.n {
                trials += 1;
                let expected =
                    u64::from(lam.mask() == rotate_set(&poset, complement(core, mu)));
                let got = table.get(lam, mu, full)?;
                if got != expected {
                    violations.push(format!(
                        "duality fails at ({}, {}): {} vs {}",
                        print_shape(&poset, lam),
                        print_shape(&poset, mu),
                        got,
                        expected
                    ));
                }
            }
            if lam.mask() & rotate_set(&poset, mu.mask()) != 0 {
                trials += 1;
                if !product_expand(table, lam, mu)?.is_empty() {
                    violations.push(format!(
                        "overlap vanishing fails at ({}, {})",
                        print_shape(&poset, lam),
                        print_shape(&poset, mu)
                    ));
                }
            }
        }
    }
    Ok((trials, violations))
}

/// The single-box formula agrees with the tableau rule on every shape.
pub(crate) fn chevalley_violations(table: &CoeffTable) -> Result<(u64, Vec<String>)> {
    let poset = table.poset().clone();
    let single = Shape::new(1);
    let mut violations = Vec::new();
    let mut trials = 0u64;
    for lam in all_shapes(&poset.core) {
        trials += 1;
        let closed = chevalley_product(&poset, lam)?;
        let expanded = product_expand(table, lam, single)?;
        if closed != expanded {
            violations.push(format!(
                "single-box product fails at {}",
                print_shape(&poset, lam)
            ));
        }
    }
    // and the box powers match their closed form
    for i in 0..=poset.num_boxes() {
        trials += 1;
        let got = box_power(&poset, i)?;
        let mut expected = BTreeMap::new();
        for gamma in all_shapes(&poset.core) {
            if gamma.size() == i {
                let f = count_syt(&poset.core, gamma.mask());
                let pow = if poset.core.cominuscule {
                    1u64 << shortroots(&poset.core, gamma.mask())
                } else {
                    1
                };
                expected.insert(gamma, f.checked_mul(pow).ok_or(Error::Overflow)?);
            }
        }
        if got != expected {
            violations.push(format!("box power {i} differs from its closed form"));
        }
    }
    Ok((trials, violations))
}

/// Associativity of the expanded product: exhaustive on small spaces,
/// sampled otherwise.
pub(crate) fn associativity_violations(
    table: &CoeffTable,
    seed: u64,
    samples: u64,
) -> Result<(u64, Vec<String>)> {
    let poset = table.poset().clone();
    let shapes = all_shapes(&poset.core);
    let mut violations = Vec::new();
    let mut check = |lam: Shape, mu: Shape, nu: Shape| -> Result<()> {
        let mut lhs: BTreeMap<Shape, u64> = BTreeMap::new();
        for (rho, c1) in product_expand(table, lam, mu)? {
            for (sigma, c2) in product_expand(table, rho, nu)? {
                let slot = lhs.entry(sigma).or_insert(0);
                *slot = slot
                    .checked_add(c1.checked_mul(c2).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
            }
        }
        let mut rhs: BTreeMap<Shape, u64> = BTreeMap::new();
        for (rho, c1) in product_expand(table, mu, nu)? {
            for (sigma, c2) in product_expand(table, lam, rho)? {
                let slot = rhs.entry(sigma).or_insert(0);
                *slot = slot
                    .checked_add(c1.checked_mul(c2).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
            }
        }
        if lhs != rhs {
            violations.push(format!(
                "associativity fails at ({}, {}, {})",
                print_shape(&poset, lam),
                print_shape(&poset, mu),
                print_shape(&poset, nu)
            ));
        }
        Ok(())
    };
    let mut trials = 0u64;
    if shapes.len() <= 30 {
        for &lam in &shapes {
            for &mu in &shapes {
                for &nu in &shapes {
                    trials += 1;
                    check(lam, mu, nu)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            trials += 1;
            let lam = shapes[rng.gen_range(0..shapes.len())];
            let mu = shapes[rng.gen_range(0..shapes.len())];
            let nu = shapes[rng.gen_range(0..shapes.len())];
            check(lam, mu, nu)?;
        }
    }
    Ok((trials, violations))
}

/// The tableau rule against the independent lattice-word oracle, over all
/// admissible triples of one Grassmannian.
pub(crate) fn oracle_violations(table: &CoeffTable, k: usize, n: usize) -> Result<(u64, Vec<String>)> {
    let poset = table.poset().clone();
    let shapes = all_shapes(&poset.core);
    let tuple = |s: Shape| -> Vec<u32> {
        let text = print_shape(&poset, s);
        text.trim_matches(['(', ')'])
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| p.parse().unwrap())
            .collect()
    };
    let mut violations = Vec::new();
    let mut trials = 0u64;
    for &nu in &shapes {
        for &lam in &shapes {
            for &mu in &shapes {
                trials += 1;
                let ours = table.get(lam, mu, nu)?;
                let classical = lr_oracle_type_a(&tuple(lam), &tuple(mu), &tuple(nu), k, n);
                if ours != classical {
                    violations.push(format!(
                        "oracle mismatch at ({}, {}, {}): {} vs {}",
                        print_shape(&poset, lam),
                        print_shape(&poset, mu),
                        print_shape(&poset, nu),
                        ours,
                        classical
                    ));
                }
            }
        }
    }
    Ok((trials, violations))
}

/// Cross-space identifications:
/// `LG:n` against the spinor poset of rank n+1 through the short-root power,
/// `OGmin:n` against the same poset entrywise, and the projective-space
/// table against plain chain combinatorics.
pub(crate) fn isomorphism_violations(spec: SpaceSpec) -> Result<(u64, Vec<String>)> {
    match spec {
        SpaceSpec::LG { n } => {
            let lg = CoeffTable::new(BoxPoset::build(spec)?);
            let og = CoeffTable::new(BoxPoset::build(SpaceSpec::OG { n: n + 1 })?);
            isomorphic_pair_violations(&lg, &og, true)
        }
        SpaceSpec::OGmin { n } => {
            let a = CoeffTable::new(BoxPoset::build(spec)?);
            let b = CoeffTable::new(BoxPoset::build(SpaceSpec::OG { n: n + 1 })?);
            isomorphic_pair_violations(&a, &b, false)
        }
        SpaceSpec::Pmin { .. } => {
            let t = CoeffTable::new(BoxPoset::build(spec)?);
            let mut violations = Vec::new();
            let mut trials = 0u64;
            for (lam, mu, nu, c) in t.fill_all(70)? {
                trials += 1;
                if c != 1 {
                    violations.push(format!(
                        "chain coefficient differs from 1 at ({}, {}, {})",
                        print_shape(t.poset(), lam),
                        print_shape(t.poset(), mu),
                        print_shape(t.poset(), nu)
                    ));
                }
            }
            Ok((trials, violations))
        }
        _ => Err(Error::UnsupportedSpace {
            spec: spec.to_string(),
            reason: "the isomorphism suite runs on LG:n, OGmin:n or Pmin:n".into(),
        }),
    }
}

/// Compares two tables over grid-identified posets; with `power` set, the
/// left side must exceed the right by 2^(shortroots(region) - shortroots(mu)).
pub(crate) fn isomorphic_pair_violations(
    left: &CoeffTable,
    right: &CoeffTable,
    power: bool,
) -> Result<(u64, Vec<String>)> {
    let lp = left.poset().clone();
    let rp = right.poset().clone();
    if lp.grid != rp.grid {
        return Err(Error::Invariant(format!(
            "{} and {} do not share a grid",
            lp.spec, rp.spec
        )));
    }
    let shapes = all_shapes(&lp.core);
    let mut violations = Vec::new();
    let mut trials = 0u64;
    for &nu in &shapes {
        for &lam in &shapes {
            if !lam.subset_of(nu) {
                continue;
            }
            for &mu in &shapes {
                if lam.size() + mu.size() != nu.size() {
                    continue;
                }
                trials += 1;
                let l = left.get(lam, mu, nu)?;
                let r = right.get(lam, mu, nu)?;
                let factor = if power && r != 0 {
                    let region = nu.mask() & !lam.mask();
                    1u64 << (shortroots(&lp.core, region) - shortroots(&lp.core, mu.mask()))
                } else {
                    1
                };
                if l != r.checked_mul(factor).ok_or(Error::Overflow)? {
                    violations.push(format!(
                        "tables disagree at ({}, {}, {}): {} vs {} x {}",
                        print_shape(&lp, lam),
                        print_shape(&lp, mu),
                        print_shape(&lp, nu),
                        l,
                        r,
                        factor
                    ));
                }
            }
        }
    }
    Ok((trials, violations))
}
