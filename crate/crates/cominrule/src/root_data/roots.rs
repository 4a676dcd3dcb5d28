//! Root systems of types A, B, C, D, E6 and E7 over exact integer data.
//!
//! Roots are stored as integer coefficient vectors over the simple roots,
//! so every computation below is exact. Lengths come from the symmetrized
//! Cartan pairing, normalized so that long roots have squared length 2.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;

/// Dynkin type of a supported root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl TypeLabel {
    pub fn letter(self) -> char {
        match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E6 | TypeLabel::E7 => 'E',
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::E6 => write!(f, "E6"),
            TypeLabel::E7 => write!(f, "E7"),
            other => write!(f, "{}", other.letter()),
        }
    }
}

/// A root written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub coeffs: Vec<i32>,
}

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    /// Sum of simple-root coefficients.
    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c < 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add(&self, other: &Root) -> Root {
        Root {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// If `self - other` is a single simple root, return its index.
    pub fn simple_difference(&self, other: &Root) -> Option<usize> {
        let mut idx = None;
        for (i, (a, b)) in self.coeffs.iter().zip(&other.coeffs).enumerate() {
            match a - b {
                0 => {}
                1 if idx.is_none() => idx = Some(i),
                _ => return None,
            }
        }
        idx
    }
}

/// A crystallographic root system with enumerated positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub type_label: TypeLabel,
    pub rank: usize,
    /// Cartan matrix `a[i][j] = <alpha_i, alpha_j^vee>`.
    pub cartan: Vec<Vec<i32>>,
    /// Squared length of each simple root (1 short, 2 long).
    pub simple_len2: Vec<i32>,
    /// All positive roots, sorted by (height, coefficients).
    pub positive_roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
}

/// Cartan matrix and simple-root lengths in Bourbaki numbering.
fn cartan_data(type_label: TypeLabel, rank: usize) -> (Vec<Vec<i32>>, Vec<i32>) {
    let n = rank;
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let mut len2 = vec![2; n];
    match type_label {
        TypeLabel::A => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
        }
        TypeLabel::B => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
            // alpha_n is short
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
            len2[n - 1] = 1;
        }
        TypeLabel::C => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
            // alpha_n is long, the others short
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
            for l in len2.iter_mut().take(n - 1) {
                *l = 1;
            }
        }
        TypeLabel::D => {
            for i in 0..n - 2 {
                bond(i, i + 1);
            }
            bond(n - 3, n - 1);
        }
        TypeLabel::E6 | TypeLabel::E7 => {
            // chain 1-3-4-5-... with node 2 attached to node 4
            bond(0, 2);
            for i in 2..n - 1 {
                bond(i, i + 1);
            }
            bond(1, 3);
        }
    }
    (a, len2)
}

impl RootSystem {
    /// Builds the root system, enumerating positive roots by reflection closure.
    ///
    /// Rank-2 coincidences are accepted under a single label: B_2 and D_3 are
    /// rejected in favor of C_2 and A_3.
    pub fn build(type_label: TypeLabel, rank: usize) -> Result<RootSystem> {
        let ok = match type_label {
            TypeLabel::A => rank >= 1,
            TypeLabel::B => rank >= 3,
            TypeLabel::C => rank >= 2,
            TypeLabel::D => rank >= 4,
            TypeLabel::E6 => rank == 6,
            TypeLabel::E7 => rank == 7,
        };
        if !ok {
            return Err(Error::UnsupportedRootSystem(type_label.letter(), rank));
        }

        let (cartan, simple_len2) = cartan_data(type_label, rank);
        let mut rs = RootSystem {
            type_label,
            rank,
            cartan,
            simple_len2,
            positive_roots: Vec::new(),
            index: HashMap::new(),
        };

        // Closure of the simple roots under simple reflections, keeping positives.
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut queue: Vec<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
        for r in &queue {
            seen.insert(r.coeffs.clone(), ());
        }
        let mut out: Vec<Root> = Vec::new();
        while let Some(r) = queue.pop() {
            for i in 0..rank {
                let s = rs.reflect_simple(&r, i);
                if s.is_positive() && !seen.contains_key(&s.coeffs) {
                    seen.insert(s.coeffs.clone(), ());
                    queue.push(s);
                }
            }
            out.push(r);
        }
        out.sort_by_key(|r| (r.height(), r.coeffs.clone()));
        for (k, r) in out.iter().enumerate() {
            rs.index.insert(r.coeffs.clone(), k);
        }
        rs.positive_roots = out;

        let expected = match type_label {
            TypeLabel::A => rank * (rank + 1) / 2,
            TypeLabel::B | TypeLabel::C => rank * rank,
            TypeLabel::D => rank * (rank - 1),
            TypeLabel::E6 => 36,
            TypeLabel::E7 => 63,
        };
        if rs.positive_roots.len() != expected {
            return Err(Error::Invariant(format!(
                "{}_{} closure found {} positive roots, expected {}",
                type_label,
                rank,
                rs.positive_roots.len(),
                expected
            )));
        }
        Ok(rs)
    }

    /// Applies the simple reflection `s_i` to a root.
    pub fn reflect_simple(&self, r: &Root, i: usize) -> Root {
        // <r, alpha_i^vee> = sum_j c_j a[j][i]
        let pairing: i32 = r
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * self.cartan[j][i])
            .sum();
        let mut coeffs = r.coeffs.clone();
        coeffs[i] -= pairing;
        Root { coeffs }
    }

    /// Doubled symmetric pairing `2(x, y)` on the root lattice; exact integer.
    pub fn pairing2(&self, x: &Root, y: &Root) -> i32 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                // 2(alpha_i, alpha_j) = a[i][j] * len2(alpha_j)
                s += x.coeffs[i] * y.coeffs[j] * self.cartan[i][j] * self.simple_len2[j];
            }
        }
        s
    }

    /// Squared length of a root (1 for short, 2 for long).
    pub fn len2(&self, r: &Root) -> i32 {
        self.pairing2(r, r) / 2
    }

    pub fn is_root(&self, r: &Root) -> bool {
        if r.is_positive() {
            self.index.contains_key(&r.coeffs)
        } else if r.is_negative() {
            self.index.contains_key(&r.negated().coeffs)
        } else {
            false
        }
    }

    pub fn positive_index(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.coeffs).copied()
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }
}

/// Nodes whose simple root appears with coefficient one in the highest root.
pub fn cominuscule_nodes(rs: &RootSystem) -> Vec<usize> {
    let high = rs.highest_root();
    (0..rs.rank).filter(|&i| high.coeffs[i] == 1).collect()
}

/// The irreducible rank-2 subsystems of the positive roots, each returned as
/// its ordered list of positive roots: `(eta, eta+gamma, gamma)` for A_2 and
/// `(eta, eta+gamma, eta+2gamma, gamma)` for B_2, with `gamma` the shorter
/// simple root when lengths differ.
pub fn rank2_subsystems(rs: &RootSystem) -> Vec<Vec<usize>> {
    let n = rs.num_positive();
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if p == q {
                continue;
            }
            let eta = &rs.positive_roots[p];
            let gamma = &rs.positive_roots[q];
            // eta, gamma are the simple roots of the subsystem they span
            // exactly when neither difference is a root.
            if rs.is_root(&eta.sub(gamma)) || rs.is_root(&gamma.sub(eta)) {
                continue;
            }
            let sum = eta.add(gamma);
            let Some(s) = rs.positive_index(&sum) else {
                continue; // reducible A_1 x A_1
            };
            let l_eta = rs.len2(eta);
            let l_gamma = rs.len2(gamma);
            if let Some(t) = rs.positive_index(&sum.add(gamma)) {
                // B_2 with gamma short: keep only the canonical labeling.
                if l_gamma < l_eta {
                    out.push(vec![p, s, t, q]);
                }
            } else if rs.positive_index(&sum.add(eta)).is_none() {
                // A_2; both labelings describe the same ordering up to
                // reversal, so keep one.
                if p < q && l_eta == l_gamma {
                    out.push(vec![p, s, q]);
                }
            }
        }
    }
    out
}

/// Whether a set of positive roots meets every irreducible rank-2 subsystem
/// in a beginning or ending segment of its canonical ordering.
pub fn is_biconvex(rs: &RootSystem, members: &dyn Fn(usize) -> bool) -> bool {
    is_biconvex_with(&rank2_subsystems(rs), members)
}

/// As [`is_biconvex`], against precomputed subsystems; use this form when
/// testing many subsets of one root system.
pub fn is_biconvex_with(subsystems: &[Vec<usize>], members: &dyn Fn(usize) -> bool) -> bool {
    for sub in subsystems {
        let flags: Vec<bool> = sub.iter().map(|&i| members(i)).collect();
        let total = flags.iter().filter(|&&b| b).count();
        if total == 0 || total == flags.len() {
            continue;
        }
        let beginning = flags[..total].iter().all(|&b| b);
        let ending = flags[flags.len() - total..].iter().all(|&b| b);
        if !beginning && !ending {
            return false;
        }
    }
    true
}

/// Order of the Weyl group, from the classical formulas.
pub fn weyl_order(type_label: TypeLabel, rank: usize) -> u64 {
    fn fact(n: usize) -> u64 {
        (1..=n as u64).product()
    }
    match type_label {
        TypeLabel::A => fact(rank + 1),
        TypeLabel::B | TypeLabel::C => (1u64 << rank) * fact(rank),
        TypeLabel::D => (1u64 << (rank - 1)) * fact(rank),
        TypeLabel::E6 => 51_840,
        TypeLabel::E7 => 2_903_040,
    }
}
