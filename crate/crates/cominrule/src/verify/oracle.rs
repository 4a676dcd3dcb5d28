//! An independent Littlewood-Richardson coefficient oracle for type A,
//! counting lattice-word semistandard skew tableaux. It shares no code with
//! the tableau engine: partitions here are plain weakly-decreasing row
//! vectors and the search fills cells in reverse reading order.

/// `c_{lam,mu}^{nu}` for partitions inside a `k x (n-k)` rectangle, written
/// as column tuples: at most `n-k` parts, each at most `k`. The coefficient
/// is invariant under conjugation, so the orientation only affects the
/// bounds check.
pub fn lr_oracle_type_a(lam: &[u32], mu: &[u32], nu: &[u32], k: usize, n: usize) -> u64 {
    debug_assert!(fits_rectangle(lam, k, n) && fits_rectangle(mu, k, n) && fits_rectangle(nu, k, n));
    lr_coefficient(lam, mu, nu)
}

fn fits_rectangle(p: &[u32], k: usize, n: usize) -> bool {
    p.len() <= n - k && p.iter().all(|&x| x as usize <= k) && is_partition(p)
}

fn is_partition(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

fn weight(p: &[u32]) -> u64 {
    p.iter().map(|&x| x as u64).sum()
}

/// The classical coefficient: the number of semistandard fillings of
/// `nu/lam` with content `mu` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lam: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
    if !is_partition(lam) || !is_partition(mu) || !is_partition(nu) {
        return 0;
    }
    if weight(lam) + weight(mu) != weight(nu) {
        return 0;
    }
    let rows = nu.len();
    let mut lam_padded: Vec<u32> = lam.iter().copied().filter(|&x| x > 0).collect();
    if lam_padded.len() > rows {
        return 0;
    }
    lam_padded.resize(rows, 0);
    if lam_padded.iter().zip(nu).any(|(&l, &v)| l > v) {
        return 0;
    }

    // cells in reverse reading order: each row right to left, top to bottom
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, &end) in nu.iter().enumerate() {
        for c in (lam_padded[r]..end).rev() {
            cells.push((r, c as usize));
        }
    }

    let mut grid: Vec<Vec<u32>> = nu.iter().map(|&v| vec![0; v as usize]).collect();
    let mut counts = vec![0u32; mu.len()];
    count_fillings(&mut grid, &mut counts, mu, &cells, 0)
}

fn count_fillings(
    grid: &mut [Vec<u32>],
    counts: &mut [u32],
    mu: &[u32],
    cells: &[(usize, usize)],
    at: usize,
) -> u64 {
    if at == cells.len() {
        return u64::from(counts.iter().zip(mu).all(|(&c, &m)| c == m));
    }
    let (r, c) = cells[at];
    let mut total = 0u64;
    for entry in 1..=mu.len() as u32 {
        let e = entry as usize;
        // content and lattice-word constraints
        if counts[e - 1] + 1 > mu[e - 1] {
            continue;
        }
        if e >= 2 && counts[e - 1] + 1 > counts[e - 2] {
            continue;
        }
        // weakly increasing along the row (right neighbor filled first)
        if c + 1 < grid[r].len() {
            let right = grid[r][c + 1];
            if right != 0 && entry > right {
                continue;
            }
        }
        // strictly increasing down the column; cells under `lam` stay zero
        if r > 0 && c < grid[r - 1].len() {
            let above = grid[r - 1][c];
            if above != 0 && entry <= above {
                continue;
            }
        }
        grid[r][c] = entry;
        counts[e - 1] += 1;
        total += count_fillings(grid, counts, mu, cells, at + 1);
        counts[e - 1] -= 1;
        grid[r][c] = 0;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pieri_rule() {
        assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[1, 1]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[3]), 0);
        assert_eq!(lr_coefficient(&[2], &[1], &[2, 1]), 1);
    }

    #[test]
    fn classical_multiplicity_two() {
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&[3, 1], &[2, 1], &[4, 2, 1]), 2);
    }

    #[test]
    fn symmetry_in_the_first_two_arguments() {
        let cases: &[(&[u32], &[u32], &[u32])] = &[
            (&[2, 1], &[3, 1], &[4, 2, 1]),
            (&[2, 2], &[2, 1], &[4, 2, 1]),
            (&[3, 2, 1], &[2, 1], &[4, 3, 2]),
        ];
        for &(a, b, nu) in cases {
            assert_eq!(lr_coefficient(a, b, nu), lr_coefficient(b, a, nu));
        }
    }

    #[test]
    fn empty_partition_is_the_unit() {
        assert_eq!(lr_coefficient(&[], &[2, 1], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[], &[], &[]), 1);
        assert_eq!(lr_coefficient(&[], &[2, 1], &[3]), 0);
    }

    #[test]
    fn rectangle_wrapper() {
        assert_eq!(lr_oracle_type_a(&[1], &[1], &[2], 2, 4), 1);
        assert_eq!(lr_oracle_type_a(&[3, 1], &[2, 1], &[4, 2, 1], 4, 7), 2);
        assert_eq!(lr_oracle_type_a(&[2, 1], &[2, 1], &[3, 2, 1], 3, 6), 2);
    }
}
