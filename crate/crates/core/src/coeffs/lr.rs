//! Littlewood-Richardson coefficients by counting LR tableaux.

use crate::weyl::Partition;

/// `c^ν_{λμ}`: the number of semistandard fillings of `ν/λ` with content `μ`
/// whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let part = |p: &Partition, i: usize| p.parts().get(i).copied().unwrap_or(0);
    let rows = nu.parts().len().max(lambda.parts().len());
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    for r in 0..rows {
        if part(lambda, r) > part(nu, r) {
            return 0;
        }
    }
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (part(lambda, r)..part(nu, r)).rev().map(move |c| (r, c)))
        .collect();
    let content: Vec<usize> = mu.parts().iter().copied().filter(|&x| x > 0).collect();
    let width = part(nu, 0);
    let mut grid = vec![vec![0usize; width]; rows];
    let mut used = vec![0usize; content.len()];
    let mut st = State { lambda_rows: (0..rows).map(|r| part(lambda, r)).collect(), nu_rows: (0..rows).map(|r| part(nu, r)).collect(), cells, content, grid: &mut grid, used: &mut used };
    st.count(0)
}

struct State<'a> {
    lambda_rows: Vec<usize>,
    nu_rows: Vec<usize>,
    cells: Vec<(usize, usize)>,
    content: Vec<usize>,
    grid: &'a mut Vec<Vec<usize>>,
    used: &'a mut Vec<usize>,
}

impl State<'_> {
    fn count(&mut self, k: usize) -> u64 {
        if k == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[k];
        let hi = if c + 1 < self.nu_rows[r] { self.grid[r][c + 1] } else { self.content.len() };
        let lo = if r > 0 && c >= self.lambda_rows[r - 1] { self.grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            let i = v - 1;
            if self.used[i] >= self.content[i] || (i > 0 && self.used[i] + 1 > self.used[i - 1]) {
                continue;
            }
            self.used[i] += 1;
            self.grid[r][c] = v;
            total += self.count(k + 1);
            self.used[i] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn classical_values() {
        assert_eq!(lr_coefficient(&q("(2,1)"), &q("(2,1)"), &q("(3,2,1)")), 2);
        assert_eq!(lr_coefficient(&q("(1)"), &q("(1)"), &q("(2)")), 1);
        assert_eq!(lr_coefficient(&q("(1)"), &q("(1)"), &q("(1,1)")), 1);
        assert_eq!(lr_coefficient(&q("(2)"), &q("(2)"), &q("(2,2)")), 1);
        assert_eq!(lr_coefficient(&q("(2)"), &q("(1,1)"), &q("(2,2)")), 0);
        assert_eq!(lr_coefficient(&q("(0)"), &q("(2,1)"), &q("(2,1)")), 1);
    }

    #[test]
    fn symmetric_in_first_two_arguments() {
        let parts = Partition::all_in_box(3, 6);
        for l in &parts {
            for m in &parts {
                for n in parts.iter().filter(|n| n.size() == l.size() + m.size()) {
                    assert_eq!(lr_coefficient(l, m, n), lr_coefficient(m, l, n));
                }
            }
        }
    }
}
