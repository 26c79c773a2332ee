//! Exact linear programming over the rationals: dense two-phase simplex with Bland's rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Ge,
    Le,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub coeffs: Vec<(usize, Rational)>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// Minimize `c·x` subject to the rows and `x ≥ 0`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpResult {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            rows: Vec::new(),
        }
    }

    pub fn add_row(&mut self, coeffs: Vec<(usize, Rational)>, sense: Sense, rhs: Rational) {
        assert!(coeffs.iter().all(|(j, _)| *j < self.num_vars), "variable out of range");
        self.rows.push(Row { coeffs, sense, rhs });
    }

    pub fn minimize(&self) -> LpResult {
        Tableau::build(self).solve(self)
    }
}

struct Tableau {
    /// `m` rows of `cols + 1` entries; the last entry is the right-hand side.
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let n = lp.num_vars;
        let m = lp.rows.len();
        let slacks = lp.rows.iter().filter(|r| r.sense != Sense::Eq).count();
        // normalized rows: rhs ≥ 0, with the sign of the slack recorded
        let mut normalized = Vec::with_capacity(m);
        for r in &lp.rows {
            let flip = r.rhs.is_negative() || (r.rhs.is_zero() && r.sense == Sense::Ge);
            let sign = if flip { -Rational::one() } else { Rational::one() };
            let slack_sign = match r.sense {
                Sense::Ge => Some(-sign.clone()),
                Sense::Le => Some(sign.clone()),
                Sense::Eq => None,
            };
            normalized.push((flip, sign, slack_sign));
        }
        let needs_art: Vec<bool> = normalized
            .iter()
            .map(|(_, _, s)| !matches!(s, Some(v) if v.is_positive()))
            .collect();
        let arts = needs_art.iter().filter(|&&b| b).count();
        let cols = n + slacks + arts;
        let mut t = vec![vec![Rational::zero(); cols + 1]; m];
        let mut basis = vec![0; m];
        let (mut next_slack, mut next_art) = (n, n + slacks);
        for (i, r) in lp.rows.iter().enumerate() {
            let (_, sign, slack_sign) = &normalized[i];
            for (j, a) in &r.coeffs {
                t[i][*j] += a * sign;
            }
            t[i][cols] = &r.rhs * sign;
            if let Some(s) = slack_sign {
                t[i][next_slack] = s.clone();
                if !needs_art[i] {
                    basis[i] = next_slack;
                }
                next_slack += 1;
            }
            if needs_art[i] {
                t[i][next_art] = Rational::one();
                basis[i] = next_art;
                next_art += 1;
            }
        }
        Self {
            t,
            basis,
            cols,
            first_artificial: n + slacks,
        }
    }

    fn pivot(&mut self, r: usize, c: usize, reduced: &mut [Rational]) {
        let p = self.t[r][c].clone();
        for v in self.t[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let pivot_row = self.t[r].clone();
        let nonzero: Vec<usize> = (0..=self.cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..self.t.len() {
            if i == r || self.t[i][c].is_zero() {
                continue;
            }
            let f = self.t[i][c].clone();
            for &j in &nonzero {
                let d = &f * &pivot_row[j];
                self.t[i][j] -= d;
            }
        }
        if !reduced[c].is_zero() {
            let f = reduced[c].clone();
            for &j in &nonzero {
                let d = &f * &pivot_row[j];
                reduced[j] -= d;
            }
        }
        self.basis[r] = c;
    }

    /// Reduced-cost row (last entry: minus the objective value) for costs `c`.
    fn reduced_costs(&self, c: &[Rational]) -> Vec<Rational> {
        let mut d: Vec<Rational> = c.to_vec();
        d.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if c[b].is_zero() {
                continue;
            }
            for (dj, t) in d.iter_mut().zip(&self.t[i]) {
                if !t.is_zero() {
                    *dj -= &c[b] * t;
                }
            }
        }
        d
    }

    /// Runs simplex iterations over columns `< allowed`. Returns false if unbounded.
    fn iterate(&mut self, reduced: &mut [Rational], allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| reduced[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.t.len() {
                if !self.t[i][c].is_positive() {
                    continue;
                }
                let q = &self.t[i][self.cols] / &self.t[i][c];
                let better = match &best {
                    None => true,
                    Some((bi, bq)) => q < *bq || (q == *bq && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, q));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c, reduced);
        }
    }

    fn solve(mut self, lp: &LinearProgram) -> LpResult {
        let n = lp.num_vars;
        if self.first_artificial < self.cols {
            let mut c1 = vec![Rational::zero(); self.cols];
            for v in c1.iter_mut().skip(self.first_artificial) {
                *v = Rational::one();
            }
            let mut reduced = self.reduced_costs(&c1);
            self.iterate(&mut reduced, self.cols);
            if !reduced[self.cols].is_zero() {
                return LpResult::Infeasible;
            }
            // drive zero-level artificials out of the basis, dropping redundant rows
            let mut i = 0;
            while i < self.t.len() {
                if self.basis[i] >= self.first_artificial {
                    match (0..self.first_artificial).find(|&j| !self.t[i][j].is_zero()) {
                        Some(j) => {
                            self.pivot(i, j, &mut reduced);
                            i += 1;
                        }
                        None => {
                            self.t.remove(i);
                            self.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
        }
        let mut c2 = vec![Rational::zero(); self.cols];
        c2[..n].clone_from_slice(&lp.objective);
        let mut reduced = self.reduced_costs(&c2);
        if !self.iterate(&mut reduced, self.first_artificial) {
            return LpResult::Unbounded;
        }
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.t[i][self.cols].clone();
            }
        }
        let value = x
            .iter()
            .zip(&lp.objective)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        LpResult::Optimal { value, x }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covering_lp() {
        // min x + y  s.t.  x + y ≥ 1, x ≥ 1/3
        let mut lp = LinearProgram::new(2);
        lp.objective = vec![rat(1), rat(1)];
        lp.add_row(vec![(0, rat(1)), (1, rat(1))], Sense::Ge, rat(1));
        lp.add_row(vec![(0, rat(3))], Sense::Ge, rat(1));
        match lp.minimize() {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat(1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fractional_optimum() {
        // triangle vertex cover relaxation: optimum 3/2
        let mut lp = LinearProgram::new(3);
        lp.objective = vec![rat(1); 3];
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            lp.add_row(vec![(a, rat(1)), (b, rat(1))], Sense::Ge, rat(1));
        }
        for j in 0..3 {
            lp.add_row(vec![(j, rat(1))], Sense::Le, rat(1));
        }
        match lp.minimize() {
            LpResult::Optimal { value, x } => {
                assert_eq!(value, ratio(3, 2));
                assert!(x.iter().all(|v| *v == ratio(1, 2)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.add_row(vec![(0, rat(1))], Sense::Le, rat(-1));
        assert_eq!(lp.minimize(), LpResult::Infeasible);
        let mut lp = LinearProgram::new(1);
        lp.objective = vec![rat(-1)];
        assert_eq!(lp.minimize(), LpResult::Unbounded);
    }

    #[test]
    fn equality_and_zero_rhs_rows() {
        // min z s.t. y - x + z ≥ 0, x = 1, y ≤ 0
        let mut lp = LinearProgram::new(3);
        lp.objective = vec![rat(0), rat(0), rat(1)];
        lp.add_row(vec![(1, rat(1)), (0, rat(-1)), (2, rat(1))], Sense::Ge, rat(0));
        lp.add_row(vec![(0, rat(1))], Sense::Eq, rat(1));
        lp.add_row(vec![(1, rat(1))], Sense::Le, rat(0));
        match lp.minimize() {
            LpResult::Optimal { value, x } => {
                assert_eq!(value, rat(1));
                assert_eq!(x[0], rat(1));
            }
            other => panic!("{other:?}"),
        }
    }
}
