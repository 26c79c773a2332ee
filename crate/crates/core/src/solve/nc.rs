//! Exact Nearest Codeword solvers.

use super::brute::MAX_BRUTE_FORCE_VARIABLES;
use super::elimination::exact_nc;
use crate::error::SolveError;
use crate::gf2::{min_weight_affine_solution, Gf2Vector, MAX_FREE_VARIABLES};
use crate::instance::NearestCodeword;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NcEngine {
    /// Every `x`, lexicographically least among the closest.
    Exhaustive,
    /// Minimum-weight error `z′` with `A⊥·z′ = A⊥·b`, then `A·x = b ⊕ z′`.
    Syndrome,
    /// Syndrome when `rank(A) ≤ 24`, variable elimination otherwise.
    #[default]
    Auto,
}

pub fn solve_nc_exhaustive(nc: &NearestCodeword) -> Result<(Gf2Vector, usize), SolveError> {
    let n = nc.cols();
    if n > MAX_BRUTE_FORCE_VARIABLES {
        return Err(SolveError::TooLarge(format!("{n} columns exceed the exhaustive cap")));
    }
    let columns: Vec<Gf2Vector> = (0..n).map(|j| nc.a.column(j)).collect();
    let mut best: Option<(u32, usize)> = None;
    for code in 0..(1u64 << n) as u32 {
        let mut r = nc.b.clone();
        for (j, col) in columns.iter().enumerate() {
            if code >> (n - 1 - j) & 1 == 1 {
                r.xor_assign(col);
            }
        }
        let d = r.weight();
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((code, d));
        }
    }
    let (code, d) = best.expect("at least one vector is enumerated");
    let x: Vec<bool> = (0..n).map(|j| code >> (n - 1 - j) & 1 == 1).collect();
    Ok((Gf2Vector::from_bits(&x), d))
}

pub fn solve_nc_syndrome(nc: &NearestCodeword) -> Result<(Gf2Vector, usize), SolveError> {
    let perp = nc.a.orthogonal_complement();
    let syndrome = perp.mul_vec(&nc.b);
    let (z, d) = min_weight_affine_solution(&perp, &syndrome)?.expect("b itself solves the syndrome system");
    let x = nc
        .a
        .solve(&nc.b.xor(&z))
        .expect("b ⊕ z′ lies in the column space");
    Ok((x, d))
}

pub fn solve_nc_exact(nc: &NearestCodeword, engine: NcEngine) -> Result<(Gf2Vector, usize), SolveError> {
    match engine {
        NcEngine::Exhaustive => solve_nc_exhaustive(nc),
        NcEngine::Syndrome => solve_nc_syndrome(nc),
        NcEngine::Auto => {
            if nc.a.rank() <= MAX_FREE_VARIABLES {
                solve_nc_syndrome(nc)
            } else {
                let (d, x) = exact_nc(nc)?;
                Ok((x, d))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::Gf2Matrix;
    use crate::instance::random::random_nc;

    #[test]
    fn two_by_one() {
        let nc = NearestCodeword::new(
            Gf2Matrix::from_bit_strings(&["1", "1"]).unwrap(),
            Gf2Vector::from_bit_string("10").unwrap(),
        )
        .unwrap();
        assert_eq!(solve_nc_exhaustive(&nc).unwrap().1, 1);
        assert_eq!(solve_nc_syndrome(&nc).unwrap().1, 1);
    }

    #[test]
    fn exact_codeword() {
        let mut nc = random_nc(8, 6, 3);
        let x0 = Gf2Vector::from_bit_string("101101").unwrap();
        nc.b = nc.a.mul_vec(&x0);
        assert_eq!(solve_nc_syndrome(&nc).unwrap().1, 0);
        assert_eq!(solve_nc_exhaustive(&nc).unwrap().1, 0);
    }

    #[test]
    fn engines_agree() {
        for seed in 0..100 {
            let nc = random_nc(8, 6, seed);
            let (xa, da) = solve_nc_exhaustive(&nc).unwrap();
            let (xb, db) = solve_nc_syndrome(&nc).unwrap();
            assert_eq!(da, db, "seed {seed}");
            assert_eq!(nc.distance(&xa), da);
            assert_eq!(nc.distance(&xb), db);
            assert_eq!(solve_nc_exact(&nc, NcEngine::Auto).unwrap().1, da);
        }
    }
}
