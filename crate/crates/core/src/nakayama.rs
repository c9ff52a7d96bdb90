//! The Nakayama algebras `N_n(r)`: the linearly oriented `A_n` quiver modulo
//! all paths of length `r`.
//!
//! Vertices are `1..=n`. Column `j` of the Cartan matrix is the dimension
//! vector of the projective `P_j`, whose composition factors are
//! `S_max(1, j-r+1), ..., S_j`; so `c_ij = 1` exactly when `i <= j <= i+r-1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::IntMatrix;

fn check(n: usize, r: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("a Nakayama algebra needs n >= 1".into()));
    }
    if r < 2 {
        return Err(Error::InvalidArgument("a Nakayama algebra needs r >= 2".into()));
    }
    Ok(())
}

fn check_vertex(n: usize, r: usize, i: usize) -> Result<()> {
    check(n, r)?;
    if !(1..=n).contains(&i) {
        return Err(Error::InvalidArgument(format!("vertex {i} outside 1..={n}")));
    }
    Ok(())
}

pub fn cartan(n: usize, r: usize) -> Result<IntMatrix> {
    check(n, r)?;
    Ok(IntMatrix::from_fn(n, n, |i, j| {
        if i <= j && j < i + r { BigInt::one() } else { BigInt::zero() }
    }))
}

fn indicator(n: usize, lo: usize, hi: usize) -> Vec<i64> {
    (1..=n).map(|k| i64::from(lo <= k && k <= hi)).collect()
}

/// Dimension vector of the projective cover `P_i` of `S_i`.
pub fn dimvec_proj(n: usize, r: usize, i: usize) -> Result<Vec<i64>> {
    check_vertex(n, r, i)?;
    Ok(indicator(n, (i + 1).saturating_sub(r).max(1), i))
}

/// Dimension vector of the injective envelope `I_i` of `S_i`.
pub fn dimvec_inj(n: usize, r: usize, i: usize) -> Result<Vec<i64>> {
    check_vertex(n, r, i)?;
    Ok(indicator(n, i, (i + r - 1).min(n)))
}

pub fn dimvec_simple(n: usize, r: usize, i: usize) -> Result<Vec<i64>> {
    check_vertex(n, r, i)?;
    Ok(indicator(n, i, i))
}

/// Cartan matrix of the one-point extension by a module with dimension
/// vector `d`: `[[C, d], [0, 1]]`, the new vertex last.
pub fn one_point_extension_cartan(c: &IntMatrix, d: &[i64]) -> Result<IntMatrix> {
    if !c.is_square() {
        return Err(Error::InvalidArgument("Cartan matrix must be square".into()));
    }
    let n = c.rows();
    if d.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: d.len() });
    }
    if d.iter().any(|&v| v < 0) {
        return Err(Error::InvalidArgument("dimension vector must be nonnegative".into()));
    }
    Ok(IntMatrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
        (true, true) => c[(i, j)].clone(),
        (true, false) => BigInt::from(d[i]),
        (false, true) => BigInt::zero(),
        (false, false) => BigInt::one(),
    }))
}

/// Rank and determinant values of the indecomposable projective, injective
/// and simple modules over `N_{r+4}(r)`, transported from `coh X(2,3,r)`.
/// Index `k` of each vector is vertex `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankDetData {
    pub r: usize,
    pub proj_ranks: Vec<i64>,
    pub inj_ranks: Vec<i64>,
    pub simple_ranks: Vec<i64>,
    /// Vertices `i` whose simple has determinant `x3`.
    pub simple_det_x3: Vec<usize>,
}

pub fn rank_det_data(r: usize) -> Result<RankDetData> {
    if r < 4 {
        return Err(Error::InvalidArgument("rank data needs r >= 4".into()));
    }
    let n = r + 4;
    let proj_ranks = (1..=n)
        .map(|i| match i {
            _ if i <= 2 || i >= r + 3 => -1,
            _ if i == 3 || i == r + 2 => 0,
            _ => 1,
        })
        .collect::<Vec<i64>>();
    // The Nakayama functor sends P_i to I_i and acts on K_0 as τ[1]; τ keeps
    // the rank and the shift negates it.
    let inj_ranks = proj_ranks.iter().map(|v| -v).collect();
    let simple_ranks = (1..=n)
        .map(|i| {
            if i == 1 || i == r + 1 || i == r + 2 {
                -1
            } else if i == 3 || i == 4 || i == r + 4 {
                1
            } else {
                0
            }
        })
        .collect();
    Ok(RankDetData { r, proj_ranks, inj_ranks, simple_ranks, simple_det_x3: (6..=r).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cartan() {
        assert_eq!(cartan(3, 2).unwrap(), IntMatrix::from_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]));
        assert_eq!(cartan(1, 5).unwrap(), IntMatrix::identity(1));
        let full = cartan(4, 6).unwrap();
        assert!((0..4).all(|i| (i..4).all(|j| full[(i, j)].is_one())));
        assert!(cartan(0, 2).is_err());
        assert!(cartan(3, 1).is_err());
    }

    #[test]
    fn dimension_vectors() {
        assert_eq!(dimvec_proj(5, 3, 4).unwrap(), [0, 1, 1, 1, 0]);
        assert_eq!(dimvec_simple(5, 3, 2).unwrap(), [0, 1, 0, 0, 0]);
        assert_eq!(dimvec_inj(5, 3, 4).unwrap(), [0, 0, 0, 1, 1]);
        assert!(dimvec_inj(5, 3, 6).is_err());
    }

    #[test]
    fn cartan_columns_are_projectives() {
        let c = cartan(7, 3).unwrap();
        for j in 1..=7 {
            let col: Vec<i64> = c.column(j - 1).iter().map(|v| i64::try_from(v).unwrap()).collect();
            assert_eq!(col, dimvec_proj(7, 3, j).unwrap());
        }
    }

    #[test]
    fn extension_by_zero_module() {
        let c = cartan(3, 2).unwrap();
        let e = one_point_extension_cartan(&c, &[0, 0, 0]).unwrap();
        assert_eq!(e[(3, 3)], BigInt::one());
        assert!((0..3).all(|i| e[(i, 3)].is_zero() && e[(3, i)].is_zero()));
        assert_eq!(
            one_point_extension_cartan(&c, &[1, 0]),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn growing_by_an_injective() {
        for (n, r) in [(8, 3), (12, 5)] {
            let d = dimvec_inj(n, r, n + 2 - r).unwrap();
            let ext = one_point_extension_cartan(&cartan(n, r).unwrap(), &d).unwrap();
            assert_eq!(ext, cartan(n + 1, r).unwrap());
        }
    }

    #[test]
    fn rank_values_for_r8() {
        let d = rank_det_data(8).unwrap();
        assert_eq!(d.proj_ranks[0], -1);
        assert_eq!(d.simple_ranks[4], 0);
        assert_eq!(d.proj_ranks[3], 1);
        assert_eq!(d.simple_det_x3, vec![6, 7, 8]);
        assert!(rank_det_data(3).is_err());
    }
}
