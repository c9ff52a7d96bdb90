use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use super::{extension_free, serre, stable_hom_dim, ExtensionWitness, StableLineObject, WeightContext};
use crate::error::Result;
use crate::lgroup::WeightTriple;
use crate::nakayama::cartan;
use crate::IntMatrix;

/// A candidate tilting object as an ordered list of line-bundle summands.
#[derive(Debug, Clone, Serialize)]
pub struct TiltingSpec {
    pub weights: WeightTriple,
    pub summands: Vec<StableLineObject>,
    /// `(n, r)` of the Nakayama algebra the endomorphism ring should be.
    pub expected: (usize, usize),
}

/// The tilting object for one of the four supported weight triples.
pub fn tilting_spec(weights: &WeightTriple) -> Result<TiltingSpec> {
    let ctx = WeightContext::new(*weights)?;
    let w = weights;
    let line = |a2: i64, a3: i64| StableLineObject::line(&ctx, &(w.x(2) * a2 + w.x(3) * a3));
    let mut summands = Vec::new();
    let expected = match w.weights() {
        [2, 4, 5] => {
            for k in 0..=10 {
                summands.push(line(1, k)?);
            }
            (11, 5)
        }
        [2, 4, 7] => {
            for k in 0..=6 {
                summands.push(line(1, 3 * k)?);
            }
            for k in 0..=5 {
                summands.push(line(1, 3 * k + 1)?);
            }
            (13, 6)
        }
        [2, 5, 5] => {
            for k in 0..=2 {
                for a in 1..=4 {
                    summands.push(serre(&ctx, &line(0, a)?, k)?);
                }
            }
            (12, 5)
        }
        [2, 5, 6] => {
            for k in 0..=3 {
                summands.push(serre(&ctx, &line(0, 1)?, k)?);
            }
            for a in [2, 4, 6] {
                for k in 0..=2 {
                    summands.push(serre(&ctx, &line(0, a)?, k)?);
                }
            }
            (13, 5)
        }
        _ => unreachable!("WeightContext::new rejects other triples"),
    };
    Ok(TiltingSpec { weights: *weights, summands, expected })
}

#[derive(Debug, Clone, Serialize)]
pub struct TiltingReport {
    pub spec: TiltingSpec,
    pub extension_free: bool,
    pub witness: Option<ExtensionWitness>,
    pub summand_count_ok: bool,
    pub hom_matrix: IntMatrix,
    /// Summand indices in the order that matches the Cartan matrix, if any.
    pub order: Option<Vec<usize>>,
    pub cartan_match: bool,
}

impl TiltingReport {
    pub fn is_tilting(&self) -> bool {
        self.extension_free && self.summand_count_ok && self.cartan_match
    }
}

pub fn verify_tilting(weights: &WeightTriple) -> Result<TiltingReport> {
    let ctx = WeightContext::new(*weights)?;
    let spec = tilting_spec(weights)?;
    verify_spec(&ctx, spec)
}

/// Checks an arbitrary summand list against its expected Nakayama algebra.
pub fn verify_spec(ctx: &WeightContext, spec: TiltingSpec) -> Result<TiltingReport> {
    let objs = &spec.summands;
    let n = objs.len();
    let witness = extension_free(ctx, objs)?;
    let mut hom = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            hom[i][j] = stable_hom_dim(ctx, &objs[i], &objs[j])?;
        }
    }
    let [p1, p2, p3] = spec.weights.weights();
    let summand_count_ok = n as i64 == p1 + p2 + p3;
    let order = cartan_order(objs, &hom, spec.expected)?;
    Ok(TiltingReport {
        extension_free: witness.is_none(),
        witness,
        summand_count_ok,
        hom_matrix: IntMatrix::from_rows(&hom),
        cartan_match: order.is_some(),
        order,
        spec,
    })
}

/// Orders the summands by a topological sort of the nonzero off-diagonal
/// Hom entries and compares with `cartan(n, r)`, then with its transpose.
fn cartan_order(objs: &[StableLineObject], hom: &[Vec<i64>], (n, r): (usize, usize)) -> Result<Option<Vec<usize>>> {
    if objs.len() != n {
        return Ok(None);
    }
    let target = cartan(n, r)?;
    let transposed: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| hom[j][i]).collect()).collect();
    for h in [hom, &transposed[..]] {
        let Some(order) = topological_order(objs, h) else { continue };
        let permuted = IntMatrix::from_rows(
            &(0..n).map(|i| (0..n).map(|j| h[order[i]][order[j]]).collect::<Vec<_>>()).collect::<Vec<_>>(),
        );
        if permuted == target {
            return Ok(Some(order));
        }
    }
    Ok(None)
}

/// Kahn's algorithm on edges `i -> j` for `h[i][j] != 0`, ties broken by
/// `(twist, rep)`. `None` if there is a cycle.
fn topological_order(objs: &[StableLineObject], h: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = objs.len();
    let mut indegree: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| i != j && h[i][j] != 0).count()).collect();
    let key = |i: usize| Reverse((objs[i].twist, objs[i].rep, i));
    let mut ready: BinaryHeap<_> = (0..n).filter(|&i| indegree[i] == 0).map(key).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse((_, _, i))) = ready.pop() {
        order.push(i);
        for j in 0..n {
            if j != i && h[i][j] != 0 {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(key(j));
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}
