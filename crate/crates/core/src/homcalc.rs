//! Graded dimensions of the coordinate algebra
//! `S = k[x1,x2,x3]/(x1^p1 + x2^p2 + x3^p3)` and the Hom/Ext dimensions
//! between line bundles they determine.

use crate::error::Result;
use crate::lgroup::{LElement, WeightTriple};

/// `dim S_x`, counted on the monomial basis with exponent of `x1` below `p1`.
pub fn sdim(weights: &WeightTriple, x: &LElement) -> Result<i64> {
    sdim_eliminating(weights, x, 1)
}

/// `dim S_x` counted on the basis where the exponent of `x_i` stays below
/// `p_i`. The answer does not depend on `i`.
pub fn sdim_eliminating(weights: &WeightTriple, x: &LElement, i: usize) -> Result<i64> {
    weights.check(x)?;
    assert!((1..=3).contains(&i), "variable index must be 1, 2 or 3");
    let mut count = 0;
    for a in 0..weights.weight(i) {
        // The other two variables contribute monomials whose normal form has
        // l_i = 0; for fixed residues there are l + 1 of them of degree y.
        let y = *x - weights.x(i) * a;
        if y.li(i) == 0 && y.is_nonneg() {
            count += y.lc() + 1;
        }
    }
    Ok(count)
}

/// `dim Hom(O(x), O(y)) = dim S_{y-x}`.
pub fn hom_dim_lb(weights: &WeightTriple, x: &LElement, y: &LElement) -> Result<i64> {
    sdim(weights, &y.try_sub(x)?)
}

/// `dim Ext^1(O(x), O(y)) = dim Hom(O(y), O(x+ω))`.
pub fn ext1_dim_lb(weights: &WeightTriple, x: &LElement, y: &LElement) -> Result<i64> {
    sdim(weights, &x.try_add(&weights.omega())?.try_sub(y)?)
}

/// Whether `O` and `O(y)` have no extensions in either direction.
pub fn pair_extension_free(weights: &WeightTriple, y: &LElement) -> Result<bool> {
    let zero = weights.zero();
    Ok(ext1_dim_lb(weights, &zero, y)? == 0 && ext1_dim_lb(weights, y, &zero)? == 0)
}
