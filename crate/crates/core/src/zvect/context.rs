use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lgroup::{LElement, WeightTriple};

/// Where an element of the S-set sits relative to the three criteria for
/// stable morphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shape {
    /// `x_i`
    Single(usize),
    /// `x_i + x_j` with `i < j`
    Pair(usize, usize),
    /// `2 x_i`
    Double(usize),
}

impl Shape {
    /// Shape of a normal form with `l = 0`, if it has one of the three.
    pub fn of(t: &LElement) -> Option<Shape> {
        if t.lc() != 0 {
            return None;
        }
        let l = [t.li(1), t.li(2), t.li(3)];
        let nonzero: Vec<usize> = (1..=3).filter(|&i| l[i - 1] != 0).collect();
        match nonzero[..] {
            [i] if l[i - 1] == 1 => Some(Shape::Single(i)),
            [i] if l[i - 1] == 2 => Some(Shape::Double(i)),
            [i, j] if l[i - 1] == 1 && l[j - 1] == 1 => Some(Shape::Pair(i, j)),
            _ => None,
        }
    }
}

/// A monomial `x1^a1 x2^a2 x3^a3` of the coordinate algebra.
pub type Monomial = [i64; 3];

/// One of the four weight triples whose stable category has an explicit
/// hypersurface description, with all derived constants.
#[derive(Debug, Clone, Serialize)]
pub struct WeightContext {
    pub weights: WeightTriple,
    /// `δ` of `c, x1, x2, x3, ω`.
    pub delta_datum: [i64; 5],
    /// Minimal generators `(k, kω)` of the semigroup `{kω >= 0}`.
    pub omega_generators: Vec<(i64, LElement)>,
    /// The generators `x, y, z` of the ring `⊕_k S_{kω}` as monomials in
    /// `x1, x2, x3`, with their degrees in multiples of `ω`.
    pub ring_generators: [(Monomial, i64); 3],
    /// Terms of the hypersurface relation as exponents in `x, y, z`.
    pub relation: Vec<[i64; 3]>,
    /// `[2]` is the twist by `period · ω`.
    pub period: i64,
    pub sset: Vec<LElement>,
    /// `O(t)[1] = O(t')(kω)` for every `t` of a supported shape.
    pub odd_shifts: BTreeMap<LElement, (LElement, i64)>,
}

pub const SUPPORTED: [(i64, i64, i64); 4] = [(2, 4, 5), (2, 4, 7), (2, 5, 5), (2, 5, 6)];

impl WeightContext {
    pub fn new(weights: WeightTriple) -> Result<Self> {
        let w = &weights;
        let e = |a1, a2, a3, a| w.element(a1, a2, a3, a);
        let (gens, ring, relation, period): (Vec<(i64, LElement)>, [(Monomial, i64); 3], Vec<[i64; 3]>, i64) =
            match w.weights() {
                [2, 4, 5] => (
                    vec![(4, e(0, 0, 1, 0)), (10, e(0, 2, 0, 0)), (15, e(1, 1, 0, 0))],
                    [([0, 0, 1], 4), ([0, 2, 0], 10), ([1, 1, 0], 15)],
                    // z^2 + y^3 + x^5 y
                    vec![[0, 0, 2], [0, 3, 0], [5, 1, 0]],
                    30,
                ),
                [2, 4, 7] => (
                    vec![(4, e(0, 0, 3, 0)), (6, e(0, 2, 1, 0)), (7, e(1, 1, 0, 0))],
                    [([0, 0, 3], 4), ([0, 2, 1], 6), ([1, 1, 0], 7)],
                    // y^3 + x^3 y + x z^2
                    vec![[0, 3, 0], [3, 1, 0], [1, 0, 2]],
                    18,
                ),
                [2, 5, 5] => (
                    vec![(4, e(0, 1, 1, 0)), (5, e(1, 0, 0, 0))],
                    [([0, 1, 1], 4), ([1, 0, 0], 5), ([0, 5, 0], 10)],
                    // z^2 + y^2 z + x^5
                    vec![[0, 0, 2], [0, 2, 1], [5, 0, 0]],
                    20,
                ),
                [2, 5, 6] => (
                    vec![(4, e(0, 1, 2, 0)), (5, e(1, 0, 1, 0)), (6, e(0, 4, 0, 0))],
                    [([0, 1, 2], 4), ([1, 0, 1], 5), ([0, 4, 0], 6)],
                    // x z^2 + y^2 z + x^4
                    vec![[1, 0, 2], [0, 2, 1], [4, 0, 0]],
                    16,
                ),
                _ => return Err(Error::UnsupportedWeights(w.to_string())),
            };
        let delta_datum = [w.c(), w.x(1), w.x(2), w.x(3), w.omega()].map(|x| x.delta());
        let sset = w.sset()?;
        let mut ctx = WeightContext {
            weights,
            delta_datum,
            omega_generators: gens,
            ring_generators: ring,
            relation,
            period,
            sset,
            odd_shifts: BTreeMap::new(),
        };
        for t in ctx.sset.clone() {
            if Shape::of(&t).is_some() {
                let shifted = ctx.derive_odd_shift(&t)?;
                ctx.odd_shifts.insert(t, shifted);
            }
        }
        Ok(ctx)
    }

    pub fn for_weights(p1: i64, p2: i64, p3: i64) -> Result<Self> {
        Self::new(WeightTriple::new(p1, p2, p3)?)
    }

    pub fn omega(&self) -> LElement {
        self.weights.omega()
    }

    /// The shape of `t`, provided `t` is in the S-set.
    pub fn shape(&self, t: &LElement) -> Option<Shape> {
        if self.sset.contains(t) { Shape::of(t) } else { None }
    }

    /// `k` with projective cover `O ⊕ O(kω) -> O(t)`.
    pub fn projective_cover(&self, t: &LElement) -> Result<(i64, i64)> {
        let k = match self.shape(t) {
            Some(Shape::Single(i)) => -(1 + self.weights.weight(i)),
            Some(Shape::Pair(..)) => -1,
            Some(Shape::Double(_)) => -2,
            None => return Err(Error::UnsupportedShape(t.symbolic())),
        };
        Ok((0, k))
    }

    /// The kernel of the projective cover `O ⊕ O(kω) -> O(t)` is the line
    /// bundle `O(kω - t)` (determinants add up), so `O(t)[-1] = O(kω - t)`
    /// and `O(t)[1] = O(kω - t)(Dω)`.
    fn derive_odd_shift(&self, t: &LElement) -> Result<(LElement, i64)> {
        let (_, k) = self.projective_cover(t)?;
        let kernel = self.omega() * k - *t;
        let (rep, m) = self.weights.orbit_rep(&kernel)?;
        Ok((rep, m + self.period))
    }

    /// `O(t)[1] = O(t')(kω)`.
    pub fn odd_shift(&self, t: &LElement) -> Result<(LElement, i64)> {
        self.odd_shifts.get(t).copied().ok_or_else(|| Error::UnsupportedShape(t.symbolic()))
    }

    /// Whether `sHom(O(t - x), O(t)) != 0`, by the normal-form criteria for
    /// the three shapes of `t`.
    pub fn stable_hom_nonzero_raw(&self, x: &LElement, t: &LElement) -> Result<bool> {
        self.weights.check(x)?;
        let shape = self.shape(t).ok_or_else(|| Error::UnsupportedShape(t.symbolic()))?;
        if !x.is_nonneg() {
            return Ok(false);
        }
        let w = &self.weights;
        let others = |i: usize| -> (usize, usize) {
            let mut rest = (1..=3).filter(|&j| j != i);
            (rest.next().unwrap(), rest.next().unwrap())
        };
        Ok(match shape {
            Shape::Single(i) => {
                let bound = w.x(i) + self.omega() * (1 + w.weight(i));
                x.li(i) == 0 && !bound.leq(x)
            }
            Shape::Pair(i, j) => {
                let k = 6 - i - j;
                x.li(k) <= w.weight(k) - 2 && !(w.x(i) + w.x(j)).leq(x)
            }
            Shape::Double(i) => {
                let (j, k) = others(i);
                let bound = w.x(j) * (w.weight(j) - 2) + w.x(k) * (w.weight(k) - 2);
                x.li(i) <= 1 && !bound.leq(x)
            }
        })
    }
}

pub fn context_for(weights: &WeightTriple) -> Result<WeightContext> {
    WeightContext::new(*weights)
}
