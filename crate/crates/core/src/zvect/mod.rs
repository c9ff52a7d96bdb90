//! The stable category of vector bundles modulo the `τ`-orbit of `O`, for
//! the four weight triples where it has an explicit hypersurface model.
//!
//! Objects reachable from line bundles are handled in a canonical form
//! `O(rep)(twist · ω)` with `rep` in the S-set; suspensions are folded into
//! the twist through the projective covers.

mod context;
mod tilting;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lgroup::LElement;

pub use context::{context_for, Monomial, Shape, WeightContext, SUPPORTED};
pub use tilting::{tilting_spec, verify_tilting, TiltingReport, TiltingSpec};

/// `O(rep)(twist · ω)[shift]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StableLineObject {
    pub rep: LElement,
    pub twist: i64,
    pub shift: i64,
}

impl StableLineObject {
    pub fn new(ctx: &WeightContext, rep: LElement, twist: i64, shift: i64) -> Result<Self> {
        ctx.weights.check(&rep)?;
        if rep.is_zero() {
            return Err(Error::InvalidArgument("O is zero in the stable category".into()));
        }
        if !ctx.sset.contains(&rep) {
            return Err(Error::InvalidArgument(format!(
                "{} is not an orbit representative",
                rep.symbolic()
            )));
        }
        Ok(StableLineObject { rep, twist, shift })
    }

    /// The line bundle `O(x)`, written against its orbit representative.
    pub fn line(ctx: &WeightContext, x: &LElement) -> Result<Self> {
        let (rep, twist) = ctx.weights.orbit_rep(x)?;
        Self::new(ctx, rep, twist, 0)
    }

    /// The degree `rep + twist · ω` of the underlying line bundle.
    pub fn degree(&self) -> LElement {
        self.rep + self.rep.weights().omega() * self.twist
    }

    pub fn twisted(self, k: i64) -> Self {
        StableLineObject { twist: self.twist + k, ..self }
    }

    /// Parses `rep:twist`, `rep:twist:shift` or a bare `rep`, with `rep` in
    /// L-element syntax. The line bundle is re-expressed on its orbit.
    pub fn parse(ctx: &WeightContext, input: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.to_string() };
        let parts: Vec<&str> = input.split(':').map(str::trim).collect();
        if parts.len() > 3 {
            return Err(err("expected rep[:twist[:shift]]"));
        }
        let x = ctx.weights.parse(parts[0])?;
        let num = |s: &str| s.parse::<i64>().map_err(|_| err("twist and shift must be integers"));
        let twist = parts.get(1).map(|s| num(s)).transpose()?.unwrap_or(0);
        let shift = parts.get(2).map(|s| num(s)).transpose()?.unwrap_or(0);
        let base = Self::line(ctx, &x)?;
        Ok(StableLineObject { twist: base.twist + twist, shift, ..base })
    }
}

impl fmt::Display for StableLineObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({})({}w)", self.rep.symbolic(), self.twist)?;
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        Ok(())
    }
}

/// Applies `[k]` and returns the result with shift zero.
pub fn suspend(ctx: &WeightContext, obj: &StableLineObject, k: i64) -> Result<StableLineObject> {
    let s = obj.shift + k;
    let (q, e) = (s.div_euclid(2), s.rem_euclid(2));
    let mut out = StableLineObject { rep: obj.rep, twist: obj.twist + q * ctx.period, shift: 0 };
    if e == 1 {
        let (rep, m) = ctx.odd_shift(&out.rep)?;
        out = StableLineObject { rep, twist: out.twist + m, shift: 0 };
    }
    Ok(out)
}

/// `S^k = τ^k [k]`, that is twist by `kω` then suspend by `k`.
pub fn serre(ctx: &WeightContext, obj: &StableLineObject, k: i64) -> Result<StableLineObject> {
    suspend(ctx, &obj.twisted(k), k)
}

/// Dimension (0 or 1) of the stable Hom space between two objects.
pub fn stable_hom_dim(ctx: &WeightContext, a: &StableLineObject, b: &StableLineObject) -> Result<i64> {
    let a = suspend(ctx, a, 0)?;
    let b = suspend(ctx, b, 0)?;
    if ctx.shape(&b.rep).is_some() {
        return hom_normalized(ctx, &a, &b);
    }
    // sHom(A, B) = D sHom(B, SA)
    if ctx.shape(&a.rep).is_some() {
        let sa = serre(ctx, &a, 1)?;
        if ctx.shape(&sa.rep).is_some() {
            return hom_normalized(ctx, &b, &sa);
        }
    }
    Err(Error::UnsupportedShape(format!("sHom({a}, {b})")))
}

fn hom_normalized(ctx: &WeightContext, a: &StableLineObject, b: &StableLineObject) -> Result<i64> {
    let x = b.rep - a.rep - ctx.omega() * (a.twist - b.twist);
    Ok(ctx.stable_hom_nonzero_raw(&x, &b.rep)? as i64)
}

/// Suspensions `m` with `0 < |m| <= W` that [`extension_free`] scans.
pub fn suspension_window(ctx: &WeightContext, objs: &[StableLineObject]) -> i64 {
    let degrees: Vec<i64> = objs.iter().map(|o| o.degree().delta()).collect();
    let spread = match (degrees.iter().min(), degrees.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => 0,
    };
    let [dc, .., dw] = ctx.delta_datum;
    let step = ctx.period * dw;
    2 + (4 * dc + 2 * spread + step - 1) / step
}

/// A nonvanishing `sHom(objs[i], objs[j][m])` with `m != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtensionWitness {
    pub source: usize,
    pub target: usize,
    pub shift: i64,
}

/// Scans every ordered pair and every shift in the window. Returns the
/// lexicographically least witness `(source, target, shift)` on failure.
pub fn extension_free(ctx: &WeightContext, objs: &[StableLineObject]) -> Result<Option<ExtensionWitness>> {
    let w = suspension_window(ctx, objs);
    extension_free_within(ctx, objs, w)
}

pub fn extension_free_within(
    ctx: &WeightContext,
    objs: &[StableLineObject],
    window: i64,
) -> Result<Option<ExtensionWitness>> {
    let n = objs.len();
    let found = (0..n * n)
        .into_par_iter()
        .map(|idx| -> Result<Option<ExtensionWitness>> {
            let (i, j) = (idx / n, idx % n);
            for m in (-window..=window).filter(|&m| m != 0) {
                let shifted = suspend(ctx, &objs[j], m)?;
                if stable_hom_dim(ctx, &objs[i], &shifted)? != 0 {
                    return Ok(Some(ExtensionWitness { source: i, target: j, shift: m }));
                }
            }
            Ok(None)
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    found.unwrap_or(Ok(None))
}
