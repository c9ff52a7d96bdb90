//! Coxeter matrices `φ = -C^{-T} C`, their characteristic polynomials,
//! cyclotomic factorization and Coxeter numbers.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nakayama;
use crate::scalar::{with_fallback, Overflow};
use crate::{IntMatrix, IntPolynomial};

/// `φ = -(C^{-1})^T C`. Fails unless `det C = ±1`.
pub fn coxeter_matrix(c: &IntMatrix) -> Result<IntMatrix> {
    if !c.is_square() {
        return Err(Error::InvalidArgument("Cartan matrix must be square".into()));
    }
    let inv = with_fallback(
        || match c.try_convert::<i128>() {
            Some(m) => m.inverse_unimodular().map(|o| o.map(|i| i.to_bigint())),
            None => Err(Overflow),
        },
        || c.inverse_unimodular(),
    );
    let Some(inv) = inv else {
        let det = c.det().expect("BigInt arithmetic cannot overflow");
        return Err(Error::NotUnimodular { det });
    };
    let phi = inv.transpose().checked_mul(c).and_then(|m| m.checked_neg());
    Ok(phi.expect("BigInt arithmetic cannot overflow"))
}

/// Exact `det(λI - M)`.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    assert!(m.is_square(), "characteristic polynomial needs a square matrix");
    with_fallback(
        || match m.try_convert::<i128>() {
            Some(small) => small.charpoly().map(|p| p.to_bigint()),
            None => Err(Overflow),
        },
        || m.charpoly(),
    )
}

pub fn coxeter_poly(c: &IntMatrix) -> Result<IntPolynomial> {
    Ok(char_poly(&coxeter_matrix(c)?))
}

pub fn coxeter_poly_nakayama(n: usize, r: usize) -> Result<IntPolynomial> {
    coxeter_poly(&nakayama::cartan(n, r)?)
}

/// `(λ+1)(λ^6-λ^3+1)(λ^r+1)` for `r >= 9`.
pub fn wall_closed_form(r: usize) -> Result<IntPolynomial> {
    if r < 9 {
        return Err(Error::InvalidArgument("the closed form holds for r >= 9".into()));
    }
    Ok(IntPolynomial::x_pow_plus(1, 1)
        * IntPolynomial::from_i64s(&[1, 0, 0, -1, 0, 0, 1])
        * IntPolynomial::x_pow_plus(r, 1))
}

pub fn euler_phi(mut d: u64) -> u64 {
    let mut result = d;
    let mut q = 2;
    while q * q <= d {
        if d.is_multiple_of(q) {
            while d.is_multiple_of(q) {
                d /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if d > 1 {
        result -= result / d;
    }
    result
}

fn prime_factors(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= d {
        if d.is_multiple_of(q) {
            out.push(q);
            while d.is_multiple_of(q) {
                d /= q;
            }
        }
        q += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// `p(x^k)`.
fn substitute_power(p: &IntPolynomial, k: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); p.degree().map_or(0, |d| d * k + 1)];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[i * k] = c.clone();
    }
    IntPolynomial::new(coeffs)
}

/// The `d`-th cyclotomic polynomial `Φ_d`.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&d) {
        return p.clone();
    }
    let primes = prime_factors(d);
    let rad: u64 = primes.iter().product();
    // Φ_1 = x - 1; Φ_{qm}(x) = Φ_m(x^q) / Φ_m(x) for a prime q not dividing m.
    let mut p = IntPolynomial::x_pow_plus(1, -1);
    for &q in &primes {
        let (quot, rem) = substitute_power(&p, q as usize).div_rem_monic(&p);
        debug_assert!(rem.is_zero());
        p = quot;
    }
    // Φ_d(x) = Φ_rad(d)(x^{d/rad(d)}).
    let p = substitute_power(&p, (d / rad) as usize);
    cache.lock().unwrap().insert(d, p.clone());
    p
}

/// Cyclotomic part of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// `(d, multiplicity)` in increasing `d`.
    pub factors: Vec<(u64, u32)>,
    /// What is left after removing every cyclotomic factor.
    pub remainder: IntPolynomial,
}

impl Factorization {
    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .map(|&(d, m)| cyclotomic(d).pow(m))
            .product::<IntPolynomial>()
            * self.remainder.clone()
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.remainder.is_one()
    }
}

pub fn cyclotomic_factorize(p: &IntPolynomial) -> Factorization {
    let mut rest = p.clone();
    let mut factors = Vec::new();
    let Some(deg) = p.degree() else {
        return Factorization { factors, remainder: rest };
    };
    let deg = deg as u64;
    // φ(d) >= sqrt(d/2), so φ(d) <= deg forces d <= 2 deg^2.
    for d in 1..=(2 * deg * deg).max(2) {
        let phi = euler_phi(d);
        if phi > rest.degree().unwrap_or(0) as u64 {
            continue;
        }
        let cd = cyclotomic(d);
        let mut mult = 0;
        loop {
            let (q, r) = rest.div_rem_monic(&cd);
            if !r.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d, mult));
        }
        if rest.degree() == Some(0) {
            break;
        }
    }
    Factorization { factors, remainder: rest }
}

/// Order of `φ`, or `None` if `φ` has infinite order.
pub fn coxeter_number_of_phi(phi: &IntMatrix, fact: &Factorization) -> Option<u64> {
    if !fact.is_cyclotomic() {
        return None;
    }
    let m0 = fact.factors.iter().fold(1u64, |acc, &(d, _)| acc.lcm(&d));
    let is_identity = with_fallback(
        || match phi.try_convert::<i128>() {
            Some(small) => small.checked_pow(m0).map(|m| m.is_identity()),
            None => Err(Overflow),
        },
        || phi.checked_pow(m0).map(|m| m.is_identity()),
    );
    // The eigenvalues are primitive d-th roots of unity, so any period is a
    // multiple of m0.
    is_identity.then_some(m0)
}

pub fn coxeter_number(c: &IntMatrix) -> Result<Option<u64>> {
    let phi = coxeter_matrix(c)?;
    let fact = cyclotomic_factorize(&char_poly(&phi));
    Ok(coxeter_number_of_phi(&phi, &fact))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoxeterReport {
    pub cartan: IntMatrix,
    pub phi: IntMatrix,
    pub charpoly: IntPolynomial,
    pub cyclotomic_factors: Vec<(u64, u32)>,
    pub non_cyclotomic_remainder: IntPolynomial,
    pub periodic: bool,
    pub coxeter_number: Option<u64>,
}

pub fn coxeter_report(c: &IntMatrix) -> Result<CoxeterReport> {
    let phi = coxeter_matrix(c)?;
    let charpoly = char_poly(&phi);
    let fact = cyclotomic_factorize(&charpoly);
    let number = coxeter_number_of_phi(&phi, &fact);
    Ok(CoxeterReport {
        cartan: c.clone(),
        phi,
        charpoly,
        cyclotomic_factors: fact.factors,
        non_cyclotomic_remainder: fact.remainder,
        periodic: number.is_some(),
        coxeter_number: number,
    })
}
