//! The rank-one abelian group `L(p1,p2,p3)` generated by `x1, x2, x3` with
//! `p1 x1 = p2 x2 = p3 x3 = c`.
//!
//! Every element has a unique normal form `l1 x1 + l2 x2 + l3 x3 + l c` with
//! `0 <= l_i < p_i`, and `x >= 0` exactly when `l >= 0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightTriple {
    p: [i64; 3],
}

impl WeightTriple {
    /// Weights are positional and kept in the given order.
    pub fn new(p1: i64, p2: i64, p3: i64) -> Result<Self> {
        for p in [p1, p2, p3] {
            if p < 2 {
                return Err(Error::InvalidWeight(p));
            }
        }
        Ok(WeightTriple { p: [p1, p2, p3] })
    }

    pub fn weights(&self) -> [i64; 3] {
        self.p
    }

    /// `p_i` for `i` in `1..=3`.
    pub fn weight(&self, i: usize) -> i64 {
        self.p[i - 1]
    }

    /// `p = lcm(p1, p2, p3)`.
    pub fn lcm(&self) -> i64 {
        self.p.iter().fold(1, |acc, &q| acc.lcm(&q))
    }

    /// Normal form of `a1 x1 + a2 x2 + a3 x3 + a c`.
    pub fn element(&self, a1: i64, a2: i64, a3: i64, a: i64) -> LElement {
        let raw = [a1, a2, a3];
        let mut l = [0; 3];
        let mut c = a;
        for i in 0..3 {
            l[i] = raw[i].rem_euclid(self.p[i]);
            c += raw[i].div_euclid(self.p[i]);
        }
        LElement { weights: *self, l, c }
    }

    pub fn zero(&self) -> LElement {
        self.element(0, 0, 0, 0)
    }

    /// The generator `x_i` for `i` in `1..=3`.
    pub fn x(&self, i: usize) -> LElement {
        let mut a = [0; 3];
        a[i - 1] = 1;
        self.element(a[0], a[1], a[2], 0)
    }

    pub fn c(&self) -> LElement {
        self.element(0, 0, 0, 1)
    }

    /// The dualizing element `c - x1 - x2 - x3`.
    pub fn omega(&self) -> LElement {
        self.element(-1, -1, -1, 1)
    }

    /// `χ = -δ(ω)/p`.
    pub fn euler_char(&self) -> Ratio<i64> {
        Ratio::new(-self.omega().delta(), self.lcm())
    }

    /// `χ = 2 - Σ (1 - 1/p_i)`, the second closed form.
    pub fn euler_char_from_weights(&self) -> Ratio<i64> {
        self.p
            .iter()
            .fold(Ratio::from_integer(2), |acc, &q| acc - (Ratio::from_integer(1) - Ratio::new(1, q)))
    }

    pub fn is_negatively_curved(&self) -> bool {
        self.omega().delta() > 0
    }

    fn require_negative(&self) -> Result<()> {
        if self.is_negatively_curved() {
            Ok(())
        } else {
            Err(Error::NotNegativelyCurved(self.to_string()))
        }
    }

    /// Least `k > 0` with `kω >= 0`.
    pub fn omega_gap(&self) -> Result<i64> {
        self.require_negative()?;
        let w = self.omega();
        // pω = δ(ω)c >= 0, so the search stops by k = p.
        Ok((1..=self.lcm())
            .find(|&k| (w * k).is_nonneg())
            .expect("pω is nonnegative"))
    }

    /// The finite set `{x : 0 <= x <= nω + c for all n >= 2}` in normal-form
    /// order.
    pub fn sset(&self) -> Result<Vec<LElement>> {
        let gap = self.omega_gap()?;
        let w = self.omega();
        let top = w * 2 + self.c();
        let lmax = top.delta().div_euclid(self.lcm());
        let mut out = Vec::new();
        for l in 0..=lmax {
            for a1 in 0..self.p[0] {
                for a2 in 0..self.p[1] {
                    for a3 in 0..self.p[2] {
                        let x = self.element(a1, a2, a3, l);
                        if (2..=1 + gap).all(|n| x.leq(&(w * n + self.c()))) {
                            out.push(x);
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// `δ` of `Σ (p_i - 1) x_i`: every element with at least this degree is
    /// nonnegative.
    fn positivity_threshold(&self) -> i64 {
        let p = self.lcm();
        self.p.iter().map(|&q| (q - 1) * (p / q)).sum()
    }

    /// Largest `m` with `x - mω >= 0`.
    pub fn m_max(&self, x: &LElement) -> Result<i64> {
        self.check(x)?;
        self.require_negative()?;
        let w = self.omega();
        let dw = w.delta();
        let mut m = x.delta().div_euclid(dw);
        let threshold = self.positivity_threshold();
        loop {
            if (*x - w * m).is_nonneg() {
                return Ok(m);
            }
            // Once δ(x - mω) reaches the threshold the loop has succeeded.
            debug_assert!(x.delta() - m * dw < threshold);
            m -= 1;
        }
    }

    /// `(x - m ω, m)` with `m = m_max(x)`; the first component lies in the
    /// S-set and represents the τ-orbit of `O(x)`.
    pub fn orbit_rep(&self, x: &LElement) -> Result<(LElement, i64)> {
        let m = self.m_max(x)?;
        Ok((*x - self.omega() * m, m))
    }

    pub fn check(&self, x: &LElement) -> Result<()> {
        if x.weights == *self {
            Ok(())
        } else {
            Err(Error::WeightMismatch(self.to_string(), x.weights.to_string()))
        }
    }

    /// Parses `a1*x1+a2*x2+a3*x3+a*c` style sums (terms optional, `*`
    /// optional, `w` for ω, `0` for zero) or the tuple `(a1,a2,a3,a)`.
    pub fn parse(&self, input: &str) -> Result<LElement> {
        let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.to_string() };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty expression"));
        }
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let parts: Vec<i64> = inner
                .split(',')
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("tuple entries must be integers"))?;
            let [a1, a2, a3, a] = parts[..] else {
                return Err(err("tuple must have four entries"));
            };
            return Ok(self.element(a1, a2, a3, a));
        }
        let mut total = self.zero();
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if first => (1, rest),
                _ => return Err(err("expected + or -")),
            };
            first = false;
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let (num, sym) = term.split_at(digits);
            let sym = sym.strip_prefix('*').unwrap_or(sym);
            let coef = if num.is_empty() {
                if sym.is_empty() {
                    return Err(err("empty term"));
                }
                1
            } else {
                num.parse::<i64>().map_err(|_| err("coefficient out of range"))?
            };
            let unit = match sym {
                "x1" => self.x(1),
                "x2" => self.x(2),
                "x3" => self.x(3),
                "c" => self.c(),
                "w" => self.omega(),
                "" if coef == 0 => self.zero(),
                _ => return Err(err("unknown symbol (use x1, x2, x3, c, w)")),
            };
            total = total + unit * (sign * coef);
        }
        Ok(total)
    }
}

impl fmt::Display for WeightTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p[0], self.p[1], self.p[2])
    }
}

/// An element of `L(p1,p2,p3)` in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LElement {
    weights: WeightTriple,
    l: [i64; 3],
    c: i64,
}

impl LElement {
    pub fn weights(&self) -> WeightTriple {
        self.weights
    }

    /// `(l1, l2, l3, l)`.
    pub fn coords(&self) -> (i64, i64, i64, i64) {
        (self.l[0], self.l[1], self.l[2], self.c)
    }

    /// `l_i` for `i` in `1..=3`.
    pub fn li(&self, i: usize) -> i64 {
        self.l[i - 1]
    }

    /// Coefficient of `c`.
    pub fn lc(&self) -> i64 {
        self.c
    }

    pub fn delta(&self) -> i64 {
        let p = self.weights.lcm();
        (0..3).map(|i| self.l[i] * (p / self.weights.p[i])).sum::<i64>() + self.c * p
    }

    pub fn is_nonneg(&self) -> bool {
        self.c >= 0
    }

    pub fn is_zero(&self) -> bool {
        self.l == [0; 3] && self.c == 0
    }

    /// `self <= other`, i.e. `other - self >= 0`.
    pub fn leq(&self, other: &LElement) -> bool {
        (*other - *self).is_nonneg()
    }

    pub fn try_add(&self, other: &LElement) -> Result<LElement> {
        self.weights.check(other)?;
        let w = &self.weights;
        Ok(w.element(self.l[0] + other.l[0], self.l[1] + other.l[1], self.l[2] + other.l[2], self.c + other.c))
    }

    pub fn try_sub(&self, other: &LElement) -> Result<LElement> {
        self.try_add(&-*other)
    }

    /// Human-readable sum such as `x2+2x3-c`; `0` for zero.
    pub fn symbolic(&self) -> String {
        let mut out = String::new();
        let terms = [(self.l[0], "x1"), (self.l[1], "x2"), (self.l[2], "x3"), (self.c, "c")];
        for (k, name) in terms {
            if k == 0 {
                continue;
            }
            if k < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k.abs() != 1 {
                out.push_str(&k.abs().to_string());
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.l[0], self.l[1], self.l[2], self.c)
    }
}

/// `{"normal_form": [l1, l2, l3, l], "symbolic": "..."}`; the weights are
/// left to the enclosing document.
impl Serialize for LElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("LElement", 2)?;
        s.serialize_field("normal_form", &[self.l[0], self.l[1], self.l[2], self.c])?;
        s.serialize_field("symbolic", &self.symbolic())?;
        s.end()
    }
}

/// Lexicographic on `(l1, l2, l3, l)`.
impl Ord for LElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weights, self.l, self.c).cmp(&(other.weights, other.l, other.c))
    }
}

impl PartialOrd for LElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for LElement {
    type Output = LElement;
    /// Panics on mixed weights; use [`LElement::try_add`] to get an error.
    fn add(self, rhs: LElement) -> LElement {
        self.try_add(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for LElement {
    type Output = LElement;
    fn sub(self, rhs: LElement) -> LElement {
        self.try_sub(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for LElement {
    type Output = LElement;
    fn neg(self) -> LElement {
        self.weights.element(-self.l[0], -self.l[1], -self.l[2], -self.c)
    }
}

impl Mul<i64> for LElement {
    type Output = LElement;
    fn mul(self, k: i64) -> LElement {
        self.weights.element(k * self.l[0], k * self.l[1], k * self.l[2], k * self.c)
    }
}
