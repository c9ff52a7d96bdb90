//! Reference algebras: hereditary stars `[a,b,c]`, canonical algebras
//! `(a,b,c)`, extended canonical algebras `<a,b,c]` and triangle types
//! `<2,a,b>`, together with per-size lookup tables of their Coxeter
//! polynomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{coxeter_poly, coxeter_poly_nakayama};
use crate::error::{Error, Result};
use crate::homcalc::sdim;
use crate::lgroup::{LElement, WeightTriple};
use crate::nakayama::one_point_extension_cartan;
use crate::{IntMatrix, IntPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TypeKind {
    Module,
    Sheaf,
    Fuchsian,
    Triangle,
    Wall,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TypeLabel {
    pub kind: TypeKind,
    /// Sorted weights for the first four kinds.
    pub triple: Option<[u32; 3]>,
    /// Set for walls.
    pub coxeter_number: Option<u64>,
}

impl TypeLabel {
    pub fn typed(kind: TypeKind, a: u32, b: u32, c: u32) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        TypeLabel { kind, triple: Some(t), coxeter_number: None }
    }

    pub fn module(a: u32, b: u32, c: u32) -> Self {
        Self::typed(TypeKind::Module, a, b, c)
    }

    pub fn sheaf(a: u32, b: u32, c: u32) -> Self {
        Self::typed(TypeKind::Sheaf, a, b, c)
    }

    pub fn fuchsian(a: u32, b: u32, c: u32) -> Self {
        Self::typed(TypeKind::Fuchsian, a, b, c)
    }

    pub fn triangle(a: u32, b: u32, c: u32) -> Self {
        Self::typed(TypeKind::Triangle, a, b, c)
    }

    pub fn wall(number: u64) -> Self {
        TypeLabel { kind: TypeKind::Wall, triple: None, coxeter_number: Some(number) }
    }

    pub fn unknown() -> Self {
        TypeLabel { kind: TypeKind::Unknown, triple: None, coxeter_number: None }
    }

    /// Vertex count of the reference algebra, when it has one.
    pub fn vertex_count(&self) -> Option<usize> {
        let [a, b, c] = self.triple?.map(|v| v as usize);
        match self.kind {
            TypeKind::Module => Some(a + b + c - 2),
            TypeKind::Sheaf => Some(a + b + c - 1),
            TypeKind::Fuchsian => Some(a + b + c),
            TypeKind::Triangle if a == 2 => Some((b - 1) * (c - 1)),
            _ => None,
        }
    }

    /// The Coxeter polynomial of the reference algebra.
    pub fn reference_poly(&self) -> Option<IntPolynomial> {
        let [a, b, c] = self.triple?.map(i64::from);
        match self.kind {
            TypeKind::Module => coxeter_poly(&star_cartan(a, b, c).ok()?).ok(),
            TypeKind::Sheaf => coxeter_poly(&canonical_cartan(a, b, c).ok()?).ok(),
            TypeKind::Fuchsian => coxeter_poly(&extended_canonical_cartan(a, b, c).ok()?).ok(),
            TypeKind::Triangle if a == 2 => triangle_type_poly(b, c).ok(),
            _ => None,
        }
    }
}

/// ASCII rendering: `[a,b,c]`, `(a,b,c)`, `<a,b,c]`, `<a,b,c>`, `wall m`,
/// `?`.
impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = |open: &str, close: &str, f: &mut fmt::Formatter<'_>| {
            let [a, b, c] = self.triple.unwrap_or_default();
            write!(f, "{open}{a},{b},{c}{close}")
        };
        match self.kind {
            TypeKind::Module => t("[", "]", f),
            TypeKind::Sheaf => t("(", ")", f),
            TypeKind::Fuchsian => t("<", "]", f),
            TypeKind::Triangle => t("<", ">", f),
            TypeKind::Wall => write!(f, "wall {}", self.coxeter_number.unwrap_or(0)),
            TypeKind::Unknown => write!(f, "?"),
        }
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let s = s.trim();
        if s == "?" {
            return Ok(TypeLabel::unknown());
        }
        if let Some(num) = s.strip_prefix("wall") {
            let m = num.trim().parse().map_err(|_| err("wall needs a Coxeter number"))?;
            return Ok(TypeLabel::wall(m));
        }
        let kind = match (s.chars().next(), s.chars().last()) {
            (Some('['), Some(']')) => TypeKind::Module,
            (Some('('), Some(')')) => TypeKind::Sheaf,
            (Some('<'), Some(']')) => TypeKind::Fuchsian,
            (Some('<'), Some('>')) => TypeKind::Triangle,
            _ => return Err(err("unrecognised brackets")),
        };
        let nums: Vec<u32> = s[1..s.len() - 1]
            .split(',')
            .map(|v| v.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err("entries must be positive integers"))?;
        let [a, b, c] = nums[..] else {
            return Err(err("expected three entries"));
        };
        Ok(TypeLabel::typed(kind, a, b, c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarOrientation {
    /// Every arrow points toward the center.
    Inward,
    Outward,
}

pub fn star_cartan(a: i64, b: i64, c: i64) -> Result<IntMatrix> {
    star_cartan_oriented(a, b, c, StarOrientation::Inward)
}

/// Path algebra of the star with branches of `a`, `b`, `c` vertices (the
/// center counted in each). Vertex 0 is the center, then each branch from
/// the center outward.
pub fn star_cartan_oriented(a: i64, b: i64, c: i64, orientation: StarOrientation) -> Result<IntMatrix> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::InvalidArgument("star branches need length >= 1".into()));
    }
    // parent[v] is the neighbour of v one step closer to the center.
    let mut parent: Vec<Option<usize>> = vec![None];
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 1..len {
            parent.push(Some(prev));
            prev = parent.len() - 1;
        }
    }
    let n = parent.len();
    let on_path_to_center = |u: usize, v: usize| {
        let mut w = Some(v);
        while let Some(x) = w {
            if x == u {
                return true;
            }
            w = parent[x];
        }
        false
    };
    // Column j is the dimension vector of P(j): the vertices reachable from j.
    Ok(IntMatrix::from_fn(n, n, |i, j| {
        let reach = match orientation {
            StarOrientation::Inward => on_path_to_center(i, j),
            StarOrientation::Outward => on_path_to_center(j, i),
        };
        if reach { BigInt::one() } else { BigInt::zero() }
    }))
}

/// `{x : 0 <= x <= c}` ordered by degree, then normal form.
pub fn canonical_vertices(weights: &WeightTriple) -> Vec<LElement> {
    let [p1, p2, p3] = weights.weights();
    let c = weights.c();
    let mut out: Vec<LElement> = (0..p1)
        .flat_map(|a1| (0..p2).flat_map(move |a2| (0..p3).map(move |a3| (a1, a2, a3))))
        .map(|(a1, a2, a3)| weights.element(a1, a2, a3, 0))
        .chain(std::iter::once(c))
        .filter(|x| x.is_nonneg() && x.leq(&c))
        .collect();
    out.sort_by_key(|x| (x.delta(), *x));
    out
}

/// Endomorphism algebra of `⊕_{0 <= x <= c} O(x)`: entry `(x, y)` is
/// `dim Hom(O(x), O(y))`.
pub fn canonical_cartan(p1: i64, p2: i64, p3: i64) -> Result<IntMatrix> {
    let w = WeightTriple::new(p1, p2, p3)?;
    let v = canonical_vertices(&w);
    let mut m = IntMatrix::zeros(v.len(), v.len());
    for (i, x) in v.iter().enumerate() {
        for (j, y) in v.iter().enumerate() {
            m[(i, j)] = BigInt::from(sdim(&w, &(*y - *x))?);
        }
    }
    Ok(m)
}

/// Which indecomposable projective of the canonical algebra to extend by.
///
/// With entry `(x, y)` equal to `dim Hom(O(x), O(y))`, the projective at
/// vertex `x` has dimension vector equal to row `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionVertex {
    Zero,
    C,
}

pub fn extended_canonical_cartan(p1: i64, p2: i64, p3: i64) -> Result<IntMatrix> {
    extended_canonical_cartan_at(p1, p2, p3, ExtensionVertex::Zero)
}

pub fn extended_canonical_cartan_at(p1: i64, p2: i64, p3: i64, at: ExtensionVertex) -> Result<IntMatrix> {
    let c = canonical_cartan(p1, p2, p3)?;
    let row = match at {
        ExtensionVertex::Zero => 0,
        ExtensionVertex::C => c.rows() - 1,
    };
    let d: Vec<i64> = c.row(row).iter().map(|v| i64::try_from(v).expect("small entry")).collect();
    one_point_extension_cartan(&c, &d)
}

/// Coxeter polynomial of the triangle type `<2,a,b>`, realised by
/// `N_{(a-1)(b-1)}(a)`.
pub fn triangle_type_poly(a: i64, b: i64) -> Result<IntPolynomial> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidArgument("triangle weights must be >= 2".into()));
    }
    coxeter_poly_nakayama(((a - 1) * (b - 1)) as usize, a as usize)
}

/// All module, sheaf and Fuchsian types with exactly `n` vertices, keyed by
/// Coxeter polynomial.
#[derive(Debug, Default)]
pub struct ReferenceTable {
    pub n: usize,
    by_poly: HashMap<IntPolynomial, Vec<TypeLabel>>,
}

impl ReferenceTable {
    pub fn lookup(&self, p: &IntPolynomial) -> &[TypeLabel] {
        self.by_poly.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.by_poly.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_poly.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&IntPolynomial, &Vec<TypeLabel>)> {
        self.by_poly.iter()
    }
}

/// Sorted triples `2 <= a <= b <= c` with `a + b + c = sum`.
fn triples_with_sum(sum: usize) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 2..=sum / 3 {
        for b in a..=(sum - a) / 2 {
            let c = sum - a - b;
            if c >= b {
                out.push([a as u32, b as u32, c as u32]);
            }
        }
    }
    out
}

/// The labels a reference table for `n` vertices contains, before any
/// polynomial is computed.
pub fn reference_labels(n: usize) -> Vec<TypeLabel> {
    let mut labels = Vec::new();
    for t in triples_with_sum(n + 2) {
        labels.push(TypeLabel::module(t[0], t[1], t[2]));
    }
    for t in triples_with_sum(n + 1) {
        labels.push(TypeLabel::sheaf(t[0], t[1], t[2]));
    }
    for t in triples_with_sum(n) {
        labels.push(TypeLabel::fuchsian(t[0], t[1], t[2]));
    }
    labels
}

/// Cached per `n`; the first call for a given `n` computes every polynomial
/// in parallel.
pub fn reference_table(n: usize) -> Arc<ReferenceTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ReferenceTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let computed: Vec<(IntPolynomial, TypeLabel)> = reference_labels(n)
        .into_par_iter()
        .map(|l| (l.reference_poly().expect("reference labels have polynomials"), l))
        .collect();
    let mut by_poly: HashMap<IntPolynomial, Vec<TypeLabel>> = HashMap::new();
    for (p, l) in computed {
        by_poly.entry(p).or_default().push(l);
    }
    for v in by_poly.values_mut() {
        v.sort();
    }
    let table = Arc::new(ReferenceTable { n, by_poly });
    cache.lock().unwrap().entry(n).or_insert(table).clone()
}
