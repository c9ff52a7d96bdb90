//! Classification of Nakayama algebras `N_n(r)` by exact Coxeter polynomial
//! matching against the reference algebras, plus the periodic wall.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::coxeter::{coxeter_poly, coxeter_poly_nakayama, coxeter_report};
use crate::error::{Error, Result};
use crate::nakayama::cartan;
use crate::reftypes::{extended_canonical_cartan, reference_table, triangle_type_poly, TypeKind, TypeLabel};
use crate::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// At least one reference algebra has the same Coxeter polynomial.
    Matched,
    /// No match, and the Coxeter transformation is periodic.
    Wall,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Theorem,
    Conjecture,
}

fn as_display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn as_display_seq<T: std::fmt::Display, S: Serializer>(v: &[T], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CellLabel {
    #[serde(serialize_with = "as_display")]
    pub label: TypeLabel,
    /// The label is the one the published classification proves for this
    /// cell, as opposed to a bare polynomial coincidence.
    pub confirmed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub r: usize,
    pub charpoly: IntPolynomial,
    pub labels: Vec<CellLabel>,
    /// Triangle types `<2,a,b>` with `n = (a-1)(b-1)` and `r` in `{a, b}`.
    /// Kept apart so they never turn a wall cell into a matched one.
    #[serde(serialize_with = "as_display_seq")]
    pub triangle_labels: Vec<TypeLabel>,
    pub periodic: bool,
    pub coxeter_number: Option<u64>,
    pub status: Status,
}

impl ClassificationReport {
    pub fn has_label(&self, label: &TypeLabel) -> bool {
        self.labels.iter().any(|l| l.label == *label)
    }

    /// The label shown in grids: the confirmed one if any, else the first.
    pub fn primary_label(&self) -> TypeLabel {
        match self.status {
            Status::Matched => self
                .labels
                .iter()
                .find(|l| l.confirmed)
                .or(self.labels.first())
                .map(|l| l.label)
                .unwrap_or_else(TypeLabel::unknown),
            Status::Wall => TypeLabel::wall(self.coxeter_number.unwrap_or(0)),
            Status::Unknown => TypeLabel::unknown(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixtureCell {
    pub r: usize,
    pub n: usize,
    pub label: TypeLabel,
    pub basis: Basis,
}

#[derive(Deserialize)]
struct FixtureRow {
    r: usize,
    n: usize,
    label: String,
    basis: Basis,
}

const FIGURE1_CSV: &str = include_str!("../data/figure1.csv");

/// The labelled and wall cells of the published grid for `3 <= r <= 19`.
pub fn figure1_fixture() -> &'static [FixtureCell] {
    static FIXTURE: OnceLock<Vec<FixtureCell>> = OnceLock::new();
    FIXTURE.get_or_init(|| {
        csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(FIGURE1_CSV.as_bytes())
            .deserialize::<FixtureRow>()
            .map(|row| {
                let row = row.expect("embedded fixture is well formed");
                let label = row.label.parse().expect("embedded fixture labels parse");
                FixtureCell { r: row.r, n: row.n, label, basis: row.basis }
            })
            .collect()
    })
}

pub fn fixture_cell(n: usize, r: usize) -> Option<&'static FixtureCell> {
    figure1_fixture().iter().find(|c| c.n == n && c.r == r)
}

fn triangle_candidates(n: usize, r: usize) -> Vec<(usize, usize)> {
    (2..=n + 1)
        .filter(|a| n.is_multiple_of(a - 1))
        .map(|a| (a, n / (a - 1) + 1))
        .filter(|&(a, b)| a <= b && (r == a || r == b))
        .collect()
}

pub fn classify_cell(n: usize, r: usize) -> Result<ClassificationReport> {
    if n < 1 || r < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 1 and r >= 2, got ({n}, {r})")));
    }
    let report = coxeter_report(&cartan(n, r)?)?;
    let charpoly = report.charpoly;
    let fixture = fixture_cell(n, r);
    let labels: Vec<CellLabel> = reference_table(n)
        .lookup(&charpoly)
        .iter()
        .map(|&label| CellLabel {
            label,
            confirmed: fixture.is_some_and(|f| f.label == label && f.basis == Basis::Theorem),
        })
        .collect();
    let mut triangle_labels = Vec::new();
    for (a, b) in triangle_candidates(n, r) {
        if triangle_type_poly(a as i64, b as i64)? == charpoly {
            triangle_labels.push(TypeLabel::triangle(2, a as u32, b as u32));
        }
    }
    let status = if !labels.is_empty() {
        Status::Matched
    } else if report.periodic {
        Status::Wall
    } else {
        Status::Unknown
    };
    Ok(ClassificationReport {
        n,
        r,
        charpoly,
        labels,
        triangle_labels,
        periodic: report.periodic,
        coxeter_number: report.coxeter_number,
        status,
    })
}

/// Cells `(n, r)` for `3 <= r <= rmax` and `2 <= n - r <= smax`, ordered by
/// `(r, n)`.
#[derive(Debug, Clone, Serialize)]
pub struct Grid {
    pub rmax: usize,
    pub smax: usize,
    pub cells: Vec<ClassificationReport>,
}

impl Grid {
    pub fn cell(&self, n: usize, r: usize) -> Option<&ClassificationReport> {
        self.cells.iter().find(|c| c.n == n && c.r == r)
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = &ClassificationReport> {
        self.cells.iter().filter(move |c| c.r == r)
    }
}

pub fn figure1_grid(rmax: usize, smax: usize) -> Result<Grid> {
    let coords: Vec<(usize, usize)> =
        (3..=rmax).flat_map(|r| (2..=smax).map(move |s| (r + s, r))).collect();
    let cells = coords
        .into_par_iter()
        .map(|(n, r)| classify_cell(n, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(Grid { rmax, smax, cells })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureMismatch {
    pub r: usize,
    pub n: usize,
    pub expected: String,
    pub found: String,
}

/// Fixture cells inside the grid whose label (or wall number) the
/// computation does not reproduce.
pub fn compare_with_fixture(grid: &Grid) -> Vec<FixtureMismatch> {
    let mut out = Vec::new();
    for f in figure1_fixture() {
        let Some(cell) = grid.cell(f.n, f.r) else { continue };
        let ok = match f.label.kind {
            TypeKind::Wall => cell.status == Status::Wall && cell.coxeter_number == f.label.coxeter_number,
            _ => cell.has_label(&f.label),
        };
        if !ok {
            let found = match cell.status {
                Status::Matched => cell.labels.iter().map(|l| l.label.to_string()).collect::<Vec<_>>().join(" "),
                _ => cell.primary_label().to_string(),
            };
            out.push(FixtureMismatch { r: f.r, n: f.n, expected: f.label.to_string(), found });
        }
    }
    out
}

/// Cells of the grid with status UNKNOWN that lie left of the wall in
/// their row.
pub fn unfenced_unknowns(grid: &Grid) -> Vec<(usize, usize)> {
    grid.cells
        .iter()
        .filter(|c| c.status == Status::Unknown && c.n < wall_position(c.r))
        .map(|c| (c.n, c.r))
        .collect()
}

/// `n` of the periodic wall cell in row `r >= 3`.
pub fn wall_position(r: usize) -> usize {
    match r {
        3 => 16,
        4..=6 => 15,
        7 => 14,
        8 => 17,
        _ => r + 7,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallEntry {
    pub r: usize,
    pub n: usize,
    pub coxeter_number: Option<u64>,
    /// `lcm(2r, 9)` for `r >= 9`.
    pub closed_form: Option<u64>,
}

pub fn wall_table(rmax: usize) -> Result<Vec<WallEntry>> {
    (3..=rmax)
        .into_par_iter()
        .map(|r| {
            let n = wall_position(r);
            let coxeter_number = coxeter_report(&cartan(n, r)?)?.coxeter_number;
            let closed_form = (r >= 9).then(|| (2 * r as u64).lcm(&9));
            Ok(WallEntry { r, n, coxeter_number, closed_form })
        })
        .collect()
}

/// Polynomial equalities `N_{m}(a)` vs `N_{m}(b)` for `m = n-1, n, n+1`
/// with `n = (a-1)(b-1)`.
pub fn hs_symmetry_check(a: usize, b: usize) -> Result<[bool; 3]> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidArgument(format!("need a, b >= 2, got ({a}, {b})")));
    }
    let n = (a - 1) * (b - 1);
    let mut out = [false; 3];
    for (k, m) in [n - 1, n, n + 1].into_iter().enumerate() {
        if m == 0 {
            out[k] = true;
            continue;
        }
        out[k] = coxeter_poly_nakayama(m, a)? == coxeter_poly_nakayama(m, b)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct EvidenceItem {
    pub nakayama: (usize, usize),
    /// A Fuchsian label or another Nakayama algebra `N_n(r)`.
    pub compared_with: String,
    pub equal: bool,
    pub expected_equal: bool,
    /// Always false: polynomial equality is necessary, not sufficient.
    pub confirmed: bool,
}

impl EvidenceItem {
    pub fn holds(&self) -> bool {
        self.equal == self.expected_equal
    }
}

/// Polynomial evidence for the conjectural Fuchsian cells, with a
/// same-degree negative control.
pub fn conjecture_evidence() -> Result<Vec<EvidenceItem>> {
    let fuchsian = |(n, r): (usize, usize), t: [i64; 3], expected_equal: bool| -> Result<EvidenceItem> {
        let p = coxeter_poly(&extended_canonical_cartan(t[0], t[1], t[2])?)?;
        let label = TypeLabel::fuchsian(t[0] as u32, t[1] as u32, t[2] as u32);
        Ok(EvidenceItem {
            nakayama: (n, r),
            compared_with: label.to_string(),
            equal: coxeter_poly_nakayama(n, r)? == p,
            expected_equal,
            confirmed: false,
        })
    };
    Ok(vec![
        fuchsian((14, 4), [2, 5, 7], true)?,
        fuchsian((14, 5), [2, 6, 6], true)?,
        fuchsian((16, 8), [2, 3, 11], true)?,
        EvidenceItem {
            nakayama: (14, 4),
            compared_with: "N_14(6)".into(),
            equal: coxeter_poly_nakayama(14, 4)? == coxeter_poly_nakayama(14, 6)?,
            expected_equal: true,
            confirmed: false,
        },
        fuchsian((14, 4), [2, 4, 8], false)?,
    ])
}

/// One row per `r`, top row `rmax`, columns `n - r = 2..=smax`.
pub fn render_text(grid: &Grid) -> String {
    let mut out = String::new();
    let _ = write!(out, "{:>4} |", "r");
    for s in 2..=grid.smax {
        let _ = write!(out, " {s:>10}");
    }
    out.push('\n');
    for r in (3..=grid.rmax).rev() {
        let _ = write!(out, "{r:>4} |");
        for c in grid.row(r) {
            let text = match c.status {
                Status::Matched => c.primary_label().to_string(),
                Status::Wall => format!("#{}", c.coxeter_number.unwrap_or(0)),
                Status::Unknown => ".".into(),
            };
            let _ = write!(out, " {text:>10}");
        }
        out.push('\n');
    }
    out
}

/// Columns `r,n,status,labels,coxeter_number`; labels are `;`-separated.
pub fn render_csv(grid: &Grid) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let _ = w.write_record(["r", "n", "status", "labels", "coxeter_number"]);
    for c in &grid.cells {
        let status = match c.status {
            Status::Matched => "MATCHED",
            Status::Wall => "WALL",
            Status::Unknown => "UNKNOWN",
        };
        let labels = c.labels.iter().map(|l| l.label.to_string()).collect::<Vec<_>>().join(";");
        let number = c.coxeter_number.map(|m| m.to_string()).unwrap_or_default();
        let _ = w.write_record([c.r.to_string(), c.n.to_string(), status.into(), labels, number]);
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is UTF-8")
}

fn tex_label(label: &TypeLabel) -> String {
    let [a, b, c] = label.triple.unwrap_or_default();
    match label.kind {
        TypeKind::Module => format!("\\g[{a},{b},{c}]"),
        TypeKind::Sheaf => format!("\\y({a},{b},{c})"),
        TypeKind::Fuchsian => format!("\\r\\l{a},{b},{c}]"),
        TypeKind::Triangle => format!("\\l{a},{b},{c}\\rangle"),
        TypeKind::Wall => format!("\\gg{}", label.coxeter_number.unwrap_or(0)),
        TypeKind::Unknown => String::new(),
    }
}

/// A LaTeX `array` in the layout of the published figure (needs
/// `xcolor` with the `table` and `dvipsnames` options). Cells right of the
/// wall are left blank.
pub fn render_tex(grid: &Grid) -> String {
    let cols = grid.smax - 1;
    let mut out = String::new();
    out.push_str("\\def\\l{\\langle}\n\\def\\y{\\cellcolor{yellow}}\n\\def\\r{\\cellcolor{red}}\n");
    out.push_str("\\def\\gg{\\cellcolor{OliveGreen}}\n\\def\\g{\\cellcolor{YellowGreen}}\n");
    let _ = writeln!(out, "\\begin{{array}}{{c|{}}}", "c".repeat(cols));
    for r in (3..=grid.rmax).rev() {
        let _ = write!(out, "{r}");
        for c in grid.row(r) {
            let text = if c.n > wall_position(r) { String::new() } else { tex_label(&c.primary_label()) };
            let _ = write!(out, "&{text}");
        }
        out.push_str("\\\\\n");
    }
    out.push_str("\\hline\n");
    for s in 2..=grid.smax {
        let _ = write!(out, "&{s}");
    }
    out.push_str("\\\\\n\\end{array}\n");
    out
}
