//! Mechanical checks of `Lx = Rx` for decreasing-product components, for
//! whole decreasing products, and for the fixed figure transcriptions.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::cabling::{cable, WidthVector};
use crate::decreasing::{component, decreasing_product, enumerate_products, kmax};
use crate::derived::{left_derived, right_derived};
use crate::error::Result;
use crate::notation::{flatten, parse_rows};
use crate::par;
use crate::word_problem::equal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: String,
    pub strands: usize,
    pub lx_length: usize,
    pub rx_length: usize,
    /// Whether the two sides were found group-equal.
    pub verdict: bool,
    pub expected: bool,
    pub micros: u64,
}

impl CaseRecord {
    pub fn passed(&self) -> bool {
        self.verdict == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub scope: String,
    pub cases: Vec<CaseRecord>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(scope: impl Into<String>, cases: Vec<CaseRecord>) -> Self {
        let pass = cases.iter().all(CaseRecord::passed);
        Self {
            scope: scope.into(),
            cases,
            pass,
        }
    }

    pub fn merge(scope: impl Into<String>, reports: Vec<VerificationReport>) -> Self {
        Self::new(scope, reports.into_iter().flat_map(|r| r.cases).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn timed_case(id: String, left: &BraidWord, right: &BraidWord, expected: bool) -> Result<CaseRecord> {
    let start = Instant::now();
    let verdict = equal(left, right)?;
    Ok(CaseRecord {
        id,
        strands: left.strands(),
        lx_length: left.len(),
        rx_length: right.len(),
        verdict,
        expected,
        micros: start.elapsed().as_micros() as u64,
    })
}

fn lr_case(id: String, x: &BraidWord, expected: bool) -> Result<CaseRecord> {
    let start = Instant::now();
    let lx = left_derived(x)?;
    let rx = right_derived(x)?;
    let mut record = timed_case(id, &lx, &rx, expected)?;
    record.micros = start.elapsed().as_micros() as u64;
    Ok(record)
}

/// Which argument of the component proof a given `k` falls under.
pub fn component_case(n: usize, k: usize) -> u8 {
    if k == 0 {
        1
    } else if n.is_multiple_of(2) && 2 * k == n {
        3
    } else {
        2
    }
}

/// `L(b_k) = R(b_k)` for every component of `B_{2n}`.
pub fn verify_components(n: usize) -> Result<VerificationReport> {
    let ks: Vec<usize> = (0..=kmax(n)).collect();
    let cases = par::map(&ks, |&k| {
        let id = format!("n={n} k={k} case {}", component_case(n, k));
        lr_case(id, &component(n, k)?, true)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(format!("components n={n}"), cases))
}

pub fn verify_components_up_to(n_max: usize) -> Result<VerificationReport> {
    let reports = (1..=n_max).map(verify_components).collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merge(format!("components n=1..={n_max}"), reports))
}

/// `Lx = Rx` for every decreasing product in `B_{2n}`.
pub fn verify_theorem(n: usize) -> Result<VerificationReport> {
    let specs = enumerate_products(n);
    let cases = par::map(&specs, |spec| {
        let indices: Vec<String> = spec.indices().iter().map(|k| k.to_string()).collect();
        let id = format!("n={n} product [{}]", indices.join(","));
        lr_case(id, &decreasing_product(spec)?, true)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(format!("decreasing products n={n}"), cases))
}

pub fn verify_theorem_up_to(n_max: usize) -> Result<VerificationReport> {
    let reports = (1..=n_max).map(verify_theorem).collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merge(format!("decreasing products n=1..={n_max}"), reports))
}

/// Where the words of a figure case come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureSide {
    /// Row text on plain strands.
    Rows(&'static str),
    /// Row text on ribbons, expanded with the case's widths.
    Ribbons(&'static str),
    /// Left derived braid of the case's `x`.
    Left,
    /// Right derived braid of the case's `x`.
    Right,
}

/// A transcribed diagram equality (or inequality).
#[derive(Debug, Clone, Copy)]
pub struct FigureCase {
    pub id: &'static str,
    /// Strand count of the diagrams (ribbon count for ribbon words).
    pub strands: usize,
    pub widths: Option<&'static [usize]>,
    /// Row text of `x`, on plain strands, for derived sides.
    pub x: Option<(&'static str, usize)>,
    pub left: FigureSide,
    pub right: FigureSide,
    pub expected: bool,
}

pub const YANG_BAXTER_LEFT: &str = "a_1, a_2, a_1";
pub const YANG_BAXTER_RIGHT: &str = "a_2, a_1, a_2";
pub const NON_EXAMPLE_X: &str = "a_2-a_4";
pub const NON_EXAMPLE_LEFT: &str = "a_2-a_4, a_4-a_7, a_3-a_5, a_4";
pub const NON_EXAMPLE_RIGHT: &str = "a_5-a_7, a_2-a_5, a_4-a_6, a_5";
pub const B4_EXAMPLE_X: &str = "a_2, a_1-a_3, a_2, a_2, a_1-a_3";
pub const B4_EXAMPLE_LEFT: &str =
    "a_2, a_1-a_3, a_2, a_2, a_1-a_3, a_4, a_3-a_5, a_2-a_4, a_1-a_3, a_2, a_2, a_3, a_1-a_4, a_2-a_5";
pub const B4_EXAMPLE_RIGHT: &str =
    "a_4, a_3-a_5, a_4, a_4, a_3-a_5, a_2, a_1-a_3, a_2-a_4, a_3-a_5, a_4, a_4, a_3, a_2-a_5, a_1-a_4";
pub const COMBING_UNCOMBED: &str = "a_3, a_2-a_4, a_1-a_3-a_5, a_2-a_4, a_3, a_3, a_2-a_4, a_3, a_6, a_5-a_7, \
     a_4-a_6-a_8, a_3-a_5-a_7, a_2-a_4-a_6, a_1-a_3-a_5, a_2-a_4, a_3, a_3, a_2-a_4, a_3-a_5, a_4-a_6, a_5";
pub const COMBING_COMBED: &str = "a_3, a_2-a_4, a_1-a_3-a_5, a_2-a_4, a_3, a_6, a_5-a_7, a_4-a_6-a_8, \
     a_3-a_5-a_7, a_2-a_4-a_6, a_1-a_3-a_5, a_2-a_4, a_3, a_6, a_5-a_7, a_6, a_3, a_2-a_4, a_3-a_5, a_4-a_6, a_5";
/// Ribbon widths `(p, q, p, r, p, q, p)` at `(p, q, r) = (2, 3, 1)`.
pub const PQR_WIDTHS: &[usize] = &[2, 3, 2, 1, 2, 3, 2];
pub const EMBEDDED_YB_LEFT: &str = "a_2-a_5, a_4, a_3, a_4";
pub const EMBEDDED_YB_RIGHT: &str = "a_2-a_5, a_3, a_4, a_3";
pub const PQR_LEFT: &str = "a_2, a_3, a_5, a_4, a_3";
pub const PQR_RIGHT: &str = "a_5, a_4, a_2, a_3, a_4";
pub const B1B2_WIDTHS: &[usize] = &[1, 3, 1, 1, 3, 1, 1, 3, 1];
pub const B1B2_LEFT: &str = "a_3, a_2-a_4, a_3, a_3, a_6, a_5-a_7, a_4-a_6, a_3-a_5, a_4, a_4, a_5";
pub const B1B2_RIGHT: &str = "a_6, a_5-a_7, a_6, a_6, a_3, a_2-a_4, a_3-a_5, a_4-a_6, a_5, a_5, a_4";

pub const FIGURE_CASES: &[FigureCase] = &[
    FigureCase {
        id: "yang-baxter",
        strands: 3,
        widths: None,
        x: None,
        left: FigureSide::Rows(YANG_BAXTER_LEFT),
        right: FigureSide::Rows(YANG_BAXTER_RIGHT),
        expected: true,
    },
    FigureCase {
        id: "non-example figure words",
        strands: 9,
        widths: None,
        x: None,
        left: FigureSide::Rows(NON_EXAMPLE_LEFT),
        right: FigureSide::Rows(NON_EXAMPLE_RIGHT),
        expected: false,
    },
    FigureCase {
        id: "non-example Lx matches figure",
        strands: 9,
        widths: None,
        x: Some((NON_EXAMPLE_X, 6)),
        left: FigureSide::Left,
        right: FigureSide::Rows(NON_EXAMPLE_LEFT),
        expected: true,
    },
    FigureCase {
        id: "non-example Rx matches figure",
        strands: 9,
        widths: None,
        x: Some((NON_EXAMPLE_X, 6)),
        left: FigureSide::Right,
        right: FigureSide::Rows(NON_EXAMPLE_RIGHT),
        expected: true,
    },
    FigureCase {
        id: "B4 example figure words",
        strands: 6,
        widths: None,
        x: None,
        left: FigureSide::Rows(B4_EXAMPLE_LEFT),
        right: FigureSide::Rows(B4_EXAMPLE_RIGHT),
        expected: true,
    },
    FigureCase {
        id: "B4 example Lx matches figure",
        strands: 6,
        widths: None,
        x: Some((B4_EXAMPLE_X, 4)),
        left: FigureSide::Left,
        right: FigureSide::Rows(B4_EXAMPLE_LEFT),
        expected: true,
    },
    FigureCase {
        id: "B4 example Rx matches figure",
        strands: 6,
        widths: None,
        x: Some((B4_EXAMPLE_X, 4)),
        left: FigureSide::Right,
        right: FigureSide::Rows(B4_EXAMPLE_RIGHT),
        expected: true,
    },
    FigureCase {
        id: "combing uncombed = combed",
        strands: 9,
        widths: None,
        x: None,
        left: FigureSide::Rows(COMBING_UNCOMBED),
        right: FigureSide::Rows(COMBING_COMBED),
        expected: true,
    },
    FigureCase {
        id: "embedded yang-baxter (p,q,r)=(2,3,1)",
        strands: 7,
        widths: Some(PQR_WIDTHS),
        x: None,
        left: FigureSide::Ribbons(EMBEDDED_YB_LEFT),
        right: FigureSide::Ribbons(EMBEDDED_YB_RIGHT),
        expected: true,
    },
    FigureCase {
        id: "component case 2 (p,q,r)=(2,3,1)",
        strands: 7,
        widths: Some(PQR_WIDTHS),
        x: None,
        left: FigureSide::Ribbons(PQR_LEFT),
        right: FigureSide::Ribbons(PQR_RIGHT),
        expected: true,
    },
    FigureCase {
        id: "b1 b2 (n=5) figure words",
        strands: 9,
        widths: Some(B1B2_WIDTHS),
        x: None,
        left: FigureSide::Ribbons(B1B2_LEFT),
        right: FigureSide::Ribbons(B1B2_RIGHT),
        expected: true,
    },
];

impl FigureCase {
    fn x_braid(&self) -> Result<BraidWord> {
        let (text, strands) = self.x.expect("derived side needs x");
        Ok(flatten(&parse_rows(text, strands)?))
    }

    pub fn side(&self, side: FigureSide) -> Result<BraidWord> {
        match side {
            FigureSide::Rows(text) => Ok(flatten(&parse_rows(text, self.strands)?)),
            FigureSide::Ribbons(text) => {
                let ribbons = flatten(&parse_rows(text, self.strands)?);
                let widths = WidthVector::new(self.widths.expect("ribbon side needs widths").to_vec())?;
                cable(&ribbons, &widths)
            }
            FigureSide::Left => left_derived(&self.x_braid()?),
            FigureSide::Right => right_derived(&self.x_braid()?),
        }
    }

    pub fn run(&self) -> Result<CaseRecord> {
        let start = Instant::now();
        let left = self.side(self.left)?;
        let right = self.side(self.right)?;
        let mut record = timed_case(self.id.to_string(), &left, &right, self.expected)?;
        record.micros = start.elapsed().as_micros() as u64;
        Ok(record)
    }
}

pub fn verify_paper_figures() -> Result<VerificationReport> {
    let cases = par::map(FIGURE_CASES, FigureCase::run)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new("figure transcriptions", cases))
}
