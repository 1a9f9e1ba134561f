//! Verification driver: every constructible classification entry must
//! compute to vanishing homogeneity rank (with the recorded cohomogeneity
//! where one is stated), and every entry of the exclusion ledger must
//! compute strictly negative with its recorded data.

use serde::Serialize;

use crate::hrkengine::hrk_projective;
use crate::liealg::Family;

use super::recipes::Recipe;
use super::survey::ReportSummary;
use super::theorem::theorem_entries;

#[derive(Clone, Debug, Serialize)]
pub struct CaseOutcome {
    pub name: String,
    pub case: String,
    pub expected: String,
    pub computed: Option<ReportSummary>,
    pub pass: bool,
    pub unsupported: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub cases: Vec<CaseOutcome>,
    pub verified: usize,
    pub failed: usize,
    pub unsupported: usize,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} cases verified, {} unsupported, {} failed",
            self.verified, self.unsupported, self.failed
        )
    }
}

/// A ledger entry expected to compute a strictly negative rank.
#[derive(Clone, Debug)]
pub struct ExclusionEntry {
    pub name: String,
    pub section: String,
    pub recipe: Recipe,
    pub expected_hrk: Option<i64>,
    pub expected_cohomogeneity: Option<i64>,
    pub expected_isotropy_dim: Option<i64>,
}

/// The built-in exclusion ledger instantiated at quaternionic dimension n.
pub fn exclusion_entries(n: usize) -> Vec<ExclusionEntry> {
    let mut out = Vec::new();
    let zsp = |k: usize| Recipe::WithZ(Recipe::FromQ(Recipe::Sp(k).boxed()).boxed());
    if n % 2 == 0 && n >= 4 {
        let k = n / 2;
        // the diagonal unitary group inside U(k) x U(k)
        out.push(ExclusionEntry {
            name: format!("U({k})diag"),
            section: "diagonal unitary subgroup".into(),
            recipe: Recipe::QFromC(
                Recipe::Shared(
                    Recipe::Sum(vec![Recipe::U(k), Recipe::U(k)]).boxed(),
                    vec![(0, 1)],
                )
                .boxed(),
            ),
            expected_hrk: None,
            expected_cohomogeneity: None,
            expected_isotropy_dim: None,
        });
        // centerless Sp(k) inside SU(2k)
        out.push(ExclusionEntry {
            name: format!("Sp({k})<SU({n})"),
            section: "center essentiality".into(),
            recipe: Recipe::QFromC(Recipe::FromQ(Recipe::Sp(k).boxed()).boxed()),
            expected_hrk: None,
            expected_cohomogeneity: None,
            expected_isotropy_dim: None,
        });
    }
    if n >= 4 {
        out.push(ExclusionEntry {
            name: format!("Z.SO({n})"),
            section: "special orthogonal with center".into(),
            recipe: Recipe::QFromC(
                Recipe::WithZ(Recipe::FromR(Recipe::So(n).boxed()).boxed()).boxed(),
            ),
            expected_hrk: Some(-2),
            expected_cohomogeneity: Some(5),
            expected_isotropy_dim: Some((Family::So.dim(n.saturating_sub(4))) as i64),
        });
    }
    if n % 2 == 0 && n >= 12 {
        let q = n / 2;
        out.push(ExclusionEntry {
            name: format!("Z.SU(2)(x)SU({q})"),
            section: "rank-one tensor factor".into(),
            recipe: Recipe::QFromC(
                Recipe::WithZ(
                    Recipe::TensorCC(Recipe::Su(2).boxed(), Recipe::Su(q).boxed()).boxed(),
                )
                .boxed(),
            ),
            expected_hrk: Some(-2),
            expected_cohomogeneity: None,
            expected_isotropy_dim: Some(Family::Su.dim(q - 4) as i64),
        });
    }
    if n % 2 == 0 {
        let half = n / 2;
        for r in 2..=half / 2 {
            let s = half - r;
            if s < r || s < 2 {
                continue;
            }
            out.push(ExclusionEntry {
                name: format!("Z.Sp({r})xZ.Sp({s})"),
                section: "mixed center product".into(),
                recipe: Recipe::QFromC(
                    Recipe::Sum(vec![zsp(r), zsp(s)]).boxed(),
                ),
                expected_hrk: Some(-2),
                expected_cohomogeneity: Some(8),
                expected_isotropy_dim: Some(
                    (Family::Sp.dim(r - 2) + Family::Sp.dim(s - 2)) as i64,
                ),
            });
        }
    }
    out
}

fn check(expected: Option<i64>, got: i64) -> bool {
    expected.map_or(true, |e| e == got)
}

/// Run the full verification at size n.
pub fn verify_theorem(n: usize, seeds: &[u64]) -> VerifyReport {
    let mut cases = Vec::new();
    let mut verified = 0;
    let mut failed = 0;
    let mut unsupported = 0;

    for entry in theorem_entries(n) {
        let expected = {
            let mut parts = vec!["hrk=0".to_string()];
            if let Some(c) = entry.expected_cohomogeneity {
                parts.push(format!("c={c}"));
            }
            if let Some(d) = entry.expected_isotropy_dim {
                parts.push(format!("dim_h={d}"));
            }
            parts.join(", ")
        };
        match &entry.recipe {
            None => {
                unsupported += 1;
                cases.push(CaseOutcome {
                    name: entry.name,
                    case: format!("theorem({})", entry.case),
                    expected,
                    computed: None,
                    pass: true,
                    unsupported: true,
                    note: entry.note,
                });
            }
            Some(recipe) => {
                let outcome = recipe
                    .build()
                    .map_err(|e| e.to_string())
                    .and_then(|rep| {
                        hrk_projective(&rep, seeds).map_err(|e| e.to_string())
                    });
                match outcome {
                    Ok(report) => {
                        let summary = ReportSummary::from_report(&report);
                        let pass = report.hrk == 0
                            && check(entry.expected_cohomogeneity, report.cohomogeneity)
                            && check(entry.expected_isotropy_dim, report.dim_isotropy);
                        if pass {
                            verified += 1;
                        } else {
                            failed += 1;
                        }
                        cases.push(CaseOutcome {
                            name: entry.name,
                            case: format!("theorem({})", entry.case),
                            expected,
                            computed: Some(summary),
                            pass,
                            unsupported: false,
                            note: entry.note,
                        });
                    }
                    Err(e) => {
                        failed += 1;
                        cases.push(CaseOutcome {
                            name: entry.name,
                            case: format!("theorem({})", entry.case),
                            expected,
                            computed: None,
                            pass: false,
                            unsupported: false,
                            note: Some(e),
                        });
                    }
                }
            }
        }
    }

    for entry in exclusion_entries(n) {
        let expected = {
            let mut parts = vec![match entry.expected_hrk {
                Some(h) => format!("hrk={h}"),
                None => "hrk<0".to_string(),
            }];
            if let Some(c) = entry.expected_cohomogeneity {
                parts.push(format!("c={c}"));
            }
            if let Some(d) = entry.expected_isotropy_dim {
                parts.push(format!("dim_h={d}"));
            }
            parts.join(", ")
        };
        let outcome = entry
            .recipe
            .build()
            .map_err(|e| e.to_string())
            .and_then(|rep| hrk_projective(&rep, seeds).map_err(|e| e.to_string()));
        match outcome {
            Ok(report) => {
                let pass = report.hrk < 0
                    && check(entry.expected_hrk, report.hrk)
                    && check(entry.expected_cohomogeneity, report.cohomogeneity)
                    && check(entry.expected_isotropy_dim, report.dim_isotropy);
                if pass {
                    verified += 1;
                } else {
                    failed += 1;
                }
                cases.push(CaseOutcome {
                    name: entry.name,
                    case: format!("exclusion({})", entry.section),
                    expected,
                    computed: Some(ReportSummary::from_report(&report)),
                    pass,
                    unsupported: false,
                    note: None,
                });
            }
            Err(e) => {
                failed += 1;
                cases.push(CaseOutcome {
                    name: entry.name,
                    case: format!("exclusion({})", entry.section),
                    expected,
                    computed: None,
                    pass: false,
                    unsupported: false,
                    note: Some(e),
                });
            }
        }
    }

    VerifyReport {
        n,
        cases,
        verified,
        failed,
        unsupported,
    }
}
