//! Breadth-first survey of the subgroup lattice of Sp(n), pruning with the
//! dimension condition and computing the homogeneity rank of every
//! constructible survivor. Children are expanded only below vanishing
//! verdicts, mirroring the stratified walk of the classification.

use std::collections::BTreeMap;
use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::hrkengine::{hrk_projective, HrkReport};
use crate::liealg::Family;
use crate::weyl::dim_condition_hp;

use super::recipes::Recipe;
use super::tables;
use super::GroupDescriptor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum Verdict {
    VerifiedHrk(i64),
    Pruned(String),
    Unsupported(String),
    SurvivesDimCondition,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::VerifiedHrk(v) => write!(f, "verified-hrk({v})"),
            Verdict::Pruned(r) => write!(f, "pruned({r})"),
            Verdict::Unsupported(r) => write!(f, "unsupported({r})"),
            Verdict::SurvivesDimCondition => write!(f, "survives-dim-condition"),
        }
    }
}

impl From<Verdict> for String {
    fn from(v: Verdict) -> String {
        v.to_string()
    }
}

/// Integer summary of a homogeneity rank report, for serialization.
#[derive(Clone, Debug, Serialize)]
pub struct ReportSummary {
    pub space: String,
    pub dim_g: i64,
    pub rank_g: i64,
    pub dim_isotropy: i64,
    pub rank_isotropy: i64,
    pub cohomogeneity: i64,
    pub hrk: i64,
    pub seeds: Vec<u64>,
    pub samples_agreed: bool,
    pub derived_series_dims: Vec<usize>,
}

impl ReportSummary {
    pub fn from_report(r: &HrkReport) -> Self {
        ReportSummary {
            space: r.space.label(),
            dim_g: r.dim_g,
            rank_g: r.rank_g,
            dim_isotropy: r.dim_isotropy,
            rank_isotropy: r.rank_isotropy,
            cohomogeneity: r.cohomogeneity,
            hrk: r.hrk,
            seeds: r.seeds.clone(),
            samples_agreed: r.samples_agreed,
            derived_series_dims: r.derived_series_dims.clone(),
        }
    }
}

/// One node of the survey, with the chain that led to it.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateChain {
    pub chain: Vec<String>,
    pub group: GroupDescriptor,
    pub verdict: Verdict,
    /// Present when the node was computed (always for verified nodes, and
    /// for pruned nodes in force mode).
    pub report: Option<ReportSummary>,
    /// Product decomposition (factor descriptor, its quaternionic size),
    /// when the node is a product of commuting blocks.
    #[serde(skip)]
    pub parts: Vec<(GroupDescriptor, usize)>,
}

#[derive(Clone, Copy, Debug)]
pub struct SurveyOptions {
    pub max_depth: usize,
    pub force_pruned: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            max_depth: 4,
            force_pruned: false,
        }
    }
}

/// How a node expands into the next stratum.
#[derive(Clone, Debug)]
enum Expansion {
    SpRoot(usize),
    Un(usize),
    Sun(usize),
    UProduct(usize, usize),
    ZSp(usize),
    ZSpTimesU(usize, usize),
    SpProduct(usize, usize),
    SoSp(usize, usize),
    Leaf,
}

#[derive(Clone, Debug)]
struct Node {
    desc: GroupDescriptor,
    expansion: Expansion,
    parts: Vec<(GroupDescriptor, usize)>,
}

fn dim_of(f: Family, n: usize) -> i64 {
    f.dim(n) as i64
}

fn rank_of(f: Family, n: usize) -> i64 {
    f.rank(n) as i64
}

fn node(desc: GroupDescriptor, expansion: Expansion) -> Node {
    Node {
        desc,
        expansion,
        parts: Vec::new(),
    }
}

fn sp_root(n: usize) -> Node {
    node(
        GroupDescriptor {
            name: format!("Sp({n})"),
            dim: dim_of(Family::Sp, n),
            rank: n as i64,
            recipe: Some(Recipe::Sp(n)),
        },
        Expansion::SpRoot(n),
    )
}

/// Survey the subgroup lattice of Sp(n) acting on HP^{n-1}.
pub fn survey(n: usize, seeds: &[u64], opts: SurveyOptions) -> Vec<CandidateChain> {
    assert!(n >= 2, "the survey starts at n = 2");
    let mut results = Vec::new();
    let mut memo: BTreeMap<String, (Verdict, Option<ReportSummary>)> = BTreeMap::new();
    let mut queue: VecDeque<(Vec<String>, Node, usize)> = VecDeque::new();
    let root = sp_root(n);
    queue.push_back((vec![root.desc.name.clone()], root, 0));
    let mut seen_chains: std::collections::BTreeSet<Vec<String>> = Default::default();

    while let Some((chain, nd, depth)) = queue.pop_front() {
        if !seen_chains.insert(chain.clone()) {
            continue;
        }
        let (verdict, report) = memo
            .entry(nd.desc.name.clone())
            .or_insert_with(|| {
                let t = std::time::Instant::now();
                let r = evaluate(&nd.desc, n, seeds, opts.force_pruned);
                eprintln!("node {} took {:?}", nd.desc.name, t.elapsed());
                r
            })
            .clone();
        let expand = matches!(verdict, Verdict::VerifiedHrk(0)) && depth < opts.max_depth;
        results.push(CandidateChain {
            chain: chain.clone(),
            group: nd.desc.clone(),
            verdict,
            report,
            parts: nd.parts.clone(),
        });
        if expand {
            let mut children = expand_node(&nd, n);
            children.sort_by(|a, b| a.desc.name.cmp(&b.desc.name));
            for child in children {
                let mut c = chain.clone();
                c.push(child.desc.name.clone());
                queue.push_back((c, child, depth + 1));
            }
        }
    }
    results
}

fn evaluate(
    desc: &GroupDescriptor,
    n: usize,
    seeds: &[u64],
    force: bool,
) -> (Verdict, Option<ReportSummary>) {
    let passes = dim_condition_hp(desc.dim, desc.rank, n as i64);
    let compute = || -> Option<ReportSummary> {
        let recipe = desc.recipe.as_ref()?;
        let rep = recipe.build().ok()?;
        let report = hrk_projective(&rep, seeds).ok()?;
        Some(ReportSummary::from_report(&report))
    };
    if !passes {
        let report = if force { compute() } else { None };
        return (Verdict::Pruned("dim-condition".into()), report);
    }
    match &desc.recipe {
        Some(_) => match compute() {
            Some(summary) => {
                let hrk = summary.hrk;
                (Verdict::VerifiedHrk(hrk), Some(summary))
            }
            None => (Verdict::Unsupported("construction failed".into()), None),
        },
        None => {
            if desc.name.contains("E6") || desc.name.contains("E7") || desc.name.contains("E8") {
                (Verdict::Unsupported("exceptional".into()), None)
            } else {
                (Verdict::SurvivesDimCondition, None)
            }
        }
    }
}

fn with_z(d: GroupDescriptor) -> GroupDescriptor {
    GroupDescriptor {
        name: format!("Z.{}", d.name),
        dim: d.dim + 1,
        rank: d.rank + 1,
        recipe: d.recipe.map(|r| Recipe::WithZ(r.boxed())),
    }
}

fn lift_q(d: GroupDescriptor) -> GroupDescriptor {
    GroupDescriptor {
        recipe: d.recipe.map(|r| Recipe::QFromC(r.boxed())),
        ..d
    }
}

fn expand_node(nd: &Node, _ambient: usize) -> Vec<Node> {
    match &nd.expansion {
        Expansion::Leaf => Vec::new(),
        Expansion::SpRoot(n) => expand_sp_root(*n),
        Expansion::Un(n) => expand_un(*n),
        Expansion::Sun(n) => expand_sun(*n),
        Expansion::UProduct(k, m) => expand_u_product(*k, *m),
        Expansion::ZSp(k) => expand_zsp(*k),
        Expansion::ZSpTimesU(r, m) => expand_zsp_times_u(*r, *m),
        Expansion::SpProduct(a, b) => expand_sp_product(*a, *b),
        Expansion::SoSp(p, q) => expand_so_sp(*p, *q),
    }
}

fn expand_sp_root(n: usize) -> Vec<Node> {
    let mut out = Vec::new();
    for row in tables::maximal_subgroups_sp(n) {
        if row.name.starts_with("U(") {
            out.push(node(row, Expansion::Un(n)));
        } else if row.name.contains("xSp(") {
            // Sp(k) x Sp(n-k)
            let (a, b) = parse_two(&row.name);
            let mut nd = node(row, Expansion::SpProduct(a, b));
            nd.parts = vec![
                (sp_desc(a), a),
                (sp_desc(b), b),
            ];
            out.push(nd);
        } else if row.name.contains("(x)Sp(") {
            let (p, q) = parse_two(&row.name);
            out.push(node(row, Expansion::SoSp(p, q)));
        } else {
            out.push(node(row, Expansion::Leaf));
        }
    }
    out
}

fn sp_desc(k: usize) -> GroupDescriptor {
    GroupDescriptor {
        name: format!("Sp({k})"),
        dim: dim_of(Family::Sp, k),
        rank: k as i64,
        recipe: Some(Recipe::Sp(k)),
    }
}

fn u_desc(k: usize) -> GroupDescriptor {
    GroupDescriptor {
        name: format!("U({k})"),
        dim: dim_of(Family::U, k),
        rank: k as i64,
        recipe: Some(Recipe::U(k)),
    }
}

/// First two integers in a row name like "Sp(1)xSp(2)" or "SO(3)(x)Sp(2)".
fn parse_two(name: &str) -> (usize, usize) {
    let nums: Vec<usize> = name
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().unwrap())
        .collect();
    (nums[0], nums[1])
}

fn expand_un(n: usize) -> Vec<Node> {
    let mut out = Vec::new();
    out.push(node(
        GroupDescriptor {
            name: format!("SU({n})"),
            dim: dim_of(Family::Su, n),
            rank: rank_of(Family::Su, n),
            recipe: Some(Recipe::QFromC(Recipe::Su(n).boxed())),
        },
        Expansion::Sun(n),
    ));
    for row in tables::maximal_subgroups_su(n) {
        let name = row.name.clone();
        let z = with_z(row);
        let lifted = lift_q(z);
        if name.starts_with("S(U(") {
            // Z.S(U(k)xU(m)) = U(k)xU(m)
            let (k, m) = parse_two(&name);
            let mut nd = Node {
                desc: GroupDescriptor {
                    name: format!("U({k})xU({m})"),
                    dim: (k * k + m * m) as i64,
                    rank: (k + m) as i64,
                    recipe: Some(Recipe::QFromC(
                        Recipe::Sum(vec![Recipe::U(k), Recipe::U(m)]).boxed(),
                    )),
                },
                expansion: Expansion::UProduct(k, m),
                parts: vec![(u_desc(k), k), (u_desc(m), m)],
            };
            nd.parts.sort_by(|a, b| a.0.name.cmp(&b.0.name));
            out.push(nd);
        } else if name.starts_with("Sp(") {
            let (k, _) = parse_two(&name);
            out.push(node(lifted, Expansion::ZSp(k)));
        } else {
            out.push(node(lifted, Expansion::Leaf));
        }
    }
    out
}

fn expand_sun(n: usize) -> Vec<Node> {
    tables::maximal_subgroups_su(n)
        .into_iter()
        .map(|row| node(lift_q(row), Expansion::Leaf))
        .collect()
}

fn expand_u_product(k: usize, m: usize) -> Vec<Node> {
    let mut out = Vec::new();
    out.push(node(
        GroupDescriptor {
            name: format!("S(U({k})xU({m}))"),
            dim: (k * k + m * m - 1) as i64,
            rank: (k + m - 1) as i64,
            recipe: Some(Recipe::QFromC(Recipe::SUU(k.min(m), k.max(m)).boxed())),
        },
        Expansion::Leaf,
    ));
    // refine one unitary factor at a time
    let sides: Vec<(usize, usize)> = if k == m {
        vec![(k, m)]
    } else {
        vec![(k, m), (m, k)]
    };
    for (a, b) in sides {
        for k1 in 1..=a / 2 {
            let k2 = a - k1;
            let mut names = vec![
                format!("U({k1})"),
                format!("U({k2})"),
                format!("U({b})"),
            ];
            names.sort();
            out.push(Node {
                desc: GroupDescriptor {
                    name: names.join("x"),
                    dim: (k1 * k1 + k2 * k2 + b * b) as i64,
                    rank: (k1 + k2 + b) as i64,
                    recipe: Some(Recipe::QFromC(
                        Recipe::Sum(vec![Recipe::U(k1), Recipe::U(k2), Recipe::U(b)]).boxed(),
                    )),
                },
                expansion: Expansion::Leaf,
                parts: vec![(u_desc(k1), k1), (u_desc(k2), k2), (u_desc(b), b)],
            });
        }
        if a % 2 == 0 && a >= 2 {
            let r = a / 2;
            out.push(node(
                GroupDescriptor {
                    name: format!("Z.Sp({r})xU({b})"),
                    dim: dim_of(Family::Sp, r) + 1 + (b * b) as i64,
                    rank: (r + 1 + b) as i64,
                    recipe: Some(Recipe::QFromC(
                        Recipe::Sum(vec![
                            Recipe::WithZ(Recipe::FromQ(Recipe::Sp(r).boxed()).boxed()),
                            Recipe::U(b),
                        ])
                        .boxed(),
                    )),
                },
                Expansion::ZSpTimesU(r, b),
            ));
        }
    }
    if k == m {
        out.push(node(
            GroupDescriptor {
                name: format!("U({k})diag"),
                dim: dim_of(Family::U, k),
                rank: k as i64,
                recipe: Some(Recipe::QFromC(
                    Recipe::Shared(
                        Recipe::Sum(vec![Recipe::U(k), Recipe::U(k)]).boxed(),
                        vec![(0, 1)],
                    )
                    .boxed(),
                )),
            },
            Expansion::Leaf,
        ));
    }
    out
}

fn expand_zsp(k: usize) -> Vec<Node> {
    let mut out = Vec::new();
    for row in tables::maximal_subgroups_sp(k) {
        // Z.H inside Z.Sp(k) subset U(2k): view on C^{2k} and adjoin z
        let recipe = row.recipe.clone().map(|r| {
            Recipe::QFromC(
                Recipe::WithZ(quaternionic_row_to_complex(r).boxed()).boxed(),
            )
        });
        out.push(node(
            GroupDescriptor {
                name: format!("Z.{}<U({})", row.name, 2 * k),
                dim: row.dim + 1,
                rank: row.rank + 1,
                recipe,
            },
            Expansion::Leaf,
        ));
    }
    out
}

/// A quaternionic-level recipe on H^k viewed on C^{2k}.
fn quaternionic_row_to_complex(r: Recipe) -> Recipe {
    match r {
        // U(k) inside Sp(k) was already complex before lifting
        Recipe::QFromC(inner) => Recipe::Sum(vec![
            (*inner).clone(),
            Recipe::DualC(inner),
        ]),
        other => Recipe::FromQ(other.boxed()),
    }
}

fn expand_zsp_times_u(r: usize, m: usize) -> Vec<Node> {
    let mut out = Vec::new();
    let zsp = Recipe::WithZ(Recipe::FromQ(Recipe::Sp(r).boxed()).boxed());
    for k1 in 1..=m / 2 {
        let k2 = m - k1;
        out.push(node(
            GroupDescriptor {
                name: format!("Z.Sp({r})xU({k1})xU({k2})"),
                dim: dim_of(Family::Sp, r) + 1 + (k1 * k1 + k2 * k2) as i64,
                rank: (r + 1 + k1 + k2) as i64,
                recipe: Some(Recipe::QFromC(
                    Recipe::Sum(vec![zsp.clone(), Recipe::U(k1), Recipe::U(k2)]).boxed(),
                )),
            },
            Expansion::Leaf,
        ));
    }
    if m % 2 == 0 && m >= 2 {
        let s = m / 2;
        out.push(node(
            GroupDescriptor {
                name: format!("Z.Sp({r})xZ.Sp({s})"),
                dim: dim_of(Family::Sp, r) + dim_of(Family::Sp, s) + 2,
                rank: (r + s + 2) as i64,
                recipe: Some(Recipe::QFromC(
                    Recipe::Sum(vec![
                        zsp.clone(),
                        Recipe::WithZ(Recipe::FromQ(Recipe::Sp(s).boxed()).boxed()),
                    ])
                    .boxed(),
                )),
            },
            Expansion::Leaf,
        ));
    }
    out.push(node(
        GroupDescriptor {
            name: format!("Z.Sp({r})xSU({m})"),
            dim: dim_of(Family::Sp, r) + 1 + dim_of(Family::Su, m),
            rank: (r + 1) as i64 + rank_of(Family::Su, m),
            recipe: Some(Recipe::QFromC(
                Recipe::Sum(vec![zsp, Recipe::Su(m)]).boxed(),
            )),
        },
        Expansion::Leaf,
    ));
    out
}

fn expand_sp_product(a: usize, b: usize) -> Vec<Node> {
    let mut out = Vec::new();
    if a == b {
        out.push(node(
            GroupDescriptor {
                name: format!("Sp({a})diag"),
                dim: dim_of(Family::Sp, a),
                rank: a as i64,
                recipe: Some(Recipe::Shared(
                    Recipe::Sum(vec![Recipe::Sp(a), Recipe::Sp(a)]).boxed(),
                    vec![(0, 1)],
                )),
            },
            Expansion::Leaf,
        ));
    }
    // products of proper subgroups of each factor (products with one full
    // factor have the verdict of the other factor alone)
    let rows_a = proper_vanishing_candidates(a);
    let rows_b = proper_vanishing_candidates(b);
    for (da, ra) in &rows_a {
        for (db, rb) in &rows_b {
            let mut names = vec![da.name.clone(), db.name.clone()];
            names.sort();
            let expansion = match (da.name.starts_with("U("), db.name.starts_with("U(")) {
                (true, true) => Expansion::UProduct(a, b),
                _ => Expansion::Leaf,
            };
            out.push(Node {
                desc: GroupDescriptor {
                    name: names.join("x"),
                    dim: da.dim + db.dim,
                    rank: da.rank + db.rank,
                    recipe: Some(Recipe::Sum(vec![ra.clone(), rb.clone()])),
                },
                expansion,
                parts: vec![(da.clone(), a), (db.clone(), b)],
            });
        }
    }
    out
}

/// The vanishing-candidate proper subgroups of one Sp(k) factor, with
/// quaternionic-level recipes on H^k.
fn proper_vanishing_candidates(k: usize) -> Vec<(GroupDescriptor, Recipe)> {
    let mut out = Vec::new();
    for row in tables::maximal_subgroups_sp(k) {
        let Some(recipe) = row.recipe.clone() else {
            continue;
        };
        out.push((row, recipe));
    }
    out
}

fn expand_so_sp(p: usize, q: usize) -> Vec<Node> {
    let mut out = Vec::new();
    // H2 = U(1): SO(p) (x) U(1) coincides with Z.SO(p) inside U(p q = p)
    if q == 1 {
        out.push(node(
            GroupDescriptor {
                name: format!("Z.SO({p})"),
                dim: dim_of(Family::So, p) + 1,
                rank: rank_of(Family::So, p) + 1,
                recipe: Some(Recipe::QFromC(
                    Recipe::WithZ(Recipe::FromR(Recipe::So(p).boxed()).boxed()).boxed(),
                )),
            },
            Expansion::Leaf,
        ));
    } else {
        // SO(p) tensor a maximal subgroup of Sp(q)
        out.push(node(
            GroupDescriptor {
                name: format!("SO({p})(x)U({q})"),
                dim: dim_of(Family::So, p) + dim_of(Family::U, q),
                rank: rank_of(Family::So, p) + q as i64,
                recipe: Some(Recipe::QFromC(
                    Recipe::TensorCC(
                        Recipe::FromR(Recipe::So(p).boxed()).boxed(),
                        Recipe::U(q).boxed(),
                    )
                    .boxed(),
                )),
            },
            Expansion::Leaf,
        ));
        for a in 1..=q / 2 {
            let b = q - a;
            out.push(node(
                GroupDescriptor {
                    name: format!("SO({p})(x)(Sp({a})xSp({b}))"),
                    dim: dim_of(Family::So, p) + dim_of(Family::Sp, a) + dim_of(Family::Sp, b),
                    rank: rank_of(Family::So, p) + (a + b) as i64,
                    recipe: Some(Recipe::Shared(
                        Recipe::Sum(vec![
                            Recipe::TensorRQ(Recipe::So(p).boxed(), Recipe::Sp(a).boxed()),
                            Recipe::TensorRQ(Recipe::So(p).boxed(), Recipe::Sp(b).boxed()),
                        ])
                        .boxed(),
                        vec![(0, 2)],
                    )),
                },
                Expansion::Leaf,
            ));
        }
    }
    // H1 a maximal subgroup of SO(p), tensored with Sp(q)
    for row in tables::maximal_subgroups_so(p) {
        let name = format!("{}(x)Sp({q})", row.name);
        let recipe = row
            .recipe
            .map(|r| Recipe::TensorRQ(r.boxed(), Recipe::Sp(q).boxed()));
        out.push(node(
            GroupDescriptor {
                name,
                dim: row.dim + dim_of(Family::Sp, q),
                rank: row.rank + q as i64,
                recipe,
            },
            Expansion::Leaf,
        ));
    }
    out
}

