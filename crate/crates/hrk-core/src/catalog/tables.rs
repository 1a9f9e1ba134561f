//! The maximal-subgroup tables and their symbolic irreducible rows.

use crate::liealg::Family;
use crate::weyl::{weyl_dim_u64, FsClass, HighestWeight, RootSystem, TypeLetter};

use super::recipes::Recipe;
use super::GroupDescriptor;

/// A symbolic irreducible representation of a simple group: the rho(H) rows
/// of the tables.
#[derive(Clone, Debug)]
pub struct IrrRow {
    pub letter: TypeLetter,
    pub rank: usize,
    pub weight: Vec<u64>,
    pub degree: u64,
    pub dim_h: i64,
    pub rank_h: i64,
    pub class: FsClass,
}

impl IrrRow {
    pub fn group_name(&self) -> String {
        let w: Vec<String> = self.weight.iter().map(|c| c.to_string()).collect();
        format!("{:?}{}[{}]", self.letter, self.rank, w.join(","))
    }

    /// A recipe when the module has an exact rational model.
    pub fn recipe(&self) -> Option<Recipe> {
        let fundamental = |k: usize| {
            self.weight.iter().enumerate().all(|(i, &c)| {
                if i == k {
                    c == 1
                } else {
                    c == 0
                }
            })
        };
        match (self.letter, self.rank) {
            // middle exterior power of su(2k)
            (TypeLetter::A, r) if r >= 3 && r % 2 == 1 && fundamental(r / 2) => {
                let k = (r + 1) / 2;
                Some(Recipe::StandardizeQ(
                    Recipe::Wedge(k, Recipe::Su(2 * k).boxed()).boxed(),
                ))
            }
            (TypeLetter::C, 3) if fundamental(2) => Some(Recipe::Sp3Wedge3Primitive),
            (TypeLetter::B, 5) if fundamental(4) => Some(Recipe::Spin11),
            (TypeLetter::D, 6) if fundamental(4) => Some(Recipe::Spin12Minus),
            (TypeLetter::D, 6) if fundamental(5) => Some(Recipe::Spin12Plus),
            _ => None,
        }
    }
}

/// Simple types scanned for table rows.
fn simple_types() -> Vec<(TypeLetter, usize)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((TypeLetter::A, n));
    }
    for n in 2..=8 {
        out.push((TypeLetter::B, n));
        out.push((TypeLetter::C, n));
    }
    for n in 4..=8 {
        out.push((TypeLetter::D, n));
    }
    out.push((TypeLetter::G, 2));
    out.push((TypeLetter::F, 4));
    out.push((TypeLetter::E, 6));
    out.push((TypeLetter::E, 7));
    out.push((TypeLetter::E, 8));
    out
}

/// All irreducibles of the given Frobenius-Schur class and exact degree,
/// over the scanned simple types. The defining representations that name
/// the ambient group itself are excluded by the callers.
pub fn irreducible_rows(class: FsClass, degree: u64) -> Vec<IrrRow> {
    let mut out = Vec::new();
    for (letter, rank) in simple_types() {
        let Ok(rs) = RootSystem::new(letter, rank) else {
            continue;
        };
        let dim_h = (2 * rs.positive_roots().len() + rank) as i64;
        for (w, d) in crate::weyl::monotone_filter(&rs, degree) {
            if d != degree || w == HighestWeight::zero(rank) {
                continue;
            }
            if rs.frobenius_schur(&w).expect("rank matches") != class {
                continue;
            }
            debug_assert_eq!(weyl_dim_u64(&rs, &w).unwrap(), d);
            out.push(IrrRow {
                letter,
                rank,
                weight: w.0.clone(),
                degree: d,
                dim_h,
                rank_h: rank as i64,
                class,
            });
        }
    }
    out.sort_by(|a, b| {
        (a.letter, a.rank, a.weight.clone()).cmp(&(b.letter, b.rank, b.weight.clone()))
    });
    out
}

fn desc(name: String, dim: i64, rank: i64, recipe: Option<Recipe>) -> GroupDescriptor {
    GroupDescriptor {
        name,
        dim,
        rank,
        recipe,
    }
}

fn dim_of(f: Family, n: usize) -> i64 {
    f.dim(n) as i64
}

fn rank_of(f: Family, n: usize) -> i64 {
    f.rank(n) as i64
}

/// Table rows: maximal connected subgroups of Sp(n).
pub fn maximal_subgroups_sp(n: usize) -> Vec<GroupDescriptor> {
    let mut rows = Vec::new();
    rows.push(desc(
        format!("U({n})"),
        dim_of(Family::U, n),
        rank_of(Family::U, n),
        Some(Recipe::QFromC(Recipe::U(n).boxed())),
    ));
    for k in 1..=n / 2 {
        let m = n - k;
        rows.push(desc(
            format!("Sp({k})xSp({m})"),
            dim_of(Family::Sp, k) + dim_of(Family::Sp, m),
            (k + m) as i64,
            Some(Recipe::Sum(vec![Recipe::Sp(k), Recipe::Sp(m)])),
        ));
    }
    for p in 2..=n {
        if n % p == 0 && p >= 3 {
            let q = n / p;
            rows.push(desc(
                format!("SO({p})(x)Sp({q})"),
                dim_of(Family::So, p) + dim_of(Family::Sp, q),
                rank_of(Family::So, p) + q as i64,
                Some(Recipe::TensorRQ(
                    Recipe::So(p).boxed(),
                    Recipe::Sp(q).boxed(),
                )),
            ));
        }
    }
    // rho(H), H simple, quaternionic irreducible of complex degree 2n
    for row in irreducible_rows(FsClass::Quaternionic, 2 * n as u64) {
        if row.letter == TypeLetter::C && row.rank == n {
            continue; // the defining representation of sp(n) itself
        }
        // low-rank isomorphisms that reproduce sp(n) itself
        if (row.letter, row.rank, n) == (TypeLetter::A, 1, 1)
            || (row.letter == TypeLetter::B && row.rank == 2 && n == 2 && row.weight == vec![0, 1])
        {
            continue;
        }
        rows.push(desc(row.group_name(), row.dim_h, row.rank_h, row.recipe()));
    }
    rows
}

/// Table rows: maximal connected subgroups of SU(n).
pub fn maximal_subgroups_su(n: usize) -> Vec<GroupDescriptor> {
    let mut rows = Vec::new();
    if n >= 3 {
        rows.push(desc(
            format!("SO({n})"),
            dim_of(Family::So, n),
            rank_of(Family::So, n),
            Some(Recipe::FromR(Recipe::So(n).boxed())),
        ));
    }
    if n % 2 == 0 && n >= 4 {
        let m = n / 2;
        rows.push(desc(
            format!("Sp({m})<SU({n})"),
            dim_of(Family::Sp, m),
            m as i64,
            Some(Recipe::FromQ(Recipe::Sp(m).boxed())),
        ));
    }
    for k in 1..=n / 2 {
        let m = n - k;
        rows.push(desc(
            format!("S(U({k})xU({m}))"),
            (k * k + m * m - 1) as i64,
            (k + m - 1) as i64,
            Some(Recipe::SUU(k, m)),
        ));
    }
    for p in 2..=n {
        if n % p == 0 && p >= 3 {
            let q = n / p;
            if q >= 3 && p <= q {
                rows.push(desc(
                    format!("SU({p})(x)SU({q})"),
                    dim_of(Family::Su, p) + dim_of(Family::Su, q),
                    rank_of(Family::Su, p) + rank_of(Family::Su, q),
                    Some(Recipe::TensorCC(
                        Recipe::Su(p).boxed(),
                        Recipe::Su(q).boxed(),
                    )),
                ));
            }
        }
    }
    for row in irreducible_rows(FsClass::Complex, n as u64) {
        if row.letter == TypeLetter::A && row.rank + 1 == n {
            continue; // the defining representation of su(n) itself
        }
        let recipe = complex_irr_recipe(&row);
        rows.push(desc(row.group_name(), row.dim_h, row.rank_h, recipe));
    }
    rows
}

fn complex_irr_recipe(row: &IrrRow) -> Option<Recipe> {
    let fundamental = |k: usize| {
        row.weight
            .iter()
            .enumerate()
            .all(|(i, &c)| if i == k { c == 1 } else { c == 0 })
    };
    match row.letter {
        TypeLetter::A if row.rank >= 3 && fundamental(1) => {
            Some(Recipe::Wedge(2, Recipe::Su(row.rank + 1).boxed()))
        }
        TypeLetter::A
            if row.weight[0] == 2 && row.weight.iter().skip(1).all(|&c| c == 0) =>
        {
            Some(Recipe::Sym2(Recipe::Su(row.rank + 1).boxed()))
        }
        _ => None,
    }
}

/// Table rows: maximal connected subgroups of SO(n).
pub fn maximal_subgroups_so(n: usize) -> Vec<GroupDescriptor> {
    let mut rows = Vec::new();
    for k in 1..=n / 2 {
        let m = n - k;
        if k < 2 {
            // so(1) is trivial: this row is SO(n-1)
            rows.push(desc(
                format!("SO({m})"),
                dim_of(Family::So, m),
                rank_of(Family::So, m),
                Some(Recipe::Sum(vec![Recipe::TrivialR(1), Recipe::So(m)])),
            ));
            continue;
        }
        rows.push(desc(
            format!("SO({k})xSO({m})"),
            dim_of(Family::So, k) + dim_of(Family::So, m),
            rank_of(Family::So, k) + rank_of(Family::So, m),
            Some(Recipe::Sum(vec![Recipe::So(k), Recipe::So(m)])),
        ));
    }
    if n % 2 == 0 && n >= 4 {
        rows.push(desc(
            format!("U({})<SO({n})", n / 2),
            dim_of(Family::U, n / 2),
            rank_of(Family::U, n / 2),
            Some(Recipe::U(n / 2)),
        ));
    }
    for p in 3..=n {
        if n % p == 0 {
            let q = n / p;
            if q >= 3 && p <= q {
                rows.push(desc(
                    format!("SO({p})(x)SO({q})"),
                    dim_of(Family::So, p) + dim_of(Family::So, q),
                    rank_of(Family::So, p) + rank_of(Family::So, q),
                    Some(Recipe::TensorRR(
                        Recipe::So(p).boxed(),
                        Recipe::So(q).boxed(),
                    )),
                ));
            }
        }
    }
    if n % 4 == 0 {
        let pq = n / 4;
        for p in 1..=pq {
            if pq % p == 0 {
                let q = pq / p;
                if p <= q {
                    rows.push(desc(
                        format!("Sp({p})(x)Sp({q})"),
                        dim_of(Family::Sp, p) + dim_of(Family::Sp, q),
                        (p + q) as i64,
                        Some(Recipe::TensorQQ(
                            Recipe::Sp(p).boxed(),
                            Recipe::Sp(q).boxed(),
                        )),
                    ));
                }
            }
        }
    }
    for row in irreducible_rows(FsClass::Real, n as u64) {
        if row.letter == TypeLetter::B && 2 * row.rank + 1 == n {
            continue;
        }
        if row.letter == TypeLetter::D && 2 * row.rank == n {
            continue;
        }
        // low-rank isomorphisms that reproduce so(n) itself
        if (row.letter == TypeLetter::A && row.rank == 1 && n == 3 && row.weight == vec![2])
            || (row.letter == TypeLetter::A && row.rank == 3 && n == 6 && row.weight == vec![0, 1, 0])
            || (row.letter == TypeLetter::C && row.rank == 2 && n == 5 && row.weight == vec![0, 1])
        {
            continue;
        }
        let recipe = if row.letter == TypeLetter::B && row.rank == 3 && row.weight == vec![0, 0, 1]
        {
            Some(Recipe::Spin7)
        } else {
            None
        };
        rows.push(desc(row.group_name(), row.dim_h, row.rank_h, recipe));
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp3_rows_match_the_table() {
        let rows = maximal_subgroups_sp(3);
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert!(names.contains(&"U(3)"));
        assert!(names.contains(&"Sp(1)xSp(2)"));
        assert!(names.contains(&"SO(3)(x)Sp(1)"));
        // quaternionic irreducibles of degree 6: the weight-5 module of A1
        assert!(names.iter().any(|s| s.starts_with("A1[5]")));
    }

    #[test]
    fn su4_rows_match_the_table() {
        let rows = maximal_subgroups_su(4);
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert!(names.contains(&"SO(4)"));
        assert!(names.iter().any(|s| s.starts_with("Sp(2)")));
        assert!(names.contains(&"S(U(1)xU(3))"));
        assert!(names.contains(&"S(U(2)xU(2))"));
    }

    #[test]
    fn so4_rows_match_the_table() {
        let rows = maximal_subgroups_so(4);
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert!(names.iter().any(|s| s.starts_with("U(2)")));
        assert!(names.contains(&"SO(2)xSO(2)"));
        assert!(names.contains(&"Sp(1)(x)Sp(1)"));
    }

    #[test]
    fn quaternionic_degree_four_rows() {
        // degree 4 = 2n for n = 2: the weight-3 module of su(2) survives
        let rows = irreducible_rows(FsClass::Quaternionic, 4);
        assert!(rows.iter().any(|r| r.letter == TypeLetter::A && r.weight == vec![3]));
    }
}
