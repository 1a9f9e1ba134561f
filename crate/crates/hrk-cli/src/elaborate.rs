//! Elaboration of parsed expressions into representations.
//!
//! Each term elaborates at its natural ground field. For the projective
//! space every term is promoted to a quaternionic module first: complex
//! terms extend scalars to H (or switch to the standard frame when they
//! carry an invariant quaternionic structure), real terms tensor with H,
//! and trivial(d) denotes the trivial module H^{d/4}. Factors tagged with
//! the same share suffix are identified after summing.

use std::fmt;

use hrk_core::reprkit::{
    adjoin_center, adjoint_rep, complexify_quaternionic, complexify_real, dsum, dual, lambda_k,
    merge_factors, quaternionify, quaternionify_real, spin_rep, standardize_quaternionic, std_rep,
    sym2, tprod, trivial_rep, LinearRep, Realization, ReprError, SpinKind,
};

use crate::parser::{Ctor, Group, RepExpr};

/// Target space of the computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    Linear,
    Hp,
}

#[derive(Debug)]
pub struct ElabError(pub String);

impl fmt::Display for ElabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "elaboration error: {}", self.0)
    }
}

impl std::error::Error for ElabError {}

impl From<ReprError> for ElabError {
    fn from(e: ReprError) -> Self {
        ElabError(e.to_string())
    }
}

/// A share tag attached to one abstract factor: the user key plus the
/// factor's position within its atom (a z-marked atom contributes two
/// factors that share as a unit).
type ShareKey = Option<(u32, usize)>;

struct Elaborated {
    rep: LinearRep,
    keys: Vec<ShareKey>,
}

fn group_rep(g: &Group) -> Result<Elaborated, ElabError> {
    let base = std_rep(g.family, g.size)?;
    if !g.z {
        return Ok(Elaborated {
            keys: vec![None; base.algebra().factors().len()],
            rep: base,
        });
    }
    // center marker: move to the complex picture and adjoin i*I
    let complex = match base.realization() {
        Realization::Real(_) => complexify_real(&base)?,
        Realization::Complex(_) => base,
        Realization::Quaternionic(_) => complexify_quaternionic(&base)?,
    };
    let with_z = adjoin_center(&complex)?;
    Ok(Elaborated {
        keys: vec![None; with_z.algebra().factors().len()],
        rep: with_z,
    })
}

fn tag_atom(mut e: Elaborated, share: &Option<u32>) -> Elaborated {
    if let Some(k) = share {
        e.keys = (0..e.keys.len()).map(|i| Some((*k, i))).collect();
    }
    e
}

fn elaborate_ctor(c: &Ctor) -> Result<Elaborated, ElabError> {
    match c {
        Ctor::Trivial(d) => Ok(Elaborated {
            rep: trivial_rep(*d),
            keys: Vec::new(),
        }),
        Ctor::Std(g, share) => Ok(tag_atom(group_rep(g)?, share)),
        Ctor::Adj(g, share) => {
            if g.z {
                return Err(ElabError(
                    "the center marker does not apply to adjoint modules".into(),
                ));
            }
            let rep = adjoint_rep(g.family, g.size)?;
            Ok(tag_atom(
                Elaborated {
                    keys: vec![None; rep.algebra().factors().len()],
                    rep,
                },
                share,
            ))
        }
        Ctor::SpinRep(n, share) => {
            let kind = match n {
                7 => SpinKind::Spin7,
                11 => SpinKind::Spin11,
                12 => SpinKind::Spin12HalfPlus,
                other => {
                    return Err(ElabError(format!(
                        "spinrep({other}) is not supported (7, 11 and 12 are)"
                    )))
                }
            };
            let rep = spin_rep(kind)?;
            Ok(tag_atom(
                Elaborated {
                    keys: vec![None; rep.algebra().factors().len()],
                    rep,
                },
                share,
            ))
        }
        Ctor::Dual(inner) => {
            let e = elaborate_ctor(inner)?;
            Ok(Elaborated {
                rep: dual(&e.rep),
                keys: e.keys,
            })
        }
        Ctor::Wedge(k, inner) => {
            let e = elaborate_ctor(inner)?;
            if !matches!(e.rep.realization(), Realization::Complex(_)) {
                return Err(ElabError(
                    "wedge needs a complex representation (a su/u/z* atom)".into(),
                ));
            }
            Ok(Elaborated {
                rep: lambda_k(&e.rep, *k)?,
                keys: e.keys,
            })
        }
        Ctor::Sym2(inner) => {
            let e = elaborate_ctor(inner)?;
            if !matches!(e.rep.realization(), Realization::Complex(_)) {
                return Err(ElabError(
                    "sym2 needs a complex representation (a su/u/z* atom)".into(),
                ));
            }
            Ok(Elaborated {
                rep: sym2(&e.rep)?,
                keys: e.keys,
            })
        }
        Ctor::Tensor(a, b) => {
            let ea = elaborate_ctor(a)?;
            let eb = elaborate_ctor(b)?;
            let mut keys = ea.keys;
            keys.extend(eb.keys);
            Ok(Elaborated {
                rep: tprod(&ea.rep, &eb.rep)?,
                keys,
            })
        }
    }
}

/// Promote one summand to a quaternionic module for the projective space.
fn promote_term(e: Elaborated, c: &Ctor) -> Result<Elaborated, ElabError> {
    let rep = match e.rep.realization() {
        Realization::Quaternionic(_) => e.rep,
        Realization::Complex(_) => {
            if e.rep.intrinsic_quaternionic().is_some() {
                standardize_quaternionic(&e.rep)?
            } else {
                quaternionify(&e.rep)?
            }
        }
        Realization::Real(_) => {
            if let Ctor::Trivial(d) = c {
                if d % 4 != 0 {
                    return Err(ElabError(format!(
                        "trivial({d}) cannot sit inside a quaternionic module; the dimension \
                         must be a multiple of 4"
                    )));
                }
                Elaborated {
                    rep: hrk_core::catalog::Recipe::TrivialH(d / 4)
                        .build()
                        .map_err(ElabError::from)?,
                    keys: Vec::new(),
                }
                .rep
            } else {
                quaternionify_real(&e.rep)?
            }
        }
    };
    Ok(Elaborated { rep, keys: e.keys })
}

/// Elaborate a full expression for the given space.
pub fn elaborate(expr: &RepExpr, space: SpaceKind) -> Result<LinearRep, ElabError> {
    let mut summed: Option<Elaborated> = None;
    for term in &expr.terms {
        let mut e = elaborate_ctor(term)?;
        if space == SpaceKind::Hp {
            e = promote_term(e, term)?;
        }
        summed = Some(match summed {
            None => e,
            Some(prev) => {
                let rep = dsum(&prev.rep, &e.rep)?;
                let mut keys = prev.keys;
                keys.extend(e.keys);
                Elaborated { rep, keys }
            }
        });
    }
    let e = summed.ok_or_else(|| ElabError("empty expression".into()))?;
    // identify factors with equal share keys
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..e.keys.len() {
        let Some(key) = e.keys[i] else { continue };
        for j in i + 1..e.keys.len() {
            if e.keys[j] == Some(key) {
                pairs.push((i, j));
            }
        }
    }
    // keep only the first-match pair per target to let merge route chains
    let mut seen_target = std::collections::BTreeSet::new();
    pairs.retain(|&(_, b)| seen_target.insert(b));
    let rep = if pairs.is_empty() {
        e.rep
    } else {
        merge_factors(&e.rep, &pairs).map_err(|err| match err {
            ReprError::FactorMismatch(m) => {
                ElabError(format!("shared factors disagree: {m}"))
            }
            other => ElabError(other.to_string()),
        })?
    };
    if space == SpaceKind::Hp && rep.degree() % 4 != 0 {
        return Err(ElabError(format!(
            "total degree {} is not a quaternionic module",
            rep.degree()
        )));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    #[test]
    fn theorem_case_one_expression() {
        let e = parse("std(sp(1)) + std(sp(1)) + trivial(4)").unwrap();
        let rep = elaborate(&e, SpaceKind::Hp).unwrap();
        assert_eq!(rep.degree(), 12);
        assert_eq!(rep.dim_algebra(), 6);
    }

    #[test]
    fn shared_atoms_fold_to_one_factor() {
        let e = parse("std(so(3))#1 + std(so(3))#1").unwrap();
        let rep = elaborate(&e, SpaceKind::Linear).unwrap();
        assert_eq!(rep.degree(), 6);
        assert_eq!(rep.dim_algebra(), 3);
    }

    #[test]
    fn share_with_mismatched_atoms_is_rejected() {
        let e = parse("std(so(3))#1 + std(su(2))#1").unwrap();
        assert!(elaborate(&e, SpaceKind::Linear).is_err());
    }

    #[test]
    fn hp_promotion_degrees() {
        let e = parse("std(u(3)) + std(u(3))").unwrap();
        let rep = elaborate(&e, SpaceKind::Hp).unwrap();
        assert_eq!(rep.degree(), 24);
        let e = parse("std(so(3))").unwrap();
        let rep = elaborate(&e, SpaceKind::Hp).unwrap();
        assert_eq!(rep.degree(), 12);
        let e = parse("wedge(3, std(su(6)))").unwrap();
        let rep = elaborate(&e, SpaceKind::Hp).unwrap();
        // the intrinsic structure is used: H^10, not a doubling
        assert_eq!(rep.degree(), 40);
    }

    #[test]
    fn linear_space_leaves_degrees_alone() {
        let e = parse("trivial(4)").unwrap();
        let rep = elaborate(&e, SpaceKind::Linear).unwrap();
        assert_eq!(rep.degree(), 4);
        assert_eq!(rep.dim_algebra(), 0);
    }

    #[test]
    fn center_on_u_is_rejected() {
        let e = parse("std(z*u(2))").unwrap();
        assert!(elaborate(&e, SpaceKind::Linear).is_err());
    }
}
