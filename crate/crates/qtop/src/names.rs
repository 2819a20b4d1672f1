//! Short textual names for quandles, groups and continuum constructions.
//!
//! Finite quandles: `trivial:N`, `dihedral:N`, `alexander:N:T`,
//! `conj:GROUP`, `core:GROUP`, or a path ending in `.json`.
//! Groups: `cyclic:N`, `dihedral-group:M` (order 2M), `symmetric:K`,
//! `alternating:K`, `quaternion`, `klein`, and products `G*H`.
//! Continuum specs: `unit-interval`, `closed-interval:A:B`, `open-interval-g`,
//! `ball:DIM[:paper|:invariant]`, `family-fn:N[:A:B]`,
//! `family-omega:N:DIM[:paper|:invariant]`, `real-line-arctan`,
//! `chart-arctan`, `affine:T`, `trivial-interval:A:B`, or a `.json` path.

use std::path::Path;

use qtop_core::continuum::{BallVariant, ContinuumSpec};
use qtop_core::finite::{make_alexander, make_conj, make_core, make_dihedral, make_trivial, FiniteQuandle, GroupTable};

use crate::format::{load_quandle, load_spec, FormatError};

fn invalid(msg: impl Into<String>) -> FormatError {
    FormatError::Invalid(msg.into())
}

fn num<T: std::str::FromStr>(s: &str, what: &str, name: &str) -> Result<T, FormatError> {
    s.parse().map_err(|_| invalid(format!("bad {what} {s:?} in {name:?}")))
}

fn is_json(s: &str) -> bool {
    s.ends_with(".json")
}

pub fn parse_group(name: &str) -> Result<GroupTable, FormatError> {
    if let Some((g, h)) = name.split_once('*') {
        return GroupTable::direct_product(&parse_group(g)?, &parse_group(h)?)
            .map_err(|e| invalid(e.to_string()));
    }
    let (head, arg) = name.split_once(':').unwrap_or((name, ""));
    let n = || num::<usize>(arg, "order", name);
    let g = match head {
        "cyclic" => GroupTable::cyclic(n()?),
        "dihedral-group" => GroupTable::dihedral(n()?),
        "symmetric" => GroupTable::symmetric(n()?),
        "alternating" => GroupTable::alternating(n()?),
        "quaternion" => GroupTable::quaternion(),
        "klein" => GroupTable::direct_product(
            &GroupTable::cyclic(2).expect("Z2"),
            &GroupTable::cyclic(2).expect("Z2"),
        ),
        _ => return Err(invalid(format!("unknown group {name:?}"))),
    };
    g.map_err(|e| invalid(e.to_string()))
}

pub fn parse_quandle(name: &str) -> Result<FiniteQuandle, FormatError> {
    if is_json(name) {
        return load_quandle(Path::new(name));
    }
    let (head, rest) = name.split_once(':').unwrap_or((name, ""));
    let q = match head {
        "trivial" => make_trivial(num(rest, "size", name)?),
        "dihedral" => make_dihedral(num(rest, "size", name)?),
        "alexander" => {
            let (n, t) = rest.split_once(':').ok_or_else(|| invalid("expected alexander:N:T"))?;
            make_alexander(num(n, "size", name)?, num(t, "parameter", name)?)
        }
        "conj" => make_conj(&parse_group(rest)?),
        "core" => make_core(&parse_group(rest)?),
        _ => return Err(invalid(format!("unknown quandle {name:?}"))),
    };
    q.map_err(|e| invalid(e.to_string()))
}

fn variant(s: Option<&str>, name: &str) -> Result<BallVariant, FormatError> {
    match s {
        None | Some("invariant") => Ok(BallVariant::InvariantExponent),
        Some("paper") => Ok(BallVariant::PaperFaithful),
        Some(v) => Err(invalid(format!("unknown ball variant {v:?} in {name:?}"))),
    }
}

pub fn parse_spec(name: &str) -> Result<ContinuumSpec, FormatError> {
    if is_json(name) {
        return load_spec(Path::new(name));
    }
    let parts: Vec<&str> = name.split(':').collect();
    let f = |i: usize| -> Result<f64, FormatError> {
        let s = parts.get(i).ok_or_else(|| invalid(format!("missing parameter in {name:?}")))?;
        num(s, "number", name)
    };
    let u = |i: usize| -> Result<usize, FormatError> {
        let s = parts.get(i).ok_or_else(|| invalid(format!("missing parameter in {name:?}")))?;
        num(s, "integer", name)
    };
    let arity = |lo: usize, hi: usize| -> Result<(), FormatError> {
        if (lo..=hi).contains(&(parts.len() - 1)) {
            Ok(())
        } else {
            Err(invalid(format!("wrong number of parameters in {name:?}")))
        }
    };
    Ok(match parts[0] {
        "unit-interval" => {
            arity(0, 0)?;
            ContinuumSpec::unit_interval()
        }
        "closed-interval" => {
            arity(2, 2)?;
            ContinuumSpec::closed_interval(f(1)?, f(2)?)
        }
        "open-interval-g" => {
            arity(0, 0)?;
            ContinuumSpec::OpenIntervalG
        }
        "ball" => {
            arity(1, 2)?;
            ContinuumSpec::unit_ball(u(1)?, variant(parts.get(2).copied(), name)?)
        }
        "family-fn" => {
            if parts.len() == 2 {
                ContinuumSpec::family_fn(u(1)?, 0.0, 1.0)
            } else {
                arity(3, 3)?;
                ContinuumSpec::family_fn(u(1)?, f(2)?, f(3)?)
            }
        }
        "family-omega" => {
            arity(2, 3)?;
            ContinuumSpec::FamilyOmegaN {
                n: u(1)?,
                dim: u(2)?,
                variant: variant(parts.get(3).copied(), name)?,
            }
        }
        "real-line-arctan" => {
            arity(0, 0)?;
            ContinuumSpec::RealLineArctan
        }
        "chart-arctan" => {
            arity(0, 0)?;
            ContinuumSpec::arctan_chart()
        }
        "affine" => {
            arity(1, 1)?;
            ContinuumSpec::AffineLine { t: f(1)? }
        }
        "trivial-interval" => {
            arity(2, 2)?;
            ContinuumSpec::TrivialInterval { a: f(1)?, b: f(2)? }
        }
        _ => return Err(invalid(format!("unknown spec {name:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quandle_names() {
        assert_eq!(parse_quandle("dihedral:3").unwrap().size(), 3);
        assert_eq!(parse_quandle("alexander:7:-1").unwrap(), make_dihedral(7).unwrap().with_label("alexander(7,-1)"));
        assert_eq!(parse_quandle("conj:symmetric:3").unwrap().size(), 6);
        assert_eq!(parse_quandle("core:cyclic:2*cyclic:4").unwrap().size(), 8);
        assert_eq!(parse_quandle("conj:klein").unwrap().size(), 4);
        assert!(parse_quandle("alexander:6:2").is_err());
        assert!(parse_quandle("dihedral:x").is_err());
        assert!(parse_quandle("wat:3").is_err());
    }

    #[test]
    fn spec_names() {
        assert_eq!(parse_spec("unit-interval").unwrap().kind(), "unit_interval");
        assert_eq!(parse_spec("affine:-0.5").unwrap().kind(), "affine_line");
        let ContinuumSpec::BallOmega { variant, dim, .. } = parse_spec("ball:2:paper").unwrap() else {
            panic!()
        };
        assert_eq!((variant, dim), (BallVariant::PaperFaithful, 2));
        let ContinuumSpec::FamilyFn { n, a, b, .. } = parse_spec("family-fn:3:-1:2").unwrap() else {
            panic!()
        };
        assert_eq!((n, a, b), (3, -1.0, 2.0));
        assert!(parse_spec("unit-interval:3").is_err());
        assert!(parse_spec("ball:2:sideways").is_err());
        assert!(parse_spec("closed-interval:0").is_err());
    }
}
