//! Versioned text format for reference spinor values.
//!
//! One record per line:
//! `basis family kind index px py pz m re0 im0 re1 im1 re2 im2 re3 im3`.
//! Blank lines and lines starting with `#` after the header are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::kinematics::FourMomentum;
use crate::matrix::{c, CVector};
use crate::spinors::{dirac_spinor, elko_helicity, lambda_spinor, rho_spinor, Basis, Family, Index, Kind, PhaseConfig};

pub const HEADER: &str = "# majorana-golden v1";

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenRecord {
    pub basis: Basis,
    pub family: Family,
    pub kind: Kind,
    pub index: Index,
    /// `[px, py, pz, m]`.
    pub momentum: [f64; 4],
    pub components: CVector,
}

impl GoldenRecord {
    /// Recompute this record's spinor from the library.
    pub fn evaluate(&self) -> Result<CVector> {
        let [px, py, pz, m] = self.momentum;
        let p = FourMomentum::new(px, py, pz, m)?;
        let b = match (self.basis, self.family) {
            (Basis::Spinorial, Family::Lambda) => lambda_spinor(&p, self.kind, self.index)?,
            (Basis::Spinorial, Family::Rho) => rho_spinor(&p, self.kind, self.index)?,
            (Basis::Helicity, Family::Lambda | Family::Rho) => {
                elko_helicity(&p, &p.angles()?, self.family, self.kind, self.index, &PhaseConfig::default())?
            }
            (basis, Family::U | Family::V) => dirac_spinor(&p, self.family, self.index, basis)?,
        };
        Ok(b.components)
    }
}

fn basis_token(b: Basis) -> &'static str {
    match b {
        Basis::Spinorial => "spinorial",
        Basis::Helicity => "helicity",
    }
}

fn parse_token<T: Copy + ToString>(tok: &str, options: &[T], what: &str, line: usize) -> Result<T> {
    options
        .iter()
        .copied()
        .find(|o| o.to_string() == tok)
        .ok_or_else(|| Error::Usage(format!("line {line}: unknown {what} '{tok}'")))
}

pub fn parse(text: &str) -> Result<Vec<GoldenRecord>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == HEADER => {}
        _ => return Err(Error::Usage(format!("golden file must start with '{HEADER}'"))),
    }
    let mut out = Vec::new();
    for (i, line) in lines {
        let n = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 16 {
            return Err(Error::Usage(format!("line {n}: expected 16 fields, found {}", toks.len())));
        }
        let basis = match toks[0] {
            "spinorial" => Basis::Spinorial,
            "helicity" => Basis::Helicity,
            t => return Err(Error::Usage(format!("line {n}: unknown basis '{t}'"))),
        };
        let family = parse_token(toks[1], &[Family::Lambda, Family::Rho, Family::U, Family::V], "family", n)?;
        let kind = parse_token(toks[2], &[Kind::S, Kind::A, Kind::Particle, Kind::Antiparticle], "kind", n)?;
        let index = parse_token(toks[3], &Index::BOTH, "index", n)?;
        let nums: Vec<f64> = toks[4..]
            .iter()
            .map(|t| t.parse::<f64>().map_err(|_| Error::Usage(format!("line {n}: bad number '{t}'"))))
            .collect::<Result<_>>()?;
        let comps: Vec<_> = nums[4..].chunks(2).map(|z| c(z[0], z[1])).collect();
        out.push(GoldenRecord {
            basis,
            family,
            kind,
            index,
            momentum: [nums[0], nums[1], nums[2], nums[3]],
            components: CVector::new(comps)?,
        });
    }
    Ok(out)
}

pub fn render(records: &[GoldenRecord]) -> String {
    let mut s = format!("{HEADER}\n");
    for r in records {
        let [px, py, pz, m] = r.momentum;
        let _ = write!(
            s,
            "{} {} {} {} {px:?} {py:?} {pz:?} {m:?}",
            basis_token(r.basis),
            r.family,
            r.kind,
            r.index
        );
        for z in r.components.iter() {
            let _ = write!(s, " {:.17e} {:.17e}", z.re, z.im);
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_parse_round_trip() {
        let mut rec = GoldenRecord {
            basis: Basis::Helicity,
            family: Family::Rho,
            kind: Kind::A,
            index: Index::Down,
            momentum: [0.6, -0.8, 1.2, 1.5],
            components: CVector::zeros(4),
        };
        rec.components = rec.evaluate().unwrap();
        let back = parse(&render(std::slice::from_ref(&rec))).unwrap();
        assert_eq!(back, vec![rec]);
    }

    #[test]
    fn header_is_required() {
        assert!(parse("spinorial lambda S up 0 0 0 1 0 0 0 0 0 0 0 0").is_err());
        assert!(parse(HEADER).unwrap().is_empty());
    }

    #[test]
    fn bad_field_count_is_rejected() {
        let text = format!("{HEADER}\nspinorial lambda S up 0 0 0 1\n");
        assert!(matches!(parse(&text), Err(Error::Usage(_))));
    }
}
