//! Command-line front end: parse a ring expression, run the closed-form
//! pipeline, optionally cross-check against the brute-force path and verify
//! structural invariants, and emit text, DOT or JSON.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use crate::error::Error;
use crate::local::{local_quiver, LocalQuiverInput};
use crate::oracle::{oracle_quiver_with_report, ORACLE_MONOID_LIMIT};
use crate::quiver::{Quiver, VertexKind};
use crate::ring::{FiniteRing, RingElem};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Dot,
    Json,
}

/// One CLI invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ring_spec: String,
    pub format: OutputFormat,
    pub oracle: bool,
    pub check_invariants: bool,
    pub output: Option<PathBuf>,
}

/// Runs the pipeline and returns the process exit code: 0 on success, 2 on
/// parse or validation errors, 3 when the brute-force check disagrees, 4 on
/// an invariant violation. Diagnostics go to stderr.
pub fn run(config: &RunConfig) -> i32 {
    match execute(config) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn execute(config: &RunConfig) -> Result<(), Error> {
    let ring = FiniteRing::parse(&config.ring_spec)?;
    let decomposition = ring.local_decomposition();

    let mut factor_quivers = Vec::new();
    for factor in &decomposition.factors {
        factor_quivers.push(local_quiver(factor)?);
    }
    let mut quiver = factor_quivers[0].clone();
    for q in &factor_quivers[1..] {
        quiver = quiver.tensor(q);
    }

    if config.oracle {
        for (factor, closed) in decomposition.factors.iter().zip(factor_quivers.iter()) {
            let n = factor.order();
            if n * n > ORACLE_MONOID_LIMIT {
                return Err(Error::SizeLimit(format!(
                    "local factor {} exceeds the brute-force bound",
                    factor.describe()
                )));
            }
            let (brute, _) = oracle_quiver_with_report(factor)?;
            if brute != *closed && !brute.isomorphic(closed) {
                return Err(Error::OracleDisagreement {
                    ring: factor.describe(),
                    closed: closed.to_json(),
                    brute: brute.to_json(),
                });
            }
        }
    }

    if config.check_invariants {
        check_invariants(&decomposition.factors, &factor_quivers, &quiver)?;
    }

    let body = match config.format {
        OutputFormat::Text => format!("ring: {}\n{}\n", ring.describe(), quiver),
        OutputFormat::Dot => quiver.to_dot(),
        OutputFormat::Json => {
            let mut s = quiver.to_json();
            s.push('\n');
            s
        }
    };
    match &config.output {
        None => {
            print!("{body}");
        }
        Some(path) => {
            write_atomically(path, &body)?;
        }
    }
    Ok(())
}

/// Write-temp-then-rename so readers never observe a partial file.
fn write_atomically(path: &PathBuf, body: &str) -> Result<(), Error> {
    let io_err = |source: std::io::Error| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let mut tmp = path.clone();
    let mut name = path
        .file_name()
        .map(|n| n.to_os_string())
        .unwrap_or_else(|| "out".into());
    name.push(".tmp");
    tmp.set_file_name(name);
    {
        let mut file = fs::File::create(&tmp).map_err(io_err)?;
        file.write_all(body.as_bytes()).map_err(io_err)?;
        file.sync_all().map_err(io_err)?;
    }
    fs::rename(&tmp, path).map_err(io_err)
}

/// Structural checks on every quiver produced by a run:
/// no arrows into the trivial vertex; exactly one arrow out of it per local
/// factor (and n arrows out of the all-trivial vertex of an n-factor
/// product); the loop count at the (trivial orbit, trivial character) vertex
/// equals the number of associate classes; no multiple edges over rings
/// whose maximal-ideal powers are all principal.
pub fn check_invariants(
    factors: &[FiniteRing],
    factor_quivers: &[Quiver],
    composite: &Quiver,
) -> Result<(), Error> {
    for (factor, quiver) in factors.iter().zip(factor_quivers.iter()) {
        let name = factor.describe();
        if quiver.arrows().any(|((_, t), _)| t == 0) {
            return Err(Error::Invariant(format!("{name}: an arrow ends at the trivial module")));
        }
        let out_of_trivial: u32 = quiver
            .arrows()
            .filter(|&((s, _), _)| s == 0)
            .map(|(_, m)| m)
            .sum();
        if out_of_trivial != 1 {
            return Err(Error::Invariant(format!(
                "{name}: {out_of_trivial} arrows leave the trivial module"
            )));
        }
        let data = factor.local_data()?;
        let input = LocalQuiverInput::new(factor)?;
        let v00 = input.vertex_index(0, 0);
        let loops = quiver.multiplicity(v00, v00);
        if loops as usize != data.associate_reps.len() {
            return Err(Error::Invariant(format!(
                "{name}: {loops} loops at the trivial-character vertex, expected {}",
                data.associate_reps.len()
            )));
        }
        if all_ideal_powers_principal(factor, &data.maximal_ideal)
            && quiver.arrows().any(|(_, m)| m > 1)
        {
            return Err(Error::Invariant(format!(
                "{name}: multiple edges over a chain ring"
            )));
        }
    }

    // The all-trivial vertex of the composite: no arrows in, one arrow out
    // per factor.
    let all_trivial = composite
        .vertices()
        .iter()
        .position(|v| match &v.kind {
            VertexKind::Trivial => true,
            VertexKind::Tuple(parts) => parts.iter().all(|p| *p == VertexKind::Trivial),
            VertexKind::Simple { .. } => false,
        })
        .ok_or_else(|| Error::Invariant("no all-trivial vertex".into()))?;
    let out: u32 = composite
        .arrows()
        .filter(|&((s, _), _)| s == all_trivial)
        .map(|(_, m)| m)
        .sum();
    if out as usize != factors.len() {
        return Err(Error::Invariant(format!(
            "{out} arrows leave the all-trivial vertex, expected {}",
            factors.len()
        )));
    }
    if composite.arrows().any(|((_, t), _)| t == all_trivial) {
        return Err(Error::Invariant(
            "an arrow ends at the all-trivial vertex".into(),
        ));
    }
    Ok(())
}

/// True iff every power of the maximal ideal is a principal ideal.
fn all_ideal_powers_principal(ring: &FiniteRing, maximal_ideal: &[RingElem]) -> bool {
    let zero = ring.zero();
    let mut power: Vec<RingElem> = maximal_ideal.to_vec();
    loop {
        if !is_principal(ring, &power) {
            return false;
        }
        if power.len() == 1 {
            return true;
        }
        // Next power: additive closure of the products with the maximal
        // ideal.
        let mut mask = vec![false; ring.order()];
        let mut gens = Vec::new();
        for &a in &power {
            for &b in maximal_ideal {
                let p = ring.mul(a, b);
                if !mask[p.0] {
                    mask[p.0] = true;
                    gens.push(p);
                }
            }
        }
        let mut queue = gens.clone();
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let s = ring.add(x, g);
                if !mask[s.0] {
                    mask[s.0] = true;
                    queue.push(s);
                }
            }
        }
        mask[zero.0] = true;
        power = (0..ring.order())
            .filter(|&i| mask[i])
            .map(RingElem)
            .collect();
    }
}

fn is_principal(ring: &FiniteRing, ideal: &[RingElem]) -> bool {
    let set: std::collections::BTreeSet<usize> = ideal.iter().map(|e| e.0).collect();
    ring.elements().any(|p| {
        let generated: std::collections::BTreeSet<usize> =
            ring.elements().map(|x| ring.mul(p, x).0).collect();
        generated == set
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(spec: &str) -> RunConfig {
        RunConfig {
            ring_spec: spec.into(),
            format: OutputFormat::Text,
            oracle: false,
            check_invariants: false,
            output: None,
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&config("Z/4")), 0);
        assert_eq!(run(&config("Z/0")), 2);
        assert_eq!(run(&config("nonsense")), 2);
        let mut big = config("Z/128");
        big.oracle = true;
        assert_eq!(run(&big), 2);
    }

    #[test]
    fn oracle_and_invariants_pass_on_small_rings() {
        for spec in ["Z/4", "Z/6", "GF(4)"] {
            let mut c = config(spec);
            c.oracle = true;
            c.check_invariants = true;
            assert_eq!(run(&c), 0, "{spec}");
        }
    }

    #[test]
    fn atomic_output() {
        let dir = std::env::temp_dir().join(format!("affq-test-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("quiver.json");
        let mut c = config("Z/4");
        c.format = OutputFormat::Json;
        c.output = Some(path.clone());
        assert_eq!(run(&c), 0);
        let body = fs::read_to_string(&path).unwrap();
        let q = crate::quiver::Quiver::from_json(body.trim()).unwrap();
        assert_eq!(q.vertex_count(), 6);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn chain_ring_power_check() {
        let z8 = FiniteRing::parse("Z/8").unwrap();
        let d = z8.local_data().unwrap();
        assert!(all_ideal_powers_principal(&z8, &d.maximal_ideal));
        let t = FiniteRing::from_tables(&crate::test_support::f2xy_table()).unwrap();
        let d2 = t.local_data().unwrap();
        assert!(!all_ideal_powers_principal(&t, &d2.maximal_ideal));
    }
}
