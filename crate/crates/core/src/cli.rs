//! The `gaussforge` command line.
//!
//! Exit codes: 0 success, 1 invariance violation, 2 input error,
//! 3 internal consistency failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bracket::{jones_limited, DEFAULT_JONES_LIMIT};
use crate::error::Error;
use crate::gauss::{parse_gauss_code, BasedGaussDiagram, PseudoDiagram};
use crate::khovanov::{euler_characteristic, euler_matches, homology_dims_limited, GradedDims, DEFAULT_KH_LIMIT};
use crate::maps::{project, MapKind};
use crate::moves::{apply_move, default_walk_cap, random_walk_trace, MoveSpec};
use crate::poly::{LaurentPoly, Var};
use crate::search::{find_by_invariants, MAX_SEARCH_CHORDS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "gaussforge",
    version,
    about = "Four-version Jones polynomials and Z/2 Khovanov homology of long virtual knots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jones polynomials of the four projections: pr, pra, ip, iap (one per line).
    Jones(InvariantArgs),
    /// Z/2 Khovanov homology tables of the four projections.
    Khovanov(InvariantArgs),
    /// Random Reidemeister walks must leave every invariant unchanged.
    Verify(VerifyArgs),
    /// Diagrams with a prescribed Jones polynomial, one Gauss code per line.
    Search(SearchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VarArg {
    #[value(name = "A")]
    A,
    #[value(name = "t")]
    T,
    #[value(name = "q")]
    Q,
}

impl From<VarArg> for Var {
    fn from(v: VarArg) -> Var {
        match v {
            VarArg::A => Var::A,
            VarArg::T => Var::T,
            VarArg::Q => Var::Q,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapArg {
    Pr,
    Pra,
    Ip,
    Iap,
}

impl From<MapArg> for MapKind {
    fn from(m: MapArg) -> MapKind {
        match m {
            MapArg::Pr => MapKind::Pr,
            MapArg::Pra => MapKind::Pra,
            MapArg::Ip => MapKind::Ip,
            MapArg::Iap => MapKind::Iap,
        }
    }
}

#[derive(Args, Debug)]
pub struct InvariantArgs {
    /// Gauss code such as "O1+ U2+ O3+ U1+ O2+ U3+"; append "@closed" for a closed diagram.
    pub code: String,
    #[arg(long, value_enum, default_value = "t")]
    pub var: VarArg,
    #[arg(long)]
    pub json: bool,
    /// Treat the code as a closed diagram (only pr and pra are defined).
    #[arg(long)]
    pub closed: bool,
    /// Restrict output to one projection.
    #[arg(long, value_enum)]
    pub map: Option<MapArg>,
    #[arg(long, env = "GAUSSFORGE_MAX_CHORDS")]
    pub max_chords: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub code: String,
    #[arg(long, default_value_t = 30)]
    pub moves: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    /// Also compare the Khovanov tables.
    #[arg(long)]
    pub kh: bool,
    /// Upper bound on chords during the walks.
    #[arg(long, env = "GAUSSFORGE_MAX_CHORDS")]
    pub max_chords: Option<usize>,
    /// Debug builds only: flip one sign of the first inserted R2 pair.
    #[cfg(debug_assertions)]
    #[arg(long, hide = true)]
    pub inject_r2_fault: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 4)]
    pub chords: usize,
    /// Required Jones polynomial of p_r, in A, t or q.
    #[arg(long)]
    pub target_pr: String,
    /// Required Jones polynomial of i∘p.
    #[arg(long)]
    pub target_ip: Option<String>,
    #[arg(long)]
    pub json: bool,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure { code, message: format!("{}: {e}", e.kind()) }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure { code: EXIT_INTERNAL, message: format!("write failed: {e}") }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Jones(a) => cmd_jones(a, out),
        Command::Khovanov(a) => cmd_khovanov(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Search(a) => cmd_search(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(code: &str, closed: bool) -> Result<BasedGaussDiagram, Error> {
    let d = parse_gauss_code(code)?;
    if closed && !d.is_closed() {
        d.close()
    } else {
        Ok(d)
    }
}

/// The projections asked for, in the fixed order pr, pra, ip, iap.
fn projections(d: &BasedGaussDiagram, only: Option<MapArg>) -> Result<Vec<(MapKind, PseudoDiagram)>, Error> {
    match only.map(MapKind::from) {
        Some(k) => Ok(vec![(k, project(d, k)?)]),
        None if d.is_closed() => [MapKind::Pr, MapKind::Pra].into_iter().map(|k| Ok((k, project(d, k)?))).collect(),
        None => MapKind::ALL.into_iter().map(|k| Ok((k, project(d, k)?))).collect(),
    }
}

fn pairs_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, c])).collect())
}

fn cmd_jones(a: &InvariantArgs, out: &mut dyn Write) -> Outcome {
    let d = load(&a.code, a.closed)?;
    let limit = a.max_chords.unwrap_or(DEFAULT_JONES_LIMIT);
    let mut values = Vec::new();
    for (k, p) in projections(&d, a.map)? {
        values.push((k, jones_limited(&p, limit)?));
    }
    if a.json {
        let jones: serde_json::Map<String, Value> =
            values.iter().map(|(k, v)| (k.key().to_string(), pairs_json(v))).collect();
        writeln!(out, "{}", json!({ "code": d.serialize(), "jones": jones }))?;
    } else {
        for (_, v) in &values {
            writeln!(out, "{}", v.render(a.var.into()))?;
        }
    }
    Ok(EXIT_OK)
}

fn homology_json(g: &GradedDims) -> Value {
    let rows: Vec<Value> = g.entries().map(|((i, j), dim)| json!({ "i": i, "j": j, "dim": dim })).collect();
    json!({ "homology": rows, "euler": euler_characteristic(g).q_to_a().render(Var::Q) })
}

fn cmd_khovanov(a: &InvariantArgs, out: &mut dyn Write) -> Outcome {
    let d = load(&a.code, a.closed)?;
    let limit = a.max_chords.unwrap_or(DEFAULT_KH_LIMIT);
    let mut tables = Vec::new();
    let mut euler_ok = true;
    for (k, p) in projections(&d, a.map)? {
        let dims = homology_dims_limited(&p, limit)?;
        let v = jones_limited(&p, limit.max(DEFAULT_JONES_LIMIT))?;
        euler_ok &= euler_matches(&dims, &v);
        tables.push((k, dims));
    }
    let verdict = if euler_ok { "OK" } else { "MISMATCH" };
    if a.json {
        let kh: serde_json::Map<String, Value> =
            tables.iter().map(|(k, g)| (k.key().to_string(), homology_json(g))).collect();
        writeln!(out, "{}", json!({ "code": d.serialize(), "khovanov": kh, "euler_check": verdict }))?;
    } else {
        for (k, g) in &tables {
            writeln!(out, "[{}]", k.key())?;
            write!(out, "{g}")?;
        }
        writeln!(out, "euler: {verdict}")?;
    }
    Ok(if euler_ok { EXIT_OK } else { EXIT_INTERNAL })
}

/// Four Jones polynomials, and optionally four Khovanov tables, in map order.
#[derive(PartialEq, Eq, Debug)]
struct Fingerprint {
    jones: Vec<LaurentPoly>,
    kh: Vec<GradedDims>,
}

fn fingerprint(d: &BasedGaussDiagram, kh: bool, limit: usize) -> Result<Fingerprint, Error> {
    let ps = projections(d, None)?;
    let jones = ps.iter().map(|(_, p)| jones_limited(p, limit.max(DEFAULT_JONES_LIMIT))).collect::<Result<_, _>>()?;
    let kh = if kh {
        ps.iter().map(|(_, p)| homology_dims_limited(p, limit.max(DEFAULT_KH_LIMIT))).collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    Ok(Fingerprint { jones, kh })
}

/// Replays a walk, flipping the sign of the first chord of the first R2 insertion.
#[cfg(debug_assertions)]
fn replay_with_fault(d: &BasedGaussDiagram, trace: &[MoveSpec]) -> Result<BasedGaussDiagram, Error> {
    use crate::gauss::Chord;
    let mut cur = d.clone();
    let mut faulted = false;
    for m in trace {
        let Ok(next) = apply_move(&cur, m) else { break };
        cur = next;
        if let (false, MoveSpec::R2Insert { ids, .. }) = (faulted, m) {
            let chords: Vec<Chord> = cur
                .chords()
                .iter()
                .map(|c| if c.id == ids.0 { Chord { sign: c.sign.flip(), ..*c } } else { *c })
                .collect();
            cur = BasedGaussDiagram::new(chords, false)?;
            faulted = true;
        }
    }
    Ok(cur)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let d = parse_gauss_code(&a.code)?;
    let cap = a.max_chords.unwrap_or_else(|| default_walk_cap(&d)).max(d.n_chords());
    let reference = fingerprint(&d, a.kh, cap)?;
    for sample in 0..a.samples {
        let seed = a.seed.wrapping_add(sample as u64);
        let (end, trace) = random_walk_trace(&d, a.moves, seed, cap);
        #[cfg(debug_assertions)]
        let end = if a.inject_r2_fault { replay_with_fault(&d, &trace)? } else { end };
        let got = fingerprint(&end, a.kh, cap)?;
        if got != reference {
            writeln!(out, "FAIL sample {sample} seed {seed}: {} -> {}", d.serialize(), end.serialize())?;
            for (k, m) in trace.iter().enumerate() {
                writeln!(out, "  {:>3} {m}", k + 1)?;
            }
            return Ok(EXIT_VIOLATION);
        }
    }
    let what = if a.kh { "Jones and Khovanov" } else { "Jones" };
    writeln!(out, "PASS {} walks of {} moves: {what} invariants unchanged", a.samples, a.moves)?;
    Ok(EXIT_OK)
}

fn cmd_search(a: &SearchArgs, out: &mut dyn Write) -> Outcome {
    if a.chords > MAX_SEARCH_CHORDS {
        return Err(Error::TooLarge { n: a.chords, limit: MAX_SEARCH_CHORDS }.into());
    }
    let (pr, _) = LaurentPoly::parse(&a.target_pr)?;
    let ip = a.target_ip.as_deref().map(LaurentPoly::parse).transpose()?.map(|(p, _)| p);
    let hits = find_by_invariants(a.chords, |f| f.pr == pr && ip.as_ref().is_none_or(|ip| f.ip == *ip))?;
    if a.json {
        let rows: Vec<Value> = hits
            .iter()
            .map(|h| {
                let jones: serde_json::Map<String, Value> =
                    h.jones.iter().map(|(k, v)| (k.key().to_string(), pairs_json(v))).collect();
                json!({ "code": h.diagram.serialize(), "jones": jones })
            })
            .collect();
        writeln!(out, "{}", Value::Array(rows))?;
    } else {
        for h in &hits {
            writeln!(out, "{}", h.diagram.serialize())?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("gaussforge").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn jones_of_kink_and_empty() {
        for code in ["O1+ U1+", ""] {
            let (status, out, _) = call(&["jones", code]);
            assert_eq!(status, 0);
            assert_eq!(out, "1\n1\n1\n1\n");
        }
    }

    #[test]
    fn parse_error_names_the_problem() {
        let (status, _, err) = call(&["jones", "O1+ U1-"]);
        assert_eq!(status, 2);
        assert!(err.contains("SignMismatch"), "{err}");
        let (status, _, err) = call(&["jones", "O1+ X1+"]);
        assert_eq!(status, 2);
        assert!(err.contains("X1+"), "{err}");
    }

    #[test]
    fn closed_input_has_two_projections() {
        let (status, out, _) = call(&["jones", "O1+ U2+ O3+ U1+ O2+ U3+", "--closed"]);
        assert_eq!(status, 0);
        assert_eq!(out, "t + t^3 - t^4\n-t^-4 + t^-3 + t^-1\n");
        let (status, _, err) = call(&["jones", "O1+ U1+ @closed", "--map", "ip"]);
        assert_eq!(status, 2);
        assert!(err.contains("RequiresBasePoint"));
    }

    #[test]
    fn khovanov_of_empty() {
        let (status, out, _) = call(&["khovanov", ""]);
        assert_eq!(status, 0);
        assert_eq!(out.matches("0 -1 1\n0 1 1\n").count(), 4);
        assert!(out.ends_with("euler: OK\n"));
    }

    #[test]
    fn khovanov_respects_limit() {
        let (status, _, err) = call(&["khovanov", "O1+ U1+ O2+ U2+", "--max-chords", "1"]);
        assert_eq!(status, 2);
        assert!(err.contains("TooManyChords"));
    }

    #[test]
    fn search_rejects_large_depth() {
        let (status, _, _) = call(&["search", "--chords", "6", "--target-pr", "1"]);
        assert_eq!(status, 2);
        let (status, _, _) = call(&["search", "--chords", "1", "--target-pr", "t^^"]);
        assert_eq!(status, 2);
    }
}
