//! Command-line front end. Every invocation is deterministic: identical
//! arguments produce byte-identical output.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qtorus::geometry::{signed_area_between, PLPath, RatPoint};
use qtorus::goldman::{reroute, rerouting_trace, verify_bracket_equality};
use qtorus::holonomy::holonomy_of_path;
use qtorus::intersections::{
    enumerate_along_p1, enumerate_points, total_intersection_number, StraightLoop,
};
use qtorus::jsonio::{
    rat_pair, BracketReportJson, ElementJson, MatrixJson, PathJson, PointJson, PointsJson,
    RelationsJson, WordJson,
};
use qtorus::latex::{latex_element, latex_word};
use qtorus::loop_algebra::commutator_straight;
use qtorus::modular::{act_on_holonomy, act_on_path, check_relations, ModularMatrix};
use qtorus::{fundamental_reduction, sweep, Rat};

#[derive(Parser)]
#[command(name = "qtorus", version, about = "Exact quantum holonomies and the Goldman bracket on the torus")]
struct Cli {
    /// Output format for the result.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Signed area between two PL paths with the same endpoints.
    Area(AreaArgs),
    /// Holonomy word of a PL path.
    Holonomy(HolonomyArgs),
    /// Fundamental-domain reduction of a straight loop.
    Reduce(LoopArg),
    /// Intersection points of two straight loops.
    Intersections(IntersectionsArgs),
    /// Rerouted path and its trace at one crossing.
    Reroute(RerouteArgs),
    /// Quantum Goldman bracket of two straight loops.
    Bracket(BracketArgs),
    /// SL(2,Z) action on paths, or the generator-relations report.
    Modular(ModularArgs),
    /// Run the identity verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AreaArgs {
    /// First path as space-separated "x,y" vertices ("/" for fractions).
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Second path, with the same start and endpoint.
    #[arg(long, allow_hyphen_values = true)]
    q: String,
}

#[derive(Args)]
struct HolonomyArgs {
    /// Path as space-separated "x,y" vertices; must end at an integer point.
    #[arg(long, allow_hyphen_values = true)]
    p: String,
}

#[derive(Args)]
struct LoopArg {
    /// Straight loop as "m,n".
    #[arg(long = "loop", allow_hyphen_values = true)]
    class: String,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Geometric,
    Lift,
}

#[derive(Args)]
struct IntersectionsArgs {
    #[arg(long, allow_hyphen_values = true)]
    p1: String,
    #[arg(long, allow_hyphen_values = true)]
    p2: String,
    /// Geometric mode dedups torus positions; lift mode lists every crossing
    /// along the lift of p1.
    #[arg(long, value_enum, default_value_t = Mode::Geometric)]
    mode: Mode,
}

#[derive(Args)]
struct RerouteArgs {
    #[arg(long, allow_hyphen_values = true)]
    p1: String,
    #[arg(long, allow_hyphen_values = true)]
    p2: String,
    /// Lift parameter of the crossing, in [0,1).
    #[arg(long, allow_hyphen_values = true)]
    at: String,
    /// Whether to traverse p2 forward (+) or reversed (-).
    #[arg(long, allow_hyphen_values = true, default_value = "+")]
    sign: String,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BracketForm {
    Straight,
    Rerouted,
    Both,
}

#[derive(Args)]
struct BracketArgs {
    #[arg(long, allow_hyphen_values = true)]
    p1: String,
    #[arg(long, allow_hyphen_values = true)]
    p2: String,
    #[arg(long, value_enum, default_value_t = BracketForm::Straight)]
    form: BracketForm,
}

#[derive(Args)]
struct ModularArgs {
    /// Matrix as "a,b,c,d" (row-major); must have determinant 1.
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
    /// Path to act on; required unless --relations is set.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Check the generator relations and basis-holonomy images instead.
    #[arg(long)]
    relations: bool,
    /// With --relations: drop the central phases (the classical action).
    #[arg(long)]
    classical: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Bound on the integer sweeps over loop classes.
    #[arg(long, default_value_t = 3)]
    sweep: i64,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Number of randomized cases per suite.
    #[arg(long, default_value_t = 200)]
    count: usize,
}

#[derive(Debug)]
struct BadInput(String);

impl std::fmt::Display for BadInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn bad<T>(msg: impl Into<String>) -> Result<T, BadInput> {
    Err(BadInput(msg.into()))
}

fn parse_rat(s: &str) -> Result<Rat, BadInput> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: i64 = n.trim().parse().map_err(|_| BadInput(format!("bad rational {s:?}")))?;
    let d: i64 = d.trim().parse().map_err(|_| BadInput(format!("bad rational {s:?}")))?;
    if d == 0 {
        return bad(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

fn parse_path(s: &str) -> Result<PLPath, BadInput> {
    let mut verts = Vec::new();
    for tok in s.split_whitespace() {
        let (x, y) = tok
            .split_once(',')
            .ok_or_else(|| BadInput(format!("vertex {tok:?} is not \"x,y\"")))?;
        verts.push(RatPoint::new(parse_rat(x)?, parse_rat(y)?));
    }
    PLPath::new(verts).map_err(|e| BadInput(e.to_string()))
}

fn parse_loop(s: &str) -> Result<StraightLoop, BadInput> {
    let (m, n) = s
        .split_once(',')
        .ok_or_else(|| BadInput(format!("loop {s:?} is not \"m,n\"")))?;
    let m: i64 = m.trim().parse().map_err(|_| BadInput(format!("bad loop {s:?}")))?;
    let n: i64 = n.trim().parse().map_err(|_| BadInput(format!("bad loop {s:?}")))?;
    StraightLoop::new(m, n).map_err(|e| BadInput(e.to_string()))
}

fn parse_matrix(s: &str) -> Result<ModularMatrix, BadInput> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| BadInput(format!("bad matrix {s:?}"))))
        .collect::<Result<_, _>>()?;
    if parts.len() != 4 {
        return bad(format!("matrix {s:?} needs four entries a,b,c,d"));
    }
    ModularMatrix::new(parts[0], parts[1], parts[2], parts[3]).map_err(|e| BadInput(e.to_string()))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization of plain data cannot fail")
}

fn print_element(e: &qtorus::AlgebraElement, format: Format) {
    match format {
        Format::Json => println!("{}", json(&ElementJson::from(e))),
        Format::Latex => println!("{}", latex_element(e)),
        Format::Text => println!("{e}"),
    }
}

fn run(cli: Cli) -> Result<u8, BadInput> {
    let format = cli.format;
    match cli.command {
        Command::Area(a) => {
            let p = parse_path(&a.p)?;
            let q = parse_path(&a.q)?;
            let s = signed_area_between(&p, &q).map_err(|e| BadInput(e.to_string()))?;
            match format {
                Format::Json => println!("{}", json(&serde_json::json!({ "area": rat_pair(s) }))),
                Format::Latex | Format::Text => println!("{s}"),
            }
        }
        Command::Holonomy(a) => {
            let p = parse_path(&a.p)?;
            p.winding().map_err(|e| BadInput(e.to_string()))?;
            let w = holonomy_of_path(&p);
            match format {
                Format::Json => println!("{}", json(&WordJson::from(&w))),
                Format::Latex => println!("{}", latex_word(&w)),
                Format::Text => println!("{w}"),
            }
        }
        Command::Reduce(a) => {
            let l = parse_loop(&a.class)?;
            let segs = fundamental_reduction(l.m(), l.n()).map_err(|e| BadInput(e.to_string()))?;
            match format {
                Format::Json => {
                    let rows: Vec<[[ [i64; 2]; 2]; 2]> = segs
                        .iter()
                        .map(|(a, b)| {
                            [
                                [rat_pair(a.x), rat_pair(a.y)],
                                [rat_pair(b.x), rat_pair(b.y)],
                            ]
                        })
                        .collect();
                    println!("{}", json(&rows));
                }
                Format::Latex | Format::Text => {
                    for (a, b) in &segs {
                        println!("{a} -> {b}");
                    }
                }
            }
        }
        Command::Intersections(a) => {
            let p1 = parse_loop(&a.p1)?;
            let p2 = parse_loop(&a.p2)?;
            let points = match a.mode {
                Mode::Geometric => enumerate_points(&p1, &p2),
                Mode::Lift => enumerate_along_p1(&p1, &p2),
            }
            .map_err(|e| BadInput(e.to_string()))?;
            let table = PointsJson {
                points: points.iter().map(PointJson::from).collect(),
                total: total_intersection_number(&p1, &p2),
            };
            match format {
                Format::Json => println!("{}", json(&table)),
                Format::Latex | Format::Text => {
                    for p in &points {
                        println!("pos {}  lift {}  index {:+}", p.position, p.lift_param, p.index);
                    }
                    println!("total {:+}", table.total);
                }
            }
        }
        Command::Reroute(a) => {
            let p1 = parse_loop(&a.p1)?;
            let p2 = parse_loop(&a.p2)?;
            let at = parse_rat(&a.at)?;
            let sign = match a.sign.as_str() {
                "+" | "+1" | "1" => 1,
                "-" | "-1" => -1,
                other => return bad(format!("sign {other:?} is not + or -")),
            };
            let points = enumerate_along_p1(&p1, &p2).map_err(|e| BadInput(e.to_string()))?;
            let point = points
                .iter()
                .find(|p| p.lift_param == at)
                .ok_or_else(|| BadInput(format!("no crossing at lift parameter {at}")))?;
            let r = reroute(&p1, &p2, point, sign).map_err(|e| BadInput(e.to_string()))?;
            let trace = rerouting_trace(&r);
            match format {
                Format::Json => println!(
                    "{}",
                    json(&serde_json::json!({
                        "path": PathJson::from(&r.path),
                        "trace": ElementJson::from(&trace),
                    }))
                ),
                Format::Latex => {
                    println!("{}", latex_element(&trace));
                }
                Format::Text => {
                    println!("path {}", r.path);
                    println!("trace {trace}");
                }
            }
        }
        Command::Bracket(a) => {
            let p1 = parse_loop(&a.p1)?;
            let p2 = parse_loop(&a.p2)?;
            match a.form {
                BracketForm::Straight => {
                    let e = commutator_straight(p1.m(), p1.n(), p2.m(), p2.n());
                    print_element(&e, format);
                }
                BracketForm::Rerouted => {
                    let e = qtorus::goldman_quantum(&p1, &p2);
                    print_element(&e, format);
                }
                BracketForm::Both => {
                    let report = verify_bracket_equality(&p1, &p2);
                    match format {
                        Format::Json => println!("{}", json(&BracketReportJson::from(&report))),
                        Format::Latex => {
                            println!("{}", latex_element(&report.straight_form));
                        }
                        Format::Text => {
                            println!("straight  {}", report.straight_form);
                            println!("rerouted  {}", report.rerouted_form);
                            println!("equal     {}", report.equal);
                        }
                    }
                    if !report.equal {
                        return Ok(1);
                    }
                }
            }
        }
        Command::Modular(a) => {
            if a.relations {
                let report = check_relations(a.classical);
                match format {
                    Format::Json => println!("{}", json(&RelationsJson::from(&report))),
                    Format::Latex | Format::Text => {
                        println!("S^4 = 1 on paths      {}", report.s4_is_identity);
                        println!("(ST)^3 = 1 on paths   {}", report.st3_is_identity);
                        println!("S^2 inverts loops     {}", report.s2_inverts_paths);
                        println!("U1 U2 = q U2 U1 kept  {}", report.fundamental_relation_preserved);
                        for img in &report.images {
                            println!("{:<10} ok={} actual={}", img.label, img.ok, img.actual);
                        }
                    }
                }
                if !report.all_ok {
                    return Ok(1);
                }
            } else {
                let m = match &a.matrix {
                    Some(s) => parse_matrix(s)?,
                    None => return bad("either --relations or --matrix is required"),
                };
                let p = match &a.p {
                    Some(s) => parse_path(s)?,
                    None => return bad("--matrix needs a path via --p"),
                };
                let image = act_on_path(&m, &p);
                let word = act_on_holonomy(&m, &p);
                match format {
                    Format::Json => println!(
                        "{}",
                        json(&serde_json::json!({
                            "matrix": MatrixJson::from(&m),
                            "path": PathJson::from(&image),
                            "word": WordJson::from(&word),
                        }))
                    ),
                    Format::Latex => println!("{}", latex_word(&word)),
                    Format::Text => {
                        println!("path {image}");
                        println!("word {word}");
                    }
                }
            }
        }
        Command::Verify(a) => {
            if a.sweep < 1 {
                return bad("--sweep must be at least 1");
            }
            let results = sweep::run_all(a.seed, a.sweep, a.count);
            let failed = results.iter().any(|r| !r.ok());
            match format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = results
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "suite": r.name,
                                "cases": r.cases,
                                "ok": r.ok(),
                                "failures": r.failures,
                            })
                        })
                        .collect();
                    println!("{}", json(&serde_json::json!({ "suites": rows, "ok": !failed })));
                }
                Format::Latex | Format::Text => {
                    for r in &results {
                        println!("{r}");
                    }
                    println!("overall: {}", if failed { "FAILED" } else { "ok" });
                }
            }
            if failed {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
