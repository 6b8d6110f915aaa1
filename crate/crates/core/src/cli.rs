//! Command-line front end.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::admissible::{compare_with_reference, enumerate_catalog, CatalogData, OrbitCatalog};
use crate::coxeter::{CoxeterGraph, Family, GenWord, RootSystem, Token};
use crate::diagram::{nf_to_diagram, word_to_diagram};
use crate::dimension::{brute_force_dim, dim_report};
use crate::error::{Error, Result};
use crate::normal_form::{BrauerMonoid, NormalFormRecord};
use crate::relations::{normal_form_violations, relations};
use crate::rep::{block_report, verify_relations, OrbitBasis, DIM_LIMIT};

/// Version tag of the catalog cache format.
pub const CACHE_VERSION: u32 = 1;

const LABELS: &str = "Graphs: A<n> (n>=1), D<n> (n>=4), E6, E7, E8, with Bourbaki node labels.
  A_n: 1-2-...-n
  D_n: 1-2-...-(n-2) with n-1 and n both joined to n-2
  E_n: 1-3-4-5-...-n with 2 joined to 4

Words are whitespace-separated tokens r<i>, e<i>, d (delta), D (delta inverse),
read left to right as a product, e.g. \"e1 r2 e1 D\". A word argument of the
form @PATH is read from a file.";

#[derive(Parser, Debug)]
#[command(name = "brauer", version, about = "Brauer monoids and algebras of simply laced type", after_help = LABELS)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory for cached orbit catalogs.
    #[arg(long, global = true, env = "BRAUER_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GraphArg {
    /// Graph such as A4, D5 or E6.
    pub graph: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a word.
    Normalize {
        #[command(flatten)]
        graph: GraphArg,
        word: String,
    },
    /// Normal form of a product of two words.
    Mul {
        #[command(flatten)]
        graph: GraphArg,
        left: String,
        right: String,
    },
    /// Exit 0 if two words are equal in the monoid, 1 if not.
    Eq {
        #[command(flatten)]
        graph: GraphArg,
        left: String,
        right: String,
    },
    /// Image under the word-reversing anti-involution.
    Op {
        #[command(flatten)]
        graph: GraphArg,
        word: String,
    },
    /// Orbits of admissible sets.
    Orbits {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Algebra dimension: closed form against the orbit sum.
    Dims {
        #[command(flatten)]
        graph: GraphArg,
        /// Also count monoid elements by search, up to this many.
        #[arg(long)]
        brute_force: Option<usize>,
        /// Include per-orbit matrix block sizes.
        #[arg(long)]
        blocks: bool,
    },
    /// Check every relation on normal forms and on orbit modules.
    VerifyRelations {
        #[command(flatten)]
        graph: GraphArg,
        /// Restrict the matrix check to one orbit.
        #[arg(long)]
        orbit: Option<usize>,
        /// Skip orbit modules larger than this.
        #[arg(long, default_value_t = DIM_LIMIT)]
        limit: usize,
    },
    /// Brauer diagram of a word (type A only).
    Diagram {
        #[command(flatten)]
        graph: GraphArg,
        word: String,
    },
    /// Matrix of a word on one orbit module as `row col exponent` triplets.
    RepExport {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        orbit: usize,
        word: String,
        #[arg(long, default_value_t = DIM_LIMIT)]
        limit: usize,
    },
    /// Run the invariant checks for one graph.
    Selftest {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = DIM_LIMIT)]
        limit: usize,
    },
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    data: CatalogData,
}

fn cache_path(dir: &Path, graph: &CoxeterGraph) -> PathBuf {
    dir.join(format!("catalog-v{CACHE_VERSION}-{}.json", graph.name()))
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

/// Load the catalog from `cache_dir` when present and current, otherwise
/// enumerate it and write the cache.
pub fn load_catalog(graph: CoxeterGraph, cache_dir: Option<&Path>) -> Result<OrbitCatalog> {
    let Some(dir) = cache_dir else {
        return enumerate_catalog(RootSystem::new(graph));
    };
    let path = cache_path(dir, &graph);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(file) = serde_json::from_str::<CacheFile>(&text) {
            if file.version == CACHE_VERSION && file.data.graph == graph.name() {
                if let Ok(cat) = OrbitCatalog::from_data(file.data) {
                    return Ok(cat);
                }
            }
        }
    }
    let cat = enumerate_catalog(RootSystem::new(graph))?;
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let text = serde_json::to_string(&CacheFile { version: CACHE_VERSION, data: cat.to_data() })
        .map_err(|e| Error::Internal(e.to_string()))?;
    fs::write(&path, text).map_err(|e| io_err(&path, e))?;
    Ok(cat)
}

fn read_word(arg: &str) -> Result<GenWord> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| io_err(Path::new(path), e))?.parse(),
        None => arg.parse(),
    }
}

struct Session {
    json: bool,
    cache_dir: Option<PathBuf>,
}

impl Session {
    fn monoid(&self, g: &GraphArg) -> Result<BrauerMonoid> {
        let graph: CoxeterGraph = g.graph.parse()?;
        Ok(BrauerMonoid::from_catalog(load_catalog(graph, self.cache_dir.as_deref())?))
    }

    fn emit<T: Serialize>(&self, out: &mut dyn Write, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        let s = if self.json {
            serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))? + "\n"
        } else {
            text()
        };
        out.write_all(s.as_bytes()).map_err(|e| Error::Io(e.to_string()))
    }
}

fn record_text(r: &NormalFormRecord) -> String {
    format!(
        "orbit {}\nu     {}\nz     {}\nv     {}\nk     {}\nL     {}\nR     {}\nword  {}\n",
        r.orbit, r.u, r.z, r.v, r.k, r.left, r.right, r.word
    )
}

#[derive(Serialize)]
struct EqOutput {
    equal: bool,
    left: NormalFormRecord,
    right: NormalFormRecord,
}

#[derive(Serialize)]
struct MatrixCheck {
    orbit: usize,
    dim: Option<usize>,
    skipped: Option<String>,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct VerifyOutput {
    graph: String,
    instances: usize,
    normal_form_violations: Vec<String>,
    matrix: Vec<MatrixCheck>,
    ok: bool,
}

fn verify(monoid: &BrauerMonoid, orbit: Option<usize>, limit: usize) -> Result<VerifyOutput> {
    let rels = relations(monoid.catalog().graph());
    let nf: Vec<String> = normal_form_violations(monoid, &rels)?
        .iter()
        .map(|r| format!("{}: {} = {}", r.family, r.lhs, r.rhs))
        .collect();
    let ids: Vec<usize> = match orbit {
        Some(id) => vec![monoid.catalog().orbit(id)?.id],
        None => monoid.catalog().orbits().iter().map(|o| o.id).collect(),
    };
    let mut matrix = Vec::new();
    for id in ids {
        match verify_relations(monoid, id, limit) {
            Ok(rep) => matrix.push(MatrixCheck {
                orbit: id,
                dim: Some(rep.dim),
                skipped: None,
                violations: rep.violations.iter().map(|v| format!("{}: {} = {} at {}", v.family, v.lhs, v.rhs, v.column)).collect(),
            }),
            Err(e @ (Error::DimensionTooLarge { .. } | Error::BoundExceeded(_))) => {
                matrix.push(MatrixCheck { orbit: id, dim: None, skipped: Some(e.to_string()), violations: Vec::new() })
            }
            Err(e) => return Err(e),
        }
    }
    let ok = nf.is_empty() && matrix.iter().all(|m| m.violations.is_empty());
    Ok(VerifyOutput { graph: monoid.catalog().graph().name(), instances: rels.len(), normal_form_violations: nf, matrix, ok })
}

/// Outcome of one self-test check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn short_words(n: usize, len: usize) -> impl Iterator<Item = GenWord> {
    let gens: Vec<Token> = (0..n).map(Token::R).chain((0..n).map(Token::E)).chain([Token::Delta]).collect();
    let g = gens.len();
    (0..=len).flat_map(move |l| {
        let gens = gens.clone();
        (0..g.pow(l as u32)).map(move |mut code| {
            (0..l)
                .map(|_| {
                    let t = gens[code % g];
                    code /= g;
                    t
                })
                .collect()
        })
    })
}

/// Invariant checks for one graph: catalog against the reference table,
/// dimension bookkeeping, relations, and the diagram model in type A.
pub fn selftest(monoid: &BrauerMonoid, limit: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        out.push(CheckResult { name: name.to_string(), passed, detail })
    };
    let cat = monoid.catalog();
    let mismatches = compare_with_reference(cat);
    check("orbit table", mismatches.is_empty(), mismatches.join("; "));
    let dims = dim_report(cat);
    check("dimension", dims.matches, format!("closed form {} orbit sum {}", dims.closed_form, dims.orbit_sum));
    let blocks = block_report(cat);
    let tau_ok = blocks.rows.iter().all(|r| r.tau_square_sum.as_ref().is_none_or(|s| *s == r.wc_order));
    check("hook lengths", tau_ok, String::new());
    let v = verify(monoid, None, limit)?;
    let skipped = v.matrix.iter().filter(|m| m.skipped.is_some()).count();
    let matrix_bad: usize = v.matrix.iter().map(|m| m.violations.len()).sum();
    check(
        "relations (normal forms)",
        v.normal_form_violations.is_empty(),
        format!("{} instances, {} violations", v.instances, v.normal_form_violations.len()),
    );
    check(
        "relations (matrices)",
        matrix_bad == 0,
        format!("{} orbits, {} skipped, {} violations", v.matrix.len(), skipped, matrix_bad),
    );
    let graph = cat.graph();
    if graph.family() == Family::A && graph.rank() <= 4 {
        let strands = graph.rank() + 1;
        let len = if graph.rank() <= 2 { 5 } else { 3 };
        let mut bad = 0;
        let mut total = 0;
        for w in short_words(graph.rank(), len) {
            total += 1;
            if nf_to_diagram(monoid, &monoid.normalize(&w)?)? != word_to_diagram(strands, &w)? {
                bad += 1;
            }
        }
        check("diagrams", bad == 0, format!("{total} words, {bad} mismatches"));
    }
    if graph.rank() <= 4 {
        let expected = crate::dimension::closed_form(graph);
        let found = brute_force_dim(monoid, 100_000)?;
        check("brute force", expected == found.into(), format!("{found} elements"));
    }
    Ok(out)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let s = Session { json: cli.json, cache_dir: cli.cache_dir };
    match cli.command {
        Command::Normalize { graph, word } => {
            let m = s.monoid(&graph)?;
            let r = m.record(&m.normalize(&read_word(&word)?)?)?;
            s.emit(out, &r, || record_text(&r))?;
        }
        Command::Mul { graph, left, right } => {
            let m = s.monoid(&graph)?;
            let x = m.normalize(&read_word(&left)?)?;
            let y = m.normalize(&read_word(&right)?)?;
            let r = m.record(&m.multiply(&x, &y)?)?;
            s.emit(out, &r, || record_text(&r))?;
        }
        Command::Eq { graph, left, right } => {
            let m = s.monoid(&graph)?;
            let x = m.normalize(&read_word(&left)?)?;
            let y = m.normalize(&read_word(&right)?)?;
            let o = EqOutput { equal: x == y, left: m.record(&x)?, right: m.record(&y)? };
            s.emit(out, &o, || {
                if o.equal {
                    format!("equal\n{}\n", o.left.word)
                } else {
                    format!("not equal\n{}\n{}\n", o.left.word, o.right.word)
                }
            })?;
            return Ok(if o.equal { 0 } else { 1 });
        }
        Command::Op { graph, word } => {
            let m = s.monoid(&graph)?;
            let r = m.record(&m.opposite(&m.normalize(&read_word(&word)?)?)?)?;
            s.emit(out, &r, || record_text(&r))?;
        }
        Command::Orbits { graph } => {
            let m = s.monoid(&graph)?;
            let rows = m.catalog().summaries();
            s.emit(out, &rows, || {
                let mut t = format!("{:>3} {:>4} {:>8}  {:<10} {:<10} {}\n", "id", "|X|", "size", "C", "perp", "highest");
                for r in &rows {
                    t += &format!(
                        "{:>3} {:>4} {:>8}  {:<10} {:<10} {}\n",
                        r.id,
                        r.set_size,
                        r.orbit_size,
                        r.c_type,
                        r.perp_type,
                        r.highest.join(" ")
                    );
                }
                t
            })?;
        }
        Command::Dims { graph, brute_force, blocks } => {
            let m = s.monoid(&graph)?;
            let report = dim_report(m.catalog());
            let brute = brute_force.map(|b| brute_force_dim(&m, b)).transpose()?;
            let block = blocks.then(|| block_report(m.catalog()));
            #[derive(Serialize)]
            struct DimsOutput<'a> {
                report: &'a crate::dimension::DimReport,
                brute_force: Option<usize>,
                blocks: Option<crate::rep::BlockReport>,
            }
            let o = DimsOutput { report: &report, brute_force: brute, blocks: block };
            s.emit(out, &o, || {
                let mut t = format!("{:>3} {:>4} {:>8}  {:<10} {:>12} {:>20}\n", "id", "|X|", "size", "C", "|W(C)|", "size^2 |W(C)|");
                for c in &report.orbits {
                    t += &format!(
                        "{:>3} {:>4} {:>8}  {:<10} {:>12} {:>20}\n",
                        c.orbit, c.set_size, c.orbit_size, c.c_type, c.wc_order, c.contribution
                    );
                }
                t += &format!("orbit sum   {}\nclosed form {}\n", report.orbit_sum, report.closed_form);
                t += if report.matches { "match\n" } else { "MISMATCH\n" };
                if let Some(b) = brute {
                    t += &format!("brute force {b}\n");
                }
                if let Some(b) = &o.blocks {
                    for r in &b.rows {
                        let sizes = r.blocks.as_ref().map_or("n/a".to_string(), |v| {
                            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                        });
                        t += &format!("blocks orbit {}: {}\n", r.orbit, sizes);
                    }
                }
                t
            })?;
            if !report.matches {
                return Ok(1);
            }
        }
        Command::VerifyRelations { graph, orbit, limit } => {
            let m = s.monoid(&graph)?;
            let v = verify(&m, orbit, limit)?;
            s.emit(out, &v, || {
                let mut t = format!("{} relation instances\nnormal forms: {} violations\n", v.instances, v.normal_form_violations.len());
                for x in &v.normal_form_violations {
                    t += &format!("  {x}\n");
                }
                for mc in &v.matrix {
                    match (&mc.skipped, mc.dim) {
                        (Some(why), _) => t += &format!("orbit {}: skipped ({why})\n", mc.orbit),
                        (None, Some(d)) => t += &format!("orbit {}: dim {d}, {} violations\n", mc.orbit, mc.violations.len()),
                        _ => {}
                    }
                    for x in &mc.violations {
                        t += &format!("  {x}\n");
                    }
                }
                t
            })?;
            if !v.ok {
                return Ok(1);
            }
        }
        Command::Diagram { graph, word } => {
            let g: CoxeterGraph = graph.graph.parse()?;
            if g.family() != Family::A {
                return Err(Error::NotTypeA(g.name()));
            }
            let d = word_to_diagram(g.rank() + 1, &read_word(&word)?)?;
            s.emit(out, &d, || d.render())?;
        }
        Command::RepExport { graph, orbit, word, limit } => {
            let m = s.monoid(&graph)?;
            let basis = OrbitBasis::new(&m, orbit, limit)?;
            let mat = basis.matrix_of_word(&read_word(&word)?)?;
            s.emit(out, &serde_json::json!({ "orbit": orbit, "dim": mat.dim(), "entries": mat.triplets() }), || {
                mat.to_triplet_text()
            })?;
        }
        Command::Selftest { graph, limit } => {
            let m = s.monoid(&graph)?;
            let results = selftest(&m, limit)?;
            s.emit(out, &results, || {
                results
                    .iter()
                    .map(|r| {
                        let status = if r.passed { "PASS" } else { "FAIL" };
                        if r.detail.is_empty() {
                            format!("{status} {}\n", r.name)
                        } else {
                            format!("{status} {}: {}\n", r.name, r.detail)
                        }
                    })
                    .collect()
            })?;
            if results.iter().any(|r| !r.passed) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

/// Parse `argv` and run; returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
