use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use quasitri::algebra::{homology, HomologyProfile};
use quasitri::assembly::{
    build_equilibrium, census_spec, glue_tori, realized_data, select, verify_census,
    verify_closed_4manifold, AssemblySpec, CensusReport,
};
use quasitri::catalog::{ball, resolve, seven_vertex_torus, TorusId};
use quasitri::charfun::{enumerate, lens_parameters, Bounds, Polygon, Solution};
use quasitri::complex::FVector;
use quasitri::io::{parse_any, to_facet_text, to_json};
use quasitri::recognition::{bistellar_reduce, is_closed_manifold, LinkReport, ReductionOptions};
use quasitri::SimplicialComplex;

#[derive(Parser)]
#[command(
    name = "quasitri",
    version,
    about = "Solid tori, lens spaces and equilibrium triangulations"
)]
struct Cli {
    /// Seed for randomized sphere recognition.
    #[arg(long, global = true, env = "QUASITRI_SEED", default_value_t = 0)]
    seed: u64,
    /// Treat uncertified 3-sphere links as failures.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solid tori of the catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Build an equilibrium triangulation from a census key or a torus list.
    Assemble(AssembleArgs),
    /// Glue two catalog tori along the seven-vertex torus.
    Glue {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
        /// Write the closed 3-manifold here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a complex is a closed manifold.
    Verify(VerifyArgs),
    /// Integral homology of a complex.
    Homology(InputArgs),
    /// Reduce a 3-manifold towards the boundary of the 4-simplex.
    Recognize(RecognizeArgs),
    /// Characteristic pairs and lens parameters.
    #[command(subcommand)]
    Charfun(CharfunCommand),
    /// Build and verify census entries.
    Census(CensusArgs),
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Table of catalog tori with killed classes and vertex counts.
    List {
        /// Largest index listed for the indexed families.
        #[arg(long, default_value_t = 0)]
        max_n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Facets of one torus, e.g. `T1`, `T4,0`, `T` for the seven-vertex torus,
    /// or a ball such as `B4,0`.
    Dump {
        id: String,
        #[arg(long, value_enum, default_value_t = Format::Facets)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Facets,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Text,
    Json,
}

#[derive(Args)]
struct AssembleArgs {
    #[arg(long, conflicts_with = "tori", required_unless_present = "tori")]
    census: Option<String>,
    /// Comma-free list such as `T1 T2 T3 T2,7`.
    #[arg(long, num_args = 3.., value_delimiter = ' ')]
    tori: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Format::Facets)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    /// Facet file or JSON; `-` reads standard input.
    #[arg(default_value = "-")]
    input: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(default_value = "-")]
    input: PathBuf,
    #[arg(long)]
    dim: usize,
    #[arg(long, value_enum, default_value_t = Report::Text)]
    report: Report,
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
}

#[derive(Args)]
struct RecognizeArgs {
    #[arg(long = "in", default_value = "-")]
    input: PathBuf,
    #[arg(long, default_value_t = 3)]
    dim: usize,
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
    /// Write the certificate here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CharfunCommand {
    /// Integer solutions of a polygon's characteristic conditions.
    Enumerate {
        #[arg(long, value_parser = parse_polygon)]
        polygon: Polygon,
        /// Range for `k` and `l`, e.g. `-3..3`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        bounds: Option<RangeInclusive<i64>>,
        #[arg(long)]
        complete_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Lens parameters of the sector between two vectors, e.g. `--xi=-1,0 --xj=1,3`.
    Lens {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        xi: (i64, i64),
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
        xj: (i64, i64),
    },
}

#[derive(Args)]
struct CensusArgs {
    /// Key pattern; `*` matches any run of characters.
    #[arg(long, default_value = "*")]
    filter: String,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
}

fn parse_polygon(s: &str) -> Result<Polygon, String> {
    s.parse().map_err(|e: quasitri::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let b = b.trim_start_matches('=');
    let lo = a.trim().parse::<i64>().map_err(|e| e.to_string())?;
    let hi = b.trim().parse::<i64>().map_err(|e| e.to_string())?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn parse_vector(s: &str) -> Result<(i64, i64), String> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = t
        .split_once(',')
        .ok_or_else(|| format!("expected A,B, got {s:?}"))?;
    Ok((
        a.trim().parse().map_err(|e| format!("{e}"))?,
        b.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

/// Outcome of a command that checks something.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn header(cli: &Cli, input: Option<&[u8]>) {
    let hash = match input {
        Some(bytes) => format!("sha256:{:x}", Sha256::digest(bytes)),
        None => "none".to_string(),
    };
    eprintln!(
        "# quasitri {} seed={} input={hash}",
        env!("CARGO_PKG_VERSION"),
        cli.seed
    );
}

fn read_input(path: &Path) -> Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .context("reading standard input")?;
        Ok(buf)
    } else {
        fs::read(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load(cli: &Cli, path: &Path) -> Result<SimplicialComplex> {
    let bytes = read_input(path)?;
    header(cli, Some(&bytes));
    let text = String::from_utf8(bytes).context("input is not UTF-8")?;
    Ok(parse_any(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing standard output"),
    }
}

fn render(x: &SimplicialComplex, format: Format) -> String {
    match format {
        Format::Facets => to_facet_text(x),
        Format::Json => to_json(x) + "\n",
    }
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn run(cli: &Cli) -> Result<Outcome> {
    let opts = |budget| ReductionOptions {
        budget,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Catalog(CatalogCommand::List {
            max_n,
            json: as_json,
        }) => {
            header(cli, None);
            catalog_list(*max_n, *as_json)?;
            Ok(Outcome::Pass)
        }
        Command::Catalog(CatalogCommand::Dump { id, format, out }) => {
            header(cli, None);
            let x = match id.strip_prefix('B').and_then(|r| r.split_once(',')) {
                Some((f, n)) => ball(f.parse()?, n.parse()?)?,
                None if id == "T" => seven_vertex_torus(),
                None => resolve(id.parse()?)?.complex.clone(),
            };
            emit(out.as_deref(), &render(&x, *format))?;
            Ok(Outcome::Pass)
        }
        Command::Assemble(a) => {
            header(cli, None);
            let spec = match (&a.census, &a.tori) {
                (Some(key), _) => census_spec(key)?,
                (None, Some(t)) => AssemblySpec::new(
                    t.iter()
                        .map(|s| s.parse())
                        .collect::<quasitri::Result<Vec<TorusId>>>()?,
                )?,
                (None, None) => bail!("give --census or --tori"),
            };
            let x = build_equilibrium(&spec)?;
            emit(a.out.as_deref(), &render(&x, a.format))?;
            Ok(Outcome::Pass)
        }
        Command::Glue {
            a,
            b,
            json: as_json,
            out,
        } => {
            header(cli, None);
            let r = glue_tori(a.parse()?, b.parse()?)?;
            if let Some(p) = out {
                emit(Some(p), &to_facet_text(&r.complex))?;
            }
            if *as_json {
                emit(None, &json(&r)?)?;
            } else {
                emit(
                    None,
                    &format!(
                        "{} ∪ {}: {} ({}, |det| = {})\n",
                        r.a, r.b, r.identified, r.homology, r.predicted_order
                    ),
                )?;
            }
            Ok(if r.consistent() {
                Outcome::Pass
            } else {
                Outcome::Fail
            })
        }
        Command::Verify(v) => {
            let x = load(cli, &v.input)?;
            verify(cli, &x, v, opts(v.budget))
        }
        Command::Homology(h) => {
            let x = load(cli, &h.input)?;
            let profile = homology(&x);
            if h.json {
                emit(None, &json(&profile)?)?;
            } else {
                emit(None, &format!("{profile}\n"))?;
            }
            Ok(Outcome::Pass)
        }
        Command::Recognize(r) => {
            let x = load(cli, &r.input)?;
            if r.dim != 3 || x.dim() != 3 {
                bail!(
                    "recognition needs a 3-dimensional complex (got dimension {})",
                    x.dim()
                );
            }
            let cert = bistellar_reduce(&x, r.budget, cli.seed)?;
            emit(r.out.as_deref(), &json(&cert)?)?;
            eprintln!(
                "{}: {} moves, terminal f-vector {:?}",
                if cert.certified() {
                    "certified sphere"
                } else {
                    "budget exhausted"
                },
                cert.moves.len(),
                cert.terminal.f_vector().0
            );
            Ok(if cert.certified() {
                Outcome::Pass
            } else {
                Outcome::Fail
            })
        }
        Command::Charfun(CharfunCommand::Enumerate {
            polygon,
            bounds,
            complete_only,
            json: as_json,
        }) => {
            header(cli, None);
            let mut b = Bounds::default_for(*polygon);
            if let Some(r) = bounds {
                b.k = r.clone();
                b.l = r.clone();
            }
            let sols: Vec<Solution> = enumerate(*polygon, &b)
                .into_iter()
                .filter(|s| s.complete || !complete_only)
                .collect();
            if *as_json {
                emit(None, &json(&sols)?)?;
            } else {
                let mut s = String::new();
                for x in &sols {
                    let p: Vec<String> = x.params.iter().map(|v| v.to_string()).collect();
                    writeln!(
                        s,
                        "k={:<3} l={:<3} params=({}) {} {}",
                        x.k,
                        x.l,
                        p.join(","),
                        x.pair,
                        if x.complete { "complete" } else { "incomplete" }
                    )?;
                }
                writeln!(s, "{} solutions", sols.len())?;
                emit(None, &s)?;
            }
            Ok(Outcome::Pass)
        }
        Command::Charfun(CharfunCommand::Lens { xi, xj }) => {
            header(cli, None);
            let l = lens_parameters(*xi, *xj)?;
            emit(None, &format!("{l}\n"))?;
            Ok(Outcome::Pass)
        }
        Command::Census(c) => {
            header(cli, None);
            census(cli, c, opts(c.budget))
        }
    }
}

fn catalog_list(max_n: u32, as_json: bool) -> Result<()> {
    #[derive(Serialize)]
    struct Row {
        id: String,
        family: u8,
        killed: (i64, i64),
        f0: usize,
        facets: usize,
    }
    let mut ids: Vec<TorusId> = (1..=3).map(TorusId::Base).collect();
    for j in 1..=9 {
        ids.extend((0..=max_n).map(|n| TorusId::indexed(j, n)));
    }
    let rows = ids
        .iter()
        .map(|&id| {
            let e = resolve(id)?;
            Ok(Row {
                id: id.to_string(),
                family: id.family(),
                killed: e.killed,
                f0: e.f0,
                facets: e.complex.num_facets(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if as_json {
        return emit(None, &json(&rows)?);
    }
    let mut s = format!(
        "{:<7} {:>6} {:>8} {:>3} {:>6}\n",
        "id", "family", "killed", "f0", "facets"
    );
    for r in rows {
        let k = format!("({},{})", r.killed.0, r.killed.1);
        writeln!(
            s,
            "{:<7} {:>6} {:>8} {:>3} {:>6}",
            r.id, r.family, k, r.f0, r.facets
        )?;
    }
    emit(None, &s)
}

#[derive(Serialize)]
struct ManifoldSummary<'a> {
    f_vector: FVector,
    euler: i64,
    homology: HomologyProfile,
    links: &'a [LinkReport],
}

fn verify(
    cli: &Cli,
    x: &SimplicialComplex,
    v: &VerifyArgs,
    opts: ReductionOptions,
) -> Result<Outcome> {
    let (summary_links, f_vector, euler, profile) = if v.dim == 4 {
        let r = verify_closed_4manifold(x, opts)?;
        (r.links, r.f_vector, r.euler, r.homology)
    } else {
        if x.dim() != v.dim as isize {
            bail!("complex has dimension {}, expected {}", x.dim(), v.dim);
        }
        let r = is_closed_manifold(x, v.dim, opts)?;
        (r.links, x.f_vector(), x.euler_characteristic(), homology(x))
    };
    let report = quasitri::recognition::ManifoldReport {
        dim: v.dim,
        links: summary_links,
    };
    let ok = report.passes(cli.strict);
    let summary = ManifoldSummary {
        f_vector,
        euler,
        homology: profile,
        links: &report.links,
    };
    match v.report {
        Report::Json => emit(None, &json(&summary)?)?,
        Report::Text => {
            let mut s = String::new();
            writeln!(s, "f-vector: {:?}", summary.f_vector.0)?;
            writeln!(s, "euler: {}", summary.euler)?;
            writeln!(s, "homology: {}", summary.homology)?;
            let bad: Vec<&LinkReport> = report
                .links
                .iter()
                .filter(|l| {
                    !matches!(
                        l.status,
                        quasitri::recognition::LinkStatus::Sphere
                            | quasitri::recognition::LinkStatus::Certified
                    )
                })
                .collect();
            writeln!(
                s,
                "links: {} vertices, {} not certified",
                report.links.len(),
                bad.len()
            )?;
            for l in bad {
                writeln!(s, "  {}: {:?}", l.vertex, l.status)?;
            }
            writeln!(
                s,
                "{}",
                if ok {
                    "closed manifold"
                } else {
                    "NOT verified"
                }
            )?;
            emit(None, &s)?;
        }
    }
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

fn census(cli: &Cli, c: &CensusArgs, opts: ReductionOptions) -> Result<Outcome> {
    let entries = select(&c.filter)?;
    let reports: Vec<CensusReport> = verify_census(&entries, opts)
        .into_iter()
        .collect::<quasitri::Result<_>>()?;
    let all_ok = reports.iter().all(|r| r.passes(cli.strict));
    if c.json {
        emit(None, &json(&reports)?)?;
        return Ok(if all_ok { Outcome::Pass } else { Outcome::Fail });
    }
    let mut s = format!(
        "{:<5} {:>2} {:>3} {:>6} {:>3} {:>5} {:>7} {:>7} {:>4} {:>6}  {}\n",
        "key", "m", "f0", "stated", "chi", "H2", "links", "sectors", "data", "status", "note"
    );
    let mut details = String::new();
    for (r, e) in reports.iter().zip(&entries) {
        let mut row = String::new();
        let certified =
            r.manifold.links.len() - r.manifold.uncertified().len() - r.manifold.failed().len();
        let bad_sectors: Vec<_> = r.sectors.iter().filter(|x| !x.consistent()).collect();
        write!(
            row,
            "{:<5} {:>2} {:>3} {:>6} {:>3} {:>5} {:>7} {:>7} {:>4} {:>6}  {}",
            r.key,
            r.m,
            r.f0,
            r.expected_f0,
            r.manifold.euler,
            r.manifold.homology.degree(2).to_string(),
            format!("{certified}/{}", r.manifold.links.len()),
            format!(
                "{}/{}",
                r.sectors.len() - bad_sectors.len(),
                r.sectors.len()
            ),
            if r.realizes_data && r.families_match {
                "ok"
            } else {
                "no"
            },
            if r.passes(cli.strict) { "PASS" } else { "FAIL" },
            r.note.as_deref().unwrap_or("")
        )?;
        s.push_str(row.trim_end());
        s.push('\n');
        for x in &bad_sectors {
            writeln!(
                details,
                "{}: sector ({},{}) has lens parameters {} but the glued tori have |H1| = {}",
                r.key, x.i, x.j, x.lens, x.h1_order
            )?;
        }
        if !r.realizes_data {
            let alt = realized_data(e, &Bounds::default_for(e.polygon));
            let alt: Vec<String> = alt
                .iter()
                .map(|(k, l, p)| format!("(k,l)=({k},{l}) params {p:?}"))
                .collect();
            writeln!(
                details,
                "{}: the tori do not realize the stated characteristic data; they realize {}",
                r.key,
                if alt.is_empty() {
                    "nothing within the default bounds".to_string()
                } else {
                    alt.join(", ")
                }
            )?;
        }
    }
    let passed = reports.iter().filter(|r| r.passes(cli.strict)).count();
    writeln!(s, "{passed}/{} entries pass", reports.len())?;
    s.push_str(&details);
    emit(None, &s).map_err(|e| anyhow!(e))?;
    Ok(if all_ok { Outcome::Pass } else { Outcome::Fail })
}
