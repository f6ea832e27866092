use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kn_embed::certificate::{check, Certificate, Digest};
use kn_embed::currents::format::parse_cur;
use kn_embed::currents::index3::{derive_index3, parse_seed};
use kn_embed::currents::derive::derive_system;
use kn_embed::distribution::{format_type, parse_type};
use kn_embed::exec::Exec;
use kn_embed::fixtures::FixtureStore;
use kn_embed::recipes::construct::construct;
use kn_embed::recipes::maxgenus::xuong_max_genus;
use kn_embed::rotfmt::{parse_rot, write_rot};
use kn_embed::rules::{check_rule_r, check_rule_r_star};
use kn_embed::search::classify::classify_complete;
use kn_embed::search::graph::parse_graph;
use kn_embed::search::triangular::{find_triangular, Outcome, SearchSpec, DEFAULT_BUDGET};
use kn_embed::surgery::script::Script;
use kn_embed::{Embedding, Error, Result};

#[derive(Parser)]
#[command(name = "kn-embed", version, about = "Build and check embeddings of complete graphs given as rotation systems")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Run searches and enumerations on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Trace a .rot file or check a certificate.
    Verify { file: PathBuf },
    /// Turn a .cur current graph or an index 3 .seed into a .rot.
    Derive { file: PathBuf },
    /// Build K_n of a given type and print its certificate.
    Construct {
        #[arg(long)]
        n: usize,
        /// Nontriangular face lengths, e.g. `6`, `5,4` or `()`.
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "fixtures")]
        fixtures: PathBuf,
    },
    /// Replay a surgery script on a .rot file and print the result.
    Surgery {
        file: PathBuf,
        #[arg(long)]
        script: PathBuf,
    },
    /// Enumerate all rotation systems of K5.
    ClassifyK5,
    /// Look for a triangular embedding of a named graph.
    Search {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        nonorientable: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// A maximum genus embedding of K_n with one or two faces.
    Maxgenus {
        #[arg(long)]
        n: u32,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct Summary {
    vertices: usize,
    edges: usize,
    faces: usize,
    surface: String,
    euler_characteristic: i64,
    embedding_type: String,
    distribution: BTreeMap<usize, usize>,
    triangular: bool,
    rule_r_star: Option<bool>,
    rule_r: bool,
    system: String,
}

impl Summary {
    fn of(e: &Embedding) -> Self {
        let d = Digest::of(e);
        Summary {
            vertices: d.vertices,
            edges: d.edges,
            faces: d.faces,
            surface: e.surface.to_string(),
            euler_characteristic: e.surface.euler_characteristic(),
            embedding_type: format_type(&e.embedding_type()),
            distribution: d.distribution,
            triangular: e.is_triangular(),
            rule_r_star: e.surface.orientable.then(|| check_rule_r_star(&e.sys)),
            rule_r: check_rule_r(&e.sys),
            system: d.system,
        }
    }

    fn text(&self) -> String {
        let dist: Vec<String> = self.distribution.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        let mut s = format!(
            "V {}  E {}  F {}\nsurface {} (chi {})\ntype {}\nfaces {}\ntriangular {}\n",
            self.vertices,
            self.edges,
            self.faces,
            self.surface,
            self.euler_characteristic,
            self.embedding_type,
            dist.join(" "),
            self.triangular
        );
        if let Some(r) = self.rule_r_star {
            s.push_str(&format!("rule R* {}\n", if r { "pass" } else { "fail" }));
        }
        s.push_str(&format!("rule R {}\nsystem {}\n", if self.rule_r { "pass" } else { "fail" }, self.system));
        s
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Text => print!("{}", text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
    }
}

#[derive(Serialize)]
struct Built<'a> {
    summary: Summary,
    rot: &'a str,
}

fn run(cli: Cli) -> Result<()> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Verify { file } => {
            let text = read(&file)?;
            if text.trim_start().starts_with("certificate") {
                let cert = check(&text)?;
                let s = Summary::of(&cert.output);
                emit(fmt, &s, || format!("certificate ok: K{} type {}\n{}", cert.n, format_type(&cert.target), s.text()));
            } else {
                let e = Embedding::new(parse_rot(&text)?)?;
                let s = Summary::of(&e);
                emit(fmt, &s, || s.text());
            }
        }
        Cmd::Derive { file } => {
            let text = read(&file)?;
            let sys = match file.extension().and_then(|x| x.to_str()) {
                Some("cur") => {
                    let cg = parse_cur(&text)?;
                    let report = cg.validate()?;
                    if !report.is_valid() {
                        let bad: Vec<String> = report.checks.iter().filter(|c| !c.ok).map(|c| format!("{}: {}", c.name, c.problems.join("; "))).collect();
                        return Err(Error::Verification(format!("current graph violates {}", bad.join(" | "))));
                    }
                    derive_system(&cg.trace_log()?, cg.modulus, &cg.vortex_info())?
                }
                Some("seed") => derive_index3(&parse_seed(&text)?)?,
                _ => return Err(Error::Domain("expected a .cur or .seed file".into())),
            };
            let rot = write_rot(&sys);
            let e = Embedding::new(sys)?;
            emit(fmt, &Built { summary: Summary::of(&e), rot: &rot }, || rot.clone());
        }
        Cmd::Construct { n, ty, fixtures } => {
            let t = parse_type(&ty)?;
            let store = FixtureStore::open(&fixtures)?;
            let built = construct(n, &t, &store, exec)?;
            let cert = Certificate::new(n, &t, &built);
            let text = cert.to_text();
            #[derive(Serialize)]
            struct Out<'a> {
                n: usize,
                target: String,
                digest: &'a Digest,
                certificate: &'a str,
            }
            let out = Out { n, target: format_type(&t), digest: &cert.digest, certificate: &text };
            emit(fmt, &out, || text.clone());
        }
        Cmd::Surgery { file, script } => {
            let e = Embedding::new(parse_rot(&read(&file)?)?)?;
            let s = Script::parse(&read(&script)?)?;
            let out = s.replay(&e)?;
            let rot = write_rot(&out.sys);
            emit(fmt, &Built { summary: Summary::of(&out), rot: &rot }, || rot.clone());
        }
        Cmd::ClassifyK5 => {
            let c = classify_complete(5, exec)?;
            let min = c.min_types();
            let all = kn_embed::distribution::types_for_excess(5);
            let names = |v: Vec<&Vec<usize>>| v.into_iter().map(|t| format_type(t)).collect::<Vec<_>>();
            let (present, absent): (Vec<_>, Vec<_>) = all.iter().partition(|t| min.contains(*t));
            #[derive(Serialize)]
            struct Out {
                systems: u64,
                min_genus: u64,
                by_genus: BTreeMap<u64, BTreeMap<String, u64>>,
                realized: Vec<String>,
                absent: Vec<String>,
            }
            let out = Out {
                systems: c.systems,
                min_genus: c.min_genus,
                by_genus: c.by_genus.iter().map(|(g, m)| (*g, m.iter().map(|(t, k)| (format_type(t), *k)).collect())).collect(),
                realized: names(present),
                absent: names(absent),
            };
            emit(fmt, &out, || {
                let mut s = format!("K5: {} rotation systems, minimum genus {}\n", c.systems, c.min_genus);
                for (g, types) in &c.by_genus {
                    let parts: Vec<String> = types.iter().map(|(t, k)| format!("{} x{k}", format_type(t))).collect();
                    s.push_str(&format!("genus {g}: {}\n", parts.join(", ")));
                }
                s.push_str(&format!("realized at genus {}: {}\nabsent: {}\n", c.min_genus, out.realized.join(" "), out.absent.join(" ")));
                s
            });
        }
        Cmd::Search { graph, nonorientable, budget } => {
            let spec = SearchSpec { graph: parse_graph(&graph)?, orientable: !nonorientable, budget };
            #[derive(Serialize)]
            struct Out {
                graph: String,
                status: &'static str,
                rot: Option<String>,
            }
            let (status, rot) = match find_triangular(&spec, exec)? {
                Outcome::Found(sys) => ("found", Some(write_rot(&sys))),
                Outcome::Exhausted => ("exhausted", None),
                Outcome::Budget => ("budget", None),
            };
            let out = Out { graph, status, rot };
            emit(fmt, &out, || out.rot.clone().unwrap_or_else(|| format!("status: {}\n", out.status)));
            if out.rot.is_none() {
                return Err(Error::Verification(format!("no triangulation found ({status})")));
            }
        }
        Cmd::Maxgenus { n } => {
            let built = xuong_max_genus(n)?;
            let rot = write_rot(&built.output.sys);
            emit(fmt, &Built { summary: Summary::of(&built.output), rot: &rot }, || {
                format!("{}{}", Summary::of(&built.output).text(), rot)
            });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
