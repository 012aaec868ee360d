//! `heron`: exact lattice embedding of Heronian triangles and tetrahedra.
//!
//! Edge hexads are always given in the sequential order
//! `[QP,RP,RQ,SP,SQ,SR]` — the single most common input mistake.
//!
//! Exit codes: 0 success, 1 domain error (not Heronian, improper, GCD
//! abort), 2 usage error, 3 budget exhausted.

use std::collections::BTreeSet;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use heronian::canonical::{strong_canonical_points, weak_canonical_points, CanonicalEmbedding};
use heronian::embed::{self, LatticeEmbedding};
use heronian::io::{parse_edges, parse_hexad, parse_triple, parse_vertices, ParsedEdges};
use heronian::pose::{AxialPose, SourceEdges};
use heronian::search;
use heronian::{EdgeHexad, Error, Int, Quat, VertexPerm};

#[derive(Parser)]
#[command(
    name = "heron",
    about = "Exact lattice embedding of Heronian triangles and tetrahedra",
    long_about = "Embeds Heronian triangles into Z^2 and Heronian tetrahedra into Z^3 with \
exact integer arithmetic, canonicalizes embeddings modulo lattice symmetry, searches \
exhaustively for all embeddings, and enumerates Heronian simplices.\n\n\
Edge hexads list the six edges in the sequential order [QP,RP,RQ,SP,SQ,SR]."
)]
struct Cli {
    /// Cap the number of parallel worker threads
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output format: human-readable text or JSON records
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CanonMode {
    Raw,
    Weak,
    Strong,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Triangle,
    Tetra,
}

#[derive(Args)]
struct EdgesArg {
    /// Comma-separated edge lengths: u,v,w or QP,RP,RQ,SP,SQ,SR
    #[arg(long)]
    edges: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the rational axial pose (one bracketed s,p,q,r vertex per line)
    Pose {
        #[command(flatten)]
        edges: EdgesArg,
        /// Vertex permutation applied before posing, e.g. QRPS
        #[arg(long, default_value = "PQRS")]
        perm: String,
    },
    /// Embed a Heronian triangle congruently in the plane lattice
    Embed2 {
        #[command(flatten)]
        edges: EdgesArg,
        #[arg(long, value_enum, default_value_t = CanonMode::Raw)]
        canon: CanonMode,
    },
    /// Embed a Heronian tetrahedron congruently in the space lattice
    Embed3 {
        #[command(flatten)]
        edges: EdgesArg,
        /// Vertex permutation applied before posing, e.g. QRPS
        #[arg(long, default_value = "PQRS")]
        perm: String,
        #[arg(long, value_enum, default_value_t = CanonMode::Raw)]
        canon: CanonMode,
    },
    /// All embeddings of a tetrahedron constructible via the GCD procedure
    Family {
        #[command(flatten)]
        edges: EdgesArg,
    },
    /// Canonicalize an embedding read from --file or stdin
    Canon {
        /// Embedding file (one bracketed 1,x,y,z vertex per line); stdin if absent
        #[arg(long)]
        file: Option<String>,
        #[arg(long, value_enum, default_value_t = Strength::Strong)]
        strength: Strength,
    },
    /// Exhaustive search for all essentially distinct embeddings
    Search {
        #[command(flatten)]
        edges: EdgesArg,
        /// Node budget for the lattice scan (default: HERON_BUDGET or unlimited)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Brute-force search for pentatope embeddings in Z^4
    SearchZ4 {
        /// Ten squared edge lengths QP,RP,RQ,SP,SQ,SR,TP,TQ,TR,TS
        #[arg(long)]
        squared_edges: String,
        /// Coordinate bound; must be at least the longest edge
        #[arg(long)]
        bound: i64,
    },
    /// Enumerate Heronian triangles or tetrahedra up to a diameter
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Maximum edge length
        #[arg(long)]
        max: u64,
        /// Emit only primitive cases (edge GCD 1)
        #[arg(long)]
        primitive: bool,
        /// Resume file holding the last emitted case
        #[arg(long)]
        checkpoint: Option<String>,
    },
    /// Verify an embedding against edge lengths (exit 0 iff congruent)
    Verify {
        #[command(flatten)]
        edges: EdgesArg,
        /// Embedding file; stdin if absent
        #[arg(long)]
        file: Option<String>,
    },
    /// Solve x^2 + y^2 + z^2 = w^2 completely
    Squares {
        #[arg(long)]
        w: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strength {
    Weak,
    Strong,
}

/// JSON record for one embedding.
#[derive(Serialize)]
struct EmbeddingRecord {
    edges: Vec<String>,
    permutation: String,
    rotors: Vec<[String; 4]>,
    vertices: Vec<[String; 4]>,
    canonical: &'static str,
}

fn main() -> ExitCode {
    // die quietly when a pipe closes early, like other line-oriented tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("heron: cannot configure {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("heron: {e}");
            let code = match e {
                Error::BudgetExhausted { .. } => 3,
                Error::Parse(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Pose { edges, perm } => {
            let pose = match parse_edges(&edges.edges)? {
                ParsedEdges::Triangle(t) => AxialPose::of_triangle(&t)?,
                ParsedEdges::Tetra(h) => AxialPose::of_tetra(&h, VertexPerm::parse(perm)?)?,
            };
            for v in &pose.vertices {
                println!("{v}");
            }
            Ok(())
        }
        Command::Embed2 { edges, canon } => {
            let t = parse_triple(&edges.edges)?;
            let emb = embed::embed_triangle(&t)?;
            print_embedding(cli.format, &emb, *canon)
        }
        Command::Embed3 { edges, perm, canon } => {
            let h = parse_hexad(&edges.edges)?;
            let emb = embed::embed_tetrahedron(&h, VertexPerm::parse(perm)?)?;
            print_embedding(cli.format, &emb, *canon)
        }
        Command::Family { edges } => {
            let h = parse_hexad(&edges.edges)?;
            let fam = embed::gcd_family(&h)?;
            print_form_sets(cli.format, &h, &fam.strong_forms, &fam.weak_forms)
        }
        Command::Canon { file, strength } => {
            let vertices = parse_vertices(&read_input(file.as_deref())?)?;
            let pts: Vec<[Int; 3]> = vertices
                .iter()
                .map(|v| {
                    if v.s == Int::from(1) {
                        Ok(heronian::canonical::lattice_coords(v))
                    } else {
                        Err(Error::Parse(
                            "canon expects lattice vertices [1,x,y,z]".into(),
                        ))
                    }
                })
                .collect::<Result<_, Error>>()?;
            let (label, form) = match strength {
                Strength::Weak => ("weak", weak_canonical_points(&pts)),
                Strength::Strong => ("strong", strong_canonical_points(&pts)),
            };
            println!("# canonical {label}");
            print_canonical_lines(&form);
            Ok(())
        }
        Command::Search { edges, budget } => {
            let h = parse_hexad(&edges.edges)?;
            let budget = budget.or_else(env_budget);
            let out = search::exhaustive_embeddings(&h, budget)?;
            print_form_sets(cli.format, &h, &out.strong_forms, &out.weak_forms)
        }
        Command::SearchZ4 {
            squared_edges,
            bound,
        } => {
            let vals: Vec<Int> = squared_edges
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<Int>()
                        .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
                })
                .collect::<Result<_, Error>>()?;
            let arr: [Int; 10] = vals
                .try_into()
                .map_err(|_| Error::Parse("need exactly 10 squared edge lengths".into()))?;
            let spec = search::PentatopeSpec::new(arr)?;
            let found = search::search_z4(&spec, *bound)?;
            println!("embeddings {}", found.len());
            for emb in &found {
                let points: Vec<String> = emb
                    .iter()
                    .map(|p| format!("[{},{},{},{}]", p[0], p[1], p[2], p[3]))
                    .collect();
                println!("{}", points.join(" "));
            }
            Ok(())
        }
        Command::Enumerate {
            kind,
            max,
            primitive,
            checkpoint,
        } => {
            let resume = match checkpoint {
                Some(path) => std::fs::read_to_string(path).ok().and_then(|s| {
                    let t = s.trim().to_string();
                    (!t.is_empty()).then_some(t)
                }),
                None => None,
            };
            let lines: Vec<String> = match kind {
                Kind::Triangle => search::enumerate_heronian_triangles(*max, *primitive)?
                    .iter()
                    .map(|t| t.to_string())
                    .collect(),
                Kind::Tetra => search::enumerate_heronian_tetrahedra(*max, *primitive)?
                    .iter()
                    .map(|h| h.to_string())
                    .collect(),
            };
            let mut emitting = resume.is_none();
            for line in &lines {
                if !emitting {
                    if Some(line.as_str()) == resume.as_deref() {
                        emitting = true;
                    }
                    continue;
                }
                println!("{line}");
                if let Some(path) = checkpoint {
                    std::fs::write(path, format!("{line}\n"))
                        .map_err(|e| Error::Parse(format!("checkpoint write failed: {e}")))?;
                }
            }
            Ok(())
        }
        Command::Verify { edges, file } => {
            let vertices = parse_vertices(&read_input(file.as_deref())?)?;
            let source = match parse_edges(&edges.edges)? {
                ParsedEdges::Triangle(t) => SourceEdges::Triangle(t),
                ParsedEdges::Tetra(h) => SourceEdges::Tetra(h),
            };
            if embed::realizes_edges(&vertices, &source) {
                println!("ok");
                Ok(())
            } else {
                Err(Error::NotLattice)
            }
        }
        Command::Squares { w } => {
            for s in search::solve_three_squares(&Int::from(*w))? {
                println!("{},{},{},{}", s.x, s.y, s.z, s.w);
            }
            Ok(())
        }
    }
}

fn env_budget() -> Option<u64> {
    std::env::var("HERON_BUDGET").ok()?.trim().parse().ok()
}

fn read_input(file: Option<&str>) -> Result<String, Error> {
    match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}"))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn print_canonical_lines(form: &CanonicalEmbedding) {
    for v in &form.vertices {
        println!("[1,{},{},{}]", v[0], v[1], v[2]);
    }
}

fn print_embedding(format: Format, emb: &LatticeEmbedding, canon: CanonMode) -> Result<(), Error> {
    if format == Format::Records {
        let (vertices, label): (Vec<Quat>, _) = match canon {
            CanonMode::Raw => (emb.vertices.clone(), "raw"),
            CanonMode::Weak => (canonical_to_quats(&emb.weak_canonical()), "weak"),
            CanonMode::Strong => (canonical_to_quats(&emb.strong_canonical()), "strong"),
        };
        println!(
            "{}",
            serde_json::to_string(&record(emb, &vertices, label)).unwrap()
        );
        return Ok(());
    }
    match canon {
        CanonMode::Raw => {
            for v in &emb.vertices {
                println!("{v}");
            }
        }
        CanonMode::Weak => print_canonical_lines(&emb.weak_canonical()),
        CanonMode::Strong => print_canonical_lines(&emb.strong_canonical()),
    }
    Ok(())
}

fn canonical_to_quats(form: &CanonicalEmbedding) -> Vec<Quat> {
    form.vertices
        .iter()
        .map(|v| Quat::new(Int::from(1), v[0].clone(), v[1].clone(), v[2].clone()))
        .collect()
}

fn quat_strings(v: &Quat) -> [String; 4] {
    [
        v.s.to_string(),
        v.p.to_string(),
        v.q.to_string(),
        v.r.to_string(),
    ]
}

fn record(emb: &LatticeEmbedding, vertices: &[Quat], canonical: &'static str) -> EmbeddingRecord {
    let edges = match &emb.source {
        SourceEdges::Triangle(t) => t.edges().iter().map(|e| e.to_string()).collect(),
        SourceEdges::Tetra(h) => h.edges().iter().map(|e| e.to_string()).collect(),
    };
    EmbeddingRecord {
        edges,
        permutation: emb.permutation.to_string(),
        rotors: emb.rotors.iter().map(quat_strings).collect(),
        vertices: vertices.iter().map(quat_strings).collect(),
        canonical,
    }
}

fn print_form_sets(
    format: Format,
    h: &EdgeHexad,
    strong: &BTreeSet<CanonicalEmbedding>,
    weak: &BTreeSet<CanonicalEmbedding>,
) -> Result<(), Error> {
    if format == Format::Records {
        #[derive(Serialize)]
        struct FormSets {
            edges: Vec<String>,
            strong: Vec<Vec<[String; 4]>>,
            weak: Vec<Vec<[String; 4]>>,
        }
        let encode = |set: &BTreeSet<CanonicalEmbedding>| {
            set.iter()
                .map(|f| canonical_to_quats(f).iter().map(quat_strings).collect())
                .collect()
        };
        let out = FormSets {
            edges: h.edges().iter().map(|e| e.to_string()).collect(),
            strong: encode(strong),
            weak: encode(weak),
        };
        println!("{}", serde_json::to_string(&out).unwrap());
        return Ok(());
    }
    println!("strong {}", strong.len());
    for f in strong {
        println!("{f}");
    }
    println!("weak {}", weak.len());
    for f in weak {
        println!("{f}");
    }
    Ok(())
}
