//! Command-line front end: exact norms, P-values, separating functions, and
//! the finite/tame/wild classifiers over kind-tagged JSON documents.
//!
//! Exit codes: 0 success, 1 a wild / not-finitely-represented verdict,
//! 2 input error, 3 enumeration cap exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use relnorm::doc::Document;
use relnorm::dyadic::{ClassifyOptions, CondAScope, DyadicVerdict, EdgeOrder, NotFiniteReason};
use relnorm::exact::{ExtNat, Rat, RatOrInf};
use relnorm::graph::{catalog, Catalog, GraphClass};
use relnorm::oracle;
use relnorm::poset::faithful_poset_scan;
use relnorm::quiver::QuiverVerdict;
use relnorm::rho::{mu3, rho_sum};
use relnorm::{Error, RepType};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "relnorm", version, about = "Exact norms of relations and representation-type classifiers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphMode {
    Integral,
    Coxeter,
}

#[derive(Clone, Copy, ValueEnum)]
enum EdgeOrderArg {
    Containment,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum CondAScopeArg {
    All,
    Long,
}

#[derive(Args)]
struct CommonFlags {
    /// Enumeration cap on element counts.
    #[arg(long, default_value_t = 20)]
    cap: usize,
    /// Append decimal approximations to exact values.
    #[arg(long)]
    decimal: bool,
    /// Print witnesses (minimal vectors, failing tuples).
    #[arg(long)]
    witness: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exact norm of a relation document.
    Norm {
        file: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// P-value (reciprocal norm) of a relation or poset document.
    P {
        file: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// P-faithfulness of a relation or poset document.
    Faithful {
        file: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// The separating sum rho(n1, n2, ...); "inf" is allowed.
    Rho { args: Vec<String> },
    /// The polynomial mu(n1, n2, n3) with its infinity conventions.
    Mu {
        n1: String,
        n2: String,
        n3: String,
    },
    /// Classify a poset, eqposet, dyadic, graph or quiver document.
    Classify {
        file: String,
        /// Interpretation of graph documents.
        #[arg(long, value_enum, default_value_t = GraphMode::Integral)]
        mode: GraphMode,
        #[arg(long, value_enum, default_value_t = EdgeOrderArg::Containment)]
        edge_order: EdgeOrderArg,
        /// Scope of the bordered-mu condition on dyadic sets.
        #[arg(long = "cond-a-scope", value_enum, default_value_t = CondAScopeArg::All)]
        cond_a_scope: CondAScopeArg,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Print a classification catalog (dynkin, extended, coxeter-finite,
    /// coxeter-affine).
    Catalog {
        list: String,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// Scan all connected posets up to a size bound: every P-faithful one
    /// must be a chain or a uniform wattle.
    ScanFaithful {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Scan all dyadic sets up to a size bound for critical ones and report
    /// whether their biequivalences are transitive.
    CriticalScan {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Independent numeric oracles.
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Floating-point upper bound on the norm by multistart descent.
    Norm {
        file: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeCap { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn load(file: &str) -> Result<Document, Error> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Parse(format!("cannot read {file}: {e}")))?;
    Document::parse(&text)
}

fn with_decimal(r: &Rat, decimal: bool) -> String {
    if decimal {
        format!("{} ({})", r, r.to_f64())
    } else {
        format!("{}", r)
    }
}

fn parse_extnats(args: &[String]) -> Result<Vec<ExtNat>, Error> {
    args.iter().map(|s| s.parse()).collect()
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Norm { file, flags } => {
            let doc = load(&file)?;
            let rel = match &doc {
                Document::Relation(r) => r.to_relation()?,
                Document::Poset(p) => p.to_poset()?.to_relation(),
                _ => return Err(Error::Schema(format!("norm expects a relation, got {}", doc.kind()))),
            };
            let cert = rel.norm_with(flags.cap)?;
            println!("norm = {} ({})", cert.value, cert.value.to_f64());
            if flags.witness {
                let coords: Vec<String> = cert.witness.iter().map(|x| x.to_string()).collect();
                println!("minimal vector: ({})", coords.join(", "));
                let supp: Vec<String> = cert.support.iter().map(|s| s.to_string()).collect();
                println!("support: {{{}}}", supp.join(", "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::P { file, flags } => {
            let doc = load(&file)?;
            let rel = match &doc {
                Document::Relation(r) => r.to_relation()?,
                Document::Poset(p) => p.to_poset()?.to_relation(),
                _ => return Err(Error::Schema(format!("p expects a relation, got {}", doc.kind()))),
            };
            let p = rel.p_value_with(flags.cap)?;
            match &p.value {
                RatOrInf::Fin(v) => println!("P = {} ({})", v, v.to_f64()),
                RatOrInf::Inf => {
                    println!("P = inf");
                    println!("warning: the relation is not reflexive, so its norm is 0");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Faithful { file, .. } => {
            let doc = load(&file)?;
            let rel = match &doc {
                Document::Relation(r) => r.to_relation()?,
                Document::Poset(p) => p.to_poset()?.to_relation(),
                _ => return Err(Error::Schema(format!("faithful expects a relation, got {}", doc.kind()))),
            };
            let (ok, witness) = rel.is_p_faithful()?;
            if ok {
                println!("P-faithful: yes");
            } else {
                println!(
                    "P-faithful: no (removing element {} keeps P unchanged)",
                    witness.expect("witness accompanies failure")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rho { args } => {
            let values = parse_extnats(&args)?;
            println!("{}", rho_sum(&values));
            Ok(ExitCode::SUCCESS)
        }
        Command::Mu { n1, n2, n3 } => {
            let v = parse_extnats(&[n1, n2, n3])?;
            println!("{}", mu3(v[0], v[1], v[2]));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            file,
            mode,
            edge_order,
            cond_a_scope,
            flags,
        } => classify(&load(&file)?, mode, edge_order, cond_a_scope, &flags),
        Command::Catalog { list, bound } => {
            let which = match list.to_lowercase().as_str() {
                "i" | "dynkin" => Catalog::DynkinList,
                "ii" | "extended" => Catalog::ExtendedList,
                "iii" | "coxeter-finite" => Catalog::CoxeterFinite,
                "iv" | "coxeter-affine" => Catalog::CoxeterAffine,
                other => {
                    return Err(Error::Schema(format!(
                        "unknown catalog {other:?} (use I, II, III or IV)"
                    )))
                }
            };
            for (name, g) in catalog(which, bound) {
                let edges: Vec<String> = g
                    .edges()
                    .iter()
                    .map(|e| {
                        let w = match &e.f {
                            relnorm::graph::FWeight::Rational(r) if r == &Rat::one() => String::new(),
                            relnorm::graph::FWeight::Rational(r) => format!("({r})"),
                            relnorm::graph::FWeight::Inf => "(inf)".into(),
                            relnorm::graph::FWeight::Hat(h) => format!("({h})"),
                        };
                        format!("{}-{}{}", e.a, e.b, w)
                    })
                    .collect();
                println!("{name}: {} vertices; {}", g.len(), edges.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ScanFaithful { max_n } => {
            let report = faithful_poset_scan(max_n)?;
            println!(
                "checked {} connected posets up to {} elements",
                report.checked, max_n
            );
            println!(
                "P-faithful: {} chains, {} uniform wattles",
                report.faithful_chains, report.faithful_uniform_wattles
            );
            if report.counterexamples.is_empty() {
                println!("counterexamples: none");
                Ok(ExitCode::SUCCESS)
            } else {
                for p in &report.counterexamples {
                    println!("counterexample: covers {:?}", p.covers());
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::CriticalScan { max_n } => {
            let mut total = 0usize;
            let mut critical = 0usize;
            let mut intransitive = 0usize;
            for n in 1..=max_n {
                for d in relnorm::dyadic::all_dyadic_sets(n)? {
                    total += 1;
                    if d.is_critical()? {
                        critical += 1;
                        let transitive = d.inner().is_transitive();
                        if !transitive {
                            intransitive += 1;
                        }
                        println!(
                            "critical: {} points, covers {:?}, classes {:?}, transitive: {}",
                            d.len(),
                            d.poset().covers(),
                            d.inner().nontrivial_classes(),
                            transitive
                        );
                    }
                }
            }
            println!("scanned {total} dyadic sets up to {max_n} points; {critical} critical");
            println!("critical sets with intransitive biequivalence: {intransitive}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { what } => match what {
            OracleCommand::Norm { file, depth } => {
                let doc = load(&file)?;
                let rel = match &doc {
                    Document::Relation(r) => r.to_relation()?,
                    Document::Poset(p) => p.to_poset()?.to_relation(),
                    _ => {
                        return Err(Error::Schema(format!(
                            "oracle norm expects a relation, got {}",
                            doc.kind()
                        )))
                    }
                };
                let res = oracle::numeric_norm(&rel, depth)?;
                println!(
                    "numeric upper bound = {:.9} (sweeps = {}, last improvement = {:.3e})",
                    res.value, res.iterations, res.residual
                );
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

fn type_exit(t: RepType) -> ExitCode {
    if t == RepType::Wild {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn classify(
    doc: &Document,
    mode: GraphMode,
    edge_order: EdgeOrderArg,
    cond_a_scope: CondAScopeArg,
    flags: &CommonFlags,
) -> Result<ExitCode, Error> {
    match doc {
        Document::Poset(p) => {
            let poset = p.to_poset()?;
            let t = poset.classify_with(flags.cap)?;
            let rho = poset.rho_value_with(flags.cap)?;
            println!("poset: {t} (rho = {})", with_decimal(&rho, flags.decimal));
            if flags.witness {
                let crit: Vec<String> = poset
                    .contains_critical()
                    .into_iter()
                    .map(|(name, emb)| format!("{name} at {emb:?}"))
                    .collect();
                if !crit.is_empty() {
                    println!("critical subsets: {}", crit.join("; "));
                }
            }
            Ok(type_exit(t))
        }
        Document::Eqposet(e) => {
            let s = e.to_eqposet()?;
            let t = s.classify_with(flags.cap)?;
            let rho = s.rho_value_with(flags.cap)?;
            let mu = s.mu_value();
            println!(
                "eqposet: {t} (rho = {rho}, mu = {})",
                with_decimal(&mu, flags.decimal)
            );
            Ok(type_exit(t))
        }
        Document::Dyadic(dd) => {
            let d = dd.to_dyadic()?;
            let opts = ClassifyOptions {
                edge_order: match edge_order {
                    EdgeOrderArg::Containment => EdgeOrder::Containment,
                    EdgeOrderArg::Literal => EdgeOrder::Literal,
                },
                cond_a_scope: match cond_a_scope {
                    CondAScopeArg::All => CondAScope::AllEdges,
                    CondAScopeArg::Long => CondAScope::LongOnly,
                },
                cap: Some(flags.cap),
            };
            let verdict = d.classify_with(opts)?;
            let bounds = d.inner().necessary_bounds_hold()?;
            match &verdict {
                DyadicVerdict::Finite => {
                    println!("dyadic: finitely represented");
                    println!("necessary bounds (rho < 4 and mu < 4): {}", if bounds { "hold" } else { "violated" });
                    Ok(ExitCode::SUCCESS)
                }
                DyadicVerdict::NotFinite(reason) => {
                    let why = match reason {
                        NotFiniteReason::UnderlyingRho => {
                            "the underlying poset-with-equivalence is not finite".to_string()
                        }
                        NotFiniteReason::BorderedMu { edge, bordering, mu } => format!(
                            "bordered mu = {mu} at edge ({}, {}) with bordering {:?}",
                            edge.x,
                            edge.y,
                            bordering.elements()
                        ),
                        NotFiniteReason::EquippedSqueeze { edge, witness } => format!(
                            "edge ({}, {}) with unit interval and equipment weight 3 admits outside point {witness}",
                            edge.x, edge.y
                        ),
                        NotFiniteReason::ChainedStrips { first, second } => format!(
                            "chained edges ({}, {}) and ({}, {}) carry nonzero equipment",
                            first.x, first.y, second.x, second.y
                        ),
                    };
                    println!("dyadic: not finitely represented ({why})");
                    println!("necessary bounds (rho < 4 and mu < 4): {}", if bounds { "hold" } else { "violated" });
                    Ok(ExitCode::from(1))
                }
            }
        }
        Document::Graph(g) => {
            let graph = match mode {
                GraphMode::Integral => g.to_graph()?,
                // an unlabeled edge means 3 in Coxeter drawings
                GraphMode::Coxeter => g.to_graph()?.with_coxeter_defaults(),
            };
            let class = match mode {
                GraphMode::Integral => graph.classify_integral()?,
                GraphMode::Coxeter => graph.classify_coxeter()?,
            };
            let (wx, wd) = match mode {
                GraphMode::Integral => graph.max_rho_vertex()?,
                GraphMode::Coxeter => graph.hat_transform()?.max_rho_vertex()?,
            };
            let vertex_name = g.vertices.get(wx).cloned().unwrap_or_else(|| wx.to_string());
            let (label, exit) = match &class {
                GraphClass::Dynkin(name) => (format!("Dynkin {name}"), ExitCode::SUCCESS),
                GraphClass::ExtendedDynkin(name) => {
                    (format!("extended Dynkin {name}"), ExitCode::SUCCESS)
                }
                GraphClass::Wild => ("wild".to_string(), ExitCode::from(1)),
                GraphClass::FiniteType(name) => {
                    (format!("Coxeter finite type {name}"), ExitCode::SUCCESS)
                }
                GraphClass::AffineType(name) => {
                    (format!("Coxeter affine type {name}"), ExitCode::SUCCESS)
                }
                GraphClass::Neither => ("neither finite nor affine".to_string(), ExitCode::from(1)),
            };
            println!("{label}; max rho-degree {wd} at vertex {vertex_name}");
            Ok(exit)
        }
        Document::Quiver(q) => {
            let mq = q.to_marked_quiver()?;
            let report = mq.classify()?;
            let exit = match &report.verdict {
                QuiverVerdict::Type(t) => {
                    println!("quiver: {t}");
                    type_exit(*t)
                }
                QuiverVerdict::Finiteness(finite) => {
                    println!(
                        "quiver: {}",
                        if *finite {
                            "finitely represented"
                        } else {
                            "not finitely represented"
                        }
                    );
                    if *finite {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
            };
            for note in &report.notes {
                println!("note: {note}");
            }
            Ok(exit)
        }
        Document::Relation(_) => Err(Error::Schema(
            "classification applies to posets, eqposets, dyadic sets, graphs and quivers".into(),
        )),
    }
}
