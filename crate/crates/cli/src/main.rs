use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use soclique::clique::{SearchOptions, DEFAULT_BUDGET};
use soclique::cliquesearch::{
    bounds, is_sos_clique, is_sunflower, mu_exact, mu_exact_strict, smalla_predicted, CliqueFamily,
    Membership, Verdict,
};
use soclique::constructions::{eight_column_fixture, fano_fixture, plane_clique, sunflower_clique};
use soclique::rootsys::{Family, RootSystem};
use soclique::sos::{max_sos, published_max_sos_size};
use soclique::{Certificate, Error};

/// Strongly orthogonal root sets and SOS-cliques in type A.
#[derive(Parser)]
#[command(name = "soclique", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an explicit SOS-clique and emit its certificate.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Exact searches.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Check a certificate file.
    Verify {
        file: PathBuf,
        /// Require every pairwise difference to be a member of the family.
        #[arg(long)]
        strict_membership: bool,
    },
    /// Closed-form bounds around mu_k(A_l).
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        /// Number of allowed intersection sizes.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, requires = "k2")]
        k1: Option<usize>,
        #[arg(long, requires = "k1")]
        k2: Option<usize>,
    },
    /// Largest strongly orthogonal set of an irreducible root system.
    Maxsos {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Predicted and computed values side by side.
    Table {
        #[command(subcommand)]
        kind: TableKind,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// Common core plus disjoint petals.
    Sunflower {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Differences of incidence rows of PG(2, q).
    Plane {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The six Fano plane differences (k=2, ell=6).
    Fano {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The six-member eight-column family (k=2, ell=7).
    Eightcol {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SearchKind {
    /// mu_k(A_l) as the clique number of the difference graph.
    Mu {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// Require every pairwise difference to be a member of the family.
        #[arg(long)]
        strict_membership: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TableKind {
    /// mu_2(A_l) for l = 1..max-ell.
    Smalla {
        #[arg(long)]
        max_ell: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Node expansion limit per search phase.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads; results do not depend on this.
    #[arg(long)]
    workers: Option<usize>,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        let mut opts = SearchOptions::with_budget(self.budget);
        if let Some(w) = self.workers {
            opts.workers = w.max(1);
        }
        opts
    }
}

enum Failure {
    /// Bad arguments or unreadable input.
    Usage(String),
    /// The thing being checked is wrong.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit(cert: &Certificate, out: Option<&Path>) -> Outcome {
    let text = cert.to_json();
    match out {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            let f = cert.family();
            println!(
                "wrote {} signatures (k={}, ell={}) to {}",
                f.len(),
                f.k(),
                f.ell(),
                path.display()
            );
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn construct(kind: Construction) -> Outcome {
    let (family, provenance, out): (CliqueFamily, String, Option<PathBuf>) = match kind {
        Construction::Sunflower { k, ell, out } => (
            sunflower_clique(k, ell)?,
            format!("sunflower k={k} ell={ell}"),
            out,
        ),
        Construction::Plane { q, out } => (plane_clique(q)?, format!("plane q={q}"), out),
        Construction::Fano { out } => (fano_fixture(), "fano fixture".into(), out),
        Construction::Eightcol { out } => {
            (eight_column_fixture(), "eight-column fixture".into(), out)
        }
    };
    emit(&Certificate::new(family, provenance, false), out.as_deref())
}

fn search(kind: SearchKind) -> Outcome {
    let SearchKind::Mu {
        k,
        ell,
        search,
        strict_membership,
        out,
    } = kind;
    let r = if strict_membership {
        mu_exact_strict(k, ell, search.budget)?
    } else {
        mu_exact(k, ell, &search.options())?
    };
    if r.exact {
        println!("mu = {} (exact)", r.value);
    } else {
        println!(
            "mu >= {} (budget exhausted after {} nodes)",
            r.value, r.nodes
        );
    }
    let provenance = if strict_membership {
        "search strict-membership"
    } else {
        "search"
    };
    emit(
        &Certificate::new(r.witness, provenance, r.exact),
        out.as_deref(),
    )
}

fn verify(file: &Path, strict: bool) -> Outcome {
    let text = fs::read_to_string(file)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
    let cert = Certificate::from_json(&text)
        .map_err(|e| Failure::Verification(format!("INVALID certificate: {e}")))?;
    let f = cert.family();
    let mode = if strict {
        Membership::Strict
    } else {
        Membership::Graph
    };
    match is_sos_clique(f, mode) {
        Verdict::Valid => {
            let sunflower = is_sunflower(f).unwrap_or(false);
            println!(
                "VALID SOS-clique, size {}, k={}, ell={}, sunflower={sunflower}",
                f.len(),
                f.k(),
                f.ell()
            );
            Ok(())
        }
        Verdict::Invalid(violations) => {
            let mut msg = format!(
                "INVALID SOS-clique: {} ordered pairs fail",
                violations.len()
            );
            for v in violations.iter().take(10) {
                msg.push_str(&format!(
                    "\n  signatures {} - {} = {:?} is not {}",
                    v.i,
                    v.j,
                    v.difference,
                    if strict { "a member" } else { "a signature" }
                ));
            }
            Err(Failure::Verification(msg))
        }
    }
}

fn show_bounds(k: usize, ell: usize, s: Option<usize>, k1k2: Option<(usize, usize)>) -> Outcome {
    let b = bounds(k, ell, s, k1k2)?;
    let opt = |v: Option<u128>| v.map_or("-".to_string(), |x| x.to_string());
    let rows = [
        ("k", b.k.to_string()),
        ("ell", b.ell.to_string()),
        ("general_upper", b.general_upper.to_string()),
        ("sunflower_value", b.sunflower_value.to_string()),
        ("regime_threshold", b.regime_threshold.to_string()),
        ("sunflower_lemma_upper", b.sunflower_lemma_upper.to_string()),
        (
            "distinct_intersection_upper",
            b.distinct_intersection_upper.to_string(),
        ),
        ("rcw", opt(b.rcw)),
        ("ekr", b.ekr.to_string()),
        ("bollobas", opt(b.bollobas)),
    ];
    for (name, value) in rows {
        println!("{name:<28} {value}");
    }
    Ok(())
}

fn maxsos(family: Family, rank: usize, search: &SearchArgs) -> Outcome {
    let r = RootSystem::build(family, rank)?;
    let res = max_sos(&r, &search.options());
    let members: Vec<String> = res
        .clique
        .iter()
        .map(|&i| r.roots()[i].to_string())
        .collect();
    let status = if res.exact {
        "exact"
    } else {
        "budget exhausted"
    };
    println!(
        "{}: max strongly orthogonal set size {} ({status})",
        r.label(),
        res.size()
    );
    println!("witness: {}", members.join(" "));
    if r.scale() != 1 {
        println!("coordinates scaled by {}", r.scale());
    }
    if let Some(published) = published_max_sos_size(family, rank) {
        if published == res.size() {
            println!("published value {published}: agrees");
        } else {
            println!(
                "published value {published}: DISCREPANCY (computed {})",
                res.size()
            );
        }
    }
    Ok(())
}

fn smalla(max_ell: usize, search: &SearchArgs) -> Outcome {
    if max_ell == 0 {
        return Err(Failure::Usage("--max-ell must be at least 1".into()));
    }
    let opts = search.options();
    println!(
        "{:>4} {:>9} {:>8} {:>6} {:>12}",
        "ell", "predicted", "computed", "exact", "nodes"
    );
    let mut mismatches = Vec::new();
    for ell in 1..=max_ell {
        let predicted = smalla_predicted(ell)?;
        let r = mu_exact(2, ell, &opts)?;
        println!(
            "{ell:>4} {predicted:>9} {:>8} {:>6} {:>12}",
            r.value, r.exact, r.nodes
        );
        if !r.exact || r.value != predicted {
            mismatches.push(ell);
        }
    }
    if mismatches.is_empty() {
        println!("all {max_ell} rows match");
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "rows not matching or not exact: ell = {mismatches:?}"
        )))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Construct { kind } => construct(kind),
        Command::Search { kind } => search(kind),
        Command::Verify {
            file,
            strict_membership,
        } => verify(&file, strict_membership),
        Command::Bounds { k, ell, s, k1, k2 } => show_bounds(k, ell, s, k1.zip(k2)),
        Command::Maxsos {
            family,
            rank,
            search,
        } => maxsos(family, rank, &search),
        Command::Table {
            kind: TableKind::Smalla { max_ell, search },
        } => smalla(max_ell, &search),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
