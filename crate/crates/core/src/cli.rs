//! Command-line dispatch. Exit status 0 is a positive answer, 1 a negative
//! one, 2 an error.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::chromatic::{chi_c_less_than_3, circular_chromatic_number};
use crate::circle::{c3_obstruction, default_den_cap, find_c3_embedding};
use crate::error::{Error, Result};
use crate::generate::{random_graph, random_network, random_points, random_sigma_model};
use crate::graph::Graph;
use crate::io::{emit, parse, Document};
use crate::relalg::{nsp_solve, path_consistency, ra_56_65, verify_certificate, Certificate, Network, NspOutcome};
use crate::sigma::{extend_3, sigma_model, universal_embed_with_cap};
use crate::signed::{find_balancing, BalanceRule, SignedGraph};
use crate::truemper::{find_3pcs, find_local_obstruction, find_wheels};

#[derive(Parser, Debug)]
#[command(name = "circsign", version, about = "Signed graphs, the circular triangle-free graph, and the relation algebra 56_65")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Balancing labellings of graphs.
    #[command(subcommand)]
    Balance(BalanceCmd),
    /// Balanceability from wheels and three-path configurations.
    #[command(subcommand)]
    Truemper(TruemperCmd),
    /// Embeddings into the circular triangle-free graph.
    #[command(subcommand)]
    C3(C3Cmd),
    /// The universal labelling.
    #[command(subcommand)]
    Sigma(SigmaCmd),
    /// Network satisfaction for 56_65.
    #[command(subcommand)]
    Nsp(NspCmd),
    /// Circular chromatic number.
    #[command(subcommand)]
    Chic(ChicCmd),
    /// Seeded random instances.
    Gen {
        #[command(subcommand)]
        what: GenCmd,
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        /// Order of the instance; drawn from 1..=max-n when absent.
        #[arg(long, global = true)]
        n: Option<usize>,
        #[arg(long, global = true, default_value_t = 8)]
        max_n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum BalanceCmd {
    /// Find a balancing labelling of a graph.
    Find {
        #[arg(long, default_value = "anti-even")]
        rule: BalanceRule,
        file: PathBuf,
    },
    /// Check whether a signed graph is balancing.
    Check {
        #[arg(long, default_value = "anti-even")]
        rule: BalanceRule,
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum TruemperCmd {
    Check {
        #[arg(long, default_value = "anti-even")]
        rule: BalanceRule,
        file: PathBuf,
    },
    /// List every wheel and three-path configuration.
    Witnesses { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum C3Cmd {
    Embed {
        #[arg(long)]
        den_cap: Option<u64>,
        file: PathBuf,
    },
    Test { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum SigmaCmd {
    /// Label the graph induced by a list of points.
    Label { file: PathBuf },
    /// Embed a signed graph into the universal model.
    Embed {
        #[arg(long)]
        den_cap: Option<u64>,
        file: PathBuf,
    },
    /// Place a new last vertex of TARGET against HOST points.
    Extend { host: PathBuf, target: PathBuf },
}

#[derive(Subcommand, Debug)]
enum NspCmd {
    Solve { file: PathBuf },
    Verify { network: PathBuf, certificate: PathBuf },
    Pc { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ChicCmd {
    Value { file: PathBuf },
    Lt3 { file: PathBuf },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum GenCmd {
    Graph,
    Sigma,
    Network,
    Points,
}

fn read(path: &PathBuf) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse(&text)
}

fn expect_kind<T>(doc: Document, want: &str, f: impl FnOnce(Document) -> Option<T>) -> Result<T> {
    let kind = doc.kind();
    f(doc).ok_or_else(|| Error::Validation(format!("expected a {want} document, got {kind}")))
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    expect_kind(read(path)?, "graph", |d| match d {
        Document::Graph(g) => Some(g),
        _ => None,
    })
}

fn read_signed(path: &PathBuf) -> Result<SignedGraph> {
    expect_kind(read(path)?, "signed-graph", |d| match d {
        Document::SignedGraph(g) => Some(g),
        _ => None,
    })
}

fn read_network(path: &PathBuf) -> Result<Network> {
    expect_kind(read(path)?, "network", |d| match d {
        Document::Network(n) => Some(n),
        _ => None,
    })
}

fn read_certificate(path: &PathBuf) -> Result<Certificate> {
    expect_kind(read(path)?, "certificate", |d| match d {
        Document::Certificate(c) => Some(c),
        _ => None,
    })
}

fn read_points(path: &PathBuf) -> Result<Vec<crate::circle::RationalAngle>> {
    expect_kind(read(path)?, "points", |d| match d {
        Document::Points(p) => Some(p),
        _ => None,
    })
}

fn answer(yes: bool, out: String) -> (i32, String) {
    (if yes { 0 } else { 1 }, out)
}

fn dispatch(cmd: Command) -> Result<(i32, String)> {
    Ok(match cmd {
        Command::Balance(BalanceCmd::Find { rule, file }) => {
            let g = read_graph(&file)?;
            match find_balancing(&g, &rule)? {
                Some(labels) => (0, emit(&Document::SignedGraph(SignedGraph::new(g, labels)?))),
                None => (1, "NOT BALANCEABLE".into()),
            }
        }
        Command::Balance(BalanceCmd::Check { rule, file }) => {
            let ok = read_signed(&file)?.is_balancing(&rule)?;
            answer(ok, if ok { "BALANCING" } else { "NOT BALANCING" }.into())
        }
        Command::Truemper(TruemperCmd::Check { rule, file }) => {
            match find_local_obstruction(&read_graph(&file)?, &rule)? {
                None => (0, "BALANCEABLE".into()),
                Some(set) => (1, format!("OBSTRUCTION {set:?}")),
            }
        }
        Command::Truemper(TruemperCmd::Witnesses { file }) => {
            let g = read_graph(&file)?;
            let wheels: Vec<_> = find_wheels(&g)
                .iter()
                .map(|w| json!({"cycle": w.cycle.vertices(), "hub": w.hub, "spokes": w.spokes}))
                .collect();
            let configs: Vec<_> = find_3pcs(&g)
                .iter()
                .map(|w| json!({"case": w.case as u8, "paths": w.paths, "extra_edges": w.extra_edges}))
                .collect();
            let any = !wheels.is_empty() || !configs.is_empty();
            answer(any, json!({"wheels": wheels, "three_path": configs}).to_string())
        }
        Command::C3(C3Cmd::Test { file }) => match c3_obstruction(&read_graph(&file)?) {
            None => (0, "EMBEDS".into()),
            Some(w) => (1, format!("FORBIDDEN {} {:?}", w.kind.name(), w.map)),
        },
        Command::C3(C3Cmd::Embed { den_cap, file }) => {
            let g = read_graph(&file)?;
            match find_c3_embedding(&g, den_cap.unwrap_or_else(|| default_den_cap(&g)))? {
                Some(points) => (0, emit(&Document::Points(points))),
                None => (1, "NOT EMBEDDABLE".into()),
            }
        }
        Command::Sigma(SigmaCmd::Label { file }) => {
            (0, emit(&Document::SignedGraph(sigma_model(&read_points(&file)?)?)))
        }
        Command::Sigma(SigmaCmd::Embed { den_cap, file }) => {
            let sg = read_signed(&file)?;
            let cap = den_cap.unwrap_or_else(|| default_den_cap(sg.graph()));
            match universal_embed_with_cap(&sg, cap) {
                Ok(points) => (0, emit(&Document::Points(points))),
                Err(e @ (Error::NotBalanceable | Error::NotIndependenceTwo(_))) => (1, e.to_string()),
                Err(e) => return Err(e),
            }
        }
        Command::Sigma(SigmaCmd::Extend { host, target }) => {
            let p = extend_3(&read_points(&host)?, &read_signed(&target)?)?;
            (0, emit(&Document::Points(vec![p])))
        }
        Command::Nsp(NspCmd::Solve { file }) => match nsp_solve(&ra_56_65(), &read_network(&file)?)? {
            NspOutcome::Sat(cert) => (0, emit(&Document::Certificate(cert))),
            NspOutcome::Unsat => (1, "UNSAT".into()),
        },
        Command::Nsp(NspCmd::Verify { network, certificate }) => {
            let ok = verify_certificate(&ra_56_65(), &read_network(&network)?, &read_certificate(&certificate)?);
            answer(ok, if ok { "VALID" } else { "INVALID" }.into())
        }
        Command::Nsp(NspCmd::Pc { file }) => match path_consistency(&ra_56_65(), &read_network(&file)?) {
            Some(net) => (0, emit(&Document::Network(net))),
            None => (1, "INCONSISTENT".into()),
        },
        Command::Chic(ChicCmd::Value { file }) => (0, circular_chromatic_number(&read_graph(&file)?).to_string()),
        Command::Chic(ChicCmd::Lt3 { file }) => match chi_c_less_than_3(&read_graph(&file)?) {
            Some(w) => {
                let angles: Vec<String> = w.angles.iter().map(|a| a.to_string()).collect();
                (0, json!({"p": w.p, "q": w.q, "hom": w.hom, "angles": angles}).to_string())
            }
            None => (1, "NO".into()),
        },
        Command::Gen { what, seed, n, max_n } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = n.unwrap_or_else(|| rng.gen_range(1..=max_n.max(1)));
            let doc = match what {
                GenCmd::Graph => Document::Graph(random_graph(&mut rng, n, 0.5)),
                GenCmd::Sigma => Document::SignedGraph(random_sigma_model(&mut rng, n, 60)?),
                GenCmd::Network => Document::Network(random_network(&mut rng, &ra_56_65(), n)),
                GenCmd::Points => Document::Points(random_points(&mut rng, n, 60)),
            };
            (0, emit(&doc))
        }
    })
}

/// Runs one command line (program name first) and returns the exit status
/// and the text to print.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(r) => r,
        Err(e) => (2, format!("error: {e}")),
    }
}
