//! `braid`: command-line front end for the quasibraid library.

mod format;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quasibraid::{
    cone_points, exchange_as_composite, explore, homfly, mfw_braid_index_lower, morton_sl_upper, random_qp,
    self_linking, to_normal_form, BraidWord, ConePoint, CorpusParams, QpCertificateResult, QpMode, QpSearcher,
    SearchBudget, Statement, Status, VerificationRecord, Verifier,
};

use crate::format::{CorpusFile, FactorizationJson, MoveSequenceJson, WordJson};

const CSV_HEADER: &str = "# quasibraid-csv v1";

/// `println!` that exits quietly when stdout is closed, e.g. by `head`.
macro_rules! out {
    ($($arg:tt)*) => {
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    };
}

#[derive(Parser)]
#[command(name = "braid", version, about = "Braid words, Markov moves and quasipositive braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Garside left normal form of a word.
    Normalize {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        json: bool,
    },
    /// Writhe, self-linking, HOMFLY-PT polynomial and the bounds derived from it.
    Invariants {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        json: bool,
    },
    /// Points reachable from an apex by stabilizations, as CSV rows `w,n`.
    Cone {
        /// Apex as `w,n`.
        #[arg(long, allow_hyphen_values = true)]
        apex: String,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Move sequences.
    Moves {
        #[command(subcommand)]
        command: MovesCommand,
    },
    /// Quasipositive factorizations.
    Qp {
        #[command(subcommand)]
        command: QpCommand,
    },
    /// Seeded corpora of random quasipositive factorizations.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
    /// Bounded exploration of the Markov and exchange move graph.
    Explore {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Print visited `(w, n)` pairs as CSV.
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check a statement on every item of a corpus; CSV output.
    Verify {
        #[arg(long, value_enum)]
        statement: StatementArg,
        #[arg(long)]
        corpus: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum MovesCommand {
    /// Replay a move sequence file and print its endpoint.
    Replay {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Realize an exchange move by conjugations and one positive
    /// stabilization and destabilization.
    Exchange {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum QpCommand {
    /// Search for a band factorization.
    Search {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Allow conjugating the word first.
        #[arg(long)]
        conjugacy: bool,
        #[arg(long)]
        json: bool,
    },
    /// A seeded random factorization.
    Random {
        #[arg(short = 'n', long)]
        strands: usize,
        #[arg(short = 'k', long)]
        bands: usize,
        #[arg(long)]
        conj_len: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Generate a corpus file.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        min_strands: usize,
        #[arg(long, default_value_t = 4)]
        max_strands: usize,
        #[arg(long, default_value_t = 5)]
        max_bands: usize,
        #[arg(long, default_value_t = 2)]
        max_conj_len: usize,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<String>,
        /// Accepted for uniformity; the corpus is always JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct WordArgs {
    #[arg(short = 'n', long)]
    strands: usize,
    /// Space-separated signed generator indices, e.g. "1 -2 1".
    #[arg(allow_hyphen_values = true, default_value = "")]
    letters: String,
}

impl WordArgs {
    fn word(&self) -> Result<BraidWord, Failure> {
        BraidWord::parse(&self.letters, self.strands).map_err(|e| Failure::Usage(e.to_string()))
    }
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, alias = "max-nodes")]
    budget_nodes: Option<usize>,
    #[arg(long)]
    max_strands: Option<usize>,
    #[arg(long)]
    max_word_length: Option<usize>,
    #[arg(long)]
    max_conj_len: Option<usize>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, Failure> {
        let d = SearchBudget::default();
        let b = SearchBudget {
            max_nodes: self.budget_nodes.unwrap_or(d.max_nodes),
            max_strands: self.max_strands.unwrap_or(d.max_strands),
            max_word_length: self.max_word_length.unwrap_or(d.max_word_length),
            max_conjugator_length: self.max_conj_len.unwrap_or(d.max_conjugator_length),
        };
        b.validate().map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(b)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StatementArg {
    Main,
    SlBound,
    Chirality,
}

impl StatementArg {
    fn statement(self) -> Statement {
        match self {
            StatementArg::Main => Statement::ThmMain,
            StatementArg::SlBound => Statement::ThmSlBound,
            StatementArg::Chirality => Statement::CorChirality,
        }
    }
}

enum Failure {
    /// Bad flags or malformed input; exit 1.
    Usage(String),
    /// A bounded computation ran out of budget; exit 2.
    Inconclusive(String),
    /// A computation contradicted a theorem; exit 3.
    Fatal(String),
}

/// What a command printed and how it ended.
enum Outcome {
    Done,
    Inconclusive,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Inconclusive) => ExitCode::from(2),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Inconclusive(m)) => {
            eprintln!("inconclusive: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Fatal(m)) => {
            eprintln!("FATAL: {m}");
            ExitCode::from(3)
        }
    }
}

fn print_json(v: &Value) {
    // serde_json's default map is ordered by key, so output is stable.
    out!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Normalize { word, json } => normalize(&word.word()?, json),
        Command::Invariants { word, json } => invariants(&word.word()?, json),
        Command::Cone { apex, depth, json } => cone(&apex, depth, json),
        Command::Moves { command: MovesCommand::Replay { file, json } } => replay(&file, json),
        Command::Moves { command: MovesCommand::Exchange { word, json } } => exchange(&word.word()?, json),
        Command::Qp { command: QpCommand::Search { word, budget, conjugacy, json } } => {
            qp_search(&word.word()?, &budget.budget()?, conjugacy, json)
        }
        Command::Qp { command: QpCommand::Random { strands, bands, conj_len, seed, json } } => {
            let q = random_qp(strands, bands, conj_len, seed).map_err(|e| Failure::Usage(e.to_string()))?;
            let f = FactorizationJson::from_factorization(&q);
            if json {
                print_json(&to_value(&f));
            } else {
                for b in &f.bands {
                    out!("({}) {} ({})^-1", join(&b.conjugator), b.generator, join(&b.conjugator));
                }
            }
            Ok(Outcome::Done)
        }
        Command::Corpus {
            command: CorpusCommand::Gen { seed, count, min_strands, max_strands, max_bands, max_conj_len, out, json: _ },
        } => {
            let params = CorpusParams { count, min_strands, max_strands, max_bands, max_conjugator_length: max_conj_len };
            let corpus = CorpusFile::generate(&params, seed).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = serde_json::to_string_pretty(&to_value(&corpus)).expect("serializable");
            match out {
                Some(path) => fs::write(&path, text + "\n").map_err(|e| Failure::Usage(format!("{path}: {e}")))?,
                None => out!("{text}"),
            }
            Ok(Outcome::Done)
        }
        Command::Explore { word, budget, csv, json } => explore_cmd(&word.word()?, &budget.budget()?, csv, json),
        Command::Verify { statement, corpus, budget, json } => {
            verify(statement.statement(), &corpus, &budget.budget()?, json)
        }
    }
}

fn join(letters: &[i32]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

fn normalize(w: &BraidWord, json: bool) -> Result<Outcome, Failure> {
    let nf = to_normal_form(w);
    let spelled = nf.to_word();
    if json {
        let factors: Vec<Vec<usize>> = nf.factors().iter().map(|p| p.images()).collect();
        print_json(&json!({
            "strands": w.strands(),
            "infimum": nf.infimum(),
            "factors": factors,
            "word": spelled.letters(),
        }));
    } else {
        let mut parts = vec![format!("Δ^{}", nf.infimum())];
        parts.extend(nf.factors().iter().map(|p| p.to_string()));
        out!("{}", parts.join(" · "));
        out!("{spelled}");
    }
    Ok(Outcome::Done)
}

fn invariants(w: &BraidWord, json: bool) -> Result<Outcome, Failure> {
    let p = homfly(w).map_err(|e| Failure::Inconclusive(e.to_string()))?;
    let mfw = mfw_braid_index_lower(&p).map_err(|e| Failure::Fatal(e.to_string()))?;
    let morton = morton_sl_upper(&p).map_err(|e| Failure::Fatal(e.to_string()))?;
    let v = json!({
        "writhe": w.writhe(),
        "strands": w.strands(),
        "components": w.component_count(),
        "self_linking": self_linking(w),
        "homfly": p.to_text(),
        "mfw_lower": mfw,
        "morton_sl_upper": morton,
    });
    if json {
        print_json(&v);
    } else if let Value::Object(map) = v {
        for (k, v) in map {
            match v {
                Value::String(s) => out!("{k}: {s}"),
                other => out!("{k}: {other}"),
            }
        }
    }
    Ok(Outcome::Done)
}

fn cone(apex: &str, depth: usize, json: bool) -> Result<Outcome, Failure> {
    let bad = || Failure::Usage(format!("apex must be `w,n`, got `{apex}`"));
    let (w, n) = apex.split_once(',').ok_or_else(bad)?;
    let w: i64 = w.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let apex = ConePoint::new(w, n).map_err(|e| Failure::Usage(e.to_string()))?;
    let points = cone_points(apex, depth);
    if json {
        let rows: Vec<Value> = points.iter().map(|p| json!({"w": p.w, "n": p.n})).collect();
        print_json(&Value::Array(rows));
    } else {
        out!("{CSV_HEADER}");
        out!("w,n");
        for p in points {
            out!("{},{}", p.w, p.n);
        }
    }
    Ok(Outcome::Done)
}

fn replay(path: &str, json: bool) -> Result<Outcome, Failure> {
    let seq: MoveSequenceJson = read_json(path)?;
    let seq = seq.to_sequence().map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let end = seq.replay().map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    if json {
        print_json(&to_value(&WordJson::from_word(&end)));
    } else {
        out!("{} strands: {}", end.strands(), end);
    }
    Ok(Outcome::Done)
}

fn exchange(w: &BraidWord, json: bool) -> Result<Outcome, Failure> {
    let (seq, witness) = exchange_as_composite(w).map_err(|e| Failure::Usage(e.to_string()))?;
    if json {
        // The sequence object itself, so the output replays directly.
        let mut v = to_value(&MoveSequenceJson::from_sequence(&seq));
        v["witness"] = json!(witness.letters());
        print_json(&v);
    } else {
        for step in &seq.steps {
            out!("{step:?}");
        }
        out!("witness: {witness}");
    }
    Ok(Outcome::Done)
}

fn qp_search(w: &BraidWord, budget: &SearchBudget, conjugacy: bool, json: bool) -> Result<Outcome, Failure> {
    let mode = if conjugacy { QpMode::Conjugacy } else { QpMode::Exact };
    let mut searcher = QpSearcher::new(*budget);
    let result = searcher.search(w, mode);
    let nodes = searcher.nodes_used();
    let (v, outcome) = match &result {
        QpCertificateResult::Certificate(c) => (
            json!({
                "result": "certificate",
                "factorization": to_value(&FactorizationJson::from_factorization(&c.factorization)),
                "witness": c.witness.letters(),
                "nodes_used": nodes,
            }),
            Outcome::Done,
        ),
        QpCertificateResult::NotQuasipositive(reason) => {
            (json!({"result": "not-quasipositive", "reason": format!("{reason:?}"), "nodes_used": nodes}), Outcome::Done)
        }
        QpCertificateResult::Inconclusive => {
            (json!({"result": "inconclusive", "nodes_used": nodes}), Outcome::Inconclusive)
        }
    };
    if json {
        print_json(&v);
    } else {
        match &result {
            QpCertificateResult::Certificate(c) => {
                out!("quasipositive, witness conjugator: {}", c.witness);
                for b in c.factorization.bands() {
                    out!("  ({}) {} ({})^-1", b.conjugator, b.generator, b.conjugator);
                }
            }
            QpCertificateResult::NotQuasipositive(reason) => out!("not quasipositive: {reason:?}"),
            QpCertificateResult::Inconclusive => out!("inconclusive after {nodes} nodes"),
        }
    }
    Ok(outcome)
}

fn explore_cmd(w: &BraidWord, budget: &SearchBudget, csv: bool, json: bool) -> Result<Outcome, Failure> {
    let report = explore(w, budget);
    if json {
        let visited: Vec<Value> = report.visited.iter().map(|p| json!({"w": p.w, "n": p.n})).collect();
        let minimal: Vec<Value> = report.minimal_representatives().iter().map(|m| to_value(&WordJson::from_word(m))).collect();
        print_json(&json!({
            "visited": visited,
            "min_strands": report.min_strands,
            "minimal_representatives": minimal,
            "max_self_linking": report.max_self_linking,
            "nodes_used": report.nodes_used,
            "exhausted": report.exhausted,
        }));
    } else if csv {
        out!("{CSV_HEADER}");
        out!("w,n");
        for p in &report.visited {
            out!("{},{}", p.w, p.n);
        }
    } else {
        out!("states: {}", report.state_count());
        out!("nodes used: {}{}", report.nodes_used, if report.exhausted { " (budget exhausted)" } else { "" });
        out!("min strands: {}", report.min_strands);
        for m in report.minimal_representatives().iter().take(10) {
            out!("  {m}");
        }
        out!("max self-linking: {} ({})", report.max_self_linking, report.max_self_linking_word());
    }
    Ok(Outcome::Done)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn verify(statement: Statement, path: &str, budget: &SearchBudget, json: bool) -> Result<Outcome, Failure> {
    let corpus: CorpusFile = read_json(path)?;
    let items = corpus.factorizations().map_err(Failure::Usage)?;
    let mut verifier = Verifier::new(*budget);
    let mut records: Vec<VerificationRecord> = Vec::with_capacity(items.len());
    for (i, q) in items.iter().enumerate() {
        match verifier.verify(statement, q) {
            Ok(r) => records.push(r),
            Err(v) => {
                let dump = to_value(&FactorizationJson::from_factorization(q));
                return Err(Failure::Fatal(format!("item {i}: {v}\ninstance: {dump}")));
            }
        }
    }
    if json {
        let rows: Vec<Value> = records
            .iter()
            .enumerate()
            .map(|(i, r)| {
                json!({
                    "id": i,
                    "status": r.status.name(),
                    "sl_bar": r.details.sl_bar,
                    "b_lower": r.details.b_lower,
                    "b_upper": r.details.b_upper,
                    "minimal_writhe": r.details.minimal_writhe,
                    "nodes_used": r.details.nodes_used,
                    "notes": r.details.notes,
                })
            })
            .collect();
        print_json(&json!({"statement": statement.name(), "records": rows}));
    } else {
        out!("{CSV_HEADER}");
        out!("id,status,sl_bar,b_lower,b_upper,minimal_writhe,nodes_used");
        for (i, r) in records.iter().enumerate() {
            let d = &r.details;
            out!(
                "{},{},{},{},{},{},{}",
                i,
                r.status.name(),
                opt(d.sl_bar),
                opt(d.b_lower),
                opt(d.b_upper),
                opt(d.minimal_writhe),
                d.nodes_used
            );
        }
    }
    if records.iter().all(|r| r.status == Status::Verified) {
        Ok(Outcome::Done)
    } else {
        Ok(Outcome::Inconclusive)
    }
}
