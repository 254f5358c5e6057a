use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use parsewords::catalog::resolve_tree;
use parsewords::closed_forms::{
    a_of, alternating_counts, comb_comb_words, comb_crooked2_words, comb_crooked_words, crooked_crooked_count,
    turn_pair_count, turn_turn_words,
};
use parsewords::enumeration::{random_path_tree, random_tree};
use parsewords::harness::oracles::alternating_by_listing;
use parsewords::harness::{self, ClaimKind, RunConfig, Space, Status, DEFAULT_BUDGET, DEFAULT_SEED};
use parsewords::reductions::splice_solve_traced;
use parsewords::{
    all_path_trees, all_trees, count_parse_words, parse, parse_words, parse_words_with, Error, Family, Strategy, Tree,
    TreePair, Word,
};

#[derive(Parser)]
#[command(name = "parsewords", version, about = "Common parse words of binary tree pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a word with one tree and print the labeling.
    Parse {
        /// Tree literal, `path:<lr..>`, family such as `left-comb:5`, or index `7-64`.
        #[arg(long)]
        tree: String,
        /// Word over 0, 1, 2 with one letter per leaf.
        #[arg(long)]
        word: String,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// List the common parse word classes of two trees.
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        /// Enumeration strategy; all give the same classes.
        #[arg(long, value_enum, default_value_t = StrategyArg::Full)]
        strategy: StrategyArg,
        /// Print one JSON object per class.
        #[arg(long)]
        json: bool,
    },
    /// Count the common parse word classes of two trees.
    Count {
        #[command(flatten)]
        pair: PairArgs,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a closed form, optionally against brute force.
    Families {
        /// Closed form to evaluate.
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Comma-separated parameters, e.g. `5` or `2,3`.
        #[arg(long)]
        params: String,
        /// Compare with brute-force enumeration.
        #[arg(long)]
        check: bool,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Find a common parse word by reduction.
    Reduce {
        #[command(flatten)]
        pair: PairArgs,
        /// Print each reduction step before the word.
        #[arg(long)]
        trace: bool,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run a theorem campaign, or list the claims.
    Verify(VerifyArgs),
    /// Run a conjecture campaign.
    Conjecture(VerifyArgs),
    /// List trees of a given size.
    Gen {
        /// Number of leaves.
        #[arg(long)]
        n: usize,
        /// Path trees only.
        #[arg(long)]
        path: bool,
        /// Print this many random trees instead of all of them.
        #[arg(long)]
        random: Option<usize>,
        /// Seed for `--random`.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Print only how many trees there are.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Args)]
struct PairArgs {
    /// Tree literal, `path:<lr..>`, family such as `left-comb:5`, or index `7-64`.
    #[arg(long)]
    t1: String,
    /// Second tree, same size and forms as `--t1`.
    #[arg(long)]
    t2: String,
}

impl PairArgs {
    fn pair(&self) -> parsewords::Result<TreePair> {
        TreePair::new(resolve_tree(&self.t1)?, resolve_tree(&self.t2)?)
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id.
    claim_id: Option<String>,
    /// Claim id, as an option.
    #[arg(long = "claim", conflicts_with = "claim_id")]
    claim: Option<String>,
    /// Print the claim table.
    #[arg(long)]
    list: bool,
    /// Smallest parameter value (default: the claim's minimum).
    #[arg(long)]
    min_n: Option<usize>,
    /// Largest parameter value (default: the claim's usual maximum).
    #[arg(long)]
    max_n: Option<usize>,
    /// Random pairs per parameter value where the claim samples.
    #[arg(long)]
    samples: Option<usize>,
    /// Seed for sampled pairs.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest estimated number of word checks allowed.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Worker threads (default: PARSEWORDS_WORKERS, then all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Tree space; rejected when the claim is stated for the other one.
    #[arg(long, value_enum)]
    space: Option<SpaceArg>,
    /// Print one JSON object per checked point.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Full,
    RootFixed,
    Pruned,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    Path,
    Binary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    CombComb,
    TurnTurn,
    CombCrooked,
    CombCrooked2,
    CrookedCrooked,
    TurnCount,
    Recurrence,
    Alternating,
}

enum Failure {
    Usage(String),
    Fail,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Fail) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Parse { tree, word, json } => cmd_parse(&tree, &word, json),
        Command::Enumerate { pair, strategy, json } => cmd_enumerate(&pair, strategy, json),
        Command::Count { pair, json } => {
            let n = count_parse_words(&pair.pair()?);
            if json {
                println!("{}", json!({ "count": n }));
            } else {
                println!("{n}");
            }
            Ok(())
        }
        Command::Families {
            theorem,
            params,
            check,
            json,
        } => cmd_families(theorem, &params, check, json),
        Command::Reduce { pair, trace, json } => cmd_reduce(&pair, trace, json),
        Command::Verify(args) => cmd_verify(&args, ClaimKind::Theorem),
        Command::Conjecture(args) => cmd_verify(&args, ClaimKind::Conjecture),
        Command::Gen {
            n,
            path,
            random,
            seed,
            count,
        } => cmd_gen(n, path, random, seed, count),
    }
}

fn cmd_parse(tree: &str, word: &str, json: bool) -> Outcome {
    let t = resolve_tree(tree)?;
    let w: Word = word.parse()?;
    let lab = parse(&t, &w)?;
    if json {
        let labeling = lab.as_ref().map(|l| l.render(&t));
        println!("{}", json!({ "tree": t, "word": w, "labeling": labeling }));
    } else {
        match &lab {
            Some(l) => println!("{}", l.render(&t)),
            None => println!("{w} is not a parse word of {t}"),
        }
    }
    lab.map(|_| ()).ok_or(Failure::Fail)
}

fn cmd_enumerate(pair: &PairArgs, strategy: StrategyArg, json: bool) -> Outcome {
    let strategy = match strategy {
        StrategyArg::Full => Strategy::Full,
        StrategyArg::RootFixed => Strategy::RootFixed,
        StrategyArg::Pruned => Strategy::Pruned,
    };
    let set = parse_words_with(&pair.pair()?, strategy);
    for c in set.classes() {
        if json {
            println!("{}", json!({ "class": c.to_string() }));
        } else {
            println!("{c}");
        }
    }
    Ok(())
}

fn numbers(text: &str, want: usize) -> Result<Vec<usize>, Failure> {
    let nums = text
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("--params {text:?}: {e}")))?;
    if nums.len() != want {
        return Err(Failure::Usage(format!(
            "--params needs {want} number(s), got {}",
            nums.len()
        )));
    }
    Ok(nums)
}

fn family_pair(a: Family, b: Family) -> Result<TreePair, Failure> {
    Ok(TreePair::new(a.build()?, b.build()?)?)
}

fn cmd_families(theorem: Theorem, text: &str, check: bool, json: bool) -> Outcome {
    let u32_of = |x: usize| u32::try_from(x).map_err(|e| Failure::Usage(e.to_string()));
    // (closed form, brute force computed lazily)
    let (formula, brute): (String, Box<dyn Fn() -> Result<String, Failure>>) = match theorem {
        Theorem::CombComb | Theorem::CombCrooked | Theorem::CombCrooked2 | Theorem::CrookedCrooked => {
            let n = numbers(text, 1)?[0];
            let (formula, a, b) = match theorem {
                Theorem::CombComb => (
                    comb_comb_words(n)?.to_string(),
                    Family::LeftComb(n),
                    Family::RightComb(n),
                ),
                Theorem::CombCrooked => (
                    comb_crooked_words(n)?.to_string(),
                    Family::LeftComb(n),
                    Family::RightCrooked(n),
                ),
                Theorem::CombCrooked2 => (
                    comb_crooked2_words(n)?.to_string(),
                    Family::LeftComb(n),
                    Family::LeftCrooked(n),
                ),
                _ => (
                    crooked_crooked_count(n)?.to_string(),
                    Family::LeftCrooked(n),
                    Family::RightCrooked(n),
                ),
            };
            let counting = matches!(theorem, Theorem::CrookedCrooked);
            (
                formula,
                Box::new(move || {
                    let p = family_pair(a, b)?;
                    Ok(if counting {
                        count_parse_words(&p).to_string()
                    } else {
                        parse_words(&p).to_string()
                    })
                }),
            )
        }
        Theorem::TurnTurn => {
            let v = numbers(text, 2)?;
            let (m, n) = (v[0], v[1]);
            (
                turn_turn_words(m, n)?.to_string(),
                Box::new(move || {
                    Ok(parse_words(&family_pair(Family::LeftTurn(m, n), Family::RightTurn(1, m + n - 1))?).to_string())
                }),
            )
        }
        Theorem::TurnCount => {
            let v = numbers(text, 3)?;
            let (m, n, k) = (v[0], v[1], v[2]);
            (
                turn_pair_count(m, n, k)?.to_string(),
                Box::new(move || {
                    let p = family_pair(Family::LeftTurn(m, n), Family::RightTurn(k, m + n - k))?;
                    Ok(count_parse_words(&p).to_string())
                }),
            )
        }
        Theorem::Recurrence => {
            let v = numbers(text, 2)?;
            let (m, k) = (v[0], v[1]);
            (
                a_of(u32_of(m)?, u32_of(k)?)?.to_string(),
                Box::new(move || {
                    let p = family_pair(Family::LeftTurn(m, k + 1), Family::RightTurn(k, m + 1))?;
                    Ok(count_parse_words(&p).to_string())
                }),
            )
        }
        Theorem::Alternating => {
            let m = numbers(text, 1)?[0];
            let (a, b) = alternating_counts(u32_of(m)?)?;
            (
                format!("({a}, {b})"),
                Box::new(move || {
                    let (a, b) = alternating_by_listing(m);
                    Ok(format!("({a}, {b})"))
                }),
            )
        }
    };
    let observed = if check { Some(brute()?) } else { None };
    let status = observed
        .as_ref()
        .map(|o| if *o == formula { Status::Pass } else { Status::Fail });
    if json {
        let mut obj = json!({ "params": text, "expected": formula });
        if let (Some(o), Some(s)) = (&observed, status) {
            obj["observed"] = json!(o);
            obj["status"] = json!(s);
        }
        println!("{obj}");
    } else {
        println!("closed form: {formula}");
        if let (Some(o), Some(s)) = (&observed, status) {
            println!("brute force: {o}");
            println!("{s}");
        }
    }
    match status {
        Some(Status::Fail) => Err(Failure::Fail),
        _ => Ok(()),
    }
}

fn cmd_reduce(pair: &PairArgs, trace: bool, json: bool) -> Outcome {
    let p = pair.pair()?;
    let solution = splice_solve_traced(&p);
    let verified = solution.word.as_ref().is_some_and(|w| p.parses(w));
    if json {
        if trace {
            for step in &solution.trace {
                println!("{}", serde_json::to_string(step).expect("plain data"));
            }
        }
        println!("{}", json!({ "word": solution.word, "verified": verified }));
    } else {
        if trace {
            for step in &solution.trace {
                println!("{step}");
            }
        }
        match &solution.word {
            Some(w) => println!("{w}"),
            None => println!("no common parse word"),
        }
    }
    if verified {
        Ok(())
    } else {
        Err(Failure::Fail)
    }
}

fn cmd_verify(args: &VerifyArgs, kind: ClaimKind) -> Outcome {
    if args.list {
        for c in harness::claims(kind) {
            let space = c.space.map_or("-", |s| match s {
                Space::Path => "path",
                Space::Binary => "binary",
            });
            if args.json {
                let obj = json!({
                    "claim": c.id, "kind": c.kind, "space": c.space, "parameter": c.parameter,
                    "min_n": c.min_n, "max_n": c.default_max_n, "samples": c.default_samples(),
                    "statement": c.statement,
                });
                println!("{obj}");
            } else {
                println!(
                    "{:<24} {:<7} {}={}..{}  {}",
                    c.id, space, c.parameter, c.min_n, c.default_max_n, c.statement
                );
            }
        }
        return Ok(());
    }
    let id = args
        .claim_id
        .as_deref()
        .or(args.claim.as_deref())
        .ok_or_else(|| Failure::Usage("name a claim, or pass --list".into()))?;
    let cfg = RunConfig {
        min_n: args.min_n,
        max_n: args.max_n,
        samples: args.samples,
        seed: args.seed,
        budget: args.budget,
        workers: args.workers,
        space: args.space.map(|s| match s {
            SpaceArg::Path => Space::Path,
            SpaceArg::Binary => Space::Binary,
        }),
    };
    let report = match kind {
        ClaimKind::Theorem => harness::verify_theorem(id, &cfg)?,
        ClaimKind::Conjecture => harness::verify_conjecture(id, &cfg)?,
    };
    if args.json {
        print!("{}", report.to_json_lines());
    } else {
        print!("{}", report.to_text());
    }
    match report.status() {
        Status::Pass => Ok(()),
        Status::Fail => Err(Failure::Fail),
    }
}

fn cmd_gen(n: usize, path: bool, random: Option<usize>, seed: u64, count: bool) -> Outcome {
    if n == 0 || (path && n < 2) {
        return Err(Failure::Usage(format!(
            "no {} trees with {n} leaves",
            if path { "path" } else { "binary" }
        )));
    }
    let trees: Box<dyn Iterator<Item = Tree>> = match random {
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..k).map(move |_| {
                if path {
                    random_path_tree(n, &mut rng)
                } else {
                    random_tree(n, &mut rng)
                }
            }))
        }
        None if path => Box::new(all_path_trees(n)),
        None => all_trees(n),
    };
    if count {
        println!("{}", trees.count());
    } else {
        for t in trees {
            println!("{t}");
        }
    }
    Ok(())
}
