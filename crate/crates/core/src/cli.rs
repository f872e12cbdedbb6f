//! The `fpw` command line.
//!
//! Exit codes: 0 success, 1 invalid input or a failed check, 2 a search ran
//! out of budget, 64 usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bs::{
    apply_f, britton_reduce, bs_alphabet, bs_equal, bs_is_trivial, f_map, f_preimage_witnesses, from_syllables,
    kernel_stream, w_family, BSParams, BsOracle,
};
use crate::harness::{
    cantor_pair, cantor_unpair, compress_stream, recover_cardinality, tower_oracle, ExplicitFiniteSet,
};
use crate::presentations::{
    abelianization_invariants, is_perfect, FinitePresentation, TrivialWordStream, TrivialityCertificate,
};
use crate::search::{
    decide_homomorphism, iso_search, semidecide_homomorphism, subgroup_presentation_search, HomCheck, IsoOutcome,
    SearchBudget, SubgroupOutcome, WordOracle,
};
use crate::stream::{drain, FiniteSource, Source};
use crate::tietze::{apply_json_sequence, check_move, MoveCheck, TietzeMove};
use crate::words::{free_reduce, parse_letters, Alphabet, GeneratorMap, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "fpw", version, about = "Workbench for presented groups and BS(2,3)")]
pub struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BsArgs {
    #[arg(short = 'm', default_value_t = 2)]
    pub m: u64,
    #[arg(short = 'n', default_value_t = 3)]
    pub n: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Freely reduce a word.
    Reduce {
        word: String,
        /// Generator names, comma separated.
        #[arg(long, default_value = "s,t")]
        alphabet: String,
    },
    /// Is a word trivial in BS(m,n)?
    BsTriv {
        #[command(flatten)]
        bs: BsArgs,
        word: String,
    },
    /// Are two words equal in BS(m,n)?
    BsEqual {
        #[command(flatten)]
        bs: BsArgs,
        u: String,
        v: String,
    },
    /// Britton-reduced form of a word in BS(m,n).
    BsReduce {
        #[command(flatten)]
        bs: BsArgs,
        word: String,
    },
    /// Apply f^i (s -> s, t -> t^2).
    ApplyF {
        #[arg(short = 'i', default_value_t = 1)]
        i: u32,
        word: String,
    },
    /// The word w_i.
    Wfam {
        #[arg(short = 'i')]
        i: usize,
    },
    /// First words of ker f^i in shortlex order.
    KernelEnum {
        #[arg(short = 'i')]
        i: u32,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Candidate words to examine.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// First emissions of the trivial-word stream of a presentation.
    EnumTrivial {
        #[arg(short = 'p')]
        p: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Print each emission's certificate.
        #[arg(long)]
        certs: bool,
    },
    /// Check a triviality certificate for a word.
    CheckCert {
        #[arg(short = 'p')]
        p: String,
        /// Certificate JSON, inline or a file path.
        #[arg(long)]
        cert: String,
        word: String,
    },
    /// Invariants of the abelianization.
    Abelian {
        #[arg(short = 'p')]
        p: String,
    },
    /// Is the abelianization trivial?
    Perfect {
        #[arg(short = 'p')]
        p: String,
    },
    /// Search for certificates that a map of generators is a homomorphism.
    HomCheck {
        #[arg(short = 'p')]
        p: String,
        #[arg(short = 'q')]
        q: String,
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Decide whether a map into BS(m,n) is a homomorphism.
    HomDecide {
        #[command(flatten)]
        bs: BsArgs,
        #[arg(short = 'p')]
        p: String,
        #[arg(long)]
        map: String,
    },
    /// Search for an isomorphism between two presentations.
    IsoSearch {
        #[arg(short = 'p')]
        p: String,
        #[arg(short = 'q')]
        q: String,
        #[arg(long, default_value_t = 200_000)]
        budget: u64,
    },
    /// Search for a presentation of a subgroup of BS(m,n) or of a tower quotient.
    SubgrpPresentation {
        #[command(flatten)]
        bs: BsArgs,
        /// Subgroup generators, comma separated words in s, t.
        #[arg(long)]
        gens: String,
        #[arg(short = 'q')]
        q: String,
        /// `bs`, or `tower:K` for BS(2,3) / ker f^K.
        #[arg(long, default_value = "bs")]
        oracle: String,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Apply a JSON list of Tietze moves.
    TietzeApply {
        #[arg(short = 'p')]
        p: String,
        /// JSON array of moves, inline or a file path.
        #[arg(long)]
        moves: String,
    },
    /// Check a single Tietze move.
    TietzeCheck {
        #[arg(short = 'p')]
        p: String,
        /// JSON move, inline or a file path.
        #[arg(long = "move")]
        mv: String,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Cantor pairing.
    Pair { x: u64, y: u64 },
    /// Inverse Cantor pairing.
    Unpair { z: u64 },
    /// Compress a finite list of naturals to 0..k-1.
    Compress {
        /// Comma-separated naturals, repeats allowed.
        input: String,
    },
    /// Worked demonstrations.
    #[command(subcommand)]
    Demo(Demo),
}

#[derive(Subcommand, Debug)]
pub enum Demo {
    /// f is an epimorphism of BS(2,3) with nontrivial kernel.
    NonHopfian,
    /// Recover |W| from the tower oracle via the w-family.
    RecoverCard {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
}

enum Failure {
    Invalid(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Text form of a word, with `1` for the identity.
fn shown(w: &Word) -> String {
    if w.is_identity() {
        "1".into()
    } else {
        w.to_string()
    }
}

struct Output {
    json: bool,
    text: String,
    value: Value,
    code: i32,
}

impl Output {
    fn new(json: bool) -> Self {
        Output { json, text: String::new(), value: Value::Null, code: EXIT_OK }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn done(mut self, text: impl AsRef<str>, value: Value) -> Self {
        self.line(text);
        self.value = value;
        self
    }

    fn code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let json = cli.json;
    match execute(cli.command, Output::new(json)) {
        Ok(o) => {
            if o.json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&o.value).unwrap_or_default());
            } else {
                let _ = write!(out, "{}", o.text);
            }
            o.code
        }
        Err(Failure::Invalid(msg)) => {
            if json {
                let _ = writeln!(out, "{}", json!({ "error": msg }));
            }
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}

/// Inline text if it looks like the payload, otherwise a file to read.
fn inline_or_file(arg: &str, inline_start: &[char]) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.is_empty() || trimmed.starts_with(inline_start) {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::Invalid(format!("{arg}: {e}")))
    }
}

fn presentation(arg: &str) -> Result<FinitePresentation, Failure> {
    Ok(FinitePresentation::parse(&inline_or_file(arg, &['<'])?)?)
}

fn json_arg(arg: &str) -> Result<Value, Failure> {
    Ok(serde_json::from_str(&inline_or_file(arg, &['[', '{'])?)?)
}

fn bs_params(bs: BsArgs) -> Result<BSParams, Failure> {
    Ok(BSParams::new(bs.m, bs.n)?)
}

fn bs_word(text: &str) -> Result<Word, Failure> {
    Ok(Word::parse(&bs_alphabet(), text)?)
}

fn words_list(a: &Alphabet, text: &str) -> Result<Vec<Word>, Failure> {
    text.split(',').map(|w| Word::parse(a, w).map_err(Failure::from)).collect()
}

fn map_arg(p: &FinitePresentation, codomain: &Alphabet, text: &str) -> Result<GeneratorMap, Failure> {
    Ok(GeneratorMap::parse(p.alphabet(), codomain, text)?)
}

fn parse_oracle(text: &str, bs: BSParams) -> Result<Box<dyn WordOracle>, Failure> {
    match text.split_once(':') {
        None if text == "bs" => Ok(Box::new(BsOracle(bs))),
        Some(("tower", k)) => {
            let k: u32 = k.parse().map_err(|_| Failure::Invalid(format!("bad tower index {k:?}")))?;
            Ok(Box::new(tower_oracle(k)))
        }
        _ => Err(Failure::Invalid(format!("unknown oracle {text:?}; use bs or tower:K"))),
    }
}

fn execute(cmd: Command, mut o: Output) -> Result<Output, Failure> {
    Ok(match cmd {
        Command::Reduce { word, alphabet } => {
            let names: Vec<&str> = alphabet.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let a = Alphabet::new(names)?;
            let w = Word::from_letters(&a, free_reduce(&parse_letters(&a, &word)?))?;
            o.done(shown(&w), json!({ "word": w.to_string(), "length": w.len() }))
        }
        Command::BsTriv { bs, word } => {
            let t = bs_is_trivial(bs_params(bs)?, &bs_word(&word)?)?;
            o.done(if t { "trivial" } else { "nontrivial" }, json!({ "trivial": t }))
        }
        Command::BsEqual { bs, u, v } => {
            let eq = bs_equal(bs_params(bs)?, &bs_word(&u)?, &bs_word(&v)?)?;
            o.done(if eq { "equal" } else { "not equal" }, json!({ "equal": eq }))
        }
        Command::BsReduce { bs, word } => {
            let r = britton_reduce(bs_params(bs)?, &bs_word(&word)?)?;
            let w = from_syllables(&r)?;
            o.done(shown(&w), json!({ "word": w.to_string(), "syllables": r.to_string(), "s_letters": r.s_count() }))
        }
        Command::ApplyF { i, word } => {
            let w = apply_f(&bs_word(&word)?, i)?;
            o.done(shown(&w), json!({ "word": w.to_string(), "length": w.len() }))
        }
        Command::Wfam { i } => {
            let w = w_family(i);
            o.done(shown(&w), json!({ "i": i, "word": w.to_string(), "length": w.len() }))
        }
        Command::KernelEnum { i, count, budget } => {
            let mut stream = kernel_stream(i);
            let mut words = Vec::new();
            while words.len() < count && stream.examined() < budget {
                if let Some(w) = stream.pull().item() {
                    o.line(shown(&w));
                    words.push(w.to_string());
                }
            }
            o.value = json!({ "i": i, "words": words, "examined": stream.examined() });
            if words.len() < count {
                o.line(format!("exhausted after {} candidates", stream.examined()));
                o.code = EXIT_EXHAUSTED;
            }
            o
        }
        Command::EnumTrivial { p, count, certs } => {
            let p = presentation(&p)?;
            let mut stream = TrivialWordStream::finite(&p);
            let mut items = Vec::new();
            for _ in 0..count {
                let w = stream.next_word();
                let cert = stream.current_certificate();
                if certs {
                    o.line(format!("{}\t{}", shown(&w), cert.to_json()));
                } else {
                    o.line(shown(&w));
                }
                items.push(json!({ "word": w.to_string(), "cert": cert.to_json() }));
            }
            o.value = Value::Array(items);
            o
        }
        Command::CheckCert { p, cert, word } => {
            let p = presentation(&p)?;
            let cert = TrivialityCertificate::from_json(p.alphabet(), &json_arg(&cert)?)?;
            let w = p.word(&word)?;
            let value = cert.evaluate(&p)?;
            let ok = value == w;
            let o = o.done(
                if ok { "valid".to_string() } else { format!("invalid: certificate evaluates to {value}") },
                json!({ "valid": ok, "value": value.to_string() }),
            );
            if ok {
                o
            } else {
                o.code(EXIT_INVALID)
            }
        }
        Command::Abelian { p } => {
            let ab = abelianization_invariants(&presentation(&p)?);
            let torsion: Vec<String> = ab.torsion.iter().map(|d| d.to_string()).collect();
            o.done(ab.to_string(), json!({ "free_rank": ab.free_rank, "torsion": torsion }))
        }
        Command::Perfect { p } => {
            let perfect = is_perfect(&presentation(&p)?);
            o.done(if perfect { "perfect" } else { "not perfect" }, json!({ "perfect": perfect }))
        }
        Command::HomCheck { p, q, map, budget } => {
            let p = presentation(&p)?;
            let q = presentation(&q)?;
            let phi = map_arg(&p, q.alphabet(), &map)?;
            match semidecide_homomorphism(&phi, &p, &q, budget)? {
                HomCheck::Proved { certificates, steps } => {
                    let certs: Vec<Value> = certificates.iter().map(TrivialityCertificate::to_json).collect();
                    o.done(
                        format!("homomorphism (certified after {steps} stream steps)"),
                        json!({ "verdict": "proved", "steps": steps, "certificates": certs }),
                    )
                }
                HomCheck::Exhausted { steps } => o
                    .done(
                        format!("exhausted after {steps} stream steps"),
                        json!({ "verdict": "exhausted", "steps": steps }),
                    )
                    .code(EXIT_EXHAUSTED),
            }
        }
        Command::HomDecide { bs, p, map } => {
            let params = bs_params(bs)?;
            let p = presentation(&p)?;
            let phi = map_arg(&p, &bs_alphabet(), &map)?;
            let hom = decide_homomorphism(&phi, &p, &BsOracle(params))?;
            o.done(if hom { "homomorphism" } else { "not a homomorphism" }, json!({ "homomorphism": hom }))
        }
        Command::IsoSearch { p, q, budget } => {
            let p = presentation(&p)?;
            let q = presentation(&q)?;
            match iso_search(&p, &q, SearchBudget::units(budget)) {
                IsoOutcome::Found(found) => {
                    o.line(format!("forward: {}", found.witness.forward));
                    o.line(format!("backward: {}", found.witness.backward));
                    o.value = json!({ "verdict": "found", "witness": found.witness.to_json() });
                    o
                }
                IsoOutcome::Exhausted => o
                    .done(format!("exhausted (budget {budget})"), json!({ "verdict": "exhausted" }))
                    .code(EXIT_EXHAUSTED),
            }
        }
        Command::SubgrpPresentation { bs, gens, q, oracle, budget } => {
            let params = bs_params(bs)?;
            let ambient = params.presentation();
            let gens = words_list(ambient.alphabet(), &gens)?;
            let q = presentation(&q)?;
            let oracle = parse_oracle(&oracle, params)?;
            match subgroup_presentation_search(&ambient, oracle.as_ref(), &gens, &q, SearchBudget::units(budget))? {
                SubgroupOutcome::Found { k, presentation, iso, .. } => {
                    o.line(format!("k = {k}"));
                    o.line(format!("presentation: {presentation}"));
                    o.line(format!("forward: {}", iso.witness.forward));
                    o.line(format!("backward: {}", iso.witness.backward));
                    o.value = json!({
                        "verdict": "found",
                        "k": k,
                        "presentation": presentation.to_string(),
                        "witness": iso.witness.to_json(),
                    });
                    o
                }
                SubgroupOutcome::Exhausted { relators } => {
                    let rels: Vec<String> = relators.iter().map(Word::to_string).collect();
                    o.done(
                        format!("exhausted (budget {budget}, {} relators found)", rels.len()),
                        json!({ "verdict": "exhausted", "relators": rels }),
                    )
                    .code(EXIT_EXHAUSTED)
                }
            }
        }
        Command::TietzeApply { p, moves } => {
            let p = presentation(&p)?;
            let (result, log) = apply_json_sequence(&p, &json_arg(&moves)?)?;
            for e in &log.entries {
                o.line(format!("{}  {} -> {}", e.mv, &e.before[..12], &e.after[..12]));
            }
            o.done(result.to_string(), json!({ "presentation": result.to_string(), "log": log.to_json() }))
        }
        Command::TietzeCheck { p, mv, budget } => {
            let p = presentation(&p)?;
            let mv = TietzeMove::from_json(p.alphabet(), &json_arg(&mv)?)?;
            match check_move(&p, &mv, budget) {
                MoveCheck::Valid => o.done("valid", json!({ "verdict": "valid" })),
                MoveCheck::Invalid(reason) => o
                    .done(format!("invalid: {reason}"), json!({ "verdict": "invalid", "reason": reason }))
                    .code(EXIT_INVALID),
                MoveCheck::Unverifiable { budget } => o
                    .done(
                        format!("unverifiable within budget {budget}"),
                        json!({ "verdict": "unverifiable", "budget": budget }),
                    )
                    .code(EXIT_EXHAUSTED),
            }
        }
        Command::Pair { x, y } => {
            let z = cantor_pair(x, y).ok_or_else(|| Failure::Invalid("pair does not fit in 64 bits".into()))?;
            o.done(z.to_string(), json!({ "z": z }))
        }
        Command::Unpair { z } => {
            let (x, y) = cantor_unpair(z);
            o.done(format!("{x} {y}"), json!({ "x": x, "y": y }))
        }
        Command::Compress { input } => {
            let items = input
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u64>().map_err(|_| Failure::Invalid(format!("not a natural: {s:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let n = items.len();
            let (out, _) = drain(&mut compress_stream(FiniteSource::new(items)), n + 1);
            let text: Vec<String> = out.iter().map(u64::to_string).collect();
            o.done(text.join(","), json!({ "output": out }))
        }
        Command::Demo(Demo::NonHopfian) => non_hopfian(o),
        Command::Demo(Demo::RecoverCard { set, kmax }) => {
            let set: ExplicitFiniteSet = set.parse()?;
            let n = set.len();
            let (compressed, _) = drain(&mut compress_stream(set.source()), n + 1);
            let k = compressed.len() as u32;
            o.line(format!("W = {set}, compressed to {{0..{}}}", k.saturating_sub(1)));
            let oracle = tower_oracle(k);
            for j in 0..=kmax + 1 {
                let t = oracle.is_trivial(&w_family(j));
                o.line(format!("w_{j}: {}", if t { "trivial" } else { "nontrivial" }));
            }
            let got = recover_cardinality(&oracle, kmax);
            o.done(format!("|W| = {got}"), json!({ "set": set.iter().collect::<Vec<_>>(), "cardinality": got }))
        }
    })
}

/// The four checks: f is a homomorphism, f is onto, `w_1 ≠ e`, `f(w_1) = e`.
fn non_hopfian(mut o: Output) -> Output {
    let p = BSParams::BS23;
    let bs = p.presentation();
    let oracle = BsOracle(p);
    let f = f_map();
    let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
    o.line(format!("BS(2,3) = {bs}"));
    o.line(format!("f: {f}"));

    let image = f.apply(&bs.relators()[0]).expect("relator over s, t");
    let hom = decide_homomorphism(&f, &bs, &oracle).unwrap_or(false);
    o.line(format!("[{}] f is a homomorphism: f({}) = {} is trivial", mark(hom), bs.relators()[0], image));

    let g = f_preimage_witnesses();
    let a = bs_alphabet();
    let mut onto = true;
    for gen in 0..2 {
        let x = Word::generator(&a, gen);
        let pre = g.image(gen);
        let fx = apply_f(pre, 1).expect("word over s, t");
        let ok = bs_equal(p, &fx, &x).unwrap_or(false);
        onto &= ok;
        o.line(format!("[{}] f is onto: f({pre}) = {fx} = {x}", mark(ok)));
    }

    let w1 = w_family(1);
    let nontrivial = !oracle.is_trivial(&w1);
    o.line(format!("[{}] w_1 = {w1} is nontrivial", mark(nontrivial)));
    let fw1 = apply_f(&w1, 1).expect("word over s, t");
    let killed = oracle.is_trivial(&fw1);
    o.line(format!("[{}] f(w_1) = {fw1} is trivial", mark(killed)));

    let all = hom && onto && nontrivial && killed;
    o.line(if all {
        "f is an epimorphism with w_1 in its kernel: BS(2,3) is not Hopfian."
    } else {
        "the argument did not go through"
    });
    o.value = json!({
        "homomorphism": hom,
        "onto": onto,
        "w1_nontrivial": nontrivial,
        "f_w1_trivial": killed,
        "w1": w1.to_string(),
        "non_hopfian": all,
    });
    if !all {
        o.code = EXIT_INVALID;
    }
    o
}
