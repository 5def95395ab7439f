use std::collections::BTreeSet;
use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pluract::derive::derive_pluractional_form;
use pluract::io::{
    parse_domain, parse_domain_unvalidated, parse_lexicon, parse_lexicon_unvalidated,
    serialize_lexicon, LexiconDocument,
};
use pluract::profile::fit::MIN_FIT_SAMPLES;
use pluract::profile::generate::{MAX_FORM_VERTICES, MAX_VERB_ATOMS, MIN_FORM_VERTICES};
use pluract::profile::{run_sweep, Process, SweepConfig};
use pluract::semantics::{derive_ep, derive_ip, Event};
use pluract::validate::validate_word_form;

mod oracle;

#[derive(Parser)]
#[command(
    name = "pluract",
    version,
    about = "Derive and profile pluractional verb forms and meanings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the pluractional form of a lexicon entry.
    DeriveForm {
        #[arg(long)]
        lexicon: PathBuf,
        /// Strategy name in the lexicon's `strategies` table.
        #[arg(long)]
        strategy: String,
        /// Word form to derive from; defaults to the strategy's verb.
        #[arg(long)]
        entry: Option<String>,
        /// Write the derived form here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the EP or IP meaning of a verb, one event per line.
    DeriveMeaning {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        verb: String,
        #[arg(long, value_enum)]
        kind: MeaningKind,
        /// Also evaluate the definition directly and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Check a lexicon or domain document.
    Validate {
        #[arg(long, conflicts_with = "domain", required_unless_present = "domain")]
        lexicon: Option<PathBuf>,
        #[arg(long)]
        domain: Option<PathBuf>,
    },
    /// Count operations over a size sweep and check the growth claims.
    Profile {
        /// Processes to measure; all of them by default.
        #[arg(long, value_delimiter = ',')]
        kind: Vec<Process>,
        /// Sweep sizes as KEY=n,n,... with KEY one of V, A or E.
        #[arg(long, value_parser = parse_sizes)]
        sizes: Vec<(SizeKey, Vec<usize>)>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV destination. Without it the CSV goes to standard output and
        /// the verdicts to standard error.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MeaningKind {
    Ep,
    Ip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SizeKey {
    V,
    A,
    E,
}

fn parse_sizes(s: &str) -> Result<(SizeKey, Vec<usize>), String> {
    let (key, list) = s.split_once('=').ok_or("expected KEY=n,n,...")?;
    let key = match key {
        "V" => SizeKey::V,
        "A" => SizeKey::A,
        "E" => SizeKey::E,
        _ => return Err(format!("unknown size key {key:?}; expected V, A or E")),
    };
    let values = list
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((key, values))
}

/// Why a command stopped. Usage failures exit 2, everything else 1.
enum Failure {
    Usage(String),
    Domain(String),
}

fn usage(msg: impl Display) -> Failure {
    Failure::Usage(msg.to_string())
}

fn domain(msg: impl Display) -> Failure {
    Failure::Domain(msg.to_string())
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => {
            fs::write(p, bytes).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))
        }
        None => io::stdout()
            .write_all(bytes)
            .map_err(|e| domain(format!("cannot write to standard output: {e}"))),
    }
}

fn derive_form(
    lexicon: &Path,
    strategy: &str,
    entry: Option<&str>,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let doc = parse_lexicon(&read(lexicon)?)
        .map_err(|e| domain(format!("{}: {e}", lexicon.display())))?;
    let binding = doc.strategies.get(strategy).ok_or_else(|| {
        usage(format!(
            "{} has no strategy named {strategy:?}",
            lexicon.display()
        ))
    })?;
    let entry = entry.unwrap_or(&binding.verb);
    let w = doc.word_forms.get(entry).ok_or_else(|| {
        usage(format!(
            "{} has no word form named {entry:?}",
            lexicon.display()
        ))
    })?;
    let resolved = doc.resolve_strategy(binding).map_err(domain)?;
    let w2 = derive_pluractional_form(w, &resolved, &binding.pins).map_err(domain)?;
    eprintln!(
        "{entry}: {} phon + {} morph vertices -> {} phon + {} morph vertices",
        w.phon.vertices.len(),
        w.morph.vertices.len(),
        w2.phon.vertices.len(),
        w2.morph.vertices.len(),
    );
    let mut out = LexiconDocument::default();
    out.word_forms.insert(format!("{entry}:{strategy}"), w2);
    write_out(output, serialize_lexicon(&out).as_bytes())
}

fn derive_meaning(path: &Path, verb: &str, kind: MeaningKind, check: bool) -> Result<(), Failure> {
    let doc = parse_domain(&read(path)?).map_err(|e| domain(format!("{}: {e}", path.display())))?;
    let model = doc.model().map_err(domain)?;
    let v = model.verb(verb).map_err(domain)?;
    let events: BTreeSet<Event> = match kind {
        MeaningKind::Ep => derive_ep(v)
            .map_err(domain)?
            .into_iter()
            .map(Event::Plural)
            .collect(),
        MeaningKind::Ip => derive_ip(&model, verb)
            .map_err(domain)?
            .into_iter()
            .map(Event::Atom)
            .collect(),
    };
    let mut text = String::new();
    for e in &events {
        text.push_str(&e.to_string());
        text.push('\n');
    }
    write_out(None, text.as_bytes())?;
    if check {
        let expected = match kind {
            MeaningKind::Ep => oracle::ep(v),
            MeaningKind::Ip => oracle::ip(&model, verb).map_err(domain)?,
        };
        if expected != events {
            return Err(domain(format!(
                "oracle disagrees: definition gives {} events, derivation {}",
                expected.len(),
                events.len()
            )));
        }
        eprintln!("oracle agrees on {} events", events.len());
    }
    Ok(())
}

fn validate(lexicon: Option<&Path>, domain_path: Option<&Path>) -> Result<(), Failure> {
    if let Some(path) = lexicon {
        let doc = parse_lexicon_unvalidated(&read(path)?)
            .map_err(|e| domain(format!("{}: {e}", path.display())))?;
        let mut broken = false;
        for (name, w) in doc.word_forms.iter().chain(&doc.affixes) {
            let report = validate_word_form(w);
            if !report.is_valid() {
                broken = true;
                eprint!("{name}:\n{report}");
            }
        }
        if broken {
            return Err(domain(format!("{} is invalid", path.display())));
        }
        doc.validate()
            .map_err(|e| domain(format!("{}: {e}", path.display())))?;
        println!("{}: valid", path.display());
    }
    if let Some(path) = domain_path {
        let doc = parse_domain_unvalidated(&read(path)?)
            .map_err(|e| domain(format!("{}: {e}", path.display())))?;
        doc.model()
            .map_err(|e| domain(format!("{}: {e}", path.display())))?;
        println!("{}: valid", path.display());
    }
    Ok(())
}

fn sweep_config(sizes: &[(SizeKey, Vec<usize>)], seed: u64) -> Result<SweepConfig, Failure> {
    let mut cfg = SweepConfig {
        seed,
        ..SweepConfig::default()
    };
    for (key, values) in sizes {
        if values.len() < MIN_FIT_SAMPLES || values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(usage(format!(
                "{key:?} sizes must be at least {MIN_FIT_SAMPLES} strictly increasing values"
            )));
        }
        let (lo, hi) = match key {
            SizeKey::V => (MIN_FORM_VERTICES, MAX_FORM_VERTICES),
            SizeKey::A => (1, MAX_VERB_ATOMS),
            SizeKey::E => ((1 << cfg.ip_atoms) as usize, usize::MAX),
        };
        if let Some(x) = values.iter().find(|&&x| x < lo || x > hi) {
            return Err(usage(format!("{key:?} = {x} is outside [{lo}, {hi}]")));
        }
        match key {
            SizeKey::V => cfg.form_sizes = values.clone(),
            SizeKey::A => cfg.ep_atoms = values.clone(),
            SizeKey::E => cfg.ip_events = values.clone(),
        }
    }
    Ok(cfg)
}

fn profile(
    kinds: &[Process],
    sizes: &[(SizeKey, Vec<usize>)],
    seed: u64,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let cfg = sweep_config(sizes, seed)?;
    let processes = if kinds.is_empty() {
        Process::ALL.to_vec()
    } else {
        kinds.to_vec()
    };
    let report = run_sweep(&cfg, &processes).map_err(domain)?;
    let mut csv = Vec::new();
    report.write_csv(&mut csv).map_err(domain)?;
    write_out(output, &csv)?;
    let verdicts = report.verify_available();
    let mut text = String::new();
    for v in &verdicts {
        text.push_str(&format!("{v}\n"));
    }
    if output.is_some() {
        write_out(None, text.as_bytes())?;
    } else {
        eprint!("{text}");
    }
    let failed = verdicts.iter().filter(|v| !v.passed).count();
    if failed > 0 {
        return Err(domain(format!(
            "{failed} of {} verdicts failed",
            verdicts.len()
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::DeriveForm {
            lexicon,
            strategy,
            entry,
            output,
        } => derive_form(lexicon, strategy, entry.as_deref(), output.as_deref()),
        Command::DeriveMeaning {
            domain,
            verb,
            kind,
            oracle,
        } => derive_meaning(domain, verb, *kind, *oracle),
        Command::Validate { lexicon, domain } => validate(lexicon.as_deref(), domain.as_deref()),
        Command::Profile {
            kind,
            sizes,
            seed,
            output,
        } => profile(kind, sizes, *seed, output.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
