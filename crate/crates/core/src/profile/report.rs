use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::derive::{derive_pluractional_form, Pins, Strategy, StrategyKind};
use crate::error::ProfileError;
use crate::graph::WordForm;
use crate::profile::fit::{fit_growth, Fit, GrowthMode};
use crate::profile::generate::{generate_event_domain, generate_form_input, SWEEP_VERB};
use crate::profile::literal::{derive_ep_counted, derive_form_counted, derive_ip_counted};
use crate::profile::OpCounter;
use crate::semantics::{atomic, derive_ep, derive_ip, AtomId, Model};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Process {
    Affix,
    TotalRedup,
    PartialRedup,
    Ep,
    Ip,
}

impl Process {
    pub const ALL: [Process; 5] = [
        Process::Affix,
        Process::TotalRedup,
        Process::PartialRedup,
        Process::Ep,
        Process::Ip,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Process::Affix => "affix",
            Process::TotalRedup => "total-redup",
            Process::PartialRedup => "partial-redup",
            Process::Ep => "ep",
            Process::Ip => "ip",
        }
    }

    pub fn is_form(self) -> bool {
        matches!(
            self,
            Process::Affix | Process::TotalRedup | Process::PartialRedup
        )
    }
}

impl fmt::Display for Process {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Process {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Process::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown process {s:?}"))
    }
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum ProcessInput {
    Form {
        word: WordForm,
        strategy: Strategy,
        pins: Pins,
    },
    Meaning {
        model: Model,
        verb: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ProcessOutput {
    Form(WordForm),
    Plurals(BTreeSet<BTreeSet<AtomId>>),
    Atoms(BTreeSet<AtomId>),
}

fn mismatch(process: Process) -> ProfileError {
    ProfileError::InputMismatch(process)
}

fn form_kind(process: Process) -> Option<StrategyKind> {
    match process {
        Process::Affix => Some(StrategyKind::Affix),
        Process::TotalRedup => Some(StrategyKind::TotalRedup),
        Process::PartialRedup => Some(StrategyKind::PartialRedup),
        Process::Ep | Process::Ip => None,
    }
}

/// Runs `process` with the indexed implementation.
pub fn run(process: Process, input: &ProcessInput) -> Result<ProcessOutput, ProfileError> {
    match (process, input) {
        (
            p,
            ProcessInput::Form {
                word,
                strategy,
                pins,
            },
        ) if form_kind(p) == Some(strategy.kind()) => Ok(ProcessOutput::Form(
            derive_pluractional_form(word, strategy, pins)?,
        )),
        (Process::Ep, ProcessInput::Meaning { model, verb }) => {
            Ok(ProcessOutput::Plurals(derive_ep(model.verb(verb)?)?))
        }
        (Process::Ip, ProcessInput::Meaning { model, verb }) => {
            Ok(ProcessOutput::Atoms(derive_ip(model, verb)?))
        }
        (p, _) => Err(mismatch(p)),
    }
}

/// Runs `process` with the scan-based implementation, counting every step.
pub fn instrumented_run(
    process: Process,
    input: &ProcessInput,
) -> Result<(ProcessOutput, OpCounter), ProfileError> {
    let mut c = OpCounter::default();
    let out = match (process, input) {
        (
            p,
            ProcessInput::Form {
                word,
                strategy,
                pins,
            },
        ) if form_kind(p) == Some(strategy.kind()) => {
            ProcessOutput::Form(derive_form_counted(word, strategy, pins, &mut c)?)
        }
        (Process::Ep, ProcessInput::Meaning { model, verb }) => {
            ProcessOutput::Plurals(derive_ep_counted(model.verb(verb)?, &mut c)?)
        }
        (Process::Ip, ProcessInput::Meaning { model, verb }) => {
            ProcessOutput::Atoms(derive_ip_counted(model, verb, &mut c)?)
        }
        (p, _) => return Err(mismatch(p)),
    };
    Ok((out, c))
}

/// Size parameters of one input. Form inputs set V, D, N, L and C from
/// the word's phonology and correspondence; meaning inputs set A and E.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SizeParams {
    pub v: Option<usize>,
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub l: Option<usize>,
    pub c: Option<usize>,
    pub a: Option<usize>,
    pub e: Option<usize>,
}

impl SizeParams {
    pub fn of(input: &ProcessInput) -> Self {
        match input {
            ProcessInput::Form { word, .. } => SizeParams {
                v: Some(word.phon.vertices.len()),
                d: Some(word.phon.dominance.len()),
                n: Some(word.phon.naming.len()),
                l: Some(word.phon.labels.len()),
                c: Some(word.correspondence.len()),
                ..SizeParams::default()
            },
            ProcessInput::Meaning { model, verb } => SizeParams {
                a: model.verbs.get(verb).map(|v| atomic(&v.extension).len()),
                e: Some(model.events.event_count()),
                ..SizeParams::default()
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileSample {
    pub process: Process,
    pub size: SizeParams,
    pub counter: OpCounter,
    pub wall_time: Duration,
}

/// Instrumented run of one input, recorded as a sample.
pub fn sample(process: Process, input: &ProcessInput) -> Result<ProfileSample, ProfileError> {
    let start = Instant::now();
    let (_, counter) = instrumented_run(process, input)?;
    Ok(ProfileSample {
        process,
        size: SizeParams::of(input),
        counter,
        wall_time: start.elapsed(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// V values for the form processes.
    pub form_sizes: Vec<usize>,
    /// A values for EP, each with one distractor.
    pub ep_atoms: Vec<usize>,
    /// E values for IP, reached by padding `ip_atoms` verb atoms with
    /// distractors.
    pub ip_events: Vec<usize>,
    pub ip_atoms: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            form_sizes: vec![8, 16, 32, 64, 128],
            ep_atoms: (6..=10).collect(),
            ip_events: vec![256, 512, 1024, 2048],
            ip_atoms: 4,
            seed: 0,
        }
    }
}

type FitSpec = (
    &'static str,
    Process,
    GrowthMode,
    fn(&SizeParams) -> Option<usize>,
);

/// Named fit over the samples it cites.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedFit {
    pub name: &'static str,
    pub fit: Fit,
    pub samples: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ProfileReport {
    pub samples: Vec<ProfileSample>,
    pub fits: Vec<NamedFit>,
}

/// Measures the requested processes over the sweep.
pub fn run_sweep(
    config: &SweepConfig,
    processes: &[Process],
) -> Result<ProfileReport, ProfileError> {
    let wanted: BTreeSet<Process> = processes.iter().copied().collect();
    let mut samples = Vec::new();
    for &v in &config.form_sizes {
        let input = generate_form_input(v, config.seed)?;
        for &p in wanted.iter().filter(|p| p.is_form()) {
            let strategy = input.strategy(p).ok_or(ProfileError::InputMismatch(p))?;
            let pi = ProcessInput::Form {
                word: input.word.clone(),
                strategy,
                pins: Pins::default(),
            };
            samples.push(sample(p, &pi)?);
        }
    }
    if wanted.contains(&Process::Ep) {
        for &a in &config.ep_atoms {
            let model = generate_event_domain(a, 1, config.seed)?;
            let pi = ProcessInput::Meaning {
                model,
                verb: SWEEP_VERB.into(),
            };
            samples.push(sample(Process::Ep, &pi)?);
        }
    }
    if wanted.contains(&Process::Ip) {
        let closure = (1usize << config.ip_atoms) - 1;
        for &e in &config.ip_events {
            if e <= closure {
                return Err(ProfileError::SizeTooSmall {
                    min: closure + 1,
                    got: e,
                });
            }
            let model = generate_event_domain(config.ip_atoms, e - closure, config.seed)?;
            let pi = ProcessInput::Meaning {
                model,
                verb: SWEEP_VERB.into(),
            };
            samples.push(sample(Process::Ip, &pi)?);
        }
    }
    samples.sort_by_key(|s| s.process);
    let mut report = ProfileReport {
        samples,
        fits: Vec::new(),
    };
    report.fits = report.compute_fits();
    Ok(report)
}

impl ProfileReport {
    pub fn processes(&self) -> BTreeSet<Process> {
        self.samples.iter().map(|s| s.process).collect()
    }

    /// Indices of the samples of `p`, in sweep order.
    pub fn indices(&self, p: Process) -> Vec<usize> {
        (0..self.samples.len())
            .filter(|&i| self.samples[i].process == p)
            .collect()
    }

    fn series(
        &self,
        idx: &[usize],
        size: impl Fn(&SizeParams) -> Option<usize>,
    ) -> Vec<(f64, f64)> {
        idx.iter()
            .filter_map(|&i| {
                let s = &self.samples[i];
                size(&s.size).map(|x| (x as f64, s.counter.total() as f64))
            })
            .collect()
    }

    fn compute_fits(&self) -> Vec<NamedFit> {
        let specs: [FitSpec; 6] = [
            ("affix-vs-V", Process::Affix, GrowthMode::PowerLaw, |s| s.v),
            (
                "total-redup-vs-V",
                Process::TotalRedup,
                GrowthMode::PowerLaw,
                |s| s.v,
            ),
            (
                "partial-redup-vs-V",
                Process::PartialRedup,
                GrowthMode::PowerLaw,
                |s| s.v,
            ),
            ("ep-vs-A", Process::Ep, GrowthMode::Exponential, |s| s.a),
            ("ep-vs-E", Process::Ep, GrowthMode::PowerLaw, |s| s.e),
            ("ip-vs-E", Process::Ip, GrowthMode::PowerLaw, |s| s.e),
        ];
        specs
            .into_iter()
            .filter_map(|(name, p, mode, size)| {
                let samples = self.indices(p);
                let fit = fit_growth(&self.series(&samples, size), mode).ok()?;
                Some(NamedFit { name, fit, samples })
            })
            .collect()
    }

    pub fn fit(&self, name: &str) -> Option<&NamedFit> {
        self.fits.iter().find(|f| f.name == name)
    }

    /// One CSV row per sample.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), ProfileError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "process",
            "V",
            "D",
            "N",
            "L",
            "C",
            "A",
            "E",
            "membership_checks",
            "insertions",
            "copies",
            "pair_creations",
            "total",
            "wall_time_ms",
        ])?;
        let opt = |x: Option<usize>| x.map(|x| x.to_string()).unwrap_or_default();
        for s in &self.samples {
            let z = &s.size;
            let c = &s.counter;
            w.write_record([
                s.process.to_string(),
                opt(z.v),
                opt(z.d),
                opt(z.n),
                opt(z.l),
                opt(z.c),
                opt(z.a),
                opt(z.e),
                c.membership_checks.to_string(),
                c.insertions.to_string(),
                c.copies.to_string(),
                c.pair_creations.to_string(),
                c.total().to_string(),
                format!("{:.3}", s.wall_time.as_secs_f64() * 1000.0),
            ])?;
        }
        w.flush().map_err(|e| ProfileError::Csv(e.into()))?;
        Ok(())
    }
}

/// A growth claim checked against the measurements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// Affixation cost does not depend on V.
    AffixationConstant,
    /// Total reduplication is monotone in V and bounded by c·V³.
    TotalRedupCubicBound,
    /// Partial reduplication is monotone in V and bounded by c·V³.
    PartialRedupCubicBound,
    /// EP cost doubles with each added atom.
    EpExponential,
    /// IP cost grows with the square of E.
    IpQuadratic,
    /// EP grows linearly in E and IP with a strictly larger exponent.
    IpExceedsEp,
    /// Every generated domain with a distractor has E ≥ 2^A.
    PowersetBound,
}

impl Claim {
    pub fn as_str(self) -> &'static str {
        match self {
            Claim::AffixationConstant => "affixation-constant",
            Claim::TotalRedupCubicBound => "total-redup-cubic-bound",
            Claim::PartialRedupCubicBound => "partial-redup-cubic-bound",
            Claim::EpExponential => "ep-exponential",
            Claim::IpQuadratic => "ip-quadratic",
            Claim::IpExceedsEp => "ip-exceeds-ep",
            Claim::PowersetBound => "powerset-bound",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub claim: Claim,
    pub passed: bool,
    pub measured: String,
    /// Indices into the report's samples.
    pub samples: Vec<usize>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.claim, self.measured)
    }
}

/// Acceptance thresholds.
pub mod thresholds {
    pub const CUBIC_SLOPE: (f64, f64) = (1.0, 3.3);
    pub const EP_RATIO: (f64, f64) = (1.8, 2.2);
    pub const IP_SLOPE: (f64, f64) = (1.7, 2.3);
    pub const EP_SLOPE: (f64, f64) = (0.8, 1.2);
}

fn within(x: f64, (lo, hi): (f64, f64)) -> bool {
    (lo..=hi).contains(&x)
}

fn fmt_list(xs: impl IntoIterator<Item = impl fmt::Display>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl ProfileReport {
    fn totals(&self, idx: &[usize]) -> Vec<u64> {
        idx.iter()
            .map(|&i| self.samples[i].counter.total())
            .collect()
    }

    fn affixation_verdict(&self) -> Verdict {
        let idx = self.indices(Process::Affix);
        let totals = self.totals(&idx);
        let distinct: BTreeSet<u64> = totals.iter().copied().collect();
        Verdict {
            claim: Claim::AffixationConstant,
            passed: idx.len() >= 2 && distinct.len() == 1,
            measured: format!("totals [{}]", fmt_list(&totals)),
            samples: idx,
        }
    }

    fn cubic_verdict(&self, p: Process, claim: Claim) -> Verdict {
        let idx = self.indices(p);
        let pts = self.series(&idx, |s| s.v);
        let monotone = pts.windows(2).all(|w| w[1].1 > w[0].1);
        let (bounded, c) = match pts.first() {
            Some(&(v0, t0)) => {
                let c = t0 / v0.powi(3);
                (pts.iter().all(|&(v, t)| t <= c * v.powi(3)), c)
            }
            None => (false, f64::NAN),
        };
        let slope = fit_growth(&pts, GrowthMode::PowerLaw)
            .ok()
            .and_then(|f| f.slope());
        let slope_ok = slope.is_some_and(|s| within(s, thresholds::CUBIC_SLOPE));
        Verdict {
            claim,
            passed: monotone && bounded && slope_ok,
            measured: format!(
                "totals [{}], monotone {monotone}, bounded by {c:.4}·V³ {bounded}, slope {}",
                fmt_list(pts.iter().map(|p| p.1)),
                slope.map_or("n/a".into(), |s| format!("{s:.3}")),
            ),
            samples: idx,
        }
    }

    fn ep_ratio_verdict(&self) -> Verdict {
        let idx = self.indices(Process::Ep);
        let pts = self.series(&idx, |s| s.a);
        let consecutive = pts.windows(2).all(|w| w[1].0 == w[0].0 + 1.0);
        let ratios: Vec<f64> = pts.windows(2).map(|w| w[1].1 / w[0].1).collect();
        let passed = consecutive
            && ratios.len() + 1 >= crate::profile::fit::MIN_FIT_SAMPLES
            && ratios.iter().all(|&r| within(r, thresholds::EP_RATIO));
        Verdict {
            claim: Claim::EpExponential,
            passed,
            measured: format!(
                "ratios [{}]",
                fmt_list(ratios.iter().map(|r| format!("{r:.3}")))
            ),
            samples: idx,
        }
    }

    fn slope_of(&self, p: Process) -> (Vec<usize>, Option<f64>) {
        let idx = self.indices(p);
        let slope = fit_growth(&self.series(&idx, |s| s.e), GrowthMode::PowerLaw)
            .ok()
            .and_then(|f| f.slope());
        (idx, slope)
    }

    fn ip_verdict(&self) -> Verdict {
        let (idx, slope) = self.slope_of(Process::Ip);
        Verdict {
            claim: Claim::IpQuadratic,
            passed: slope.is_some_and(|s| within(s, thresholds::IP_SLOPE)),
            measured: format!(
                "slope vs E {}",
                slope.map_or("n/a".into(), |s| format!("{s:.3}"))
            ),
            samples: idx,
        }
    }

    fn ip_exceeds_ep_verdict(&self) -> Verdict {
        let (mut idx, ep) = self.slope_of(Process::Ep);
        let (ip_idx, ip) = self.slope_of(Process::Ip);
        idx.extend(ip_idx);
        let passed = match (ep, ip) {
            (Some(ep), Some(ip)) => within(ep, thresholds::EP_SLOPE) && ip > ep,
            _ => false,
        };
        let show = |s: Option<f64>| s.map_or("n/a".into(), |s| format!("{s:.3}"));
        Verdict {
            claim: Claim::IpExceedsEp,
            passed,
            measured: format!("ep slope vs E {}, ip slope vs E {}", show(ep), show(ip)),
            samples: idx,
        }
    }

    fn powerset_verdict(&self) -> Verdict {
        let idx: Vec<usize> = (0..self.samples.len())
            .filter(|&i| !self.samples[i].process.is_form())
            .collect();
        let failing: Vec<String> = idx
            .iter()
            .filter_map(|&i| {
                let s = &self.samples[i].size;
                let (a, e) = (s.a?, s.e?);
                let ok = u32::try_from(a)
                    .ok()
                    .and_then(|a| 1usize.checked_shl(a))
                    .is_some_and(|p| e >= p);
                (!ok).then(|| format!("A={a} E={e}"))
            })
            .collect();
        Verdict {
            claim: Claim::PowersetBound,
            passed: !idx.is_empty() && failing.is_empty(),
            measured: if failing.is_empty() {
                format!("E ≥ 2^A in all {} domains", idx.len())
            } else {
                format!("violated by {}", fmt_list(failing))
            },
            samples: idx,
        }
    }

    /// Verdicts for whichever claims the report has samples for.
    pub fn verify_available(&self) -> Vec<Verdict> {
        let have = self.processes();
        let mut out = Vec::new();
        if have.contains(&Process::Affix) {
            out.push(self.affixation_verdict());
        }
        if have.contains(&Process::TotalRedup) {
            out.push(self.cubic_verdict(Process::TotalRedup, Claim::TotalRedupCubicBound));
        }
        if have.contains(&Process::PartialRedup) {
            out.push(self.cubic_verdict(Process::PartialRedup, Claim::PartialRedupCubicBound));
        }
        if have.contains(&Process::Ep) {
            out.push(self.ep_ratio_verdict());
        }
        if have.contains(&Process::Ip) {
            out.push(self.ip_verdict());
        }
        if have.contains(&Process::Ep) && have.contains(&Process::Ip) {
            out.push(self.ip_exceeds_ep_verdict());
        }
        if have.contains(&Process::Ep) || have.contains(&Process::Ip) {
            out.push(self.powerset_verdict());
        }
        out
    }
}

/// Every verdict; the report must cover all five processes.
pub fn verify_theorems(report: &ProfileReport) -> Result<Vec<Verdict>, ProfileError> {
    let have = report.processes();
    if let Some(&p) = Process::ALL.iter().find(|p| !have.contains(p)) {
        return Err(ProfileError::MissingProcess(p));
    }
    Ok(report.verify_available())
}

/// Totals per process, keyed for quick inspection.
pub fn totals_by_process(report: &ProfileReport) -> BTreeMap<Process, Vec<u64>> {
    Process::ALL
        .into_iter()
        .map(|p| (p, report.totals(&report.indices(p))))
        .filter(|(_, t)| !t.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;
    use crate::profile::generate::FormInput;

    fn small() -> SweepConfig {
        SweepConfig {
            form_sizes: vec![8, 16, 32, 64],
            ep_atoms: vec![3, 4, 5, 6],
            ip_events: vec![32, 64, 128, 256],
            ip_atoms: 4,
            seed: 7,
        }
    }

    #[test]
    fn transparency_on_generated_inputs() {
        for v in [8, 21, 40] {
            let f: FormInput = generate_form_input(v, 2).unwrap();
            for p in [Process::Affix, Process::TotalRedup, Process::PartialRedup] {
                let input = ProcessInput::Form {
                    word: f.word.clone(),
                    strategy: f.strategy(p).unwrap(),
                    pins: Pins::default(),
                };
                let (slow, _) = instrumented_run(p, &input).unwrap();
                assert_eq!(slow, run(p, &input).unwrap(), "{p} V={v}");
            }
        }
        for (a, d) in [(1, 0), (3, 5), (5, 40)] {
            let model = generate_event_domain(a, d, 4).unwrap();
            let input = ProcessInput::Meaning {
                model,
                verb: SWEEP_VERB.into(),
            };
            for p in [Process::Ep, Process::Ip] {
                let (slow, _) = instrumented_run(p, &input).unwrap();
                assert_eq!(slow, run(p, &input).unwrap(), "{p} A={a} d={d}");
            }
        }
    }

    #[test]
    fn mismatched_input() {
        let model = fixtures::sit_domain().model().unwrap();
        let input = ProcessInput::Meaning {
            model,
            verb: "sit".into(),
        };
        assert!(matches!(
            run(Process::Affix, &input),
            Err(ProfileError::InputMismatch(_))
        ));
    }

    #[test]
    fn counts_are_deterministic() {
        let a = run_sweep(&small(), &Process::ALL).unwrap();
        let b = run_sweep(&small(), &Process::ALL).unwrap();
        assert_eq!(totals_by_process(&a), totals_by_process(&b));
    }

    #[test]
    fn affix_alone_gives_one_verdict() {
        let r = run_sweep(&small(), &[Process::Affix]).unwrap();
        let v = r.verify_available();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].claim, Claim::AffixationConstant);
        assert!(v[0].passed, "{}", v[0]);
        assert!(matches!(
            verify_theorems(&r),
            Err(ProfileError::MissingProcess(_))
        ));
    }

    #[test]
    fn csv_has_one_row_per_sample() {
        let r = run_sweep(&small(), &[Process::Affix, Process::Ep]).unwrap();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "process,V,D,N,L,C,A,E,membership_checks,insertions,copies,pair_creations,total,wall_time_ms"
        );
        assert_eq!(lines.count(), r.samples.len());
    }

    #[test]
    fn counts_at_smallest_size_are_pinned() {
        let cfg = SweepConfig {
            form_sizes: vec![8],
            ..SweepConfig::default()
        };
        let r = run_sweep(
            &cfg,
            &[Process::Affix, Process::TotalRedup, Process::PartialRedup],
        )
        .unwrap();
        let totals: Vec<u64> = r.samples.iter().map(|s| s.counter.total()).collect();
        assert_eq!(totals, [22, 503, 379]);
    }

    #[test]
    fn tsix_partial_redup_baseline() {
        let doc = fixtures::tsix_lexicon();
        let binding = doc.strategy("ip").unwrap();
        let input = ProcessInput::Form {
            word: doc.word_forms["tsix"].clone(),
            strategy: doc.resolve_strategy(binding).unwrap(),
            pins: binding.pins.clone(),
        };
        let (out, c) = instrumented_run(Process::PartialRedup, &input).unwrap();
        assert_eq!(out, ProcessOutput::Form(fixtures::tsix_pluractional()));
        assert_eq!(
            (
                c.membership_checks,
                c.insertions,
                c.copies,
                c.pair_creations
            ),
            (276, 90, 1, 11)
        );
    }

    #[test]
    fn ip_below_closure_is_rejected() {
        let cfg = SweepConfig {
            ip_events: vec![10, 20, 30, 40],
            ..small()
        };
        assert!(matches!(
            run_sweep(&cfg, &[Process::Ip]),
            Err(ProfileError::SizeTooSmall { .. })
        ));
    }
}
