use std::path::PathBuf;

use serde::Serialize;

use entropy_lab::generators::GeneratorSpec;
use entropy_lab::{AlphabetMode, MemoryCap, Sequence};

use super::{alphabet_mode, display, load};
use crate::args::{GenerateArgs, GenerateKind};
use crate::error::{CliError, CliResult};
use crate::output::Report;

/// Contents of the `PATH.meta.toml` sidecar.
#[derive(Debug, Serialize)]
struct Sidecar {
    n: usize,
    sigma: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    corpus: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    restarts: Vec<usize>,
    generator: GeneratorSpec,
}

fn default_name(spec: &GeneratorSpec) -> PathBuf {
    PathBuf::from(match spec {
        GeneratorSpec::DeBruijn { sigma, k } => format!("de-bruijn-s{sigma}-k{k}.txt"),
        GeneratorSpec::Champernowne { base, n } => format!("champernowne-b{base}-n{n}.txt"),
        GeneratorSpec::CopelandErdos { base, n } => format!("copeland-erdos-b{base}-n{n}.txt"),
        GeneratorSpec::MarkovSample { k, n, seed, .. } => format!("markov-sample-k{k}-n{n}-seed{seed}.txt"),
    })
}

pub fn sidecar_path(out: &std::path::Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".meta.toml");
    PathBuf::from(name)
}

pub fn generate(args: &GenerateArgs, cap: MemoryCap) -> CliResult<Report> {
    let (spec, corpus_path, mode): (GeneratorSpec, Option<PathBuf>, Option<AlphabetMode>) = match &args.kind {
        GenerateKind::DeBruijn { sigma, k } => (GeneratorSpec::DeBruijn { sigma: *sigma, k: *k }, None, None),
        GenerateKind::Champernowne { base, n } => (GeneratorSpec::Champernowne { base: *base, n: *n }, None, None),
        GenerateKind::CopelandErdos { base, n } => (GeneratorSpec::CopelandErdos { base: *base, n: *n }, None, None),
        GenerateKind::MarkovSample {
            corpus,
            k,
            n,
            seed,
            start,
            alphabet,
        } => (
            GeneratorSpec::MarkovSample {
                k: *k,
                n: *n,
                seed: *seed,
                start: start.clone(),
            },
            Some(corpus.clone()),
            Some(alphabet_mode(alphabet)?),
        ),
        GenerateKind::FromSpec { spec, corpus, alphabet } => {
            let text = std::fs::read_to_string(spec).map_err(CliError::io(spec))?;
            let parsed: GeneratorSpec = toml::from_str(&text).map_err(|e| CliError::input(spec, e))?;
            (parsed, corpus.clone(), Some(alphabet_mode(alphabet)?))
        }
    };
    spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let corpus: Option<Sequence> = match (&spec, &corpus_path) {
        (GeneratorSpec::MarkovSample { .. }, Some(path)) => {
            Some(load(path, mode.as_ref().unwrap_or(&AlphabetMode::Inferred))?)
        }
        (GeneratorSpec::MarkovSample { .. }, None) => {
            return Err(CliError::Usage("markov-sample specs need --corpus".into()));
        }
        _ => None,
    };
    let sample = spec.generate(corpus.as_ref(), cap)?;
    let out = args.out.clone().unwrap_or_else(|| default_name(&spec));
    std::fs::write(&out, sample.sequence.to_bytes()).map_err(CliError::io(&out))?;
    let sidecar = Sidecar {
        n: sample.sequence.len(),
        sigma: sample.sequence.sigma(),
        corpus: corpus_path.as_deref().map(display),
        restarts: sample.restarts.clone(),
        generator: spec,
    };
    let meta = sidecar_path(&out);
    let toml_text = toml::to_string(&sidecar).map_err(|e| CliError::Output(e.to_string()))?;
    std::fs::write(&meta, toml_text).map_err(CliError::io(&meta))?;

    let mut report = Report::new("generate", vec!["path", "n", "sigma", "restarts", "sidecar"]);
    report.rows.push(vec![
        display(&out).into(),
        sidecar.n.into(),
        sidecar.sigma.into(),
        sidecar.restarts.len().into(),
        display(&meta).into(),
    ]);
    report.set("path", display(&out));
    report.set("sidecar", display(&meta));
    report.set("n", sidecar.n);
    report.set("sigma", sidecar.sigma);
    report.set("restarts", sidecar.restarts);
    report.set("generator", crate::output::to_value(&sidecar.generator)?);
    Ok(report)
}
