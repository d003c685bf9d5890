use rayon::prelude::*;
use serde_json::{json, Value};

use entropy_lab::bounds::{huffman_interval_check, klv_report, manzini_bound, verify_manzini, BoundParams, BoundReport};
use entropy_lab::entropy::Distribution;
use entropy_lab::generators::SampleRng;

use super::{alphabet_mode, display, load};
use crate::args::{BoundKind, VerifyArgs};
use crate::error::{CliError, CliResult};
use crate::output::{to_value, Report};

struct FileResult {
    summary: Value,
    reports: Vec<BoundReport>,
}

fn random_distribution(rng: &mut SampleRng, max_sigma: usize) -> Distribution {
    let sigma = 1 + rng.below(max_sigma as u64) as usize;
    let mut weights: Vec<f64> = (0..sigma).map(|_| rng.unit()).collect();
    if weights.iter().all(|&w| w == 0.0) {
        weights[0] = 1.0;
    }
    Distribution::from_weights(&weights).expect("positive finite weights")
}

/// Returns the report and whether every bound was satisfied.
pub fn verify(args: &VerifyArgs) -> CliResult<(Report, bool)> {
    let wants = |b: BoundKind| args.bound.contains(&b);
    let needs_files = wants(BoundKind::Manzini) || wants(BoundKind::Klv);
    if needs_files && args.files.is_empty() {
        return Err(CliError::Usage("the manzini and klv bounds need at least one input file".into()));
    }
    if wants(BoundKind::Noiseless) && args.max_sigma == 0 {
        return Err(CliError::Usage("--max-sigma must be at least 1".into()));
    }
    let mode = alphabet_mode(&args.alphabet)?;
    let ks: Vec<usize> = args.k.clone().collect();

    let per_file: Vec<FileResult> = if needs_files {
        args.files
            .par_iter()
            .map(|path| {
                let s = load(path, &mode)?;
                let v = verify_manzini(&s, &ks)?;
                let mut reports = Vec::new();
                if wants(BoundKind::Manzini) {
                    match args.mu {
                        None => reports.extend(v.reports.iter().cloned()),
                        Some(mu) => {
                            for &k in &ks {
                                let params = BoundParams {
                                    k: Some(k),
                                    sigma: s.sigma(),
                                    n: s.len(),
                                    mu: Some(mu),
                                    ..BoundParams::default()
                                };
                                let formula = manzini_bound(&s, k, mu)?;
                                reports.push(BoundReport::upper("manzini", params, formula, v.pipeline.total_bits as f64));
                            }
                        }
                    }
                }
                if wants(BoundKind::Klv) {
                    for &lambda in &args.lambda {
                        for &k in &ks {
                            reports.push(klv_report(&s, k, lambda, args.c, v.pipeline.total_bits as f64)?);
                        }
                    }
                }
                Ok(FileResult {
                    summary: json!({
                        "path": display(path),
                        "n": s.len(),
                        "sigma": s.sigma(),
                        "measured_bits": v.pipeline.total_bits,
                        "mu_measured": v.mu_measured,
                        "mu_reference": v.mu_reference,
                    }),
                    reports,
                })
            })
            .collect::<CliResult<_>>()?
    } else {
        Vec::new()
    };

    let mut tagged: Vec<(Option<String>, BoundReport)> = Vec::new();
    for f in &per_file {
        let path = f.summary["path"].as_str().map(str::to_string);
        tagged.extend(f.reports.iter().cloned().map(|r| (path.clone(), r)));
    }
    if wants(BoundKind::Noiseless) {
        let mut rng = SampleRng::new(args.seed);
        for _ in 0..args.count {
            let p = random_distribution(&mut rng, args.max_sigma);
            tagged.push((None, huffman_interval_check(&p)));
        }
    }

    let unsatisfied = tagged.iter().filter(|(_, r)| !r.satisfied).count();
    let mut report = Report::new(
        "verify",
        vec![
            "file",
            "bound",
            "k",
            "lambda",
            "mu",
            "c",
            "sigma",
            "n",
            "lower_bits",
            "formula_bits",
            "measured_bits",
            "slack_bits",
            "satisfied",
        ],
    );
    let mut items = Vec::with_capacity(tagged.len());
    for (file, r) in &tagged {
        report.rows.push(vec![
            json!(file),
            json!(r.bound),
            json!(r.params.k),
            json!(r.params.lambda),
            json!(r.params.mu),
            json!(r.params.c),
            json!(r.params.sigma),
            json!(r.params.n),
            json!(r.lower_bits),
            json!(r.formula_bits),
            json!(r.measured_bits),
            json!(r.slack_bits),
            json!(r.satisfied),
        ]);
        let mut item = to_value(r)?;
        if let (Some(file), Some(obj)) = (file, item.as_object_mut()) {
            obj.insert("file".into(), json!(file));
        }
        items.push(item);
    }
    report.set("files", per_file.into_iter().map(|f| f.summary).collect::<Vec<_>>());
    report.set("reports", items);
    report.set("summary", json!({"reports": tagged.len(), "unsatisfied": unsatisfied}));
    Ok((report, unsatisfied == 0))
}
