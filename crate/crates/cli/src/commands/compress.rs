use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use entropy_lab::compressors::{
    bwt_pipeline_encode, lz77_encode, lz77_phrase_bits, lz78_encode, lz78_parse, order0_code_bits, order0_encode,
    CompressedBlob,
};

use super::{alphabet_mode, display, load, read_file};
use crate::args::{Algo, CompressArgs, DecompressArgs};
use crate::error::{CliError, CliResult};
use crate::output::{to_value, Report};

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

pub fn compress(args: &CompressArgs) -> CliResult<Report> {
    let s = load(&args.input, &alphabet_mode(&args.alphabet)?)?;
    let n = s.len();
    let mut stages: Vec<(&str, u64)> = Vec::new();
    let mut extra: Vec<(&str, Value)> = Vec::new();
    let blob = match args.algo {
        Algo::Lz77 => {
            let blob = lz77_encode(&s)?;
            let per_phrase = lz77_phrase_bits(n, s.sigma());
            extra.push(("phrases", json!(blob.payload_bits / per_phrase.max(1))));
            stages.push(("phrases", blob.payload_bits));
            blob
        }
        Algo::Lz78 => {
            let blob = lz78_encode(&s)?;
            extra.push(("phrases", json!(lz78_parse(&s)?.len())));
            stages.push(("phrases", blob.payload_bits));
            blob
        }
        Algo::Order0 => {
            let blob = order0_encode(&s)?;
            let code = order0_code_bits(&blob);
            stages.push(("count_table", blob.payload_bits - code));
            stages.push(("code", code));
            blob
        }
        Algo::Bwt => {
            let (blob, pipeline) = bwt_pipeline_encode(&s)?;
            stages.push(("token_count", pipeline.token_count_bits));
            stages.push(("count_table", pipeline.count_table_bits));
            stages.push(("code", pipeline.code_bits));
            extra.push(("effective_mu", json!(pipeline.effective_mu())));
            if args.report {
                extra.push(("pipeline", to_value(&pipeline)?));
            }
            blob
        }
    };
    stages.insert(0, ("header", blob.header_bits()));
    let out = args.out.clone().unwrap_or_else(|| with_suffix(&args.input, ".elb"));
    std::fs::write(&out, blob.to_bytes()).map_err(CliError::io(&out))?;

    let mut report = Report::new("compress", vec!["stage", "bits"]);
    for (stage, bits) in &stages {
        report.rows.push(vec![json!(stage), json!(bits)]);
    }
    report.rows.push(vec![json!("total"), json!(blob.total_bits())]);
    report.rows.push(vec![json!("padding"), json!(blob.padding_bits())]);
    report.set("input", display(&args.input));
    report.set("output", display(&out));
    report.set("algorithm", blob.algorithm.name());
    report.set("n", n);
    report.set("sigma", s.sigma());
    report.set("header_bits", blob.header_bits());
    report.set("payload_bits", blob.payload_bits);
    report.set("padding_bits", blob.padding_bits());
    report.set("total_bits", blob.total_bits());
    report.set("bits_per_symbol", blob.total_bits() as f64 / n as f64);
    for (key, value) in extra {
        report.set(key, value);
    }
    if args.report {
        let items: Vec<Value> = stages.iter().map(|(stage, bits)| json!({"stage": stage, "bits": bits})).collect();
        report.set("stages", items);
    }
    Ok(report)
}

pub fn decompress(args: &DecompressArgs) -> CliResult<Report> {
    let bytes = read_file(&args.blob)?;
    let blob = CompressedBlob::from_bytes(&bytes).map_err(|e| CliError::input(&args.blob, e))?;
    let s = blob.decode().map_err(|e| CliError::input(&args.blob, e))?;
    let out = args.out.clone().unwrap_or_else(|| match args.blob.extension() {
        Some(ext) if ext == "elb" => args.blob.with_extension(""),
        _ => with_suffix(&args.blob, ".out"),
    });
    std::fs::write(&out, s.to_bytes()).map_err(CliError::io(&out))?;
    let mut report = Report::new("decompress", vec!["output", "algorithm", "n"]);
    let algorithm = blob.algorithm.name();
    report.rows.push(vec![display(&out).into(), algorithm.into(), s.len().into()]);
    report.set("input", display(&args.blob));
    report.set("output", display(&out));
    report.set("algorithm", algorithm);
    report.set("n", s.len());
    Ok(report)
}
