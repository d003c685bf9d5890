use serde_json::json;

use entropy_lab::bounds::{convergence_experiment, Family};
use entropy_lab::MemoryCap;

use crate::args::{ConvergenceArgs, FamilyKind};
use crate::error::CliResult;
use crate::output::{to_value, Report};

pub fn convergence(args: &ConvergenceArgs, cap: MemoryCap) -> CliResult<Report> {
    let family = match args.family {
        FamilyKind::Constant => Family::Constant,
        FamilyKind::ConstantThenB => Family::ConstantThenB,
        FamilyKind::DeBruijn => Family::DeBruijn { sigma: args.sigma },
        FamilyKind::Champernowne => Family::Champernowne { base: args.base },
    };
    let rows = convergence_experiment(&family, &args.params, args.k, cap)?;
    let mut report = Report::new("convergence", vec!["n", "H_k", "lz77_ratio", "lz78_ratio", "bwt_ratio"]);
    for r in &rows {
        report.rows.push(vec![json!(r.n), json!(r.hk), json!(r.lz77_ratio), json!(r.lz78_ratio), json!(r.bwt_ratio)]);
    }
    report.set("family", to_value(&family)?);
    report.set("k", args.k);
    report.set("rows", to_value(&rows)?);
    Ok(report)
}
