//! Command implementations and stdout reports. All floats print with 17
//! significant digits so reported values round-trip losslessly.

use std::fs;
use std::path::Path;

use projkit::{
    classify_hyperplane_pair, project_affine_hyperplane, project_two_hyperplanes, AffineSubspace,
    ConvergenceTable, ExperimentConfig, Hyperplane, LinearSystemOutcome, Tolerances,
    TrichotomyCase, TrichotomyResult, Vector,
};

use crate::problem::{format_float, ProblemFile, ProblemKind};
use crate::CliError;

fn format_vector(v: &Vector) -> String {
    v.as_slice()
        .iter()
        .map(|&e| format_float(e))
        .collect::<Vec<_>>()
        .join(" ")
}

fn vector(entries: &[f64]) -> Result<Vector, CliError> {
    Vector::new(entries.to_vec()).map_err(CliError::from)
}

fn read_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|err| CliError::Parse(format!("cannot read {}: {err}", path.display())))?;
    ProblemFile::parse(&text)
}

fn require_query(query: &Option<Vec<f64>>) -> Result<Vector, CliError> {
    match query {
        Some(entries) => vector(entries),
        None => Err(CliError::Parse(
            "this command needs a `query` line in the problem file".to_string(),
        )),
    }
}

fn print_trichotomy(result: &TrichotomyResult) {
    println!("case: {}", result.case);
    println!("point: {}", format_vector(&result.point));
    if result.case == TrichotomyCase::DegenerateInconsistent {
        println!("gap: {}", format_vector(&result.gap));
        println!("gap_norm: {}", format_float(result.gap.norm()));
    }
    println!("tangential_norm: {}", format_float(result.tangential_norm));
    if let Some(d) = result.discriminant {
        println!("discriminant: {}", format_float(d));
    }
}

pub fn cmd_project(input: &Path, tol: &Tolerances) -> Result<(), CliError> {
    match read_problem(input)? {
        ProblemFile::AffineHyperplane(p) => {
            let point = vector(&p.point)?;
            let spanning = p
                .spanning
                .iter()
                .map(|s| vector(s))
                .collect::<Result<Vec<_>, _>>()?;
            let subspace = AffineSubspace::from_point_and_span(&point, &spanning, tol)?;
            let hyperplane = Hyperplane::new(vector(&p.normal)?, p.offset)?;
            let query = require_query(&p.query)?;
            let result = project_affine_hyperplane(&subspace, &hyperplane, &query, tol)?;
            print_trichotomy(&result);
        }
        ProblemFile::TwoHyperplanes(p) => {
            let first = Hyperplane::new(vector(&p.normal1)?, p.offset1)?;
            let second = Hyperplane::new(vector(&p.normal2)?, p.offset2)?;
            let query = require_query(&p.query)?;
            let result = project_two_hyperplanes(&first, &second, &query, tol)?;
            print_trichotomy(&result);
        }
        ProblemFile::LinearSystem(p) => {
            let rows = p
                .rows
                .iter()
                .map(|r| vector(r))
                .collect::<Result<Vec<_>, _>>()?;
            let query = require_query(&p.query)?;
            match AffineSubspace::from_linear_system(&rows, &p.rhs, tol)? {
                LinearSystemOutcome::Feasible(subspace) => {
                    let projected = subspace.project(&query)?;
                    println!("status: feasible");
                    println!("point: {}", format_vector(&projected));
                }
                LinearSystemOutcome::Infeasible { residual } => {
                    println!("status: infeasible");
                    println!("residual: {}", format_float(residual));
                }
            }
        }
    }
    Ok(())
}

pub fn cmd_gap(input: &Path, tol: &Tolerances) -> Result<(), CliError> {
    let ProblemFile::AffineHyperplane(p) = read_problem(input)? else {
        return Err(CliError::Parse(
            "`gap` needs an affine_hyperplane problem file".to_string(),
        ));
    };
    let point = vector(&p.point)?;
    let spanning = p
        .spanning
        .iter()
        .map(|s| vector(s))
        .collect::<Result<Vec<_>, _>>()?;
    let subspace = AffineSubspace::from_point_and_span(&point, &spanning, tol)?;
    let hyperplane = Hyperplane::new(vector(&p.normal)?, p.offset)?;
    // The query point is irrelevant for the gap; the anchor always works.
    let result = project_affine_hyperplane(&subspace, &hyperplane, subspace.anchor(), tol)?;
    println!("gap: {}", format_vector(&result.gap));
    println!("gap_norm: {}", format_float(result.gap.norm()));
    let sets = if result.case == TrichotomyCase::DegenerateInconsistent {
        "disjoint"
    } else {
        "intersecting"
    };
    println!("sets: {sets}");
    Ok(())
}

pub fn cmd_classify(input: &Path, tol: &Tolerances) -> Result<(), CliError> {
    let ProblemFile::TwoHyperplanes(p) = read_problem(input)? else {
        return Err(CliError::Parse(
            "`classify` needs a two_hyperplanes problem file".to_string(),
        ));
    };
    let first = Hyperplane::new(vector(&p.normal1)?, p.offset1)?;
    let second = Hyperplane::new(vector(&p.normal2)?, p.offset2)?;
    let classification = classify_hyperplane_pair(&first, &second, tol)?;
    println!("classification: {classification}");
    Ok(())
}

fn table_to_csv(table: &ConvergenceTable) -> String {
    let mut csv = String::from("iteration,median_db_single,median_db_paired\n");
    for (i, &n) in table.iteration_index.iter().enumerate() {
        csv.push_str(&format!(
            "{n},{},{}\n",
            format_float(table.median_db_single[i]),
            format_float(table.median_db_paired[i]),
        ));
    }
    csv
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_experiment(
    rows: usize,
    cols: usize,
    instances: usize,
    starts: usize,
    iters: usize,
    seed: u64,
    out: &Path,
    tol: &Tolerances,
) -> Result<(), CliError> {
    let cfg = ExperimentConfig {
        rows,
        cols,
        instances,
        starts_per_instance: starts,
        iterations: iters,
        seed,
    };
    let table = projkit::run_experiment(&cfg, tol)?;
    let csv = table_to_csv(&table);
    fs::write(out, csv)
        .map_err(|err| CliError::Output(format!("cannot write {}: {err}", out.display())))?;
    let last = table.len() - 1;
    let single = table.median_db_single[last];
    let paired = table.median_db_paired[last];
    println!("wrote: {} ({} rows)", out.display(), table.len());
    println!("final_median_db_single: {}", format_float(single));
    println!("final_median_db_paired: {}", format_float(paired));
    println!("paired_minus_single_db: {}", format_float(paired - single));
    Ok(())
}

pub fn cmd_example(kind: ProblemKind, out: Option<&Path>) -> Result<(), CliError> {
    let text = ProblemFile::sample(kind).to_text();
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|err| CliError::Output(format!("cannot write {}: {err}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
