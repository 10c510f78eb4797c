//! Grid evaluation and CSV emission.

use std::io::Write;
use std::time::Instant;

use bellsim_core::bell::{optimize_chsh_with, BellResult, OptimizeOptions, SearchPath, TSIRELSON};
use rayon::prelude::*;

use crate::config::{FamilyName, PointSpec, RunConfig};
use crate::CliError;

/// Optimized Bell value at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub point: PointSpec,
    pub result: BellResult,
    pub wall_time: Option<f64>,
}

/// Optimizes every point on a pool of `jobs` workers. Rows come back in input order.
pub fn run_points(
    points: &[PointSpec],
    opts: &OptimizeOptions,
    jobs: Option<usize>,
    wall_time: bool,
) -> Result<Vec<SweepRow>, CliError> {
    let scenarios = points.iter().map(PointSpec::scenario).collect::<Result<Vec<_>, _>>()?;
    let eval = || {
        points
            .par_iter()
            .zip(scenarios.par_iter())
            .map(|(point, scenario)| {
                let start = Instant::now();
                let result = optimize_chsh_with(scenario, opts)?;
                Ok(SweepRow {
                    point: point.clone(),
                    result,
                    wall_time: wall_time.then(|| start.elapsed().as_secs_f64()),
                })
            })
            .collect::<Result<Vec<_>, CliError>>()
    };
    let rows = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Config(format!("cannot start {n} workers: {e}")))?
            .install(eval),
        None => eval(),
    }?;
    // The Tsirelson ceiling with a little room for optimizer rounding.
    if let Some(bad) = rows.iter().find(|r| !(r.result.b_max <= TSIRELSON + 1e-4)) {
        return Err(CliError::Invariant(format!(
            "b_max = {} exceeds the Tsirelson bound at {:?}",
            bad.result.b_max, bad.point
        )));
    }
    Ok(rows)
}

pub const COLUMNS: [&str; 16] = [
    "family",
    "n",
    "alpha",
    "v",
    "d",
    "gamma_t",
    "eta1",
    "eta2",
    "b_max",
    "b_signed",
    "theta_a",
    "theta_b",
    "theta_a_prime",
    "theta_b_prime",
    "engine",
    "path",
];

fn num(x: f64) -> String {
    format!("{x:.10}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn record(row: &SweepRow) -> Result<Vec<String>, CliError> {
    let p = &row.point;
    let r = &row.result;
    let family = match p.family {
        FamilyName::Pol => "pol",
        FamilyName::Ecs => "ecs",
        FamilyName::Ets => "ets",
    };
    let path = match r.path {
        SearchPath::Tensor => "tensor",
        SearchPath::Direct => "direct",
    };
    let [ta, tb, tap, tbp] = r.angles.to_array();
    let mut out = vec![
        family.to_string(),
        p.n.map(|n| n.to_string()).unwrap_or_default(),
        opt(p.alpha),
        opt(p.v),
        opt(p.d),
        opt(p.gamma_t),
        num(p.eta1()?),
        num(p.eta2()),
        num(r.b_max),
        num(r.b_signed),
        num(ta),
        num(tb),
        num(tap),
        num(tbp),
        r.engine_used.tag().to_string(),
        path.to_string(),
    ];
    if let Some(t) = row.wall_time {
        out.push(format!("{t:.6}"));
    }
    Ok(out)
}

/// Writes `# title`, `# column,...` and one comma-separated line per row.
pub fn write_csv(out: &mut dyn Write, title: &str, rows: &[SweepRow]) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::io("writing CSV", e);
    let wall = rows.first().is_some_and(|r| r.wall_time.is_some());
    let mut header = COLUMNS.join(",");
    if wall {
        header.push_str(",wall_time_s");
    }
    writeln!(out, "# {title}").map_err(io)?;
    writeln!(out, "# {header}").map_err(io)?;
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for row in rows {
        w.write_record(record(row)?)
            .map_err(|e| CliError::io("writing CSV", e.into()))?;
    }
    w.flush().map_err(io)
}

/// Runs a sweep config; returns the CSV text.
pub fn run_sweep(cfg: &RunConfig, jobs: Option<usize>) -> Result<String, CliError> {
    let points = cfg.points()?;
    let rows = run_points(
        &points,
        &cfg.options.optimize(),
        jobs.or(cfg.options.jobs),
        cfg.options.wall_time,
    )?;
    let axes: Vec<String> = cfg
        .axes
        .iter()
        .map(|a| format!("{} {}..{} ({})", a.name.as_str(), a.start, a.stop, a.steps))
        .collect();
    let mut buf = Vec::new();
    write_csv(&mut buf, &format!("sweep over {}", axes.join(", ")), &rows)?;
    Ok(String::from_utf8(buf).expect("CSV is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{grid, Axis, AxisName};

    #[test]
    fn rows_follow_grid_order() {
        let mut base = PointSpec::new(FamilyName::Pol);
        base.n = Some(1);
        let axes = [Axis::new(AxisName::Eta2, 0.5, 1.0, 6)];
        let points = grid(&base, &axes).unwrap();
        let rows = run_points(&points, &OptimizeOptions::default(), Some(3), false).unwrap();
        assert_eq!(rows.len(), 6);
        for (row, p) in rows.iter().zip(&points) {
            assert_eq!(&row.point, p);
        }
        let last = &rows[5].result;
        assert!((last.b_max - TSIRELSON).abs() < 1e-8);
    }

    #[test]
    fn csv_layout() {
        let mut base = PointSpec::new(FamilyName::Ecs);
        base.alpha = Some(1.0);
        let points = grid(&base, &[Axis::new(AxisName::Eta2, 0.8, 1.0, 2)]).unwrap();
        let rows = run_points(&points, &OptimizeOptions::default(), Some(1), false).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, "t", &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.split('\n').collect();
        assert_eq!(lines[0], "# t");
        assert!(lines[1].starts_with("# family,n,alpha"));
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[4], "");
        assert!(!text.contains('\r'));
        let fields: Vec<&str> = lines[2].split(',').collect();
        assert_eq!(fields.len(), COLUMNS.len());
        assert_eq!(fields[0], "ecs");
        assert_eq!(fields[1], "");
        assert_eq!(fields[6], "1.0000000000");
    }

    #[test]
    fn wall_time_column_is_optional() {
        let mut base = PointSpec::new(FamilyName::Pol);
        base.n = Some(2);
        let points = grid(&base, &[Axis::new(AxisName::Eta2, 0.9, 1.0, 2)]).unwrap();
        let rows = run_points(&points, &OptimizeOptions::default(), None, true).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, "t", &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().nth(1).unwrap().ends_with(",wall_time_s"));
        assert_eq!(text.lines().nth(2).unwrap().split(',').count(), COLUMNS.len() + 1);
    }
}
