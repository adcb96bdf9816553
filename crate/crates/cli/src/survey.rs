use std::path::Path;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use uqf::analytic::asymptotic_report;
use uqf::arith::is_squarefree;
use uqf::indecomp::{enumerate_s0, m_d, m_star};
use uqf::CFExpansion;

use crate::commands::{join_period, Output};
use crate::CliError;

pub const CSV_HEADER: &str =
    "D,Delta,s,u0,period,sum_u,M_D,M_star_a,M_star_b,S0_size,kappa,lb_ratio,form_arity,h,h_plus,L1,LD,main_term,ratio";

pub struct SurveyConfig {
    pub range: (i64, i64),
    pub jobs: usize,
    pub cutoff: u64,
    pub eps: Ratio<i64>,
}

/// One field of the survey. Failed rows keep `D` and `Delta` and leave
/// the rest empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurveyRow {
    #[serde(rename = "D")]
    pub d: i64,
    #[serde(rename = "Delta")]
    pub delta: i64,
    pub s: Option<usize>,
    pub u0: Option<i64>,
    pub period: Option<String>,
    pub sum_u: Option<i64>,
    #[serde(rename = "M_D")]
    pub m_d: Option<i64>,
    #[serde(rename = "M_star_a")]
    pub m_star_a: Option<i64>,
    #[serde(rename = "M_star_b")]
    pub m_star_b: Option<i64>,
    #[serde(rename = "S0_size")]
    pub s0_size: Option<usize>,
    pub kappa: Option<u8>,
    pub lb_ratio: Option<f64>,
    pub form_arity: Option<i64>,
    pub h: Option<u64>,
    pub h_plus: Option<u64>,
    #[serde(rename = "L1")]
    pub l1: Option<f64>,
    #[serde(rename = "LD")]
    pub ld: Option<f64>,
    pub main_term: Option<f64>,
    pub ratio: Option<f64>,
}

impl SurveyRow {
    fn failed(d: i64, delta: i64) -> Self {
        SurveyRow {
            d,
            delta,
            s: None,
            u0: None,
            period: None,
            sum_u: None,
            m_d: None,
            m_star_a: None,
            m_star_b: None,
            s0_size: None,
            kappa: None,
            lb_ratio: None,
            form_arity: None,
            h: None,
            h_plus: None,
            l1: None,
            ld: None,
            main_term: None,
            ratio: None,
        }
    }
}

fn row(d: i64, cfg: &SurveyConfig) -> Result<SurveyRow, (i64, uqf::Error)> {
    let ctx = uqf::FieldCtx::new(d).map_err(|e| (d, e))?;
    let cf = CFExpansion::expand(ctx);
    let compute = || -> uqf::Result<SurveyRow> {
        cf.check_invariants()?;
        let window = enumerate_s0(&cf)?;
        let md = m_d(&cf);
        let ms = m_star(&cf, cfg.eps)?;
        let rep = asymptotic_report(ctx, &cf, cfg.cutoff)?;
        Ok(SurveyRow {
            d,
            delta: ctx.delta(),
            s: Some(cf.s()),
            u0: Some(cf.u0()),
            period: Some(join_period(cf.period())),
            sum_u: Some(cf.sum_u()),
            m_d: Some(md),
            m_star_a: Some(ms.a),
            m_star_b: Some(ms.b),
            s0_size: Some(window.len()),
            kappa: Some(window.kappa),
            lb_ratio: Some(md as f64 / (window.kappa as f64 * cf.s() as f64)),
            form_arity: Some(8 * md),
            h: Some(rep.h),
            h_plus: Some(rep.h_plus),
            l1: Some(rep.l1.mid),
            ld: Some(rep.ld.mid),
            main_term: Some(rep.main_term.mid),
            ratio: Some(rep.ratio.mid),
        })
    };
    compute().map_err(|e| (ctx.delta(), e))
}

/// Rows for every squarefree `D` in the range, ordered by `D`.
pub fn survey_rows(cfg: &SurveyConfig) -> Result<Vec<(SurveyRow, Option<String>)>, CliError> {
    let (a, b) = cfg.range;
    if a < 2 {
        return Err(CliError::BadInput(format!("range must start at 2 or above, got {a}")));
    }
    let ds: Vec<i64> = (a..=b).filter(|&d| is_squarefree(d as u64)).collect();
    if ds.is_empty() {
        return Err(CliError::BadInput(format!("no squarefree D in {a}:{b}")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| CliError::BadInput(e.to_string()))?;
    Ok(pool.install(|| {
        ds.par_iter()
            .map(|&d| match row(d, cfg) {
                Ok(r) => (r, None),
                Err((delta, e)) => (SurveyRow::failed(d, delta), Some(e.to_string())),
            })
            .collect()
    }))
}

pub fn run(out: Output, cfg: SurveyConfig, csv_path: Option<&Path>) -> Result<(), CliError> {
    if cfg.cutoff < uqf::analytic::MIN_CUTOFF {
        return Err(uqf::Error::CutoffTooSmall { got: cfg.cutoff, min: uqf::analytic::MIN_CUTOFF }.into());
    }
    let rows = survey_rows(&cfg)?;
    let io = |e: std::io::Error| CliError::BadInput(e.to_string());
    let failed = rows.iter().filter(|r| r.1.is_some()).count();
    for (r, err) in &rows {
        if let Some(e) = err {
            eprintln!("D = {}: {e}", r.d);
        }
    }
    match csv_path {
        Some(p) => write_csv(std::fs::File::create(p).map_err(io)?, &rows)?,
        None if !out.json => write_csv(std::io::stdout().lock(), &rows)?,
        None => {}
    }
    if out.json {
        let plain: Vec<&SurveyRow> = rows.iter().map(|r| &r.0).collect();
        println!("{}", serde_json::to_string_pretty(&plain).map_err(|e| CliError::BadInput(e.to_string()))?);
    } else if csv_path.is_some() {
        println!("{} rows, {} failed", rows.len(), failed);
    }
    if failed > 0 {
        return Err(CliError::Partial(failed));
    }
    Ok(())
}

fn write_csv<W: std::io::Write>(w: W, rows: &[(SurveyRow, Option<String>)]) -> Result<(), CliError> {
    let err = |e: csv::Error| CliError::BadInput(e.to_string());
    let mut wr = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    wr.write_record(CSV_HEADER.split(',')).map_err(err)?;
    for (r, _) in rows {
        wr.serialize(r).map_err(err)?;
    }
    wr.flush().map_err(|e| CliError::BadInput(e.to_string()))?;
    Ok(())
}
