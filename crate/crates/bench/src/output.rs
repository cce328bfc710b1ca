//! CSV tables and the JSON summary.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::correlation::{Correlation, CorrelationRun, DistanceReport, PairRow};
use crate::error::{BenchError, Result};
use crate::method::Method;
use crate::neighborhood::NeighborhoodReport;
use crate::scaling::{ScalingReport, ScalingRow};

/// `graph_i,graph_j,ged,lev_<method>...`, one row per pair `i < j`.
pub fn write_pairs_csv<W: Write>(out: W, run: &CorrelationRun) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["graph_i".to_string(), "graph_j".into(), "ged".into()];
    header.extend(run.methods.iter().map(|m| format!("lev_{m}")));
    w.write_record(&header)?;
    for r in &run.rows {
        let mut rec = vec![r.graph_i.clone(), r.graph_j.clone(), r.ged.to_string()];
        rec.extend(r.lev.iter().map(usize::to_string));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_pairs_csv<R: Read>(input: R) -> Result<(Vec<Method>, Vec<PairRow>)> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.len() < 3 || &header[0] != "graph_i" || &header[1] != "graph_j" || &header[2] != "ged"
    {
        return Err(BenchError::Config("pairs table: unexpected header".into()));
    }
    let methods = header
        .iter()
        .skip(3)
        .map(|h| {
            h.strip_prefix("lev_")
                .ok_or_else(|| BenchError::Config(format!("pairs table: bad column '{h}'")))?
                .parse()
        })
        .collect::<Result<Vec<Method>>>()?;
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|e| BenchError::Config(format!("pairs table: {e}")))
    };
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        rows.push(PairRow {
            graph_i: rec[0].to_string(),
            graph_j: rec[1].to_string(),
            ged: num(&rec[2])?,
            lev: rec.iter().skip(3).map(num).collect::<Result<_>>()?,
        });
    }
    Ok((methods, rows))
}

/// `method,ged,lev,count` over the filtered pairs.
pub fn write_histogram_csv<W: Write>(out: W, reports: &[DistanceReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["method", "ged", "lev", "count"])?;
    for rep in reports {
        for ((ged, lev), count) in rep.histogram() {
            w.write_record([
                rep.method.to_string(),
                ged.to_string(),
                lev.to_string(),
                count.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// `method,family,param,n,instances,median_seconds,iqr_seconds,timed_out`.
/// Timed-out rows with no finished instance leave the time columns empty.
pub fn write_scaling_csv<W: Write>(out: W, rows: &[ScalingRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "method",
        "family",
        "param",
        "n",
        "instances",
        "median_seconds",
        "iqr_seconds",
        "timed_out",
    ])?;
    let secs = |x: f64| {
        if x.is_finite() {
            format!("{x:.9}")
        } else {
            String::new()
        }
    };
    for r in rows {
        w.write_record([
            r.method.clone(),
            r.family.to_string(),
            r.param.to_string(),
            r.n.to_string(),
            r.instances.to_string(),
            secs(r.median_seconds),
            secs(r.iqr_seconds),
            r.timed_out.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `direction,kind,u,v,string,lev,ged,isomorphic,class`.
///
/// `edit` rows are graph neighbours (`string` is their canonical string);
/// `string` rows are string neighbours of the base canonical string.
pub fn write_neighborhood_csv<W: Write>(out: W, report: &NeighborhoodReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "direction",
        "kind",
        "u",
        "v",
        "string",
        "lev",
        "ged",
        "isomorphic",
        "class",
    ])?;
    for e in &report.edits {
        w.write_record([
            "edit",
            e.kind.name(),
            &e.u.to_string(),
            &e.v.to_string(),
            &e.canonical,
            &e.lev.to_string(),
            "1",
            "false",
            &e.class.to_string(),
        ])?;
    }
    for s in &report.strings {
        let ged = s.ged.map(|d| d.to_string()).unwrap_or_default();
        w.write_record([
            "string",
            "",
            "",
            "",
            &s.string,
            "1",
            &ged,
            &s.isomorphic.to_string(),
            "",
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationSummary {
    pub method: Method,
    pub pair_count: usize,
    /// `defined`, `undefined` or `empty`.
    pub status: String,
    pub rho: Option<f64>,
    pub p_value: Option<f64>,
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl From<&DistanceReport> for CorrelationSummary {
    fn from(r: &DistanceReport) -> Self {
        let (status, rho, p_value, beta, reason) = match &r.correlation {
            Correlation::Empty => ("empty", None, None, None, None),
            Correlation::Undefined { reason } => {
                ("undefined", None, None, None, Some(reason.clone()))
            }
            Correlation::Defined { rho, p_value, beta } => {
                ("defined", Some(*rho), Some(*p_value), Some(*beta), None)
            }
        };
        Self {
            method: r.method,
            pair_count: r.pair_count,
            status: status.into(),
            rho,
            p_value,
            beta,
            reason,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingSummary {
    pub method: String,
    pub alpha: Option<f64>,
    pub r2: Option<f64>,
    pub points: usize,
    pub first_timeout: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub seed: u64,
    #[serde(default)]
    pub correlation: Vec<CorrelationSummary>,
    #[serde(default)]
    pub scaling: Vec<ScalingSummary>,
}

impl Summary {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn with_correlation(mut self, reports: &[DistanceReport]) -> Self {
        self.correlation = reports.iter().map(CorrelationSummary::from).collect();
        self
    }

    pub fn with_scaling(mut self, report: &ScalingReport) -> Self {
        self.scaling = report
            .methods
            .iter()
            .map(|m| ScalingSummary {
                method: m.method.clone(),
                alpha: m.fit.map(|f| f.alpha),
                r2: m.fit.map(|f| f.r2),
                points: m.fit.map_or(0, |f| f.points),
                first_timeout: m.first_timeout,
            })
            .collect();
        self
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, self)?;
        out.write_all(b"\n")?;
        Ok(())
    }
}
