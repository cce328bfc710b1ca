//! String and rank statistics used to compare encodings with edit distance.

use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::canonical::canonical_string;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Levenshtein distance with unit insert, delete and substitute costs.
///
/// Two-row dynamic program over bytes; instruction strings are ASCII.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let (a, b) = (a.as_bytes(), b.as_bytes());
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut row: Vec<usize> = (0..=short.len()).collect();
    for (j, &lc) in long.iter().enumerate() {
        let mut diag = row[0];
        row[0] = j + 1;
        for (i, &sc) in short.iter().enumerate() {
            let above = row[i + 1];
            row[i + 1] = if sc == lc {
                diag
            } else {
                1 + diag.min(above).min(row[i])
            };
            diag = above;
        }
    }
    row[short.len()]
}

/// Levenshtein distance between the canonical strings of two graphs.
pub fn canonical_distance(g: &Graph, h: &Graph) -> Result<usize> {
    let wg = canonical_string(g, None)?.w_star;
    let wh = canonical_string(h, None)?.w_star;
    Ok(levenshtein(&wg, &wh))
}

/// Average (fractional) ranks, 1-based.
pub fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&i, &j| xs[i].total_cmp(&xs[j]));
    let mut ranks = vec![0.0; xs.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && xs[order[j + 1]] == xs[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = avg;
        }
        i = j + 1;
    }
    ranks
}

fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spearman {
    pub rho: f64,
    /// Two-sided p-value from the t approximation with `n - 2` degrees of
    /// freedom.
    pub p_value: f64,
}

/// Spearman rank correlation with tie-averaged ranks.
pub fn spearman(points: &[(f64, f64)]) -> Result<Spearman> {
    let n = points.len();
    if n < 3 {
        return Err(Error::UndefinedStatistic(format!(
            "spearman needs at least 3 points, got {n}"
        )));
    }
    let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
    let rho = pearson(&average_ranks(&xs), &average_ranks(&ys))
        .ok_or_else(|| Error::UndefinedStatistic("a coordinate is constant".into()))?;
    Ok(Spearman {
        rho,
        p_value: t_test_p_value(rho, n),
    })
}

fn t_test_p_value(rho: f64, n: usize) -> f64 {
    let df = (n - 2) as f64;
    let denom = 1.0 - rho * rho;
    if denom <= 0.0 {
        return 0.0;
    }
    let t = rho * (df / denom).sqrt();
    let dist = StudentsT::new(0.0, 1.0, df).expect("positive degrees of freedom");
    (2.0 * dist.sf(t.abs())).clamp(0.0, 1.0)
}

/// Least-squares slope of `y` on `x`.
pub fn ols_slope(points: &[(f64, f64)]) -> Result<f64> {
    Ok(ols_fit(points)?.slope)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

/// Ordinary least squares `y = intercept + slope * x`.
pub fn ols_fit(points: &[(f64, f64)]) -> Result<LinearFit> {
    if points.len() < 2 {
        return Err(Error::UndefinedStatistic(format!(
            "regression needs at least 2 points, got {}",
            points.len()
        )));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in points {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::UndefinedStatistic("x is constant".into()));
    }
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy) / (sxx * syy)
    };
    Ok(LinearFit {
        slope,
        intercept: my - slope * mx,
        r2,
    })
}
