//! Aggregation of run records into median-runtime series and a hand-emitted
//! SVG plot with one line per model/separation variant.

use std::collections::BTreeMap;

use anyhow::ensure;
use serde::Serialize;

use crate::records::RunRecord;

pub const VARIANTS: [(&str, &str, &str); 4] = [
    ("basic", "integer", "#1f77b4"),
    ("basic", "fractional", "#2ca02c"),
    ("strengthened", "integer", "#d62728"),
    ("strengthened", "fractional", "#ff7f0e"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupBy {
    /// Bucket by dim / 10 (rounded down).
    DimensionBucket,
    /// Group by vertex count (used for complete graphs).
    VertexCount,
}

/// Groups by vertex count when every record is a complete graph, else by
/// dimension bucket.
pub fn auto_group(records: &[RunRecord]) -> GroupBy {
    if !records.is_empty() && records.iter().all(|r| r.is_complete_graph()) {
        GroupBy::VertexCount
    } else {
        GroupBy::DimensionBucket
    }
}

fn group_key(record: &RunRecord, group_by: GroupBy) -> usize {
    match group_by {
        GroupBy::DimensionBucket => record.dim / 10,
        GroupBy::VertexCount => record.n,
    }
}

/// One aggregated point: median over every run of the group (timeouts enter
/// at their recorded wall time), shown only when more than half finished.
#[derive(Clone, Debug, Serialize)]
pub struct AggregatedPoint {
    pub group: usize,
    pub model: String,
    pub separation: String,
    pub median_seconds: f64,
    pub finished: usize,
    pub total: usize,
    pub shown: bool,
}

fn median(values: &mut Vec<f64>) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let k = values.len();
    assert!(k > 0);
    if !k.is_multiple_of(2) {
        values[k / 2]
    } else {
        (values[k / 2 - 1] + values[k / 2]) / 2.0
    }
}

pub fn aggregate(records: &[RunRecord], group_by: GroupBy) -> anyhow::Result<Vec<AggregatedPoint>> {
    ensure!(!records.is_empty(), "no run records to aggregate");
    let mut buckets: BTreeMap<(usize, String, String), Vec<&RunRecord>> = BTreeMap::new();
    for record in records {
        buckets
            .entry((
                group_key(record, group_by),
                record.model.clone(),
                record.separation.clone(),
            ))
            .or_default()
            .push(record);
    }
    let mut out = Vec::new();
    for ((group, model, separation), rows) in buckets {
        let mut seconds: Vec<f64> = rows.iter().map(|r| r.seconds).collect();
        let finished = rows.iter().filter(|r| r.finished()).count();
        let total = rows.len();
        out.push(AggregatedPoint {
            group,
            model,
            separation,
            median_seconds: median(&mut seconds),
            finished,
            total,
            // Paper rule: plot only when more than half terminated.
            shown: 2 * finished > total,
        });
    }
    Ok(out)
}

pub fn write_aggregated_csv(
    path: &std::path::Path,
    points: &[AggregatedPoint],
) -> anyhow::Result<()> {
    let mut writer = csv::Writer::from_path(path)?;
    for point in points {
        writer.serialize(point)?;
    }
    writer.flush()?;
    Ok(())
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 20.0;
const MARGIN_T: f64 = 20.0;
const MARGIN_B: f64 = 60.0;

/// Render the four variant series as polylines over linear axes.
pub fn render_svg(points: &[AggregatedPoint], group_label: &str) -> String {
    let shown: Vec<&AggregatedPoint> = points.iter().filter(|p| p.shown).collect();
    let x_min = shown.iter().map(|p| p.group).min().unwrap_or(0) as f64;
    let x_max = shown.iter().map(|p| p.group).max().unwrap_or(1).max(1) as f64;
    let y_max = shown
        .iter()
        .map(|p| p.median_seconds)
        .fold(1.0f64, f64::max);
    let x_span = (x_max - x_min).max(1.0);

    let to_x = |g: f64| MARGIN_L + (g - x_min) / x_span * (WIDTH - MARGIN_L - MARGIN_R);
    let to_y = |s: f64| HEIGHT - MARGIN_B - s / y_max * (HEIGHT - MARGIN_T - MARGIN_B);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" \
         width=\"{WIDTH}\" height=\"{HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Axes.
    let x0 = MARGIN_L;
    let y0 = HEIGHT - MARGIN_B;
    svg.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{}\" y2=\"{y0}\" stroke=\"black\"/>\n",
        WIDTH - MARGIN_R
    ));
    svg.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{MARGIN_T}\" stroke=\"black\"/>\n"
    ));
    // Ticks: one per integer group on x, five on y.
    let mut g = x_min as usize;
    while g as f64 <= x_max {
        let x = to_x(g as f64);
        svg.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{y0}\" x2=\"{x}\" y2=\"{}\" stroke=\"black\"/>\n",
            y0 + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{g}</text>\n",
            y0 + 20.0
        ));
        g += 1;
    }
    for i in 0..=5 {
        let value = y_max * i as f64 / 5.0;
        let y = to_y(value);
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{y}\" x2=\"{x0}\" y2=\"{y}\" stroke=\"black\"/>\n",
            x0 - 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{value:.0}</text>\n",
            x0 - 8.0,
            y + 4.0
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">{group_label}</text>\n",
        (MARGIN_L + WIDTH - MARGIN_R) / 2.0,
        HEIGHT - 15.0
    ));
    svg.push_str(&format!(
        "<text x=\"18\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\" \
         transform=\"rotate(-90 18 {})\">median seconds</text>\n",
        (MARGIN_T + HEIGHT - MARGIN_B) / 2.0,
        (MARGIN_T + HEIGHT - MARGIN_B) / 2.0
    ));

    for (idx, (model, separation, color)) in VARIANTS.iter().enumerate() {
        let mut series: Vec<&AggregatedPoint> = points
            .iter()
            .filter(|p| p.shown && p.model == *model && p.separation == *separation)
            .collect();
        series.sort_by_key(|p| p.group);
        if series.len() >= 2 {
            let coords: Vec<String> = series
                .iter()
                .map(|p| format!("{:.2},{:.2}", to_x(p.group as f64), to_y(p.median_seconds)))
                .collect();
            svg.push_str(&format!(
                "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" \
                 points=\"{}\" class=\"series\"/>\n",
                coords.join(" ")
            ));
        }
        for p in &series {
            svg.push_str(&format!(
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"{color}\"/>\n",
                to_x(p.group as f64),
                to_y(p.median_seconds)
            ));
        }
        // Legend entry (always drawn, one per variant).
        let ly = MARGIN_T + 18.0 * idx as f64 + 10.0;
        svg.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"12\" height=\"12\" fill=\"{color}\" class=\"legend\"/>\n",
            MARGIN_L + 10.0,
            ly - 10.0
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">{model}/{separation}</text>\n",
            MARGIN_L + 28.0,
            ly
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(dim: usize, model: &str, sep: &str, seconds: f64, finished: bool) -> RunRecord {
        RunRecord {
            instance: "x".into(),
            n: 10,
            m: 20,
            dim,
            model: model.into(),
            separation: sep.into(),
            objective: 0,
            bound: 0.0,
            status: if finished { "optimal" } else { "timelimit" }.into(),
            seconds,
            nodes: 1,
            cuts_asym: 0,
            cuts_conn: 0,
            cuts_cpc: 0,
            cuts_star: 0,
        }
    }

    #[test]
    fn medians_per_group_and_variant() {
        let records = vec![
            record(12, "basic", "integer", 1.0, true),
            record(14, "basic", "integer", 3.0, true),
            record(17, "basic", "integer", 9.0, true),
            record(23, "basic", "integer", 5.0, true),
        ];
        let agg = aggregate(&records, GroupBy::DimensionBucket).unwrap();
        assert_eq!(agg.len(), 2);
        assert_eq!(agg[0].group, 1);
        assert_eq!(agg[0].median_seconds, 3.0);
        assert_eq!(agg[1].group, 2);
        assert_eq!(agg[1].median_seconds, 5.0);
        assert!(agg.iter().all(|p| p.shown));
    }

    #[test]
    fn suppression_needs_a_strict_majority() {
        // 2 of 5 finished: suppressed.
        let mut records: Vec<RunRecord> = (0..2)
            .map(|_| record(10, "basic", "integer", 1.0, true))
            .collect();
        records.extend((0..3).map(|_| record(10, "basic", "integer", 600.0, false)));
        let agg = aggregate(&records, GroupBy::DimensionBucket).unwrap();
        assert_eq!(agg.len(), 1);
        assert!(!agg[0].shown);

        // 3 of 5: shown.
        let mut records: Vec<RunRecord> = (0..3)
            .map(|_| record(10, "basic", "integer", 1.0, true))
            .collect();
        records.extend((0..2).map(|_| record(10, "basic", "integer", 600.0, false)));
        let agg = aggregate(&records, GroupBy::DimensionBucket).unwrap();
        assert!(agg[0].shown);

        // Exactly half: suppressed.
        let mut records: Vec<RunRecord> = (0..2)
            .map(|_| record(10, "basic", "integer", 1.0, true))
            .collect();
        records.extend((0..2).map(|_| record(10, "basic", "integer", 600.0, false)));
        let agg = aggregate(&records, GroupBy::DimensionBucket).unwrap();
        assert!(!agg[0].shown);
    }

    #[test]
    fn single_variant_renders_one_series() {
        let records = vec![
            record(10, "basic", "integer", 1.0, true),
            record(21, "basic", "integer", 2.0, true),
            record(30, "basic", "integer", 4.0, true),
        ];
        let agg = aggregate(&records, GroupBy::DimensionBucket).unwrap();
        let svg = render_svg(&agg, "dim/10");
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches("class=\"legend\"").count(), 4);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(aggregate(&[], GroupBy::DimensionBucket).is_err());
    }

    #[test]
    fn auto_grouping_detects_complete_graphs() {
        let complete = RunRecord { n: 8, m: 28, ..record(10, "basic", "integer", 1.0, true) };
        assert_eq!(auto_group(&[complete.clone()]), GroupBy::VertexCount);
        let sparse = RunRecord { n: 8, m: 12, ..record(10, "basic", "integer", 1.0, true) };
        assert_eq!(auto_group(&[complete, sparse]), GroupBy::DimensionBucket);
    }
}
