//! Evaluation reports in the case-study text layout, or as JSON.
//!
//! The text layout is one stanza per teacher followed by a collaborated
//! stanza, with a blank line between stanzas:
//!
//! ```text
//! Opinion of the First Teacher about the student is very high
//! (Opinion value :8.5)
//!
//! The collaborated opinion about the student is high
//! (Opinion value :5.9444445)
//! ```
//!
//! Teachers whose remark carried no opinion get a single-line stanza ending
//! in `no opinion detected`.

use super::EvaluationRecord;
use crate::precision::Precision;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Render a record; text per the stanza template, JSON as one line that
/// parses back into an equal record.
pub fn render_report(record: &EvaluationRecord, format: ReportFormat) -> String {
    render_report_with(record, format, Precision::F64)
}

/// Render with explicit value formatting. Under [`Precision::F32`] the text
/// layout prints each value as its single-precision rendering, matching a
/// record computed in that mode; JSON always serializes the stored doubles.
pub fn render_report_with(
    record: &EvaluationRecord,
    format: ReportFormat,
    precision: Precision,
) -> String {
    match format {
        ReportFormat::Text => render_text(record, precision),
        ReportFormat::Json => {
            let mut out =
                serde_json::to_string(record).expect("evaluation records always serialize");
            out.push('\n');
            out
        }
    }
}

fn render_text(record: &EvaluationRecord, precision: Precision) -> String {
    let mut stanzas: Vec<String> = Vec::with_capacity(record.per_remark.len() + 1);
    for (index, per) in record.per_remark.iter().enumerate() {
        let ordinal = ordinal(index + 1);
        match (&per.value, &per.bucket) {
            (Some(value), Some(bucket)) => stanzas.push(format!(
                "Opinion of the {ordinal} Teacher about the student is {bucket}\n(Opinion value :{})",
                format_value_with(*value, precision)
            )),
            _ => stanzas.push(format!(
                "Opinion of the {ordinal} Teacher about the student is no opinion detected"
            )),
        }
    }
    stanzas.push(format!(
        "The collaborated opinion about the student is {}\n(Opinion value :{})",
        record.collaborated_bucket,
        format_value_with(record.collaborated_value, precision)
    ));
    let mut out = stanzas.join("\n\n");
    out.push('\n');
    out
}

/// Ordinal for a 1-based teacher position: words through "Tenth", numeric
/// suffix form beyond.
pub fn ordinal(position: usize) -> String {
    const WORDS: [&str; 10] = [
        "First", "Second", "Third", "Fourth", "Fifth", "Sixth", "Seventh", "Eighth", "Ninth",
        "Tenth",
    ];
    if (1..=10).contains(&position) {
        return WORDS[position - 1].to_string();
    }
    let suffix = match (position % 10, position % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    format!("{position}{suffix}")
}

/// Shortest decimal that round-trips the value, always keeping a decimal
/// point ("6.0", not "6").
pub fn format_value(value: f64) -> String {
    if value.fract() == 0.0 {
        format!("{value:.1}")
    } else {
        format!("{value}")
    }
}

/// [`format_value`], but under [`Precision::F32`] the value is shown as its
/// nearest single-precision float.
pub fn format_value_with(value: f64, precision: Precision) -> String {
    match precision {
        Precision::F64 => format_value(value),
        Precision::F32 => {
            let value = value as f32;
            if value.fract() == 0.0 {
                format!("{value:.1}")
            } else {
                format!("{value}")
            }
        }
    }
}
