//! Corpus ingestion and per-student evaluation.
//!
//! A corpus is a flat list of teacher remarks about students, supplied as
//! JSON (`{"students":[{"id":…,"remarks":[{"teacher":…,"text":…}]}]}`) or
//! CSV (`student_id,teacher_id,text` rows, header optional). Remarks come
//! back grouped by student in order of first appearance, with 1-based
//! ordinals per student.
//!
//! [`evaluate_student`] runs the full pipeline for one student: score each
//! remark, collaborate the values, stamp the result with a timestamp and the
//! lexicon digest.

pub mod history;
pub mod report;

use std::collections::BTreeMap;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::aggregate::{classify, collaborate_with, AggregateError, HolderWeight};
use crate::lexicon::Lexicon;
use crate::scorer::{score_remark_with, ScoreOptions};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CorpusError {
    #[error("{locus}: {message}")]
    MalformedCorpus { locus: String, message: String },
    #[error("{locus}: missing field `{field}`")]
    MissingField { locus: String, field: String },
}

impl CorpusError {
    fn malformed(locus: impl Into<String>, message: impl Into<String>) -> Self {
        CorpusError::MalformedCorpus {
            locus: locus.into(),
            message: message.into(),
        }
    }

    fn missing(locus: impl Into<String>, field: impl Into<String>) -> Self {
        CorpusError::MissingField {
            locus: locus.into(),
            field: field.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Json,
    Csv,
}

/// One teacher's remark about one student.
#[derive(Debug, Clone, PartialEq)]
pub struct Remark {
    pub student_id: String,
    pub teacher_id: String,
    pub text: String,
    /// 1-based position among this student's remarks, in file order.
    pub ordinal: usize,
}

/// Parse a corpus document into remarks grouped by student.
///
/// Students appear in order of first appearance; each student's remarks keep
/// file order and carry ordinals 1..n. Empty student or teacher ids are
/// rejected; empty remark text is allowed.
pub fn parse_corpus(input: &str, format: CorpusFormat) -> Result<Vec<Remark>, CorpusError> {
    let triples = match format {
        CorpusFormat::Json => parse_json(input)?,
        CorpusFormat::Csv => parse_csv(input)?,
    };
    Ok(assemble(triples))
}

/// (student_id, teacher_id, text) in file order, ids validated non-empty.
type RawRemark = (String, String, String);

fn assemble(triples: Vec<RawRemark>) -> Vec<Remark> {
    let mut order: Vec<String> = Vec::new();
    let mut groups: BTreeMap<String, Vec<Remark>> = BTreeMap::new();
    for (student_id, teacher_id, text) in triples {
        let group = groups.entry(student_id.clone()).or_insert_with(|| {
            order.push(student_id.clone());
            Vec::new()
        });
        group.push(Remark {
            ordinal: group.len() + 1,
            student_id,
            teacher_id,
            text,
        });
    }
    order
        .into_iter()
        .flat_map(|id| groups.remove(&id).unwrap_or_default())
        .collect()
}

fn parse_json(input: &str) -> Result<Vec<RawRemark>, CorpusError> {
    let root: Value = serde_json::from_str(input)
        .map_err(|e| CorpusError::malformed(format!("line {}", e.line()), e.to_string()))?;
    let students = root
        .get("students")
        .ok_or_else(|| CorpusError::missing("document root", "students"))?
        .as_array()
        .ok_or_else(|| CorpusError::malformed("students", "expected an array"))?;

    let mut triples = Vec::new();
    for (si, student) in students.iter().enumerate() {
        let locus = format!("students[{si}]");
        let id = require_string(student, &locus, "id")?;
        if id.is_empty() {
            return Err(CorpusError::malformed(&locus, "empty student id"));
        }
        let remarks = student
            .get("remarks")
            .ok_or_else(|| CorpusError::missing(&locus, "remarks"))?
            .as_array()
            .ok_or_else(|| {
                CorpusError::malformed(format!("{locus}.remarks"), "expected an array")
            })?;
        for (ri, remark) in remarks.iter().enumerate() {
            let locus = format!("{locus}.remarks[{ri}]");
            let teacher = require_string(remark, &locus, "teacher")?;
            if teacher.is_empty() {
                return Err(CorpusError::malformed(&locus, "empty teacher id"));
            }
            let text = require_string(remark, &locus, "text")?;
            triples.push((id.clone(), teacher, text));
        }
    }
    Ok(triples)
}

fn require_string(object: &Value, locus: &str, field: &str) -> Result<String, CorpusError> {
    object
        .get(field)
        .ok_or_else(|| CorpusError::missing(locus, field))?
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| CorpusError::malformed(locus, format!("field `{field}` must be a string")))
}

const CSV_HEADER: [&str; 3] = ["student_id", "teacher_id", "text"];

fn parse_csv(input: &str) -> Result<Vec<RawRemark>, CorpusError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(input.as_bytes());

    let mut triples = Vec::new();
    for (index, result) in reader.records().enumerate() {
        let record = result.map_err(|e| {
            let locus = e
                .position()
                .map(|p| format!("line {}", p.line()))
                .unwrap_or_else(|| "input".to_string());
            CorpusError::malformed(locus, e.to_string())
        })?;
        let locus = record
            .position()
            .map(|p| format!("line {}", p.line()))
            .unwrap_or_else(|| format!("record {}", index + 1));
        if index == 0 && record.iter().eq(CSV_HEADER) {
            continue;
        }
        if record.len() < 3 {
            let field = CSV_HEADER[record.len()];
            return Err(CorpusError::missing(locus, field));
        }
        if record.len() > 3 {
            return Err(CorpusError::malformed(
                locus,
                format!("expected 3 fields, found {}", record.len()),
            ));
        }
        let student_id = record[0].trim().to_string();
        let teacher_id = record[1].trim().to_string();
        if student_id.is_empty() {
            return Err(CorpusError::malformed(locus, "empty student id"));
        }
        if teacher_id.is_empty() {
            return Err(CorpusError::malformed(locus, "empty teacher id"));
        }
        triples.push((student_id, teacher_id, record[2].to_string()));
    }
    Ok(triples)
}

/// Regroup parsed remarks per student, preserving order.
pub fn group_by_student(remarks: &[Remark]) -> Vec<(String, Vec<Remark>)> {
    let mut order: Vec<String> = Vec::new();
    let mut groups: BTreeMap<String, Vec<Remark>> = BTreeMap::new();
    for remark in remarks {
        let group = groups.entry(remark.student_id.clone()).or_insert_with(|| {
            order.push(remark.student_id.clone());
            Vec::new()
        });
        group.push(remark.clone());
    }
    order
        .into_iter()
        .map(|id| {
            let group = groups.remove(&id).unwrap_or_default();
            (id, group)
        })
        .collect()
}

/// Source of evaluation timestamps; injectable for deterministic tests.
pub trait Clock {
    fn now(&self) -> DateTime<Utc>;
}

/// The real clock.
#[derive(Debug, Clone, Copy, Default)]
pub struct SystemClock;

impl Clock for SystemClock {
    fn now(&self) -> DateTime<Utc> {
        Utc::now()
    }
}

/// A clock pinned to one instant.
#[derive(Debug, Clone, Copy)]
pub struct FixedClock(pub DateTime<Utc>);

impl Clock for FixedClock {
    fn now(&self) -> DateTime<Utc> {
        self.0
    }
}

/// One teacher's outcome within an evaluation. `value`/`bucket` are absent
/// when the remark carried no opinion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerRemark {
    pub teacher_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bucket: Option<String>,
}

/// The persisted outcome of evaluating one student at one instant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationRecord {
    pub timestamp: DateTime<Utc>,
    pub student_id: String,
    /// SHA-256 of the lexicon the scores were computed with.
    pub lexicon_digest: String,
    pub per_remark: Vec<PerRemark>,
    /// Holder weights used, when not all 1.0.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weights: Option<BTreeMap<String, f64>>,
    pub collaborated_value: f64,
    pub collaborated_bucket: String,
}

/// Evaluate with default scan options and the system clock.
pub fn evaluate_student(
    remarks: &[Remark],
    lexicon: &Lexicon,
    weights: Option<&[HolderWeight]>,
) -> Result<EvaluationRecord, AggregateError> {
    evaluate_student_with(
        remarks,
        lexicon,
        weights,
        &ScoreOptions::default(),
        &SystemClock,
    )
}

/// Score every remark of one student and collaborate the results.
///
/// All remarks must belong to the same student (panics otherwise: group with
/// [`group_by_student`] first). An empty remark list, or one where no remark
/// matches the lexicon, yields [`AggregateError::NoContributions`].
pub fn evaluate_student_with(
    remarks: &[Remark],
    lexicon: &Lexicon,
    weights: Option<&[HolderWeight]>,
    options: &ScoreOptions,
    clock: &dyn Clock,
) -> Result<EvaluationRecord, AggregateError> {
    let Some(first) = remarks.first() else {
        return Err(AggregateError::NoContributions);
    };
    assert!(
        remarks.iter().all(|r| r.student_id == first.student_id),
        "evaluate_student requires remarks of a single student"
    );

    let scores: Vec<_> = remarks
        .iter()
        .map(|r| score_remark_with(&r.text, lexicon, &r.teacher_id, options))
        .collect();
    let per_remark = scores
        .iter()
        .map(|score| PerRemark {
            teacher_id: score.remark_ref().to_string(),
            value: score.value(),
            bucket: score.value().map(|v| {
                classify(v)
                    .expect("remark values stay in [0, 10]")
                    .label()
                    .to_string()
            }),
        })
        .collect();
    let opinion = collaborate_with(&scores, weights, options.precision)?;

    Ok(EvaluationRecord {
        timestamp: clock.now(),
        student_id: first.student_id.clone(),
        lexicon_digest: lexicon.source_digest().to_string(),
        per_remark,
        weights: weights.map(|list| {
            list.iter()
                .map(|w| (w.holder_id.clone(), w.weight))
                .collect()
        }),
        collaborated_value: opinion.value,
        collaborated_bucket: opinion.bucket.label().to_string(),
    })
}
