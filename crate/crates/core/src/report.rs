//! JSON reports and the on-disk class-group cache.
//!
//! Reports are built as [`serde_json::Value`] trees. Object keys are kept in
//! sorted order, so serializing the same inputs is byte-stable.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::cup_obstruct::{
    cohomology_summary, CupEvidence, FieldCondition, GroupCertificate, ObstructionReport, H2_NOTE,
    INERT_NOTE,
};
use crate::error::Result;
use crate::quad_field::{ClassGroup, H1Class, ImagQuadField};

pub const SCHEMA_VERSION: &str = "1";
pub const CACHE_ENV: &str = "OBSTRUCT_CACHE_DIR";
pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEnvelope {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub notes: Vec<String>,
}

impl ReportEnvelope {
    /// An envelope carrying the standard notes plus `extra`.
    pub fn new(command: &str, inputs: Value, result: Value, extra: Vec<String>) -> Self {
        let mut notes = vec![INERT_NOTE.to_string()];
        notes.extend(extra);
        ReportEnvelope {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            inputs,
            result,
            notes,
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("envelope is plain data")
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("envelope is plain data")
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(&self.to_value()).expect("envelope is plain data")
    }
}

pub fn field_json(k: &ImagQuadField) -> Value {
    json!({ "m": k.m(), "D": k.discriminant() })
}

pub fn class_group_json(cg: &ClassGroup) -> Value {
    json!({ "order": cg.order, "invariants": cg.invariants, "two_rank": cg.two_rank() })
}

pub fn h1_json(k: &ImagQuadField) -> Value {
    json!({ "dim": k.h1_dimension(), "labels": k.labels() })
}

pub fn cohomology_json(k: &ImagQuadField) -> Value {
    let s = cohomology_summary(k);
    json!({ "dims": s.dims, "h2_dim_derived": true })
}

pub fn prime_discriminants_json(k: &ImagQuadField) -> Value {
    json!(k
        .prime_discriminants()
        .iter()
        .map(|d| d.value())
        .collect::<Vec<_>>())
}

fn class_json(k: &ImagQuadField, x: &H1Class) -> Value {
    json!({
        "label": k.label(x),
        "generator": k.generator(x),
        "complement_generator": k.complement_generator(x),
    })
}

pub fn cup_json(k: &ImagQuadField, ev: &CupEvidence) -> Value {
    json!({
        "x": k.label(&ev.x),
        "y": k.label(&ev.y),
        "y_generator": ev.y_generator,
        "per_prime": ev.per_prime,
        "parity": ev.parity,
        "x_squared_nonzero_certified": ev.certifies_x_squared_nonzero(),
    })
}

pub fn field_condition_json(k: &ImagQuadField, c: &FieldCondition) -> Value {
    let witness = match c {
        FieldCondition::FailsWithWitness { a, b } => json!({
            "a": class_json(k, a),
            "b": class_json(k, b),
        }),
        _ => Value::Null,
    };
    json!({ "status": c.name(), "witness": witness })
}

pub fn certificate_json(r: &ObstructionReport) -> Value {
    let required = r.family.required_shape();
    match &r.certificate {
        GroupCertificate::Live {
            class,
            cocycle_verified,
            psl_order,
        } => json!({
            "kind": "live",
            "class": class.to_string(),
            "required_shape": required,
            "shape_ok": r.certificate_shape_ok,
            "cocycle_verified": cocycle_verified,
            "psl_order": psl_order,
        }),
        GroupCertificate::Cited { psl_order } => json!({
            "kind": "cited",
            "class": Value::Null,
            "required_shape": required,
            "shape_ok": r.certificate_shape_ok,
            "cocycle_verified": false,
            "psl_order": psl_order,
        }),
    }
}

pub fn verdict_json(r: &ObstructionReport) -> Value {
    json!({
        "outcome": r.outcome,
        "group_certificate": certificate_json(r),
        "field_condition": field_condition_json(&r.field, &r.field_condition),
        "solvable_quotient_realizable": r.solvable_quotient_realizable,
    })
}

pub fn obstruction_json(r: &ObstructionReport) -> Value {
    json!({
        "field": field_json(&r.field),
        "family": r.family,
        "q": r.q,
        "h1": h1_json(&r.field),
        "cohomology": cohomology_json(&r.field),
        "verdict": verdict_json(r),
        "flags": r.flags,
    })
}

pub fn standard_field_notes() -> Vec<String> {
    vec![H2_NOTE.to_string()]
}

/// Class groups memoized as JSON files keyed by `D`.
#[derive(Clone, Debug)]
pub struct ClassGroupCache {
    dir: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    #[serde(rename = "D")]
    pub disc: i64,
    pub h: u64,
    pub invariants: Vec<u64>,
    pub version: u32,
    pub checksum: String,
}

impl CacheEntry {
    pub fn new(disc: i64, cg: &ClassGroup) -> Self {
        let mut e = CacheEntry {
            disc,
            h: cg.order,
            invariants: cg.invariants.clone(),
            version: CACHE_VERSION,
            checksum: String::new(),
        };
        e.checksum = e.expected_checksum();
        e
    }

    pub fn expected_checksum(&self) -> String {
        let inv: Vec<String> = self.invariants.iter().map(|d| d.to_string()).collect();
        let payload = format!(
            "{}|{}|{}|{}",
            self.disc,
            self.h,
            inv.join(","),
            self.version
        );
        hex::encode(Sha256::digest(payload.as_bytes()))
    }

    pub fn is_valid_for(&self, disc: i64) -> bool {
        self.disc == disc
            && self.version == CACHE_VERSION
            && self.checksum == self.expected_checksum()
            && self.invariants.iter().product::<u64>() == self.h
    }
}

/// Where a class group came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Miss,
    /// An entry existed but failed validation and was recomputed.
    Repaired,
}

impl ClassGroupCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ClassGroupCache { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, disc: i64) -> PathBuf {
        self.dir
            .join(format!("classgroup_{}.json", disc.unsigned_abs()))
    }

    pub fn class_group(&self, k: &ImagQuadField) -> Result<(ClassGroup, CacheStatus)> {
        let disc = k.discriminant();
        let path = self.path_for(disc);
        let mut status = CacheStatus::Miss;
        if let Ok(text) = std::fs::read_to_string(&path) {
            match serde_json::from_str::<CacheEntry>(&text) {
                Ok(e) if e.is_valid_for(disc) => {
                    return Ok((
                        ClassGroup {
                            order: e.h,
                            invariants: e.invariants,
                        },
                        CacheStatus::Hit,
                    ))
                }
                _ => status = CacheStatus::Repaired,
            }
        }
        let cg = k.class_group()?;
        std::fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry::new(disc, &cg);
        std::fs::write(&path, serde_json::to_string_pretty(&entry)?)?;
        Ok((cg, status))
    }
}

/// Class group through the cache when one is configured.
pub fn class_group_cached(
    k: &ImagQuadField,
    cache: Option<&ClassGroupCache>,
) -> Result<(ClassGroup, CacheStatus)> {
    match cache {
        Some(c) => c.class_group(k),
        None => Ok((k.class_group()?, CacheStatus::Disabled)),
    }
}
