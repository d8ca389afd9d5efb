//! Versioned JSON form of a [`SeparatorReport`].

use serde::{Deserialize, Serialize};

use crate::assembly::{Branch, SeparatorReport};
use crate::error::{Error, Result};
use crate::fundamental::Cycle;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub schema: u32,
    pub n: usize,
    pub faces: usize,
    pub branch: String,
    pub delta: usize,
    pub length: usize,
    pub cycle: Vec<u32>,
    pub faces_inside: usize,
    pub faces_outside: usize,
    pub vertices_inside: usize,
    pub vertices_outside: usize,
    pub vertices_on: usize,
}

impl From<&SeparatorReport> for ReportJson {
    fn from(r: &SeparatorReport) -> Self {
        ReportJson {
            schema: SCHEMA,
            n: r.n,
            faces: r.faces_inside + r.faces_outside,
            branch: r.branch.tag().to_string(),
            delta: r.delta,
            length: r.length,
            cycle: r.cycle.vertices().to_vec(),
            faces_inside: r.faces_inside,
            faces_outside: r.faces_outside,
            vertices_inside: r.vertices_inside,
            vertices_outside: r.vertices_outside,
            vertices_on: r.vertices_on,
        }
    }
}

impl ReportJson {
    /// Converts back without judging the numbers; that is the verifier's job.
    pub fn into_report(self) -> Result<SeparatorReport> {
        let bad = |message: String| Error::Parse { line: 0, message };
        if self.schema != SCHEMA {
            return Err(bad(format!("unsupported report schema {}", self.schema)));
        }
        let branch = Branch::from_tag(&self.branch).ok_or_else(|| bad(format!("unknown branch `{}`", self.branch)))?;
        if self.cycle.is_empty() {
            return Err(bad("empty cycle".into()));
        }
        Ok(SeparatorReport {
            n: self.n,
            cycle: Cycle::new(self.cycle),
            faces_inside: self.faces_inside,
            faces_outside: self.faces_outside,
            vertices_inside: self.vertices_inside,
            vertices_outside: self.vertices_outside,
            vertices_on: self.vertices_on,
            length: self.length,
            branch,
            delta: self.delta,
        })
    }
}

pub fn to_json(r: &SeparatorReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<SeparatorReport> {
    let parsed: ReportJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    parsed.into_report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::separate;
    use crate::generate::gen_apollonian;

    #[test]
    fn round_trip() {
        let g = gen_apollonian(60, 3).unwrap();
        let rep = separate(&g).unwrap().report;
        let text = to_json(&rep);
        assert!(text.contains("\"schema\": 1"));
        assert_eq!(from_json(&text).unwrap(), rep);
    }

    #[test]
    fn rejects_bad_reports() {
        let g = gen_apollonian(20, 1).unwrap();
        let text = to_json(&separate(&g).unwrap().report);
        assert!(from_json(&text.replace("\"schema\": 1", "\"schema\": 2")).is_err());
        assert!(from_json(&text.replace("S-direct", "sideways")).is_err());
        assert!(from_json("{").is_err());
        assert!(from_json("[]").is_err());
    }
}
