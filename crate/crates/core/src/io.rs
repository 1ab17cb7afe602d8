//! JSON documents read and written by the command line tool.
//!
//! Keys are emitted in a fixed order so documents diff cleanly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::{NamedInstance, Provenance};
use crate::model::{BicoloringFamily, GSur, PointSet, Range};
use crate::solver::{ReductionOutput, SetCoverInstance};

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// A point set with its bicolorings as `R`/`B` strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
    pub bicolorings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_optimum: Option<usize>,
    /// `"theorem"` or `"brute-force"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimum_source: Option<String>,
    /// Point indices of each set's pair, for reduced set cover instances.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair_index: Option<Vec<(usize, usize)>>,
}

impl InstanceDoc {
    pub fn new(ps: &PointSet, fam: &BicoloringFamily) -> InstanceDoc {
        InstanceDoc {
            dim: ps.dim(),
            points: ps.to_vecs(),
            bicolorings: fam.iter().map(|b| b.to_string()).collect(),
            name: None,
            expected_optimum: None,
            optimum_source: None,
            pair_index: None,
        }
    }

    pub fn from_named(inst: &NamedInstance) -> InstanceDoc {
        let mut doc = InstanceDoc::new(&inst.ps, &inst.fam);
        doc.name = Some(inst.name.clone());
        if let Some((opt, src)) = inst.expected_optimum {
            doc.expected_optimum = Some(opt);
            doc.optimum_source = Some(
                match src {
                    Provenance::Theorem => "theorem",
                    Provenance::BruteForce => "brute-force",
                }
                .to_string(),
            );
        }
        doc
    }

    pub fn from_reduction(ro: &ReductionOutput) -> InstanceDoc {
        let mut doc = InstanceDoc::new(&ro.ps, &ro.fam);
        doc.pair_index = Some(ro.pair_index.clone());
        doc
    }

    pub fn parse(text: &str) -> Result<InstanceDoc> {
        parse_json(text)
    }

    pub fn render(&self) -> String {
        render(self)
    }

    /// Validated point set and family.
    pub fn instance(&self) -> Result<(PointSet, BicoloringFamily)> {
        let ps = PointSet::new(self.dim, self.points.clone())?;
        let fam = BicoloringFamily::parse(&self.bicolorings)?;
        if fam.n() != ps.len() {
            return Err(Error::InvalidBicoloring(format!(
                "bicolorings have length {}, instance has {} points",
                fam.n(),
                ps.len()
            )));
        }
        Ok((ps, fam))
    }

    pub fn reduction(&self) -> Result<ReductionOutput> {
        let (ps, fam) = self.instance()?;
        let pair_index = self
            .pair_index
            .clone()
            .ok_or_else(|| Error::Format("instance has no pair_index".into()))?;
        if pair_index.iter().any(|&(a, b)| a >= ps.len() || b >= ps.len()) {
            return Err(Error::Format("pair_index out of range".into()));
        }
        Ok(ReductionOutput { ps, fam, pair_index })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SetCoverDoc {
    pub universe_size: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl SetCoverDoc {
    pub fn parse(text: &str) -> Result<SetCoverDoc> {
        parse_json(text)
    }

    pub fn render(&self) -> String {
        render(self)
    }

    pub fn instance(&self) -> Result<SetCoverInstance> {
        SetCoverInstance::new(self.universe_size, self.subsets.clone())
    }
}

/// Set indices extracted from a G-SUR of a reduced instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDoc {
    pub size: usize,
    pub sets: Vec<usize>,
}

impl CoverDoc {
    pub fn new(sets: Vec<usize>) -> CoverDoc {
        CoverDoc { size: sets.len(), sets }
    }

    pub fn parse(text: &str) -> Result<CoverDoc> {
        parse_json(text)
    }

    pub fn render(&self) -> String {
        render(self)
    }
}

/// A G-SUR as written by `construct` and `solve`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub method: String,
    pub size: usize,
    /// Set by `solve`: whether the size is proven minimal over the candidates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimal: Option<bool>,
    pub verified: bool,
    pub ranges: Vec<Range>,
    pub certificate: Vec<usize>,
}

impl SolutionDoc {
    pub fn new(method: &str, gsur: &GSur, verified: bool) -> SolutionDoc {
        SolutionDoc {
            method: method.to_string(),
            size: gsur.size(),
            optimal: None,
            verified,
            ranges: gsur.ranges.clone(),
            certificate: gsur.certificate.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<SolutionDoc> {
        parse_json(text)
    }

    pub fn render(&self) -> String {
        render(self)
    }

    pub fn gsur(&self) -> Result<GSur> {
        for r in &self.ranges {
            r.validate()?;
        }
        Ok(GSur { ranges: self.ranges.clone(), certificate: self.certificate.clone() })
    }
}
