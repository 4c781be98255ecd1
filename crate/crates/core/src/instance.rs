//! JSON instance files.
//!
//! ```json
//! {
//!   "name": "W",
//!   "points": ["a", "b", "c", "d"],
//!   "dist": [["0", "1", "3", "7"], ["1", "0", "2", "6"],
//!            ["3", "2", "0", "4"], ["7", "6", "4", "0"]],
//!   "generators": [["a", "b"]],
//!   "topology": {"kind": "miss", "sets": [["a"], ["b", "c"]]},
//!   "family": [["a"], ["b", "d"]]
//! }
//! ```
//!
//! Distances are strings `"p/q"`, decimal strings, or JSON integers.
//! `generators`, `topology` and `family` are optional. Topology kinds:
//! `metric-lower`, `metric-upper`, `metric-both`, `tau` (with `generators`),
//! `miss` (with `sets`), `table` (with `closed`, a list of closed families)
//! and `subbase` (with `opens`).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::family::{generate_ideal, FamilyError, Ideal, SetFamily};
use crate::space::{format_rational, parse_rational, FiniteSpace, Rational, SpaceError, Subset};
use crate::topology::{make_topology, HyperTopology, TopologyError, TopologySpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("malformed instance: {0}")]
    Json(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("instance has no `{0}` section")]
    Missing(&'static str),
}

pub type Labels = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TopologyDoc {
    MetricLower,
    MetricUpper,
    MetricBoth,
    Tau { generators: Vec<Labels> },
    Miss { sets: Vec<Labels> },
    Table { closed: Vec<Vec<Labels>> },
    Subbase { opens: Vec<Vec<Labels>> },
}

/// The raw document, before validation against the space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Labels>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dist: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Labels>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub topology: Option<TopologyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Vec<Labels>>,
}

impl InstanceDoc {
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        serde_json::from_str(text).map_err(|e| InstanceError::Json(e.to_string()))
    }

    /// A document holding just the space.
    pub fn from_space(space: &FiniteSpace, name: Option<&str>) -> Self {
        InstanceDoc {
            name: name.map(str::to_string),
            points: Some(space.labels().to_vec()),
            dist: Some(
                space
                    .matrix()
                    .iter()
                    .map(|row| row.iter().map(|d| Value::String(format_rational(d))).collect())
                    .collect(),
            ),
            generators: None,
            topology: None,
            family: None,
        }
    }

    pub fn with_ideal(mut self, space: &FiniteSpace, ideal: &Ideal) -> Self {
        self.generators = Some(ideal.maximal_members().into_iter().map(|s| space.subset_labels(s)).collect());
        self
    }

    pub fn with_family(mut self, space: &FiniteSpace, family: SetFamily) -> Self {
        self.family = Some(space.family_labels(family));
        self
    }

    /// Stores the topology by its minimal neighbourhoods.
    pub fn with_topology(mut self, space: &FiniteSpace, topology: &HyperTopology) -> Self {
        self.topology = Some(TopologyDoc::Subbase {
            opens: topology.neighbourhood_subbase().into_iter().map(|f| space.family_labels(f)).collect(),
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance documents serialize")
    }

    pub fn space(&self) -> Result<FiniteSpace, InstanceError> {
        let points = self.points.clone().ok_or(InstanceError::Missing("points"))?;
        let dist = self.dist.as_ref().ok_or(InstanceError::Missing("dist"))?;
        let dist = dist
            .iter()
            .map(|row| row.iter().map(value_to_rational).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteSpace::new(points, dist)?)
    }

    pub fn ideal(&self, space: &FiniteSpace) -> Result<Option<Ideal>, InstanceError> {
        self.generators.as_ref().map(|gens| Ok(generate_ideal(space, family_of(space, gens)?))).transpose()
    }

    pub fn family(&self, space: &FiniteSpace) -> Result<Option<SetFamily>, InstanceError> {
        self.family.as_ref().map(|f| family_of(space, f)).transpose()
    }

    pub fn topology_spec(&self, space: &FiniteSpace) -> Result<Option<TopologySpec>, InstanceError> {
        let Some(doc) = &self.topology else { return Ok(None) };
        let families =
            |list: &Vec<Vec<Labels>>| list.iter().map(|f| family_of(space, f)).collect::<Result<Vec<_>, _>>();
        Ok(Some(match doc {
            TopologyDoc::MetricLower => TopologySpec::MetricLower,
            TopologyDoc::MetricUpper => TopologySpec::MetricUpper,
            TopologyDoc::MetricBoth => TopologySpec::MetricBoth,
            TopologyDoc::Tau { generators } => TopologySpec::Tau(generate_ideal(space, family_of(space, generators)?)),
            TopologyDoc::Miss { sets } => {
                TopologySpec::Miss(sets.iter().map(|s| space.subset(s)).collect::<Result<Vec<_>, _>>()?)
            }
            TopologyDoc::Table { closed } => TopologySpec::Table(families(closed)?),
            TopologyDoc::Subbase { opens } => TopologySpec::Subbase(families(opens)?),
        }))
    }

    pub fn topology(&self, space: &FiniteSpace) -> Result<Option<HyperTopology>, InstanceError> {
        match self.topology_spec(space)? {
            Some(spec) => Ok(Some(make_topology(space, &spec)?)),
            None => Ok(None),
        }
    }
}

fn value_to_rational(value: &Value) -> Result<Rational, InstanceError> {
    match value {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) => Ok(parse_rational(&n.to_string())?),
        other => Err(InstanceError::Json(format!("distance must be a string or number, got {other}"))),
    }
}

fn family_of(space: &FiniteSpace, members: &[Labels]) -> Result<SetFamily, InstanceError> {
    members
        .iter()
        .map(|m| space.subset(m))
        .collect::<Result<Vec<Subset>, _>>()
        .map(|v| v.into_iter().collect())
        .map_err(InstanceError::from)
}

/// Parses and validates the space part of an instance file.
pub fn load_space(text: &str) -> Result<FiniteSpace, InstanceError> {
    InstanceDoc::parse(text)?.space()
}

/// Serializes a space so that [`load_space`] returns it unchanged.
pub fn save_space(space: &FiniteSpace, name: Option<&str>) -> String {
    InstanceDoc::from_space(space, name).to_json()
}
