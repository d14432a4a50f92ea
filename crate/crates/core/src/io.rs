//! JSON input documents.
//!
//! ```json
//! {"type": "poset", "elements": ["a", "b"], "relations": [["a", "b"]]}
//! {"type": "lattice", "elements": [...], "relations": [...]}
//! {"type": "planar_lattice", "points": [[0, 0], [1, 0]]}
//! ```
//!
//! Relations list pairs `[x, y]` with `x < y`; the order is their
//! transitive closure.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{DistributiveLattice, Lattice};
use crate::planar::{planar_from_points, PlanarLattice};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum InputDoc {
    Poset {
        elements: Vec<String>,
        #[serde(default)]
        relations: Vec<(String, String)>,
    },
    Lattice {
        elements: Vec<String>,
        #[serde(default)]
        relations: Vec<(String, String)>,
    },
    PlanarLattice {
        points: Vec<(i64, i64)>,
    },
}

/// A validated input.
#[derive(Clone, Debug)]
pub enum Input {
    /// A poset, standing for its lattice of order ideals.
    Poset(Poset),
    Lattice(Lattice),
    Planar(PlanarLattice),
}

pub fn parse_doc(text: &str) -> Result<InputDoc> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn build_poset(elements: &[String], relations: &[(String, String)]) -> Result<Poset> {
    let labels: Vec<&str> = elements.iter().map(String::as_str).collect();
    let rels: Vec<(&str, &str)> = relations.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Poset::from_labeled_covers(&labels, &rels)
}

pub fn parse_input(text: &str) -> Result<Input> {
    match parse_doc(text)? {
        InputDoc::Poset { elements, relations } => Ok(Input::Poset(build_poset(&elements, &relations)?)),
        InputDoc::Lattice { elements, relations } => {
            Ok(Input::Lattice(Lattice::from_poset(build_poset(&elements, &relations)?)?))
        }
        InputDoc::PlanarLattice { points } => Ok(Input::Planar(planar_from_points(&points)?)),
    }
}

pub fn read_input(path: &std::path::Path) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_input(&text)
}

impl Input {
    /// The distributive lattice behind the input, if there is one.
    pub fn distributive(&self) -> Result<Option<DistributiveLattice>> {
        match self {
            Input::Poset(p) => Ok(Some(DistributiveLattice::ideal_lattice(p)?)),
            Input::Lattice(l) => match DistributiveLattice::from_lattice(l.clone()) {
                Ok(d) => Ok(Some(d)),
                Err(Error::NotDistributive(_)) => Ok(None),
                Err(e) => Err(e),
            },
            Input::Planar(pl) => Ok(Some(pl.lattice())),
        }
    }

    pub fn lattice(&self) -> Result<Lattice> {
        match self {
            Input::Lattice(l) => Ok(l.clone()),
            _ => Ok(self.distributive()?.expect("posets and planar inputs are distributive").lattice().clone()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Poset(_) => "poset",
            Input::Lattice(_) => "lattice",
            Input::Planar(_) => "planar_lattice",
        }
    }
}

/// Covers of a poset as label pairs, for reports.
pub fn cover_labels(p: &Poset) -> Vec<(String, String)> {
    p.covers()
        .into_iter()
        .map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
        .collect()
}

/// Document describing a poset.
pub fn poset_doc(p: &Poset) -> InputDoc {
    InputDoc::Poset {
        elements: p.labels().to_vec(),
        relations: cover_labels(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let p = parse_input(r#"{"type":"poset","elements":["a","b","c"],"relations":[["a","b"]]}"#).unwrap();
        assert!(matches!(p, Input::Poset(ref q) if q.len() == 3));
        let l = parse_input(
            r#"{"type":"lattice","elements":["0","a","b","1"],"relations":[["0","a"],["0","b"],["a","1"],["b","1"]]}"#,
        )
        .unwrap();
        assert_eq!(l.distributive().unwrap().unwrap().len(), 4);
        let q = parse_input(r#"{"type":"planar_lattice","points":[[0,0],[1,0],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(q.kind(), "planar_lattice");
    }

    #[test]
    fn reports_position_of_errors() {
        match parse_input("{\n  \"type\": \"poset\",\n  \"elements\": [\"a\" \"b\"]\n}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_input(r#"{"type":"lattice","elements":["a","b"],"relations":[]}"#),
            Err(Error::NotALattice(..))
        ));
    }

    #[test]
    fn round_trip() {
        let doc = parse_doc(r#"{"type":"poset","elements":["x","y"],"relations":[["x","y"]]}"#).unwrap();
        let again = parse_doc(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(doc, again);
    }
}
