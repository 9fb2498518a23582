//! Colorings and the coloring properties they are checked against.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Edges,
    Vertices,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Edges => "edges",
            Target::Vertices => "vertices",
        }
    }

    /// Number of variables a coloring of `g` with this target assigns.
    pub fn count(self, g: &Graph) -> usize {
        match self {
            Target::Edges => g.edge_count(),
            Target::Vertices => g.vertex_count(),
        }
    }
}

/// One color index in `0..palette` per edge or vertex, in index order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub target: Target,
    pub palette: usize,
    pub assignment: Vec<usize>,
}

impl Coloring {
    pub fn new(target: Target, palette: usize, assignment: Vec<usize>) -> Result<Self> {
        if let Some(i) = assignment.iter().position(|&c| c >= palette) {
            return Err(Error::InvalidColoring(format!(
                "variable {i} has color {} outside the palette 0..{palette}",
                assignment[i]
            )));
        }
        Ok(Coloring { target, palette, assignment })
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.palette];
        self.assignment.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        let expected = self.target.count(g);
        if self.assignment.len() != expected {
            return Err(Error::InvalidColoring(format!(
                "{} colors given for {expected} {}",
                self.assignment.len(),
                self.target.as_str()
            )));
        }
        Ok(())
    }
}

/// The coloring properties that can be verified and solved for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    ProperEdge,
    AcyclicEdge,
    /// At most `eta` edges of one color at a vertex, no properly bichromatic
    /// cycle, no monochromatic cycle.
    EtaStage { eta: usize },
    ProperVertex,
    AcyclicVertex,
    Star,
    Frugal { beta: usize },
}

impl Variant {
    pub fn target(self) -> Target {
        match self {
            Variant::ProperEdge | Variant::AcyclicEdge | Variant::EtaStage { .. } => Target::Edges,
            _ => Target::Vertices,
        }
    }

    pub fn base_name(self) -> &'static str {
        match self {
            Variant::ProperEdge => "proper-edge",
            Variant::AcyclicEdge => "acyclic-edge",
            Variant::EtaStage { .. } => "eta-stage",
            Variant::ProperVertex => "proper-vertex",
            Variant::AcyclicVertex => "acyclic-vertex",
            Variant::Star => "star",
            Variant::Frugal { .. } => "frugal",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::EtaStage { eta } => write!(f, "eta-stage:{eta}"),
            Variant::Frugal { beta } => write!(f, "frugal:{beta}"),
            other => f.write_str(other.base_name()),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    /// Accepts `acyclic-edge`, `eta-stage:2`, `frugal:3` and so on.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => {
                let value = arg
                    .parse::<usize>()
                    .map_err(|_| Error::Domain(format!("bad parameter in variant `{s}`")))?;
                (name, Some(value))
            }
            None => (s, None),
        };
        let need = |arg: Option<usize>| {
            arg.filter(|&v| v >= 1)
                .ok_or_else(|| Error::Domain(format!("variant `{name}` needs a positive parameter, e.g. `{name}:2`")))
        };
        let no_arg = |v: Variant| match arg {
            None => Ok(v),
            Some(_) => Err(Error::Domain(format!("variant `{name}` takes no parameter"))),
        };
        match name {
            "proper-edge" => no_arg(Variant::ProperEdge),
            "acyclic-edge" => no_arg(Variant::AcyclicEdge),
            "eta-stage" => Ok(Variant::EtaStage { eta: need(arg)? }),
            "proper-vertex" => no_arg(Variant::ProperVertex),
            "acyclic-vertex" => no_arg(Variant::AcyclicVertex),
            "star" => no_arg(Variant::Star),
            "frugal" => Ok(Variant::Frugal { beta: need(arg)? }),
            _ => Err(Error::Domain(format!("unknown variant `{s}`"))),
        }
    }
}
