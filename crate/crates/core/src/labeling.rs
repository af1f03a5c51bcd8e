//! Vertex labelings by `{0, 1, 2}` and the domination conditions on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("value {value} at vertex {vertex} is not in {{0,1,2}}")]
    InvalidValue { vertex: usize, value: u8 },
    #[error("labeling has {found} values but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, found: usize },
    #[error("value {value} at vertex {vertex} is not allowed for {variant}")]
    OutsideVariant {
        vertex: usize,
        value: u8,
        variant: Variant,
    },
    #[error("cannot parse labeling: {0}")]
    Parse(String),
}

/// Which domination condition a labeling is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Every 0-vertex has neighbor sum exactly 2.
    #[serde(rename = "pid")]
    PerfectItalian,
    /// Every 0-vertex has neighbor sum at least 2.
    Italian,
    /// Every 0-vertex has a neighbor labeled 2.
    Roman,
    /// `{0,1}` labels; every 0-vertex has a neighbor labeled 1.
    Domination,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::PerfectItalian,
        Variant::Italian,
        Variant::Roman,
        Variant::Domination,
    ];

    /// Largest label the variant admits.
    pub fn max_label(self) -> u8 {
        match self {
            Variant::Domination => 1,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::PerfectItalian => "pid",
            Variant::Italian => "italian",
            Variant::Roman => "roman",
            Variant::Domination => "domination",
        }
    }

    /// Whether a 0-labeled vertex whose neighbors sum to `sum`, with
    /// `twos` of them labeled 2, is satisfied.
    #[inline]
    pub fn zero_vertex_satisfied(self, sum: u32, twos: u32) -> bool {
        match self {
            Variant::PerfectItalian => sum == 2,
            Variant::Italian => sum >= 2,
            Variant::Roman => twos > 0,
            Variant::Domination => sum >= 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pid" | "perfect-italian" | "perfectitalian" => Ok(Variant::PerfectItalian),
            "italian" => Ok(Variant::Italian),
            "roman" => Ok(Variant::Roman),
            "domination" | "dom" => Ok(Variant::Domination),
            other => Err(format!(
                "unknown variant {other:?} (expected pid, italian, roman or domination)"
            )),
        }
    }
}

/// A total map from vertices `0..len` to `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling(Vec<u8>);

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self, LabelingError> {
        if let Some((vertex, &value)) = values.iter().enumerate().find(|(_, &x)| x > 2) {
            return Err(LabelingError::InvalidValue { vertex, value });
        }
        Ok(Labeling(values))
    }

    pub(crate) fn from_values_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(values.iter().all(|&x| x <= 2));
        Labeling(values)
    }

    pub fn constant(n: usize, value: u8) -> Result<Self, LabelingError> {
        Labeling::new(vec![value; n])
    }

    pub fn ones(n: usize) -> Self {
        Labeling(vec![1; n])
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    /// `f(V)`, the sum of all labels.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// The preimage `V_i` of label `i`, ascending.
    pub fn class(&self, label: u8) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.0[v] == label).collect()
    }

    pub fn to_csv(&self) -> String {
        self.to_string()
    }

    pub fn parse_csv(text: &str) -> Result<Self, LabelingError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Labeling(Vec::new()));
        }
        let values = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u8>()
                    .map_err(|_| LabelingError::Parse(format!("invalid label {:?}", s.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Labeling::new(values)
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Labeling {
    type Err = LabelingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Labeling::parse_csv(s)
    }
}

/// A 0-labeled vertex that fails its condition, with its neighbor sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub neighbor_sum: u32,
}

fn check_shape(g: &Graph, f: &Labeling, variant: Variant) -> Result<(), LabelingError> {
    if f.len() != g.n() {
        return Err(LabelingError::SizeMismatch {
            expected: g.n(),
            found: f.len(),
        });
    }
    if let Some(vertex) = f.0.iter().position(|&x| x > variant.max_label()) {
        return Err(LabelingError::OutsideVariant {
            vertex,
            value: f.0[vertex],
            variant,
        });
    }
    Ok(())
}

/// The 0-labeled vertices that fail `variant`'s condition, ascending.
pub fn violations(g: &Graph, f: &Labeling, variant: Variant) -> Result<Vec<Violation>, LabelingError> {
    check_shape(g, f, variant)?;
    let mut out = Vec::new();
    for v in (0..g.n()).filter(|&v| f.0[v] == 0) {
        let (sum, twos) = g.neighbors(v).iter().fold((0u32, 0u32), |(s, t), &u| {
            (s + f.0[u] as u32, t + (f.0[u] == 2) as u32)
        });
        if !variant.zero_vertex_satisfied(sum, twos) {
            out.push(Violation {
                vertex: v,
                neighbor_sum: sum,
            });
        }
    }
    Ok(out)
}

pub fn is_valid(g: &Graph, f: &Labeling, variant: Variant) -> Result<bool, LabelingError> {
    violations(g, f, variant).map(|vs| vs.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    fn lab(xs: &[u8]) -> Labeling {
        Labeling::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(Labeling::ones(5).weight(), 5);
        assert_eq!(Labeling::constant(4, 0).unwrap().weight(), 0);
        assert_eq!(lab(&[1, 0, 1, 0, 1, 0, 1]).weight(), 4);
    }

    #[test]
    fn p3_alternating() {
        let g = path(3);
        let f = lab(&[1, 0, 1]);
        assert!(is_valid(&g, &f, Variant::PerfectItalian).unwrap());
        assert!(is_valid(&g, &f, Variant::Italian).unwrap());
        assert!(!is_valid(&g, &f, Variant::Roman).unwrap());
        assert!(is_valid(&g, &f, Variant::Domination).unwrap());
        assert_eq!(f.class(1), vec![0, 2]);
    }

    #[test]
    fn pid_rejects_overshoot() {
        let g = path(3);
        let f = lab(&[2, 0, 1]);
        assert!(!is_valid(&g, &f, Variant::PerfectItalian).unwrap());
        assert!(is_valid(&g, &f, Variant::Italian).unwrap());
        assert!(is_valid(&g, &f, Variant::Roman).unwrap());
    }

    #[test]
    fn violation_lists() {
        let k2 = complete(2);
        let zeros = Labeling::constant(2, 0).unwrap();
        assert_eq!(
            violations(&k2, &zeros, Variant::PerfectItalian).unwrap(),
            vec![
                Violation { vertex: 0, neighbor_sum: 0 },
                Violation { vertex: 1, neighbor_sum: 0 }
            ]
        );
        let got = violations(&path(4), &lab(&[2, 0, 0, 0]), Variant::PerfectItalian).unwrap();
        assert_eq!(
            got,
            vec![
                Violation { vertex: 2, neighbor_sum: 0 },
                Violation { vertex: 3, neighbor_sum: 0 }
            ]
        );
        assert!(violations(&path(3), &lab(&[1, 0, 1]), Variant::PerfectItalian)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn isolated_zero_fails_everything() {
        let g = crate::graph::Graph::empty(1);
        let f = lab(&[0]);
        for v in Variant::ALL {
            assert!(!is_valid(&g, &f, v).unwrap());
        }
    }

    #[test]
    fn shape_errors() {
        let g = path(3);
        assert_eq!(
            is_valid(&g, &lab(&[1, 1]), Variant::Roman),
            Err(LabelingError::SizeMismatch { expected: 3, found: 2 })
        );
        assert!(matches!(
            is_valid(&g, &lab(&[2, 0, 1]), Variant::Domination),
            Err(LabelingError::OutsideVariant { vertex: 0, value: 2, .. })
        ));
        assert_eq!(
            Labeling::new(vec![0, 3]),
            Err(LabelingError::InvalidValue { vertex: 1, value: 3 })
        );
    }

    #[test]
    fn csv() {
        let f: Labeling = "1, 0,2".parse().unwrap();
        assert_eq!(f.values(), &[1, 0, 2]);
        assert_eq!(f.to_csv(), "1,0,2");
        assert!(Labeling::parse_csv("1,x").is_err());
        assert!(Labeling::parse_csv("1,5").is_err());
    }

    #[test]
    fn variant_names() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("total".parse::<Variant>().is_err());
    }
}
