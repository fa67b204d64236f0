//! Generators for the named multigraphs, links, chains, the minimal families
//! and the counterexample graphs, each returning a label map from symbol
//! strings such as `"x_1"` or `"a'_2"` to vertex ids.

mod catalog;
mod chain;
mod counterexamples;
mod hfamily;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::SimpleGraph;
use crate::unfold::Color;

pub use catalog::{gen_catalog, gen_link, m_graph, n_graph, Catalog, LabeledLink, LinkClass};
pub use chain::{gen_chain, ChainSpec, ChainType, LabeledChain, PureChain};
pub use counterexamples::{counterexample_facts, gen_brousek, gen_g, gen_g6_rows, CounterexampleFact, G_MIN_K};
pub use hfamily::{gen_h, sample_h_spec, sample_link_specs, HFamilySpec, H_LINK_COUNTS};

/// A graph with named vertices and optional vertex colours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledGraph {
    #[serde(skip)]
    pub graph: SimpleGraph,
    pub labels: BTreeMap<String, usize>,
    pub colors: Option<Vec<Color>>,
}

impl LabeledGraph {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }
}
