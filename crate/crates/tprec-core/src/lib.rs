//! Time-aware knowledge-graph path reasoning for explainable recommendation.
//!
//! The crate turns a timestamped interaction log plus an item knowledge graph
//! into ranked, path-justified recommendations:
//!
//! 1. [`temporal`] projects each interaction day into a 25-dim feature space
//!    (calendar statistics plus interaction-trend windows).
//! 2. [`clustering`] fits a Gaussian mixture over those features and picks the
//!    component count by BIC; every timestamp gets a cluster posterior.
//! 3. [`graph`] builds the time-aware collaborative knowledge graph: user
//!    interactions become cluster-typed relations next to the static KG edges,
//!    with inverse edges materialized.
//! 4. [`embedding`] learns translational embeddings and entity biases over the
//!    graph.
//! 5. [`policy`] and [`reasoner`] train a REINFORCE agent with an actor-critic
//!    network (bidirectional LSTM state encoder, manual gradients) whose
//!    terminal reward is personalized by each user's cluster history, then run
//!    beam search to harvest reasoning paths.
//! 6. [`recommend`] maps a query time to a mixture of cluster relations and
//!    ranks the harvested candidate items.
//! 7. [`evaluation`] provides dataset splits, ranking metrics, and
//!    review-word explanation metrics; [`pipeline`] is the staged CLI shell.

pub mod clustering;
pub mod embedding;
pub mod error;
pub mod evaluation;
pub mod graph;
pub mod io;
pub mod pipeline;
pub mod policy;
pub mod reasoner;
pub mod recommend;
pub mod temporal;

pub use error::{Error, Result};
