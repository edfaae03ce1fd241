use serde::Serialize;

use crate::graph::Edge;

/// Machine-readable reason attached to every [`Certificate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    Ok,
    Trivial,
    Disconnected,
    NoPerfectMatching,
    EdgeNotAllowed,
    NotMatchingCovered,
    RemovableEdge,
    EvenOrder,
    VertexNotMatchable,
    NotFactorCritical,
    ChordedNiceCycle,
    InvalidBase,
    EvenEar,
    EarEndOutsidePrefix,
    EarEndsCoincide,
    EarEndsSamePart,
    EarInternalVertexReused,
    EarEdgeMissing,
    EarEdgeRepeated,
    NotSpanning,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Ok => "ok",
            Reason::Trivial => "trivial",
            Reason::Disconnected => "disconnected",
            Reason::NoPerfectMatching => "no-perfect-matching",
            Reason::EdgeNotAllowed => "edge-not-allowed",
            Reason::NotMatchingCovered => "not-matching-covered",
            Reason::RemovableEdge => "removable-edge",
            Reason::EvenOrder => "even-order",
            Reason::VertexNotMatchable => "vertex-not-matchable",
            Reason::NotFactorCritical => "not-factor-critical",
            Reason::ChordedNiceCycle => "chorded-nice-cycle",
            Reason::InvalidBase => "invalid-base",
            Reason::EvenEar => "even-ear",
            Reason::EarEndOutsidePrefix => "ear-end-outside-prefix",
            Reason::EarEndsCoincide => "ear-ends-coincide",
            Reason::EarEndsSamePart => "ear-ends-same-part",
            Reason::EarInternalVertexReused => "ear-internal-vertex-reused",
            Reason::EarEdgeMissing => "ear-edge-missing",
            Reason::EarEdgeRepeated => "ear-edge-repeated",
            Reason::NotSpanning => "not-spanning",
        }
    }
}

/// Concrete evidence backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    None,
    Matching { edges: Vec<Edge> },
    Edge { edge: Edge },
    CycleChord { cycle: Vec<usize>, chord: Edge },
    Vertex { vertex: usize },
    Ear { index: usize },
}

/// Verdict of a property check plus a witness. A `false` verdict on a
/// universally quantified property carries a counterexample that can be
/// replayed in polynomial time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: bool,
    pub witness: Witness,
    pub note: Reason,
}

impl Certificate {
    pub fn holds() -> Self {
        Certificate { verdict: true, witness: Witness::None, note: Reason::Ok }
    }

    pub fn fails(note: Reason, witness: Witness) -> Self {
        Certificate { verdict: false, witness, note }
    }
}
