//! How single edits propagate between graphs and their canonical strings.
//!
//! Forward: every connected one-edge edit of the base graph, with the
//! Levenshtein distance between its canonical string and the base string.
//! Backward: every string one Levenshtein edit from the base string, decoded,
//! with its exact edit distance to the base graph.

use graphstring_core::{
    canonical_string, edit_neighbors_1ged, ged_exact, is_isomorphic, levenshtein,
    string_neighbors_1lev, string_to_graph, EditKind, Graph, DEFAULT_GED_CAP, DEFAULT_ISO_CAP,
};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct EditRow {
    pub kind: EditKind,
    pub u: usize,
    pub v: usize,
    pub canonical: String,
    pub lev: usize,
    /// Index of the first isomorphic neighbour in the listing.
    pub class: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StringRow {
    pub string: String,
    pub nodes: usize,
    pub edges: usize,
    /// `None` when the decode exceeds the edit-distance cap.
    pub ged: Option<usize>,
    pub isomorphic: bool,
}

impl StringRow {
    /// The decode is more than two edge edits from the base.
    pub fn exceeds_locality(&self) -> bool {
        self.ged.is_some_and(|d| d > 2)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodReport {
    pub base_canonical: String,
    pub edits: Vec<EditRow>,
    pub strings: Vec<StringRow>,
}

impl NeighborhoodReport {
    pub fn count(&self, kind: EditKind) -> usize {
        self.edits.iter().filter(|e| e.kind == kind).count()
    }

    /// Neighbours up to isomorphism.
    pub fn distinct_edit_classes(&self) -> usize {
        self.edits
            .iter()
            .enumerate()
            .filter(|(i, e)| e.class == *i)
            .count()
    }

    pub fn lev_range(&self) -> Option<(usize, usize)> {
        let lo = self.edits.iter().map(|e| e.lev).min()?;
        let hi = self.edits.iter().map(|e| e.lev).max()?;
        Some((lo, hi))
    }
}

pub fn run_neighborhood(base: &Graph) -> Result<NeighborhoodReport> {
    let base_canonical = canonical_string(base, None)?.w_star;

    let neighbors = edit_neighbors_1ged(base);
    let mut edits: Vec<EditRow> = Vec::with_capacity(neighbors.len());
    for (i, nb) in neighbors.iter().enumerate() {
        let canonical = canonical_string(&nb.graph, None)?.w_star;
        let mut class = i;
        for (j, earlier) in neighbors[..i].iter().enumerate() {
            if edits[j].class == j && is_isomorphic(&earlier.graph, &nb.graph, DEFAULT_ISO_CAP)? {
                class = j;
                break;
            }
        }
        edits.push(EditRow {
            kind: nb.kind,
            u: nb.u,
            v: nb.v,
            lev: levenshtein(&base_canonical, &canonical),
            canonical,
            class,
        });
    }

    let strings = string_neighbors_1lev(&base_canonical)
        .into_iter()
        .map(|s| {
            let h = string_to_graph(&s, false)?;
            let fits = h.node_count().max(base.node_count()) <= DEFAULT_GED_CAP;
            let ged = if fits {
                Some(ged_exact(base, &h, DEFAULT_GED_CAP)?)
            } else {
                None
            };
            let isomorphic = ged == Some(0);
            Ok(StringRow {
                nodes: h.node_count(),
                edges: h.edge_count(),
                string: s,
                ged,
                isomorphic,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(NeighborhoodReport {
        base_canonical,
        edits,
        strings,
    })
}
