//! Four-layered heterogeneous graph: typed node vocabularies plus a typed,
//! deduplicated edge list with a unified global node index.
//!
//! Global indices are assigned per kind in the fixed order drug, disease,
//! gene, anatomy. They are derived from the current per-kind counts on every
//! lookup, so appending nodes (e.g. injected disease targets) never leaves a
//! stale index behind.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// The four entity layers, in their fixed indexing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntityKind {
    Drug,
    Disease,
    Gene,
    Anatomy,
}

impl EntityKind {
    pub const ALL: [EntityKind; 4] = [
        EntityKind::Drug,
        EntityKind::Disease,
        EntityKind::Gene,
        EntityKind::Anatomy,
    ];

    /// Entity prefix used in edge files, e.g. `Compound::DB00001`.
    pub fn prefix(self) -> &'static str {
        match self {
            EntityKind::Drug => "Compound::",
            EntityKind::Disease => "Disease::",
            EntityKind::Gene => "Gene::",
            EntityKind::Anatomy => "Anatomy::",
        }
    }

    pub fn from_prefixed(name: &str) -> Result<(EntityKind, &str)> {
        for kind in EntityKind::ALL {
            if let Some(rest) = name.strip_prefix(kind.prefix()) {
                return Ok((kind, rest));
            }
        }
        Err(Error::UnknownEntityPrefix(name.to_string()))
    }

    fn index(self) -> usize {
        match self {
            EntityKind::Drug => 0,
            EntityKind::Disease => 1,
            EntityKind::Gene => 2,
            EntityKind::Anatomy => 3,
        }
    }
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EntityKind::Drug => "drug",
            EntityKind::Disease => "disease",
            EntityKind::Gene => "gene",
            EntityKind::Anatomy => "anatomy",
        };
        f.write_str(s)
    }
}

/// A node handle carrying its kind, the index within its kind, and the
/// global index across all kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NodeId {
    pub kind: EntityKind,
    pub local: u32,
    pub global: u32,
}

/// One typed edge, endpoints resolved to node handles.
#[derive(Clone, Debug, PartialEq)]
pub struct TypedEdge {
    pub head: NodeId,
    pub relation: String,
    pub tail: NodeId,
}

/// Compact internal edge representation; globals are derived on demand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct EdgeRepr {
    pub head_kind: EntityKind,
    pub head_local: u32,
    pub relation: u32,
    pub tail_kind: EntityKind,
    pub tail_local: u32,
}

/// The in-memory heterogeneous graph.
#[derive(Clone, Debug, Default)]
pub struct HeteroGraph {
    names: [Vec<String>; 4],
    lookup: [HashMap<String, u32>; 4],
    relations: Vec<String>,
    relation_lookup: HashMap<String, u32>,
    edges: Vec<EdgeRepr>,
    edge_set: HashSet<EdgeRepr>,
}

impl HeteroGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node_count(&self, kind: EntityKind) -> usize {
        self.names[kind.index()].len()
    }

    pub fn total_nodes(&self) -> usize {
        self.names.iter().map(Vec::len).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Global index of the first node of `kind`, per the fixed kind order.
    pub fn offset(&self, kind: EntityKind) -> u32 {
        let mut off = 0u32;
        for k in EntityKind::ALL {
            if k == kind {
                break;
            }
            off += self.node_count(k) as u32;
        }
        off
    }

    pub fn node_id(&self, kind: EntityKind, local: u32) -> NodeId {
        debug_assert!((local as usize) < self.node_count(kind));
        NodeId {
            kind,
            local,
            global: self.offset(kind) + local,
        }
    }

    pub fn node_by_global(&self, global: u32) -> Option<NodeId> {
        let mut rest = global;
        for kind in EntityKind::ALL {
            let n = self.node_count(kind) as u32;
            if rest < n {
                return Some(self.node_id(kind, rest));
            }
            rest -= n;
        }
        None
    }

    /// Insert (or find) a node; returns its local index within the kind.
    pub fn intern_node(&mut self, kind: EntityKind, name: &str) -> u32 {
        if let Some(&local) = self.lookup[kind.index()].get(name) {
            return local;
        }
        let local = self.names[kind.index()].len() as u32;
        self.names[kind.index()].push(name.to_string());
        self.lookup[kind.index()].insert(name.to_string(), local);
        local
    }

    pub fn find_node(&self, kind: EntityKind, name: &str) -> Option<NodeId> {
        self.lookup[kind.index()]
            .get(name)
            .map(|&local| self.node_id(kind, local))
    }

    /// Resolve a `Kind::name` string against the vocabularies.
    pub fn find_prefixed(&self, prefixed: &str) -> Result<NodeId> {
        let (kind, name) = EntityKind::from_prefixed(prefixed)?;
        self.find_node(kind, name)
            .ok_or_else(|| Error::UnknownNode(prefixed.to_string()))
    }

    pub fn node_name(&self, id: NodeId) -> &str {
        &self.names[id.kind.index()][id.local as usize]
    }

    /// Node name with its entity prefix, e.g. `Compound::DB00001`.
    pub fn prefixed_name(&self, id: NodeId) -> String {
        format!("{}{}", id.kind.prefix(), self.node_name(id))
    }

    pub fn node_names(&self, kind: EntityKind) -> &[String] {
        &self.names[kind.index()]
    }

    pub fn relations(&self) -> &[String] {
        &self.relations
    }

    pub fn relation_name(&self, id: u32) -> &str {
        &self.relations[id as usize]
    }

    /// Look up a relation in the closed registry built during ingest.
    pub fn relation_id(&self, name: &str) -> Result<u32> {
        self.relation_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownRelation(name.to_string()))
    }

    pub fn intern_relation(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.relation_lookup.get(name) {
            return id;
        }
        let id = self.relations.len() as u32;
        self.relations.push(name.to_string());
        self.relation_lookup.insert(name.to_string(), id);
        id
    }

    /// Insert an edge; duplicate (head, relation, tail) triples are dropped.
    /// Returns true when the edge was new.
    pub fn add_edge(
        &mut self,
        head_kind: EntityKind,
        head_local: u32,
        relation: &str,
        tail_kind: EntityKind,
        tail_local: u32,
    ) -> bool {
        let repr = EdgeRepr {
            head_kind,
            head_local,
            relation: self.intern_relation(relation),
            tail_kind,
            tail_local,
        };
        if self.edge_set.insert(repr) {
            self.edges.push(repr);
            true
        } else {
            false
        }
    }

    pub(crate) fn edge_reprs(&self) -> &[EdgeRepr] {
        &self.edges
    }

    /// Edges as (head, tail) global index pairs, in insertion order.
    pub fn edge_endpoints(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let offsets: [u32; 4] = [
            self.offset(EntityKind::Drug),
            self.offset(EntityKind::Disease),
            self.offset(EntityKind::Gene),
            self.offset(EntityKind::Anatomy),
        ];
        self.edges.iter().map(move |e| {
            (
                offsets[e.head_kind.index()] + e.head_local,
                offsets[e.tail_kind.index()] + e.tail_local,
            )
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = TypedEdge> + '_ {
        self.edges.iter().map(move |e| TypedEdge {
            head: self.node_id(e.head_kind, e.head_local),
            relation: self.relations[e.relation as usize].clone(),
            tail: self.node_id(e.tail_kind, e.tail_local),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_index_follows_kind_order() {
        let mut g = HeteroGraph::new();
        g.intern_node(EntityKind::Gene, "g0");
        g.intern_node(EntityKind::Drug, "d0");
        g.intern_node(EntityKind::Drug, "d1");
        g.intern_node(EntityKind::Disease, "x0");
        g.intern_node(EntityKind::Anatomy, "a0");

        assert_eq!(g.node_id(EntityKind::Drug, 0).global, 0);
        assert_eq!(g.node_id(EntityKind::Drug, 1).global, 1);
        assert_eq!(g.node_id(EntityKind::Disease, 0).global, 2);
        assert_eq!(g.node_id(EntityKind::Gene, 0).global, 3);
        assert_eq!(g.node_id(EntityKind::Anatomy, 0).global, 4);
        assert_eq!(g.total_nodes(), 5);
    }

    #[test]
    fn appending_diseases_shifts_later_kinds() {
        let mut g = HeteroGraph::new();
        g.intern_node(EntityKind::Disease, "x0");
        g.intern_node(EntityKind::Gene, "g0");
        assert_eq!(g.node_id(EntityKind::Gene, 0).global, 1);

        g.intern_node(EntityKind::Disease, "x1");
        assert_eq!(g.node_id(EntityKind::Gene, 0).global, 2);
        assert_eq!(g.node_by_global(1).unwrap().kind, EntityKind::Disease);
    }

    #[test]
    fn duplicate_triples_are_dropped() {
        let mut g = HeteroGraph::new();
        let d = g.intern_node(EntityKind::Drug, "d0");
        let x = g.intern_node(EntityKind::Gene, "g0");
        assert!(g.add_edge(EntityKind::Drug, d, "targets", EntityKind::Gene, x));
        assert!(!g.add_edge(EntityKind::Drug, d, "targets", EntityKind::Gene, x));
        assert!(g.add_edge(EntityKind::Drug, d, "binds", EntityKind::Gene, x));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn unknown_relation_is_rejected() {
        let mut g = HeteroGraph::new();
        g.intern_relation("treats");
        assert!(g.relation_id("treats").is_ok());
        assert!(matches!(
            g.relation_id("cures"),
            Err(Error::UnknownRelation(_))
        ));
    }

    #[test]
    fn prefix_parsing() {
        let (kind, name) = EntityKind::from_prefixed("Compound::DB01234").unwrap();
        assert_eq!(kind, EntityKind::Drug);
        assert_eq!(name, "DB01234");
        assert!(EntityKind::from_prefixed("Protein::P1").is_err());
    }
}
