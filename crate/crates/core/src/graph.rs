//! Cayley graphs `X(G, C)` of finite abelian groups.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};

/// An inverse-closed subset of `G \ {0}`, kept sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    elements: Vec<GroupElement>,
}

impl ConnectionSet {
    /// Validates and deduplicates `elements` as a connection set of `group`.
    pub fn new(
        group: &FiniteAbelianGroup,
        elements: impl IntoIterator<Item = GroupElement>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for g in elements {
            group.check(&g)?;
            set.insert(g);
        }
        if set.contains(&group.zero()) {
            return Err(Error::ContainsIdentity);
        }
        for g in &set {
            let inv = group.neg(g);
            if !set.contains(&inv) {
                return Err(Error::NotInverseClosed {
                    element: g.to_string(),
                    inverse: inv.to_string(),
                });
            }
        }
        Ok(Self {
            elements: set.into_iter().collect(),
        })
    }

    pub fn empty() -> Self {
        Self {
            elements: Vec::new(),
        }
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyGraph {
    group: FiniteAbelianGroup,
    conn: ConnectionSet,
}

impl CayleyGraph {
    pub fn new(group: FiniteAbelianGroup, conn: ConnectionSet) -> Result<Self> {
        for c in conn.elements() {
            group.check(c)?;
        }
        Ok(Self { group, conn })
    }

    /// Builds the graph straight from a list of elements.
    pub fn from_elements(
        group: FiniteAbelianGroup,
        elements: impl IntoIterator<Item = GroupElement>,
    ) -> Result<Self> {
        let conn = ConnectionSet::new(&group, elements)?;
        Ok(Self { group, conn })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.conn
    }

    pub fn degree(&self) -> usize {
        self.conn.len()
    }

    pub fn vertex_count(&self) -> u64 {
        self.group.order()
    }

    pub fn is_cubelike(&self) -> bool {
        self.group.is_cubelike()
    }

    /// Ranks of the connection set elements, for bit-level fast paths.
    pub(crate) fn connection_ranks(&self) -> Vec<usize> {
        self.conn
            .elements()
            .iter()
            .map(|c| self.group.rank_of(c))
            .collect()
    }

    /// `X(G, G \ (C + {0}))`.
    pub fn complement(&self) -> CayleyGraph {
        let elements = self
            .group
            .elements()
            .filter(|g| !g.is_zero() && !self.conn.contains(g))
            .collect();
        CayleyGraph {
            group: self.group.clone(),
            conn: ConnectionSet { elements },
        }
    }

    /// `sum_{c in C} c`, the perfect state transfer target in a cubelike graph.
    pub fn connection_sum(&self) -> GroupElement {
        self.conn
            .elements()
            .iter()
            .fold(self.group.zero(), |acc, c| self.group.add(&acc, c))
    }

    /// Connected iff `C` generates `G`.
    pub fn is_connected(&self) -> bool {
        let n = self.group.order() as usize;
        let mut seen = vec![false; n];
        let mut stack = vec![self.group.zero()];
        seen[0] = true;
        let mut count = 1;
        while let Some(g) = stack.pop() {
            for c in self.conn.elements() {
                let h = self.group.add(&g, c);
                let r = self.group.rank_of(&h);
                if !seen[r] {
                    seen[r] = true;
                    count += 1;
                    stack.push(h);
                }
            }
        }
        count == n
    }
}

impl fmt::Display for CayleyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({}, {{", self.group)?;
        for (i, c) in self.conn.elements().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("})")
    }
}
