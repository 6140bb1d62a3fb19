//! Finite semigroups as multiplication tables over element indices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{CatError, Result};

/// `table[a][b]` is the index of the product `a . b` (apply `b`
/// first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    table: Vec<Vec<usize>>,
}

impl FiniteSemigroup {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(CatError::InvalidParameter("malformed multiplication table"));
        }
        Ok(FiniteSemigroup { table })
    }

    /// Builds the table from an element list and a product function;
    /// fails if any product falls outside the list.
    pub fn from_elements<T: Ord, F>(elements: &[T], mut mul: F) -> Result<Self>
    where
        F: FnMut(&T, &T) -> T,
    {
        let index: BTreeMap<&T, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != elements.len() {
            return Err(CatError::InvalidParameter("duplicate elements"));
        }
        let mut table = Vec::with_capacity(elements.len());
        for a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for b in elements {
                let p = mul(a, b);
                let i = *index
                    .get(&p)
                    .ok_or(CatError::InvalidParameter("product escapes element list"))?;
                row.push(i);
            }
            table.push(row);
        }
        FiniteSemigroup::new(table)
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &Vec<Vec<usize>> {
        &self.table
    }

    pub fn is_associative(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                let ab = self.table[a][b];
                for c in 0..n {
                    if self.table[ab][c] != self.table[a][self.table[b][c]] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.table[e][e] == e).collect()
    }

    /// Index of the two-sided identity, if present.
    pub fn identity_index(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&e| (0..n).all(|a| self.table[e][a] == a && self.table[a][e] == a))
    }

    /// The group of units: elements with a two-sided inverse against
    /// the identity. Empty if there is no identity.
    pub fn units(&self) -> Vec<usize> {
        let Some(id) = self.identity_index() else {
            return Vec::new();
        };
        let n = self.len();
        (0..n)
            .filter(|&g| (0..n).any(|h| self.table[g][h] == id && self.table[h][g] == id))
            .collect()
    }

    /// Order of the cyclic subsemigroup generated by `a` (index of
    /// first repetition).
    pub fn element_orbit_len(&self, a: usize) -> usize {
        let mut seen = alloc::collections::BTreeSet::new();
        let mut x = a;
        loop {
            if !seen.insert(x) {
                return seen.len();
            }
            x = self.table[x][a];
        }
    }
}
