use std::ops::Range;

use super::graph6::bit_order;
use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Iterator over every labeled connected graph on a fixed vertex set.
///
/// Edge subsets are visited as bit masks in increasing numeric order, bit `k`
/// selecting the `k`-th pair in graph6 order. No isomorphism reduction is
/// applied.
#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    order: usize,
    pairs: Vec<(usize, usize)>,
    masks: Range<u64>,
}

/// All labeled connected graphs of order `order` (2 to 7).
pub fn enumerate_connected_graphs(order: usize) -> Result<ConnectedGraphs> {
    let all = ConnectedGraphs::mask_count(order)?;
    ConnectedGraphs::over_masks(order, 0..all)
}

impl ConnectedGraphs {
    /// Number of edge subsets for `order`, i.e. `2^(n(n-1)/2)`.
    pub fn mask_count(order: usize) -> Result<u64> {
        if !(2..=MAX_ENUMERATION_ORDER).contains(&order) {
            return Err(Error::EnumerationOrder(order));
        }
        Ok(1 << (order * (order - 1) / 2))
    }

    /// Restricts enumeration to a sub-range of edge masks, so disjoint ranges
    /// can be scanned independently.
    pub fn over_masks(order: usize, masks: Range<u64>) -> Result<ConnectedGraphs> {
        let total = Self::mask_count(order)?;
        let masks = masks.start.min(total)..masks.end.min(total);
        Ok(ConnectedGraphs {
            order,
            pairs: bit_order(order).collect(),
            masks,
        })
    }

    fn connected(&self, mask: u64) -> bool {
        let mut neighbors = [0u8; MAX_ENUMERATION_ORDER];
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                neighbors[i] |= 1 << j;
                neighbors[j] |= 1 << i;
            }
        }
        let full = (1u16 << self.order) - 1;
        let mut reached: u16 = 1;
        loop {
            let next = (0..self.order)
                .filter(|&v| reached >> v & 1 == 1)
                .fold(reached, |acc, v| acc | u16::from(neighbors[v]));
            if next == reached {
                return reached == full;
            }
            reached = next;
        }
    }

    fn build(&self, mask: u64) -> Graph {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &pair)| pair);
        Graph::new(self.order, edges).expect("enumerated edges are valid")
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while let Some(mask) = self.masks.next() {
            if self.connected(mask) {
                return Some(self.build(mask));
            }
        }
        None
    }
}
