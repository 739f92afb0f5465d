//! Canonical forms for small simple graphs (n <= 16), used to deduplicate
//! enumerated graphs up to isomorphism. Vertices are first partitioned by
//! iterated neighborhood refinement; the canonical form is the minimal
//! adjacency encoding over all orderings consistent with that partition.

/// Canonical encoding of a simple graph given as adjacency bitmask rows.
/// Two graphs are isomorphic iff their forms are equal.
pub fn canonical_form(n: usize, adj: &[u16]) -> Vec<u16> {
    assert!(n <= 16);
    if n == 0 {
        return Vec::new();
    }
    let colors = refine(n, adj);
    // positions must list color classes in ascending color order
    let mut target: Vec<u32> = colors.clone();
    target.sort_unstable();

    let mut search = CanonSearch {
        n,
        adj,
        colors: &colors,
        target: &target,
        perm: Vec::with_capacity(n),
        used: 0,
        rows: Vec::with_capacity(n),
        best: None,
    };
    search.rec(std::cmp::Ordering::Equal);
    search.best.expect("at least one ordering exists")
}

/// Iterated refinement: split vertex classes by the multiset of neighbor
/// classes until stable. The resulting class ids are isomorphism-invariant.
fn refine(n: usize, adj: &[u16]) -> Vec<u32> {
    let mut colors: Vec<u32> = (0..n).map(|v| adj[v].count_ones()).collect();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbr: Vec<u32> = (0..n).filter(|&w| adj[v] & (1 << w) != 0).map(|w| colors[w]).collect();
            nbr.sort_unstable();
            sigs.push((colors[v], nbr));
        }
        let mut uniq: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let new: Vec<u32> = sigs
            .iter()
            .map(|s| uniq.binary_search(&s).unwrap() as u32)
            .collect();
        if new == colors {
            return colors;
        }
        colors = new;
    }
}

struct CanonSearch<'a> {
    n: usize,
    adj: &'a [u16],
    colors: &'a [u32],
    target: &'a [u32],
    perm: Vec<usize>,
    used: u16,
    rows: Vec<u16>,
    best: Option<Vec<u16>>,
}

impl<'a> CanonSearch<'a> {
    fn rec(&mut self, state: std::cmp::Ordering) {
        use std::cmp::Ordering::*;
        let pos = self.perm.len();
        if pos == self.n {
            // `best` may have shrunk since `state` was computed, so always
            // compare the complete encoding.
            if self.best.as_ref().map_or(true, |best| self.rows < *best) {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        let want = self.target[pos];
        for v in 0..self.n {
            if self.used & (1 << v) != 0 || self.colors[v] != want {
                continue;
            }
            // adjacency of v to the already-placed prefix
            let mut row = 0u16;
            for (i, &w) in self.perm.iter().enumerate() {
                if self.adj[v] & (1 << w) != 0 {
                    row |= 1 << i;
                }
            }
            let next_state = match state {
                Less => Less,
                Equal => match &self.best {
                    None => Equal,
                    Some(best) => match row.cmp(&best[pos]) {
                        Less => Less,
                        Equal => Equal,
                        Greater => continue,
                    },
                },
                Greater => unreachable!(),
            };
            self.perm.push(v);
            self.used |= 1 << v;
            self.rows.push(row);
            self.rec(next_state);
            self.rows.pop();
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<u16> {
        let mut adj = vec![0u16; n];
        for &(u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    #[test]
    fn isomorphic_relabelings_agree() {
        // P4 in two labelings
        let a = adj_from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let b = adj_from_edges(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(canonical_form(4, &a), canonical_form(4, &b));
        // P4 vs star
        let c = adj_from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_form(4, &a), canonical_form(4, &c));
    }

    #[test]
    fn cycle_relabelings_agree() {
        let a = adj_from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let b = adj_from_edges(6, &[(3, 1), (1, 5), (5, 0), (0, 4), (4, 2), (2, 3)]);
        assert_eq!(canonical_form(6, &a), canonical_form(6, &b));
    }

    #[test]
    fn distinguishes_close_graphs() {
        // K3 + isolated vs P3 + extra edge shapes
        let a = adj_from_edges(4, &[(0, 1), (1, 2), (2, 0)]);
        let b = adj_from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_ne!(canonical_form(4, &a), canonical_form(4, &b));
    }
}
