//! Hopcroft–Karp maximum bipartite matching.
//!
//! Phases alternate a BFS layering from every free left vertex with DFS
//! augmentation along shortest paths. Neighbor lists are scanned in the
//! order given, so the result is deterministic.

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// A maximum matching; `left_to_right[u]` is `u`'s partner or `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub left_to_right: Vec<Option<usize>>,
    pub right_to_left: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_to_right.iter().flatten().count()
    }

    pub fn is_perfect(&self) -> bool {
        self.left_to_right.iter().all(Option::is_some)
            && self.right_to_left.iter().all(Option::is_some)
    }
}

/// `adj[u]` lists the right neighbors of left vertex `u`.
pub fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> Matching {
    let left = adj.len();
    let mut mate_l = vec![FREE; left];
    let mut mate_r = vec![FREE; right];
    let mut dist = vec![0usize; left];
    let mut queue = VecDeque::new();
    let mut cursor = vec![0usize; left];

    loop {
        // layer the left side by alternating-path distance from free vertices
        queue.clear();
        for u in 0..left {
            if mate_l[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut reachable_free = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate_r[v];
                if w == FREE {
                    reachable_free = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !reachable_free {
            break;
        }
        cursor.iter_mut().for_each(|c| *c = 0);
        for u in 0..left {
            if mate_l[u] == FREE {
                augment(u, adj, &mut mate_l, &mut mate_r, &mut dist, &mut cursor);
            }
        }
    }

    Matching {
        left_to_right: mate_l
            .into_iter()
            .map(|m| (m != FREE).then_some(m))
            .collect(),
        right_to_left: mate_r
            .into_iter()
            .map(|m| (m != FREE).then_some(m))
            .collect(),
    }
}

/// Iterative layered DFS from free left vertex `root`.
fn augment(
    root: usize,
    adj: &[Vec<usize>],
    mate_l: &mut [usize],
    mate_r: &mut [usize],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    let mut path: Vec<usize> = vec![root];
    while let Some(&u) = path.last() {
        let mut advanced = false;
        while cursor[u] < adj[u].len() {
            let v = adj[u][cursor[u]];
            cursor[u] += 1;
            let w = mate_r[v];
            if w == FREE {
                // flip the path root .. u, v
                let mut v = v;
                for &x in path.iter().rev() {
                    let prev = mate_l[x];
                    mate_l[x] = v;
                    mate_r[v] = x;
                    v = prev;
                }
                return true;
            }
            if dist[w] == dist[u] + 1 {
                path.push(w);
                advanced = true;
                break;
            }
        }
        if !advanced {
            dist[u] = usize::MAX;
            path.pop();
        }
    }
    false
}
