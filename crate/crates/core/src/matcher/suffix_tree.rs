//! Generalized suffix tree (Ukkonen's online construction) for the
//! longest common substring of two symbol sequences.

use std::collections::BTreeMap;

const ROOT: usize = 0;

#[derive(Debug)]
struct Node {
    start: usize,
    /// `None` for leaves: their edge runs to the current end of text.
    end: Option<usize>,
    link: usize,
    children: BTreeMap<u64, usize>,
    /// Start of the suffix spelled by the path to this leaf.
    suffix: usize,
}

impl Node {
    fn new(start: usize, end: Option<usize>, suffix: usize) -> Node {
        Node {
            start,
            end,
            link: ROOT,
            children: BTreeMap::new(),
            suffix,
        }
    }
}

/// Suffix tree over a text whose last symbol is unique.
#[derive(Debug)]
pub struct SuffixTree {
    text: Vec<u64>,
    nodes: Vec<Node>,
}

impl SuffixTree {
    pub fn build(text: Vec<u64>) -> SuffixTree {
        let mut tree = SuffixTree {
            text,
            nodes: vec![Node::new(0, Some(0), usize::MAX)],
        };
        let n = tree.text.len();
        let mut active_node = ROOT;
        let mut active_edge = 0usize;
        let mut active_len = 0usize;
        let mut remainder = 0usize;

        for i in 0..n {
            remainder += 1;
            let mut last_new: Option<usize> = None;
            while remainder > 0 {
                if active_len == 0 {
                    active_edge = i;
                }
                let c = tree.text[active_edge];
                match tree.nodes[active_node].children.get(&c).copied() {
                    None => {
                        let leaf = tree.push(Node::new(i, None, i + 1 - remainder));
                        tree.nodes[active_node].children.insert(c, leaf);
                        if let Some(l) = last_new.take() {
                            tree.nodes[l].link = active_node;
                        }
                    }
                    Some(next) => {
                        let edge_len = tree.edge_len(next, i + 1);
                        if active_len >= edge_len {
                            active_edge += edge_len;
                            active_len -= edge_len;
                            active_node = next;
                            continue;
                        }
                        if tree.text[tree.nodes[next].start + active_len] == tree.text[i] {
                            if let Some(l) = last_new.take() {
                                if active_node != ROOT {
                                    tree.nodes[l].link = active_node;
                                }
                            }
                            active_len += 1;
                            break;
                        }
                        let split_start = tree.nodes[next].start;
                        let split = tree.push(Node::new(split_start, Some(split_start + active_len), usize::MAX));
                        tree.nodes[active_node].children.insert(c, split);
                        let leaf = tree.push(Node::new(i, None, i + 1 - remainder));
                        tree.nodes[split].children.insert(tree.text[i], leaf);
                        tree.nodes[next].start += active_len;
                        let next_first = tree.text[tree.nodes[next].start];
                        tree.nodes[split].children.insert(next_first, next);
                        if let Some(l) = last_new {
                            tree.nodes[l].link = split;
                        }
                        last_new = Some(split);
                    }
                }
                remainder -= 1;
                if active_node == ROOT && active_len > 0 {
                    active_len -= 1;
                    active_edge = i + 1 - remainder;
                } else if active_node != ROOT {
                    active_node = tree.nodes[active_node].link;
                }
            }
        }
        tree
    }

    fn push(&mut self, node: Node) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    fn edge_len(&self, node: usize, text_end: usize) -> usize {
        self.nodes[node].end.unwrap_or(text_end) - self.nodes[node].start
    }

    /// Number of leaves, equal to the text length once built.
    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.end.is_none()).count()
    }
}

/// Longest common substring: its length and start offsets in each input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Lcs {
    pub len: usize,
    pub a_off: usize,
    pub b_off: usize,
}

const SENTINEL_A: u64 = u64::MAX - 1;
const SENTINEL_B: u64 = u64::MAX;

/// Longest contiguous run shared by `a` and `b`. Ties go to the smallest
/// offset in `a`, then the smallest offset in `b`.
pub fn longest_common_substring(a: &[u32], b: &[u32]) -> Lcs {
    if a.is_empty() || b.is_empty() {
        return Lcs::default();
    }
    let mut text: Vec<u64> = Vec::with_capacity(a.len() + b.len() + 2);
    text.extend(a.iter().map(|&s| u64::from(s)));
    text.push(SENTINEL_A);
    text.extend(b.iter().map(|&s| u64::from(s)));
    text.push(SENTINEL_B);
    let tree = SuffixTree::build(text);
    let split = a.len();
    let n = tree.text.len();

    // Post-order walk computing, per node, the smallest suffix start from
    // each input below it.
    #[derive(Clone, Copy)]
    struct Seen {
        min_a: Option<usize>,
        min_b: Option<usize>,
    }
    let mut seen = vec![
        Seen {
            min_a: None,
            min_b: None,
        };
        tree.nodes.len()
    ];
    let mut depth = vec![0usize; tree.nodes.len()];
    let mut best = Lcs::default();
    let mut best_found = false;

    let mut stack: Vec<(usize, bool)> = vec![(ROOT, false)];
    while let Some((node, expanded)) = stack.pop() {
        let nd = &tree.nodes[node];
        if nd.end.is_none() {
            let s = nd.suffix;
            if s < split {
                seen[node].min_a = Some(s);
            } else if s > split {
                seen[node].min_b = Some(s - split - 1);
            }
            continue;
        }
        if !expanded {
            stack.push((node, true));
            for &child in nd.children.values() {
                if tree.nodes[child].end.is_some() {
                    depth[child] = depth[node] + tree.edge_len(child, n);
                }
                stack.push((child, false));
            }
            continue;
        }
        let mut acc = Seen {
            min_a: None,
            min_b: None,
        };
        for &child in nd.children.values() {
            let c = seen[child];
            acc.min_a = min_opt(acc.min_a, c.min_a);
            acc.min_b = min_opt(acc.min_b, c.min_b);
        }
        seen[node] = acc;
        if node != ROOT {
            if let (Some(min_a), Some(min_b)) = (acc.min_a, acc.min_b) {
                let cand = Lcs {
                    len: depth[node],
                    a_off: min_a,
                    b_off: min_b,
                };
                let better = !best_found
                    || cand.len > best.len
                    || (cand.len == best.len && (cand.a_off, cand.b_off) < (best.a_off, best.b_off));
                if better {
                    best = cand;
                    best_found = true;
                }
            }
        }
    }
    best
}

fn min_opt(x: Option<usize>, y: Option<usize>) -> Option<usize> {
    match (x, y) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(a: &[u32], b: &[u32]) -> Lcs {
        let mut best = Lcs::default();
        for i in 0..a.len() {
            for j in 0..b.len() {
                let mut k = 0;
                while i + k < a.len() && j + k < b.len() && a[i + k] == b[j + k] {
                    k += 1;
                }
                if k > best.len {
                    best = Lcs { len: k, a_off: i, b_off: j };
                }
            }
        }
        best
    }

    #[test]
    fn identical_sequences() {
        let a = [1, 2, 3, 4];
        assert_eq!(longest_common_substring(&a, &a), Lcs { len: 4, a_off: 0, b_off: 0 });
    }

    #[test]
    fn disjoint_and_empty() {
        assert_eq!(longest_common_substring(&[1, 2], &[3, 4]).len, 0);
        assert_eq!(longest_common_substring(&[], &[3, 4]), Lcs::default());
    }

    #[test]
    fn tie_breaks_on_offsets() {
        // "ab" and "cd" both length 2; "cd" first in b but "ab" first in a.
        let a = [0, 1, 9, 2, 3];
        let b = [2, 3, 8, 0, 1];
        assert_eq!(longest_common_substring(&a, &b), Lcs { len: 2, a_off: 0, b_off: 3 });
        let a = [5, 5, 5];
        let b = [5, 5];
        assert_eq!(longest_common_substring(&a, &b), Lcs { len: 2, a_off: 0, b_off: 0 });
    }

    #[test]
    fn leaves_cover_every_suffix() {
        let text: Vec<u64> = vec![1, 2, 1, 2, 1, 3, 1, 2, 99];
        let tree = SuffixTree::build(text.clone());
        assert_eq!(tree.leaf_count(), text.len());
    }

    #[test]
    fn agrees_with_brute_force_on_small_alphabets() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..2000 {
            let la = rng.random_range(0..15);
            let lb = rng.random_range(0..15);
            let k = rng.random_range(1..4);
            let a: Vec<u32> = (0..la).map(|_| rng.random_range(0..k)).collect();
            let b: Vec<u32> = (0..lb).map(|_| rng.random_range(0..k)).collect();
            assert_eq!(longest_common_substring(&a, &b), dp(&a, &b), "{a:?} {b:?}");
        }
    }
}
