#![allow(dead_code)]

use rand::Rng;

use nsgraph::{CompactCreationSequence, CreationSequence, SimpleGraph};

/// Uniformly random creation sequence with `2 <= n <= max_n`.
pub fn random_sequence<R: Rng>(rng: &mut R, max_n: usize) -> CompactCreationSequence {
    let n = rng.random_range(2..=max_n);
    let mut bits = vec![false];
    bits.extend((0..n - 2).map(|_| rng.random::<bool>()));
    bits.push(true);
    CreationSequence::new(bits).unwrap().to_compact()
}

/// Random simple graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    perm
}

/// Every creation sequence on `n` vertices.
pub fn all_sequences(n: usize) -> impl Iterator<Item = CreationSequence> {
    (0u32..1 << (n - 2)).map(move |mask| {
        let mut bits = vec![false];
        bits.extend((0..n - 2).map(|i| mask >> i & 1 == 1));
        bits.push(true);
        CreationSequence::new(bits).unwrap()
    })
}

/// True if the graph has an induced P4, C4 or 2K2.
pub fn has_forbidden_subgraph(g: &SimpleGraph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let mut degrees = [0; 4];
                    let mut m = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(q[i], q[j]) {
                                degrees[i] += 1;
                                degrees[j] += 1;
                                m += 1;
                            }
                        }
                    }
                    degrees.sort();
                    // P4: 1,1,2,2 with 3 edges; C4: 2,2,2,2; 2K2: 1,1,1,1
                    if degrees == [1, 1, 2, 2] && m == 3
                        || degrees == [2, 2, 2, 2]
                        || degrees == [1, 1, 1, 1]
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}
